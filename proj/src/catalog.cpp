#include "axial/catalog.hpp"

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace axial {

const char* slot_name(Slot s) {
  switch (s) {
    case Slot::X0: return "x0";
    case Slot::XHalf: return "xh";
    case Slot::XFull: return "x";
    case Slot::Y0: return "y0";
    case Slot::YHalf: return "yh";
    case Slot::YFull: return "y";
    case Slot::Z0: return "z0";
    case Slot::ZHalf: return "zh";
    case Slot::ZFull: return "z";
  }
  return "?";
}

SlotSpace slot_space(Slot s) {
  switch (s) {
    case Slot::X0:
    case Slot::Y0:
    case Slot::Z0: return SlotSpace::Zero;
    case Slot::XHalf:
    case Slot::YHalf:
    case Slot::ZHalf: return SlotSpace::Half;
    default: return SlotSpace::Full;
  }
}

namespace {

using Tuple = std::vector<Element>;
using Residuals = std::vector<Element>;
using Catalog = std::vector<IdentityDescriptor>;
using Applicable = std::function<bool(const AxisPair&)>;

constexpr Slot X0 = Slot::X0, XH = Slot::XHalf, XF = Slot::XFull;
constexpr Slot Y0 = Slot::Y0, YH = Slot::YHalf, YF = Slot::YFull;
constexpr Slot Z0 = Slot::Z0, ZH = Slot::ZHalf;
constexpr Tier M = Tier::Mandatory, E = Tier::Extended;

Element operator*(const Element& x, const Element& y) { return multiply(x, y); }
Element operator+(const Element& x, const Element& y) { return add(x, y); }
Element operator-(const Element& x, const Element& y) { return sub(x, y); }
Element operator-(const Element& x) { return negate(x); }

// Scalar wrapper so coefficient arithmetic can be written infix.
struct Sc {
  const Field* F;
  Scalar v;
};

Sc operator+(const Sc& s, const Sc& t) { return {s.F, s.F->add(s.v, t.v)}; }
Sc operator-(const Sc& s, const Sc& t) { return {s.F, s.F->sub(s.v, t.v)}; }
Sc operator*(const Sc& s, const Sc& t) { return {s.F, s.F->mul(s.v, t.v)}; }
Sc operator-(const Sc& s) { return {s.F, s.F->neg(s.v)}; }
Element operator*(const Sc& s, const Element& x) { return scale(s.v, x); }

// Evaluation context for one axis pair: the two axes, the A_0/A_{1/2}
// components of b relative to a, and the pairing L = <a,b>.
struct Ctx {
  const AxisPair& P;
  const Field& F;
  const Element &a, &b, &b0, &bh;
  Sc L, one, half, quarter, oml;  // oml = 1 - L

  explicit Ctx(const AxisPair& pair)
      : P(pair),
        F(pair.algebra->field()),
        a(pair.cert_a.axis),
        b(pair.cert_b.axis),
        b0(pair.b0),
        bh(pair.bhalf),
        L{&F, pair.lambda},
        one{&F, F.one()},
        half{&F, F.half()},
        quarter{&F, F.mul(F.half(), F.half())},
        oml{&F, F.sub(F.one(), pair.lambda)} {}

  Sc k(long n, long d = 1) const { return {&F, F.from_fraction(n, d)}; }
  Sc fm(const Element& x, const Element& y) const { return {&F, form(x, y)}; }
  Element p0(const Element& x) const { return decompose(P.cert_a, x).x0; }
  Element ph(const Element& x) const { return decompose(P.cert_a, x).xhalf; }
};

// [L_a, L_v] applied to z.
Element comm_av(const Ctx& c, const Element& v, const Element& z) {
  return c.a * (v * z) - v * (c.a * z);
}

// Leibniz defect of [L_a, L_v] on the product uw.
Element leib_av(const Ctx& c, const Element& v, const Element& u, const Element& w) {
  return comm_av(c, v, u * w) - comm_av(c, v, u) * w - comm_av(c, v, w) * u;
}

using RawEval = Residuals (*)(const Ctx&, const Tuple&);

void add(Catalog& cat, const char* id, const char* statement,
         std::initializer_list<Slot> slots, Tier tier, Applicable pred, RawEval raw) {
  IdentityDescriptor d;
  d.id = id;
  d.statement = statement;
  d.slots.assign(slots.begin(), slots.end());
  d.tier = tier;
  d.applicable = std::move(pred);
  d.eval = [raw](const AxisPair& p, const Tuple& t) {
    Ctx c(p);
    return raw(c, t);
  };
  cat.push_back(std::move(d));
}

bool always(const AxisPair&) { return true; }

Applicable lam_not(std::vector<std::pair<long, long>> excluded) {
  return [excluded](const AxisPair& p) {
    const Field& F = p.algebra->field();
    for (const auto& [n, d] : excluded)
      if (F.eq(p.lambda, F.from_fraction(n, d))) return false;
    return true;
  };
}

bool lam1(const AxisPair& p) {
  const Field& F = p.algebra->field();
  return F.eq(p.lambda, F.one());
}

bool lam1_char_not3(const AxisPair& p) {
  return lam1(p) && p.algebra->field().characteristic() != 3;
}

bool lam1_b0_zero(const AxisPair& p) { return lam1(p) && is_zero(p.b0); }

void add_associativity_and_commutator(Catalog& cat) {
  add(cat, "SERESS", "a(x y0) = (ax)y0 ; a(xa) = (ax)a", {XF, Y0}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x = t[0], &y0 = t[1];
        return {c.a * (x * y0) - (c.a * x) * y0, c.a * (x * c.a) - (c.a * x) * c.a};
      });
  add(cat, "LAL0", "a(x0 y) = x0(ay)", {X0, YF}, E, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x0 = t[0], &y = t[1];
        return {c.a * (x0 * y) - x0 * (c.a * y)};
      });
  add(cat, "DER1.1", "[La,Lv]x = -2v(ax) + 1/2(vx + <v,x>a + <a,x>v)", {XH, YF}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &x = t[1];
        return {comm_av(c, v, x) - (c.k(-2) * (v * (c.a * x)) + c.half * (v * x) +
                                    c.half * c.fm(v, x) * c.a + c.half * c.fm(c.a, x) * v)};
      });
  add(cat, "DER1.2", "[La,Lv]x = 1/2<v,x>a - 1/2 v Ph(x) - 1/4<a,x>v + 1/2 v P0(x)",
      {XH, YF}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &x = t[1];
        return {comm_av(c, v, x) - (c.half * c.fm(v, x) * c.a - c.half * (v * c.ph(x)) -
                                    c.quarter * c.fm(c.a, x) * v + c.half * (v * c.p0(x)))};
      });
  add(cat, "DER1.3", "P0([La,Lv]x) = -1/2 P0(v Ph(x))", {XH, YF}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &x = t[1];
        return {c.p0(comm_av(c, v, x)) + c.half * c.p0(v * c.ph(x))};
      });
  add(cat, "DER1.4", "Ph([La,Lv]x) = 1/2 v P0(x) - 1/4<a,x>v", {XH, YF}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &x = t[1];
        return {c.ph(comm_av(c, v, x)) -
                (c.half * (v * c.p0(x)) - c.quarter * c.fm(c.a, x) * v)};
      });
  add(cat, "DER1.5", "[La,Lv]y0 = 1/2 v y0", {XH, Y0}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &y0 = t[1];
        return {comm_av(c, v, y0) - c.half * (v * y0)};
      });
  add(cat, "DER1.6", "[La,Lv]yh = 1/2<v,yh>a - 1/2 v yh", {XH, YH}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &yh = t[1];
        return {comm_av(c, v, yh) - (c.half * c.fm(v, yh) * c.a - c.half * (v * yh))};
      });
  add(cat, "DER2.1", "Ph([La,Lv](x z0)) = 1/2 v(z0 P0(x))", {XH, YF, Z0}, E, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &x = t[1], &z0 = t[2];
        return {c.ph(comm_av(c, v, x * z0)) - c.half * (v * (z0 * c.p0(x)))};
      });
  add(cat, "DER2.2", "Ph(([La,Lv]x)z0) = 1/2(v P0(x))z0 - 1/4<a,x>(v z0)", {XH, YF, Z0},
      E, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &x = t[1], &z0 = t[2];
        return {c.ph(comm_av(c, v, x) * z0) -
                (c.half * ((v * c.p0(x)) * z0) - c.quarter * c.fm(c.a, x) * (v * z0))};
      });
  add(cat, "DER2.3", "Ph(([La,Lv]z0)x) = 1/2(v z0)P0(x) + 1/4<a,x>(v z0)", {XH, YF, Z0},
      E, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &x = t[1], &z0 = t[2];
        return {c.ph(comm_av(c, v, z0) * x) -
                (c.half * ((v * z0) * c.p0(x)) + c.quarter * c.fm(c.a, x) * (v * z0))};
      });
  add(cat, "DER2.4",
      "Ph(LB(x,z0)) = 1/2(v(P0(x)z0) - (v P0(x))z0 - (v z0)P0(x)), "
      "LB(u,w) := [La,Lv](uw) - ([La,Lv]u)w - ([La,Lv]w)u",
      {XH, YF, Z0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &x = t[1], &z0 = t[2];
        const Element x0 = c.p0(x);
        return {c.ph(leib_av(c, v, x, z0)) -
                c.half * (v * (x0 * z0) - (v * x0) * z0 - (v * z0) * x0)};
      });
  add(cat, "DER3.1", "P0([La,Lv](x z0)) = -1/2 P0(v(Ph(x)z0))", {XH, YF, Z0}, E, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &x = t[1], &z0 = t[2];
        return {c.p0(comm_av(c, v, x * z0)) + c.half * c.p0(v * (c.ph(x) * z0))};
      });
  add(cat, "DER3.2", "P0(([La,Lv]z0)x) = 1/2 P0((v z0)Ph(x))", {XH, YF, Z0}, E, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &x = t[1], &z0 = t[2];
        return {c.p0(comm_av(c, v, z0) * x) - c.half * c.p0((v * z0) * c.ph(x))};
      });
  add(cat, "DER3.3", "P0(([La,Lv]x)z0) = -1/2(v Ph(x))z0", {XH, YF, Z0}, E, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &x = t[1], &z0 = t[2];
        return {c.p0(comm_av(c, v, x) * z0) + c.half * ((v * c.ph(x)) * z0)};
      });
  add(cat, "DER3.4",
      "P0(LB(x,z0)) = -1/2(P0(v(Ph(x)z0)) - (v Ph(x))z0 + P0((v z0)Ph(x)))",
      {XH, YF, Z0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &x = t[1], &z0 = t[2];
        const Element xp = c.ph(x);
        return {c.p0(leib_av(c, v, x, z0)) +
                c.half * (c.p0(v * (xp * z0)) - (v * xp) * z0 + c.p0((v * z0) * xp))};
      });
  add(cat, "DER4.1", "Ph([La,Lv](x zh)) = 1/2 v(Ph(x)zh) - 1/2<a,Ph(x)zh>v",
      {XH, YF, ZH}, E, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &x = t[1], &zh = t[2];
        const Element xp = c.ph(x);
        return {c.ph(comm_av(c, v, x * zh)) -
                (c.half * (v * (xp * zh)) - c.half * c.fm(c.a, xp * zh) * v)};
      });
  add(cat, "DER4.2", "Ph(([La,Lv]x)zh) = 1/4<v,x>zh - 1/2(v Ph(x))zh", {XH, YF, ZH}, E,
      always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &x = t[1], &zh = t[2];
        return {c.ph(comm_av(c, v, x) * zh) -
                (c.quarter * c.fm(v, x) * zh - c.half * ((v * c.ph(x)) * zh))};
      });
  add(cat, "DER4.3", "Ph(([La,Lv]zh)x) = 1/4<v,zh>Ph(x) - 1/2(v zh)Ph(x)", {XH, YF, ZH},
      E, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &x = t[1], &zh = t[2];
        const Element xp = c.ph(x);
        return {c.ph(comm_av(c, v, zh) * x) -
                (c.quarter * c.fm(v, zh) * xp - c.half * ((v * zh) * xp))};
      });
  add(cat, "DER4.4",
      "Ph(LB(x,zh)) = 1/2(v(Ph(x)zh) + (v Ph(x))zh + (v zh)Ph(x) - 1/2<v,x>zh"
      " - 1/2<v,zh>Ph(x) - <a,Ph(x)zh>v)",
      {XH, YF, ZH}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &x = t[1], &zh = t[2];
        const Element xp = c.ph(x);
        return {c.ph(leib_av(c, v, x, zh)) -
                c.half * (v * (xp * zh) + (v * xp) * zh + (v * zh) * xp -
                          c.half * c.fm(v, x) * zh - c.half * c.fm(v, zh) * xp -
                          c.fm(c.a, xp * zh) * v)};
      });
  add(cat, "DER5.1", "P0([La,Lv](x zh)) = -1/4<a,x>P0(v zh) - 1/2 P0(v(P0(x)zh))",
      {XH, YF, ZH}, E, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &x = t[1], &zh = t[2];
        return {c.p0(comm_av(c, v, x * zh)) -
                (-(c.quarter * c.fm(c.a, x)) * c.p0(v * zh) -
                 c.half * c.p0(v * (c.p0(x) * zh)))};
      });
  add(cat, "DER5.2", "P0(([La,Lv]x)zh) = 1/2 P0((v P0(x))zh) - 1/4<a,x>P0(v zh)",
      {XH, YF, ZH}, E, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &x = t[1], &zh = t[2];
        return {c.p0(comm_av(c, v, x) * zh) -
                (c.half * c.p0((v * c.p0(x)) * zh) -
                 c.quarter * c.fm(c.a, x) * c.p0(v * zh))};
      });
  add(cat, "DER5.3", "P0(([La,Lv]zh)x) = -1/2(v zh)P0(x)", {XH, YF, ZH}, E, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &x = t[1], &zh = t[2];
        return {c.p0(comm_av(c, v, zh) * x) + c.half * ((v * zh) * c.p0(x))};
      });
  add(cat, "DER5.4",
      "P0(LB(x,zh)) = -1/2(P0(v(zh P0(x))) - (v zh)P0(x) + P0((v P0(x))zh))",
      {XH, YF, ZH}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &v = t[0], &x = t[1], &zh = t[2];
        const Element x0 = c.p0(x);
        return {c.p0(leib_av(c, v, x, zh)) +
                c.half * (c.p0(v * (zh * x0)) - (v * zh) * x0 + c.p0((v * x0) * zh))};
      });
}

void add_pair_component_squares(Catalog& cat) {
  add(cat, "Q.1",
      "0 = L(ax) + L<b,x>(ab) - 2L a(bx) + b0 x + <b,x>(b b0) - 2(bx)b0"
      " + bh x + <b,x>(b bh) - 2(bx)bh",
      {XF}, E, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& x = t[0];
        return {c.L * (c.a * x) + c.L * c.fm(c.b, x) * (c.a * c.b) -
                c.k(2) * c.L * (c.a * (c.b * x)) + c.b0 * x +
                c.fm(c.b, x) * (c.b * c.b0) - c.k(2) * ((c.b * x) * c.b0) + c.bh * x +
                c.fm(c.b, x) * (c.b * c.bh) - c.k(2) * ((c.b * x) * c.bh)};
      });
  add(cat, "Q.2", "P0(bh^2) = L(b0^2 + P0(bh^2))", {}, E, always,
      [](const Ctx& c, const Tuple&) -> Residuals {
        return {c.p0(c.bh * c.bh) - c.L * (c.b0 * c.b0 + c.p0(c.bh * c.bh))};
      });
  add(cat, "Q.3a", "<bh,bh> = <b,bh> = 2L(1-L)", {}, M, always,
      [](const Ctx& c, const Tuple&) -> Residuals {
        return {(c.fm(c.bh, c.bh) - c.fm(c.b, c.bh)) * c.a,
                (c.fm(c.b, c.bh) - c.k(2) * c.L * c.oml) * c.a};
      });
  add(cat, "Q.3b", "<b,b0> = (1-L)^2", {}, M, always,
      [](const Ctx& c, const Tuple&) -> Residuals {
        return {(c.fm(c.b, c.b0) - c.oml * c.oml) * c.a};
      });
  add(cat, "Q.3c", "b0^2 = (1-L)b0 ; P0(bh^2) = L b0", {}, M, always,
      [](const Ctx& c, const Tuple&) -> Residuals {
        return {c.b0 * c.b0 - c.oml * c.b0, c.p0(c.bh * c.bh) - c.L * c.b0};
      });
  add(cat, "Q.3d", "bh^2 = L(1-L)a + L b0", {}, M, always,
      [](const Ctx& c, const Tuple&) -> Residuals {
        return {c.bh * c.bh - (c.L * c.oml * c.a + c.L * c.b0)};
      });
  add(cat, "Q.3e", "bh b0 = 1/2(1-L)bh", {}, M, always,
      [](const Ctx& c, const Tuple&) -> Residuals {
        return {c.bh * c.b0 - c.half * c.oml * c.bh};
      });
  add(cat, "Q.4", "2 P0(bh(bh x0)) = x0 b0 + <b,x0>b0 - 2(x0 b0)b0", {X0}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& x0 = t[0];
        return {c.k(2) * c.p0(c.bh * (c.bh * x0)) -
                (x0 * c.b0 + c.fm(c.b, x0) * c.b0 - c.k(2) * ((x0 * c.b0) * c.b0))};
      });
  add(cat, "Q.5a",
      "(1-L)P0(bh xh) - 2 P0(bh xh)b0 + <b,xh>b0 - 2 P0(bh(xh b0)) = 0", {XH}, M,
      always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& xh = t[0];
        return {c.oml * c.p0(c.bh * xh) - c.k(2) * (c.p0(c.bh * xh) * c.b0) +
                c.fm(c.b, xh) * c.b0 - c.k(2) * c.p0(c.bh * (xh * c.b0))};
      });
  add(cat, "Q.5b",
      "1/2 L(1-L)xh - 2 P0(bh xh)bh + 1/2<b,xh>bh - 2(xh b0)b0 + (1-2L)(xh b0) = 0",
      {XH}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& xh = t[0];
        return {c.half * c.L * c.oml * xh - c.k(2) * (c.p0(c.bh * xh) * c.bh) +
                c.half * c.fm(c.b, xh) * c.bh - c.k(2) * ((xh * c.b0) * c.b0) +
                (c.one - c.k(2) * c.L) * (xh * c.b0)};
      });
}

void add_pair_product_expansions(Catalog& cat) {
  add(cat, "P.1", "a(xy) - 2a((ay)x) = (ax)y - 2(ax)(ay)", {XF, YF}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x = t[0], &y = t[1];
        return {c.a * (x * y) - c.k(2) * (c.a * ((c.a * y) * x)) -
                ((c.a * x) * y - c.k(2) * ((c.a * x) * (c.a * y)))};
      });
  add(cat, "P.2",
      "P.1 with the first factor b = La + b0 + bh expanded componentwise on both sides",
      {XF, YF}, E, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x = t[0], &y = t[1];
        const Element ay = c.a * y, b0y = c.b0 * y, bhy = c.bh * y;
        const Element lhs =
            c.L * c.oml * (c.a * (x * y)) + c.b0 * (x * y) + c.bh * (x * y) -
            c.k(2) * (c.L * (c.b0 * (ay * x)) + c.L * (c.bh * (ay * x))) -
            c.k(2) * (c.L * (c.a * (b0y * x)) + c.b0 * (b0y * x) + c.bh * (b0y * x) +
                      c.L * (c.a * (bhy * x)) + c.b0 * (bhy * x) + c.bh * (bhy * x));
        const Element ax = c.a * x, b0x = c.b0 * x, bhx = c.bh * x;
        const Element rhs =
            c.L * c.oml * (ax * y) + b0x * y + bhx * y -
            c.k(2) * (c.L * (ax * b0y) + c.L * (ax * bhy)) -
            c.k(2) * (c.L * (b0x * ay) + b0x * b0y + b0x * bhy) -
            c.k(2) * (c.L * (bhx * ay) + bhx * b0y + bhx * bhy);
        return {lhs - rhs};
      });
  add(cat, "P.3", "(1-L)bh x0 - 2bh(x0 b0) + 2(bh x0)b0 = 0", {X0}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& x0 = t[0];
        return {c.oml * (c.bh * x0) - c.k(2) * (c.bh * (x0 * c.b0)) +
                c.k(2) * ((c.bh * x0) * c.b0)};
      });
  add(cat, "P.4a",
      "1/2 L(1-L)xh - 2bh P0(xh bh) + 1/2<b,xh>bh + 2(xh b0)b0 - xh b0 = 0", {XH}, M,
      always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& xh = t[0];
        return {c.half * c.L * c.oml * xh - c.k(2) * (c.bh * c.p0(xh * c.bh)) +
                c.half * c.fm(c.b, xh) * c.bh + c.k(2) * ((xh * c.b0) * c.b0) -
                xh * c.b0};
      });
  add(cat, "P.4b", "(xh b0)b0 = 1/2(1-L)(xh b0)", {XH}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& xh = t[0];
        return {(xh * c.b0) * c.b0 - c.half * c.oml * (xh * c.b0)};
      });
  add(cat, "P.4c", "bh P0(bh xh) = 1/4 L(1-L)xh - 1/2 L(xh b0) + 1/4<b,xh>bh", {XH}, M,
      always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& xh = t[0];
        return {c.bh * c.p0(c.bh * xh) -
                (c.quarter * c.L * c.oml * xh - c.half * c.L * (xh * c.b0) +
                 c.quarter * c.fm(c.b, xh) * c.bh)};
      });
  add(cat, "P.4d", "bh(bh xh) = 1/4 L(1-L)xh - 1/2 L(xh b0) + 1/2<b,xh>bh", {XH}, M,
      always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& xh = t[0];
        return {c.bh * (c.bh * xh) -
                (c.quarter * c.L * c.oml * xh - c.half * c.L * (xh * c.b0) +
                 c.half * c.fm(c.b, xh) * c.bh)};
      });
  add(cat, "P.5a", "(1-L)P0(bh xh) - 2(bh xh)b0 + 2 P0(bh(xh b0)) = 0", {XH}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& xh = t[0];
        return {c.oml * c.p0(c.bh * xh) - c.k(2) * ((c.bh * xh) * c.b0) +
                c.k(2) * c.p0(c.bh * (xh * c.b0))};
      });
  add(cat, "P.5b", "P0(bh(xh b0)) = 1/4<b,xh>b0", {XH}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& xh = t[0];
        return {c.p0(c.bh * (xh * c.b0)) - c.quarter * c.fm(c.b, xh) * c.b0};
      });
  add(cat, "P.5c", "bh(xh b0) = 1/4(1-L)<b,xh>a + 1/4<b,xh>b0", {XH}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& xh = t[0];
        return {c.bh * (xh * c.b0) - (c.quarter * c.oml * c.fm(c.b, xh) * c.a +
                                      c.quarter * c.fm(c.b, xh) * c.b0)};
      });
  add(cat, "P.5d", "(bh xh)b0 = 1/2(1-L)P0(bh xh) + 1/4<b,xh>b0", {XH}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& xh = t[0];
        return {(c.bh * xh) * c.b0 - (c.half * c.oml * c.p0(c.bh * xh) +
                                      c.quarter * c.fm(c.b, xh) * c.b0)};
      });
  add(cat, "P.6",
      "P.1 for x0,y0 in A_0 with the first factor expanded into b0 + bh terms",
      {X0, Y0}, E, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x0 = t[0], &y0 = t[1];
        const Element b0y = c.b0 * y0, bhy = c.bh * y0;
        const Element b0x = c.b0 * x0, bhx = c.bh * x0;
        const Element lhs =
            c.b0 * (x0 * y0) + c.bh * (x0 * y0) -
            c.k(2) * (c.b0 * (b0y * x0) + c.bh * (b0y * x0) + c.half * c.L * (bhy * x0) +
                      c.b0 * (bhy * x0) + c.bh * (bhy * x0));
        const Element rhs = b0x * y0 + bhx * y0 - c.k(2) * (b0x * b0y + b0x * bhy) -
                            c.k(2) * (bhx * b0y + bhx * bhy);
        return {lhs - rhs};
      });
  add(cat, "P.7",
      "bh(x0 y0) + 2(bh y0)(x0 b0) + 2(bh x0)(y0 b0) = (bh x0)y0 + 2bh(x0(y0 b0))"
      " + L(bh y0)x0 + 2((bh y0)x0)b0",
      {X0, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x0 = t[0], &y0 = t[1];
        return {c.bh * (x0 * y0) + c.k(2) * ((c.bh * y0) * (x0 * c.b0)) +
                c.k(2) * ((c.bh * x0) * (y0 * c.b0)) -
                ((c.bh * x0) * y0 + c.k(2) * (c.bh * (x0 * (y0 * c.b0))) +
                 c.L * ((c.bh * y0) * x0) + c.k(2) * (((c.bh * y0) * x0) * c.b0))};
      });
  add(cat, "P.8a",
      "(1-L)(bh x0)y0 - (1-L)(bh y0)x0 = 2bh(y0(x0 b0)) - 2bh(x0(y0 b0))"
      " + 2((bh x0)y0)b0 - 2((bh y0)x0)b0",
      {X0, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x0 = t[0], &y0 = t[1];
        return {c.oml * ((c.bh * x0) * y0) - c.oml * ((c.bh * y0) * x0) -
                (c.k(2) * (c.bh * (y0 * (x0 * c.b0))) -
                 c.k(2) * (c.bh * (x0 * (y0 * c.b0))) +
                 c.k(2) * (((c.bh * x0) * y0) * c.b0) -
                 c.k(2) * (((c.bh * y0) * x0) * c.b0))};
      });
  add(cat, "P.8b",
      "2bh(x0 y0) + 4(bh y0)(x0 b0) + 4(bh x0)(y0 b0) = (1+L)(bh x0)y0 + (1+L)(bh y0)x0"
      " + 2bh((y0 b0)x0) + 2bh((x0 b0)y0) + 2((bh y0)x0)b0 + 2((bh x0)y0)b0",
      {X0, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x0 = t[0], &y0 = t[1];
        return {c.k(2) * (c.bh * (x0 * y0)) + c.k(4) * ((c.bh * y0) * (x0 * c.b0)) +
                c.k(4) * ((c.bh * x0) * (y0 * c.b0)) -
                ((c.one + c.L) * ((c.bh * x0) * y0) +
                 (c.one + c.L) * ((c.bh * y0) * x0) +
                 c.k(2) * (c.bh * ((y0 * c.b0) * x0)) +
                 c.k(2) * (c.bh * ((x0 * c.b0) * y0)) +
                 c.k(2) * (((c.bh * y0) * x0) * c.b0) +
                 c.k(2) * (((c.bh * x0) * y0) * c.b0))};
      });
  add(cat, "P.9",
      "(x0 y0)b0 + 2(x0 b0)(y0 b0) + 2 P0((bh x0)(bh y0)) = y0(x0 b0)"
      " + 2(x0(y0 b0))b0 + 2 P0(bh((bh y0)x0))",
      {X0, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x0 = t[0], &y0 = t[1];
        return {(x0 * y0) * c.b0 + c.k(2) * ((x0 * c.b0) * (y0 * c.b0)) +
                c.k(2) * c.p0((c.bh * x0) * (c.bh * y0)) -
                (y0 * (x0 * c.b0) + c.k(2) * ((x0 * (y0 * c.b0)) * c.b0) +
                 c.k(2) * c.p0(c.bh * ((c.bh * y0) * x0)))};
      });
  add(cat, "P.10a",
      "2 P0(bh((bh x0)y0)) - 2 P0(bh((bh y0)x0)) = y0(x0 b0) + 2(x0(y0 b0))b0"
      " - x0(y0 b0) - 2(y0(x0 b0))b0",
      {X0, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x0 = t[0], &y0 = t[1];
        return {c.k(2) * c.p0(c.bh * ((c.bh * x0) * y0)) -
                c.k(2) * c.p0(c.bh * ((c.bh * y0) * x0)) -
                (y0 * (x0 * c.b0) + c.k(2) * ((x0 * (y0 * c.b0)) * c.b0) -
                 x0 * (y0 * c.b0) - c.k(2) * ((y0 * (x0 * c.b0)) * c.b0))};
      });
  add(cat, "P.10b",
      "4(x0 b0)(y0 b0) + 4 P0((bh x0)(bh y0)) - y0(x0 b0) - x0(y0 b0) + (x0 y0)b0"
      " = 2(x0(y0 b0))b0 + 2(y0(x0 b0))b0 + 2 P0(bh((bh y0)x0)) + 2 P0(bh((bh x0)y0))"
      " - (x0 y0)b0",
      {X0, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x0 = t[0], &y0 = t[1];
        return {c.k(4) * ((x0 * c.b0) * (y0 * c.b0)) +
                c.k(4) * c.p0((c.bh * x0) * (c.bh * y0)) - y0 * (x0 * c.b0) -
                x0 * (y0 * c.b0) + (x0 * y0) * c.b0 -
                (c.k(2) * ((x0 * (y0 * c.b0)) * c.b0) +
                 c.k(2) * ((y0 * (x0 * c.b0)) * c.b0) +
                 c.k(2) * c.p0(c.bh * ((c.bh * y0) * x0)) +
                 c.k(2) * c.p0(c.bh * ((c.bh * x0) * y0)) - (x0 * y0) * c.b0)};
      });
}

void add_mixed_component_products(Catalog& cat) {
  add(cat, "L120.1",
      "(xh y0)b0 + bh(xh y0) - 2((xh(y0 b0))b0 + bh(xh(y0 b0)) + L a((bh y0)xh)"
      " + (xh(bh y0))b0 + bh(xh(bh y0))) = (xh b0)y0 + (bh xh)y0 - L xh(bh y0)"
      " - 2((xh b0)(y0 b0) + (xh b0)(bh y0)) - 2((bh xh)(y0 b0) + (bh xh)(bh y0))",
      {XH, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        const Element y0b0 = y0 * c.b0, bhy0 = c.bh * y0;
        const Element lhs =
            (xh * y0) * c.b0 + c.bh * (xh * y0) -
            c.k(2) * ((xh * y0b0) * c.b0 + c.bh * (xh * y0b0) +
                      c.L * (c.a * (bhy0 * xh)) + (xh * bhy0) * c.b0 +
                      c.bh * (xh * bhy0));
        const Element xhb0 = xh * c.b0, bhxh = c.bh * xh;
        const Element rhs = xhb0 * y0 + bhxh * y0 - c.L * (xh * bhy0) -
                            c.k(2) * (xhb0 * y0b0 + xhb0 * bhy0) -
                            c.k(2) * (bhxh * y0b0 + bhxh * bhy0);
        return {lhs - rhs};
      });
  add(cat, "L120.2",
      "(xh y0)b0 - 2(xh(y0 b0))b0 - 2bh(xh(bh y0)) = (xh b0)y0 - 2(xh b0)(y0 b0)"
      " - 2(bh xh)(bh y0)",
      {XH, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {(xh * y0) * c.b0 - c.k(2) * ((xh * (y0 * c.b0)) * c.b0) -
                c.k(2) * (c.bh * (xh * (c.bh * y0))) -
                ((xh * c.b0) * y0 - c.k(2) * ((xh * c.b0) * (y0 * c.b0)) -
                 c.k(2) * ((c.bh * xh) * (c.bh * y0)))};
      });
  add(cat, "L120.3",
      "bh(xh y0) + L(bh y0)xh - (bh xh)y0 + 2(xh b0)(bh y0) + 2(bh xh)(y0 b0)"
      " - 2bh(xh(y0 b0)) - 2L a(xh(bh y0)) - 2((bh y0)xh)b0 = 0",
      {XH, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {c.bh * (xh * y0) + c.L * ((c.bh * y0) * xh) - (c.bh * xh) * y0 +
                c.k(2) * ((xh * c.b0) * (c.bh * y0)) +
                c.k(2) * ((c.bh * xh) * (y0 * c.b0)) -
                c.k(2) * (c.bh * (xh * (y0 * c.b0))) -
                c.k(2) * c.L * (c.a * (xh * (c.bh * y0))) -
                c.k(2) * (((c.bh * y0) * xh) * c.b0)};
      });
  add(cat, "L012.1",
      "1/2 L(1-L)yh x0 + (1-L)(yh x0)b0 + (1-L)bh(yh x0) - L(yh b0)x0 - 2((yh b0)x0)b0"
      " - 2bh((yh b0)x0) - 2((bh yh)x0)b0 - 2bh((bh yh)x0) = (1-L)yh(x0 b0)"
      " + (1-L)yh(bh x0) - 2(yh b0)(b0 x0) - 2(bh yh)(b0 x0) - 2(bh x0)(yh b0)"
      " - 2(bh x0)(bh yh)",
      {X0, YH}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x0 = t[0], &yh = t[1];
        const Element yhb0 = yh * c.b0, bhyh = c.bh * yh, bhx0 = c.bh * x0;
        const Element lhs = c.half * c.L * c.oml * (yh * x0) +
                            c.oml * ((yh * x0) * c.b0) + c.oml * (c.bh * (yh * x0)) -
                            c.L * (yhb0 * x0) - c.k(2) * ((yhb0 * x0) * c.b0) -
                            c.k(2) * (c.bh * (yhb0 * x0)) -
                            c.k(2) * ((bhyh * x0) * c.b0) -
                            c.k(2) * (c.bh * (bhyh * x0));
        const Element rhs = c.oml * (yh * (x0 * c.b0)) + c.oml * (yh * bhx0) -
                            c.k(2) * (yhb0 * (c.b0 * x0)) -
                            c.k(2) * (bhyh * (c.b0 * x0)) - c.k(2) * (bhx0 * yhb0) -
                            c.k(2) * (bhx0 * bhyh);
        return {lhs - rhs};
      });
  add(cat, "L012.2",
      "1/2 L(1-L)yh x0 + (1-L)(yh x0)b0 - L(yh b0)x0 - 2((yh b0)x0)b0 - 2bh((bh yh)x0)"
      " = (1-L)yh(x0 b0) - 2(yh b0)(b0 x0) - 2(bh x0)(bh yh)",
      {X0, YH}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x0 = t[0], &yh = t[1];
        return {c.half * c.L * c.oml * (yh * x0) + c.oml * ((yh * x0) * c.b0) -
                c.L * ((yh * c.b0) * x0) - c.k(2) * (((yh * c.b0) * x0) * c.b0) -
                c.k(2) * (c.bh * ((c.bh * yh) * x0)) -
                (c.oml * (yh * (x0 * c.b0)) - c.k(2) * ((yh * c.b0) * (c.b0 * x0)) -
                 c.k(2) * ((c.bh * x0) * (c.bh * yh)))};
      });
  add(cat, "L012.3",
      "(1-L)bh(yh x0) - (1-L)(bh x0)yh + 2(bh x0)(yh b0) + 2(bh yh)(x0 b0)"
      " - 2((bh yh)x0)b0 - 2bh((yh b0)x0) = 0",
      {X0, YH}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x0 = t[0], &yh = t[1];
        return {c.oml * (c.bh * (yh * x0)) - c.oml * ((c.bh * x0) * yh) +
                c.k(2) * ((c.bh * x0) * (yh * c.b0)) +
                c.k(2) * ((c.bh * yh) * (x0 * c.b0)) -
                c.k(2) * (((c.bh * yh) * x0) * c.b0) -
                c.k(2) * (c.bh * ((yh * c.b0) * x0))};
      });
  add(cat, "L1212.1",
      "1/2 L(1-L)<xh,yh>a + (1-L)(xh yh)b0 + (1-L)bh(xh yh) - L<xh,yh b0>a"
      " - 2(xh(yh b0))b0 - 2bh(xh(yh b0)) - 2((bh yh)xh)b0 - 2bh((bh yh)xh)"
      " = 1/2 L(1-L)xh yh + (1-L)yh(xh b0) + (1-L)(bh xh)yh - L xh(yh b0)"
      " - 2(xh b0)(yh b0) - 2(bh yh)(xh b0) - 2(bh xh)(yh b0) - 2(bh xh)(bh yh)",
      {XH, YH}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        const Element yhb0 = yh * c.b0, bhyh = c.bh * yh;
        const Element xhb0 = xh * c.b0, bhxh = c.bh * xh;
        const Element lhs = c.half * c.L * c.oml * c.fm(xh, yh) * c.a +
                            c.oml * ((xh * yh) * c.b0) + c.oml * (c.bh * (xh * yh)) -
                            c.L * c.fm(xh, yhb0) * c.a -
                            c.k(2) * ((xh * yhb0) * c.b0) -
                            c.k(2) * (c.bh * (xh * yhb0)) -
                            c.k(2) * ((bhyh * xh) * c.b0) -
                            c.k(2) * (c.bh * (bhyh * xh));
        const Element rhs = c.half * c.L * c.oml * (xh * yh) + c.oml * (yh * xhb0) +
                            c.oml * (bhxh * yh) - c.L * (xh * yhb0) -
                            c.k(2) * (xhb0 * yhb0) - c.k(2) * (bhyh * xhb0) -
                            c.k(2) * (bhxh * yhb0) - c.k(2) * (bhxh * bhyh);
        return {lhs - rhs};
      });
  add(cat, "L1212.2",
      "(1-L)bh(xh yh) + 2(bh yh)(xh b0) + 2(bh xh)(yh b0) = (1-L)(bh xh)yh"
      " + 2bh(xh(yh b0)) + 2((bh yh)xh)b0",
      {XH, YH}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {c.oml * (c.bh * (xh * yh)) + c.k(2) * ((c.bh * yh) * (xh * c.b0)) +
                c.k(2) * ((c.bh * xh) * (yh * c.b0)) -
                (c.oml * ((c.bh * xh) * yh) + c.k(2) * (c.bh * (xh * (yh * c.b0))) +
                 c.k(2) * (((c.bh * yh) * xh) * c.b0))};
      });
  add(cat, "L1212.3",
      "(1-L)(bh xh)yh + 2bh(xh(yh b0)) + 2((bh yh)xh)b0 = (1-L)(bh yh)xh"
      " + 2bh(yh(xh b0)) + 2((bh xh)yh)b0",
      {XH, YH}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {c.oml * ((c.bh * xh) * yh) + c.k(2) * (c.bh * (xh * (yh * c.b0))) +
                c.k(2) * (((c.bh * yh) * xh) * c.b0) -
                (c.oml * ((c.bh * yh) * xh) + c.k(2) * (c.bh * (yh * (xh * c.b0))) +
                 c.k(2) * (((c.bh * xh) * yh) * c.b0))};
      });
  add(cat, "L1212.3B",
      "2(1-L)bh(xh yh) + 4(bh yh)(xh b0) + 4(bh xh)(yh b0) = (1-L)((bh xh)yh"
      " + (bh yh)xh) + 2bh(xh(yh b0)) + 2bh(yh(xh b0)) + 2((bh yh)xh)b0"
      " + 2((bh xh)yh)b0 ; same with both (1-L) groups moved to the other side",
      {XH, YH}, E, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        const Element bhxh = c.bh * xh, bhyh = c.bh * yh;
        const Element tail = c.k(2) * (c.bh * (xh * (yh * c.b0))) +
                             c.k(2) * (c.bh * (yh * (xh * c.b0))) +
                             c.k(2) * ((bhyh * xh) * c.b0) +
                             c.k(2) * ((bhxh * yh) * c.b0);
        const Element cross =
            c.k(4) * (bhyh * (xh * c.b0)) + c.k(4) * (bhxh * (yh * c.b0));
        const Element r1 = c.k(2) * c.oml * (c.bh * (xh * yh)) + cross -
                           (c.oml * (bhxh * yh + bhyh * xh) + tail);
        const Element r2 = (c.L - c.one) * (bhxh * yh + bhyh * xh) + cross -
                           (c.k(2) * (c.L - c.one) * (c.bh * (xh * yh)) + tail);
        return {r1, r2};
      });
  add(cat, "L1212.4",
      "(1-L)(xh yh)b0 - 1/2 L(1-L)P0(xh yh) + 2 P0((xh b0)(yh b0)) + 2 P0((bh xh)(bh yh))"
      " = (1-L)P0(yh(xh b0)) - L P0(xh(yh b0)) + 2(xh(yh b0))b0 + 2 P0(bh((bh yh)xh))"
      " ; the same rearranged with all projections on one side",
      {XH, YH}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        const Element pb = (xh * yh) * c.b0;
        const Element pxy = c.p0(xh * yh);
        const Element q1 = c.p0((xh * c.b0) * (yh * c.b0));
        const Element q2 = c.p0((c.bh * xh) * (c.bh * yh));
        const Element s1 = c.p0(yh * (xh * c.b0));
        const Element s2 = c.p0(xh * (yh * c.b0));
        const Element u1 = (xh * (yh * c.b0)) * c.b0;
        const Element u2 = c.p0(c.bh * ((c.bh * yh) * xh));
        const Element r1 = c.oml * pb - c.half * c.L * c.oml * pxy + c.k(2) * q1 +
                           c.k(2) * q2 -
                           (c.oml * s1 - c.L * s2 + c.k(2) * u1 + c.k(2) * u2);
        const Element r2 = c.L * c.oml * pxy - c.k(4) * q1 - c.k(4) * q2 -
                           (c.k(-2) * c.oml * s1 + c.k(2) * c.L * s2 - c.k(4) * u1 -
                            c.k(4) * u2 + c.k(2) * c.oml * pb);
        return {r1, r2};
      });
  add(cat, "L1212.5",
      "P0(yh(xh b0)) + 2(xh(yh b0))b0 + 2 P0(bh((bh yh)xh)) = P0(xh(yh b0))"
      " + 2(yh(xh b0))b0 + 2 P0(bh((bh xh)yh))",
      {XH, YH}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {c.p0(yh * (xh * c.b0)) + c.k(2) * ((xh * (yh * c.b0)) * c.b0) +
                c.k(2) * c.p0(c.bh * ((c.bh * yh) * xh)) -
                (c.p0(xh * (yh * c.b0)) + c.k(2) * ((yh * (xh * c.b0)) * c.b0) +
                 c.k(2) * c.p0(c.bh * ((c.bh * xh) * yh)))};
      });
  add(cat, "L1212.6",
      "2(1-L)(xh yh)b0 - L(1-L)P0(xh yh) + 4 P0((xh b0)(yh b0)) + 4 P0((bh xh)(bh yh))"
      " = (1-2L)P0(yh(xh b0)) + (1-2L)P0(xh(yh b0)) + 2(xh(yh b0))b0 + 2(yh(xh b0))b0"
      " + 2 P0(bh((bh yh)xh)) + 2 P0(bh((bh xh)yh)) ; and its rearrangement",
      {XH, YH}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        const Element pb = (xh * yh) * c.b0;
        const Element pxy = c.p0(xh * yh);
        const Element q1 = c.p0((xh * c.b0) * (yh * c.b0));
        const Element q2 = c.p0((c.bh * xh) * (c.bh * yh));
        const Element s1 = c.p0(yh * (xh * c.b0));
        const Element s2 = c.p0(xh * (yh * c.b0));
        const Element u1 = (xh * (yh * c.b0)) * c.b0;
        const Element u1b = (yh * (xh * c.b0)) * c.b0;
        const Element u2 = c.p0(c.bh * ((c.bh * yh) * xh));
        const Element u2b = c.p0(c.bh * ((c.bh * xh) * yh));
        const Sc two = c.k(2), four = c.k(4);
        const Element r1 =
            two * c.oml * pb - c.L * c.oml * pxy + four * q1 + four * q2 -
            ((c.one - two * c.L) * s1 + (c.one - two * c.L) * s2 + two * u1 +
             two * u1b + two * u2 + two * u2b);
        const Element r2 =
            c.L * (c.L - c.one) * pxy + (two * c.L - c.one) * (s1 + s2) + four * q1 +
            four * q2 -
            (c.k(-2) * c.oml * pb + two * u1 + two * u1b + two * u2 + two * u2b);
        return {r1, r2};
      });
  add(cat, "L1212.7",
      "((bh xh)yh)b0 + ((bh yh)xh)b0 = 1/2(<b,yh>(xh b0) + <b,xh>(yh b0))"
      " + 1/4(1-L)<a,xh yh>bh - 1/4<b0,xh yh>bh",
      {XH, YH}, M, lam_not({{1, 1}}), [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {((c.bh * xh) * yh) * c.b0 + ((c.bh * yh) * xh) * c.b0 -
                (c.half * (c.fm(c.b, yh) * (xh * c.b0) + c.fm(c.b, xh) * (yh * c.b0)) +
                 c.quarter * c.oml * c.fm(c.a, xh * yh) * c.bh -
                 c.quarter * c.fm(c.b0, xh * yh) * c.bh)};
      });
  add(cat, "L1212.8",
      "bh((xh b0)yh) + (bh yh)(xh b0) = 1/2<b,yh>(xh b0) - 1/4<b,xh>(yh b0)"
      " + 1/8(1-L)<b,xh>yh + 1/2<b0,xh yh>bh",
      {XH, YH}, M, lam_not({{1, 1}}), [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {c.bh * ((xh * c.b0) * yh) + (c.bh * yh) * (xh * c.b0) -
                (c.half * c.fm(c.b, yh) * (xh * c.b0) -
                 c.quarter * c.fm(c.b, xh) * (yh * c.b0) +
                 c.k(1, 8) * c.oml * c.fm(c.b, xh) * yh +
                 c.half * c.fm(c.b0, xh * yh) * c.bh)};
      });
}

void add_axis_expansion_rules(Catalog& cat) {
  add(cat, "P1.1",
      "4(bx)(by) - (bx)y - (by)x - <b,y>bx - <b,x>by - <b,xy>b + b(xy) = 0", {XF, YF},
      E, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x = t[0], &y = t[1];
        return {c.k(4) * ((c.b * x) * (c.b * y)) - (c.b * x) * y - (c.b * y) * x -
                c.fm(c.b, y) * (c.b * x) - c.fm(c.b, x) * (c.b * y) -
                c.fm(c.b, x * y) * c.b + c.b * (x * y)};
      });
  add(cat, "P1.2",
      "4(bx)(by) expanded through b = La + b0 + bh on both factors", {XF, YF}, E,
      always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x = t[0], &y = t[1];
        const Element ax = c.a * x, ay = c.a * y;
        const Element xb0 = x * c.b0, yb0 = y * c.b0;
        const Element xbh = x * c.bh, ybh = y * c.bh;
        return {c.k(4) * ((c.b * x) * (c.b * y)) -
                (c.k(4) * c.L * c.L * (ax * ay) + c.k(4) * c.L * (ax * yb0) +
                 c.k(4) * c.L * (ay * xb0) + c.k(4) * c.L * (ax * ybh) +
                 c.k(4) * c.L * (ay * xbh) + c.k(4) * (xb0 * yb0) +
                 c.k(4) * (xbh * ybh) + c.k(4) * (xb0 * ybh) + c.k(4) * (yb0 * xbh))};
      });
  add(cat, "P1.3", "(bx)y = L(ax)y + (x b0)y + (x bh)y ; same with x,y swapped",
      {XF, YF}, E, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x = t[0], &y = t[1];
        return {c.L * ((c.a * x) * y) + (x * c.b0) * y + (x * c.bh) * y -
                    (c.b * x) * y,
                c.L * ((c.a * y) * x) + (y * c.b0) * x + (y * c.bh) * x -
                    (c.b * y) * x};
      });
  add(cat, "P1.4",
      "<b,y>bx = L<b,y>ax + <b,y>(x b0) + <b,y>(x bh) ; same with x,y swapped",
      {XF, YF}, E, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x = t[0], &y = t[1];
        return {c.L * c.fm(c.b, y) * (c.a * x) + c.fm(c.b, y) * (x * c.b0) +
                    c.fm(c.b, y) * (x * c.bh) - c.fm(c.b, y) * (c.b * x),
                c.L * c.fm(c.b, x) * (c.a * y) + c.fm(c.b, x) * (y * c.b0) +
                    c.fm(c.b, x) * (y * c.bh) - c.fm(c.b, x) * (c.b * y)};
      });
  add(cat, "P1.5",
      "-<b,xy>b + b(xy) = -L<b,xy>a - <b,xy>b0 - <b,xy>bh + L a(xy) + (xy)b0 + (xy)bh",
      {XF, YF}, E, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x = t[0], &y = t[1];
        const Sc w = c.fm(c.b, x * y);
        return {-(w * c.b) + c.b * (x * y) -
                (-(c.L * w * c.a) - w * c.b0 - w * c.bh + c.L * (c.a * (x * y)) +
                 (x * y) * c.b0 + (x * y) * c.bh)};
      });
  add(cat, "PA0.1", "2bh(x0 b0) = (1-L)bh x0 + 1/2<b,x0>bh", {X0}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& x0 = t[0];
        return {c.k(2) * (c.bh * (x0 * c.b0)) -
                (c.oml * (c.bh * x0) + c.half * c.fm(c.b, x0) * c.bh)};
      });
  add(cat, "PA0.2", "2bh(bh x0) = L<b,x0>a + L x0 b0", {X0}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& x0 = t[0];
        return {c.k(2) * (c.bh * (c.bh * x0)) -
                (c.L * c.fm(c.b, x0) * c.a + c.L * (x0 * c.b0))};
      });
  add(cat, "PA0.3", "2(x0 b0)b0 = (1-L)x0 b0 + <b,x0>b0", {X0}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& x0 = t[0];
        return {c.k(2) * ((x0 * c.b0) * c.b0) -
                (c.oml * (x0 * c.b0) + c.fm(c.b, x0) * c.b0)};
      });
  add(cat, "PA0.4", "(bh x0)b0 = 1/4<b,x0>bh", {X0}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& x0 = t[0];
        return {(c.bh * x0) * c.b0 - c.quarter * c.fm(c.b, x0) * c.bh};
      });
  add(cat, "SI.1", "(xh b0)b0 = 1/2(1-L)xh b0", {XH}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& xh = t[0];
        return {(xh * c.b0) * c.b0 - c.half * c.oml * (xh * c.b0)};
      });
  add(cat, "SI.2", "(x0 b0)b0 = 1/2(1-L)x0 b0 + 1/2<b,x0>b0", {X0}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& x0 = t[0];
        return {(x0 * c.b0) * c.b0 -
                (c.half * c.oml * (x0 * c.b0) + c.half * c.fm(c.b, x0) * c.b0)};
      });
  add(cat, "SI.3", "(x0 bh)bh = 1/2 L<b,x0>a + 1/2 L x0 b0", {X0}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& x0 = t[0];
        return {(x0 * c.bh) * c.bh -
                (c.half * c.L * c.fm(c.b, x0) * c.a + c.half * c.L * (x0 * c.b0))};
      });
  add(cat, "SI.4",
      "P0(xh bh)bh = 1/4 L(1-L)xh - 1/2 L xh b0 + 1/4<b,xh>bh ; (xh bh)bh = the same"
      " with 1/2<b,xh>bh",
      {XH}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& xh = t[0];
        const Element core = c.quarter * c.L * c.oml * xh - c.half * c.L * (xh * c.b0);
        return {c.p0(xh * c.bh) * c.bh -
                    (core + c.quarter * c.fm(c.b, xh) * c.bh),
                (xh * c.bh) * c.bh - (core + c.half * c.fm(c.b, xh) * c.bh)};
      });
  add(cat, "SI.5", "(xh b0)bh = 1/4(1-L)<b,xh>a + 1/4<b,xh>b0", {XH}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& xh = t[0];
        return {(xh * c.b0) * c.bh - (c.quarter * c.oml * c.fm(c.b, xh) * c.a +
                                      c.quarter * c.fm(c.b, xh) * c.b0)};
      });
  add(cat, "SI.6", "(xh bh)b0 = 1/2(1-L)P0(bh xh) + 1/4<b,xh>b0", {XH}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& xh = t[0];
        return {(xh * c.bh) * c.b0 - (c.half * c.oml * c.p0(c.bh * xh) +
                                      c.quarter * c.fm(c.b, xh) * c.b0)};
      });
  add(cat, "SI.7", "(x0 b0)bh = 1/2(1-L)bh x0 + 1/4<b,x0>bh", {X0}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& x0 = t[0];
        return {(x0 * c.b0) * c.bh - (c.half * c.oml * (c.bh * x0) +
                                      c.quarter * c.fm(c.b, x0) * c.bh)};
      });
  add(cat, "SI.8", "(x0 bh)b0 = 1/4<b,x0>bh", {X0}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& x0 = t[0];
        return {(x0 * c.bh) * c.b0 - c.quarter * c.fm(c.b, x0) * c.bh};
      });
}

void add_zero_half_interactions(Catalog& cat) {
  add(cat, "P00.1",
      "0 = 4(bh y0)(x0 b0) + 4(bh x0)(y0 b0) - (bh x0)y0 - (bh y0)x0 - <b,y0>bh x0"
      " - <b,x0>bh y0 - <b,x0 y0>bh + bh(x0 y0)",
      {X0, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x0 = t[0], &y0 = t[1];
        return {c.k(4) * ((c.bh * y0) * (x0 * c.b0)) +
                c.k(4) * ((c.bh * x0) * (y0 * c.b0)) - (c.bh * x0) * y0 -
                (c.bh * y0) * x0 - c.fm(c.b, y0) * (c.bh * x0) -
                c.fm(c.b, x0) * (c.bh * y0) - c.fm(c.b, x0 * y0) * c.bh +
                c.bh * (x0 * y0)};
      });
  add(cat, "P00.2",
      "bh(x0 y0) - (bh x0)y0 - (bh y0)x0 = -4(bh y0)(x0 b0) - 4(bh x0)(y0 b0)"
      " + <b,y0>bh x0 + <b,x0>bh y0 + <b,x0 y0>bh",
      {X0, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x0 = t[0], &y0 = t[1];
        return {c.bh * (x0 * y0) - (c.bh * x0) * y0 - (c.bh * y0) * x0 -
                (c.fm(c.b, y0) * (c.bh * x0) + c.fm(c.b, x0) * (c.bh * y0) +
                 c.fm(c.b, x0 * y0) * c.bh - c.k(4) * ((c.bh * y0) * (x0 * c.b0)) -
                 c.k(4) * ((c.bh * x0) * (y0 * c.b0)))};
      });
  add(cat, "P00.3", "((bh y0)x0)b0 + ((bh x0)y0)b0 = 1/4<b,x0 y0>bh", {X0, Y0}, M,
      always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x0 = t[0], &y0 = t[1];
        return {((c.bh * y0) * x0) * c.b0 + ((c.bh * x0) * y0) * c.b0 -
                c.quarter * c.fm(c.b, x0 * y0) * c.bh};
      });
  add(cat, "P00.4",
      "4(bh x0)(bh y0) + 4(x0 b0)(y0 b0) - y0(x0 b0) - x0(y0 b0) + (x0 y0)b0"
      " = <b,y0>x0 b0 + <b,x0>y0 b0 + <b,x0 y0>b0 + L<b,x0 y0>a",
      {X0, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x0 = t[0], &y0 = t[1];
        return {c.k(4) * ((c.bh * x0) * (c.bh * y0)) +
                c.k(4) * ((x0 * c.b0) * (y0 * c.b0)) - y0 * (x0 * c.b0) -
                x0 * (y0 * c.b0) + (x0 * y0) * c.b0 -
                (c.fm(c.b, y0) * (x0 * c.b0) + c.fm(c.b, x0) * (y0 * c.b0) +
                 c.fm(c.b, x0 * y0) * c.b0 + c.L * c.fm(c.b, x0 * y0) * c.a)};
      });
  add(cat, "P120.1",
      "0 = (2L-1)xh(y0 b0) + 4(xh b0)(y0 b0) + 4(xh bh)(bh y0) - (xh b0)y0"
      " - 1/2 L<b,y0>xh - <b,y0>xh b0 - <b,xh>bh y0 - <b,xh y0>bh + (xh y0)b0",
      {XH, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {(c.k(2) * c.L - c.one) * (xh * (y0 * c.b0)) +
                c.k(4) * ((xh * c.b0) * (y0 * c.b0)) +
                c.k(4) * ((xh * c.bh) * (c.bh * y0)) - (xh * c.b0) * y0 -
                c.half * c.L * c.fm(c.b, y0) * xh - c.fm(c.b, y0) * (xh * c.b0) -
                c.fm(c.b, xh) * (c.bh * y0) - c.fm(c.b, xh * y0) * c.bh +
                (xh * y0) * c.b0};
      });
  add(cat, "P120.2",
      "0 = bh(xh y0) + (2L-1)(bh y0)xh - (bh xh)y0 + 4(xh b0)(bh y0) + 4(bh xh)(y0 b0)"
      " - <b,y0>xh bh - <b,xh>y0 b0 - L<b,xh y0>a - <b,xh y0>b0",
      {XH, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {c.bh * (xh * y0) + (c.k(2) * c.L - c.one) * ((c.bh * y0) * xh) -
                (c.bh * xh) * y0 + c.k(4) * ((xh * c.b0) * (c.bh * y0)) +
                c.k(4) * ((c.bh * xh) * (y0 * c.b0)) -
                c.fm(c.b, y0) * (xh * c.bh) - c.fm(c.b, xh) * (y0 * c.b0) -
                c.L * c.fm(c.b, xh * y0) * c.a - c.fm(c.b, xh * y0) * c.b0};
      });
  add(cat, "SSI.1", "(bh(xh yh))b0 = 1/4(1-L)<a,xh yh>bh + 1/4<b0,xh yh>bh", {XH, YH},
      M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {(c.bh * (xh * yh)) * c.b0 -
                (c.quarter * c.oml * c.fm(c.a, xh * yh) * c.bh +
                 c.quarter * c.fm(c.b0, xh * yh) * c.bh)};
      });
  add(cat, "SSI.2", "(bh(xh(yh b0)))b0 = 1/4(1-L)<b0,xh yh>bh", {XH, YH}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {(c.bh * (xh * (yh * c.b0))) * c.b0 -
                c.quarter * c.oml * c.fm(c.b0, xh * yh) * c.bh};
      });
  add(cat, "SSI.3", "<a,(xh b0)yh> = 1/2<b0,xh yh>", {XH, YH}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {(c.fm(c.a, (xh * c.b0) * yh) - c.half * c.fm(c.b0, xh * yh)) * c.a};
      });
  add(cat, "SSI.4", "<b0,(xh b0)yh> = 1/2(1-L)<b0,xh yh>", {XH, YH}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {(c.fm(c.b0, (xh * c.b0) * yh) - c.half * c.oml * c.fm(c.b0, xh * yh)) *
                c.a};
      });
  add(cat, "SSI.5", "<a,(xh b0)(yh b0)> = 1/4(1-L)<b0,xh yh>", {XH, YH}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {(c.fm(c.a, (xh * c.b0) * (yh * c.b0)) -
                 c.quarter * c.oml * c.fm(c.b0, xh * yh)) *
                c.a};
      });
  add(cat, "SSI.6", "<b0,(xh b0)(yh b0)> = 1/4(1-L)^2<b0,xh yh>", {XH, YH}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {(c.fm(c.b0, (xh * c.b0) * (yh * c.b0)) -
                 c.quarter * c.oml * c.oml * c.fm(c.b0, xh * yh)) *
                c.a};
      });
  add(cat, "SSI.7", "<b,(xh b0)yh> = 1/2<b0,xh yh>", {XH, YH}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {(c.fm(c.b, (xh * c.b0) * yh) - c.half * c.fm(c.b0, xh * yh)) * c.a};
      });
  add(cat, "SSI.8", "<b,(xh b0)(yh b0)> = 1/4(1-L)<b0,xh yh>", {XH, YH}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {(c.fm(c.b, (xh * c.b0) * (yh * c.b0)) -
                 c.quarter * c.oml * c.fm(c.b0, xh * yh)) *
                c.a};
      });
  add(cat, "SSI.9", "(bh(xh b0))yh = 1/8(1-L)<b,xh>yh + 1/4<b,xh>(yh b0)", {XH, YH}, M,
      always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {(c.bh * (xh * c.b0)) * yh -
                (c.k(1, 8) * c.oml * c.fm(c.b, xh) * yh +
                 c.quarter * c.fm(c.b, xh) * (yh * c.b0))};
      });
  add(cat, "SSI.10", "(bh(xh b0))(yh b0) = 1/4(1-L)<b,xh>(yh b0)", {XH, YH}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {(c.bh * (xh * c.b0)) * (yh * c.b0) -
                c.quarter * c.oml * c.fm(c.b, xh) * (yh * c.b0)};
      });
  add(cat, "P1212.1",
      "0 = L(L-1)xh yh + (2L-1)xh(yh b0) + (2L-1)yh(xh b0) + 4(xh b0)(yh b0)"
      " + 4(xh bh)(yh bh) - <b,yh>xh bh - <b,xh>yh bh - L<b,xh yh>a - <b,xh yh>b0"
      " + L a(xh yh) + (xh yh)b0 ; its A_0 projection rearranged",
      {XH, YH}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        const Element xyb0 = (xh * yh) * c.b0;
        const Element r1 =
            c.L * (c.L - c.one) * (xh * yh) +
            (c.k(2) * c.L - c.one) * (xh * (yh * c.b0)) +
            (c.k(2) * c.L - c.one) * (yh * (xh * c.b0)) +
            c.k(4) * ((xh * c.b0) * (yh * c.b0)) +
            c.k(4) * ((xh * c.bh) * (yh * c.bh)) - c.fm(c.b, yh) * (xh * c.bh) -
            c.fm(c.b, xh) * (yh * c.bh) - c.L * c.fm(c.b, xh * yh) * c.a -
            c.fm(c.b, xh * yh) * c.b0 + c.L * (c.a * (xh * yh)) + xyb0;
        const Element r2 =
            (c.k(2) * c.L - c.one) * c.p0(xh * (yh * c.b0)) +
            (c.k(2) * c.L - c.one) * c.p0(yh * (xh * c.b0)) -
            c.fm(c.b, yh) * c.p0(xh * c.bh) - c.fm(c.b, xh) * c.p0(yh * c.bh) + xyb0 -
            c.fm(c.b, xh * yh) * c.b0 -
            (c.L * c.oml * c.p0(xh * yh) - c.k(4) * c.p0((xh * c.bh) * (yh * c.bh)) -
             c.k(4) * c.p0((xh * c.b0) * (yh * c.b0)));
        return {r1, r2};
      });
  add(cat, "P1212.2",
      "(2L-1)((bh xh)yh + (bh yh)xh) + 4(bh xh)(yh b0) + 4(bh yh)(xh b0)"
      " = 1/2 L(<b,yh>xh + <b,xh>yh) + <b,yh>xh b0 + <b,xh>yh b0 + <b,xh yh>bh"
      " - (xh yh)bh",
      {XH, YH}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {(c.k(2) * c.L - c.one) * ((c.bh * xh) * yh + (c.bh * yh) * xh) +
                c.k(4) * ((c.bh * xh) * (yh * c.b0)) +
                c.k(4) * ((c.bh * yh) * (xh * c.b0)) -
                (c.half * c.L * (c.fm(c.b, yh) * xh + c.fm(c.b, xh) * yh) +
                 c.fm(c.b, yh) * (xh * c.b0) + c.fm(c.b, xh) * (yh * c.b0) +
                 c.fm(c.b, xh * yh) * c.bh - (xh * yh) * c.bh)};
      });
  add(cat, "P1212.3",
      "-L((bh xh)yh + (bh yh)xh) + 1/2 L(<b,yh>xh + <b,xh>yh) + <b,yh>xh b0"
      " + <b,xh>yh b0 + <b,xh yh>bh = 2bh(xh(yh b0)) + 2bh(yh(xh b0))"
      " + 2((bh yh)xh)b0 + 2((bh xh)yh)b0 + (2L-1)bh(xh yh)",
      {XH, YH}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {-(c.L * ((c.bh * xh) * yh + (c.bh * yh) * xh)) +
                c.half * c.L * (c.fm(c.b, yh) * xh + c.fm(c.b, xh) * yh) +
                c.fm(c.b, yh) * (xh * c.b0) + c.fm(c.b, xh) * (yh * c.b0) +
                c.fm(c.b, xh * yh) * c.bh -
                (c.k(2) * (c.bh * (xh * (yh * c.b0))) +
                 c.k(2) * (c.bh * (yh * (xh * c.b0))) +
                 c.k(2) * (((c.bh * yh) * xh) * c.b0) +
                 c.k(2) * (((c.bh * xh) * yh) * c.b0) +
                 (c.k(2) * c.L - c.one) * (c.bh * (xh * yh)))};
      });
  add(cat, "P1212.4",
      "<b,yh>xh b0 + <b,xh>yh b0 - 2(((bh yh)xh)b0 + ((bh xh)yh)b0)"
      " = 1/2<b0,xh yh>bh - 1/2(1-L)<a,xh yh>bh = 1/2<b,xh yh>bh - 1/2<a,xh yh>bh",
      {XH, YH}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        const Element A =
            c.fm(c.b, yh) * (xh * c.b0) + c.fm(c.b, xh) * (yh * c.b0) -
            c.k(2) * (((c.bh * yh) * xh) * c.b0 + ((c.bh * xh) * yh) * c.b0);
        const Element B = c.half * c.fm(c.b0, xh * yh) * c.bh -
                          c.half * c.oml * c.fm(c.a, xh * yh) * c.bh;
        const Element C = c.half * c.fm(c.b, xh * yh) * c.bh -
                          c.half * c.fm(c.a, xh * yh) * c.bh;
        return {A - B, B - C};
      });
  add(cat, "P1212.5", "((bh yh)(xh b0))b0 = 1/4(1-L)<b,yh>xh b0", {XH, YH}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {((c.bh * yh) * (xh * c.b0)) * c.b0 -
                c.quarter * c.oml * c.fm(c.b, yh) * (xh * c.b0)};
      });
  add(cat, "P1212.5B",
      "(P0(bh yh)(xh b0))b0 = 1/4(1-L)<b,yh>xh b0 - 1/4<b,yh>(xh b0)b0"
      " = 1/8(1-L)<b,yh>xh b0",
      {XH, YH}, E, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        const Element A = (c.p0(c.bh * yh) * (xh * c.b0)) * c.b0;
        const Element B = c.quarter * c.oml * c.fm(c.b, yh) * (xh * c.b0) -
                          c.quarter * c.fm(c.b, yh) * ((xh * c.b0) * c.b0);
        const Element C = c.k(1, 8) * c.oml * c.fm(c.b, yh) * (xh * c.b0);
        return {A - B, B - C};
      });
  add(cat, "P1212.6",
      "(1-2L)bh(xh yh) - L((bh xh)yh + (bh yh)xh) + 1/2 L(<b,yh>xh + <b,xh>yh)"
      " + 1/2<b0,xh yh>bh - 1/2(1-L)<a,xh yh>bh + <b,xh yh>bh = 2bh(xh(yh b0))"
      " + 2bh(yh(xh b0))",
      {XH, YH}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {(c.one - c.k(2) * c.L) * (c.bh * (xh * yh)) -
                c.L * ((c.bh * xh) * yh + (c.bh * yh) * xh) +
                c.half * c.L * (c.fm(c.b, yh) * xh + c.fm(c.b, xh) * yh) +
                c.half * c.fm(c.b0, xh * yh) * c.bh -
                c.half * c.oml * c.fm(c.a, xh * yh) * c.bh +
                c.fm(c.b, xh * yh) * c.bh -
                (c.k(2) * (c.bh * (xh * (yh * c.b0))) +
                 c.k(2) * (c.bh * (yh * (xh * c.b0))))};
      });
  add(cat, "P1212.7", "bh((xh b0)(yh b0)) = 1/4(1-L)<b0,xh yh>bh", {XH, YH}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {c.bh * ((xh * c.b0) * (yh * c.b0)) -
                c.quarter * c.oml * c.fm(c.b0, xh * yh) * c.bh};
      });
  add(cat, "P1212.7B", "((xh b0)(yh b0))b0 = 1/4(1-L)<b0,xh yh>b0", {XH, YH}, E,
      always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {((xh * c.b0) * (yh * c.b0)) * c.b0 -
                c.quarter * c.oml * c.fm(c.b0, xh * yh) * c.b0};
      });
  add(cat, "P1212.8",
      "bh(yh(xh b0)) + (bh yh)(xh b0) = 1/2<b,yh>xh b0 - 1/4<b,xh>yh b0"
      " + 1/8(1-L)<b,xh>yh + 1/2<b0,xh yh>bh",
      {XH, YH}, M, lam_not({{0, 1}}), [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {c.bh * (yh * (xh * c.b0)) + (c.bh * yh) * (xh * c.b0) -
                (c.half * c.fm(c.b, yh) * (xh * c.b0) -
                 c.quarter * c.fm(c.b, xh) * (yh * c.b0) +
                 c.k(1, 8) * c.oml * c.fm(c.b, xh) * yh +
                 c.half * c.fm(c.b0, xh * yh) * c.bh)};
      });
}

void add_special_lambda_rules(Catalog& cat) {
  add(cat, "T0012", "bh(x0 y0) = (bh x0)y0 + x0(bh y0)", {X0, Y0}, M,
      lam_not({{1, 4}}), [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x0 = t[0], &y0 = t[1];
        return {c.bh * (x0 * y0) - (c.bh * x0) * y0 - x0 * (c.bh * y0)};
      });
  add(cat, "EQ0012A",
      "2L((bh x0)y0 + (bh y0)x0 - bh(x0 y0)) + <b,x0>bh y0 + 4((bh x0)y0)b0"
      " - 4(bh x0)(y0 b0) = 0",
      {X0, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x0 = t[0], &y0 = t[1];
        return {c.k(2) * c.L *
                    ((c.bh * x0) * y0 + (c.bh * y0) * x0 - c.bh * (x0 * y0)) +
                c.fm(c.b, x0) * (c.bh * y0) + c.k(4) * (((c.bh * x0) * y0) * c.b0) -
                c.k(4) * ((c.bh * x0) * (y0 * c.b0))};
      });
  add(cat, "LEM121212.1",
      "(1-L)(xh y0)b0 - 2((xh b0)y0)b0 = (1-L)xh(y0 b0) - 2(xh b0)(b0 y0)", {XH, Y0},
      M, lam_not({{1, 4}}), [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {c.oml * ((xh * y0) * c.b0) - c.k(2) * (((xh * c.b0) * y0) * c.b0) -
                (c.oml * (xh * (y0 * c.b0)) - c.k(2) * ((xh * c.b0) * (c.b0 * y0)))};
      });
  add(cat, "LEM121212.2",
      "((bh xh)yh)b0 + (yh b0)(bh xh) = 1/2(1-L)(bh xh)yh - 1/8(1-L)<b,xh>yh"
      " + 3/4<b,xh>yh b0",
      {XH, YH}, M, lam_not({{1, 1}, {1, 4}}),
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {((c.bh * xh) * yh) * c.b0 + (yh * c.b0) * (c.bh * xh) -
                (c.half * c.oml * ((c.bh * xh) * yh) -
                 c.k(1, 8) * c.oml * c.fm(c.b, xh) * yh +
                 c.k(3, 4) * c.fm(c.b, xh) * (yh * c.b0))};
      });
  add(cat, "LEM121212.3",
      "(yh b0)(bh xh) + (xh b0)(bh yh) = 1/2(1-L)(bh xh)yh + 1/2(1-L)(bh yh)xh"
      " - 1/8(1-L)<b,xh>yh - 1/8(1-L)<b,yh>xh + 1/4(<b,yh>xh b0 + <b,xh>yh b0)"
      " + 1/4<b,xh yh>bh - 1/4<a,xh yh>bh",
      {XH, YH}, M, lam_not({{1, 1}, {1, 4}}),
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {(yh * c.b0) * (c.bh * xh) + (xh * c.b0) * (c.bh * yh) -
                (c.half * c.oml * ((c.bh * xh) * yh) +
                 c.half * c.oml * ((c.bh * yh) * xh) -
                 c.k(1, 8) * c.oml * c.fm(c.b, xh) * yh -
                 c.k(1, 8) * c.oml * c.fm(c.b, yh) * xh +
                 c.quarter * (c.fm(c.b, yh) * (xh * c.b0) +
                              c.fm(c.b, xh) * (yh * c.b0)) +
                 c.quarter * c.fm(c.b, xh * yh) * c.bh -
                 c.quarter * c.fm(c.a, xh * yh) * c.bh)};
      });
  add(cat, "T121212",
      "bh(xh yh) + (bh xh)yh + (bh yh)xh = 1/2<b,yh>xh + 1/2<b,xh>yh + <a,xh yh>bh",
      {XH, YH}, M, lam_not({{1, 1}, {1, 4}}),
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {c.bh * (xh * yh) + (c.bh * xh) * yh + (c.bh * yh) * xh -
                (c.half * c.fm(c.b, yh) * xh + c.half * c.fm(c.b, xh) * yh +
                 c.fm(c.a, xh * yh) * c.bh)};
      });
  add(cat, "T120", "P0(bh(xh y0)) - (bh xh)y0 + P0((bh y0)xh) = 0", {XH, Y0}, M,
      lam_not({{1, 1}, {1, 4}}), [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {c.p0(c.bh * (xh * y0)) - (c.bh * xh) * y0 + c.p0((c.bh * y0) * xh)};
      });
  add(cat, "IMP.PROP",
      "P0(bh(xh y0)) - (bh xh)y0 + P0((bh y0)xh) = 2(bh(xh y0) - (bh xh)y0"
      " + (bh y0)xh)b0 + 2 P0(bh(xh(y0 b0))) - 2 P0(bh((xh b0)y0)) - 1/2<b,xh y0>b0",
      {XH, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        const Element zu = c.bh * (xh * y0) - (c.bh * xh) * y0 + (c.bh * y0) * xh;
        return {c.p0(c.bh * (xh * y0)) - (c.bh * xh) * y0 + c.p0((c.bh * y0) * xh) -
                (c.k(2) * (zu * c.b0) + c.k(2) * c.p0(c.bh * (xh * (y0 * c.b0))) -
                 c.k(2) * c.p0(c.bh * ((xh * c.b0) * y0)) -
                 c.half * c.fm(c.b, xh * y0) * c.b0)};
      });
  add(cat, "EQ120A",
      "(1-L)bh(xh y0) - (1-L)(bh y0)xh + 2(bh y0)(xh b0) + 2(bh xh)(y0 b0)"
      " - 2((bh xh)y0)b0 - 2bh((xh b0)y0) = 0",
      {XH, Y0}, E, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {c.oml * (c.bh * (xh * y0)) - c.oml * ((c.bh * y0) * xh) +
                c.k(2) * ((c.bh * y0) * (xh * c.b0)) +
                c.k(2) * ((c.bh * xh) * (y0 * c.b0)) -
                c.k(2) * (((c.bh * xh) * y0) * c.b0) -
                c.k(2) * (c.bh * ((xh * c.b0) * y0))};
      });
  add(cat, "EQ120B",
      "bh(xh y0) + L(bh y0)xh - (bh xh)y0 + 2(xh b0)(bh y0) + 2(bh xh)(y0 b0)"
      " - 2bh(xh(y0 b0)) - 2L a(xh(bh y0)) - 2((bh y0)xh)b0 = 0",
      {XH, Y0}, E, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {c.bh * (xh * y0) + c.L * ((c.bh * y0) * xh) - (c.bh * xh) * y0 +
                c.k(2) * ((xh * c.b0) * (c.bh * y0)) +
                c.k(2) * ((c.bh * xh) * (y0 * c.b0)) -
                c.k(2) * (c.bh * (xh * (y0 * c.b0))) -
                c.k(2) * c.L * (c.a * (xh * (c.bh * y0))) -
                c.k(2) * (((c.bh * y0) * xh) * c.b0)};
      });
  add(cat, "EQ2X",
      "P0(bh(xh y0)) + P0((bh y0)xh) - (bh xh)y0 = 4 P0(bh(xh(y0 b0)))"
      " + 4((bh y0)xh)b0 - <b,y0>P0(bh xh) - <b,xh>y0 b0 - <b,xh y0>b0",
      {XH, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {c.p0(c.bh * (xh * y0)) + c.p0((c.bh * y0) * xh) - (c.bh * xh) * y0 -
                (c.k(4) * c.p0(c.bh * (xh * (y0 * c.b0))) +
                 c.k(4) * (((c.bh * y0) * xh) * c.b0) -
                 c.fm(c.b, y0) * c.p0(c.bh * xh) - c.fm(c.b, xh) * (y0 * c.b0) -
                 c.fm(c.b, xh * y0) * c.b0)};
      });
  add(cat, "EQ120C",
      "0 = bh(xh y0) + (2L-1)(bh y0)xh - (bh xh)y0 + 4(xh b0)(bh y0) + 4(bh xh)(y0 b0)"
      " - <b,y0>xh bh - <b,xh>y0 b0 - L<b,xh y0>a - <b,xh y0>b0",
      {XH, Y0}, E, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {c.bh * (xh * y0) + (c.k(2) * c.L - c.one) * ((c.bh * y0) * xh) -
                (c.bh * xh) * y0 + c.k(4) * ((xh * c.b0) * (c.bh * y0)) +
                c.k(4) * ((c.bh * xh) * (y0 * c.b0)) -
                c.fm(c.b, y0) * (xh * c.bh) - c.fm(c.b, xh) * (y0 * c.b0) -
                c.L * c.fm(c.b, xh * y0) * c.a - c.fm(c.b, xh * y0) * c.b0};
      });
  add(cat, "PROP120A.1",
      "1/2(1-L)(P0(bh(xh y0)) + P0((bh y0)xh) - (bh xh)y0) = P0(bh(xh(y0 b0)))"
      " + P0((bh(y0 b0))xh) - (bh xh)(y0 b0)",
      {XH, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {c.half * c.oml *
                    (c.p0(c.bh * (xh * y0)) + c.p0((c.bh * y0) * xh) -
                     (c.bh * xh) * y0) -
                (c.p0(c.bh * (xh * (y0 * c.b0))) + c.p0((c.bh * (y0 * c.b0)) * xh) -
                 (c.bh * xh) * (y0 * c.b0))};
      });
  add(cat, "PROP120A.2",
      "P0(bh(xh(y0 b0))) - (bh xh)(y0 b0) = 1/2(1-L)(P0(bh(xh y0)) - (bh xh)y0)"
      " - 1/4<b,y0>P0(bh xh)",
      {XH, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {c.p0(c.bh * (xh * (y0 * c.b0))) - (c.bh * xh) * (y0 * c.b0) -
                (c.half * c.oml * (c.p0(c.bh * (xh * y0)) - (c.bh * xh) * y0) -
                 c.quarter * c.fm(c.b, y0) * c.p0(c.bh * xh))};
      });
  add(cat, "IMPORTANT.1",
      "P0(bh((xh b0)y0)) + P0((bh y0)(xh b0)) = 1/4<b,xh>y0 b0", {XH, Y0}, M, always,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {c.p0(c.bh * ((xh * c.b0) * y0)) + c.p0((c.bh * y0) * (xh * c.b0)) -
                c.quarter * c.fm(c.b, xh) * (y0 * c.b0)};
      });
  add(cat, "IMPORTANT.2",
      "P0(bh((xh b0)(y0 b0))) = -1/2(1-L)P0((bh y0)(xh b0)) + 1/8(1-L)<b,xh>y0 b0"
      " + 1/16<b,y0><b,xh>b0 = 1/2(1-L)P0(bh((xh b0)y0)) + 1/16<b,y0><b,xh>b0",
      {XH, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        const Element A = c.p0(c.bh * ((xh * c.b0) * (y0 * c.b0)));
        const Element B = c.k(-1, 2) * c.oml * c.p0((c.bh * y0) * (xh * c.b0)) +
                          c.k(1, 8) * c.oml * c.fm(c.b, xh) * (y0 * c.b0) +
                          c.k(1, 16) * c.fm(c.b, y0) * c.fm(c.b, xh) * c.b0;
        const Element C = c.half * c.oml * c.p0(c.bh * ((xh * c.b0) * y0)) +
                          c.k(1, 16) * c.fm(c.b, y0) * c.fm(c.b, xh) * c.b0;
        return {A - B, B - C};
      });
  add(cat, "IMPORTANT.3",
      "P0(bh(xh(y0 b0))) = -P0((bh y0)(xh b0)) + 1/4<b,xh>y0 b0 + 1/4<b,xh y0>b0"
      " = P0(bh((xh b0)y0)) + 1/4<b,xh y0>b0",
      {XH, Y0}, M, lam_not({{1, 4}, {1, 1}}),
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        const Element A = c.p0(c.bh * (xh * (y0 * c.b0)));
        const Element B = -c.p0((c.bh * y0) * (xh * c.b0)) +
                          c.quarter * c.fm(c.b, xh) * (y0 * c.b0) +
                          c.quarter * c.fm(c.b, xh * y0) * c.b0;
        const Element C = c.p0(c.bh * ((xh * c.b0) * y0)) +
                          c.quarter * c.fm(c.b, xh * y0) * c.b0;
        return {A - B, B - C};
      });
  add(cat, "COR120.1",
      "(2L-1)(P0(bh(xh y0)) - (bh xh)y0 + P0((bh y0)xh)) - 4 P0(bh((xh b0)y0))"
      " + 4 P0(bh(xh(y0 b0))) - <b,xh y0>b0 = 0",
      {XH, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {(c.k(2) * c.L - c.one) *
                    (c.p0(c.bh * (xh * y0)) - (c.bh * xh) * y0 +
                     c.p0((c.bh * y0) * xh)) -
                c.k(4) * c.p0(c.bh * ((xh * c.b0) * y0)) +
                c.k(4) * c.p0(c.bh * (xh * (y0 * c.b0))) -
                c.fm(c.b, xh * y0) * c.b0};
      });
  add(cat, "COR120.2",
      "(2L-1)(P0(bh(xh y0)) - (bh xh)y0 + P0((bh y0)xh)) = 0", {XH, Y0}, M,
      lam_not({{1, 4}, {1, 1}}), [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {(c.k(2) * c.L - c.one) * (c.p0(c.bh * (xh * y0)) - (c.bh * xh) * y0 +
                                          c.p0((c.bh * y0) * xh))};
      });
  add(cat, "COR120A",
      "P0((bh y0)(xh b0))b0 = 1/2(1-L)P0((bh y0)(xh b0)) + 1/16<b,xh><b,y0>b0",
      {XH, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        const Element z = c.p0((c.bh * y0) * (xh * c.b0));
        return {z * c.b0 - (c.half * c.oml * z +
                            c.k(1, 16) * c.fm(c.b, xh) * c.fm(c.b, y0) * c.b0)};
      });
  add(cat, "PROP120B.1",
      "L(P0(bh(xh y0)) - (bh xh)y0 + P0((bh y0)xh)) + 2 P0((xh b0)(bh y0))"
      " - 2((bh y0)xh)b0 + 1/2<b,y0>P0(bh xh) = 0",
      {XH, Y0}, M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {c.L * (c.p0(c.bh * (xh * y0)) - (c.bh * xh) * y0 +
                       c.p0((c.bh * y0) * xh)) +
                c.k(2) * c.p0((xh * c.b0) * (c.bh * y0)) -
                c.k(2) * (((c.bh * y0) * xh) * c.b0) +
                c.half * c.fm(c.b, y0) * c.p0(c.bh * xh)};
      });
  add(cat, "PROP120B.2",
      "z b0 = 1/2(1-L)z for z = P0(bh(xh y0)) - (bh xh)y0 + P0((bh y0)xh)", {XH, Y0},
      M, always, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        const Element z =
            c.p0(c.bh * (xh * y0)) - (c.bh * xh) * y0 + c.p0((c.bh * y0) * xh);
        return {z * c.b0 - c.half * c.oml * z};
      });
}

void add_lambda_one_rules(Catalog& cat) {
  add(cat, "T.AB12.1",
      "D = [La,Lb] is a derivation: D(xy) = (Dx)y + x(Dy), when L = 1 and b0 = 0",
      {XF, YF}, M, lam1_b0_zero, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x = t[0], &y = t[1];
        const Element Dxy = c.a * (c.b * (x * y)) - c.b * (c.a * (x * y));
        const Element Dx = c.a * (c.b * x) - c.b * (c.a * x);
        const Element Dy = c.a * (c.b * y) - c.b * (c.a * y);
        return {Dxy - Dx * y - x * Dy};
      });
  add(cat, "AB12.EQSI.1", "(xh b0)b0 = 0", {XH}, M, lam1,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& xh = t[0];
        return {(xh * c.b0) * c.b0};
      });
  add(cat, "AB12.EQSI.2", "(x0 b0)b0 = 1/2<b,x0>b0", {X0}, M, lam1,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& x0 = t[0];
        return {(x0 * c.b0) * c.b0 - c.half * c.fm(c.b, x0) * c.b0};
      });
  add(cat, "AB12.EQSI.3", "bh(bh x0) = 1/2<b,x0>a + 1/2 x0 b0", {X0}, M, lam1,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& x0 = t[0];
        return {c.bh * (c.bh * x0) -
                (c.half * c.fm(c.b, x0) * c.a + c.half * (x0 * c.b0))};
      });
  add(cat, "AB12.EQSI.4",
      "bh(bh xh) = -1/2 xh b0 + 1/2<b,xh>bh ; bh P0(bh xh) = -1/2 xh b0 + 1/4<b,xh>bh",
      {XH}, M, lam1, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& xh = t[0];
        return {c.bh * (c.bh * xh) -
                    (c.half * c.fm(c.b, xh) * c.bh - c.half * (xh * c.b0)),
                c.bh * c.p0(c.bh * xh) -
                    (c.quarter * c.fm(c.b, xh) * c.bh - c.half * (xh * c.b0))};
      });
  add(cat, "AB12.EQSI.5", "bh(xh b0) = (bh xh)b0 = 1/4<b,xh>b0", {XH}, M, lam1,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& xh = t[0];
        const Element A = c.bh * (xh * c.b0);
        const Element B = (c.bh * xh) * c.b0;
        return {A - B, B - c.quarter * c.fm(c.b, xh) * c.b0};
      });
  add(cat, "AB12.EQSI.6", "bh(x0 b0) = 1/4<b,x0>bh", {X0}, M, lam1,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element& x0 = t[0];
        return {c.bh * (x0 * c.b0) - c.quarter * c.fm(c.b, x0) * c.bh};
      });
  add(cat, "AB12.EQSI.7", "<b0,(xh b0)y> = 0 ; <bh,y b0> = 0", {XH, YF}, M, lam1,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y = t[1];
        return {c.fm(c.b0, (xh * c.b0) * y) * c.a, c.fm(c.bh, y * c.b0) * c.a};
      });
  add(cat, "AB12.EQSI.8", "bh b0 = 0 ; b0^2 = 0 ; bh^2 = b0", {}, M, lam1,
      [](const Ctx& c, const Tuple&) -> Residuals {
        return {c.bh * c.b0, c.b0 * c.b0, c.bh * c.bh - c.b0};
      });
  add(cat, "LEMAB11.1",
      "(bh yh)(xh b0) = 1/2<b,yh>xh b0 - 1/4<b,xh>yh b0 + 1/2<b0,xh yh>bh"
      " - bh(yh(xh b0))",
      {XH, YH}, M, lam1, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {(c.bh * yh) * (xh * c.b0) -
                (c.half * c.fm(c.b, yh) * (xh * c.b0) -
                 c.quarter * c.fm(c.b, xh) * (yh * c.b0) +
                 c.half * c.fm(c.b0, xh * yh) * c.bh - c.bh * (yh * (xh * c.b0)))};
      });
  add(cat, "LEMAB11.2",
      "4(bh yh)(xh b0) + 4(bh xh)(yh b0) = <b,yh>xh b0 + <b,xh>yh b0 + 4<b0,xh yh>bh"
      " - 4bh(yh(xh b0)) - 4bh(xh(yh b0))",
      {XH, YH}, M, lam1, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {c.k(4) * ((c.bh * yh) * (xh * c.b0)) +
                c.k(4) * ((c.bh * xh) * (yh * c.b0)) -
                (c.fm(c.b, yh) * (xh * c.b0) + c.fm(c.b, xh) * (yh * c.b0) +
                 c.k(4) * c.fm(c.b0, xh * yh) * c.bh -
                 c.k(4) * (c.bh * (yh * (xh * c.b0))) -
                 c.k(4) * (c.bh * (xh * (yh * c.b0))))};
      });
  add(cat, "LEMAB11.3", "((bh yh)(xh b0))b0 = 0", {XH, YH}, M, lam1,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {((c.bh * yh) * (xh * c.b0)) * c.b0};
      });
  add(cat, "LEMAB11.4",
      "((bh xh)yh)b0 + ((bh yh)xh)b0 = 1/2(<b,yh>xh b0 + <b,xh>yh b0)"
      " - 1/4<b0,xh yh>bh",
      {XH, YH}, M, lam1, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {((c.bh * xh) * yh) * c.b0 + ((c.bh * yh) * xh) * c.b0 -
                (c.half * (c.fm(c.b, yh) * (xh * c.b0) +
                           c.fm(c.b, xh) * (yh * c.b0)) -
                 c.quarter * c.fm(c.b0, xh * yh) * c.bh)};
      });
  add(cat, "LEMAB11.5",
      "4(bh yh)(xh b0) + 4(bh xh)(yh b0) = <b,yh>xh b0 + <b,xh>yh b0"
      " - 1/2<b0,xh yh>bh + 2bh(xh(yh b0)) + 2bh(yh(xh b0))",
      {XH, YH}, M, lam1, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {c.k(4) * ((c.bh * yh) * (xh * c.b0)) +
                c.k(4) * ((c.bh * xh) * (yh * c.b0)) -
                (c.fm(c.b, yh) * (xh * c.b0) + c.fm(c.b, xh) * (yh * c.b0) -
                 c.half * c.fm(c.b0, xh * yh) * c.bh +
                 c.k(2) * (c.bh * (xh * (yh * c.b0))) +
                 c.k(2) * (c.bh * (yh * (xh * c.b0))))};
      });
  add(cat, "LEMAB11.6",
      "6(bh(yh(xh b0)) + bh(xh(yh b0))) = 9/2<b0,xh yh>bh", {XH, YH}, M, lam1,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {c.k(6) * (c.bh * (yh * (xh * c.b0)) + c.bh * (xh * (yh * c.b0))) -
                c.k(9, 2) * c.fm(c.b0, xh * yh) * c.bh};
      });
  add(cat, "EQAB17",
      "(bh xh)yh + (bh yh)xh + 4(bh xh)(yh b0) + 4(bh yh)(xh b0)"
      " = 1/2(<b,yh>xh + <b,xh>yh) + <b,yh>xh b0 + <b,xh>yh b0 + <b,xh yh>bh"
      " - (xh yh)bh",
      {XH, YH}, E, lam1, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {(c.bh * xh) * yh + (c.bh * yh) * xh +
                c.k(4) * ((c.bh * xh) * (yh * c.b0)) +
                c.k(4) * ((c.bh * yh) * (xh * c.b0)) -
                (c.half * (c.fm(c.b, yh) * xh + c.fm(c.b, xh) * yh) +
                 c.fm(c.b, yh) * (xh * c.b0) + c.fm(c.b, xh) * (yh * c.b0) +
                 c.fm(c.b, xh * yh) * c.bh - (xh * yh) * c.bh)};
      });
  add(cat, "T.AB12.2i",
      "(xh yh)bh + (bh xh)yh + (bh yh)xh = 1/2<b,yh>xh + 1/2<b,xh>yh + <a,xh yh>bh",
      {XH, YH}, M, lam1_char_not3, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {(xh * yh) * c.bh + (c.bh * xh) * yh + (c.bh * yh) * xh -
                (c.half * c.fm(c.b, yh) * xh + c.half * c.fm(c.b, xh) * yh +
                 c.fm(c.a, xh * yh) * c.bh)};
      });
  add(cat, "CLAIM1.1",
      "P0((bh y0)(xh b0)) + 2(xh bh)(y0 b0) = 3/4<b,y0>P0(xh bh) + 1/2<b,xh>y0 b0"
      " - (xh(bh y0))b0 + 1/2<b,xh y0>b0",
      {XH, Y0}, M, lam1, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {c.p0((c.bh * y0) * (xh * c.b0)) +
                c.k(2) * ((xh * c.bh) * (y0 * c.b0)) -
                (c.k(3, 4) * c.fm(c.b, y0) * c.p0(xh * c.bh) +
                 c.half * c.fm(c.b, xh) * (y0 * c.b0) -
                 (xh * (c.bh * y0)) * c.b0 + c.half * c.fm(c.b, xh * y0) * c.b0)};
      });
  add(cat, "CLAIM1.2",
      "P0((xh b0)(yh b0)) + ((xh b0)yh)b0 - 1/2<b0,xh yh>b0 = 0", {XH, YH}, M, lam1,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {c.p0((xh * c.b0) * (yh * c.b0)) + ((xh * c.b0) * yh) * c.b0 -
                c.half * c.fm(c.b0, xh * yh) * c.b0};
      });
  add(cat, "CLAIM1.3", "((xh b0)(bh y0))b0 = 1/16<b,xh><b,y0>b0", {XH, Y0}, M, lam1,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {((xh * c.b0) * (c.bh * y0)) * c.b0 -
                c.k(1, 16) * c.fm(c.b, xh) * c.fm(c.b, y0) * c.b0};
      });
  add(cat, "CLAIM1.4",
      "P0(bh(xh(y0 b0))) + 1/4<b,y0>P0(bh xh) - (bh xh)(y0 b0) = 0", {XH, Y0}, M, lam1,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {c.p0(c.bh * (xh * (y0 * c.b0))) +
                c.quarter * c.fm(c.b, y0) * c.p0(c.bh * xh) -
                (c.bh * xh) * (y0 * c.b0)};
      });
  add(cat, "CLAIM1.5",
      "P0(bh(xh y0)) + P0((bh y0)xh) - (bh xh)y0 + 2 P0((xh b0)(bh y0))"
      " + 1/2<b,y0>P0(bh xh) - 2((bh y0)xh)b0 = 0",
      {XH, Y0}, M, lam1, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {c.p0(c.bh * (xh * y0)) + c.p0((c.bh * y0) * xh) - (c.bh * xh) * y0 +
                c.k(2) * c.p0((xh * c.b0) * (c.bh * y0)) +
                c.half * c.fm(c.b, y0) * c.p0(c.bh * xh) -
                c.k(2) * (((c.bh * y0) * xh) * c.b0)};
      });
  add(cat, "CLAIM1.6",
      "P0(bh((xh b0)y0)) + P0((bh y0)(xh b0)) - 1/4<b,xh>y0 b0 = 0", {XH, Y0}, M, lam1,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {c.p0(c.bh * ((xh * c.b0) * y0)) + c.p0((c.bh * y0) * (xh * c.b0)) -
                c.quarter * c.fm(c.b, xh) * (y0 * c.b0)};
      });
  add(cat, "CLAIM1.7",
      "(P0(bh(xh y0)) + P0((bh y0)xh) - (bh xh)y0)b0 = 1/4<b,xh y0>b0 + ((bh y0)xh)b0"
      " - ((bh xh)y0)b0 = 0 ; the unprojected-to-condition link; and"
      " ((bh y0)xh)b0 - 1/2<b,xh y0>b0 = -3/4<b,xh y0>b0 + ((bh xh)y0)b0",
      {XH, Y0}, M, lam1, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        const Element A = (c.p0(c.bh * (xh * y0)) + c.p0((c.bh * y0) * xh) -
                           (c.bh * xh) * y0) *
                          c.b0;
        const Element B = c.quarter * c.fm(c.b, xh * y0) * c.b0 +
                          ((c.bh * y0) * xh) * c.b0 - ((c.bh * xh) * y0) * c.b0;
        const Element r3 =
            c.p0(c.bh * (xh * y0)) - (c.bh * xh) * y0 + c.p0((c.bh * y0) * xh) -
            (c.k(2) * c.p0(c.bh * (xh * (y0 * c.b0))) -
             c.k(2) * c.p0(c.bh * ((xh * c.b0) * y0)) -
             c.half * c.fm(c.b, xh * y0) * c.b0);
        const Element r4 = ((c.bh * y0) * xh) * c.b0 -
                           c.half * c.fm(c.b, xh * y0) * c.b0 -
                           (c.k(-3, 4) * c.fm(c.b, xh * y0) * c.b0 +
                            ((c.bh * xh) * y0) * c.b0);
        return {A - B, B, r3, r4};
      });
  add(cat, "EQ1P12121",
      "P0(xh(yh b0)) + P0(yh(xh b0)) + 4 P0((xh bh)(yh bh)) + 4 P0((xh b0)(yh b0))"
      " = <b,yh>P0(xh bh) + <b,xh>P0(yh bh) - (xh yh)b0 + <b,xh yh>b0",
      {XH, YH}, E, lam1, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &yh = t[1];
        return {c.p0(xh * (yh * c.b0)) + c.p0(yh * (xh * c.b0)) +
                c.k(4) * c.p0((xh * c.bh) * (yh * c.bh)) +
                c.k(4) * c.p0((xh * c.b0) * (yh * c.b0)) -
                (c.fm(c.b, yh) * c.p0(xh * c.bh) + c.fm(c.b, xh) * c.p0(yh * c.bh) -
                 (xh * yh) * c.b0 + c.fm(c.b, xh * yh) * c.b0)};
      });
  add(cat, "LEM85",
      "2(bh y0)(xh b0) + 2(bh xh)(y0 b0) - 2((bh xh)y0)b0 - 2bh((xh b0)y0) = 0",
      {XH, Y0}, M, lam1, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {c.k(2) * ((c.bh * y0) * (xh * c.b0)) +
                c.k(2) * ((c.bh * xh) * (y0 * c.b0)) -
                c.k(2) * (((c.bh * xh) * y0) * c.b0) -
                c.k(2) * (c.bh * ((xh * c.b0) * y0))};
      });
  add(cat, "FACT7.1", "(x0 b0)(y0 b0) = (x0(y0 b0))b0", {X0, Y0}, M, lam1,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x0 = t[0], &y0 = t[1];
        return {(x0 * c.b0) * (y0 * c.b0) - (x0 * (y0 * c.b0)) * c.b0};
      });
  add(cat, "FACT7.2",
      "(x0 y0)b0 + 2 P0((bh x0)(bh y0)) = y0(x0 b0) + 2 P0(bh((bh y0)x0))", {X0, Y0},
      M, lam1, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x0 = t[0], &y0 = t[1];
        return {(x0 * y0) * c.b0 + c.k(2) * c.p0((c.bh * x0) * (c.bh * y0)) -
                (y0 * (x0 * c.b0) + c.k(2) * c.p0(c.bh * ((c.bh * y0) * x0)))};
      });
  add(cat, "FACT7.3",
      "4 P0((bh x0)(bh y0)) = y0(x0 b0) + x0(y0 b0) - (x0 y0)b0", {X0, Y0}, M, lam1,
      [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &x0 = t[0], &y0 = t[1];
        return {c.k(4) * c.p0((c.bh * x0) * (c.bh * y0)) -
                (y0 * (x0 * c.b0) + x0 * (y0 * c.b0) - (x0 * y0) * c.b0)};
      });
  add(cat, "FACT7.4",
      "2 P0((xh b0)(bh y0)) - 1/4<b,xh>y0 b0 + (bh xh)(y0 b0) - ((bh xh)y0)b0 = 0 ;"
      " 2(bh y0)(xh b0) + 2bh((xh b0)y0) - 1/2<b,xh>y0 b0 = 0",
      {XH, Y0}, M, lam1, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {c.k(2) * c.p0((xh * c.b0) * (c.bh * y0)) -
                    c.quarter * c.fm(c.b, xh) * (y0 * c.b0) +
                    (c.bh * xh) * (y0 * c.b0) - ((c.bh * xh) * y0) * c.b0,
                c.k(2) * ((c.bh * y0) * (xh * c.b0)) +
                    c.k(2) * (c.bh * ((xh * c.b0) * y0)) -
                    c.half * c.fm(c.b, xh) * (y0 * c.b0)};
      });
  add(cat, "FACT7.5",
      "P0((bh y0)(xh b0)) + (xh bh)(y0 b0) - 1/4<b,xh y0>b0 = 1/4<b,y0>P0(xh bh)"
      " + 1/4<b,xh>y0 b0 ; P0((bh y0)(xh b0)) + P0(bh(xh(y0 b0))) - 1/4<b,xh y0>b0"
      " = 1/4<b,xh>y0 b0 ; -P0(bh((xh b0)y0)) + P0(bh(xh(y0 b0))) - 1/4<b,xh y0>b0 = 0",
      {XH, Y0}, M, lam1_char_not3, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        const Element r1 = c.p0((c.bh * y0) * (xh * c.b0)) +
                           (xh * c.bh) * (y0 * c.b0) -
                           c.quarter * c.fm(c.b, xh * y0) * c.b0 -
                           (c.quarter * c.fm(c.b, y0) * c.p0(xh * c.bh) +
                            c.quarter * c.fm(c.b, xh) * (y0 * c.b0));
        const Element r2 = c.p0((c.bh * y0) * (xh * c.b0)) +
                           c.p0(c.bh * (xh * (y0 * c.b0))) -
                           c.quarter * c.fm(c.b, xh * y0) * c.b0 -
                           c.quarter * c.fm(c.b, xh) * (y0 * c.b0);
        const Element r3 = -c.p0(c.bh * ((xh * c.b0) * y0)) +
                           c.p0(c.bh * (xh * (y0 * c.b0))) -
                           c.quarter * c.fm(c.b, xh * y0) * c.b0;
        return {r1, r2, r3};
      });
  add(cat, "T.AB12.2ii", "bh(xh y0) + (bh y0)xh - (bh xh)y0 = 0", {XH, Y0}, M,
      lam1_char_not3, [](const Ctx& c, const Tuple& t) -> Residuals {
        const Element &xh = t[0], &y0 = t[1];
        return {c.bh * (xh * y0) + (c.bh * y0) * xh - (c.bh * xh) * y0};
      });
}

Catalog build_catalog() {
  Catalog cat;
  cat.reserve(164);
  add_associativity_and_commutator(cat);
  add_pair_component_squares(cat);
  add_pair_product_expansions(cat);
  add_mixed_component_products(cat);
  add_axis_expansion_rules(cat);
  add_zero_half_interactions(cat);
  add_special_lambda_rules(cat);
  add_lambda_one_rules(cat);
  return cat;
}

}  // namespace

const std::vector<IdentityDescriptor>& list_identities() {
  static const Catalog cat = build_catalog();
  return cat;
}

const IdentityDescriptor& identity_by_id(const std::string& id) {
  for (const auto& d : list_identities())
    if (d.id == id) return d;
  throw UnknownIdentity(id);
}

AxisPair make_axis_pair(const AxisCertificate& cert_a, const AxisCertificate& cert_b) {
  require_same_algebra(cert_a.axis, cert_b.axis);
  AxisPair p;
  p.algebra = cert_a.axis.algebra;
  p.cert_a = cert_a;
  p.cert_b = cert_b;
  p.lambda = form(cert_a.axis, cert_b.axis);
  const Decomposition dec = decompose(cert_a, cert_b.axis);
  p.b0 = dec.x0;
  p.bhalf = dec.xhalf;

  const Ctx c(p);
  auto require = [](bool ok, const char* what) {
    if (!ok)
      throw Error(Error::Cat::Math,
                  std::string("axis pair sanity check failed: ") + what);
  };
  require(is_zero(c.b - (c.L * c.a + c.b0 + c.bh)), "b = L a + b0 + bh");
  require(is_zero(c.b0 * c.b0 - c.oml * c.b0), "b0^2 = (1-L)b0");
  require(is_zero(c.p0(c.bh * c.bh) - c.L * c.b0), "P0(bh^2) = L b0");
  require(is_zero(c.bh * c.b0 - c.half * c.oml * c.bh), "bh b0 = 1/2(1-L)bh");
  require(is_zero(c.bh * c.bh - (c.L * c.oml * c.a + c.L * c.b0)),
          "bh^2 = L(1-L)a + L b0");
  require(c.F.eq(form(c.b, c.bh), (c.k(2) * c.L * c.oml).v), "<b,bh> = 2L(1-L)");
  require(c.F.eq(form(c.b, c.b0), (c.oml * c.oml).v), "<b,b0> = (1-L)^2");
  return p;
}

IdentityReport check_identity(const AxisPair& pair, const IdentityDescriptor& ident) {
  IdentityReport rep;
  rep.id = ident.id;
  rep.applicable = ident.applicable(pair);
  if (!rep.applicable) return rep;

  std::vector<std::vector<Element>> bases;
  bases.reserve(ident.slots.size());
  for (Slot s : ident.slots) {
    switch (slot_space(s)) {
      case SlotSpace::Zero:
        bases.push_back(pair.cert_a.zero.basis);
        break;
      case SlotSpace::Half:
        bases.push_back(pair.cert_a.half.basis);
        break;
      case SlotSpace::Full: {
        std::vector<Element> full;
        full.reserve(pair.algebra->dim());
        for (std::size_t i = 0; i < pair.algebra->dim(); ++i)
          full.push_back(pair.algebra->basis_element(i));
        bases.push_back(std::move(full));
        break;
      }
    }
  }
  for (const auto& basis : bases)
    if (basis.empty()) return rep;  // nothing to quantify over

  std::vector<std::size_t> idx(ident.slots.size(), 0);
  for (;;) {
    Tuple tuple;
    tuple.reserve(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) tuple.push_back(bases[i][idx[i]]);
    const Residuals residuals = ident.eval(pair, tuple);
    ++rep.checked_tuples;
    for (std::size_t r = 0; r < residuals.size(); ++r)
      if (!is_zero(residuals[r])) rep.failures.push_back({tuple, r, residuals[r]});
    std::size_t k = idx.size();
    for (;;) {
      if (k == 0) return rep;
      --k;
      if (++idx[k] < bases[k].size()) break;
      idx[k] = 0;
    }
  }
}

IdentityReport check_identity(const AxisPair& pair, const std::string& id) {
  return check_identity(pair, identity_by_id(id));
}

std::vector<IdentityReport> run_suite(const AxisPair& pair, Tier tier,
                                      const std::string& filter) {
  std::vector<IdentityReport> out;
  for (const auto& d : list_identities()) {
    if (tier == Tier::Mandatory && d.tier == Tier::Extended) continue;
    if (!filter.empty() && d.id.rfind(filter, 0) != 0) continue;
    out.push_back(check_identity(pair, d));
  }
  return out;
}

bool suite_pass(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports)
    if (r.applicable && !r.failures.empty()) return false;
  return true;
}

std::string suite_report_tsv(const std::vector<IdentityReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += r.id;
    out += '\t';
    out += r.applicable ? "APPLICABLE" : "SKIPPED";
    out += '\t';
    out += r.failures.empty() ? "PASS" : "FAIL";
    out += '\t';
    out += std::to_string(r.checked_tuples);
    out += '\t';
    out += std::to_string(r.failures.size());
    out += '\n';
  }
  return out;
}

DerivationCriterionReport check_derivation_criterion(const AxisPair& pair) {
  DerivationCriterionReport rep;
  const Mat D = commutator_leftmul(pair.cert_a.axis, pair.cert_b.axis);
  rep.commutator_is_derivation = is_derivation(pair.algebra, D).pass;

  const Ctx c(pair);
  const auto& zb = pair.cert_a.zero.basis;
  const auto& hb = pair.cert_a.half.basis;
  rep.shape_a = rep.shape_b = rep.shape_c = true;
  for (const Element& x0 : zb)
    for (const Element& y0 : zb)
      if (!is_zero(c.bh * (x0 * y0) - (c.bh * x0) * y0 - (c.bh * y0) * x0))
        rep.shape_a = false;
  for (const Element& xh : hb)
    for (const Element& y0 : zb)
      if (!is_zero(c.p0(c.bh * (xh * y0)) -
                   ((c.bh * xh) * y0 - c.p0((c.bh * y0) * xh))))
        rep.shape_b = false;
  for (const Element& xh : hb)
    for (const Element& yh : hb)
      if (!is_zero(c.bh * (xh * yh) + (c.bh * xh) * yh + (c.bh * yh) * xh -
                   (c.half * c.fm(c.b, yh) * xh + c.half * c.fm(c.b, xh) * yh +
                    c.fm(c.a, xh * yh) * c.bh)))
        rep.shape_c = false;
  return rep;
}

}  // namespace axial
