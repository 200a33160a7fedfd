#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "axial/catalog.hpp"
#include "axial/constructions.hpp"
#include "test_util.hpp"

using namespace axial;

namespace {

const FieldSpec Q = FieldSpec::rationals();

AxisPair pair_from_fixture(const Fixture& fx) {
  return make_axis_pair(verify_axis(*fx.a), verify_axis(*fx.b));
}

AxisPair spin_pair(const char* lambda) {
  return pair_from_fixture(fixture_by_name(std::string("spin:") + lambda, Q));
}

AxisPair matsuo_pair(const char* name, std::size_t i, std::size_t j,
                     const FieldSpec& field = Q) {
  Fixture fx = fixture_by_name(name, field);
  return make_axis_pair(verify_axis(fx.algebra->basis_element(i)),
                        verify_axis(fx.algebra->basis_element(j)));
}

Element elem(const AlgebraRef& A, std::initializer_list<long> num,
             long den = 1) {
  const Field& f = A->field();
  Vec v;
  for (long n : num) v.push_back(f.from_fraction(n, den));
  return A->element(std::move(v));
}

}  // namespace

TEST_CASE("catalog shape and registration order") {
  const auto& cat = list_identities();
  CHECK(cat.size() == 164);
  CHECK(cat.front().id == "SERESS");
  std::size_t mandatory = 0;
  std::set<std::string> ids;
  for (const auto& d : cat) {
    if (d.tier == Tier::Mandatory) ++mandatory;
    CHECK(ids.insert(d.id).second);
    CHECK(!d.statement.empty());
    CHECK(bool(d.applicable));
    CHECK(bool(d.eval));
  }
  CHECK(mandatory == 134);
  CHECK(&list_identities() == &cat);  // built once
}

TEST_CASE("expected entries are present with their tiers") {
  const char* mandatory[] = {
      "SERESS", "DER1.1", "DER1.6", "DER2.4", "DER3.4", "DER4.4", "DER5.4",
      "Q.3a", "Q.3b", "Q.3c", "Q.3d", "Q.3e", "Q.4", "Q.5a", "Q.5b",
      "P.1", "P.3", "P.4a", "P.4d", "P.5a", "P.5d", "P.7", "P.8a", "P.8b",
      "P.9", "P.10a", "P.10b", "L120.1", "L120.3", "L012.1", "L012.3",
      "L1212.1", "L1212.8", "PA0.1", "PA0.4", "SI.1", "SI.8", "P00.1",
      "P00.4", "P120.1", "P120.2", "SSI.1", "SSI.10", "P1212.1", "P1212.8",
      "T0012", "EQ0012A", "LEM121212.1", "LEM121212.3", "T121212", "T120",
      "IMP.PROP", "EQ2X", "PROP120A.1", "PROP120A.2", "IMPORTANT.1",
      "IMPORTANT.3", "COR120.1", "COR120.2", "COR120A", "PROP120B.1",
      "PROP120B.2", "AB12.EQSI.1", "AB12.EQSI.8", "LEMAB11.1", "LEMAB11.6",
      "T.AB12.1", "T.AB12.2i", "T.AB12.2ii", "CLAIM1.1", "CLAIM1.7",
      "LEM85", "FACT7.1", "FACT7.5"};
  for (const char* id : mandatory) {
    const IdentityDescriptor& d = identity_by_id(id);
    CHECK(d.tier == Tier::Mandatory);
  }
  const char* extended[] = {"LAL0", "DER2.1", "DER5.3", "Q.1", "Q.2", "P.2",
                            "P.6", "L1212.3B", "P1.1", "P1.5", "P1212.5B",
                            "P1212.7B", "EQ120A", "EQ120C", "EQAB17",
                            "EQ1P12121"};
  for (const char* id : extended) CHECK(identity_by_id(id).tier == Tier::Extended);

  CHECK_THROWS_AS(identity_by_id("NOPE"), const UnknownIdentity&);
}

TEST_CASE("slot declarations") {
  CHECK(identity_by_id("SI.1").slots == std::vector<Slot>{Slot::XHalf});
  CHECK(identity_by_id("T121212").slots ==
        std::vector<Slot>({Slot::XHalf, Slot::YHalf}));
  CHECK(identity_by_id("Q.3c").slots.empty());
  CHECK(identity_by_id("T0012").slots == std::vector<Slot>({Slot::X0, Slot::Y0}));
  CHECK(identity_by_id("SERESS").slots ==
        std::vector<Slot>({Slot::XFull, Slot::Y0}));
  CHECK(identity_by_id("DER2.4").slots ==
        std::vector<Slot>({Slot::XHalf, Slot::YFull, Slot::Z0}));

  CHECK(slot_space(Slot::X0) == SlotSpace::Zero);
  CHECK(slot_space(Slot::YHalf) == SlotSpace::Half);
  CHECK(slot_space(Slot::ZFull) == SlotSpace::Full);
  CHECK(std::string(slot_name(Slot::XHalf)) == "xh");
}

TEST_CASE("make_axis_pair decomposes b against a") {
  AxisPair p = matsuo_pair("matsuo:S3", 0, 1);
  const Field& f = p.algebra->field();
  CHECK(p.lambda == f.from_fraction(1, 4));
  CHECK(equal(p.b0, elem(p.algebra, {-1, 2, 2}, 4)));
  CHECK(equal(p.bhalf, elem(p.algebra, {0, 2, -2}, 4)));
  CHECK(equal(p.cert_b.axis, add(scale(p.lambda, p.cert_a.axis), add(p.b0, p.bhalf))));

  Fixture s1 = fixture_by_name("spin:1/2", Q);
  Fixture s2 = fixture_by_name("spin:1/3", Q);
  CHECK_THROWS_AS(make_axis_pair(verify_axis(*s1.a), verify_axis(*s2.b)),
                  const AlgebraMismatch&);
}

TEST_CASE("check_identity reports tuples and applicability") {
  AxisPair half = spin_pair("1/2");

  IdentityReport r = check_identity(half, "SI.1");
  CHECK(r.applicable);
  CHECK(r.checked_tuples == 1);  // dim A_{1/2}(a) = 1
  CHECK(r.failures.empty());
  CHECK(r.pass());

  IdentityReport q3d = check_identity(half, "Q.3d");
  CHECK(q3d.applicable);
  CHECK(q3d.checked_tuples == 1);  // no slots: single empty tuple
  CHECK(q3d.pass());

  IdentityReport seress = check_identity(half, "SERESS");
  CHECK(seress.applicable);
  CHECK(seress.checked_tuples == 3);  // full (3) x zero (1)
  CHECK(seress.pass());

  CHECK(check_identity(half, "T121212").applicable);
  CHECK(check_identity(half, "T0012").applicable);

  AxisPair quarter = matsuo_pair("matsuo:S3", 0, 1);
  CHECK(!check_identity(quarter, "T0012").applicable);
  CHECK(!check_identity(quarter, "T121212").applicable);
  CHECK(!check_identity(quarter, "T120").applicable);
  CHECK(!check_identity(quarter, "LEM121212.1").applicable);
  CHECK(check_identity(quarter, "SI.1").pass());
  CHECK(!check_identity(quarter, "T.AB12.1").applicable);

  AxisPair one = pair_from_fixture(fixture_by_name("lambda-one", Q));
  CHECK(!check_identity(one, "T121212").applicable);
  CHECK(!check_identity(one, "L1212.7").applicable);
  CHECK(check_identity(one, "T.AB12.1").pass());
  CHECK(check_identity(one, "T.AB12.2i").pass());
  CHECK(check_identity(one, "T.AB12.2ii").pass());
  CHECK(check_identity(one, "AB12.EQSI.8").pass());
}

TEST_CASE("characteristic-3 exclusions at lambda = 1") {
  AxisPair g3 = pair_from_fixture(fixture_by_name("lambda-one", FieldSpec::prime_field(3)));
  CHECK(!check_identity(g3, "T.AB12.2i").applicable);
  CHECK(!check_identity(g3, "T.AB12.2ii").applicable);
  CHECK(!check_identity(g3, "FACT7.5").applicable);
  CHECK(check_identity(g3, "T.AB12.1").pass());

  AxisPair g5 = pair_from_fixture(fixture_by_name("lambda-one", FieldSpec::prime_field(5)));
  CHECK(check_identity(g5, "T.AB12.2i").pass());
  CHECK(check_identity(g5, "T.AB12.2ii").pass());
  CHECK(check_identity(g5, "T.AB12.1").pass());
}

TEST_CASE("evaluators are multilinear in their slots") {
  AxisPair p = matsuo_pair("matsuo:S4", 0, 5);
  const Field& f = p.algebra->field();
  REQUIRE(p.cert_a.half.dim() == 2);
  Element v = p.cert_a.half.basis[0], w = p.cert_a.half.basis[1];
  Element y = p.cert_a.zero.basis[0];
  Scalar c1 = f.from_fraction(2, 3), c2 = f.from_fraction(-5, 7);
  Element mix = add(scale(c1, v), scale(c2, w));

  for (const char* id : {"T120", "SI.1", "DER1.5"}) {
    const IdentityDescriptor& d = identity_by_id(id);
    REQUIRE(d.applicable(p));
    std::vector<Element> base_args;
    for (Slot s : d.slots) base_args.push_back(slot_space(s) == SlotSpace::Zero ? y : v);
    auto swap_first = [&](const Element& x) {
      std::vector<Element> t = base_args;
      t[0] = x;
      return d.eval(p, t);
    };
    auto rv = swap_first(v), rw = swap_first(w), rmix = swap_first(mix);
    REQUIRE(rv.size() == rmix.size());
    for (std::size_t k = 0; k < rmix.size(); ++k)
      CHECK(equal(rmix[k], add(scale(c1, rv[k]), scale(c2, rw[k]))));
  }
}

TEST_CASE("symmetric identities are invariant under slot swap") {
  AxisPair p = matsuo_pair("matsuo:S4", 0, 5);
  Element v = p.cert_a.half.basis[0], w = p.cert_a.half.basis[1];
  const IdentityDescriptor& t = identity_by_id("T121212");
  auto r1 = t.eval(p, {v, w});
  auto r2 = t.eval(p, {w, v});
  REQUIRE(r1.size() == r2.size());
  for (std::size_t k = 0; k < r1.size(); ++k) CHECK(equal(r1[k], r2[k]));

  Element z1 = p.cert_a.zero.basis[0], z2 = p.cert_a.zero.basis[1];
  const IdentityDescriptor& p00 = identity_by_id("P00.2");
  auto s1 = p00.eval(p, {z1, z2});
  auto s2 = p00.eval(p, {z2, z1});
  REQUIRE(s1.size() == s2.size());
  for (std::size_t k = 0; k < s1.size(); ++k) CHECK(equal(s1[k], s2[k]));
}

TEST_CASE("run_suite aggregates and renders TSV") {
  AxisPair half = spin_pair("1/2");
  auto mand = run_suite(half);
  CHECK(mand.size() == 134);
  CHECK(mand.front().id == "SERESS");
  CHECK(suite_pass(mand));

  auto all = run_suite(half, Tier::Extended);
  CHECK(all.size() == 164);
  CHECK(suite_pass(all));

  auto si = run_suite(half, Tier::Extended, "SI.");
  REQUIRE(si.size() == 8);
  for (std::size_t k = 0; k < 8; ++k) {
    CHECK(si[k].id == "SI." + std::to_string(k + 1));
    CHECK(si[k].pass());
  }

  std::string tsv = suite_report_tsv(si);
  std::istringstream in(tsv);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    CHECK(std::count(line.begin(), line.end(), '\t') == 4);
    CHECK(line.find("\tAPPLICABLE\tPASS\t") != std::string::npos);
  }
  CHECK(lines == 8);

  // Skipped rows render as PASS and do not affect the aggregate.
  AxisPair quarter = matsuo_pair("matsuo:S3", 0, 1);
  auto qr = run_suite(quarter, Tier::Mandatory, "T0012");
  REQUIRE(qr.size() == 1);
  CHECK(!qr[0].applicable);
  CHECK(qr[0].checked_tuples == 0);
  CHECK(suite_pass(qr));
  std::string qline = suite_report_tsv(qr);
  CHECK(qline.find("T0012\tSKIPPED\tPASS\t0\t0") != std::string::npos);

  CHECK(suite_pass(run_suite(quarter)));
}

TEST_CASE("derivation criterion equivalence") {
  AxisPair half = spin_pair("1/2");
  DerivationCriterionReport r = check_derivation_criterion(half);
  CHECK(r.commutator_is_derivation);
  CHECK(r.shape_a);
  CHECK(r.shape_b);
  CHECK(r.shape_c);
  CHECK(r.criterion());
  CHECK(r.equivalent());

  DerivationCriterionReport s4 = check_derivation_criterion(matsuo_pair("matsuo:S4", 0, 5));
  CHECK(s4.commutator_is_derivation);
  CHECK(s4.criterion());
  CHECK(s4.equivalent());

  // lambda = 1/4: equivalence holds whatever the two verdicts are.
  DerivationCriterionReport s3 = check_derivation_criterion(matsuo_pair("matsuo:S3", 0, 1));
  CHECK(s3.equivalent());

  DerivationCriterionReport one =
      check_derivation_criterion(pair_from_fixture(fixture_by_name("lambda-one", Q)));
  CHECK(one.equivalent());
}
