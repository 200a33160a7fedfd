#pragma once

#include <string>
#include <vector>

#include "axial/algebra.hpp"

namespace axial {

// Clauses of axis certification, in the order they are checked.
enum class AxisClause { Idempotent, Spectrum, FormOne, DirectSum, Fusion };

const char* axis_clause_name(AxisClause c);

struct NotAnAxis : Error {
  AxisClause clause;
  std::string witness;
  NotAnAxis(AxisClause cl, const std::string& wit)
      : Error(Cat::Math, std::string("not an axis: ") + axis_clause_name(cl) +
                             (wit.empty() ? "" : " (" + wit + ")")),
        clause(cl), witness(wit) {}
};
struct NotIdempotent : Error {
  NotIdempotent() : Error(Cat::Precondition, "element is not idempotent") {}
};
struct FormNotOne : Error {
  FormNotOne() : Error(Cat::Precondition, "(c,c) != 1") {}
};
struct YNotInZeroPart : Error {
  YNotInZeroPart() : Error(Cat::Precondition, "y not in Fa + A0(a)") {}
};

// Certified primitive axis of Jordan type 1/2 together with eigenspace bases.
// The closed forms of the eigenprojections need only the axis itself.
struct AxisCertificate {
  Element axis;
  Subspace zero;  // A_0(axis)
  Subspace half;  // A_{1/2}(axis)
};

struct Decomposition {
  Scalar alpha;   // (a,x)
  Element x0;     // component in A_0(a)
  Element xhalf;  // component in A_{1/2}(a)
};

struct OrthogonalityViolation {
  std::string spaces;  // e.g. "a/zero", "zero/half"
  std::size_t i, j;
  Scalar value;
};
struct OrthogonalityReport {
  bool pass = false;
  std::vector<OrthogonalityViolation> violations;
};

// Q_c(x) = c(cx) - (1/2)(cx + (c,x)c)
Element q_c(const Element& c, const Element& x);
// P_c(x,y) = 4(cx)(cy) - (c,y)cx - (cy)x - (c,x)cy - (cx)y - (c,xy)c + c(xy)
Element p_c(const Element& c, const Element& x, const Element& y);

Subspace eigenspace(const Element& z, const Scalar& lambda);

// Full certification: idempotency, spectrum contained in {1,0,1/2} with a
// 1-dimensional 1-eigenspace, (c,c)=1, direct sum, fusion rules.  Throws
// NotAnAxis naming the first violated clause.
AxisCertificate verify_axis(const Element& c);
// Q-route: (c,c)=1 and Q_c vanishes on the basis.  Requires c idempotent.
bool verify_axis_via_q(const Element& c);
// P-route: P_c vanishes on all basis pairs.  Requires c idempotent, (c,c)=1.
bool verify_axis_via_p(const Element& c);

// Closed-form eigenprojections: x0 = x - 2ax + (a,x)a, xhalf = 2ax - 2(a,x)a.
Decomposition decompose(const AxisCertificate& cert, const Element& x);

// Involution fixing Fa + A0(a) and negating A_{1/2}(a): x -> x - 4ax + 4(a,x)a.
Mat miyamoto(const AxisCertificate& cert);

// Residual a(xy) - (ax)y; y must lie in Fa + A0(a).
Element check_seress(const AxisCertificate& cert, const Element& x, const Element& y);

// (u,v) = 0 for basis vectors u,v of distinct eigenspaces among {Fa, A0, Ahalf}.
OrthogonalityReport check_orthogonality(const AxisCertificate& cert);

}  // namespace axial
