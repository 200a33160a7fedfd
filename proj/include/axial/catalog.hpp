#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "axial/axis.hpp"

namespace axial {

struct UnknownIdentity : Error {
  explicit UnknownIdentity(const std::string& id)
      : Error(Cat::Precondition, "unknown identity id: " + id) {}
};

// Two certified axes a, b of one algebra, with lambda = (a,b) and the
// decomposition b = lambda*a + b0 + bhalf relative to a.  Construction
// re-checks the standard sanity identities of that decomposition
// (b0^2 = (1-L)b0, (bh^2)_0 = L*b0, bh*b0 = 1/2(1-L)bh,
// bh^2 = L(1-L)a + L*b0, (b,bh) = 2L(1-L), (b,b0) = (1-L)^2) and throws
// Error(Cat::Math) if any fails.
struct AxisPair {
  AlgebraRef algebra;
  AxisCertificate cert_a;
  AxisCertificate cert_b;
  Scalar lambda;
  Element b0;
  Element bhalf;
};

AxisPair make_axis_pair(const AxisCertificate& cert_a, const AxisCertificate& cert_b);

// A slot is one universally quantified variable of an identity.  The prefix
// is positional (1st = X, 2nd = Y, 3rd = Z); the suffix names the eigenspace
// of cert_a the variable ranges over: A_0, A_{1/2}, or the whole algebra.
enum class Slot {
  X0, XHalf, XFull,
  Y0, YHalf, YFull,
  Z0, ZHalf, ZFull,
};

enum class SlotSpace { Zero, Half, Full };

SlotSpace slot_space(Slot s);
const char* slot_name(Slot s);

enum class Tier { Mandatory, Extended };

// One displayed identity: a residual evaluator plus its hypotheses.
// `statement` is an ASCII rendering (L = (a,b); b0/bh = parts of b;
// P0/Ph = projections to A_0(a)/A_{1/2}(a); <x,y> = form).  `eval` returns
// one residual per equality in the display, each of which must be zero;
// every evaluator is multilinear in the slot variables, so checking all
// eigenbasis tuples proves the identity on the whole space.
struct IdentityDescriptor {
  std::string id;
  std::string statement;
  std::vector<Slot> slots;
  Tier tier = Tier::Mandatory;
  std::function<bool(const AxisPair&)> applicable;
  std::function<std::vector<Element>(const AxisPair&, const std::vector<Element>&)> eval;
};

struct IdentityFailure {
  std::vector<Element> tuple;  // slot assignment that produced the residual
  std::size_t residual_index = 0;
  Element residual;
};

struct IdentityReport {
  std::string id;
  bool applicable = false;
  std::size_t checked_tuples = 0;
  std::vector<IdentityFailure> failures;
  bool pass() const { return applicable && failures.empty(); }
};

// Full catalog in fixed registration order.
const std::vector<IdentityDescriptor>& list_identities();
const IdentityDescriptor& identity_by_id(const std::string& id);  // UnknownIdentity

// Skips (applicable=false) when the pair violates the identity's hypotheses;
// otherwise evaluates every eigenbasis tuple for the slots.
IdentityReport check_identity(const AxisPair& pair, const IdentityDescriptor& ident);
IdentityReport check_identity(const AxisPair& pair, const std::string& id);

// Runs the catalog in order.  Tier::Mandatory runs mandatory entries only;
// Tier::Extended runs everything.  A non-empty filter keeps ids with that
// prefix.  Aggregate pass = every applicable report passes.
std::vector<IdentityReport> run_suite(const AxisPair& pair, Tier tier = Tier::Mandatory,
                                      const std::string& filter = "");
bool suite_pass(const std::vector<IdentityReport>& reports);

// One line per report:
// <id>\t<APPLICABLE|SKIPPED>\t<PASS|FAIL>\t<checked_tuples>\t<failure_count>
std::string suite_report_tsv(const std::vector<IdentityReport>& reports);

// Equivalence: [L_a,L_b] is a derivation  iff  the three bracket shapes hold:
//   (a) bh(x0*y0) = (bh*x0)y0 + (bh*y0)x0           on A_0 x A_0
//   (b) P0(bh(xh*y0)) = (bh*xh)y0 - P0((bh*y0)xh)   on A_{1/2} x A_0
//   (c) bh(xh*yh) + (bh*xh)yh + (bh*yh)xh
//         = 1/2<b,yh>xh + 1/2<b,xh>yh + <a,xh*yh>bh on A_{1/2} x A_{1/2}
// The shapes are evaluated with no hypothesis on lambda; the report records
// both verdicts so callers can assert the equivalence itself.
struct DerivationCriterionReport {
  bool commutator_is_derivation = false;
  bool shape_a = false;
  bool shape_b = false;
  bool shape_c = false;
  bool criterion() const { return shape_a && shape_b && shape_c; }
  bool equivalent() const { return commutator_is_derivation == criterion(); }
};

DerivationCriterionReport check_derivation_criterion(const AxisPair& pair);

}  // namespace axial
