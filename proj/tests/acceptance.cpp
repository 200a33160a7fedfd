// Acceptance gate: one pass/fail line per criterion, exit 1 on any failure.
// Every check is exact field arithmetic; there are no tolerances to tune.
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "axial/catalog.hpp"
#include "axial/constructions.hpp"
#include "test_util.hpp"

using namespace axial;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const char* kLambdas[] = {"0", "1/2", "1/4", "1/3", "2/5", "-1", "3"};

struct PairCase {
  std::string name;
  AxisPair pair;
};

AxisPair pair_of(const Fixture& fx) {
  return make_axis_pair(verify_axis(*fx.a), verify_axis(*fx.b));
}

AxisPair pair_of(const Fixture& fx, std::size_t i, std::size_t j) {
  return make_axis_pair(verify_axis(fx.algebra->basis_element(i)),
                        verify_axis(fx.algebra->basis_element(j)));
}

// 7 prescribed-lambda pairs, the lambda=1 pair, and one Matsuo pair each at
// lambda = 1/4 (collinear) and lambda = 0 (non-collinear).
const std::vector<PairCase>& pairs() {
  static std::vector<PairCase> cases = [] {
    std::vector<PairCase> out;
    for (const char* lam : kLambdas) {
      std::string name = std::string("spin:") + lam;
      out.push_back({name, pair_of(fixture_by_name(name, Q))});
    }
    out.push_back({"lambda-one", pair_of(fixture_by_name("lambda-one", Q))});
    out.push_back({"matsuo:S3(0,1)", pair_of(fixture_by_name("matsuo:S3", Q), 0, 1)});
    out.push_back({"matsuo:S4(0,5)", pair_of(fixture_by_name("matsuo:S4", Q), 0, 5)});
    return out;
  }();
  return cases;
}

bool is_quarter(const AxisPair& p) {
  return p.lambda == p.algebra->field().from_fraction(1, 4);
}
bool is_one(const AxisPair& p) { return p.lambda == p.algebra->field().one(); }

// dim 2: e0 idempotent, (e0,e0)=1, but L_{e0} has eigenvalue 1/3.
AlgebraRef third_eigenvalue_fixture() {
  Field f(Q);
  std::vector<Scalar> mult(8, f.zero());
  mult[0] = f.one();
  mult[(0 * 2 + 1) * 2 + 1] = f.from_fraction(1, 3);
  mult[(1 * 2 + 0) * 2 + 1] = f.from_fraction(1, 3);
  Mat g(2, 2);
  for (auto& e : g.a) e = f.zero();
  g.at(0, 0) = f.one();
  return new_algebra(Q, 2, std::move(mult), std::move(g));
}

// dim 1 idempotent with (e0,e0)=2.
AlgebraRef heavy_point_fixture() {
  Field f(Q);
  Mat g(1, 1);
  g.at(0, 0) = f.from_long(2);
  return new_algebra(Q, 1, {f.one()}, g);
}

int run_cli(const std::string& args) {
  std::string cmd = std::string("'") + AXIAL_CLI_PATH + "' " + args +
                    " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int failures = 0;

void criterion(int n, std::string desc, const std::function<bool(std::string&)>& fn) {
  bool ok = false;
  try {
    ok = fn(desc);
  } catch (const std::exception& e) {
    desc += std::string(" (exception: ") + e.what() + ")";
    ok = false;
  }
  std::printf("criterion %d: %s - %s\n", n, ok ? "PASS" : "FAIL", desc.c_str());
  if (!ok) ++failures;
}

bool all_pass(const AxisPair& p, const char* filter, std::string& desc) {
  auto reports = run_suite(p, Tier::Extended, filter);
  for (const auto& r : reports)
    if (!r.applicable || !r.failures.empty()) {
      desc += std::string(" [") + r.id + (r.applicable ? " failed" : " skipped") + "]";
      return false;
    }
  return !reports.empty();
}

}  // namespace

int main() {
  criterion(1, "prescribed-lambda pairs certify exactly with zero sanity residuals",
            [](std::string& desc) {
              bool ok = true;
              for (std::size_t i = 0; i < std::size(kLambdas); ++i) {
                const char* lam = kLambdas[i];
                const AxisPair& p = pairs()[i].pair;
                if (p.lambda != scalar_parse(lam, Q)) {
                  desc += std::string(" [lambda mismatch at ") + lam + "]";
                  ok = false;
                }
                for (const char* id : {"Q.3a", "Q.3b", "Q.3c", "Q.3d", "Q.3e"})
                  if (!check_identity(p, id).pass()) {
                    desc += std::string(" [") + id + " at " + lam + "]";
                    ok = false;
                  }
              }
              return ok;
            });

  criterion(2, "SI.1-SI.8 vanish over full eigenbases on every pair",
            [](std::string& desc) {
              bool ok = true;
              for (const auto& c : pairs())
                if (!all_pass(c.pair, "SI.", desc)) {
                  desc += " at " + c.name;
                  ok = false;
                }
              return ok;
            });

  criterion(3, "T0012 vanishes off lambda=1/4 and is skipped there",
            [](std::string& desc) {
              bool ok = true;
              for (const auto& c : pairs()) {
                IdentityReport r = check_identity(c.pair, "T0012");
                bool good = is_quarter(c.pair) ? !r.applicable : r.pass();
                if (!good) {
                  desc += " [" + c.name + "]";
                  ok = false;
                }
              }
              return ok;
            });

  criterion(4,
            "T121212/T120 vanish off lambda in {1,1/4}; the axis commutator is "
            "a derivation there",
            [](std::string& desc) {
              bool ok = true;
              for (const auto& c : pairs()) {
                bool excluded = is_quarter(c.pair) || is_one(c.pair);
                for (const char* id : {"T121212", "T120"}) {
                  IdentityReport r = check_identity(c.pair, id);
                  bool good = excluded ? !r.applicable : r.pass();
                  if (!good) {
                    desc += std::string(" [") + id + " at " + c.name + "]";
                    ok = false;
                  }
                }
                if (!excluded) {
                  Mat d = commutator_leftmul(c.pair.cert_a.axis, c.pair.cert_b.axis);
                  if (!is_derivation(c.pair.algebra, d).pass) {
                    desc += " [not a derivation at " + c.name + "]";
                    ok = false;
                  }
                }
              }
              return ok;
            });

  criterion(5, "Leibniz verdict coincides with the three bracket shapes everywhere",
            [](std::string& desc) {
              bool ok = true;
              for (const auto& c : pairs()) {
                DerivationCriterionReport r = check_derivation_criterion(c.pair);
                if (!r.equivalent()) {
                  desc += " [" + c.name + "]";
                  ok = false;
                }
                if (is_quarter(c.pair))
                  desc += " (" + c.name + " at lambda=1/4: commutator " +
                          (r.commutator_is_derivation ? "is" : "is not") +
                          " a derivation)";
              }
              return ok;
            });

  criterion(6, "Q-route, P-route, and direct certification agree on every probe",
            [](std::string& desc) {
              auto direct = [](const Element& c) {
                try {
                  verify_axis(c);
                  return true;
                } catch (const NotAnAxis&) {
                  return false;
                }
              };
              auto route = [](bool (*r)(const Element&), const Element& c) {
                try {
                  return r(c);
                } catch (const NotIdempotent&) {
                  return false;
                } catch (const FormNotOne&) {
                  return false;
                }
              };

              std::vector<std::pair<std::string, Element>> probes;
              for (const auto& c : pairs()) {
                probes.emplace_back(c.name + " a", c.pair.cert_a.axis);
                probes.emplace_back(c.name + " b", c.pair.cert_b.axis);
              }
              Fixture s3 = fixture_by_name("matsuo:S3", Q);
              for (std::size_t i = 0; i < 3; ++i)
                probes.emplace_back("matsuo:S3 p" + std::to_string(i),
                                    s3.algebra->basis_element(i));
              Fixture s4 = fixture_by_name("matsuo:S4", Q);
              for (std::size_t i = 0; i < 6; ++i)
                probes.emplace_back("matsuo:S4 p" + std::to_string(i),
                                    s4.algebra->basis_element(i));
              Fixture sp = fixture_by_name("split", Q);
              probes.emplace_back("split e0", sp.algebra->basis_element(0));

              std::vector<std::pair<std::string, Element>> non_axes;
              non_axes.emplace_back("split e0+e1",
                                    add(sp.algebra->basis_element(0),
                                        sp.algebra->basis_element(1)));
              non_axes.emplace_back("third-eigenvalue e0",
                                    third_eigenvalue_fixture()->basis_element(0));
              non_axes.emplace_back("heavy point e0",
                                    heavy_point_fixture()->basis_element(0));
              Fixture spin = fixture_by_name("spin:1/2", Q);
              non_axes.emplace_back("spin unit", spin.algebra->basis_element(0));

              bool ok = probes.size() + non_axes.size() >= 8;
              for (const auto& [name, c] : probes) {
                bool d = direct(c), q = route(&verify_axis_via_q, c),
                     p = route(&verify_axis_via_p, c);
                if (!(d && q && p)) {
                  desc += " [expected axis: " + name + "]";
                  ok = false;
                }
              }
              for (const auto& [name, c] : non_axes) {
                bool d = direct(c), q = route(&verify_axis_via_q, c),
                     p = route(&verify_axis_via_p, c);
                if (d || q || p) {
                  desc += " [expected non-axis: " + name + "]";
                  ok = false;
                }
              }
              return ok;
            });

  criterion(7, "lambda=1 family passes over Q and GF(5); char-3 exclusions honored",
            [](std::string& desc) {
              bool ok = true;
              auto check = [&](const FieldSpec& field, bool char3) {
                AxisPair p = pair_of(fixture_by_name("lambda-one", field));
                if (!check_identity(p, "T.AB12.1").pass()) {
                  desc += " [T.AB12.1]";
                  ok = false;
                }
                for (const char* id : {"T.AB12.2i", "T.AB12.2ii"}) {
                  IdentityReport r = check_identity(p, id);
                  if (char3 ? r.applicable : !r.pass()) {
                    desc += std::string(" [") + id + "]";
                    ok = false;
                  }
                }
              };
              check(Q, false);
              check(FieldSpec::prime_field(5), false);
              check(FieldSpec::prime_field(3), true);
              return ok;
            });

  criterion(8, "Miyamoto maps are involutive automorphisms, trivial iff half part is 0",
            [](std::string& desc) {
              std::vector<std::pair<std::string, AxisCertificate>> certs;
              for (const auto& c : pairs()) {
                certs.emplace_back(c.name + " a", c.pair.cert_a);
                certs.emplace_back(c.name + " b", c.pair.cert_b);
              }
              Fixture sp = fixture_by_name("split", Q);
              certs.emplace_back("split e0", verify_axis(sp.algebra->basis_element(0)));

              bool ok = true;
              for (const auto& [name, cert] : certs) {
                const Field& f = cert.axis.algebra->field();
                std::size_t n = cert.axis.algebra->dim();
                Mat tau = miyamoto(cert);
                bool good = is_automorphism(cert.axis.algebra, tau).pass &&
                            mat_equal(mat_mul(f, tau, tau), mat_identity(f, n)) &&
                            (mat_equal(tau, mat_identity(f, n)) == (cert.half.dim() == 0));
                if (!good) {
                  desc += " [" + name + "]";
                  ok = false;
                }
              }
              return ok;
            });

  criterion(9, "orthogonality reports empty; Seress and reconstruction exact on samples",
            [](std::string& desc) {
              testutil::SplitMix64 rng(0x5eed5eed);
              bool ok = true;
              for (const auto& c : pairs()) {
                const AxisCertificate& cert = c.pair.cert_a;
                const AlgebraRef& A = c.pair.algebra;
                const Field& f = A->field();
                OrthogonalityReport orep = check_orthogonality(cert);
                if (!orep.pass) {
                  desc += " [orthogonality at " + c.name + "]";
                  ok = false;
                }
                for (int t = 0; t < 100; ++t) {
                  Element x = testutil::random_element(rng, A);
                  Element y = scale(testutil::random_scalar(rng, f), cert.axis);
                  for (const Element& z : cert.zero.basis)
                    y = add(y, scale(testutil::random_scalar(rng, f), z));
                  if (!is_zero(check_seress(cert, x, y))) {
                    desc += " [seress at " + c.name + "]";
                    ok = false;
                    break;
                  }
                }
                for (int t = 0; t < 100; ++t) {
                  Element x = testutil::random_element(rng, A);
                  Decomposition d = decompose(cert, x);
                  Element back = add(scale(d.alpha, cert.axis), add(d.x0, d.xhalf));
                  bool good = equal(back, x) && is_zero(multiply(cert.axis, d.x0)) &&
                              equal(multiply(cert.axis, d.xhalf),
                                    scale(f.half(), d.xhalf));
                  if (!good) {
                    desc += " [reconstruction at " + c.name + "]";
                    ok = false;
                    break;
                  }
                }
              }
              return ok;
            });

  criterion(10, "mandatory suite exits 0 on designated fixtures; extended passes "
                "wherever applicable",
            [](std::string& desc) {
              bool ok = true;
              for (const char* args :
                   {"suite --fixture spin:0", "suite --fixture spin:1/3",
                    "suite --fixture spin:1/2", "suite --fixture spin:2/5",
                    "suite --fixture matsuo:S4 --a 0 --b 5",
                    "suite --fixture lambda-one"}) {
                int code = run_cli(args);
                if (code != 0) {
                  desc += std::string(" [exit ") + std::to_string(code) + ": " + args + "]";
                  ok = false;
                }
              }
              for (const auto& c : pairs())
                if (!suite_pass(run_suite(c.pair, Tier::Extended))) {
                  desc += " [extended at " + c.name + "]";
                  ok = false;
                }
              return ok;
            });

  criterion(11, "algebra files round-trip; a Frobenius-violating file is rejected",
            [](std::string& desc) {
              bool ok = true;
              std::vector<std::string> names = {"lambda-one", "matsuo:S3",
                                                "matsuo:S4", "split"};
              for (const char* lam : kLambdas) names.push_back(std::string("spin:") + lam);
              for (const std::string& name : names) {
                AlgebraRef A = fixture_by_name(name, Q).algebra;
                AlgebraRef B = load_algebra_text(algebra_to_text(A));
                bool same = B->dim() == A->dim() && B->field_spec() == A->field_spec();
                for (std::size_t i = 0; same && i < A->dim(); ++i)
                  for (std::size_t j = 0; same && j < A->dim(); ++j) {
                    if (B->gram().at(i, j) != A->gram().at(i, j)) same = false;
                    for (std::size_t k = 0; same && k < A->dim(); ++k)
                      if (B->c(i, j, k) != A->c(i, j, k)) same = false;
                  }
                std::string path = "acceptance_roundtrip.alg";
                save_algebra(A, path);
                AlgebraRef C = load_algebra(path);
                std::remove(path.c_str());
                if (!same || algebra_to_text(C) != algebra_to_text(A)) {
                  desc += " [round trip: " + name + "]";
                  ok = false;
                }
              }
              try {
                load_algebra_text(
                    "field Q\ndim 2\nmult 0 0 0 1\nmult 1 1 1 1\n"
                    "form 0 0 1\nform 0 1 1\nform 1 1 1\n");
                desc += " [Frobenius violation accepted]";
                ok = false;
              } catch (const NotFrobenius&) {
              }
              return ok;
            });

  return failures == 0 ? 0 : 1;
}
