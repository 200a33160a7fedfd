#include <string>

#include "doctest.h"

#include "axial/axis.hpp"
#include "axial/constructions.hpp"
#include "test_util.hpp"

using namespace axial;

namespace {

const FieldSpec Q = FieldSpec::rationals();

// dim 2: e0 idempotent with (e0,e0)=1 but L_{e0} has eigenvalue 1/3 on e1.
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

// dim 1 idempotent with (e0,e0)=2: clean spectrum, wrong form value.
AlgebraRef heavy_point_fixture() {
  Field f(Q);
  Mat g(1, 1);
  g.at(0, 0) = f.from_long(2);
  return new_algebra(Q, 1, {f.one()}, g);
}

Element elem(const AlgebraRef& A, std::initializer_list<long> num,
             long den = 1) {
  const Field& f = A->field();
  Vec v;
  for (long n : num) v.push_back(f.from_fraction(n, den));
  return A->element(std::move(v));
}

}  // namespace

TEST_CASE("q_c closed form") {
  Fixture fx = fixture_by_name("spin:1/2", Q);
  const AlgebraRef& A = fx.algebra;
  Element a = *fx.a;
  CHECK(is_zero(q_c(a, a)));
  CHECK(is_zero(q_c(a, A->basis_element(2))));
  CHECK(is_zero(q_c(a, *fx.b)));

  Fixture sp = fixture_by_name("split", Q);
  Element c = add(sp.algebra->basis_element(0), sp.algebra->basis_element(1));
  CHECK(equal(q_c(c, sp.algebra->basis_element(0)), elem(sp.algebra, {0, -1}, 2)));
}

TEST_CASE("p_c closed form") {
  Fixture fx = fixture_by_name("spin:1/2", Q);
  Element a = *fx.a;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(is_zero(p_c(a, fx.algebra->basis_element(i), fx.algebra->basis_element(j))));

  // For any idempotent c, P_c(c,c) = 3c - 3(c,c)c.
  Fixture sp = fixture_by_name("split", Q);
  Element c = add(sp.algebra->basis_element(0), sp.algebra->basis_element(1));
  CHECK(equal(p_c(c, c, c), scale(sp.algebra->field().from_long(-3), c)));

  // For an idempotent with (c,c)=1, P_c(c,y) = 4 Q_c(y) even off the axis case.
  AlgebraRef T = third_eigenvalue_fixture();
  Element t = T->basis_element(0), y = T->basis_element(1);
  CHECK(equal(p_c(t, t, y), scale(T->field().from_long(4), q_c(t, y))));
  CHECK(equal(q_c(t, y), elem(T, {0, -1}, 18)));
  CHECK(equal(p_c(t, t, y), elem(T, {0, -2}, 9)));
}

TEST_CASE("eigenspace computation") {
  Fixture fx = fixture_by_name("spin:1/2", Q);
  const AlgebraRef& A = fx.algebra;
  const Field& f = A->field();
  Element a = *fx.a;

  CHECK(eigenspace(a, f.one()).dim() == 1);
  CHECK(eigenspace(a, f.zero()).dim() == 1);
  CHECK(eigenspace(a, f.half()).dim() == 1);
  CHECK(eigenspace(a, f.from_fraction(1, 3)).dim() == 0);
  CHECK(in_span(eigenspace(a, f.one()), a));
  CHECK(in_span(eigenspace(a, f.zero()),
                sub(A->basis_element(0), A->basis_element(1))));
  CHECK(in_span(eigenspace(a, f.half()), A->basis_element(2)));
}

TEST_CASE("verify_axis certifies the spin axis") {
  Fixture fx = fixture_by_name("spin:1/2", Q);
  AxisCertificate cert = verify_axis(*fx.a);
  CHECK(cert.zero.dim() == 1);
  CHECK(cert.half.dim() == 1);
  CHECK(in_span(cert.zero, sub(fx.algebra->basis_element(0), fx.algebra->basis_element(1))));
  CHECK(in_span(cert.half, fx.algebra->basis_element(2)));
  CHECK(equal(cert.axis, *fx.a));
}

TEST_CASE("verify_axis rejects with the first violated clause") {
  Fixture sp = fixture_by_name("split", Q);
  Element c = add(sp.algebra->basis_element(0), sp.algebra->basis_element(1));

  // L_c is the identity: the 1-eigenspace is 2-dimensional.
  try {
    verify_axis(c);
    FAIL("expected NotAnAxis");
  } catch (const NotAnAxis& e) {
    CHECK(e.clause == AxisClause::Spectrum);
    CHECK(std::string(e.what()).find("spectrum") != std::string::npos);
  }

  // Non-idempotent.
  try {
    verify_axis(scale(sp.algebra->field().from_long(2), c));
    FAIL("expected NotAnAxis");
  } catch (const NotAnAxis& e) {
    CHECK(e.clause == AxisClause::Idempotent);
  }

  // Eigenvalue outside {1, 0, 1/2}.
  try {
    verify_axis(third_eigenvalue_fixture()->basis_element(0));
    FAIL("expected NotAnAxis");
  } catch (const NotAnAxis& e) {
    CHECK(e.clause == AxisClause::Spectrum);
  }

  // Spectrum fine, (c,c) = 2.
  try {
    verify_axis(heavy_point_fixture()->basis_element(0));
    FAIL("expected NotAnAxis");
  } catch (const NotAnAxis& e) {
    CHECK(e.clause == AxisClause::FormOne);
  }

  // Zero element is not even idempotent... it is (0*0=0), but A_1 is empty.
  try {
    verify_axis(sp.algebra->zero());
    FAIL("expected NotAnAxis");
  } catch (const NotAnAxis& e) {
    CHECK(e.clause == AxisClause::Spectrum);
  }
}

TEST_CASE("split algebra: e0 is an axis with empty half part") {
  Fixture sp = fixture_by_name("split", Q);
  AxisCertificate cert = verify_axis(sp.algebra->basis_element(0));
  CHECK(cert.zero.dim() == 1);
  CHECK(cert.half.dim() == 0);
  CHECK(in_span(cert.zero, sp.algebra->basis_element(1)));
}

TEST_CASE("matsuo S4 points decompose as (1, 3, 2)") {
  Fixture fx = fixture_by_name("matsuo:S4", Q);
  for (std::size_t i = 0; i < 6; ++i) {
    AxisCertificate cert = verify_axis(fx.algebra->basis_element(i));
    CHECK(cert.zero.dim() == 3);
    CHECK(cert.half.dim() == 2);
  }
}

TEST_CASE("certification routes agree") {
  Fixture fx = fixture_by_name("spin:1/2", Q);
  CHECK(verify_axis_via_q(*fx.a));
  CHECK(verify_axis_via_p(*fx.a));
  CHECK(verify_axis_via_q(*fx.b));
  CHECK(verify_axis_via_p(*fx.b));

  AlgebraRef T = third_eigenvalue_fixture();
  CHECK(!verify_axis_via_q(T->basis_element(0)));
  CHECK(!verify_axis_via_p(T->basis_element(0)));

  AlgebraRef H = heavy_point_fixture();
  CHECK(!verify_axis_via_q(H->basis_element(0)));
  CHECK_THROWS_AS(verify_axis_via_p(H->basis_element(0)), const FormNotOne&);

  Fixture sp = fixture_by_name("split", Q);
  Element c = add(sp.algebra->basis_element(0), sp.algebra->basis_element(1));
  Element twice = scale(sp.algebra->field().from_long(2), c);
  CHECK_THROWS_AS(verify_axis_via_q(twice), const NotIdempotent&);
  CHECK_THROWS_AS(verify_axis_via_p(twice), const NotIdempotent&);
  // c itself is idempotent with (c,c)=2: Q-route reports false.
  CHECK(!verify_axis_via_q(c));
}

TEST_CASE("decompose gives exact eigencomponents") {
  Fixture fx = fixture_by_name("spin:1/2", Q);
  const AlgebraRef& A = fx.algebra;
  const Field& f = A->field();
  Element a = *fx.a, b = *fx.b;
  AxisCertificate cert = verify_axis(a);

  Decomposition d = decompose(cert, b);
  CHECK(d.alpha == f.half());
  CHECK(equal(d.x0, elem(A, {1, -1, 0}, 4)));
  CHECK(equal(d.xhalf, elem(A, {0, 0, 1}, 2)));

  Decomposition da = decompose(cert, a);
  CHECK(da.alpha == f.one());
  CHECK(is_zero(da.x0));
  CHECK(is_zero(da.xhalf));

  testutil::SplitMix64 rng(0xacce);
  for (int trial = 0; trial < 30; ++trial) {
    Element x = testutil::random_element(rng, A);
    Decomposition dx = decompose(cert, x);
    // Reconstruction, eigenvector property of each part, orthogonality to a.
    CHECK(equal(x, add(scale(dx.alpha, a), add(dx.x0, dx.xhalf))));
    CHECK(is_zero(multiply(a, dx.x0)));
    CHECK(equal(multiply(a, dx.xhalf), scale(f.half(), dx.xhalf)));
    CHECK(form(a, dx.x0) == f.zero());
    CHECK(form(a, dx.xhalf) == f.zero());
    CHECK(dx.alpha == form(a, x));
  }
}

TEST_CASE("miyamoto involution") {
  Fixture fx = fixture_by_name("spin:1/2", Q);
  const AlgebraRef& A = fx.algebra;
  const Field& f = A->field();
  AxisCertificate cert = verify_axis(*fx.a);

  Mat tau = miyamoto(cert);
  Mat expect(3, 3);
  for (auto& e : expect.a) e = f.zero();
  expect.at(0, 0) = f.one();
  expect.at(1, 1) = f.one();
  expect.at(2, 2) = f.from_long(-1);
  CHECK(mat_equal(tau, expect));
  CHECK(mat_equal(mat_mul(f, tau, tau), mat_identity(f, 3)));
  CHECK(is_automorphism(A, tau).pass);

  // Trivial half part: tau is the identity.
  Fixture sp = fixture_by_name("split", Q);
  AxisCertificate scert = verify_axis(sp.algebra->basis_element(0));
  CHECK(mat_equal(miyamoto(scert), mat_identity(f, 2)));
}

TEST_CASE("seress residual") {
  Fixture fx = fixture_by_name("spin:1/2", Q);
  const AlgebraRef& A = fx.algebra;
  AxisCertificate cert = verify_axis(*fx.a);
  Element v = A->basis_element(2);
  Element x0 = sub(A->basis_element(0), A->basis_element(1));

  CHECK(is_zero(check_seress(cert, v, x0)));
  CHECK(is_zero(check_seress(cert, v, *fx.a)));
  CHECK(is_zero(check_seress(cert, *fx.b, add(*fx.a, x0))));
  CHECK_THROWS_AS(check_seress(cert, x0, v), const YNotInZeroPart&);
}

TEST_CASE("eigenspace orthogonality") {
  for (const char* name : {"spin:1/2", "spin:1/3", "matsuo:S3", "split"}) {
    Fixture fx = fixture_by_name(name, Q);
    Element axis = fx.a ? *fx.a : fx.algebra->basis_element(0);
    OrthogonalityReport rep = check_orthogonality(verify_axis(axis));
    CHECK(rep.pass);
    CHECK(rep.violations.empty());
  }
}
