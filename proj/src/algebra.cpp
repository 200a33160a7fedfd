#include "axial/algebra.hpp"

#include <sstream>

namespace axial {

Algebra::Algebra(FieldSpec field, std::size_t dim, std::vector<Scalar> mult, Mat gram)
    : field_(field), dim_(dim), mult_(std::move(mult)), gram_(std::move(gram)) {}

AlgebraRef Algebra::create(FieldSpec field, std::size_t dim,
                           std::vector<Scalar> mult, Mat gram) {
  if (dim == 0) throw Error(Error::Cat::Precondition, "dimension must be positive");
  if (mult.size() != dim * dim * dim)
    throw Error(Error::Cat::Precondition, "structure tensor has wrong size");
  if (gram.rows != dim || gram.cols != dim)
    throw Error(Error::Cat::Precondition, "Gram matrix has wrong size");
  AlgebraRef a(new Algebra(field, dim, std::move(mult), std::move(gram)));
  a->validate();
  return a;
}

void Algebra::validate() const {
  const Field& f = field_;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (c(i, j, k) != c(j, i, k)) throw NotCommutative(i, j, k);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (gram_.at(i, j) != gram_.at(j, i)) throw GramNotSymmetric(i, j);
  // (e_i e_j, e_k) == (e_i, e_j e_k) on all basis triples; by trilinearity
  // this pins the Frobenius property on the whole algebra.
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        Scalar lhs = f.zero(), rhs = f.zero();
        for (std::size_t m = 0; m < dim_; ++m) {
          lhs = f.add(lhs, f.mul(c(i, j, m), gram_.at(m, k)));
          rhs = f.add(rhs, f.mul(c(j, k, m), gram_.at(i, m)));
        }
        if (lhs != rhs) throw NotFrobenius(i, j, k);
      }
}

Element Algebra::zero() const {
  return Element{shared_from_this(), Vec(dim_, field_.zero())};
}

Element Algebra::basis_element(std::size_t i) const {
  Element e = zero();
  e.coords[i] = field_.one();
  return e;
}

Element Algebra::element(Vec coords) const {
  if (coords.size() != dim_)
    throw Error(Error::Cat::Precondition, "coordinate vector has wrong length");
  return Element{shared_from_this(), std::move(coords)};
}

void require_same_algebra(const Element& x, const Element& y) {
  if (x.algebra != y.algebra) throw AlgebraMismatch();
}

Element multiply(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  const Algebra& A = *x.algebra;
  const Field& f = A.field();
  Vec r(A.dim(), f.zero());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (f.is_zero(x.coords[i])) continue;
    for (std::size_t j = 0; j < A.dim(); ++j) {
      if (f.is_zero(y.coords[j])) continue;
      Scalar xy = f.mul(x.coords[i], y.coords[j]);
      for (std::size_t k = 0; k < A.dim(); ++k)
        r[k] = f.add(r[k], f.mul(xy, A.c(i, j, k)));
    }
  }
  return Element{x.algebra, std::move(r)};
}

Scalar form(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  const Algebra& A = *x.algebra;
  const Field& f = A.field();
  Scalar s = f.zero();
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (f.is_zero(x.coords[i])) continue;
    for (std::size_t j = 0; j < A.dim(); ++j)
      s = f.add(s, f.mul(f.mul(x.coords[i], y.coords[j]), A.gram().at(i, j)));
  }
  return s;
}

Element add(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  return Element{x.algebra, vec_add(x.algebra->field(), x.coords, y.coords)};
}

Element sub(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  return Element{x.algebra, vec_sub(x.algebra->field(), x.coords, y.coords)};
}

Element scale(const Scalar& c, const Element& x) {
  return Element{x.algebra, vec_scale(x.algebra->field(), c, x.coords)};
}

Element negate(const Element& x) {
  return scale(x.algebra->field().from_long(-1), x);
}

bool is_zero(const Element& x) { return vec_is_zero(x.algebra->field(), x.coords); }

bool equal(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  return x.coords == y.coords;
}

std::string to_string(const Element& x) {
  const Field& f = x.algebra->field();
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) os << ", ";
    os << f.to_string(x.coords[i]);
  }
  os << ")";
  return os.str();
}

Mat left_mul_matrix(const Element& x) {
  const Algebra& A = *x.algebra;
  Mat m(A.dim(), A.dim());
  for (std::size_t j = 0; j < A.dim(); ++j) {
    Element col = multiply(x, A.basis_element(j));
    for (std::size_t i = 0; i < A.dim(); ++i) m.at(i, j) = col.coords[i];
  }
  return m;
}

Mat commutator_leftmul(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  const Field& f = x.algebra->field();
  Mat lx = left_mul_matrix(x), ly = left_mul_matrix(y);
  return mat_sub(f, mat_mul(f, lx, ly), mat_mul(f, ly, lx));
}

Element apply(const Mat& m, const Element& x) {
  return Element{x.algebra, mat_vec(x.algebra->field(), m, x.coords)};
}

DerivationReport is_derivation(const AlgebraRef& A, const Mat& D) {
  DerivationReport rep;
  for (std::size_t i = 0; i < A->dim(); ++i)
    for (std::size_t j = i; j < A->dim(); ++j) {
      Element ei = A->basis_element(i), ej = A->basis_element(j);
      Element lhs = apply(D, multiply(ei, ej));
      Element rhs = add(multiply(ei, apply(D, ej)), multiply(apply(D, ei), ej));
      Element res = sub(lhs, rhs);
      if (!is_zero(res)) rep.failures.push_back({i, j, res});
    }
  rep.pass = rep.failures.empty();
  return rep;
}

AutomorphismReport is_automorphism(const AlgebraRef& A, const Mat& M) {
  AutomorphismReport rep;
  rep.invertible = rank(A->field(), M) == A->dim();
  for (std::size_t i = 0; i < A->dim(); ++i)
    for (std::size_t j = i; j < A->dim(); ++j) {
      Element ei = A->basis_element(i), ej = A->basis_element(j);
      Element res = sub(apply(M, multiply(ei, ej)),
                        multiply(apply(M, ei), apply(M, ej)));
      if (!is_zero(res)) rep.failures.push_back({i, j, res});
    }
  rep.pass = rep.invertible && rep.failures.empty();
  return rep;
}

Subspace nullspace_subspace(const AlgebraRef& A, const Mat& m) {
  Subspace s;
  for (Vec& v : nullspace(A->field(), m)) s.basis.push_back(A->element(std::move(v)));
  return s;
}

Subspace radical(const AlgebraRef& A) { return nullspace_subspace(A, A->gram()); }

bool in_span(const Subspace& s, const Element& x) {
  if (is_zero(x)) return true;
  if (s.basis.empty()) return false;
  const Field& f = x.algebra->field();
  std::size_t n = x.coords.size();
  Mat m(n, s.basis.size());
  for (std::size_t j = 0; j < s.basis.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = s.basis[j].coords[i];
  Vec sol;
  return solve(f, m, x.coords, sol);
}

}  // namespace axial
