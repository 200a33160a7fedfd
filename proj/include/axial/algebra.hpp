#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "axial/field.hpp"
#include "axial/linalg.hpp"

namespace axial {

struct NotCommutative : Error {
  std::size_t i, j, k;
  NotCommutative(std::size_t i_, std::size_t j_, std::size_t k_)
      : Error(Cat::Math, "structure constants not commutative at (" +
                             std::to_string(i_) + "," + std::to_string(j_) + "," +
                             std::to_string(k_) + ")"),
        i(i_), j(j_), k(k_) {}
};
struct GramNotSymmetric : Error {
  std::size_t i, j;
  GramNotSymmetric(std::size_t i_, std::size_t j_)
      : Error(Cat::Math, "Gram matrix not symmetric at (" + std::to_string(i_) +
                             "," + std::to_string(j_) + ")"),
        i(i_), j(j_) {}
};
struct NotFrobenius : Error {
  std::size_t i, j, k;
  NotFrobenius(std::size_t i_, std::size_t j_, std::size_t k_)
      : Error(Cat::Math, "form is not Frobenius at (" + std::to_string(i_) + "," +
                             std::to_string(j_) + "," + std::to_string(k_) + ")"),
        i(i_), j(j_), k(k_) {}
};
struct AlgebraMismatch : Error {
  AlgebraMismatch() : Error(Cat::Precondition, "elements of different algebras") {}
};

class Algebra;
using AlgebraRef = std::shared_ptr<const Algebra>;

struct Element {
  AlgebraRef algebra;
  Vec coords;
};

// Basis of a subspace; vectors are linearly independent by construction.
struct Subspace {
  std::vector<Element> basis;
  std::size_t dim() const { return basis.size(); }
};

struct LeibnizFailure {
  std::size_t i, j;
  Element residual;
};
struct DerivationReport {
  bool pass = false;
  std::vector<LeibnizFailure> failures;
};
struct AutomorphismReport {
  bool pass = false;
  bool invertible = false;
  std::vector<LeibnizFailure> failures;  // residual M(e_i e_j) - M(e_i)M(e_j)
};

// Commutative algebra with a Frobenius form, given by structure constants
// e_i e_j = sum_k c[i][j][k] e_k and Gram matrix G[i][j] = (e_i, e_j).
// Invariants (checked at construction): c symmetric in i,j; G symmetric;
// (e_i e_j, e_k) = (e_i, e_j e_k) for all basis triples.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  static AlgebraRef create(FieldSpec field, std::size_t dim,
                           std::vector<Scalar> mult, Mat gram);

  const Field& field() const { return field_; }
  const FieldSpec& field_spec() const { return field_.spec(); }
  std::size_t dim() const { return dim_; }
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return mult_[(i * dim_ + j) * dim_ + k];
  }
  const Mat& gram() const { return gram_; }

  Element zero() const;
  Element basis_element(std::size_t i) const;
  Element element(Vec coords) const;

 private:
  Algebra(FieldSpec field, std::size_t dim, std::vector<Scalar> mult, Mat gram);
  void validate() const;

  Field field_;
  std::size_t dim_;
  std::vector<Scalar> mult_;
  Mat gram_;
};

inline AlgebraRef new_algebra(FieldSpec field, std::size_t dim,
                              std::vector<Scalar> mult, Mat gram) {
  return Algebra::create(field, dim, std::move(mult), std::move(gram));
}

void require_same_algebra(const Element& x, const Element& y);

Element multiply(const Element& x, const Element& y);
Scalar form(const Element& x, const Element& y);
Element add(const Element& x, const Element& y);
Element sub(const Element& x, const Element& y);
Element scale(const Scalar& c, const Element& x);
Element negate(const Element& x);
bool is_zero(const Element& x);
bool equal(const Element& x, const Element& y);
std::string to_string(const Element& x);

Mat left_mul_matrix(const Element& x);
Mat commutator_leftmul(const Element& x, const Element& y);
// Applies a matrix in the given algebra's basis to an element.
Element apply(const Mat& m, const Element& x);

DerivationReport is_derivation(const AlgebraRef& A, const Mat& D);
AutomorphismReport is_automorphism(const AlgebraRef& A, const Mat& M);

Subspace nullspace_subspace(const AlgebraRef& A, const Mat& m);
Subspace radical(const AlgebraRef& A);

// Membership of x in span(S.basis), by exact linear solve.
bool in_span(const Subspace& s, const Element& x);

// --- algebra text file format (see README) ---
// line 1: `field Q` | `field GF <p>`; line 2: `dim <n>`;
// then `mult <i> <j> <k> <scalar>` (0 <= i <= j < n, mirrored) and
// `form <i> <j> <scalar>` lines; '#' starts a comment.
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& msg)
      : Error(Cat::Parse, "line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

AlgebraRef load_algebra(const std::string& path);
AlgebraRef load_algebra_text(const std::string& text);
void save_algebra(const AlgebraRef& A, const std::string& path);
std::string algebra_to_text(const AlgebraRef& A);

}  // namespace axial
