#pragma once

#include <cstddef>
#include <vector>

#include "axial/field.hpp"

namespace axial {

using Vec = std::vector<Scalar>;

// Dense row-major matrix of Scalars (square in all algebra uses, but the
// elimination routines accept any shape).
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<Scalar> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Scalar& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

Mat mat_identity(const Field& f, std::size_t n);
Mat mat_add(const Field& f, const Mat& x, const Mat& y);
Mat mat_sub(const Field& f, const Mat& x, const Mat& y);
Mat mat_mul(const Field& f, const Mat& x, const Mat& y);
Mat mat_scale(const Field& f, const Scalar& c, const Mat& x);
Vec mat_vec(const Field& f, const Mat& m, const Vec& v);
bool mat_is_zero(const Field& f, const Mat& m);
bool mat_equal(const Mat& x, const Mat& y);

Vec vec_add(const Field& f, const Vec& x, const Vec& y);
Vec vec_sub(const Field& f, const Vec& x, const Vec& y);
Vec vec_scale(const Field& f, const Scalar& c, const Vec& x);
bool vec_is_zero(const Field& f, const Vec& x);

// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref(const Field& f, Mat& m);
std::size_t rank(const Field& f, Mat m);
// Basis of {v : Mv = 0}; exact, deterministic (one vector per free column).
std::vector<Vec> nullspace(const Field& f, const Mat& m);
// Solves Mx = b; false if inconsistent.  Used for membership tests.
bool solve(const Field& f, const Mat& m, const Vec& b, Vec& x);

}  // namespace axial
