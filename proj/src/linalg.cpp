#include "axial/linalg.hpp"

namespace axial {

Mat mat_identity(const Field& f, std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = i == j ? f.one() : f.zero();
  return m;
}

Mat mat_add(const Field& f, const Mat& x, const Mat& y) {
  Mat r(x.rows, x.cols);
  for (std::size_t k = 0; k < x.a.size(); ++k) r.a[k] = f.add(x.a[k], y.a[k]);
  return r;
}

Mat mat_sub(const Field& f, const Mat& x, const Mat& y) {
  Mat r(x.rows, x.cols);
  for (std::size_t k = 0; k < x.a.size(); ++k) r.a[k] = f.sub(x.a[k], y.a[k]);
  return r;
}

Mat mat_mul(const Field& f, const Mat& x, const Mat& y) {
  Mat r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < y.cols; ++j) {
      Scalar s = f.zero();
      for (std::size_t k = 0; k < x.cols; ++k)
        s = f.add(s, f.mul(x.at(i, k), y.at(k, j)));
      r.at(i, j) = s;
    }
  return r;
}

Mat mat_scale(const Field& f, const Scalar& c, const Mat& x) {
  Mat r(x.rows, x.cols);
  for (std::size_t k = 0; k < x.a.size(); ++k) r.a[k] = f.mul(c, x.a[k]);
  return r;
}

Vec mat_vec(const Field& f, const Mat& m, const Vec& v) {
  Vec r(m.rows, f.zero());
  for (std::size_t i = 0; i < m.rows; ++i) {
    Scalar s = f.zero();
    for (std::size_t j = 0; j < m.cols; ++j) s = f.add(s, f.mul(m.at(i, j), v[j]));
    r[i] = s;
  }
  return r;
}

bool mat_is_zero(const Field& f, const Mat& m) {
  for (const auto& s : m.a)
    if (!f.is_zero(s)) return false;
  return true;
}

bool mat_equal(const Mat& x, const Mat& y) {
  return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

Vec vec_add(const Field& f, const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.add(x[i], y[i]);
  return r;
}

Vec vec_sub(const Field& f, const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.sub(x[i], y[i]);
  return r;
}

Vec vec_scale(const Field& f, const Scalar& c, const Vec& x) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.mul(c, x[i]);
  return r;
}

bool vec_is_zero(const Field& f, const Vec& x) {
  for (const auto& s : x)
    if (!f.is_zero(s)) return false;
  return true;
}

std::vector<std::size_t> rref(const Field& f, Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t piv = row;
    while (piv < m.rows && f.is_zero(m.at(piv, col))) ++piv;
    if (piv == m.rows) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    Scalar iv = f.inv(m.at(row, col));
    for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = f.mul(iv, m.at(row, j));
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || f.is_zero(m.at(i, col))) continue;
      Scalar c = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const Field& f, Mat m) { return rref(f, m).size(); }

std::vector<Vec> nullspace(const Field& f, const Mat& m) {
  Mat r = m;
  std::vector<std::size_t> pivots = rref(f, r);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols, f.zero());
    v[free] = f.one();
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = f.neg(r.at(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve(const Field& f, const Mat& m, const Vec& b, Vec& x) {
  Mat aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<std::size_t> pivots = rref(f, aug);
  if (!pivots.empty() && pivots.back() == m.cols) return false;
  x.assign(m.cols, f.zero());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, m.cols);
  return true;
}

}  // namespace axial
