#pragma once

#include <stdexcept>
#include <vector>

#include "klie/rational.hpp"

namespace klie {

/// Dense matrix of exact rationals. Sized for the small systems that occur
/// here (root decompositions, Gram matrices, adjoint operators up to a few
/// hundred rows); everything is plain Gaussian elimination without pivoting
/// heuristics, which is exact and deterministic.
class RatMat {
public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMat identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
  }

  static RatMat from_rows(const std::vector<RatVec>& rows) {
    if (rows.empty()) return RatMat();
    RatMat m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw std::invalid_argument("RatMat::from_rows: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  RatVec row(std::size_t i) const {
    RatVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  /// In-place reduced row echelon form; returns pivot column indices.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && (*this)(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      swap_rows(p, r);
      const Rational inv = Rational(1) / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c).is_zero()) continue;
        const Rational f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j)
          (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    RatMat copy = *this;
    return copy.rref().size();
  }

private:
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

/// Basis of the right nullspace {x : Ax = 0}, one vector per free column.
inline std::vector<RatVec> nullspace(const RatMat& a) {
  RatMat m = a;
  const auto pivots = m.rref();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVec v(a.cols());
    v[free] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solve Ax = b exactly. Returns false when the system is inconsistent;
/// when the solution space is positive-dimensional the free variables are
/// set to zero (callers that need uniqueness check rank themselves).
inline bool solve(const RatMat& a, const RatVec& b, RatVec& x) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
  RatMat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = aug.rref();
  for (auto c : pivots)
    if (c == a.cols()) return false;  // pivot in the constant column
  x.assign(a.cols(), Rational());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return true;
}

/// Inverse of a square nonsingular matrix; throws on singular input.
inline RatMat inverse(const RatMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
  const std::size_t n = a.rows();
  RatMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Rational(1);
  }
  const auto pivots = aug.rref();
  if (pivots.size() != n || pivots.back() != n - 1)
    throw std::invalid_argument("inverse: singular matrix");
  RatMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

inline RatVec matvec(const RatMat& a, const RatVec& x) {
  if (x.size() != a.cols()) throw std::invalid_argument("matvec: size mismatch");
  RatVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational s;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

inline RatMat matmul(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: size mismatch");
  RatMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

/// Row-space membership: is v in the span of the given rows?
inline bool in_span(const std::vector<RatVec>& rows, const RatVec& v) {
  if (rows.empty()) return is_zero(v);
  const std::size_t base = RatMat::from_rows(rows).rank();
  std::vector<RatVec> all = rows;
  all.push_back(v);
  return RatMat::from_rows(all).rank() == base;
}

/// Repeated span-membership queries against a fixed row space: the rows are
/// reduced once, each query is a single back-reduction.
class SpanChecker {
public:
  explicit SpanChecker(const std::vector<RatVec>& rows) {
    if (rows.empty()) return;
    RatMat m = RatMat::from_rows(rows);
    pivots_ = m.rref();
    for (std::size_t r = 0; r < pivots_.size(); ++r) basis_.push_back(m.row(r));
  }

  std::size_t rank() const { return pivots_.size(); }

  bool contains(RatVec v) const {
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const Rational c = v[pivots_[r]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * basis_[r][j];
    }
    return is_zero(v);
  }

private:
  std::vector<std::size_t> pivots_;
  std::vector<RatVec> basis_;
};

}  // namespace klie
