#pragma once

#include <stdexcept>
#include <vector>

#include "parweyl/rational.hpp"

namespace parweyl {

/// Small dense matrix over the rationals (row-major).
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }
  static RatMatrix zero(int n) { return RatMatrix(n, n); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  RatMatrix& operator+=(const RatMatrix& o) {
    check_same(o);
    for (size_t i = 0; i < a_.size(); ++i)
      if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
    return *this;
  }
  RatMatrix& operator-=(const RatMatrix& o) {
    check_same(o);
    for (size_t i = 0; i < a_.size(); ++i)
      if (!o.a_[i].is_zero()) a_[i] -= o.a_[i];
    return *this;
  }
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { a += b; return a; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { a -= b; return a; }

  RatMatrix scaled(const Rational& s) const {
    RatMatrix r(rows_, cols_);
    if (s.is_zero()) return r;
    for (size_t i = 0; i < a_.size(); ++i)
      if (!a_[i].is_zero()) r.a_[i] = a_[i] * s;
    return r;
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: shape mismatch");
    RatMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b.at(k, j);
          if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }

  friend RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

  /// Lexicographic order on (shape, entries); used as a map key.
  friend bool operator<(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.a_ < b.a_;
  }

 private:
  void check_same(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("RatMatrix: shape mismatch");
  }

  int rows_, cols_;
  std::vector<Rational> a_;
};

/// Solves A x = rhs for square nonsingular A by exact Gaussian elimination.
/// Throws std::domain_error when A is singular.
inline std::vector<Rational> solve_linear(RatMatrix A, std::vector<Rational> rhs) {
  int n = A.rows();
  if (A.cols() != n || static_cast<int>(rhs.size()) != n)
    throw std::invalid_argument("solve_linear: shape mismatch");
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!A.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("solve_linear: singular matrix");
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(A.at(piv, c), A.at(col, c));
      std::swap(rhs[piv], rhs[col]);
    }
    Rational inv = Rational(1) / A.at(col, col);
    for (int c = col; c < n; ++c)
      if (!A.at(col, c).is_zero()) A.at(col, c) *= inv;
    rhs[col] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rational f = A.at(r, col);
      if (f.is_zero()) continue;
      for (int c = col; c < n; ++c)
        if (!A.at(col, c).is_zero()) A.at(r, c) -= f * A.at(col, c);
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

/// Rank of a rational matrix by exact elimination (copy taken).
inline int matrix_rank(RatMatrix A) {
  int n = A.rows(), m = A.cols(), rank = 0;
  for (int col = 0; col < m && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (!A.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = 0; c < m; ++c) std::swap(A.at(piv, c), A.at(rank, c));
    Rational inv = Rational(1) / A.at(rank, col);
    for (int c = col; c < m; ++c)
      if (!A.at(rank, c).is_zero()) A.at(rank, c) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == rank) continue;
      Rational f = A.at(r, col);
      if (f.is_zero()) continue;
      for (int c = col; c < m; ++c)
        if (!A.at(rank, c).is_zero()) A.at(r, c) -= f * A.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace parweyl
