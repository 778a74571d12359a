#pragma once

#include <cassert>
#include <vector>

#include "polarfol/rational.hpp"

namespace polarfol {

// Dense matrix over the rationals. Row-major storage. Products skip
// zero entries, so multiplication of signed permutation matrices (the
// common case throughout the Clifford constructions) runs in O(n^2).
class Matrix {
 public:
  Matrix() : r_(0), c_(0) {}
  Matrix(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c, Rational(0)) {}

  static Matrix identity(int n);
  static Matrix scalar(int n, const Rational& v);

  int rows() const { return r_; }
  int cols() const { return c_; }

  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& scale(const Rational& v);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  Matrix operator-() const;
  Matrix transpose() const;
  Rational trace() const;
  Vec apply(const Vec& x) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_symmetric() const { return *this == transpose(); }
  bool is_skew() const;

 private:
  int r_, c_;
  std::vector<Rational> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);
// [[A, B], [C, D]] with conformal blocks.
Matrix block2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);
Matrix outer(const Vec& x, const Vec& y);

inline Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }
inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace polarfol
