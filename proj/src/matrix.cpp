#include "polarfol/matrix.hpp"

namespace polarfol {

Matrix Matrix::identity(int n) { return scalar(n, 1); }

Matrix Matrix::scalar(int n, const Rational& v) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = v;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  assert(r_ == o.r_ && c_ == o.c_);
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  assert(r_ == o.r_ && c_ == o.c_);
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix& Matrix::scale(const Rational& v) {
  for (auto& x : a_) x *= v;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  assert(a.c_ == b.r_);
  Matrix c(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i) {
    for (int k = 0; k < a.c_; ++k) {
      const Rational& v = a.at(i, k);
      if (sgn(v) == 0) continue;
      for (int j = 0; j < b.c_; ++j) {
        const Rational& w = b.at(k, j);
        if (sgn(w) == 0) continue;
        c.at(i, j) += v * w;
      }
    }
  }
  return c;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.a_) x = -x;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rational Matrix::trace() const {
  assert(r_ == c_);
  Rational s = 0;
  for (int i = 0; i < r_; ++i) s += at(i, i);
  return s;
}

Vec Matrix::apply(const Vec& x) const {
  assert(static_cast<int>(x.size()) == c_);
  Vec y(r_, Rational(0));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) {
      const Rational& v = at(i, j);
      if (sgn(v) != 0) y[i] += v * x[j];
    }
  return y;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

bool Matrix::is_skew() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j <= i; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Rational& v = a.at(i, j);
      if (sgn(v) == 0) continue;
      for (int r = 0; r < b.rows(); ++r)
        for (int s = 0; s < b.cols(); ++s) {
          const Rational& w = b.at(r, s);
          if (sgn(w) == 0) continue;
          m.at(i * b.rows() + r, j * b.cols() + s) = v * w;
        }
    }
  return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

Matrix block2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  assert(a.rows() == b.rows() && c.rows() == d.rows());
  assert(a.cols() == c.cols() && b.cols() == d.cols());
  Matrix m(a.rows() + c.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  for (int i = 0; i < c.rows(); ++i) {
    for (int j = 0; j < c.cols(); ++j) m.at(a.rows() + i, j) = c.at(i, j);
    for (int j = 0; j < d.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = d.at(i, j);
  }
  return m;
}

Matrix outer(const Vec& x, const Vec& y) {
  Matrix m(static_cast<int>(x.size()), static_cast<int>(y.size()));
  for (size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = x[i] * y[j];
  }
  return m;
}

}  // namespace polarfol
