#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "polarfol/matrix.hpp"

namespace polarfol {

// Sparse multivariate polynomial over the rationals. The exponent
// vector has fixed length nvars; coefficients are never stored as zero.
class Poly {
 public:
  using Expo = std::vector<uint8_t>;

  explicit Poly(int nvars) : nvars_(nvars) {}
  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Expo, Rational>& terms() const { return terms_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Poly& scale(const Rational& c);
  Poly derivative(int i) const;
  Rational eval(const Vec& x) const;

  void add_term(const Expo& e, const Rational& c);

 private:
  int nvars_;
  std::map<Expo, Rational> terms_;
};

// x^T P x as a polynomial in nvars = P.rows() variables.
Poly quadratic_form(const Matrix& p);

// Sum of squares of the coordinates.
Poly norm_square_poly(int nvars);

}  // namespace polarfol
