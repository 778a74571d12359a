#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace polarfol {

// Exact rational scalar. Canonical form: gcd(num, den) = 1, den > 0.
// All arithmetic results of mpq_class are canonical; only values built
// directly from strings or raw num/den pairs need an explicit pass.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat_of_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
  if (sgn(q.get_den()) == 0) {
    throw std::invalid_argument("zero denominator: " + s);
  }
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

using Vec = std::vector<Rational>;

inline Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec vec_neg(Vec v) {
  for (auto& x : v) x = -x;
  return v;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec vec_scale(const Rational& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

// Raised when an input is structurally valid but falls outside the
// guarded range the library is prepared to handle exactly.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when the su(2)-membership decision procedure meets a pattern
// it can neither certify nor refute; classification must not continue.
struct UndecidedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace polarfol
