#include "polarfol/poly.hpp"

namespace polarfol {

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Expo(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  Expo e(nvars, 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

void Poly::add_term(const Expo& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  assert(nvars_ == o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  assert(nvars_ == o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  assert(a.nvars_ == b.nvars_);
  Poly p(a.nvars_);
  Poly::Expo e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = static_cast<uint8_t>(ea[i] + eb[i]);
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

Poly& Poly::scale(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::derivative(int i) const {
  Poly p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Expo d = e;
    d[i] -= 1;
    p.add_term(d, c * e[i]);
  }
  return p;
}

Rational Poly::eval(const Vec& x) const {
  assert(static_cast<int>(x.size()) == nvars_);
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      for (uint8_t k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

Poly quadratic_form(const Matrix& p) {
  const int n = p.rows();
  Poly q(n);
  Poly::Expo e(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& v = p.at(i, j);
      if (sgn(v) == 0) continue;
      std::fill(e.begin(), e.end(), 0);
      e[i] += 1;
      e[j] += 1;
      q.add_term(e, v);
    }
  return q;
}

Poly norm_square_poly(int nvars) { return quadratic_form(Matrix::identity(nvars)); }

}  // namespace polarfol
