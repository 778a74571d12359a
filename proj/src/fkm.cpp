#include <polarfol/fkm.hpp>

#include <stdexcept>
#include <utility>

#include <polarfol/prng.hpp>

namespace polarfol {

namespace {

void check_point(const FKMFoliation& f, const Vec& x) {
  if (static_cast<int>(x.size()) != 2 * f.system.l)
    throw std::invalid_argument("point dimension does not match the system order 2l");
}

}  // namespace

FKMFoliation make_foliation(CliffordSystem system) {
  FKMFoliation f;
  f.m_plus = system.m;
  f.m_minus = system.l - system.m - 1;
  f.sphere_dim = 2 * system.l - 1;
  if (f.m_minus < 1)
    throw std::invalid_argument(
        "not a codimension-one foliation: l - m - 1 must be at least 1");
  f.system = std::move(system);
  return f;
}

FKMFoliation make_foliation(int m, int k) {
  return make_foliation(build_clifford_system(m, k));
}

FKMFoliation make_foliation(int m, int k_plus, int k_minus) {
  return make_foliation(build_clifford_system(m, k_plus, k_minus));
}

Rational cm_eval(const FKMFoliation& f, const Vec& x) {
  check_point(f, x);
  const Rational xx = dot(x, x);
  Rational out = xx * xx;
  for (const auto& p : f.system.matrices) {
    const Rational px = dot(p.apply(x), x);
    out -= 2 * px * px;
  }
  return out;
}

Vec cm_gradient(const FKMFoliation& f, const Vec& x) {
  check_point(f, x);
  Vec g = vec_scale(4 * dot(x, x), x);
  for (const auto& p : f.system.matrices) {
    const Vec px = p.apply(x);
    g = vec_add(g, vec_scale(-8 * dot(px, x), px));
  }
  return g;
}

Matrix cm_hessian(const FKMFoliation& f, const Vec& x) {
  check_point(f, x);
  const int n = 2 * f.system.l;
  Matrix h = outer(x, x);
  h.scale(8);
  h += Matrix::scalar(n, 4 * dot(x, x));
  for (const auto& p : f.system.matrices) {
    const Vec px = p.apply(x);
    Matrix o = outer(px, px);
    o.scale(16);
    h -= o;
    Matrix ps = p;
    ps.scale(8 * dot(px, x));
    h -= ps;
  }
  return h;
}

Poly cm_poly(const FKMFoliation& f) {
  const int n = 2 * f.system.l;
  const Poly norm = norm_square_poly(n);
  Poly out = norm * norm;
  for (const auto& p : f.system.matrices) {
    const Poly q = quadratic_form(p);
    Poly q2 = q * q;
    q2.scale(2);
    out -= q2;
  }
  return out;
}

Poly quartic_flow_derivative(const FKMFoliation& f, const Matrix& a) {
  const int n = 2 * f.system.l;
  if (a.rows() != n || a.cols() != n)
    throw std::invalid_argument("field matrix does not match the system order 2l");
  const Poly quartic = cm_poly(f);
  Poly out(n);
  for (int v = 0; v < n; ++v) {
    Poly field_v(n);
    for (int w = 0; w < n; ++w) {
      const Rational& c = a.at(v, w);
      if (sgn(c) != 0) {
        Poly xw = Poly::variable(n, w);
        xw.scale(c);
        field_v += xw;
      }
    }
    if (!field_v.is_zero()) out += quartic.derivative(v) * field_v;
  }
  return out;
}

MunznerReport verify_munzner(const FKMFoliation& f, int trials, uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_munzner: trials must be >= 1");
  MunznerReport rep;
  rep.trials = trials;
  const int n = 2 * f.system.l;
  const Rational lap = Rational(8 * (f.m_minus - f.m_plus));
  SplitMix64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Vec x = rng.coord_vec(n);
    const Rational xx = dot(x, x);
    const Vec g = cm_gradient(f, x);
    if (dot(g, g) != 16 * xx * xx * xx) rep.gradient_norm_ok = false;
    if (cm_hessian(f, x).trace() != lap * xx) rep.laplacian_ok = false;
  }
  if (n <= 32) {
    rep.symbolic = true;
    const Poly quartic = cm_poly(f);
    const Poly norm = norm_square_poly(n);
    Poly grad_sq(n);
    Poly laplacian(n);
    for (int v = 0; v < n; ++v) {
      const Poly dv = quartic.derivative(v);
      grad_sq += dv * dv;
      laplacian += dv.derivative(v);
    }
    Poly cube = norm * norm * norm;
    cube.scale(16);
    if (!(grad_sq == cube)) rep.gradient_norm_ok = false;
    Poly rhs = norm;
    rhs.scale(lap);
    if (!(laplacian == rhs)) rep.laplacian_ok = false;
  }
  rep.ok = rep.gradient_norm_ok && rep.laplacian_ok;
  return rep;
}

SphereContext sphere_context(const FKMFoliation& f) {
  SphereContext out;
  if (f.system.l % 2 == 0) {
    out.valid = true;
    out.n = (f.system.l - 2) / 2;
  }
  return out;
}

}  // namespace polarfol
