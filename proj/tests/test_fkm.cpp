#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include <polarfol/fkm.hpp>
#include <polarfol/prng.hpp>

using namespace polarfol;

namespace {

Vec basis_vec(int n, int i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

Vec at_offset(const Vec& x, const Vec& h, int t) {
  return vec_add(x, vec_scale(Rational(t), h));
}

}  // namespace

TEST_CASE("quartic evaluation, homogeneity and the euler identity") {
  const auto f = make_foliation(3, 2);
  REQUIRE(2 * f.system.l == 16);

  CHECK(cm_eval(f, basis_vec(16, 0)) == -1);  // unit +1 eigenvector of P_0
  CHECK(cm_eval(f, basis_vec(16, 3)) == -1);
  CHECK(cm_eval(f, Vec(16, Rational(0))) == 0);

  SplitMix64 rng(20260815);
  for (int t = 0; t < 5; ++t) {
    const Vec x = rng.coord_vec(16);
    const Rational fx = cm_eval(f, x);
    CHECK(cm_eval(f, vec_scale(2, x)) == 16 * fx);
    CHECK(dot(cm_gradient(f, x), x) == 4 * fx);
    CHECK(cm_poly(f).eval(x) == fx);
  }

  CHECK_THROWS_AS(cm_eval(f, Vec(8, Rational(0))), std::invalid_argument);
  CHECK_THROWS_AS(cm_gradient(f, Vec(3, Rational(1))), std::invalid_argument);
  CHECK_THROWS_AS(cm_hessian(f, Vec(17, Rational(1))), std::invalid_argument);
}

TEST_CASE("gradient and hessian match exact difference quotients") {
  for (const auto& f : {make_foliation(1, 4), make_foliation(3, 2)}) {
    const int n = 2 * f.system.l;
    SplitMix64 rng(401 + n);
    for (int t = 0; t < 3; ++t) {
      const Vec x = rng.coord_vec(n);
      const Vec h = rng.coord_vec(n);
      const Rational p0 = cm_eval(f, x);
      const Rational p1 = cm_eval(f, at_offset(x, h, 1));
      const Rational pm1 = cm_eval(f, at_offset(x, h, -1));
      const Rational p2 = cm_eval(f, at_offset(x, h, 2));
      const Rational pm2 = cm_eval(f, at_offset(x, h, -2));
      // five-point stencils are exact on a degree-four polynomial
      const Rational first = (-p2 + 8 * p1 - 8 * pm1 + pm2) / 12;
      const Rational second = (-p2 + 16 * p1 - 30 * p0 + 16 * pm1 - pm2) / 12;
      CHECK(first == dot(cm_gradient(f, x), h));
      CHECK(second == dot(cm_hessian(f, x).apply(h), h));
    }
  }
}

TEST_CASE("defining identities hold symbolically and at sampled points") {
  struct Case {
    int m, k_plus, k_minus;
  };
  const Case cases[] = {{1, 4, 0}, {2, 3, 0}, {3, 2, 0}, {4, 1, 1}, {5, 1, 0}};
  for (const auto& c : cases) {
    const auto f = c.k_minus > 0 ? make_foliation(c.m, c.k_plus, c.k_minus)
                                 : make_foliation(c.m, c.k_plus);
    REQUIRE(2 * f.system.l <= 32);
    const auto rep = verify_munzner(f, 20, 20260815 + c.m);
    CHECK(rep.ok);
    CHECK(rep.symbolic);
    CHECK(rep.gradient_norm_ok);
    CHECK(rep.laplacian_ok);
    CHECK(rep.trials == 20);
    CHECK(f.m_plus == c.m);
    CHECK(f.m_minus == f.system.l - c.m - 1);
  }

  const auto f14 = make_foliation(1, 4);
  CHECK(f14.m_plus == 1);
  CHECK(f14.m_minus == 2);
  SplitMix64 rng(11);
  const Vec x = rng.coord_vec(8);
  CHECK(cm_hessian(f14, x).trace() == 8 * dot(x, x));

  auto broken = make_foliation(2, 3);
  broken.system.matrices[2].at(0, 1) += 1;
  broken.system.matrices[2].at(1, 0) += 1;
  const auto rep = verify_munzner(broken, 5, 7);
  CHECK(!rep.ok);

  CHECK_THROWS_AS(verify_munzner(f14, 0, 1), std::invalid_argument);
}

TEST_CASE("multiplicity bookkeeping and the ambient sphere") {
  for (int m = 1; m <= 6; ++m)
    for (int k = 1; k <= 4; ++k) {
      if (k * delta(m) - m - 1 < 1) continue;
      const auto f = make_foliation(m, k);
      CHECK(f.m_plus + f.m_minus + 1 == f.system.l);
      CHECK(f.sphere_dim == 2 * f.system.l - 1);
    }

  CHECK(sphere_context(make_foliation(3, 2)).valid);
  CHECK(sphere_context(make_foliation(3, 2)).n == 3);
  CHECK(sphere_context(make_foliation(1, 4)).valid);
  CHECK(sphere_context(make_foliation(1, 4)).n == 1);
  CHECK(!sphere_context(make_foliation(1, 3)).valid);

  CHECK_THROWS_AS(make_foliation(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_foliation(2, 1), std::invalid_argument);
}

TEST_CASE("commutant flows preserve the quartic") {
  const auto f23 = make_foliation(2, 3);
  for (const auto& c : f23.system.commutant_generators)
    CHECK(quartic_flow_derivative(f23, c).is_zero());

  const auto f411 = make_foliation(4, 1, 1);
  for (const auto& c : f411.system.commutant_generators)
    CHECK(quartic_flow_derivative(f411, c).is_zero());

  const auto f52 = make_foliation(5, 2);
  SplitMix64 rng(99);
  for (const auto& c : f52.system.commutant_generators)
    for (int t = 0; t < 3; ++t) {
      const Vec x = rng.coord_vec(2 * f52.system.l);
      CHECK(dot(cm_gradient(f52, x), c.apply(x)) == 0);
    }

  // a plane rotation outside the commutant moves the level sets
  Matrix stray(12, 12);
  stray.at(0, 1) = 1;
  stray.at(1, 0) = -1;
  CHECK(!quartic_flow_derivative(f23, stray).is_zero());

  // agreement between the polynomial and the pointwise derivative
  const Matrix& gen = f23.system.commutant_generators.front();
  const Poly dpoly = quartic_flow_derivative(f23, gen);
  for (int t = 0; t < 3; ++t) {
    const Vec x = rng.coord_vec(12);
    CHECK(dpoly.eval(x) == dot(cm_gradient(f23, x), gen.apply(x)));
  }
}

TEST_CASE("normalized values stay within the unit range") {
  const auto f = make_foliation(3, 2);
  SplitMix64 rng(20260815);
  int checked = 0;
  while (checked < 200) {
    const Vec x = rng.coord_vec(16);
    const Rational xx = dot(x, x);
    if (sgn(xx) == 0) continue;
    const Rational ratio = cm_eval(f, x) / (xx * xx);
    CHECK(ratio >= -1);
    CHECK(ratio <= 1);
    ++checked;
  }
}
