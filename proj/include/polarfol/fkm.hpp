#pragma once

#include <cstdint>

#include <polarfol/clifford.hpp>
#include <polarfol/poly.hpp>

namespace polarfol {

struct FKMFoliation {
  CliffordSystem system;
  int m_plus = 0;      // = m
  int m_minus = 0;     // = l - m - 1
  int sphere_dim = 0;  // = 2l - 1
};

// Wraps a system as a codimension-one foliation context; requires the
// complementary multiplicity m_minus = l - m - 1 to be at least 1.
FKMFoliation make_foliation(CliffordSystem system);
FKMFoliation make_foliation(int m, int k);
FKMFoliation make_foliation(int m, int k_plus, int k_minus);

// F(x) = <x,x>^2 - 2 sum_i <P_i x, x>^2, exactly.
Rational cm_eval(const FKMFoliation& f, const Vec& x);

// grad F(x) = 4 <x,x> x - 8 sum_i <P_i x, x> P_i x.
Vec cm_gradient(const FKMFoliation& f, const Vec& x);

// Hess F(x) = 8 x x^T + 4 <x,x> Id
//             - sum_i (16 (P_i x)(P_i x)^T + 8 <P_i x, x> P_i).
Matrix cm_hessian(const FKMFoliation& f, const Vec& x);

// F as an exact polynomial in the 2l coordinates.
Poly cm_poly(const FKMFoliation& f);

// <grad F(x), A x> as an exact polynomial. Identically zero exactly when
// the one-parameter flow of the linear field A preserves every level set
// of the quartic.
Poly quartic_flow_derivative(const FKMFoliation& f, const Matrix& a);

struct MunznerReport {
  bool ok = true;
  bool gradient_norm_ok = true;  // |grad F|^2 = 16 <x,x>^3
  bool laplacian_ok = true;      // trace Hess F = 8 (m_minus - m_plus) <x,x>
  bool symbolic = false;         // also proved as polynomial identities
  int trials = 0;
};

// Checks both defining identities exactly at `trials` pseudorandom points
// (SplitMix64, integer coordinates in [-1000, 1000]); for 2l <= 32 they
// are additionally proved by full symbolic expansion.
MunznerReport verify_munzner(const FKMFoliation& f, int trials, uint64_t seed);

struct SphereContext {
  int n = 0;
  bool valid = false;  // true when the ambient sphere dimension is 4n+3
};

SphereContext sphere_context(const FKMFoliation& f);

}  // namespace polarfol
