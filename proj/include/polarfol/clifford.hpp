#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <polarfol/matrix.hpp>

namespace polarfol {

// Half the real dimension of an irreducible module for a family of m+1
// symmetric anticommuting involutions: 1,2,4,4,8,8,8,8 for m = 1..8,
// then delta(m+8) = 16*delta(m).
int delta(int m);

// Multiplication by the index-th basis unit of the Cayley-Dickson algebra
// of dimension dim (1, 2, 4 or 8), from the left or from the right.
// Entries lie in {-1,0,1}; index 0 gives the identity.
Matrix cd_left_mult(int dim, int index);
Matrix cd_right_mult(int dim, int index);

// The m-1 generators E_1..E_{m-1} of one irreducible module on
// R^{delta(m)}: skew, E_i^2 = -Id, pairwise anticommuting, entries in
// {-1,0,1}. For m divisible by 4 the family is normalized so that
// E_1*...*E_{m-1} = +Id; flipping the sign of E_{m-1} gives a
// representative of the inequivalent module class (marker -Id).
std::vector<Matrix> irreducible_family(int m);

// Imaginary units of the division algebra commuting with one irreducible
// family: {} for real type (m = 1,7,8 mod 8), a single complex structure
// for complex type (m = 2,6 mod 8), and a triple (u1,u2,u3) with
// u1*u2 = u3 cyclically for quaternionic type (m = 3,4,5 mod 8).
std::vector<Matrix> irreducible_commutant_units(int m);

// Block-diagonal sum of `count` irreducible families on R^l,
// l = count*delta(m). With class_split = (k+,k-), which requires m
// divisible by 4 and k+ + k- = count, the last k- copies carry E_{m-1}
// with flipped sign.
std::vector<Matrix> build_skew_family(
    int m, int count,
    std::optional<std::pair<int, int>> class_split = std::nullopt);

struct CliffordSystem {
  int m = 0;
  int l = 0;                                 // matrices have order 2l
  int k = 0;                                 // number of irreducible modules
  std::optional<std::pair<int, int>> split;  // (k+,k-) when m = 0 mod 4
  std::vector<Matrix> matrices;              // P_0..P_m, symmetric
  std::vector<Matrix> commutant_generators;  // skew, commute with every P_i
};

// P_0 = diag(Id,-Id), P_1 = offdiag(Id,Id), P_{1+i} = offdiag(E_i,-E_i)
// on R^{2l} with l = k*delta(m). The commutant generators are recorded
// from the module bookkeeping at build time: one skew pair-exchange per
// same-class pair of copies plus one generator per division-algebra unit
// per copy and per same-class pair.
CliffordSystem build_clifford_system(int m, int k);
CliffordSystem build_clifford_system(int m, int k_plus, int k_minus);

struct CliffordReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Exact re-check: symmetry, P_i P_j + P_j P_i = 2 delta_ij Id for all
// pairs, module bookkeeping, and skewness/commutation of the recorded
// commutant generators. Every failure is listed.
CliffordReport verify_clifford(const CliffordSystem& system);

}  // namespace polarfol
