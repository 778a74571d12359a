#pragma once

#include <optional>
#include <vector>

#include "polarfol/matrix.hpp"

namespace polarfol {

enum class SolveStatus { Unique, NoSolution, Underdetermined };

struct SolveResult {
  SolveStatus status;
  // Valid unless NoSolution.
  Vec particular;
  // Basis of the homogeneous solution space; empty when Unique.
  std::vector<Vec> nullspace;
};

// Exact Gaussian elimination for A x = b.
SolveResult solve_rational(const Matrix& a, const Vec& b);

int rank(Matrix a);

std::optional<Matrix> inverse(const Matrix& a);

}  // namespace polarfol
