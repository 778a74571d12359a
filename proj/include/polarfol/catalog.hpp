#pragma once

#include <optional>
#include <string>
#include <vector>

#include <polarfol/liealg.hpp>

namespace polarfol {

// Raised for descriptors outside the catalogued ranges (CLI exit code 64).
struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structure data recorded for entries carried without a weight system, and
// for the closed-form description of computable entries.
struct StructureInfo {
  std::string constructor_tag;
  bool is_ideal = false;
  // Unset when the underlying foliation's homogeneity is an open question.
  std::optional<bool> homogeneous;
};

struct Entry {
  std::string family;
  std::vector<std::pair<std::string, int>> params;  // display order
  int dim = 0;   // real dimension of the module
  int rank = 0;  // rank of the record (sphere foliation codimension + 1)
  bool qk = false;
  bool tabulated = false;  // carried without a weight system
  bool non_inner = false;
  bool foliation_homogeneous = true;
  bool homogeneity_known = true;  // false: flags stay unset (open question)
  int closed_NJ = 0;
  int closed_NS = 0;
  std::optional<WeightSystem> ws;

  std::string label() const;
  int param(const std::string& name) const;
};

// Structure list predicted by the closed-form rules, with homogeneity flags
// derived from the rank / distinguished-ideal criterion.
std::vector<StructureInfo> closed_structures(const Entry& e);

Entry entry_aiii(int p, int q);
Entry entry_bi(int p, int q);
Entry entry_ci(int p);
Entry entry_cii(int p, int q);
Entry entry_di(int p, int q);
Entry entry_diii(int p);
Entry entry_exceptional(const std::string& name);  // EII EIII EV EVI EVII EVIII EIX FI G
Entry entry_fkm(int m, int k_plus, int k_minus);   // k_minus = 0 for the undivided case
Entry entry_trivial_sphere(int d);

// Dispatch from a family name and positional parameters (CLI surface).
Entry make_entry(const std::string& family, const std::vector<int>& params);

// Clifford module dimension: order of the irreducible skew system for m
// anticommuting generators.
int clifford_delta(int m);

// All catalogued entries of the given module dimension with rank at least
// min_rank. Sphere entries included when include_spheres is set; both
// (k+,k-) divisions are listed for the divisible residues. Passing
// with_weights = false omits the weight systems, populating only the
// closed-form data; dimension sweeps that never enumerate structures
// should use it, since weight construction dominates at large dimension.
std::vector<Entry> catalog_by_dimension(int dim, int min_rank, bool include_spheres,
                                        bool with_weights = true);

bool fkm_feasible(int m, int k);

}  // namespace polarfol
