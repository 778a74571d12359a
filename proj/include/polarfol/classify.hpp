#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <polarfol/catalog.hpp>

namespace polarfol {

// One quaternionic structure attached to a record. Computed records carry the
// class representative and its constructive witness; tabulated records carry
// the constructor tag alone.
struct RecordStructure {
  std::string tag;
  bool is_ideal = false;
  std::optional<bool> homogeneous;  // unset when the answer is open
  std::optional<Vec> cartan;
  std::optional<Su2Witness> witness;
};

struct ClassificationRecord {
  std::string descriptor;
  std::string family;
  std::vector<std::pair<std::string, int>> params;
  int dim = 0;
  int rank = 0;
  std::optional<int> n;  // quotient quaternionic projective dimension
  int N_J = 0;
  int N_S = 0;
  std::vector<RecordStructure> structures;
  std::string provenance;  // "computed" | "tabulated"
  std::string canonicalization_group;
};

// Record filled from the catalogued counting rules; never enumerates moduli.
ClassificationRecord closed_form(const Entry& e);

// Record filled by enumerating complex-structure classes and certifying
// membership per class. Throws CatalogError for entries carried without a
// weight system and UndecidedError when a class resists both the membership
// and the non-membership analyses.
ClassificationRecord compute_moduli(const Entry& e);

// True iff both routes agree on N_J and N_S.
bool cross_check(const Entry& e);

// Constructive route when the entry carries a weight system, closed-form
// route otherwise.
ClassificationRecord classify_entry(const Entry& e);

// Composite of foliations spanning complementary spheres. fixed_part_dim
// models coordinates fixed by every factor; it must be zero for any
// quaternionic structure to survive.
ClassificationRecord compose_join(const std::vector<Entry>& factors, int fixed_part_dim = 0);

struct ScanResult {
  int n = 0;
  bool inhomogeneous = false;
  // Set when the ambient sphere hosts the unresolved codimension-one
  // multiplicity pair, so the classification backing this row is incomplete.
  bool undecided = false;
};

// Per-n existence of an inhomogeneous codimension-one polar foliation on the
// quaternionic projective n-space, n = 1..n_max.
std::vector<ScanResult> scan_codim1(int n_max, int threads = 1);

// Per-n existence of an inhomogeneous irreducible polar foliation of any
// codimension.
std::vector<ScanResult> scan_irreducible(int n_max, int threads = 1);

struct TableRow {
  std::string space;
  int N_S = 0;
  std::string condition;
};

// Classification table in the grouped parametrization (the unitary and
// orthogonal rows absorb an even factor of the catalog parameters). Values
// are read from the catalog entries; condition strings restate the rules.
std::vector<TableRow> table1(int max_p, int max_q);

}  // namespace polarfol
