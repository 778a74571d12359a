#pragma once

#include <optional>
#include <string>
#include <vector>

#include <polarfol/rational.hpp>

namespace polarfol {

// A factor of the reductive algebra acting on the module, described by the
// coordinate block its Cartan subalgebra occupies.
enum class FactorKind {
  Unitary,         // u(r), coordinates = diagonal entries
  SpecialUnitary,  // su(r) realized as trace-constrained u(r) coordinates
  OrthogonalEven,  // so(2r), coordinates = rotation speeds of r planes
  OrthogonalOdd,   // so(2r+1)
  Symplectic       // sp(r)
};

const char* factor_kind_name(FactorKind k);

// Which sign changes of individual coordinates are congruences.  Orthogonal
// and symplectic factors admit all flips (congruence is by the full
// orthogonal/symplectic group); unitary factors admit none; even-orthogonal
// factors acting through a fixed-parity spin module only admit flip pairs,
// since a single flip exchanges the two half-spin modules.
enum class FlipRule { None, All, EvenOnly };

struct Factor {
  FactorKind kind;
  int rank;               // number of Cartan coordinates e_1..e_rank
  bool half_spin = false; // even-orthogonal factor acting through one half-spin module
  int swap_class = -1;    // factors sharing a nonnegative value may be exchanged
};

FlipRule flip_rule(const Factor& f);

// Weight data of the complexified module, with enough structure to
// enumerate complex structures and canonicalize Cartan elements.
struct WeightSystem {
  std::vector<Factor> factors;
  std::vector<Vec> constraints;  // rows annihilating every admissible Cartan element
  std::vector<Vec> weights;      // one representative per +/- pair of nonzero weights,
                                 // reduced modulo the constraint rows, first nonzero
                                 // coordinate positive; duplicates encode multiplicity
  int zero_multiplicity = 0;     // multiplicity of the zero weight
  int rep_dim = 0;               // real dimension of the module

  int coord_dim() const;
  int factor_offset(int f) const;
  // Dimension bookkeeping, constraint independence, rank saturation, and
  // invariance of the weight multiset under every automorphism generator.
  // Throws std::logic_error on violation.
  void validate() const;
};

// Reduce a raw weight row modulo the constraint rows (orthogonal projection)
// and normalize its sign so the first nonzero coordinate is positive.
Vec normalize_weight(const WeightSystem& ws, const Vec& raw);

// Generators of the implemented automorphism group.
struct AutGen {
  enum class Kind { Transpose, Flip, DoubleFlip, FactorSwap, Negate };
  Kind kind;
  int factor = -1;  // Transpose/Flip/DoubleFlip
  int a = -1;       // coordinate index, or first factor for FactorSwap
  int b = -1;       // second coordinate / second factor
};

std::vector<AutGen> aut_generators(const WeightSystem& ws);
Vec apply_gen(const WeightSystem& ws, const AutGen& g, const Vec& h);

// Lexicographically minimal orbit representative of h under the generated
// group (per-factor permutations and flips, swaps of exchangeable factors,
// global negation).  Idempotent and constant on orbits.
Vec canonicalize(const WeightSystem& ws, const Vec& h);

// Enumeration guard: the sign-vector solve enumerates 2^(coord dim minus
// constraint count) candidates, so refuse Cartan dimensions beyond this.
inline constexpr int RANK_GUARD = 14;

// All Cartan elements h (satisfying the constraints) with every weight
// evaluating to +1 or -1 on h.  Sorted lexicographically.  Throws GuardError
// when coord_dim() exceeds RANK_GUARD.
std::vector<Vec> brute_force_J(const WeightSystem& ws);

struct Moduli {
  std::vector<Vec> solutions;  // full solution set, sorted
  std::vector<Vec> classes;    // canonical orbit representatives, sorted
};

Moduli j_moduli(const WeightSystem& ws);

// Basis of the center directions of the acting algebra inside the Cartan
// coordinates (intersected with the constraint subspace).
std::vector<Vec> center_directions(const WeightSystem& ws);

struct Su2Witness {
  std::string constructor_tag;      // ideal-factor | diagonal-unitary | diagonal-symplectic |
                                    // so4-block-diagonal | canonical-so3 | cross-factor-diagonal
  std::vector<int> factor_indices;  // supporting factors, ascending
  std::vector<std::string> parts;   // per-factor constructor tags (cross-factor witnesses)
  Vec cartan;                       // X1 of the abstract su2 triple; equals the query
  bool is_ideal = false;            // the witness subalgebra is an ideal of the acting algebra
};

enum class Verdict { Member, NotMember, Unknown };

struct MembershipReport {
  Verdict verdict;
  std::optional<Su2Witness> witness;  // present iff Member
  std::string reason;                 // filter / constructor diagnostic
};

// Decide whether h lies in a subalgebra of the acting algebra isomorphic to
// su(2) acting on the module as a sum of standard and trivial summands.
// Necessity filters (central component, negation symmetry of unitary blocks,
// multiplicity parity of zero-free orthogonal blocks, integrality) are sound
// rejections; the constructor library provides sound acceptances; anything
// unmatched is reported Unknown rather than guessed.
MembershipReport in_su2(const WeightSystem& ws, const Vec& h);

}  // namespace polarfol
