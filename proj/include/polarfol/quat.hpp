#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <polarfol/catalog.hpp>
#include <polarfol/fkm.hpp>
#include <polarfol/liealg.hpp>
#include <polarfol/matrix.hpp>

namespace polarfol {

// Three skew matrices satisfying the quaternion relations
//   J1^2 = J2^2 = J3^2 = -Id,   J1 J2 = J3 cyclically,
// so that a0 + a1 J1 + a2 J2 + a3 J3 with a0^2 + .. + a3^2 = 1 acts
// orthogonally on the module.
struct QuatTriple {
  Matrix j1;
  Matrix j2;
  Matrix j3;
};

// Realize a membership witness as matrices on the ambient module of a
// foliation.  The spin factor acts through halved products of the
// symmetric Clifford matrices, normalized so the image of the Cartan
// element 2 e_i squares to -Id; commutant factors act through the same
// block structure as the recorded commutant generators.  J1 is always
// the image of the witness Cartan element.  Throws CatalogError when the
// witness shape does not match anything realizable on the context.
QuatTriple realize_witness(const Su2Witness& w, const FKMFoliation& f);

// Realization over a catalogue entry.  FKM entries delegate to the
// foliation overload; classical families use tensor models on matrix
// spaces (AIII on complex p x q matrices via M -> XM - MY, CII on
// quaternionic ones, BI/DI/TrivialSphere on real tensors).  Exceptional
// families carry no implemented model and throw CatalogError.
QuatTriple realize_witness(const Su2Witness& w, const Entry& e);

struct TripleReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Exact check of the defining relations: equal square orders, skewness,
// J_i^2 = -Id, the cyclic products, and anticommutation.
TripleReport verify_triple(const QuatTriple& t);

struct GeneratorStatus {
  bool skew = true;
  bool squares_to_minus_id = true;
  bool cyclic_product = true;  // J_i equals the product of the other two
};

// Identity status broken out per generator, for reporting.
std::array<GeneratorStatus, 3> generator_status(const QuatTriple& t);

enum class CheckMode { Auto, Symbolic, Sampled };

struct PreservationReport {
  bool ok = true;
  bool symbolic = false;
  std::array<bool, 3> generator_ok{true, true, true};
  int trials = 0;
};

// Whether the flows generated by J1, J2, J3 preserve the defining
// quartic: <grad F(x), J_i x> must vanish identically.  Auto mode proves
// the identity symbolically when the ambient dimension is at most 32 and
// falls back to seeded rational sampling above that.
PreservationReport preserves_fkm(const FKMFoliation& f, const QuatTriple& t,
                                 CheckMode mode = CheckMode::Auto, int trials = 20,
                                 uint64_t seed = 1);

struct HopfReport {
  bool ok = true;
  int points = 0;
};

// Evaluate F along the orbit of p under unit combinations
// q = a0 + a1 J1 + a2 J2 + a3 J3 from the grid; every value must equal
// F(p) exactly.  Each grid point must be a rational 4-vector on the unit
// sphere, otherwise std::invalid_argument.
HopfReport hopf_orbit_sample(const FKMFoliation& f, const QuatTriple& t, const Vec& p,
                             const std::vector<Vec>& grid);

}  // namespace polarfol
