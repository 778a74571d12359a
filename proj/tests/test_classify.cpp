#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include <polarfol/catalog.hpp>
#include <polarfol/classify.hpp>

using namespace polarfol;

namespace {

bool is_composite(int x) {
  if (x < 4) return false;
  for (int d = 2; d * d <= x; ++d) {
    if (x % d == 0) return true;
  }
  return false;
}

void check_record_invariants(const ClassificationRecord& r) {
  CHECK(r.N_S <= r.N_J);
  CHECK(static_cast<int>(r.structures.size()) == r.N_S);
  if (r.N_S >= 1) CHECK(r.dim % 4 == 0);
  CHECK(r.n.has_value() == (r.dim % 4 == 0));
  if (r.n) CHECK(*r.n == r.dim / 4 - 1);
  CHECK_FALSE(r.canonicalization_group.empty());
}

}  // namespace

TEST_CASE("counting rules and enumerated moduli agree") {
  std::vector<Entry> grid;
  for (int p = 2; p <= 4; ++p) {
    for (int q = 2; q <= 4; ++q) grid.push_back(entry_aiii(p, q));
  }
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      if (p + q >= 3) grid.push_back(entry_bi(p, q));
    }
  }
  for (int p = 2; p <= 3; ++p) {
    for (int q = 2; q <= 3; ++q) {
      grid.push_back(entry_cii(p, q));
      if (p + q >= 4) grid.push_back(entry_di(p, q));
    }
  }
  for (int p = 4; p <= 5; ++p) grid.push_back(entry_diii(p));
  for (int p = 2; p <= 3; ++p) grid.push_back(entry_ci(p));
  for (int d : {2, 4, 5, 8, 12}) grid.push_back(entry_trivial_sphere(d));
  for (int m = 1; m <= 6; ++m) {
    for (int k = 1; k <= 4; ++k) {
      if (!fkm_feasible(m, k)) continue;
      if (m % 4 == 0) {
        for (int km = 0; km <= k / 2; ++km) grid.push_back(entry_fkm(m, k - km, km));
      } else {
        grid.push_back(entry_fkm(m, k, 0));
      }
    }
  }
  for (const char* name : {"EII", "EIII", "EVI"}) grid.push_back(entry_exceptional(name));

  for (const Entry& e : grid) {
    CAPTURE(e.label());
    CHECK(cross_check(e));
    check_record_invariants(closed_form(e));
    check_record_invariants(compute_moduli(e));
  }

  Entry b32 = entry_bi(3, 2);
  CHECK(cross_check(b32));
  CHECK(closed_form(b32).N_S == 0);
}

TEST_CASE("records carry the published counts and flags") {
  ClassificationRecord a22 = compute_moduli(entry_aiii(2, 2));
  CHECK(a22.N_J == 2);
  CHECK(a22.N_S == 1);
  CHECK(a22.provenance == "computed");
  REQUIRE(a22.structures.size() == 1);
  CHECK(a22.structures[0].is_ideal);
  CHECK(a22.structures[0].homogeneous == std::optional<bool>(true));
  CHECK(a22.structures[0].cartan.has_value());
  CHECK(a22.structures[0].witness.has_value());

  ClassificationRecord a42 = compute_moduli(entry_aiii(4, 2));
  CHECK(a42.N_S == 2);
  int ideal_true = 0, other_false = 0;
  for (const auto& s : a42.structures) {
    if (s.is_ideal && s.homogeneous == std::optional<bool>(true)) ++ideal_true;
    if (!s.is_ideal && s.homogeneous == std::optional<bool>(false)) ++other_false;
  }
  CHECK(ideal_true == 1);
  CHECK(other_false == 1);

  ClassificationRecord d23 = compute_moduli(entry_di(2, 3));
  CHECK(d23.N_J == 2);
  CHECK(d23.N_S == 1);
  REQUIRE(d23.structures.size() == 1);
  CHECK(d23.structures[0].witness->factor_indices == std::vector<int>{0});

  CHECK(compute_moduli(entry_fkm(4, 1, 1)).N_S == 2);
  CHECK(compute_moduli(entry_fkm(3, 2, 0)).N_S == 2);
  CHECK(closed_form(entry_cii(2, 3)).N_S == 2);
  CHECK(closed_form(entry_fkm(2, 3, 0)).N_S == 1);
  CHECK(closed_form(entry_fkm(1, 3, 0)).N_S == 0);

  ClassificationRecord c22 = compute_moduli(entry_cii(2, 2));
  REQUIRE(c22.structures.size() == 1);
  CHECK(c22.structures[0].homogeneous == std::optional<bool>(false));

  ClassificationRecord f72 = compute_moduli(entry_fkm(7, 2, 0));
  CHECK(f72.n == std::optional<int>(7));
  CHECK(f72.N_S == 1);
  for (const auto& s : f72.structures) CHECK(s.homogeneous == std::optional<bool>(false));

  // multiplicity order reversed: homogeneity stays an open flag
  ClassificationRecord f51 = compute_moduli(entry_fkm(5, 1, 0));
  CHECK(f51.N_S == 2);
  for (const auto& s : f51.structures) CHECK_FALSE(s.homogeneous.has_value());

  ClassificationRecord evi = closed_form(entry_exceptional("EVI"));
  CHECK(evi.N_S == 2);
  CHECK(evi.provenance == "tabulated");
  CHECK(evi.structures[0].homogeneous == std::optional<bool>(true));
  CHECK(evi.structures[1].homogeneous == std::optional<bool>(false));

  ClassificationRecord eix = closed_form(entry_exceptional("EIX"));
  REQUIRE(eix.N_S == 1);
  CHECK(eix.structures[0].is_ideal);
  CHECK(eix.structures[0].homogeneous == std::optional<bool>(true));

  CHECK(closed_form(entry_ci(3)).N_S == 0);
  CHECK_THROWS_AS(compute_moduli(entry_exceptional("EVII")), CatalogError);
  CHECK_THROWS_AS(compute_moduli(entry_aiii(8, 8)), GuardError);

  // a block with admissible speeds outside the settled shapes must abort
  Entry crafted;
  crafted.family = "Crafted";
  crafted.dim = 8;
  crafted.rank = 4;
  WeightSystem ws;
  ws.factors = {{FactorKind::Unitary, 4, false, -1}};
  for (int i = 0; i < 4; ++i) {
    Vec w(4, Rational(0));
    w[i] = Rational(1) / Rational(2);
    ws.weights.push_back(w);
  }
  ws.rep_dim = 8;
  crafted.ws = std::move(ws);
  CHECK_THROWS_AS(compute_moduli(crafted), UndecidedError);
}

TEST_CASE("joins multiply structures and identify congruent factors") {
  Entry s4 = entry_trivial_sphere(4);
  Entry s8 = entry_trivial_sphere(8);

  ClassificationRecord j1 = compose_join({s4, s8});
  CHECK(j1.N_S == 1);
  CHECK(j1.dim == 12);
  CHECK(j1.rank == 2);
  CHECK(j1.n == std::optional<int>(2));
  REQUIRE(j1.structures.size() == 1);
  CHECK(j1.structures[0].homogeneous == std::optional<bool>(true));
  check_record_invariants(j1);

  ClassificationRecord j2 = compose_join({s4, s4});
  CHECK(j2.N_J == 1);
  CHECK(j2.N_S == 1);

  ClassificationRecord j3 = compose_join({entry_aiii(2, 2), s4});
  CHECK(j3.N_S == 1);
  CHECK(j3.structures[0].homogeneous == std::optional<bool>(true));

  ClassificationRecord j4 = compose_join({entry_aiii(4, 2), s4});
  CHECK(j4.N_S == 2);
  int hom = 0, inhom = 0;
  for (const auto& s : j4.structures) {
    if (s.homogeneous == std::optional<bool>(true)) ++hom;
    if (s.homogeneous == std::optional<bool>(false)) ++inhom;
  }
  CHECK(hom == 1);
  CHECK(inhom == 1);

  ClassificationRecord j5 = compose_join({entry_cii(2, 2), s4});
  CHECK(j5.N_S == 1);
  CHECK(j5.structures[0].homogeneous == std::optional<bool>(false));

  // two congruent rank-two factors: multisets of their two structures
  ClassificationRecord j6 = compose_join({entry_aiii(4, 2), entry_aiii(4, 2)});
  CHECK(j6.N_S == 3);
  CHECK(j6.N_J == 10);
  for (const auto& s : j6.structures) CHECK(s.homogeneous == std::optional<bool>(false));

  ClassificationRecord j7 = compose_join({s4, s8, s4});
  CHECK(j7.N_S == 1);
  CHECK(j7.descriptor == "TrivialSphere(4) * TrivialSphere(8) * TrivialSphere(4)");

  CHECK_THROWS_AS(compose_join({entry_ci(2), s4}), CatalogError);
  CHECK_THROWS_AS(compose_join({s4, s8}, 4), CatalogError);
  CHECK_THROWS_AS(compose_join({}), CatalogError);
}

TEST_CASE("dimension scans reproduce the parity and primality laws") {
  auto codim1 = scan_codim1(60);
  REQUIRE(codim1.size() == 60);
  for (const ScanResult& row : codim1) {
    CAPTURE(row.n);
    CHECK(row.inhomogeneous == (row.n % 2 == 1 && row.n >= 3));
    CHECK(row.undecided == (row.n == 7));
  }

  auto irr = scan_irreducible(60);
  REQUIRE(irr.size() == 60);
  for (const ScanResult& row : irr) {
    CAPTURE(row.n);
    CHECK(row.inhomogeneous == is_composite(row.n + 1));
  }

  auto threaded = scan_codim1(24, 4);
  auto serial = scan_codim1(24, 1);
  REQUIRE(threaded.size() == serial.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(threaded[i].n == serial[i].n);
    CHECK(threaded[i].inhomogeneous == serial[i].inhomogeneous);
    CHECK(threaded[i].undecided == serial[i].undecided);
  }

  CHECK_THROWS_AS(scan_codim1(0), std::invalid_argument);
}

TEST_CASE("the grouped table matches the catalog on both parametrizations") {
  auto rows = table1(4, 8);
  CHECK(rows.size() == 28 + 27 + 21 + 7);

  auto find = [&](const std::string& name) -> const TableRow& {
    for (const auto& r : rows) {
      if (r.space == name) return r;
    }
    REQUIRE(false);
    return rows.front();
  };

  CHECK(find("SU(6)/S(U(4)xU(2))").N_S == 2);
  CHECK(find("SU(8)/S(U(4)xU(4))").N_S == 1);
  CHECK(find("SU(5)/S(U(2)xU(3))").N_S == 1);
  CHECK(find("SO(11)/SO(8)xSO(3)").N_S == 1);
  CHECK(find("SO(12)/SO(8)xSO(4)").N_S == 2);
  CHECK(find("SO(16)/SO(8)xSO(8)").N_S == 1);
  CHECK(find("Sp(4)/Sp(2)xSp(2)").N_S == 1);
  CHECK(find("Sp(5)/Sp(2)xSp(3)").N_S == 2);
  CHECK(find("E7/Spin(12).Sp(1)").N_S == 2);
  CHECK(find("F4/Sp(3).SU(2)").N_S == 1);
  CHECK(find("G2/SU(2).SU(2)").N_S == 1);
  CHECK(find("E8/Spin(16)").N_S == 1);

  for (const auto& r : rows) {
    CAPTURE(r.space);
    if (r.condition == "-") {
      continue;
    } else if (r.condition == "q even and q != 2p" || r.condition == "q = 0 mod 4 and q != 4p" ||
               r.condition == "p != q") {
      CHECK(r.N_S == 2);
    } else {
      CHECK(r.N_S == 1);
    }
  }
}
