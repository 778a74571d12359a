#include <polarfol/quat.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <polarfol/clifford.hpp>
#include <polarfol/poly.hpp>
#include <polarfol/prng.hpp>

namespace polarfol {

namespace {

[[noreturn]] void mismatch(const std::string& what) {
  throw CatalogError("witness not realizable in this context: " + what);
}

int unit_sign(const Rational& v, const char* where) {
  if (v == 1) return 1;
  if (v == -1) return -1;
  mismatch(std::string(where) + " coordinate is not +1 or -1");
}

// 4x4 triple whose first member rotates the coordinate planes (0,1) and
// (2,3) with the prescribed unit speeds: left quaternion multiplications
// for equal signs, right ones for mixed signs.
std::array<Matrix, 3> so4_block_triple(int sa, int sb) {
  const Rational s(sa);
  if (sa == sb) {
    Matrix a = cd_left_mult(4, 1);
    Matrix c = cd_left_mult(4, 3);
    a.scale(s);
    c.scale(s);
    return {std::move(a), cd_left_mult(4, 2), std::move(c)};
  }
  Matrix a = cd_right_mult(4, 1);
  Matrix c = cd_right_mult(4, 3);
  a.scale(s);
  c.scale(-s);
  return {std::move(a), cd_right_mult(4, 2), std::move(c)};
}

void add_scaled_block(Matrix& dst, int r0, int c0, const Matrix& blk, const Rational& s) {
  for (int i = 0; i < blk.rows(); ++i) {
    for (int j = 0; j < blk.cols(); ++j) {
      if (sgn(blk.at(i, j)) != 0) dst.at(r0 + i, c0 + j) += s * blk.at(i, j);
    }
  }
}

// Triple of rotations on a run of evenly paired coordinates: slice entry j
// is the speed of the plane (first + 2j, first + 2j + 1), and consecutive
// plane pairs carry the quaternion blocks.
std::array<Matrix, 3> so4_span_triple(int dim, int first, const Vec& slice) {
  if (slice.size() % 2 != 0) mismatch("paired-plane witness with an odd number of planes");
  std::array<Matrix, 3> out{Matrix(dim, dim), Matrix(dim, dim), Matrix(dim, dim)};
  for (size_t t = 0; t + 1 < slice.size(); t += 2) {
    int sa = unit_sign(slice[t], "plane speed");
    int sb = unit_sign(slice[t + 1], "plane speed");
    auto blk = so4_block_triple(sa, sb);
    for (int i = 0; i < 3; ++i) {
      add_scaled_block(out[i], first + 2 * static_cast<int>(t), first + 2 * static_cast<int>(t),
                       blk[i], Rational(1));
    }
  }
  return out;
}

// ----- FKM commutant layout -----

struct PartLayout {
  char type;  // 'o', 'u', 's'
  int ncopies;
  int copy_begin;
  int rank;
};

std::vector<PartLayout> fkm_parts(const CliffordSystem& s) {
  const int r = ((s.m - 1) % 8) + 1;
  const int kp = s.split ? s.split->first : s.k;
  const int km = s.split ? s.split->second : 0;
  std::vector<PartLayout> parts;
  switch (r) {
    case 1:
    case 7:
      parts = {{'o', s.k, 0, s.k / 2}};
      break;
    case 2:
    case 6:
      parts = {{'u', s.k, 0, s.k}};
      break;
    case 3:
    case 5:
      parts = {{'s', s.k, 0, s.k}};
      break;
    case 8:
      parts = {{'o', kp, 0, kp / 2}, {'o', km, kp, km / 2}};
      break;
    case 4:
      parts = {{'s', kp, 0, kp}, {'s', km, kp, km}};
      break;
  }
  std::erase_if(parts, [](const PartLayout& p) { return p.rank == 0; });
  return parts;
}

int fkm_spin_rank(int m) { return (m % 2 == 1) ? (m + 1) / 2 : m / 2; }

// Triple of commutant blocks supported on one part's copies, as l x l
// matrices in the copy-major layout of the Clifford module.
std::array<Matrix, 3> commutant_part_triple(const PartLayout& part, const Vec& slice, int l,
                                            int delta_m, const std::vector<Matrix>& units) {
  std::array<Matrix, 3> out{Matrix(l, l), Matrix(l, l), Matrix(l, l)};
  auto place = [&](Matrix& dst, int ca, int cb, const Matrix& blk, const Rational& s) {
    add_scaled_block(dst, ca * delta_m, cb * delta_m, blk, s);
  };
  if (part.type == 's') {
    if (units.size() != 3) mismatch("quaternionic commutant units are unavailable");
    for (int j = 0; j < part.rank; ++j) {
      Rational s(unit_sign(slice[j], "copy speed"));
      int c = part.copy_begin + j;
      place(out[0], c, c, units[0], s);
      place(out[1], c, c, units[1], Rational(1));
      place(out[2], c, c, units[2], s);
    }
  } else if (part.type == 'u') {
    if (units.empty()) mismatch("complex commutant unit is unavailable");
    std::vector<int> plus, minus;
    for (int j = 0; j < part.rank; ++j) {
      int s = unit_sign(slice[j], "copy speed");
      (s > 0 ? plus : minus).push_back(part.copy_begin + j);
      place(out[0], part.copy_begin + j, part.copy_begin + j, units[0], Rational(s));
    }
    if (plus.size() != minus.size()) {
      mismatch("unitary witness does not pair opposite speeds");
    }
    Matrix id = Matrix::identity(delta_m);
    for (size_t i = 0; i < plus.size(); ++i) {
      place(out[1], minus[i], plus[i], id, Rational(1));
      place(out[1], plus[i], minus[i], id, Rational(-1));
    }
    out[2] = out[0] * out[1];
  } else {
    if (part.ncopies % 2 != 0 || 2 * part.rank != part.ncopies) {
      mismatch("paired-plane witness leaves an unpaired copy");
    }
    auto k3 = so4_span_triple(part.ncopies, 0, slice);
    Matrix id = Matrix::identity(delta_m);
    for (int i = 0; i < 3; ++i) {
      for (int a = 0; a < part.ncopies; ++a) {
        for (int b = 0; b < part.ncopies; ++b) {
          if (sgn(k3[i].at(a, b)) != 0) {
            place(out[i], part.copy_begin + a, part.copy_begin + b, id, k3[i].at(a, b));
          }
        }
      }
    }
  }
  return out;
}

bool commutant_tag_fits(char type, const std::string& tag) {
  if (type == 's') return tag == "diagonal-symplectic" || tag == "ideal-factor";
  if (type == 'u') return tag == "diagonal-unitary" || tag == "ideal-factor";
  return tag == "so4-block-diagonal";
}

// ----- classical matrix models -----

// Complex entries realized as 2x2 blocks [[x, -y], [y, x]] on the
// row-major real coordinates of a p x q complex matrix space.
void add_complex_block(Matrix& dst, int row_entry, int col_entry, const Rational& re,
                       const Rational& im) {
  dst.at(2 * row_entry, 2 * col_entry) += re;
  dst.at(2 * row_entry + 1, 2 * col_entry + 1) += re;
  dst.at(2 * row_entry, 2 * col_entry + 1) -= im;
  dst.at(2 * row_entry + 1, 2 * col_entry) += im;
}

// Balanced unitary pairing: lists of coordinates with speed +1 and -1.
std::pair<std::vector<int>, std::vector<int>> balanced_signs(const Vec& slice) {
  std::vector<int> plus, minus;
  for (size_t j = 0; j < slice.size(); ++j) {
    int s = unit_sign(slice[j], "diagonal speed");
    (s > 0 ? plus : minus).push_back(static_cast<int>(j));
  }
  if (plus.size() != minus.size()) mismatch("unitary witness does not pair opposite speeds");
  return {std::move(plus), std::move(minus)};
}

QuatTriple realize_aiii(const Su2Witness& w, int p, int q) {
  const int n = 2 * p * q;
  const int hosted = w.factor_indices[0];
  const int host_rank = (hosted == 0) ? p : q;
  const int off = (hosted == 0) ? 0 : p;
  Vec slice(w.cartan.begin() + off, w.cartan.begin() + off + host_rank);
  auto [plus, minus] = balanced_signs(slice);
  QuatTriple t{Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  if (hosted == 0) {
    // left multiplication: entry (s, t) <- (a, t) with coefficient X_{sa}
    for (int s = 0; s < p; ++s) {
      for (int tt = 0; tt < q; ++tt) {
        add_complex_block(t.j1, s * q + tt, s * q + tt, Rational(0), slice[s]);
      }
    }
    for (size_t i = 0; i < plus.size(); ++i) {
      for (int tt = 0; tt < q; ++tt) {
        add_complex_block(t.j2, minus[i] * q + tt, plus[i] * q + tt, Rational(1), Rational(0));
        add_complex_block(t.j2, plus[i] * q + tt, minus[i] * q + tt, Rational(-1), Rational(0));
      }
    }
  } else {
    // right multiplication by the negated generators: entry (s, t) <- (s, u)
    // with coefficient (-Z)_{ut}
    for (int s = 0; s < p; ++s) {
      for (int tt = 0; tt < q; ++tt) {
        add_complex_block(t.j1, s * q + tt, s * q + tt, Rational(0), -slice[tt]);
      }
    }
    for (size_t i = 0; i < plus.size(); ++i) {
      for (int s = 0; s < p; ++s) {
        add_complex_block(t.j2, s * q + plus[i], s * q + minus[i], Rational(-1), Rational(0));
        add_complex_block(t.j2, s * q + minus[i], s * q + plus[i], Rational(1), Rational(0));
      }
    }
  }
  t.j3 = t.j1 * t.j2;
  return t;
}

QuatTriple realize_cii(const Su2Witness& w, int p, int q) {
  const int n = 4 * p * q;
  const int hosted = w.factor_indices[0];
  const int host_rank = (hosted == 0) ? p : q;
  const int off = (hosted == 0) ? 0 : p;
  Vec slice(w.cartan.begin() + off, w.cartan.begin() + off + host_rank);
  QuatTriple t{Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  std::array<Matrix, 3> base;
  if (hosted == 0) {
    base = {cd_left_mult(4, 1), cd_left_mult(4, 2), cd_left_mult(4, 3)};
  } else {
    base = {-cd_right_mult(4, 1), -cd_right_mult(4, 2), -cd_right_mult(4, 3)};
  }
  for (int s = 0; s < p; ++s) {
    for (int tt = 0; tt < q; ++tt) {
      const int copy = (hosted == 0) ? s : tt;
      Rational sign(unit_sign(slice[copy], "copy speed"));
      const int at = 4 * (s * q + tt);
      add_scaled_block(t.j1, at, at, base[0], sign);
      add_scaled_block(t.j2, at, at, base[1], Rational(1));
      add_scaled_block(t.j3, at, at, base[2], sign);
    }
  }
  return t;
}

QuatTriple kron_triple_left(const std::array<Matrix, 3>& k3, int right_dim) {
  Matrix id = Matrix::identity(right_dim);
  return {kron(k3[0], id), kron(k3[1], id), kron(k3[2], id)};
}

QuatTriple kron_triple_right(int left_dim, const std::array<Matrix, 3>& k3) {
  Matrix id = Matrix::identity(left_dim);
  return {kron(id, k3[0]), kron(id, k3[1]), kron(id, k3[2])};
}

void require_single_factor(const Su2Witness& w) {
  if (w.factor_indices.size() != 1) {
    mismatch("cross-factor witnesses do not act quaternionically on this module");
  }
}

}  // namespace

QuatTriple realize_witness(const Su2Witness& w, const FKMFoliation& f) {
  const CliffordSystem& sys = f.system;
  const int p_spin = fkm_spin_rank(sys.m);
  const auto parts = fkm_parts(sys);
  int coord_dim = p_spin;
  for (const auto& part : parts) coord_dim += part.rank;
  if (static_cast<int>(w.cartan.size()) != coord_dim) {
    mismatch("Cartan coordinates do not match the foliation's acting algebra");
  }
  if (w.factor_indices.empty()) mismatch("witness names no supporting factor");
  for (int idx : w.factor_indices) {
    if (idx < 0 || idx > static_cast<int>(parts.size())) {
      mismatch("witness names a factor outside the acting algebra");
    }
  }
  const bool spin_side =
      w.factor_indices.size() == 1 && w.factor_indices[0] == 0;
  if (!spin_side &&
      std::find(w.factor_indices.begin(), w.factor_indices.end(), 0) != w.factor_indices.end()) {
    mismatch("witness mixes the spin factor with commutant factors");
  }

  if (spin_side) {
    if (w.constructor_tag != "canonical-so3") {
      mismatch("only single-plane rotation witnesses act quaternionically through the spin factor");
    }
    int plane = -1;
    int sign = 0;
    for (int j = 0; j < p_spin; ++j) {
      if (sgn(w.cartan[j]) == 0) continue;
      if (plane >= 0) mismatch("spin witness touches more than one plane");
      if (w.cartan[j] == 2) {
        sign = 1;
      } else if (w.cartan[j] == -2) {
        sign = -1;
      } else {
        mismatch("spin witness speed is not +2 or -2");
      }
      plane = j;
    }
    if (plane < 0) mismatch("spin witness has no rotation plane");
    const int a = 2 * plane, b = 2 * plane + 1;
    int c = (a == 0) ? 2 : 0;
    if (c > sys.m || b > sys.m) mismatch("spin witness needs three Clifford directions");
    const Matrix& pa = sys.matrices[a];
    const Matrix& pb = sys.matrices[b];
    const Matrix& pc = sys.matrices[c];
    QuatTriple t{pa * pb, pc * pb, pc * pa};
    if (sign < 0) {
      t.j1 = -t.j1;
      t.j3 = -t.j3;
    }
    return t;
  }

  for (int j = 0; j < p_spin; ++j) {
    if (sgn(w.cartan[j]) != 0) mismatch("commutant witness has spin coordinates");
  }
  if (!w.parts.empty() && w.parts.size() != w.factor_indices.size()) {
    mismatch("per-factor constructor list does not match the supporting factors");
  }
  // Every commutant copy must be rotated, or the squares fail off the
  // supported blocks.
  int covered = 0;
  for (int idx : w.factor_indices) covered += parts[idx - 1].ncopies;
  if (covered != sys.k) mismatch("witness leaves commutant copies uncovered");

  const auto units = irreducible_commutant_units(sys.m);
  std::array<Matrix, 3> c{Matrix(sys.l, sys.l), Matrix(sys.l, sys.l), Matrix(sys.l, sys.l)};
  int coord_off = p_spin;
  int part_at = 0;
  for (size_t i = 0; i < w.factor_indices.size(); ++i) {
    const int idx = w.factor_indices[i];
    while (part_at < idx - 1) {
      coord_off += parts[part_at].rank;
      ++part_at;
    }
    const PartLayout& part = parts[part_at];
    const std::string& tag = w.parts.empty() ? w.constructor_tag : w.parts[i];
    if (!commutant_tag_fits(part.type, tag)) {
      mismatch("constructor " + tag + " does not act on this commutant factor");
    }
    Vec slice(w.cartan.begin() + coord_off, w.cartan.begin() + coord_off + part.rank);
    auto blocks = commutant_part_triple(part, slice, sys.l, delta(sys.m), units);
    for (int x = 0; x < 3; ++x) c[x] += blocks[x];
    coord_off += part.rank;
    ++part_at;
  }
  return {direct_sum(c[0], c[0]), direct_sum(c[1], c[1]), direct_sum(c[2], c[2])};
}

QuatTriple realize_witness(const Su2Witness& w, const Entry& e) {
  if (e.family == "FKM") {
    const int m = e.param("m");
    FKMFoliation f = (m % 4 == 0)
                         ? make_foliation(m, e.param("kplus"), e.param("kminus"))
                         : make_foliation(m, e.param("k"));
    return realize_witness(w, f);
  }
  if (!e.ws) mismatch("family " + e.family + " is catalogued without a weight system");
  if (static_cast<int>(w.cartan.size()) != e.ws->coord_dim()) {
    mismatch("Cartan coordinates do not match the acting algebra");
  }
  if (w.factor_indices.empty()) mismatch("witness names no supporting factor");
  for (int idx : w.factor_indices) {
    if (idx < 0 || idx >= static_cast<int>(e.ws->factors.size())) {
      mismatch("witness names a factor outside the acting algebra");
    }
  }

  if (e.family == "TrivialSphere") {
    const int d = e.param("d");
    require_single_factor(w);
    if (d % 2 != 0 || w.constructor_tag != "so4-block-diagonal") {
      mismatch("sphere witnesses act through fully paired rotation planes");
    }
    auto k3 = so4_span_triple(d, 0, w.cartan);
    return {std::move(k3[0]), std::move(k3[1]), std::move(k3[2])};
  }
  if (e.family == "BI" || e.family == "DI") {
    require_single_factor(w);
    if (w.constructor_tag != "so4-block-diagonal") {
      mismatch("Grassmannian witnesses act through fully paired rotation planes");
    }
    const int p = e.param("p"), q = e.param("q");
    const int d1 = 2 * p;
    const int d2 = (e.family == "BI") ? 2 * q + 1 : 2 * q;
    const int hosted = w.factor_indices[0];
    if (hosted == 1 && e.family == "BI") {
      mismatch("the odd orthogonal side fixes an axis and cannot host the action");
    }
    const int off = (hosted == 0) ? 0 : p;
    const int rank = (hosted == 0) ? p : q;
    Vec slice(w.cartan.begin() + off, w.cartan.begin() + off + rank);
    auto k3 = so4_span_triple(2 * rank, 0, slice);
    return (hosted == 0) ? kron_triple_left(k3, d2) : kron_triple_right(d1, k3);
  }
  if (e.family == "AIII") {
    require_single_factor(w);
    if (w.constructor_tag != "diagonal-unitary" && w.constructor_tag != "ideal-factor") {
      mismatch("constructor " + w.constructor_tag + " does not act on a unitary factor");
    }
    return realize_aiii(w, e.param("p"), e.param("q"));
  }
  if (e.family == "CII") {
    require_single_factor(w);
    if (w.constructor_tag != "diagonal-symplectic" && w.constructor_tag != "ideal-factor") {
      mismatch("constructor " + w.constructor_tag + " does not act on a symplectic factor");
    }
    return realize_cii(w, e.param("p"), e.param("q"));
  }
  mismatch("no realization model for family " + e.family);
}

TripleReport verify_triple(const QuatTriple& t) {
  TripleReport rep;
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.failures.push_back(msg);
  };
  const Matrix* js[3] = {&t.j1, &t.j2, &t.j3};
  const char* names[3] = {"J1", "J2", "J3"};
  const int n = t.j1.rows();
  if (n == 0) {
    fail("triple is empty");
    return rep;
  }
  for (int i = 0; i < 3; ++i) {
    if (js[i]->rows() != n || js[i]->cols() != n) {
      fail("triple orders differ");
      return rep;
    }
  }
  const Matrix minus_id = Matrix::scalar(n, Rational(-1));
  for (int i = 0; i < 3; ++i) {
    if (!js[i]->is_skew()) fail(std::string(names[i]) + " is not skew");
    if ((*js[i]) * (*js[i]) != minus_id) fail(std::string(names[i]) + "*" + names[i] + " is not -Id");
  }
  const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& c : cyc) {
    if ((*js[c[0]]) * (*js[c[1]]) != *js[c[2]]) {
      fail(std::string(names[c[0]]) + "*" + names[c[1]] + " is not " + names[c[2]]);
    }
    if (!anticommutator(*js[c[0]], *js[c[1]]).is_zero()) {
      fail(std::string(names[c[0]]) + " and " + names[c[1]] + " do not anticommute");
    }
  }
  return rep;
}

std::array<GeneratorStatus, 3> generator_status(const QuatTriple& t) {
  std::array<GeneratorStatus, 3> out;
  const Matrix* js[3] = {&t.j1, &t.j2, &t.j3};
  const int n = t.j1.rows();
  for (int i = 0; i < 3; ++i) {
    if (n == 0 || js[i]->rows() != n || js[i]->cols() != n) {
      for (auto& g : out) g = {false, false, false};
      return out;
    }
  }
  const Matrix minus_id = Matrix::scalar(n, Rational(-1));
  for (int i = 0; i < 3; ++i) {
    out[i].skew = js[i]->is_skew();
    out[i].squares_to_minus_id = ((*js[i]) * (*js[i]) == minus_id);
    out[i].cyclic_product = ((*js[(i + 1) % 3]) * (*js[(i + 2) % 3]) == *js[i]);
  }
  return out;
}

PreservationReport preserves_fkm(const FKMFoliation& f, const QuatTriple& t, CheckMode mode,
                                 int trials, uint64_t seed) {
  const int n = 2 * f.system.l;
  const Matrix* js[3] = {&t.j1, &t.j2, &t.j3};
  for (const Matrix* j : js) {
    if (j->rows() != n || j->cols() != n) {
      throw std::invalid_argument("triple order does not match the ambient dimension");
    }
  }
  PreservationReport rep;
  const bool symbolic = mode == CheckMode::Symbolic || (mode == CheckMode::Auto && n <= 32);
  if (symbolic) {
    rep.symbolic = true;
    for (int i = 0; i < 3; ++i) {
      rep.generator_ok[i] = quartic_flow_derivative(f, *js[i]).is_zero();
    }
  } else {
    if (trials < 1) throw std::invalid_argument("sampled preservation check needs trials >= 1");
    rep.trials = trials;
    SplitMix64 rng(seed);
    for (int s = 0; s < trials; ++s) {
      Vec x = rng.coord_vec(n);
      Vec g = cm_gradient(f, x);
      for (int i = 0; i < 3; ++i) {
        if (dot(g, js[i]->apply(x)) != 0) rep.generator_ok[i] = false;
      }
    }
  }
  rep.ok = rep.generator_ok[0] && rep.generator_ok[1] && rep.generator_ok[2];
  return rep;
}

HopfReport hopf_orbit_sample(const FKMFoliation& f, const QuatTriple& t, const Vec& p,
                             const std::vector<Vec>& grid) {
  const int n = 2 * f.system.l;
  const Matrix* js[3] = {&t.j1, &t.j2, &t.j3};
  for (const Matrix* j : js) {
    if (j->rows() != n || j->cols() != n) {
      throw std::invalid_argument("triple order does not match the ambient dimension");
    }
  }
  if (static_cast<int>(p.size()) != n) {
    throw std::invalid_argument("base point does not match the ambient dimension");
  }
  const Rational base = cm_eval(f, p);
  HopfReport rep;
  for (const Vec& a : grid) {
    if (a.size() != 4) {
      throw std::invalid_argument("orbit grid point is not a length-4 coefficient vector");
    }
    if (a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3] != 1) {
      throw std::invalid_argument("orbit grid point is not on the unit sphere");
    }
    Vec y = vec_scale(a[0], p);
    for (int i = 0; i < 3; ++i) {
      y = vec_add(y, vec_scale(a[i + 1], js[i]->apply(p)));
    }
    if (cm_eval(f, y) != base) rep.ok = false;
    ++rep.points;
  }
  return rep;
}

}  // namespace polarfol
