#include <polarfol/clifford.hpp>

#include <climits>
#include <stdexcept>

namespace polarfol {

namespace {

// Largest m the exact construction is prepared to materialize.
constexpr int kGuardM = 16;

using IVec = std::vector<int>;

IVec cd_conj(IVec x) {
  for (size_t i = 1; i < x.size(); ++i) x[i] = -x[i];
  return x;
}

IVec cd_add(IVec a, const IVec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

IVec cd_sub(IVec a, const IVec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

// Doubling product: (a,b)(c,d) = (ac - conj(d)b, da + b conj(c)).
IVec cd_mult(const IVec& x, const IVec& y) {
  const size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const size_t h = n / 2;
  const IVec a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  const IVec c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  IVec re = cd_sub(cd_mult(a, c), cd_mult(cd_conj(d), b));
  const IVec im = cd_add(cd_mult(d, a), cd_mult(b, cd_conj(c)));
  re.insert(re.end(), im.begin(), im.end());
  return re;
}

Matrix mult_matrix(int dim, int index, bool from_left) {
  if (dim != 1 && dim != 2 && dim != 4 && dim != 8)
    throw std::invalid_argument("Cayley-Dickson dimension must be 1, 2, 4 or 8");
  if (index < 0 || index >= dim)
    throw std::invalid_argument("basis unit index out of range");
  IVec u(dim, 0);
  u[index] = 1;
  Matrix out(dim, dim);
  for (int j = 0; j < dim; ++j) {
    IVec e(dim, 0);
    e[j] = 1;
    const IVec col = from_left ? cd_mult(u, e) : cd_mult(e, u);
    for (int i = 0; i < dim; ++i) out.at(i, j) = col[i];
  }
  return out;
}

void place_block(Matrix& dst, const Matrix& src, int r0, int c0, int sign) {
  for (int i = 0; i < src.rows(); ++i)
    for (int j = 0; j < src.cols(); ++j) {
      const Rational& v = src.at(i, j);
      if (sgn(v) != 0) dst.at(r0 + i, c0 + j) = sign < 0 ? Rational(-v) : v;
    }
}

// Eight anticommuting skew square roots of -Id on R^16, the periodicity
// step: F_i = diag(A_i,-A_i) for the octonion family A_1..A_7, plus the
// off-diagonal exchange F_8.
std::vector<Matrix> doubled_family() {
  std::vector<Matrix> out;
  const Matrix z(8, 8);
  for (int s = 1; s <= 7; ++s) {
    const Matrix a = mult_matrix(8, s, true);
    out.push_back(block2(a, z, z, -a));
  }
  const Matrix id8 = Matrix::identity(8);
  out.push_back(block2(z, id8, -id8, z));
  return out;
}

void check_m(int m, const char* who) {
  if (m < 1) throw std::invalid_argument(std::string(who) + ": m must be >= 1");
  if (m > kGuardM)
    throw GuardError(std::string(who) + ": m above the exact construction guard");
}

// Skew basis of the isometric commutant of the block family with k_plus
// plus-class and k_minus minus-class copies. Cross-class pairs admit no
// intertwiner, so generators pair copies within one class only.
std::vector<Matrix> commutant_basis(int m, int k, int k_minus) {
  const int d = delta(m);
  const int l = k * d;
  const int k_plus = k - k_minus;
  const auto units = irreducible_commutant_units(m);
  const Matrix idd = Matrix::identity(d);
  std::vector<Matrix> out;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if ((a < k_plus) != (b < k_plus)) continue;
      Matrix g(l, l);
      place_block(g, idd, a * d, b * d, +1);
      place_block(g, idd, b * d, a * d, -1);
      out.push_back(g);
      for (const auto& u : units) {
        Matrix h(l, l);
        place_block(h, u, a * d, b * d, +1);
        place_block(h, u, b * d, a * d, +1);
        out.push_back(h);
      }
    }
  }
  for (int a = 0; a < k; ++a) {
    for (const auto& u : units) {
      Matrix g(l, l);
      place_block(g, u, a * d, a * d, +1);
      out.push_back(g);
    }
  }
  return out;
}

CliffordSystem build_impl(int m, int k, std::optional<std::pair<int, int>> split) {
  check_m(m, "build_clifford_system");
  if (k < 1)
    throw std::invalid_argument("build_clifford_system: module count must be >= 1");
  const int d = delta(m);
  const int l = k * d;
  if (l > 1024)
    throw GuardError("build_clifford_system: order above the exact construction guard");
  if (l - m - 1 < 0)
    throw std::invalid_argument(
        "infeasible parameters: l = k*delta(m) must be at least m+1");
  CliffordSystem sys;
  sys.m = m;
  sys.l = l;
  sys.k = k;
  sys.split = split;
  const Matrix idl = Matrix::identity(l);
  const Matrix z(l, l);
  sys.matrices.push_back(block2(idl, z, z, -idl));
  sys.matrices.push_back(block2(z, idl, idl, z));
  for (const auto& e : build_skew_family(m, k, split))
    sys.matrices.push_back(block2(z, e, -e, z));
  for (const auto& c : commutant_basis(m, k, split ? split->second : 0))
    sys.commutant_generators.push_back(direct_sum(c, c));
  return sys;
}

}  // namespace

int delta(int m) {
  if (m < 1) throw std::invalid_argument("delta: m must be >= 1");
  static const int base[8] = {1, 2, 4, 4, 8, 8, 8, 8};
  long long d = base[(m - 1) % 8];
  for (int step = (m - 1) / 8; step > 0; --step) {
    d *= 16;
    if (d > INT_MAX) throw GuardError("delta: value above the exact range");
  }
  return static_cast<int>(d);
}

Matrix cd_left_mult(int dim, int index) { return mult_matrix(dim, index, true); }

Matrix cd_right_mult(int dim, int index) { return mult_matrix(dim, index, false); }

std::vector<Matrix> irreducible_family(int m) {
  check_m(m, "irreducible_family");
  std::vector<Matrix> gens;
  if (m <= 8) {
    const int d = delta(m);
    for (int s = 1; s <= m - 1; ++s) gens.push_back(cd_left_mult(d, s));
  } else {
    const auto tail = doubled_family();
    Matrix w = tail[0];
    for (size_t i = 1; i < tail.size(); ++i) w = w * tail[i];
    const Matrix idh = Matrix::identity(delta(m - 8));
    for (const auto& e : irreducible_family(m - 8)) gens.push_back(kron(e, w));
    for (const auto& f : tail) gens.push_back(kron(idh, f));
  }
  if (m % 4 == 0) {
    Matrix vol = gens[0];
    for (size_t i = 1; i < gens.size(); ++i) vol = vol * gens[i];
    if ((-vol).is_identity()) {
      gens.back() = -gens.back();
    } else if (!vol.is_identity()) {
      throw std::logic_error("irreducible_family: class marker is not +-Id");
    }
  }
  return gens;
}

std::vector<Matrix> irreducible_commutant_units(int m) {
  check_m(m, "irreducible_commutant_units");
  if (m > 8) {
    const Matrix id16 = Matrix::identity(16);
    std::vector<Matrix> out;
    for (const auto& u : irreducible_commutant_units(m - 8))
      out.push_back(kron(u, id16));
    return out;
  }
  switch (m) {
    case 2:
      return {cd_left_mult(2, 1)};
    case 3:
    case 4:
      // Right multiplications; the sign on the third unit makes the
      // triple cyclic under the reversed product R_u R_v = R_{vu}.
      return {cd_right_mult(4, 1), cd_right_mult(4, 2), -cd_right_mult(4, 3)};
    case 5: {
      // On the doubled quaternions the family acts by u*(x1) and (x2)*u
      // on the halves plus one exchange; x -> (x1*p, conj(p)*x2) commutes
      // with all of it and multiplies reversed, as above.
      std::vector<Matrix> out;
      for (int s = 1; s <= 3; ++s) {
        const Matrix q = direct_sum(cd_right_mult(4, s), -cd_left_mult(4, s));
        out.push_back(s == 3 ? -q : q);
      }
      return out;
    }
    case 6:
      return {direct_sum(cd_right_mult(4, 1), -cd_left_mult(4, 1))};
    default:
      return {};
  }
}

std::vector<Matrix> build_skew_family(int m, int count,
                                      std::optional<std::pair<int, int>> class_split) {
  check_m(m, "build_skew_family");
  if (count < 1)
    throw std::invalid_argument("build_skew_family: count must be >= 1");
  int k_minus = 0;
  if (class_split) {
    if (m % 4 != 0)
      throw std::invalid_argument("invalid class split: m is not divisible by 4");
    if (class_split->first < 0 || class_split->second < 0 ||
        class_split->first + class_split->second != count)
      throw std::invalid_argument(
          "invalid class split: parts must be nonnegative and sum to the count");
    k_minus = class_split->second;
  }
  const auto irr = irreducible_family(m);
  const int d = delta(m);
  const int l = count * d;
  std::vector<Matrix> out;
  for (int i = 0; i + 1 < m; ++i) {
    Matrix b(l, l);
    for (int c = 0; c < count; ++c) {
      const bool flip = i + 2 == m && c >= count - k_minus;
      place_block(b, irr[i], c * d, c * d, flip ? -1 : +1);
    }
    out.push_back(b);
  }
  return out;
}

CliffordSystem build_clifford_system(int m, int k) {
  if (m >= 1 && m % 4 == 0) return build_impl(m, k, std::make_pair(k, 0));
  return build_impl(m, k, std::nullopt);
}

CliffordSystem build_clifford_system(int m, int k_plus, int k_minus) {
  if (m < 1)
    throw std::invalid_argument("build_clifford_system: m must be >= 1");
  if (m % 4 != 0)
    throw std::invalid_argument("invalid class split: m is not divisible by 4");
  return build_impl(m, k_plus + k_minus, std::make_pair(k_plus, k_minus));
}

CliffordReport verify_clifford(const CliffordSystem& system) {
  CliffordReport rep;
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.failures.push_back(std::move(msg));
  };
  const int n = 2 * system.l;
  if (system.m < 1) {
    fail("m must be at least 1");
    return rep;
  }
  bool sized = system.matrices.size() == static_cast<size_t>(system.m) + 1;
  for (const auto& p : system.matrices)
    sized = sized && p.rows() == n && p.cols() == n;
  if (!sized) {
    fail("matrix count or order does not match m and l");
    return rep;
  }
  if (system.split) {
    if (system.m % 4 != 0) fail("class split recorded for m not divisible by 4");
    if (system.split->first < 0 || system.split->second < 0 ||
        system.split->first + system.split->second != system.k)
      fail("class split does not sum to the module count");
  }
  bool delta_ok = true;
  try {
    delta_ok = system.l == system.k * delta(system.m);
  } catch (const std::exception&) {
    delta_ok = false;
  }
  if (!delta_ok) fail("l does not equal k*delta(m)");
  const auto& ps = system.matrices;
  for (size_t i = 0; i < ps.size(); ++i) {
    if (!ps[i].is_symmetric())
      fail("P" + std::to_string(i) + " is not symmetric");
    for (size_t j = i; j < ps.size(); ++j) {
      const Matrix ac = anticommutator(ps[i], ps[j]);
      const bool ok = i == j ? ac == Matrix::scalar(n, 2) : ac.is_zero();
      if (!ok)
        fail("P" + std::to_string(i) + "*P" + std::to_string(j) + " + P" +
             std::to_string(j) + "*P" + std::to_string(i) + " is not " +
             (i == j ? "2*Id" : "zero"));
    }
  }
  for (size_t g = 0; g < system.commutant_generators.size(); ++g) {
    const Matrix& c = system.commutant_generators[g];
    if (c.rows() != n || c.cols() != n || !c.is_skew()) {
      fail("commutant generator " + std::to_string(g) + " is not skew of order 2l");
      continue;
    }
    for (size_t i = 0; i < ps.size(); ++i)
      if (!commutator(c, ps[i]).is_zero())
        fail("commutant generator " + std::to_string(g) + " does not commute with P" +
             std::to_string(i));
  }
  return rep;
}

}  // namespace polarfol
