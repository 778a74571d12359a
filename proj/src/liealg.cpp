#include <polarfol/liealg.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <polarfol/linsolve.hpp>
#include <polarfol/matrix.hpp>

namespace polarfol {

const char* factor_kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::Unitary: return "unitary";
    case FactorKind::SpecialUnitary: return "special-unitary";
    case FactorKind::OrthogonalEven: return "orthogonal-even";
    case FactorKind::OrthogonalOdd: return "orthogonal-odd";
    case FactorKind::Symplectic: return "symplectic";
  }
  return "?";
}

FlipRule flip_rule(const Factor& f) {
  switch (f.kind) {
    case FactorKind::Unitary:
    case FactorKind::SpecialUnitary:
      return FlipRule::None;
    case FactorKind::OrthogonalEven:
      return f.half_spin ? FlipRule::EvenOnly : FlipRule::All;
    case FactorKind::OrthogonalOdd:
    case FactorKind::Symplectic:
      return FlipRule::All;
  }
  return FlipRule::None;
}

int WeightSystem::coord_dim() const {
  int d = 0;
  for (const auto& f : factors) d += f.rank;
  return d;
}

int WeightSystem::factor_offset(int f) const {
  int off = 0;
  for (int i = 0; i < f; ++i) off += factors[i].rank;
  return off;
}

namespace {

Matrix rows_to_matrix(const std::vector<Vec>& rows, int d) {
  Matrix m(static_cast<int>(rows.size()), d);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < d; ++j) m.at(i, j) = rows[i][j];
  return m;
}

Vec project_mod(const std::vector<Vec>& constraints, const Vec& v) {
  if (constraints.empty()) return v;
  const int c = static_cast<int>(constraints.size());
  const int d = static_cast<int>(v.size());
  Matrix cm = rows_to_matrix(constraints, d);
  Matrix gram = cm * cm.transpose();
  SolveResult res = solve_rational(gram, cm.apply(v));
  if (res.status != SolveStatus::Unique) {
    throw std::logic_error("dependent constraint rows");
  }
  Vec out = v;
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < d; ++j) out[j] -= constraints[i][j] * res.particular[i];
  return out;
}

Vec sign_normalize(Vec v) {
  for (const auto& x : v) {
    int s = sgn(x);
    if (s > 0) return v;
    if (s < 0) return vec_neg(std::move(v));
  }
  return v;
}

// Incremental exact row-echelon basis used for greedy independent-row picks.
struct EchelonBasis {
  std::vector<Vec> rows;  // each with a leading 1 at pivot[i]
  std::vector<int> pivots;

  // Returns true (and absorbs the row) if it enlarges the span.
  bool try_add(Vec v) {
    for (size_t i = 0; i < rows.size(); ++i) {
      if (sgn(v[pivots[i]]) != 0) {
        Rational f = v[pivots[i]];
        for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[i][j];
      }
    }
    int p = -1;
    for (size_t j = 0; j < v.size(); ++j) {
      if (sgn(v[j]) != 0) {
        p = static_cast<int>(j);
        break;
      }
    }
    if (p < 0) return false;
    Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

bool vec_less(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

std::vector<Vec> sorted_multiset(std::vector<Vec> v) {
  std::sort(v.begin(), v.end(), vec_less);
  return v;
}

}  // namespace

Vec normalize_weight(const WeightSystem& ws, const Vec& raw) {
  return sign_normalize(project_mod(ws.constraints, raw));
}

std::vector<AutGen> aut_generators(const WeightSystem& ws) {
  std::vector<AutGen> gens;
  for (int f = 0; f < static_cast<int>(ws.factors.size()); ++f) {
    const Factor& fac = ws.factors[f];
    for (int a = 0; a + 1 < fac.rank; ++a) {
      gens.push_back({AutGen::Kind::Transpose, f, a, a + 1});
    }
    switch (flip_rule(fac)) {
      case FlipRule::All:
        for (int a = 0; a < fac.rank; ++a) {
          gens.push_back({AutGen::Kind::Flip, f, a, -1});
        }
        break;
      case FlipRule::EvenOnly:
        for (int a = 0; a + 1 < fac.rank; ++a) {
          gens.push_back({AutGen::Kind::DoubleFlip, f, a, a + 1});
        }
        break;
      case FlipRule::None:
        break;
    }
  }
  // Swaps of exchangeable identical factors (adjacent transpositions per class).
  std::map<int, std::vector<int>> classes;
  for (int f = 0; f < static_cast<int>(ws.factors.size()); ++f) {
    if (ws.factors[f].swap_class >= 0) classes[ws.factors[f].swap_class].push_back(f);
  }
  for (const auto& [cls, members] : classes) {
    (void)cls;
    for (size_t i = 0; i + 1 < members.size(); ++i) {
      gens.push_back({AutGen::Kind::FactorSwap, -1, members[i], members[i + 1]});
    }
  }
  gens.push_back({AutGen::Kind::Negate, -1, -1, -1});
  return gens;
}

Vec apply_gen(const WeightSystem& ws, const AutGen& g, const Vec& h) {
  Vec out = h;
  switch (g.kind) {
    case AutGen::Kind::Transpose: {
      int off = ws.factor_offset(g.factor);
      std::swap(out[off + g.a], out[off + g.b]);
      break;
    }
    case AutGen::Kind::Flip: {
      int off = ws.factor_offset(g.factor);
      out[off + g.a] = -out[off + g.a];
      break;
    }
    case AutGen::Kind::DoubleFlip: {
      int off = ws.factor_offset(g.factor);
      out[off + g.a] = -out[off + g.a];
      out[off + g.b] = -out[off + g.b];
      break;
    }
    case AutGen::Kind::FactorSwap: {
      int oa = ws.factor_offset(g.a), ob = ws.factor_offset(g.b);
      int r = ws.factors[g.a].rank;
      for (int j = 0; j < r; ++j) std::swap(out[oa + j], out[ob + j]);
      break;
    }
    case AutGen::Kind::Negate:
      for (auto& x : out) x = -x;
      break;
  }
  return out;
}

void WeightSystem::validate() const {
  const int d = coord_dim();
  if (factors.empty() || d == 0) throw std::logic_error("empty weight system");
  for (const auto& f : factors) {
    if (f.rank < 1) throw std::logic_error("factor of rank < 1");
    if (f.half_spin && f.kind != FactorKind::OrthogonalEven) {
      throw std::logic_error("half_spin only applies to even orthogonal factors");
    }
  }
  for (const auto& row : constraints) {
    if (static_cast<int>(row.size()) != d) throw std::logic_error("constraint size");
  }
  {
    EchelonBasis eb;
    for (const auto& row : constraints) {
      if (!eb.try_add(row)) throw std::logic_error("dependent constraint rows");
    }
  }
  if (weights.empty()) throw std::logic_error("no weights");
  for (const auto& w : weights) {
    if (static_cast<int>(w.size()) != d) throw std::logic_error("weight size");
    if (vec_is_zero(w)) throw std::logic_error("zero row in weight list");
    if (w != normalize_weight(*this, w)) throw std::logic_error("unnormalized weight");
  }
  if (rep_dim != 2 * static_cast<int>(weights.size()) + zero_multiplicity) {
    throw std::logic_error("dimension bookkeeping mismatch");
  }
  {
    EchelonBasis eb;
    for (const auto& row : constraints) eb.try_add(row);
    for (const auto& w : weights) eb.try_add(w);
    if (static_cast<int>(eb.rows.size()) != d) {
      throw std::logic_error("weights and constraints do not span the Cartan dual");
    }
  }
  // Exchangeable factors must be structurally identical.
  std::map<int, const Factor*> rep;
  for (const auto& f : factors) {
    if (f.swap_class < 0) continue;
    auto [it, fresh] = rep.emplace(f.swap_class, &f);
    if (!fresh) {
      const Factor& g = *it->second;
      if (g.kind != f.kind || g.rank != f.rank || g.half_spin != f.half_spin) {
        throw std::logic_error("swap class joins non-identical factors");
      }
    }
  }
  // Every generator must permute the weight multiset and fix the constraint space.
  const std::vector<Vec> base = sorted_multiset(weights);
  for (const AutGen& g : aut_generators(*this)) {
    std::vector<Vec> mapped;
    mapped.reserve(weights.size());
    for (const auto& w : weights) mapped.push_back(sign_normalize(apply_gen(*this, g, w)));
    if (sorted_multiset(std::move(mapped)) != base) {
      throw std::logic_error("automorphism generator breaks the weight multiset");
    }
    EchelonBasis eb;
    for (const auto& row : constraints) eb.try_add(row);
    for (const auto& row : constraints) {
      if (eb.try_add(apply_gen(*this, g, row))) {
        throw std::logic_error("automorphism generator moves the constraint space");
      }
    }
  }
}

namespace {

Vec factor_form(const Factor& fac, Vec block) {
  switch (flip_rule(fac)) {
    case FlipRule::None:
      std::sort(block.begin(), block.end());
      break;
    case FlipRule::All:
      for (auto& x : block)
        if (sgn(x) > 0) x = -x;
      std::sort(block.begin(), block.end());
      break;
    case FlipRule::EvenOnly: {
      int positives = 0, zeros = 0;
      for (const auto& x : block) {
        if (sgn(x) > 0) ++positives;
        if (sgn(x) == 0) ++zeros;
      }
      for (auto& x : block)
        if (sgn(x) > 0) x = -x;
      std::sort(block.begin(), block.end());
      if (positives % 2 == 1 && zeros == 0) {
        // One flip too many was used; undo it on the entry of least magnitude.
        block.back() = -block.back();
        std::sort(block.begin(), block.end());
      }
      break;
    }
  }
  return block;
}

Vec full_form(const WeightSystem& ws, const Vec& h) {
  std::vector<Vec> blocks(ws.factors.size());
  for (size_t f = 0; f < ws.factors.size(); ++f) {
    int off = ws.factor_offset(static_cast<int>(f));
    Vec b(h.begin() + off, h.begin() + off + ws.factors[f].rank);
    blocks[f] = factor_form(ws.factors[f], std::move(b));
  }
  std::map<int, std::vector<int>> classes;
  for (int f = 0; f < static_cast<int>(ws.factors.size()); ++f) {
    if (ws.factors[f].swap_class >= 0) classes[ws.factors[f].swap_class].push_back(f);
  }
  for (const auto& [cls, members] : classes) {
    (void)cls;
    std::vector<Vec> sub;
    sub.reserve(members.size());
    for (int f : members) sub.push_back(blocks[f]);
    std::sort(sub.begin(), sub.end(), vec_less);
    for (size_t i = 0; i < members.size(); ++i) blocks[members[i]] = std::move(sub[i]);
  }
  Vec out;
  out.reserve(h.size());
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

Vec canonicalize(const WeightSystem& ws, const Vec& h) {
  Vec a = full_form(ws, h);
  Vec b = full_form(ws, vec_neg(h));
  return vec_less(a, b) ? a : b;
}

std::vector<Vec> brute_force_J(const WeightSystem& ws) {
  const int d = ws.coord_dim();
  if (d > RANK_GUARD) {
    std::ostringstream os;
    os << "sign enumeration refused: Cartan dimension " << d << " exceeds guard "
       << RANK_GUARD;
    throw GuardError(os.str());
  }
  if (ws.zero_multiplicity > 0) return {};  // a zero weight admits no complex structure

  // Independent constraint rows, then greedily chosen weight rows to complete
  // an invertible square system.
  std::vector<Vec> crows;
  {
    EchelonBasis eb;
    for (const auto& row : ws.constraints) {
      if (eb.try_add(row)) crows.push_back(row);
    }
  }
  std::vector<Vec> uniq = ws.weights;
  std::sort(uniq.begin(), uniq.end(), vec_less);
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());

  const int c = static_cast<int>(crows.size());
  const int s = d - c;
  std::vector<Vec> chosen;
  {
    EchelonBasis eb;
    for (const auto& row : crows) eb.try_add(row);
    for (const auto& w : uniq) {
      if (static_cast<int>(chosen.size()) == s) break;
      if (eb.try_add(w)) chosen.push_back(w);
    }
  }
  if (static_cast<int>(chosen.size()) != s) {
    throw std::logic_error("weight rows do not complete the constraint system");
  }

  std::vector<Vec> rows = chosen;
  rows.insert(rows.end(), crows.begin(), crows.end());
  auto minv = inverse(rows_to_matrix(rows, d));
  if (!minv) throw std::logic_error("selected rows not invertible");

  // Columns of the inverse paired with the free sign slots.
  std::vector<Vec> cols(s, Vec(d));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < d; ++j) cols[i][j] = minv->at(j, i);

  const int nw = static_cast<int>(uniq.size());
  std::vector<std::vector<Rational>> coeff(nw, std::vector<Rational>(s));
  for (int w = 0; w < nw; ++w)
    for (int i = 0; i < s; ++i) coeff[w][i] = dot(uniq[w], cols[i]);

  Vec h(d, Rational(0));
  std::vector<Rational> vals(nw, Rational(0));
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < d; ++j) h[j] += cols[i][j];
  }
  for (int w = 0; w < nw; ++w) {
    for (int i = 0; i < s; ++i) vals[w] += coeff[w][i];
  }
  std::vector<int> eps(s, 1);

  std::vector<Vec> out;
  auto check = [&]() {
    for (int w = 0; w < nw; ++w) {
      if (vals[w] != 1 && vals[w] != -1) return;
    }
    out.push_back(h);
  };
  check();
  const std::uint64_t total = std::uint64_t{1} << s;
  for (std::uint64_t t = 1; t < total; ++t) {
    int b = 0;
    while (((t >> b) & 1u) == 0) ++b;
    eps[b] = -eps[b];
    Rational f(2 * eps[b]);
    for (int j = 0; j < d; ++j) h[j] += f * cols[b][j];
    for (int w = 0; w < nw; ++w) vals[w] += f * coeff[w][b];
    check();
  }
  std::sort(out.begin(), out.end(), vec_less);
  return out;
}

Moduli j_moduli(const WeightSystem& ws) {
  Moduli m;
  m.solutions = brute_force_J(ws);
  std::set<Vec, decltype(&vec_less)> classes(&vec_less);
  for (const auto& h : m.solutions) classes.insert(canonicalize(ws, h));
  m.classes.assign(classes.begin(), classes.end());
  return m;
}

std::vector<Vec> center_directions(const WeightSystem& ws) {
  const int d = ws.coord_dim();
  std::vector<Vec> cand;
  for (int f = 0; f < static_cast<int>(ws.factors.size()); ++f) {
    const Factor& fac = ws.factors[f];
    int off = ws.factor_offset(f);
    if (fac.kind == FactorKind::Unitary ||
        (fac.kind == FactorKind::OrthogonalEven && fac.rank == 1)) {
      Vec v(d, Rational(0));
      for (int j = 0; j < fac.rank; ++j) v[off + j] = 1;
      cand.push_back(std::move(v));
    }
  }
  if (cand.empty() || ws.constraints.empty()) return cand;
  // Combinations of the candidate directions annihilated by the constraints.
  const int t = static_cast<int>(cand.size());
  Matrix a(static_cast<int>(ws.constraints.size()), t);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < t; ++j) a.at(i, j) = dot(ws.constraints[i], cand[j]);
  SolveResult res = solve_rational(a, Vec(a.rows(), Rational(0)));
  std::vector<Vec> out;
  for (const auto& y : res.nullspace) {
    Vec v(d, Rational(0));
    for (int j = 0; j < t; ++j)
      for (int k = 0; k < d; ++k) v[k] += y[j] * cand[j][k];
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

struct PartAnalysis {
  Verdict verdict = Verdict::Member;
  std::string tag;     // constructor tag when Member
  std::string reason;  // diagnostic otherwise
};

PartAnalysis analyze_unitary_block(const Vec& b) {
  std::vector<Rational> plus(b), minus;
  minus.reserve(b.size());
  for (const auto& x : b) minus.push_back(-x);
  std::sort(plus.begin(), plus.end());
  std::sort(minus.begin(), minus.end());
  if (plus != minus) {
    return {Verdict::NotMember, "",
            "eigenvalue multiset of a unitary block is not symmetric under negation"};
  }
  bool small = true;
  for (const auto& x : b) {
    if (x != 0 && x != 1 && x != -1) small = false;
  }
  if (small) return {Verdict::Member, "diagonal-unitary", ""};
  return {Verdict::Unknown, "", "unitary block with spin content beyond one"};
}

PartAnalysis analyze_orthogonal_block(const Vec& b, int defining_dim) {
  int zeros = 0;
  for (const auto& x : b)
    if (sgn(x) == 0) ++zeros;
  // Without an invariant zero-direction every summand is quaternionic, so
  // plane speeds pair up.  Odd defining dimension always fixes an axis.
  if (zeros == 0 && defining_dim % 2 == 0) {
    std::map<Rational, int> mult;
    for (const auto& x : b) mult[abs(x)] += 1;
    for (const auto& [v, m] : mult) {
      (void)v;
      if (m % 2 != 0) {
        return {Verdict::NotMember, "",
                "zero-free orthogonal block with an odd number of planes of equal speed"};
      }
    }
  }
  int nonzero = static_cast<int>(b.size()) - zeros;
  bool all_unit = true;
  for (const auto& x : b) {
    if (sgn(x) != 0 && x != 1 && x != -1) all_unit = false;
  }
  if (all_unit && nonzero % 2 == 0 && nonzero > 0) {
    return {Verdict::Member, "so4-block-diagonal", ""};
  }
  if (nonzero == 1 && defining_dim >= 3) {
    for (const auto& x : b) {
      if (sgn(x) != 0 && (x == 2 || x == -2)) {
        return {Verdict::Member, "canonical-so3", ""};
      }
    }
  }
  return {Verdict::Unknown, "", "orthogonal block outside the constructor library"};
}

PartAnalysis analyze_symplectic_block(const Vec& b) {
  bool small = true;
  int nonzero = 0;
  for (const auto& x : b) {
    if (sgn(x) != 0) ++nonzero;
    if (x != 0 && x != 1 && x != -1) small = false;
  }
  if (small) return {Verdict::Member, "diagonal-symplectic", ""};
  if (nonzero == 1) {
    // A lone even-weight irreducible inside a quaternionic module would have
    // odd quaternionic multiplicity; odd top weights need absent intermediate
    // eigenvalues. Either way no triple exists.
    return {Verdict::NotMember, "",
            "isolated higher-spin symplectic block requires even multiplicity"};
  }
  return {Verdict::Unknown, "", "symplectic block outside the constructor library"};
}

}  // namespace

MembershipReport in_su2(const WeightSystem& ws, const Vec& h) {
  const int d = ws.coord_dim();
  if (static_cast<int>(h.size()) != d) {
    throw std::invalid_argument("Cartan element has wrong dimension");
  }
  for (const auto& row : ws.constraints) {
    if (dot(row, h) != 0) {
      throw std::invalid_argument("Cartan element violates the factor constraints");
    }
  }
  // A triple through h acting by standard and trivial summands forces every
  // nonzero weight to evaluate to +1 or -1 on h.
  for (const auto& w : ws.weights) {
    Rational v = dot(w, h);
    if (v != 1 && v != -1) {
      return {Verdict::NotMember, std::nullopt,
              "h is not a compatible complex structure on the module"};
    }
  }
  for (const auto& z : center_directions(ws)) {
    if (dot(z, h) != 0) {
      return {Verdict::NotMember, std::nullopt,
              "nonzero component along the center of the acting algebra"};
    }
  }

  std::vector<int> support;
  std::vector<std::string> tags;
  for (int f = 0; f < static_cast<int>(ws.factors.size()); ++f) {
    const Factor& fac = ws.factors[f];
    int off = ws.factor_offset(f);
    Vec b(h.begin() + off, h.begin() + off + fac.rank);
    if (vec_is_zero(b)) continue;
    for (const auto& x : b) {
      if (!is_integer(x)) {
        return {Verdict::NotMember, std::nullopt,
                "defining eigenvalues of a supporting factor are not integers"};
      }
    }
    PartAnalysis pa;
    switch (fac.kind) {
      case FactorKind::Unitary:
      case FactorKind::SpecialUnitary:
        pa = analyze_unitary_block(b);
        break;
      case FactorKind::OrthogonalEven:
        pa = analyze_orthogonal_block(b, 2 * fac.rank);
        break;
      case FactorKind::OrthogonalOdd:
        pa = analyze_orthogonal_block(b, 2 * fac.rank + 1);
        break;
      case FactorKind::Symplectic:
        pa = analyze_symplectic_block(b);
        break;
    }
    if (pa.verdict == Verdict::NotMember) {
      return {Verdict::NotMember, std::nullopt, pa.reason};
    }
    if (pa.verdict == Verdict::Unknown) {
      return {Verdict::Unknown, std::nullopt, pa.reason};
    }
    support.push_back(f);
    tags.push_back(pa.tag);
  }
  if (support.empty()) {
    return {Verdict::NotMember, std::nullopt, "zero Cartan element"};
  }

  Su2Witness wit;
  wit.cartan = h;
  wit.factor_indices = support;
  if (support.size() == 1) {
    const Factor& fac = ws.factors[support[0]];
    int off = ws.factor_offset(support[0]);
    Vec b(h.begin() + off, h.begin() + off + fac.rank);
    int zeros = 0;
    for (const auto& x : b)
      if (sgn(x) == 0) ++zeros;
    std::string tag = tags[0];
    bool ideal = false;
    if (tag == "diagonal-symplectic" && fac.rank == 1) {
      tag = "ideal-factor";  // the block is all of sp(1)
      ideal = true;
    } else if (tag == "diagonal-unitary" && fac.kind == FactorKind::SpecialUnitary &&
               fac.rank == 2 && zeros == 0) {
      tag = "ideal-factor";  // the block is all of su(2)
      ideal = true;
    } else if (tag == "diagonal-unitary") {
      ideal = (fac.rank == 2 && zeros == 0);
    } else if (tag == "so4-block-diagonal") {
      ideal = (fac.rank == 2 && zeros == 0);
    } else if (tag == "canonical-so3") {
      ideal = (fac.kind == FactorKind::OrthogonalOdd && fac.rank == 1);
    }
    wit.constructor_tag = tag;
    wit.is_ideal = ideal;
  } else {
    wit.constructor_tag = "cross-factor-diagonal";
    wit.parts = tags;
    wit.is_ideal = false;
  }
  return {Verdict::Member, wit, ""};
}

}  // namespace polarfol
