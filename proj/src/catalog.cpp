#include <polarfol/catalog.hpp>

#include <algorithm>
#include <map>
#include <sstream>

#include <polarfol/clifford.hpp>

namespace polarfol {

namespace {

Vec zero_vec(int d) { return Vec(d, Rational(0)); }

bool vec_lt(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

void push_pair(WeightSystem& ws, const Vec& raw) {
  ws.weights.push_back(normalize_weight(ws, raw));
}

// For generators that emit both members of every +/- pair: normalize, then
// keep half of each equal group as the stored multiplicity.
void push_halved(WeightSystem& ws, std::vector<Vec> raws) {
  for (auto& r : raws) r = normalize_weight(ws, r);
  std::sort(raws.begin(), raws.end(), vec_lt);
  size_t i = 0;
  while (i < raws.size()) {
    size_t j = i;
    while (j < raws.size() && raws[j] == raws[i]) ++j;
    if ((j - i) % 2 != 0) throw std::logic_error("unpaired weight in generator output");
    for (size_t t = 0; t < (j - i) / 2; ++t) ws.weights.push_back(raws[i]);
    i = j;
  }
}

thread_local bool g_with_weights = true;

struct WeightScope {
  bool prev;
  explicit WeightScope(bool on) : prev(g_with_weights) { g_with_weights = on; }
  ~WeightScope() { g_with_weights = prev; }
};

void seal(Entry& e) {
  if (e.ws) {
    e.ws->rep_dim = e.dim;
    e.ws->validate();
  }
}

int popcount(unsigned v) {
  int c = 0;
  for (; v; v >>= 1) c += static_cast<int>(v & 1u);
  return c;
}

}  // namespace

std::string Entry::label() const {
  std::ostringstream os;
  os << family;
  if (family == "FKM") {
    os << "(" << param("m") << ";";
    bool divided = false;
    for (const auto& [k, v] : params) {
      if (k == "kplus") divided = true;
      (void)v;
    }
    if (divided) {
      os << param("kplus") << "," << param("kminus");
    } else {
      os << param("k");
    }
    os << ")";
  } else if (!params.empty()) {
    os << "(";
    for (size_t i = 0; i < params.size(); ++i) {
      if (i) os << ",";
      os << params[i].second;
    }
    os << ")";
  }
  return os.str();
}

int Entry::param(const std::string& name) const {
  for (const auto& [k, v] : params) {
    if (k == name) return v;
  }
  throw std::logic_error("missing parameter " + name + " on " + family);
}

int clifford_delta(int m) {
  if (m < 1) throw CatalogError("delta requires m >= 1");
  return delta(m);
}

bool fkm_feasible(int m, int k) { return k * clifford_delta(m) - m - 1 >= 1; }

Entry entry_aiii(int p, int q) {
  if (p < 2 || q < 2) throw CatalogError("AIII requires p, q >= 2");
  Entry e;
  e.family = "AIII";
  e.params = {{"p", p}, {"q", q}};
  e.dim = 2 * p * q;
  e.rank = std::min(p, q);
  e.qk = (p == 2 || q == 2);
  if (g_with_weights) {
    WeightSystem ws;
    int sc = (p == q) ? 0 : -1;
    ws.factors = {{FactorKind::Unitary, p, false, sc}, {FactorKind::Unitary, q, false, sc}};
    ws.constraints = {Vec(p + q, Rational(1))};
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < q; ++j) {
        Vec v = zero_vec(p + q);
        v[i] = 1;
        v[p + j] = -1;
        push_pair(ws, v);
      }
    }
    e.ws = std::move(ws);
  }
  e.closed_NJ = (p == q) ? 1 + p / 2 : 1 + p / 2 + q / 2;
  if (p % 2 == 0 && q % 2 == 0) {
    e.closed_NS = (p == q) ? 1 : 2;
  } else if (p % 2 == 0 || q % 2 == 0) {
    e.closed_NS = 1;
  } else {
    e.closed_NS = 0;
  }
  seal(e);
  return e;
}

Entry entry_bi(int p, int q) {
  if (p < 1 || q < 1 || p + q < 3) throw CatalogError("BI requires p, q >= 1 and p + q >= 3");
  Entry e;
  e.family = "BI";
  e.params = {{"p", p}, {"q", q}};
  e.dim = 2 * p * (2 * q + 1);
  e.rank = std::min(2 * p, 2 * q + 1);
  e.qk = (p == 2);
  if (g_with_weights) {
    WeightSystem ws;
    ws.factors = {{FactorKind::OrthogonalEven, p, false, -1},
                  {FactorKind::OrthogonalOdd, q, false, -1}};
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < q; ++j) {
        for (int s : {1, -1}) {
          Vec v = zero_vec(p + q);
          v[i] = 1;
          v[p + j] = s;
          push_pair(ws, v);
        }
      }
      Vec v = zero_vec(p + q);
      v[i] = 1;
      push_pair(ws, v);
    }
    e.ws = std::move(ws);
  }
  e.closed_NJ = 1;
  e.closed_NS = (p % 2 == 0) ? 1 : 0;
  seal(e);
  return e;
}

Entry entry_ci(int p) {
  if (p < 2) throw CatalogError("CI requires p >= 2");
  Entry e;
  e.family = "CI";
  e.params = {{"p", p}};
  e.dim = p * (p + 1);
  e.rank = p;
  if (g_with_weights) {
    WeightSystem ws;
    ws.factors = {{FactorKind::Unitary, p, false, -1}};
    for (int i = 0; i < p; ++i) {
      for (int j = i; j < p; ++j) {
        Vec v = zero_vec(p);
        v[i] += 1;
        v[j] += 1;
        push_pair(ws, v);
      }
    }
    e.ws = std::move(ws);
  }
  e.closed_NJ = 1;
  e.closed_NS = 0;
  seal(e);
  return e;
}

Entry entry_cii(int p, int q) {
  if (p < 2 || q < 2) throw CatalogError("CII requires p, q >= 2");
  Entry e;
  e.family = "CII";
  e.params = {{"p", p}, {"q", q}};
  e.dim = 4 * p * q;
  e.rank = std::min(p, q);
  if (g_with_weights) {
    WeightSystem ws;
    int sc = (p == q) ? 0 : -1;
    ws.factors = {{FactorKind::Symplectic, p, false, sc}, {FactorKind::Symplectic, q, false, sc}};
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < q; ++j) {
        for (int s : {1, -1}) {
          Vec v = zero_vec(p + q);
          v[i] = 1;
          v[p + j] = s;
          push_pair(ws, v);
        }
      }
    }
    e.ws = std::move(ws);
  }
  e.closed_NJ = (p == q) ? 1 : 2;
  e.closed_NS = e.closed_NJ;
  seal(e);
  return e;
}

Entry entry_di(int p, int q) {
  if (p < 1 || q < 1 || p + q < 4) throw CatalogError("DI requires p, q >= 1 and p + q >= 4");
  Entry e;
  e.family = "DI";
  e.params = {{"p", p}, {"q", q}};
  e.dim = 4 * p * q;
  e.rank = std::min(2 * p, 2 * q);
  e.qk = (p == 2 || q == 2);
  if (g_with_weights) {
    WeightSystem ws;
    int sc = (p == q) ? 0 : -1;
    ws.factors = {{FactorKind::OrthogonalEven, p, false, sc},
                  {FactorKind::OrthogonalEven, q, false, sc}};
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < q; ++j) {
        for (int s : {1, -1}) {
          Vec v = zero_vec(p + q);
          v[i] = 1;
          v[p + j] = s;
          push_pair(ws, v);
        }
      }
    }
    e.ws = std::move(ws);
  }
  e.closed_NJ = (p == q) ? 1 : 2;
  if (p % 2 == 0 && q % 2 == 0) {
    e.closed_NS = (p == q) ? 1 : 2;
  } else if (p % 2 == 0 || q % 2 == 0) {
    e.closed_NS = 1;
  } else {
    e.closed_NS = 0;
  }
  seal(e);
  return e;
}

Entry entry_diii(int p) {
  if (p < 4) throw CatalogError("DIII requires p >= 4");
  Entry e;
  e.family = "DIII";
  e.params = {{"p", p}};
  e.dim = p * (p - 1);
  e.rank = p / 2;
  if (g_with_weights) {
    WeightSystem ws;
    ws.factors = {{FactorKind::Unitary, p, false, -1}};
    for (int i = 0; i < p; ++i) {
      for (int j = i + 1; j < p; ++j) {
        Vec v = zero_vec(p);
        v[i] = 1;
        v[j] = 1;
        push_pair(ws, v);
      }
    }
    e.ws = std::move(ws);
  }
  e.closed_NJ = 2;
  e.closed_NS = 0;
  seal(e);
  return e;
}

namespace {

Entry build_eii() {
  Entry e;
  e.family = "EII";
  e.dim = 40;
  e.rank = 4;
  e.qk = true;
  if (g_with_weights) {
    WeightSystem ws;
    ws.factors = {{FactorKind::SpecialUnitary, 6, false, -1},
                  {FactorKind::SpecialUnitary, 2, false, -1}};
    Vec c1 = zero_vec(8), c2 = zero_vec(8);
    for (int i = 0; i < 6; ++i) c1[i] = 1;
    c2[6] = c2[7] = 1;
    ws.constraints = {c1, c2};
    std::vector<Vec> raws;
    for (unsigned mask = 0; mask < 64; ++mask) {
      if (popcount(mask) != 3) continue;
      for (int l = 0; l < 2; ++l) {
        Vec v = zero_vec(8);
        for (int i = 0; i < 6; ++i)
          if ((mask >> i) & 1u) v[i] = 1;
        v[6 + l] = 1;
        raws.push_back(std::move(v));
      }
    }
    push_halved(ws, std::move(raws));
    e.ws = std::move(ws);
  }
  e.closed_NJ = 2;
  e.closed_NS = 1;
  seal(e);
  return e;
}

Entry build_eiii() {
  Entry e;
  e.family = "EIII";
  e.dim = 32;
  e.rank = 2;
  if (g_with_weights) {
    WeightSystem ws;
    ws.factors = {{FactorKind::OrthogonalEven, 5, true, -1}, {FactorKind::Unitary, 1, false, -1}};
    for (unsigned mask = 0; mask < 32; ++mask) {
      if (popcount(mask) % 2 != 0) continue;
      Vec v = zero_vec(6);
      for (int i = 0; i < 5; ++i) v[i] = Rational(((mask >> i) & 1u) ? -1 : 1) / 2;
      v[5] = 1;
      push_pair(ws, v);
    }
    e.ws = std::move(ws);
  }
  e.closed_NJ = 2;
  e.closed_NS = 1;
  seal(e);
  return e;
}

Entry build_ev() {
  Entry e;
  e.family = "EV";
  e.dim = 70;
  e.rank = 7;
  if (g_with_weights) {
    WeightSystem ws;
    ws.factors = {{FactorKind::SpecialUnitary, 8, false, -1}};
    ws.constraints = {Vec(8, Rational(1))};
    std::vector<Vec> raws;
    for (unsigned mask = 0; mask < 256; ++mask) {
      if (popcount(mask) != 4) continue;
      Vec v = zero_vec(8);
      for (int i = 0; i < 8; ++i)
        if ((mask >> i) & 1u) v[i] = 1;
      raws.push_back(std::move(v));
    }
    push_halved(ws, std::move(raws));
    e.ws = std::move(ws);
  }
  e.closed_NJ = 1;
  e.closed_NS = 0;
  seal(e);
  return e;
}

Entry build_evi() {
  Entry e;
  e.family = "EVI";
  e.dim = 64;
  e.rank = 4;
  e.qk = true;
  if (g_with_weights) {
    WeightSystem ws;
    ws.factors = {{FactorKind::OrthogonalEven, 6, true, -1}, {FactorKind::Symplectic, 1, false, -1}};
    std::vector<Vec> raws;
    for (unsigned mask = 0; mask < 64; ++mask) {
      if (popcount(mask) % 2 != 0) continue;
      for (int t : {1, -1}) {
        Vec v = zero_vec(7);
        for (int i = 0; i < 6; ++i) v[i] = Rational(((mask >> i) & 1u) ? -1 : 1) / 2;
        v[6] = t;
        raws.push_back(std::move(v));
      }
    }
    push_halved(ws, std::move(raws));
    e.ws = std::move(ws);
  }
  e.closed_NJ = 2;
  e.closed_NS = 2;
  seal(e);
  return e;
}

Entry build_evii() {
  Entry e;
  e.family = "EVII";
  e.dim = 54;
  e.rank = 3;
  e.tabulated = true;
  e.closed_NJ = 1;
  e.closed_NS = 0;
  return e;
}

Entry build_eviii() {
  Entry e;
  e.family = "EVIII";
  e.dim = 128;
  e.rank = 8;
  if (g_with_weights) {
    WeightSystem ws;
    ws.factors = {{FactorKind::OrthogonalEven, 8, true, -1}};
    std::vector<Vec> raws;
    for (unsigned mask = 0; mask < 256; ++mask) {
      if (popcount(mask) % 2 != 0) continue;
      Vec v = zero_vec(8);
      for (int i = 0; i < 8; ++i) v[i] = Rational(((mask >> i) & 1u) ? -1 : 1) / 2;
      raws.push_back(std::move(v));
    }
    push_halved(ws, std::move(raws));
    e.ws = std::move(ws);
  }
  e.closed_NJ = 1;
  e.closed_NS = 1;
  seal(e);
  return e;
}

Entry build_eix() {
  Entry e;
  e.family = "EIX";
  e.dim = 112;
  e.rank = 4;
  e.qk = true;
  e.tabulated = true;
  e.closed_NJ = 1;
  e.closed_NS = 1;
  return e;
}

Entry build_fi() {
  Entry e;
  e.family = "FI";
  e.dim = 28;
  e.rank = 4;
  e.qk = true;
  if (g_with_weights) {
    WeightSystem ws;
    ws.factors = {{FactorKind::Symplectic, 3, false, -1}, {FactorKind::Symplectic, 1, false, -1}};
    for (int s2 : {1, -1}) {
      for (int s3 : {1, -1}) {
        for (int st : {1, -1}) {
          Vec v = zero_vec(4);
          v[0] = 1;
          v[1] = s2;
          v[2] = s3;
          v[3] = st;
          push_pair(ws, v);
        }
      }
    }
    for (int i = 0; i < 3; ++i) {
      for (int st : {1, -1}) {
        Vec v = zero_vec(4);
        v[i] = 1;
        v[3] = st;
        push_pair(ws, v);
      }
    }
    e.ws = std::move(ws);
  }
  e.closed_NJ = 1;
  e.closed_NS = 1;
  seal(e);
  return e;
}

Entry build_g() {
  Entry e;
  e.family = "G";
  e.dim = 8;
  e.rank = 2;
  e.qk = true;
  if (g_with_weights) {
    WeightSystem ws;
    // First factor acts through its cubic module, the second through its
    // standard one; they are not exchangeable.
    ws.factors = {{FactorKind::Symplectic, 1, false, -1}, {FactorKind::Symplectic, 1, false, -1}};
    for (int a : {3, 1}) {
      for (int t : {1, -1}) {
        Vec v = zero_vec(2);
        v[0] = a;
        v[1] = t;
        push_pair(ws, v);
      }
    }
    e.ws = std::move(ws);
  }
  e.closed_NJ = 1;
  e.closed_NS = 1;
  seal(e);
  return e;
}

}  // namespace

Entry entry_exceptional(const std::string& name) {
  if (name == "EII") return build_eii();
  if (name == "EIII") return build_eiii();
  if (name == "EV") return build_ev();
  if (name == "EVI") return build_evi();
  if (name == "EVII") return build_evii();
  if (name == "EVIII") return build_eviii();
  if (name == "EIX") return build_eix();
  if (name == "FI") return build_fi();
  if (name == "G") return build_g();
  throw CatalogError("unknown exceptional family: " + name);
}

Entry entry_fkm(int m, int k_plus, int k_minus) {
  if (m < 1) throw CatalogError("FKM requires m >= 1");
  if (k_plus < 0 || k_minus < 0 || k_plus + k_minus < 1) {
    throw CatalogError("FKM requires nonnegative multiplicities with k >= 1");
  }
  if (k_minus > 0 && m % 4 != 0) {
    throw CatalogError("divided multiplicities only arise when 4 divides m");
  }
  const int k = k_plus + k_minus;
  const int delta = clifford_delta(m);
  const int m_minus = k * delta - m - 1;
  if (m_minus < 1) {
    std::ostringstream os;
    os << "infeasible FKM multiplicities: m=" << m << " k=" << k << " gives codimension pair ("
       << m << "," << m_minus << ")";
    throw CatalogError(os.str());
  }
  Entry e;
  e.family = "FKM";
  if (m % 4 == 0) {
    e.params = {{"m", m}, {"kplus", k_plus}, {"kminus", k_minus}};
  } else {
    e.params = {{"m", m}, {"k", k}};
  }
  e.dim = 2 * k * delta;
  e.rank = 2;
  e.qk = (m == 2) || (m == 1 && k == 4);
  e.foliation_homogeneous = (m <= 2);
  e.homogeneity_known = !(m >= 3 && m > m_minus);

  const int r = ((m - 1) % 8) + 1;  // residue with 8 in place of 0
  const int p_spin = (m % 2 == 1) ? (m + 1) / 2 : m / 2;

  if (g_with_weights) {
    WeightSystem ws;
    Factor spin{(m % 2 == 1) ? FactorKind::OrthogonalEven : FactorKind::OrthogonalOdd, p_spin,
                false, -1};
    ws.factors = {spin};

    struct Part {
      char type;  // 'o', 'u', 's'
      int n;      // defining size: so(n), u(n), sp(n)
    };
    std::vector<Part> parts;
    switch (r) {
      case 1:
      case 7:
        parts = {{'o', k}};
        break;
      case 2:
      case 6:
        parts = {{'u', k}};
        break;
      case 3:
      case 5:
        parts = {{'s', k}};
        break;
      case 8:
        parts = {{'o', k_plus}, {'o', k_minus}};
        break;
      case 4:
        parts = {{'s', k_plus}, {'s', k_minus}};
        break;
    }

    // Coordinate factors of the second block, plus each part's weight list
    // over the full second block.
    std::vector<int> part_rank;
    for (const Part& pt : parts) {
      int rk = 0;
      if (pt.type == 'o') rk = pt.n / 2;
      if (pt.type == 'u') rk = pt.n;
      if (pt.type == 's') rk = pt.n;
      part_rank.push_back(rk);
    }
    int second_dim = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (part_rank[i] == 0) continue;
      FactorKind fk = FactorKind::Unitary;
      if (parts[i].type == 'o') {
        fk = (parts[i].n % 2 == 0) ? FactorKind::OrthogonalEven : FactorKind::OrthogonalOdd;
      } else if (parts[i].type == 's') {
        fk = FactorKind::Symplectic;
      }
      ws.factors.push_back({fk, part_rank[i], false, -1});
      second_dim += part_rank[i];
    }
    if (parts.size() == 2 && parts[0].n == parts[1].n && parts[0].n > 0 && part_rank[0] > 0) {
      ws.factors[1].swap_class = 0;
      ws.factors[2].swap_class = 0;
    }

    std::vector<Vec> second_weights;  // over the second block only
    {
      int off = 0;
      for (size_t i = 0; i < parts.size(); ++i) {
        const Part& pt = parts[i];
        if (pt.n == 0) continue;
        if (pt.type == 'o') {
          for (int j = 0; j < pt.n / 2; ++j) {
            for (int s : {1, -1}) {
              Vec v = zero_vec(second_dim);
              v[off + j] = s;
              second_weights.push_back(std::move(v));
            }
          }
          if (pt.n % 2 == 1) second_weights.push_back(zero_vec(second_dim));
        } else {
          for (int j = 0; j < pt.n; ++j) {
            for (int s : {1, -1}) {
              Vec v = zero_vec(second_dim);
              v[off + j] = s;
              second_weights.push_back(std::move(v));
            }
          }
        }
        off += part_rank[i];
      }
    }

    std::vector<Vec> raws;
    raws.reserve((size_t{1} << p_spin) * second_weights.size());
    for (unsigned mask = 0; mask < (1u << p_spin); ++mask) {
      for (const Vec& t : second_weights) {
        Vec v = zero_vec(p_spin + second_dim);
        for (int i = 0; i < p_spin; ++i) v[i] = Rational(((mask >> i) & 1u) ? -1 : 1) / 2;
        for (int j = 0; j < second_dim; ++j) v[p_spin + j] = t[j];
        raws.push_back(std::move(v));
      }
    }
    push_halved(ws, std::move(raws));
    e.ws = std::move(ws);
  }

  switch (r) {
    case 8:
      e.closed_NJ = (k_plus % 2 == 0 && k_minus % 2 == 0) ? 2 : 1;
      e.closed_NS = (k_plus % 4 == 0 && k_minus % 4 == 0) ? 2 : 1;
      break;
    case 1:
    case 7:
      e.closed_NJ = (k % 2 == 0) ? 2 : 1;
      e.closed_NS = (m > 1) ? ((k % 4 == 0) ? 2 : 1) : ((k % 4 == 0) ? 1 : 0);
      break;
    case 2:
    case 6:
      e.closed_NJ = k / 2 + 2;
      e.closed_NS = (k % 2 == 0) ? 2 : 1;
      break;
    case 3:
    case 5:
    case 4:
      e.closed_NJ = 2;
      e.closed_NS = 2;
      break;
  }
  seal(e);
  return e;
}

Entry entry_trivial_sphere(int d) {
  if (d < 2) throw CatalogError("TrivialSphere requires d >= 2");
  Entry e;
  e.family = "TrivialSphere";
  e.params = {{"d", d}};
  e.dim = d;
  e.rank = 1;
  if (g_with_weights) {
    WeightSystem ws;
    if (d % 2 == 0) {
      ws.factors = {{FactorKind::OrthogonalEven, d / 2, false, -1}};
    } else {
      ws.factors = {{FactorKind::OrthogonalOdd, (d - 1) / 2, false, -1}};
      ws.zero_multiplicity = 1;
    }
    int nw = (d % 2 == 0) ? d / 2 : (d - 1) / 2;
    for (int i = 0; i < nw; ++i) {
      Vec v = zero_vec(nw);
      v[i] = 1;
      push_pair(ws, v);
    }
    e.ws = std::move(ws);
  }
  e.closed_NJ = (d % 2 == 0) ? 1 : 0;
  e.closed_NS = (d % 4 == 0) ? 1 : 0;
  seal(e);
  return e;
}

Entry make_entry(const std::string& family, const std::vector<int>& params) {
  auto need = [&](size_t n) {
    if (params.size() != n) {
      std::ostringstream os;
      os << family << " takes " << n << " parameter(s), got " << params.size();
      throw CatalogError(os.str());
    }
  };
  if (family == "AIII") {
    need(2);
    return entry_aiii(params[0], params[1]);
  }
  if (family == "BI") {
    need(2);
    return entry_bi(params[0], params[1]);
  }
  if (family == "CI") {
    need(1);
    return entry_ci(params[0]);
  }
  if (family == "CII") {
    need(2);
    return entry_cii(params[0], params[1]);
  }
  if (family == "DI") {
    need(2);
    return entry_di(params[0], params[1]);
  }
  if (family == "DIII") {
    need(1);
    return entry_diii(params[0]);
  }
  if (family == "FKM") {
    if (params.size() == 2) return entry_fkm(params[0], params[1], 0);
    need(3);
    return entry_fkm(params[0], params[1], params[2]);
  }
  if (family == "TrivialSphere") {
    need(1);
    return entry_trivial_sphere(params[0]);
  }
  need(0);
  return entry_exceptional(family);
}

std::vector<StructureInfo> closed_structures(const Entry& e) {
  std::vector<StructureInfo> out;
  auto hom = [&](bool ideal) -> std::optional<bool> {
    if (!e.homogeneity_known) return std::nullopt;
    return e.rank == 1 || (e.qk && ideal && e.foliation_homogeneous);
  };
  auto add = [&](const std::string& tag, bool ideal) {
    out.push_back({tag, ideal, hom(ideal)});
  };
  const std::string& f = e.family;
  if (f == "AIII") {
    int p = e.param("p"), q = e.param("q");
    if (p % 2 == 0) add("diagonal-unitary", p == 2);
    if (q % 2 == 0 && q != p) add("diagonal-unitary", q == 2);
  } else if (f == "BI") {
    if (e.param("p") % 2 == 0) add("so4-block-diagonal", e.param("p") == 2);
  } else if (f == "CII") {
    add("diagonal-symplectic", false);
    if (e.param("p") != e.param("q")) add("diagonal-symplectic", false);
  } else if (f == "DI") {
    int p = e.param("p"), q = e.param("q");
    if (p % 2 == 0) add("so4-block-diagonal", p == 2);
    if (q % 2 == 0 && q != p) add("so4-block-diagonal", q == 2);
  } else if (f == "TrivialSphere") {
    int d = e.param("d");
    if (d % 4 == 0) add("so4-block-diagonal", d == 4);
  } else if (f == "EII" || f == "EIX" || f == "FI" || f == "G") {
    add("ideal-factor", true);
  } else if (f == "EIII") {
    add("canonical-so3", false);
  } else if (f == "EVI") {
    add("ideal-factor", true);
    add("canonical-so3", false);
  } else if (f == "EVIII") {
    add("canonical-so3", false);
  } else if (f == "FKM") {
    int m = e.param("m");
    int kp = (m % 4 == 0) ? e.param("kplus") : e.param("k");
    int km = (m % 4 == 0) ? e.param("kminus") : 0;
    int k = kp + km;
    int r = ((m - 1) % 8) + 1;
    if (m >= 2) add("canonical-so3", m == 2);
    switch (r) {
      case 1:
      case 7:
        if (k % 4 == 0) add("so4-block-diagonal", k == 4);
        break;
      case 2:
      case 6:
        if (k % 2 == 0) add("diagonal-unitary", k == 2);
        break;
      case 3:
      case 5:
        add(k == 1 ? "ideal-factor" : "diagonal-symplectic", k == 1);
        break;
      case 4:
        if (km == 0 || kp == 0) {
          int n = kp + km;
          add(n == 1 ? "ideal-factor" : "diagonal-symplectic", n == 1);
        } else {
          add("cross-factor-diagonal", false);
        }
        break;
      case 8:
        if (kp % 4 == 0 && km % 4 == 0) {
          if (km == 0 || kp == 0) {
            add("so4-block-diagonal", kp + km == 4);
          } else {
            add("cross-factor-diagonal", false);
          }
        }
        break;
    }
  }
  // CI, DIII, EV, EVII: no admissible structures.
  return out;
}

std::vector<Entry> catalog_by_dimension(int dim, int min_rank, bool include_spheres,
                                        bool with_weights) {
  WeightScope scope(with_weights);
  std::vector<Entry> out;
  auto keep = [&](Entry e) {
    if (e.rank >= min_rank) out.push_back(std::move(e));
  };
  for (int q = 2; 2 * q * q <= dim; ++q) {
    if (dim % (2 * q) == 0) {
      int p = dim / (2 * q);
      if (p >= q) keep(entry_aiii(p, q));
    }
  }
  for (int p = 1; 2 * p * 3 <= dim; ++p) {
    if (dim % (2 * p) != 0) continue;
    int rem = dim / (2 * p);
    if (rem % 2 == 1 && rem >= 3) {
      int q = (rem - 1) / 2;
      if (p + q >= 3) keep(entry_bi(p, q));
    }
  }
  for (int p = 2; p * (p + 1) <= dim; ++p) {
    if (p * (p + 1) == dim) keep(entry_ci(p));
  }
  for (int q = 2; 4 * q * q <= dim; ++q) {
    if (dim % (4 * q) == 0) {
      int p = dim / (4 * q);
      if (p >= q) keep(entry_cii(p, q));
    }
  }
  for (int q = 1; 4 * q * q <= dim; ++q) {
    if (dim % (4 * q) == 0) {
      int p = dim / (4 * q);
      if (p >= q && p + q >= 4) keep(entry_di(p, q));
    }
  }
  for (int p = 4; p * (p - 1) <= dim; ++p) {
    if (p * (p - 1) == dim) keep(entry_diii(p));
  }
  for (const char* name : {"EII", "EIII", "EV", "EVI", "EVII", "EVIII", "EIX", "FI", "G"}) {
    Entry e = entry_exceptional(name);
    if (e.dim == dim) keep(std::move(e));
  }
  for (int m = 1;; ++m) {
    int delta = clifford_delta(m);
    if (2 * delta > dim) break;
    if (dim % (2 * delta) != 0) continue;
    int k = dim / (2 * delta);
    if (!fkm_feasible(m, k)) continue;
    if (m % 4 != 0) {
      keep(entry_fkm(m, k, 0));
    } else {
      for (int km = 0; km <= k / 2; ++km) keep(entry_fkm(m, k - km, km));
    }
  }
  if (include_spheres && dim >= 2) keep(entry_trivial_sphere(dim));
  return out;
}

}  // namespace polarfol
