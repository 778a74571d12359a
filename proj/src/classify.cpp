#include <polarfol/classify.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace polarfol {

namespace {

const char* kCanonicalizationNote =
    "coordinate permutations within factors, sign changes allowed by each factor type, "
    "and swaps of congruent factors";

std::optional<int> quotient_dim(int dim) {
  if (dim % 4 != 0) return std::nullopt;
  return dim / 4 - 1;
}

void fill_common(ClassificationRecord& r, const Entry& e) {
  r.descriptor = e.label();
  r.family = e.family;
  r.params = e.params;
  r.dim = e.dim;
  r.rank = e.rank;
  r.n = quotient_dim(e.dim);
  r.canonicalization_group = kCanonicalizationNote;
}

std::optional<bool> projected_homogeneity(const Entry& e, bool ideal) {
  if (!e.homogeneity_known) return std::nullopt;
  return e.rank == 1 || (e.qk && ideal && e.foliation_homogeneous);
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].get_str();
  }
  os << ")";
  return os.str();
}

}  // namespace

ClassificationRecord closed_form(const Entry& e) {
  ClassificationRecord r;
  fill_common(r, e);
  r.N_J = e.closed_NJ;
  r.N_S = e.closed_NS;
  for (const StructureInfo& s : closed_structures(e)) {
    RecordStructure rs;
    rs.tag = s.constructor_tag;
    rs.is_ideal = s.is_ideal;
    rs.homogeneous = s.homogeneous;
    r.structures.push_back(std::move(rs));
  }
  r.provenance = "tabulated";
  return r;
}

ClassificationRecord compute_moduli(const Entry& e) {
  if (!e.ws) {
    throw CatalogError("no weight system for " + e.label() +
                       ": only the tabulated record is available");
  }
  ClassificationRecord r;
  fill_common(r, e);
  Moduli mod = j_moduli(*e.ws);
  r.N_J = static_cast<int>(mod.classes.size());
  for (const Vec& h : mod.classes) {
    MembershipReport rep = in_su2(*e.ws, h);
    if (rep.verdict == Verdict::Unknown) {
      throw UndecidedError("UNKNOWN_MEMBERSHIP: class " + vec_str(h) + " of " + e.label() +
                           ": " + rep.reason);
    }
    if (rep.verdict != Verdict::Member) continue;
    RecordStructure rs;
    rs.tag = rep.witness->constructor_tag;
    rs.is_ideal = rep.witness->is_ideal;
    rs.homogeneous = projected_homogeneity(e, rs.is_ideal);
    rs.cartan = h;
    rs.witness = rep.witness;
    r.structures.push_back(std::move(rs));
  }
  r.N_S = static_cast<int>(r.structures.size());
  r.provenance = "computed";
  return r;
}

bool cross_check(const Entry& e) {
  ClassificationRecord closed = closed_form(e);
  ClassificationRecord computed = compute_moduli(e);
  return closed.N_J == computed.N_J && closed.N_S == computed.N_S;
}

ClassificationRecord classify_entry(const Entry& e) {
  return e.ws ? compute_moduli(e) : closed_form(e);
}

namespace {

// exact C(s+t-1, t): multisets of size t over s symbols
long long multiset_count(long long s, long long t) {
  long long out = 1;
  for (long long i = 1; i <= t; ++i) out = out * (s - 1 + i) / i;
  return out;
}

void nondecreasing_tuples(int len, int options, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  int lo = cur.empty() ? 0 : cur.back();
  for (int i = lo; i < options; ++i) {
    cur.push_back(i);
    nondecreasing_tuples(len, options, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ClassificationRecord compose_join(const std::vector<Entry>& factors, int fixed_part_dim) {
  if (factors.empty()) throw CatalogError("join needs at least one factor");
  if (fixed_part_dim != 0) {
    throw CatalogError("join admits no quaternionic structure: the fixed part is nonzero");
  }

  std::vector<ClassificationRecord> recs;
  recs.reserve(factors.size());
  for (const Entry& e : factors) recs.push_back(e.ws ? compute_moduli(e) : closed_form(e));
  for (const ClassificationRecord& rec : recs) {
    if (rec.N_S == 0) {
      throw CatalogError("join admits no quaternionic structure: factor " + rec.descriptor +
                         " hosts none");
    }
  }

  ClassificationRecord r;
  r.family = "Join";
  r.provenance = "computed";
  for (size_t i = 0; i < recs.size(); ++i) {
    if (i) r.descriptor += " * ";
    r.descriptor += recs[i].descriptor;
    r.dim += recs[i].dim;
    r.rank += recs[i].rank;
    if (recs[i].provenance == "tabulated") r.provenance = "tabulated";
  }
  r.n = quotient_dim(r.dim);
  r.canonicalization_group = kCanonicalizationNote;

  std::vector<std::string> group_order;
  std::map<std::string, std::vector<int>> groups;
  for (size_t i = 0; i < recs.size(); ++i) {
    auto [it, fresh] = groups.try_emplace(recs[i].descriptor);
    if (fresh) group_order.push_back(recs[i].descriptor);
    it->second.push_back(static_cast<int>(i));
  }

  long long nj = 1;
  for (const auto& name : group_order) {
    const auto& members = groups[name];
    nj *= multiset_count(recs[members.front()].N_J, static_cast<long long>(members.size()));
  }
  r.N_J = static_cast<int>(nj);

  // tuples of per-factor structures, one slot per factor, congruent factors
  // identified up to permutation
  std::vector<std::vector<std::vector<int>>> per_group;
  for (const auto& name : group_order) {
    const auto& members = groups[name];
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    nondecreasing_tuples(static_cast<int>(members.size()), recs[members.front()].N_S, cur,
                         tuples);
    per_group.push_back(std::move(tuples));
  }

  std::vector<int> big_ranked;
  for (size_t i = 0; i < recs.size(); ++i) {
    if (recs[i].rank >= 2) big_ranked.push_back(static_cast<int>(i));
  }

  std::vector<size_t> pick(per_group.size(), 0);
  while (true) {
    std::vector<int> choice(recs.size(), 0);
    for (size_t g = 0; g < per_group.size(); ++g) {
      const auto& members = groups[group_order[g]];
      const auto& tuple = per_group[g][pick[g]];
      for (size_t j = 0; j < members.size(); ++j) choice[members[j]] = tuple[j];
    }

    RecordStructure rs;
    rs.tag = "diagonal(";
    for (size_t i = 0; i < recs.size(); ++i) {
      if (i) rs.tag += ",";
      rs.tag += recs[i].structures[choice[i]].tag;
    }
    rs.tag += ")";
    if (big_ranked.size() >= 2) {
      rs.homogeneous = false;
    } else if (big_ranked.empty()) {
      rs.homogeneous = true;
    } else {
      rs.homogeneous = recs[big_ranked[0]].structures[choice[big_ranked[0]]].homogeneous;
    }
    r.structures.push_back(std::move(rs));

    size_t g = 0;
    while (g < pick.size() && ++pick[g] == per_group[g].size()) pick[g++] = 0;
    if (g == pick.size()) break;
  }
  r.N_S = static_cast<int>(r.structures.size());
  return r;
}

namespace {

// Codimension-one multiplicity pair whose classification on its sphere is
// still incomplete; scan rows whose ambient sphere hosts it are marked.
constexpr int kOpenPlus = 7;
constexpr int kOpenMinus = 8;

bool flagged_inhomogeneous(const Entry& e) {
  for (const StructureInfo& s : closed_structures(e)) {
    if (s.homogeneous && !*s.homogeneous) return true;
  }
  return false;
}

bool codim1_row(int n) {
  for (const Entry& e : catalog_by_dimension(4 * (n + 1), 2, false, /*with_weights=*/false)) {
    if (e.rank == 2 && flagged_inhomogeneous(e)) return true;
  }
  return false;
}

bool irreducible_row(int n) {
  for (const Entry& e : catalog_by_dimension(4 * (n + 1), 2, false, /*with_weights=*/false)) {
    if (flagged_inhomogeneous(e)) return true;
  }
  return false;
}

std::vector<ScanResult> run_scan(int n_max, int threads, bool (*row)(int)) {
  if (n_max < 1) throw std::invalid_argument("scan range must cover n >= 1");
  std::vector<ScanResult> out(static_cast<size_t>(n_max));
  threads = std::clamp(threads, 1, 64);
  auto work = [&](int first) {
    for (int n = 1 + first; n <= n_max; n += threads) {
      ScanResult& slot = out[static_cast<size_t>(n - 1)];
      slot.n = n;
      slot.inhomogeneous = row(n);
      slot.undecided = (4 * (n + 1) == 2 * (kOpenPlus + kOpenMinus + 1));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace

std::vector<ScanResult> scan_codim1(int n_max, int threads) {
  return run_scan(n_max, threads, codim1_row);
}

std::vector<ScanResult> scan_irreducible(int n_max, int threads) {
  return run_scan(n_max, threads, irreducible_row);
}

namespace {

std::string num(int v) { return std::to_string(v); }

}  // namespace

std::vector<TableRow> table1(int max_p, int max_q) {
  if (max_p < 1 || max_q < 2) {
    throw std::invalid_argument("table grid needs max_p >= 1 and max_q >= 2");
  }
  std::vector<TableRow> rows;
  for (int p = 1; p <= max_p; ++p) {
    for (int q = 2; q <= max_q; ++q) {
      Entry e = entry_aiii(2 * p, q);
      rows.push_back({"SU(" + num(2 * p + q) + ")/S(U(" + num(2 * p) + ")xU(" + num(q) + "))",
                      e.closed_NS,
                      (q % 2 == 0 && q != 2 * p) ? "q even and q != 2p" : "q odd or q = 2p"});
    }
  }
  for (int p = 1; p <= max_p; ++p) {
    for (int q = 2; q <= max_q; ++q) {
      // the (4,2) block pair below the catalog range duplicates an SU row
      if (q % 2 == 0 && 2 * p + q / 2 < 4) continue;
      Entry e = (q % 2 == 0) ? entry_di(2 * p, q / 2) : entry_bi(2 * p, (q - 1) / 2);
      rows.push_back({"SO(" + num(4 * p + q) + ")/SO(" + num(4 * p) + ")xSO(" + num(q) + ")",
                      e.closed_NS,
                      (q % 4 == 0 && q != 4 * p) ? "q = 0 mod 4 and q != 4p"
                                                 : "q != 0 mod 4 or q = 4p"});
    }
  }
  for (int p = 2; p <= max_p; ++p) {
    for (int q = 2; q <= max_q; ++q) {
      Entry e = entry_cii(p, q);
      rows.push_back({"Sp(" + num(p + q) + ")/Sp(" + num(p) + ")xSp(" + num(q) + ")",
                      e.closed_NS, (p != q) ? "p != q" : "p = q"});
    }
  }
  const std::pair<const char*, const char*> fixed[] = {
      {"EII", "E6/SU(6).Sp(1)"},   {"EIII", "E6/Spin(10).U(1)"}, {"EVI", "E7/Spin(12).Sp(1)"},
      {"EVIII", "E8/Spin(16)"},    {"EIX", "E8/E7.Sp(1)"},       {"FI", "F4/Sp(3).SU(2)"},
      {"G", "G2/SU(2).SU(2)"},
  };
  for (const auto& [family, name] : fixed) {
    rows.push_back({name, entry_exceptional(family).closed_NS, "-"});
  }
  return rows;
}

}  // namespace polarfol
