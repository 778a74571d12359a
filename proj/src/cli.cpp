#include <polarfol/cli.hpp>

#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <polarfol/classify.hpp>
#include <polarfol/jsonio.hpp>

namespace polarfol {

namespace {

std::string vec_str(const Vec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rational_str(v[i]);
  }
  return out + ")";
}

// Parameter flags shared by the verbs that address a catalogue entry.
struct EntryFlags {
  CLI::App* sc = nullptr;
  std::string family;
  int p = 0, q = 0, d = 0;
  int m = 0, k = 0, kplus = 0, kminus = 0;

  void add(CLI::App* s, bool family_required) {
    sc = s;
    auto* fam = s->add_option("--family", family, "catalogue family name");
    if (family_required) fam->required();
    s->add_option("--p", p, "first classical parameter");
    s->add_option("--q", q, "second classical parameter");
    s->add_option("--d", d, "sphere dimension (TrivialSphere)");
    s->add_option("--m", m, "Clifford generator count (FKM)");
    s->add_option("--k", k, "module count (FKM, undivided)");
    s->add_option("--kplus", kplus, "plus-class module count (FKM, 4 | m)");
    s->add_option("--kminus", kminus, "minus-class module count (FKM, 4 | m)");
  }

  std::vector<int> params() const {
    std::vector<int> ps;
    if (family == "FKM") {
      if (!sc->count("--m")) throw std::invalid_argument("FKM needs --m");
      ps.push_back(m);
      if (sc->count("--kplus") || sc->count("--kminus")) {
        if (sc->count("--k")) throw std::invalid_argument("pass --k or --kplus/--kminus, not both");
        ps.push_back(kplus);
        ps.push_back(kminus);
      } else if (sc->count("--k")) {
        ps.push_back(k);
      } else {
        throw std::invalid_argument("FKM needs --k or --kplus/--kminus");
      }
      return ps;
    }
    if (sc->count("--p")) ps.push_back(p);
    if (sc->count("--q")) ps.push_back(q);
    if (sc->count("--d")) ps.push_back(d);
    return ps;
  }

  Entry build() const { return make_entry(family, params()); }

  std::string config() const {
    std::ostringstream os;
    os << " family=" << family;
    for (const char* name : {"--p", "--q", "--d", "--m", "--k", "--kplus", "--kminus"}) {
      if (sc->count(name)) os << " " << (name + 2) << "=" << sc->get_option(name)->as<int>();
    }
    return os.str();
  }
};

// --k or --kplus/--kminus for the verbs that drive Clifford systems directly.
struct KSplit {
  bool divided = false;
  int k = 0, kplus = 0, kminus = 0;
};

KSplit resolve_k(CLI::App* sc, int k, int kplus, int kminus) {
  KSplit out;
  if (sc->count("--kplus") || sc->count("--kminus")) {
    if (sc->count("--k")) throw std::invalid_argument("pass --k or --kplus/--kminus, not both");
    out.divided = true;
    out.kplus = kplus;
    out.kminus = kminus;
    return out;
  }
  if (!sc->count("--k")) throw std::invalid_argument("needs --k or --kplus/--kminus");
  out.k = k;
  return out;
}

int resolve_threads(CLI::App* sc, int threads) {
  if (sc->count("--threads")) return threads;
  if (const char* env = std::getenv("POLARFOL_THREADS")) {
    const std::string text(env);
    try {
      size_t pos = 0;
      int v = std::stoi(text, &pos);
      if (pos != text.size() || v < 1) throw std::invalid_argument("");
      return v;
    } catch (...) {
      throw std::invalid_argument("POLARFOL_THREADS is not a positive integer: " + text);
    }
  }
  return 1;
}

std::string format_token(bool json, bool csv) { return json ? "json" : (csv ? "csv" : "text"); }

void print_record_text(const ClassificationRecord& r, std::ostream& out) {
  out << "descriptor: " << r.descriptor << "\n";
  out << "dim: " << r.dim << "\n";
  out << "rank: " << r.rank << "\n";
  out << "n: " << (r.n ? std::to_string(*r.n) : std::string("-")) << "\n";
  out << "N_J: " << r.N_J << "\n";
  out << "N_S: " << r.N_S << "\n";
  out << "provenance: " << r.provenance << "\n";
  for (const RecordStructure& s : r.structures) {
    out << "structure: " << s.tag;
    if (s.cartan) out << " H=" << vec_str(*s.cartan);
    out << " ideal=" << (s.is_ideal ? "yes" : "no");
    out << " homogeneous="
        << (s.homogeneous ? (*s.homogeneous ? "yes" : "no") : "open") << "\n";
  }
}

int emit_record(const ClassificationRecord& rec, bool json, bool csv, const std::string& out_path,
                std::ostream& out) {
  if (json) {
    out << record_json(rec).dump(2) << "\n";
  } else if (csv) {
    out << records_csv({rec});
  } else {
    print_record_text(rec, out);
  }
  if (!out_path.empty()) export_records({rec}, csv ? "csv" : "json", out_path);
  return 0;
}

std::vector<Entry> parse_join_spec(const std::string& spec) {
  std::vector<Entry> factors;
  size_t pos = 0;
  auto trim = [](std::string s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return std::string();
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
  };
  while (pos <= spec.size()) {
    size_t next = spec.find('*', pos);
    std::string token = trim(spec.substr(pos, next == std::string::npos ? next : next - pos));
    if (token.empty()) throw std::invalid_argument("empty factor in join spec");
    std::string name = token;
    std::vector<int> ps;
    size_t open = token.find('(');
    if (open != std::string::npos) {
      if (token.back() != ')') throw std::invalid_argument("unbalanced parentheses: " + token);
      name = trim(token.substr(0, open));
      std::string body = token.substr(open + 1, token.size() - open - 2);
      size_t b = 0;
      while (b <= body.size()) {
        size_t comma = body.find(',', b);
        std::string num = trim(body.substr(b, comma == std::string::npos ? comma : comma - b));
        size_t used = 0;
        int v = 0;
        try {
          v = std::stoi(num, &used);
        } catch (...) {
          throw std::invalid_argument("bad parameter in join spec: " + token);
        }
        if (used != num.size()) throw std::invalid_argument("bad parameter in join spec: " + token);
        ps.push_back(v);
        if (comma == std::string::npos) break;
        b = comma + 1;
      }
    }
    factors.push_back(make_entry(name, ps));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return factors;
}

int do_crosscheck(const std::string& grid, bool json, std::ostream& out) {
  std::vector<Entry> entries;
  if (grid == "classical" || grid == "all") {
    for (int p = 2; p <= 5; ++p)
      for (int q = 2; q <= 5; ++q) entries.push_back(entry_aiii(p, q));
    for (int p = 1; p <= 4; ++p)
      for (int q = 1; q <= 4; ++q)
        if (p + q >= 3) entries.push_back(entry_bi(p, q));
    for (int p = 2; p <= 4; ++p)
      for (int q = 2; q <= 4; ++q) entries.push_back(entry_cii(p, q));
    for (int p = 2; p <= 4; ++p)
      for (int q = 2; q <= 4; ++q) entries.push_back(entry_di(p, q));
    for (int p = 4; p <= 6; ++p) entries.push_back(entry_diii(p));
    for (int p = 2; p <= 5; ++p) entries.push_back(entry_ci(p));
  }
  if (grid == "fkm" || grid == "all") {
    for (int m = 1; m <= 8; ++m) {
      for (int k = 1; k <= 6; ++k) {
        if (!fkm_feasible(m, k)) continue;
        if (m % 4 != 0) {
          entries.push_back(entry_fkm(m, k, 0));
        } else {
          for (int km = 0; km <= k / 2; ++km) entries.push_back(entry_fkm(m, k - km, km));
        }
      }
    }
  }
  int mismatches = 0;
  ordered_json rows = ordered_json::array();
  for (const Entry& e : entries) {
    bool ok = cross_check(e);
    if (!ok) ++mismatches;
    if (json) {
      ordered_json item;
      item["descriptor"] = e.label();
      item["ok"] = ok;
      rows.push_back(std::move(item));
    } else {
      out << (ok ? "ok       " : "MISMATCH ") << e.label() << "\n";
    }
  }
  if (json) {
    ordered_json top;
    top["grid"] = grid;
    top["checked"] = entries.size();
    top["mismatches"] = mismatches;
    top["rows"] = std::move(rows);
    out << top.dump(2) << "\n";
  } else {
    out << "checked " << entries.size() << " descriptors, " << mismatches << " mismatches\n";
  }
  return mismatches == 0 ? 0 : 1;
}

void print_scan_text(const std::vector<ScanResult>& rows, std::ostream& out) {
  for (const ScanResult& row : rows) {
    out << "n=" << row.n << " inhomogeneous=" << (row.inhomogeneous ? "yes" : "no");
    if (row.undecided) out << " UNDECIDED";
    out << "\n";
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact constructions and counts for quaternion-compatible polar foliations"};
  app.name("polarfol");
  app.require_subcommand(1);

  std::function<int()> action;

  // classify space | fkm | join
  auto* classify = app.add_subcommand("classify", "classification records");
  classify->require_subcommand(1);

  auto* space = classify->add_subcommand("space", "record for one catalogued symmetric space");
  EntryFlags space_flags;
  space_flags.add(space, true);
  bool space_json = false, space_csv = false;
  std::string space_out;
  auto* space_json_opt = space->add_flag("--json", space_json, "JSON record to stdout");
  auto* space_csv_opt = space->add_flag("--csv", space_csv, "CSV record to stdout");
  space_json_opt->excludes(space_csv_opt);
  space->add_option("--out", space_out, "also export the record to this path");
  space->callback([&] {
    action = [&]() -> int {
      err << "config: classify space" << space_flags.config()
          << " format=" << format_token(space_json, space_csv)
          << (space_out.empty() ? "" : " out=" + space_out) << "\n";
      return emit_record(classify_entry(space_flags.build()), space_json, space_csv, space_out,
                         out);
    };
  });

  auto* cfkm = classify->add_subcommand("fkm", "record for one Clifford-derived foliation");
  int cf_m = 0, cf_k = 0, cf_kplus = 0, cf_kminus = 0;
  cfkm->add_option("--m", cf_m, "Clifford generator count")->required();
  cfkm->add_option("--k", cf_k, "module count (undivided)");
  cfkm->add_option("--kplus", cf_kplus, "plus-class module count (4 | m)");
  cfkm->add_option("--kminus", cf_kminus, "minus-class module count (4 | m)");
  bool cf_json = false, cf_csv = false;
  std::string cf_out;
  auto* cf_json_opt = cfkm->add_flag("--json", cf_json, "JSON record to stdout");
  auto* cf_csv_opt = cfkm->add_flag("--csv", cf_csv, "CSV record to stdout");
  cf_json_opt->excludes(cf_csv_opt);
  cfkm->add_option("--out", cf_out, "also export the record to this path");
  cfkm->callback([&] {
    action = [&]() -> int {
      KSplit ks = resolve_k(cfkm, cf_k, cf_kplus, cf_kminus);
      err << "config: classify fkm m=" << cf_m;
      if (ks.divided) {
        err << " kplus=" << ks.kplus << " kminus=" << ks.kminus;
      } else {
        err << " k=" << ks.k;
      }
      err << " format=" << format_token(cf_json, cf_csv)
          << (cf_out.empty() ? "" : " out=" + cf_out) << "\n";
      Entry e = ks.divided ? entry_fkm(cf_m, cf_kplus, cf_kminus) : entry_fkm(cf_m, cf_k, 0);
      return emit_record(classify_entry(e), cf_json, cf_csv, cf_out, out);
    };
  });

  auto* join = classify->add_subcommand("join", "record for a join of catalogued factors");
  std::string join_spec;
  int join_fixed = 0;
  join->add_option("--spec", join_spec, "factors joined with '*', e.g. \"AIII(2,2)*TrivialSphere(4)\"")
      ->required();
  join->add_option("--fixed-part", join_fixed, "dimension fixed by every factor (default 0)");
  bool join_json = false, join_csv = false;
  std::string join_out;
  auto* join_json_opt = join->add_flag("--json", join_json, "JSON record to stdout");
  auto* join_csv_opt = join->add_flag("--csv", join_csv, "CSV record to stdout");
  join_json_opt->excludes(join_csv_opt);
  join->add_option("--out", join_out, "also export the record to this path");
  join->callback([&] {
    action = [&]() -> int {
      err << "config: classify join spec=" << join_spec << " fixed-part=" << join_fixed
          << " format=" << format_token(join_json, join_csv)
          << (join_out.empty() ? "" : " out=" + join_out) << "\n";
      std::vector<Entry> factors = parse_join_spec(join_spec);
      return emit_record(compose_join(factors, join_fixed), join_json, join_csv, join_out, out);
    };
  });

  // bruteforce j-moduli
  auto* bruteforce = app.add_subcommand("bruteforce", "exhaustive weight-test enumerations");
  bruteforce->require_subcommand(1);
  auto* jm = bruteforce->add_subcommand("j-moduli",
                                        "enumerate complex-structure classes by brute force");
  EntryFlags jm_flags;
  jm_flags.add(jm, true);
  bool jm_json = false;
  jm->add_flag("--json", jm_json, "JSON output");
  jm->callback([&] {
    action = [&]() -> int {
      err << "config: bruteforce j-moduli" << jm_flags.config()
          << " format=" << format_token(jm_json, false) << "\n";
      Entry e = jm_flags.build();
      if (!e.ws) throw CatalogError("no weight system for " + e.label() + ": carried as tabulated");
      Moduli mod = j_moduli(*e.ws);
      if (jm_json) {
        ordered_json top;
        top["descriptor"] = e.label();
        top["moduli"] = moduli_json(mod);
        out << top.dump(2) << "\n";
      } else {
        out << "descriptor: " << e.label() << "\n";
        out << "N_J: " << mod.classes.size() << "\n";
        out << "solutions: " << mod.solutions.size() << "\n";
        for (const Vec& c : mod.classes) out << "class: " << vec_str(c) << "\n";
      }
      return 0;
    };
  });

  // crosscheck
  auto* crosscheckv = app.add_subcommand("crosscheck",
                                         "closed-form vs enumerated counts over a preset grid");
  std::string grid;
  crosscheckv->add_option("--grid", grid, "classical | fkm | all")
      ->required()
      ->check(CLI::IsMember({"classical", "fkm", "all"}));
  bool cc_json = false;
  crosscheckv->add_flag("--json", cc_json, "JSON output");
  crosscheckv->callback([&] {
    action = [&]() -> int {
      err << "config: crosscheck grid=" << grid << " format=" << format_token(cc_json, false)
          << "\n";
      return do_crosscheck(grid, cc_json, out);
    };
  });

  // clifford build | verify
  auto* clifford = app.add_subcommand("clifford", "symmetric Clifford systems");
  clifford->require_subcommand(1);
  auto add_clifford_leaf = [&](const char* name, const char* desc, bool verify) {
    auto* leaf = clifford->add_subcommand(name, desc);
    auto m = std::make_shared<int>(0);
    auto k = std::make_shared<int>(0);
    auto kplus = std::make_shared<int>(0);
    auto kminus = std::make_shared<int>(0);
    leaf->add_option("--m", *m, "generator count")->required();
    leaf->add_option("--k", *k, "module count (undivided)");
    leaf->add_option("--kplus", *kplus, "plus-class module count (4 | m)");
    leaf->add_option("--kminus", *kminus, "minus-class module count (4 | m)");
    leaf->callback([&, leaf, m, k, kplus, kminus, verify, name = std::string(name)] {
      action = [&, leaf, m, k, kplus, kminus, verify, name]() -> int {
        KSplit ks = resolve_k(leaf, *k, *kplus, *kminus);
        err << "config: clifford " << name << " m=" << *m;
        if (ks.divided) {
          err << " kplus=" << ks.kplus << " kminus=" << ks.kminus;
        } else {
          err << " k=" << ks.k;
        }
        err << "\n";
        CliffordSystem sys = ks.divided ? build_clifford_system(*m, ks.kplus, ks.kminus)
                                        : build_clifford_system(*m, ks.k);
        if (verify) {
          CliffordReport rep = verify_clifford(sys);
          out << clifford_report_json(rep).dump(2) << "\n";
          return rep.ok ? 0 : 1;
        }
        out << clifford_json(sys).dump(2) << "\n";
        return 0;
      };
    });
  };
  add_clifford_leaf("build", "construct and dump the matrices", false);
  add_clifford_leaf("verify", "construct and re-check the defining relations", true);

  // fkm check-pde
  auto* fkmv = app.add_subcommand("fkm", "Clifford-derived quartic polynomials");
  fkmv->require_subcommand(1);
  auto* pde = fkmv->add_subcommand("check-pde", "check the defining differential identities");
  int pde_m = 0, pde_k = 0, pde_kplus = 0, pde_kminus = 0, pde_trials = 0;
  uint64_t pde_seed = 0;
  bool pde_symbolic = false, pde_json = false;
  pde->add_option("--m", pde_m, "generator count")->required();
  pde->add_option("--k", pde_k, "module count (undivided)");
  pde->add_option("--kplus", pde_kplus, "plus-class module count (4 | m)");
  pde->add_option("--kminus", pde_kminus, "minus-class module count (4 | m)");
  pde->add_option("--trials", pde_trials, "number of sampled points")->required();
  pde->add_option("--seed", pde_seed, "sampling seed")->required();
  pde->add_flag("--symbolic", pde_symbolic, "require the symbolic proof in the report");
  pde->add_flag("--json", pde_json, "JSON output");
  pde->callback([&] {
    action = [&]() -> int {
      KSplit ks = resolve_k(pde, pde_k, pde_kplus, pde_kminus);
      err << "config: fkm check-pde m=" << pde_m;
      if (ks.divided) {
        err << " kplus=" << ks.kplus << " kminus=" << ks.kminus;
      } else {
        err << " k=" << ks.k;
      }
      err << " trials=" << pde_trials << " seed=" << pde_seed
          << " symbolic=" << (pde_symbolic ? "yes" : "no")
          << " format=" << format_token(pde_json, false) << "\n";
      FKMFoliation f = ks.divided ? make_foliation(pde_m, ks.kplus, ks.kminus)
                                  : make_foliation(pde_m, ks.k);
      MunznerReport rep = verify_munzner(f, pde_trials, pde_seed);
      if (pde_json) {
        out << munzner_json(rep).dump(2) << "\n";
      } else {
        out << "ok: " << (rep.ok ? "yes" : "no") << "\n";
        out << "gradient_norm_ok: " << (rep.gradient_norm_ok ? "yes" : "no") << "\n";
        out << "laplacian_ok: " << (rep.laplacian_ok ? "yes" : "no") << "\n";
        out << "symbolic: " << (rep.symbolic ? "yes" : "no") << "\n";
        out << "trials: " << rep.trials << "\n";
      }
      if (pde_symbolic && !rep.symbolic) {
        err << "error: symbolic proof unavailable at this dimension\n";
        return 1;
      }
      return rep.ok ? 0 : 1;
    };
  });

  // quat verify
  auto* quat = app.add_subcommand("quat", "quaternionic structures");
  quat->require_subcommand(1);
  auto* qverify = quat->add_subcommand("verify", "realize a witness and re-check its identities");
  EntryFlags qv_flags;
  qv_flags.add(qverify, true);
  int qv_witness = 0, qv_trials = 0;
  uint64_t qv_seed = 0;
  bool qv_json = false;
  qverify->add_option("--witness", qv_witness, "structure index from the computed record")
      ->required();
  qverify->add_option("--trials", qv_trials, "sampled preservation trials (large ambient)");
  qverify->add_option("--seed", qv_seed, "sampling seed (large ambient)");
  qverify->add_flag("--json", qv_json, "JSON output");
  qverify->callback([&] {
    action = [&]() -> int {
      err << "config: quat verify" << qv_flags.config() << " witness=" << qv_witness;
      if (qverify->count("--trials")) err << " trials=" << qv_trials;
      if (qverify->count("--seed")) err << " seed=" << qv_seed;
      err << " format=" << format_token(qv_json, false) << "\n";
      Entry e = qv_flags.build();
      ClassificationRecord rec = compute_moduli(e);
      if (qv_witness < 0 || qv_witness >= static_cast<int>(rec.structures.size())) {
        throw std::invalid_argument("witness index out of range: N_S = " +
                                    std::to_string(rec.N_S));
      }
      const RecordStructure& s = rec.structures[static_cast<size_t>(qv_witness)];
      QuatTriple t = realize_witness(*s.witness, e);
      TripleReport tr = verify_triple(t);
      bool ok = tr.ok;
      ordered_json preservation;
      if (e.family == "FKM") {
        std::vector<int> ps = qv_flags.params();
        FKMFoliation f = ps.size() == 3 ? make_foliation(ps[0], ps[1], ps[2])
                                        : make_foliation(ps[0], ps[1]);
        const int ambient = 2 * f.system.l;
        PreservationReport prep;
        if (ambient <= 32) {
          prep = preserves_fkm(f, t, CheckMode::Symbolic);
        } else {
          if (!qverify->count("--trials") || !qverify->count("--seed")) {
            throw std::invalid_argument(
                "ambient dimension exceeds the symbolic bound: pass --trials and --seed");
          }
          prep = preserves_fkm(f, t, CheckMode::Sampled, qv_trials, qv_seed);
        }
        ok = ok && prep.ok;
        preservation = preservation_json(prep);
        preservation["mode"] = prep.symbolic ? "symbolic" : "sampled";
      } else {
        preservation = ordered_json::object();
        preservation["mode"] = "weight-certificate";
        preservation["ok"] = true;
      }
      if (qv_json) {
        ordered_json top;
        top["descriptor"] = rec.descriptor;
        top["witness"] = witness_json(*s.witness);
        top["triple"] = triple_json(t, tr);
        top["preservation"] = std::move(preservation);
        out << top.dump(2) << "\n";
      } else {
        out << "descriptor: " << rec.descriptor << "\n";
        out << "witness: " << s.tag << " H=" << vec_str(*s.cartan) << "\n";
        out << "order: " << t.j1.rows() << "\n";
        out << "triple_ok: " << (tr.ok ? "yes" : "no") << "\n";
        for (const std::string& f : tr.failures) out << "failure: " << f << "\n";
        out << "preservation: " << preservation["mode"].get<std::string>() << " ok="
            << ((preservation.contains("ok") && preservation["ok"].get<bool>()) ? "yes" : "no")
            << "\n";
      }
      return ok ? 0 : 1;
    };
  });

  // scan codim1 | irreducible
  auto* scan = app.add_subcommand("scan", "per-dimension existence sweeps");
  scan->require_subcommand(1);
  auto add_scan_leaf = [&](const char* name, const char* desc,
                           std::vector<ScanResult> (*fn)(int, int)) {
    auto* leaf = scan->add_subcommand(name, desc);
    auto max_n = std::make_shared<int>(0);
    auto threads = std::make_shared<int>(1);
    auto json = std::make_shared<bool>(false);
    leaf->add_option("--max-n", *max_n, "largest quotient dimension to scan")->required();
    leaf->add_option("--threads", *threads, "worker threads (env POLARFOL_THREADS as fallback)");
    leaf->add_flag("--json", *json, "JSON output");
    leaf->callback([&, leaf, max_n, threads, json, fn, name = std::string(name)] {
      action = [&, leaf, max_n, threads, json, fn, name]() -> int {
        int t = resolve_threads(leaf, *threads);
        err << "config: scan " << name << " max-n=" << *max_n << " threads=" << t
            << " format=" << format_token(*json, false) << "\n";
        std::vector<ScanResult> rows = fn(*max_n, t);
        if (*json) {
          out << scan_json(rows).dump(2) << "\n";
        } else {
          print_scan_text(rows, out);
        }
        return 0;
      };
    });
  };
  add_scan_leaf("codim1", "inhomogeneous codimension-one foliations", &scan_codim1);
  add_scan_leaf("irreducible", "inhomogeneous irreducible foliations", &scan_irreducible);

  // table1
  auto* table = app.add_subcommand("table1", "grouped classification table");
  int t_max_p = 0, t_max_q = 0;
  bool t_json = false, t_csv = false;
  table->add_option("--max-p", t_max_p, "largest grouped p")->required();
  table->add_option("--max-q", t_max_q, "largest grouped q")->required();
  auto* t_json_opt = table->add_flag("--json", t_json, "JSON output");
  auto* t_csv_opt = table->add_flag("--csv", t_csv, "CSV output");
  t_json_opt->excludes(t_csv_opt);
  table->callback([&] {
    action = [&]() -> int {
      err << "config: table1 max-p=" << t_max_p << " max-q=" << t_max_q
          << " format=" << format_token(t_json, t_csv) << "\n";
      std::vector<TableRow> rows = table1(t_max_p, t_max_q);
      if (t_json) {
        out << table_json(rows).dump(2) << "\n";
      } else if (t_csv) {
        out << table_csv(rows);
      } else {
        for (const TableRow& row : rows) {
          out << row.space << " | N_S=" << row.N_S << " | " << row.condition << "\n";
        }
      }
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (!action) {
    err << "error: no verb selected\n";
    return 2;
  }
  try {
    return action();
  } catch (const CatalogError& e) {
    err << "error: " << e.what() << "\n";
    return 64;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return 64;
  } catch (const UndecidedError& e) {
    err << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace polarfol
