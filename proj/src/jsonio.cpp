#include <polarfol/jsonio.hpp>

#include <fstream>
#include <stdexcept>

namespace polarfol {

std::string rational_str(const Rational& r) { return r.get_str(); }

ordered_json vec_json(const Vec& v) {
  ordered_json out = ordered_json::array();
  for (const Rational& x : v) out.push_back(rational_str(x));
  return out;
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_str(m.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

Vec vec_from_json(const ordered_json& j) {
  Vec v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(Rational(x.get<std::string>()));
  return v;
}

}  // namespace

ordered_json witness_json(const Su2Witness& w) {
  ordered_json out;
  out["constructor"] = w.constructor_tag;
  out["factor_indices"] = w.factor_indices;
  out["parts"] = w.parts;
  out["cartan"] = vec_json(w.cartan);
  out["ideal"] = w.is_ideal;
  return out;
}

ordered_json record_json(const ClassificationRecord& r) {
  ordered_json out;
  out["descriptor"] = r.descriptor;
  out["family"] = r.family;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  out["params"] = std::move(params);
  out["dim"] = r.dim;
  out["rank"] = r.rank;
  out["n"] = r.n ? ordered_json(*r.n) : ordered_json(nullptr);
  out["N_J"] = r.N_J;
  out["N_S"] = r.N_S;
  ordered_json structures = ordered_json::array();
  for (const RecordStructure& s : r.structures) {
    ordered_json item;
    item["H"] = s.cartan ? vec_json(*s.cartan) : ordered_json(nullptr);
    item["witness"] = s.witness ? witness_json(*s.witness) : ordered_json(s.tag);
    item["homogeneous"] = s.homogeneous ? ordered_json(*s.homogeneous) : ordered_json(nullptr);
    structures.push_back(std::move(item));
  }
  out["structures"] = std::move(structures);
  out["provenance"] = r.provenance;
  out["canonicalization_group"] = r.canonicalization_group;
  return out;
}

ClassificationRecord record_from_json(const ordered_json& j) {
  ClassificationRecord r;
  r.descriptor = j.at("descriptor").get<std::string>();
  r.family = j.at("family").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<int>());
  r.dim = j.at("dim").get<int>();
  r.rank = j.at("rank").get<int>();
  if (!j.at("n").is_null()) r.n = j.at("n").get<int>();
  r.N_J = j.at("N_J").get<int>();
  r.N_S = j.at("N_S").get<int>();
  for (const auto& item : j.at("structures")) {
    RecordStructure s;
    if (!item.at("H").is_null()) s.cartan = vec_from_json(item.at("H"));
    const auto& w = item.at("witness");
    if (w.is_string()) {
      s.tag = w.get<std::string>();
    } else {
      Su2Witness sw;
      sw.constructor_tag = w.at("constructor").get<std::string>();
      sw.factor_indices = w.at("factor_indices").get<std::vector<int>>();
      sw.parts = w.at("parts").get<std::vector<std::string>>();
      sw.cartan = vec_from_json(w.at("cartan"));
      sw.is_ideal = w.at("ideal").get<bool>();
      s.tag = sw.constructor_tag;
      s.is_ideal = sw.is_ideal;
      s.witness = std::move(sw);
    }
    if (!item.at("homogeneous").is_null()) s.homogeneous = item.at("homogeneous").get<bool>();
    r.structures.push_back(std::move(s));
  }
  r.provenance = j.at("provenance").get<std::string>();
  r.canonicalization_group = j.at("canonicalization_group").get<std::string>();
  return r;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string records_csv(const std::vector<ClassificationRecord>& rs) {
  std::string out = "G/K,N_S,condition\n";
  for (const auto& r : rs) {
    out += csv_field(r.descriptor) + "," + std::to_string(r.N_S) + ",-\n";
  }
  return out;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::string out = "G/K,N_S,condition\n";
  for (const auto& row : rows) {
    out += csv_field(row.space) + "," + std::to_string(row.N_S) + "," + csv_field(row.condition) +
           "\n";
  }
  return out;
}

ordered_json table_json(const std::vector<TableRow>& rows) {
  ordered_json out = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json item;
    item["space"] = row.space;
    item["N_S"] = row.N_S;
    item["condition"] = row.condition;
    out.push_back(std::move(item));
  }
  return out;
}

ordered_json scan_json(const std::vector<ScanResult>& rows) {
  ordered_json out = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json item;
    item["n"] = row.n;
    item["inhomogeneous"] = row.inhomogeneous;
    item["undecided"] = row.undecided;
    out.push_back(std::move(item));
  }
  return out;
}

ordered_json moduli_json(const Moduli& m) {
  ordered_json out;
  out["N_J"] = m.classes.size();
  ordered_json classes = ordered_json::array();
  for (const Vec& c : m.classes) classes.push_back(vec_json(c));
  out["classes"] = std::move(classes);
  ordered_json solutions = ordered_json::array();
  for (const Vec& s : m.solutions) solutions.push_back(vec_json(s));
  out["solutions"] = std::move(solutions);
  return out;
}

ordered_json clifford_json(const CliffordSystem& s) {
  ordered_json out;
  out["m"] = s.m;
  out["l"] = s.l;
  out["k"] = s.k;
  out["split"] = s.split ? ordered_json({s.split->first, s.split->second}) : ordered_json(nullptr);
  ordered_json mats = ordered_json::array();
  for (const Matrix& p : s.matrices) mats.push_back(matrix_json(p));
  out["matrices"] = std::move(mats);
  ordered_json comms = ordered_json::array();
  for (const Matrix& c : s.commutant_generators) comms.push_back(matrix_json(c));
  out["commutant_generators"] = std::move(comms);
  return out;
}

ordered_json clifford_report_json(const CliffordReport& r) {
  ordered_json out;
  out["ok"] = r.ok;
  out["failures"] = r.failures;
  return out;
}

ordered_json munzner_json(const MunznerReport& r) {
  ordered_json out;
  out["ok"] = r.ok;
  out["gradient_norm_ok"] = r.gradient_norm_ok;
  out["laplacian_ok"] = r.laplacian_ok;
  out["symbolic"] = r.symbolic;
  out["trials"] = r.trials;
  return out;
}

ordered_json triple_json(const QuatTriple& t, const TripleReport& rep) {
  ordered_json out;
  out["order"] = t.j1.rows();
  out["ok"] = rep.ok;
  out["failures"] = rep.failures;
  auto status = generator_status(t);
  ordered_json gens = ordered_json::array();
  const char* names[3] = {"J1", "J2", "J3"};
  for (int i = 0; i < 3; ++i) {
    ordered_json g;
    g["name"] = names[i];
    g["skew"] = status[i].skew;
    g["squares_to_minus_id"] = status[i].squares_to_minus_id;
    g["cyclic_product"] = status[i].cyclic_product;
    gens.push_back(std::move(g));
  }
  out["generators"] = std::move(gens);
  return out;
}

ordered_json preservation_json(const PreservationReport& r) {
  ordered_json out;
  out["ok"] = r.ok;
  out["symbolic"] = r.symbolic;
  out["trials"] = r.trials;
  out["generator_ok"] = {r.generator_ok[0], r.generator_ok[1], r.generator_ok[2]};
  return out;
}

void export_records(const std::vector<ClassificationRecord>& rs, const std::string& format,
                    const std::string& path) {
  if (rs.empty()) throw std::invalid_argument("export needs at least one record");
  std::string payload;
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rs) arr.push_back(record_json(r));
    payload = arr.dump(2) + "\n";
  } else if (format == "csv") {
    payload = records_csv(rs);
  } else {
    throw std::invalid_argument("unknown export format: " + format);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << payload;
  if (!out.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace polarfol
