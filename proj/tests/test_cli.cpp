#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <polarfol/catalog.hpp>
#include <polarfol/classify.hpp>
#include <polarfol/cli.hpp>
#include <polarfol/jsonio.hpp>

using namespace polarfol;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("polarfol");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

TEST_CASE("tool output matches direct library serialization") {
  CliResult r = run({"classify", "fkm", "--m", "3", "--k", "2", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out == dump(record_json(classify_entry(entry_fkm(3, 2, 0)))));

  r = run({"classify", "space", "--family", "AIII", "--p", "3", "--q", "3", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out == dump(record_json(classify_entry(entry_aiii(3, 3)))));

  r = run({"classify", "space", "--family", "EIX", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out == dump(record_json(closed_form(entry_exceptional("EIX")))));

  r = run({"classify", "join", "--spec", "AIII(2,2) * TrivialSphere(4)", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        dump(record_json(compose_join({entry_aiii(2, 2), entry_trivial_sphere(4)}))));

  r = run({"table1", "--max-p", "2", "--max-q", "4", "--csv"});
  CHECK(r.code == 0);
  CHECK(r.out == table_csv(table1(2, 4)));

  r = run({"scan", "codim1", "--max-n", "12", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out == dump(scan_json(scan_codim1(12))));

  r = run({"bruteforce", "j-moduli", "--family", "DI", "--p", "2", "--q", "3", "--json"});
  CHECK(r.code == 0);
  Entry di = entry_di(2, 3);
  ordered_json expected;
  expected["descriptor"] = di.label();
  expected["moduli"] = moduli_json(j_moduli(*di.ws));
  CHECK(r.out == dump(expected));

  r = run({"clifford", "build", "--m", "2", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == dump(clifford_json(build_clifford_system(2, 2))));
}

TEST_CASE("the documented command examples hold") {
  CliResult r = run({"classify", "fkm", "--m", "3", "--k", "2", "--json"});
  CHECK(r.code == 0);
  ordered_json rec = ordered_json::parse(r.out);
  CHECK(rec["N_S"] == 2);
  CHECK(rec["dim"] == 16);
  CHECK(rec["provenance"] == "computed");

  r = run({"scan", "irreducible", "--max-n", "20"});
  CHECK(r.code == 0);
  std::set<int> trues;
  std::istringstream lines(r.out);
  std::string line;
  while (std::getline(lines, line)) {
    int n = 0;
    char yn[8] = {0};
    if (std::sscanf(line.c_str(), "n=%d inhomogeneous=%3s", &n, yn) == 2 &&
        std::string(yn) == "yes") {
      trues.insert(n);
    }
  }
  CHECK(trues == std::set<int>{3, 5, 7, 8, 9, 11, 13, 14, 15, 17, 19, 20});

  r = run({"classify", "space", "--family", "AIII", "--p", "3", "--q", "3", "--json"});
  CHECK(r.code == 0);
  CHECK(ordered_json::parse(r.out)["N_S"] == 0);

  r = run({"scan", "codim1", "--max-n", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("n=7 inhomogeneous=yes UNDECIDED\n") != std::string::npos);
  CHECK(r.out.find("n=5 inhomogeneous=yes\n") != std::string::npos);
  CHECK(r.out.find("n=4 inhomogeneous=no\n") != std::string::npos);

  r = run({"quat", "verify", "--family", "FKM", "--m", "3", "--k", "2", "--witness", "1",
           "--json"});
  CHECK(r.code == 0);
  ordered_json qv = ordered_json::parse(r.out);
  CHECK(qv["triple"]["ok"] == true);
  CHECK(qv["triple"]["generators"].size() == 3);
  for (const auto& g : qv["triple"]["generators"]) {
    CHECK(g["skew"] == true);
    CHECK(g["squares_to_minus_id"] == true);
    CHECK(g["cyclic_product"] == true);
  }
  CHECK(qv["preservation"]["mode"] == "symbolic");
  CHECK(qv["preservation"]["ok"] == true);

  r = run({"fkm", "check-pde", "--m", "3", "--k", "2", "--trials", "5", "--seed", "7",
           "--symbolic", "--json"});
  CHECK(r.code == 0);
  ordered_json pde = ordered_json::parse(r.out);
  CHECK(pde["ok"] == true);
  CHECK(pde["symbolic"] == true);

  r = run({"crosscheck", "--grid", "fkm"});
  CHECK(r.code == 0);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
  CHECK(r.out.find(" 0 mismatches\n") != std::string::npos);
}

TEST_CASE("exit codes separate usage errors, refusals, and failures") {
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"classify"}).code == 2);
  CHECK(run({"classify", "space", "--p", "2", "--q", "2"}).code == 2);
  CHECK(run({"classify", "space", "--family", "AIII", "--p", "2", "--q", "2", "--json",
             "--csv"}).code == 2);
  CHECK(run({"classify", "fkm", "--m", "4", "--k", "2", "--kplus", "1", "--kminus", "1"}).code ==
        2);
  CHECK(run({"classify", "space", "--family", "FKM", "--k", "2"}).code == 2);
  CHECK(run({"classify", "join", "--spec", ""}).code == 2);
  CHECK(run({"classify", "join", "--spec", "AIII(2,2)*"}).code == 2);
  CHECK(run({"fkm", "check-pde", "--m", "2", "--k", "3", "--trials", "5"}).code == 2);
  CHECK(run({"quat", "verify", "--family", "FKM", "--m", "3", "--k", "2", "--witness", "9"})
            .code == 2);
  CHECK(run({"quat", "verify", "--family", "FKM", "--m", "5", "--k", "3", "--witness", "0"})
            .code == 2);
  CHECK(run({"crosscheck", "--grid", "everything"}).code == 2);

  CHECK(run({"classify", "space", "--family", "AIII", "--p", "1", "--q", "2"}).code == 64);
  CHECK(run({"classify", "space", "--family", "Nope", "--p", "2", "--q", "2"}).code == 64);
  CHECK(run({"classify", "fkm", "--m", "1", "--k", "1"}).code == 64);
  CHECK(run({"classify", "space", "--family", "AIII", "--p", "8", "--q", "8"}).code == 64);
  CHECK(run({"bruteforce", "j-moduli", "--family", "EVII"}).code == 64);
  CHECK(run({"quat", "verify", "--family", "EVII", "--witness", "0"}).code == 64);

  CHECK(run({"--help"}).code == 0);
  CHECK(run({"classify", "fkm", "--m", "2", "--k", "3"}).code == 0);
}

TEST_CASE("identical invocations are byte-identical") {
  const std::vector<std::string> calls[] = {
      {"classify", "fkm", "--m", "4", "--kplus", "1", "--kminus", "1", "--json"},
      {"fkm", "check-pde", "--m", "5", "--k", "2", "--trials", "9", "--seed", "42", "--json"},
      {"quat", "verify", "--family", "FKM", "--m", "5", "--k", "3", "--witness", "0", "--trials",
       "6", "--seed", "9", "--json"},
      {"table1", "--max-p", "3", "--max-q", "5", "--csv"},
      {"scan", "irreducible", "--max-n", "24", "--json"},
  };
  for (const auto& args : calls) {
    CliResult a = run(args);
    CliResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}

TEST_CASE("thread count changes neither scan output nor its order") {
  CliResult one = run({"scan", "codim1", "--max-n", "30", "--threads", "1"});
  CliResult four = run({"scan", "codim1", "--max-n", "30", "--threads", "4"});
  CHECK(one.code == 0);
  CHECK(four.code == 0);
  CHECK(one.out == four.out);

  setenv("POLARFOL_THREADS", "3", 1);
  CliResult env = run({"scan", "codim1", "--max-n", "30"});
  CHECK(env.code == 0);
  CHECK(env.out == one.out);
  CHECK(env.err.find("threads=3") != std::string::npos);

  setenv("POLARFOL_THREADS", "garbage", 1);
  CHECK(run({"scan", "codim1", "--max-n", "10"}).code == 2);
  unsetenv("POLARFOL_THREADS");
}

TEST_CASE("every run prints its effective configuration") {
  CliResult r = run({"classify", "fkm", "--m", "3", "--k", "2", "--json"});
  CHECK(r.err == "config: classify fkm m=3 k=2 format=json\n");
  r = run({"fkm", "check-pde", "--m", "2", "--k", "3", "--trials", "5", "--seed", "11"});
  CHECK(r.err == "config: fkm check-pde m=2 k=3 trials=5 seed=11 symbolic=no format=text\n");
  r = run({"scan", "codim1", "--max-n", "4"});
  CHECK(r.err == "config: scan codim1 max-n=4 threads=1 format=text\n");
  r = run({"classify", "space", "--family", "DI", "--p", "2", "--q", "3"});
  CHECK(r.err == "config: classify space family=DI p=2 q=3 format=text\n");
}

TEST_CASE("exports round-trip and mirror the grouped table") {
  const std::string json_path = "/tmp/polarfol_cli_test_record.json";
  const std::string csv_path = "/tmp/polarfol_cli_test_record.csv";
  std::remove(json_path.c_str());
  std::remove(csv_path.c_str());

  CliResult r = run({"classify", "fkm", "--m", "3", "--k", "2", "--json", "--out", json_path});
  CHECK(r.code == 0);
  const std::string file = slurp(json_path);
  CHECK(!file.empty());
  CHECK(file.back() == '\n');
  CHECK(file.find("\r") == std::string::npos);
  ordered_json arr = ordered_json::parse(file);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 1);
  ClassificationRecord parsed = record_from_json(arr[0]);
  CHECK(record_json(parsed) == arr[0]);
  CHECK(parsed.descriptor == "FKM(3;2)");
  CHECK(parsed.N_S == 2);
  REQUIRE(parsed.structures.size() == 2);
  CHECK(parsed.structures[0].witness.has_value());
  CHECK(parsed.structures[0].cartan.has_value());

  r = run({"classify", "space", "--family", "CII", "--p", "2", "--q", "3", "--csv", "--out",
           csv_path});
  CHECK(r.code == 0);
  CHECK(slurp(csv_path) == "G/K,N_S,condition\n\"CII(2,3)\",2,-\n");

  ClassificationRecord tab = closed_form(entry_exceptional("EIX"));
  ordered_json jt = record_json(tab);
  CHECK(record_json(record_from_json(jt)) == jt);
  ClassificationRecord joined = compose_join({entry_aiii(4, 2), entry_aiii(4, 2)});
  ordered_json jj = record_json(joined);
  CHECK(record_json(record_from_json(jj)) == jj);

  CHECK_THROWS_AS(export_records({}, "json", json_path), std::invalid_argument);
  CHECK_THROWS_AS(export_records({tab}, "xml", json_path), std::invalid_argument);

  r = run({"table1", "--max-p", "4", "--max-q", "4", "--csv"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int sp_rows = 0;
  while (std::getline(lines, line)) {
    int total = 0, p = 0, q = 0;
    if (std::sscanf(line.c_str(), "Sp(%d)/Sp(%d)xSp(%d)", &total, &p, &q) == 3) {
      ++sp_rows;
      int ns = closed_form(entry_cii(p, q)).N_S;
      CHECK(line == "Sp(" + std::to_string(total) + ")/Sp(" + std::to_string(p) + ")xSp(" +
                        std::to_string(q) + ")," + std::to_string(ns) + "," +
                        (p != q ? "p != q" : "p = q"));
    }
  }
  CHECK(sp_rows == 9);

  std::remove(json_path.c_str());
  std::remove(csv_path.c_str());
}
