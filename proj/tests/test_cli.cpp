#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cyclo2/cli.hpp"
#include "cyclo2/json_io.hpp"
#include "cyclo2/towers.hpp"

using namespace cyclo2;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/cyclo2_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("classify command renders the worked examples") {
  auto r = cli::run({"classify", "fq:3", "4"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("cyclic       yes (tau_minus_nu_in_f)") != std::string::npos);
  CHECK(r.out.find("degree       4") != std::string::npos);
  CHECK(r.out.find("min_poly     x^4 - tm8*x^2 - 1") != std::string::npos);

  auto q = cli::run({"classify", "qzeta:1", "4"});
  CHECK(q.exit_code == 0);
  CHECK(q.out.find("cyclic       no (neither)") != std::string::npos);
  CHECK(q.out.find("degree       8") != std::string::npos);
  CHECK(q.out.find("towers       5") != std::string::npos);

  auto bad = cli::run({"classify", "fq:2", "4"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.err.find("unsupported characteristic") != std::string::npos);

  auto small = cli::run({"classify", "qzeta:1", "2"});
  CHECK(small.exit_code == 0);
  CHECK(small.out.find("warning: e <= nu") != std::string::npos);
}

TEST_CASE("invariants command") {
  auto r = cli::run({"invariants", "fq:7"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("nu_plus      3") != std::string::npos);
  CHECK(r.out.find("nu           4") != std::string::npos);
  CHECK(r.out.find("property_c2  yes (witness e' = 4)") != std::string::npos);
}

TEST_CASE("towers command with DOT output") {
  TempFile dot("towers.dot");
  auto r = cli::run({"towers", "qzeta:1", "4", "--dot", dot.path});
  CHECK(r.exit_code == 0);
  std::size_t lines = 0, pos = 0;
  while ((pos = r.out.find('\n', pos)) != std::string::npos) {
    ++lines;
    ++pos;
  }
  CHECK(lines == 6);  // 5 towers + the "wrote DOT" line
  CHECK(r.out.find("z16/z8/z4/base\n") == 0);
  const std::string dot_text = slurp(dot.path);
  CHECK(dot_text.rfind("digraph subfields {", 0) == 0);

  auto small = cli::run({"towers", "fq:3", "3"});
  CHECK(small.exit_code == 0);
  CHECK(small.out.find("warning: e <= nu") != std::string::npos);
}

TEST_CASE("verify command") {
  auto one = cli::run({"verify", "fq:3", "4"});
  CHECK(one.exit_code == 0);
  CHECK(one.out.find("PASS fq:3 e=4") != std::string::npos);

  auto sweep = cli::run({"--quiet", "verify", "--sweep", "primes", "3..13", "--e-max", "6"});
  CHECK(sweep.exit_code == 0);
  CHECK(sweep.out.find("PASS (") != std::string::npos);

  auto missing = cli::run({"verify", "fq:3"});
  CHECK(missing.exit_code == 1);
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  return cells;
}

}  // namespace

TEST_CASE("sweep command emits fixed-order CSV with an exact cyclic column") {
  auto r = cli::run({"sweep", "qsqrt", "--range=-10..10", "--e", "5"});
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "field,e,nu_plus,nu,c2,cyclic,degree,tower_count,verified");
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    const auto cells = split_csv(line);
    REQUIRE(cells.size() == 9);
    const bool expect_cyclic = cells[0] == "qsqrt:-1" || cells[0] == "qsqrt:-2";
    CHECK(cells[1] == "5");
    CHECK(cells[5] == (expect_cyclic ? "true" : "false"));
    CHECK(cells[8] == "true");  // every row verified against the oracle
    if (cells[0] == "qsqrt:-1") CHECK(line == "qsqrt:-1,5,3,3,false,true,8,1,true");
    if (cells[0] == "qsqrt:-2") CHECK(line == "qsqrt:-2,5,2,3,true,true,8,1,true");
  }
  CHECK(rows == 13);  // squarefree d in [-10, 10], d != 0, 1

  // negative range also accepted as a bare token and in space-separated form
  auto bare = cli::run({"sweep", "qsqrt", "-10..10", "--e", "5"});
  CHECK(bare.exit_code == 0);
  CHECK(bare.out == r.out);
  auto spaced = cli::run({"sweep", "qsqrt", "--range", "-10..10", "--e", "5"});
  CHECK(spaced.exit_code == 0);
  CHECK(spaced.out == r.out);

  // byte-identical reruns
  auto again = cli::run({"sweep", "qsqrt", "--range=-10..10", "--e", "5"});
  CHECK(again.out == r.out);
}

TEST_CASE("sweep to CSV file honors config output_dir and e_max") {
  TempFile cfg("config");
  {
    std::ofstream out(cfg.path);
    out << "# test config\n";
    out << "e_max=4\n";
    out << "output_dir=/tmp\n";
  }
  auto r = cli::run({"--config", cfg.path, "sweep", "primes", "3..5", "--csv",
                     "cyclo2_test_sweep.csv"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("wrote") != std::string::npos);
  const std::string csv = slurp("/tmp/cyclo2_test_sweep.csv");
  CHECK(csv.find("fq:3,4,") != std::string::npos);   // nu(F_3) = 3 < 4 <= e_max
  CHECK(csv.find("fq:3,5,") == std::string::npos);   // capped by config e_max
  CHECK(csv.find("fq:5,4,") != std::string::npos);   // nu(F_5) = 3
  std::remove("/tmp/cyclo2_test_sweep.csv");

  auto bad = cli::run({"--config", "/tmp/definitely_missing_cyclo2.cfg", "invariants", "fq:3"});
  CHECK(bad.exit_code == 1);
}

TEST_CASE("sweep rejects conflicting or missing options") {
  CHECK(cli::run({"sweep", "primes", "3..5", "--e", "4", "--e-max", "6"}).exit_code == 1);
  CHECK(cli::run({"sweep", "primes"}).exit_code == 1);
  CHECK(cli::run({"sweep", "primes", "9..3"}).exit_code == 1);
  CHECK(cli::run({"sweep", "nope", "1..2"}).exit_code == 1);
  CHECK(cli::run({"sweep", "primes", "3..5", "--e", "25"}).exit_code == 1);
}

TEST_CASE("usage errors and help") {
  CHECK(cli::run({}).exit_code == 1);
  CHECK(cli::run({"frobnicate"}).exit_code == 1);
  auto help = cli::run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("classify") != std::string::npos);
}

TEST_CASE("classification JSON round-trips") {
  for (const auto& spec : {"fq:3", "qzeta:1", "qzeta:4", "qsqrt:-2", "qsqrt:7", "fq:7^2"}) {
    const BaseField f = parse_field(spec);
    const unsigned e = compute_invariants(f).nu + 2;
    const Classification c = classify(f, e);
    const json j = to_json(c);
    const Classification back = classification_from_json(json::parse(j.dump()));
    CHECK(back == c);
  }
}

TEST_CASE("tower JSON round-trips") {
  const auto towers = enumerate_towers(BaseField::rationals(), 5);
  CHECK(towers_from_json(json::parse(to_json(towers).dump())) == towers);
}

TEST_CASE("CLI JSON outputs parse and carry the documented keys") {
  auto r = cli::run({"classify", "fq:3", "4", "--json"});
  const json j = json::parse(r.out);
  CHECK(j.at("field") == "fq:3");
  CHECK(j.at("cyclic") == true);
  CHECK(j.at("degree") == 4);
  CHECK(j.at("galois").at("elements") == json::array({1, 3, 9, 11}));
  CHECK(j.at("min_poly").at("rendered") == "x^4 - tm8*x^2 - 1");

  auto t = cli::run({"towers", "qzeta:1", "4", "--json"});
  const json tj = json::parse(t.out);
  CHECK(tj.at("count") == 5);
  CHECK(tj.at("towers").size() == 5);
  CHECK(tj.at("towers")[0] == json::array({"z16", "z8", "z4", "base"}));

  auto v = cli::run({"verify", "fq:3", "4", "--json"});
  const json vj = json::parse(v.out);
  CHECK(vj.at("all_pass") == true);

  auto s = cli::run({"sweep", "qsqrt", "--range=-2..-2", "--e", "4", "--json"});
  const json sj = json::parse(s.out);
  CHECK(sj.size() == 1);
  CHECK(sj[0].at("field") == "qsqrt:-2");
  CHECK(sj[0].at("cyclic") == true);
}
