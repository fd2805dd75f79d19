#include "hyperaco/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "hyperaco/hgr.hpp"
#include "json.hpp"

using namespace hyperaco;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli_main(args, out, err);
  return CliRun{code, out.str(), err.str()};
}

/// Writes content to a scratch file that is removed on destruction.
class TempFile {
 public:
  TempFile(std::string name, const std::string& content) : path_(std::move(name)) {
    std::ofstream f(path_);
    f << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

const char* kTriangle = "3 3\n1 1 2\n1 2 3\n1 1 3\n";

}  // namespace

TEST_CASE("validate accepts a positional path and reports defects") {
  TempFile good("cli_good.hgr", kTriangle);
  CliRun ok = run_cli({"validate", good.path()});
  CHECK(ok.code == 0);
  CHECK(ok.out == "valid\n");

  TempFile bad("cli_bad.hgr", "3 1\n1 1 2\n");  // vertex 3 uncovered
  CliRun fail = run_cli({"validate", bad.path()});
  CHECK(fail.code == 2);
  CHECK(fail.out.find("invalid") == 0);

  CliRun missing = run_cli({"validate", "no_such_file.hgr"});
  CHECK(missing.code == 2);

  CliRun noarg = run_cli({"validate"});
  CHECK(noarg.code == 1);
}

TEST_CASE("usage errors exit with code one") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"bounds", "--theorem", "nonsense", "--m", "4", "--k", "2"}).code == 1);
  CHECK(run_cli({"solve", "--no-such-flag"}).code == 1);
  // Help is a clean exit.
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"solve", "--help"}).code == 0);
}

TEST_CASE("gen writes instance and sidecar files") {
  CliRun r = run_cli({"gen", "instance1", "--n", "4", "--r", "2", "--seed", "2",
                      "--rand-max", "2", "--out", "cli_gen_test"});
  CHECK(r.code == 0);

  Hypergraph h = read_hgr_file("cli_gen_test.hgr");
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 6);

  std::ifstream meta("cli_gen_test.json");
  REQUIRE(meta.good());
  nlohmann::json sidecar = nlohmann::json::parse(meta);
  CHECK(sidecar["planted_cover"] == nlohmann::json::array({1, 2, 6}));
  CHECK(sidecar["k"] == 3);
  CHECK(sidecar["generator_params"]["n"] == 4);

  std::remove("cli_gen_test.hgr");
  std::remove("cli_gen_test.json");
}

TEST_CASE("solve emits a JSON result and honors --target exit codes") {
  TempFile tri("cli_tri.hgr", kTriangle);

  CliRun r = run_cli({"solve", tri.path(), "--seed", "1", "--max-iters", "500"});
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["best_fitness"] == 2.0);
  CHECK(j["best_edges"].size() == 2);
  CHECK_FALSE(j.contains("trace"));

  CliRun traced =
      run_cli({"solve", tri.path(), "--seed", "1", "--max-iters", "500", "--trace"});
  CHECK(nlohmann::json::parse(traced.out).contains("trace"));

  // Reachable target: exit 0. Unreachable target: exit 3.
  CliRun hit = run_cli({"solve", tri.path(), "--seed", "1", "--target", "2"});
  CHECK(hit.code == 0);
  CliRun miss = run_cli(
      {"solve", tri.path(), "--seed", "1", "--target", "1.5", "--max-iters", "50"});
  CHECK(miss.code == 3);
}

TEST_CASE("solve output bytes are deterministic for identical invocations") {
  TempFile tri("cli_det.hgr", kTriangle);
  std::vector<std::string> args{"solve", tri.path(), "--seed", "7", "--max-iters",
                                "200", "--trace"};
  CliRun a = run_cli(args);
  CliRun b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("solve routes reduction problems") {
  TempFile tri("cli_vc.hgr", kTriangle);
  CliRun vc = run_cli({"solve", tri.path(), "--problem", "vertex-cover", "--seed", "1",
                       "--max-iters", "2000"});
  CHECK(vc.code == 0);
  nlohmann::json j = nlohmann::json::parse(vc.out);
  CHECK(j["best_value"] == 2.0);
  CHECK(j["best_vertices"].size() == 2);

  CliRun ws = run_cli({"solve", tri.path(), "--problem", "weak-is", "--seed", "1",
                       "--max-iters", "2000"});
  CHECK(nlohmann::json::parse(ws.out)["best_value"] == 1.0);
}

TEST_CASE("oracle answers the triangle vertex cover") {
  TempFile tri("cli_oracle.hgr", kTriangle);
  CliRun r = run_cli({"oracle", tri.path(), "--problem", "vertex-cover"});
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["problem"] == "vertex-cover");
  CHECK(j["value"] == 2.0);
  CHECK(j["optima_count"] == 3);

  CliRun ec = run_cli({"oracle", tri.path()});
  CHECK(nlohmann::json::parse(ec.out)["value"] == 2.0);
}

TEST_CASE("oracle rejects oversized instances with exit code two") {
  std::ostringstream big;
  big << "1 25\n";
  for (int i = 0; i < 25; ++i) {
    big << "1 1\n";
  }
  TempFile f("cli_big.hgr", big.str());
  CHECK(run_cli({"oracle", f.path()}).code == 2);
}

TEST_CASE("bounds subcommand evaluates each kind") {
  CliRun ph =
      run_cli({"bounds", "--theorem", "pheromone", "--m", "5", "--k", "2", "--c", "2"});
  CHECK(ph.code == 0);
  CHECK(nlohmann::json::parse(ph.out)["value"] == 28.0);

  CliRun he = run_cli({"bounds", "--theorem", "heuristic", "--m", "4", "--k", "2",
                       "--eta-max", "2", "--eta-min", "1", "--beta", "1"});
  CHECK(nlohmann::json::parse(he.out)["value"] == 25.0);

  CliRun se = run_cli({"bounds", "--theorem", "separated-pmin", "--m", "6", "--k", "3",
                       "--eta-prime-min", "2", "--eta-1-max", "1", "--beta", "4"});
  CHECK(nlohmann::json::parse(se.out)["value"].get<double>() ==
        doctest::Approx(0.5971715993585071).epsilon(1e-12));

  CliRun bs = run_cli({"bounds", "--theorem", "beta-star", "--m", "4", "--k", "2",
                       "--eta-prime-min", "4", "--eta-1-max", "1"});
  CHECK(nlohmann::json::parse(bs.out)["value"] == 1.0);

  // Missing regime inputs are usage errors; impossible inputs are domain errors.
  CHECK(run_cli({"bounds", "--theorem", "pheromone", "--m", "5", "--k", "2"}).code == 1);
  CHECK(run_cli({"bounds", "--theorem", "beta-star", "--m", "4", "--k", "4",
                 "--eta-prime-min", "4", "--eta-1-max", "1"})
            .code == 2);
}

TEST_CASE("experiment subcommand generates inline and reports a verdict") {
  CliRun r = run_cli({"experiment", "--gen", "instance1", "--n", "4", "--r", "2",
                      "--mode", "construction_probability", "--beta", "auto",
                      "--trials", "600", "--seed", "3"});
  CHECK(r.code == 0);
  nlohmann::json reports = nlohmann::json::parse(r.out);
  REQUIRE(reports.is_array());
  REQUIRE(reports.size() == 1);
  CHECK(reports[0]["verdict"] == "bound respected");
  CHECK(reports[0]["bound_kind"] == "separated");
  CHECK(reports[0]["mode"] == "construction_probability");
}

TEST_CASE("experiment reads instance and sidecar files and writes CSV") {
  CHECK(run_cli({"gen", "instance1", "--n", "4", "--r", "2", "--seed", "2",
                 "--rand-max", "2", "--out", "cli_exp"})
            .code == 0);
  CliRun r = run_cli({"experiment", "cli_exp.hgr", "--meta", "cli_exp.json", "--mode",
                      "optimization_time", "--alpha", "0", "--beta", "auto", "--trials",
                      "50", "--max-iters", "10000", "--seed", "5", "--csv", "cli_exp_run"});
  CHECK(r.code == 0);
  nlohmann::json reports = nlohmann::json::parse(r.out);
  CHECK(reports[0]["verdict"] == "bound respected");

  std::ifstream csv("cli_exp_run.1.csv");
  REQUIRE(csv.good());
  std::string header;
  std::getline(csv, header);
  CHECK(header == "trial,seed,iterations,best_fitness,success");
  int rows = 0;
  for (std::string line; std::getline(csv, line);) {
    if (!line.empty()) {
      ++rows;
    }
  }
  CHECK(rows == 50);

  std::remove("cli_exp.hgr");
  std::remove("cli_exp.json");
  std::remove("cli_exp_run.1.csv");
}

TEST_CASE("experiment validates its instance sources") {
  CHECK(run_cli({"experiment", "--mode", "optimization_time"}).code == 1);  // no source
  TempFile tri("cli_both.hgr", kTriangle);
  CHECK(run_cli({"experiment", tri.path(), "--gen", "random", "--n", "4", "--m", "3",
                 "--mode", "optimization_time"})
            .code == 1);  // two sources
  CHECK(run_cli({"experiment", "--gen", "instance1", "--n", "4", "--mode",
                 "optimization_time"})
            .code == 1);  // missing --r
  // beta auto without planted metadata is a domain error.
  CHECK(run_cli({"experiment", tri.path(), "--mode", "optimization_time", "--beta",
                 "auto"})
            .code == 2);
}

TEST_CASE("experiment serial and parallel output bytes match") {
  std::vector<std::string> base{"experiment", "--gen", "instance1", "--n",    "4",
                                "--r",        "2",     "--mode",    "construction_probability",
                                "--trials",   "400",   "--seed",    "9"};
  CliRun parallel = run_cli(base);
  std::vector<std::string> serial_args = base;
  serial_args.push_back("--serial");
  CliRun serial = run_cli(serial_args);
  CHECK(parallel.code == 0);
  CHECK(serial.code == 0);
  CHECK(parallel.out == serial.out);
}

TEST_CASE("strict mode demands explicit seeds for randomized subcommands") {
  TempFile tri("cli_strict.hgr", kTriangle);
  CHECK(run_cli({"--strict", "solve", tri.path()}).code == 1);
  CHECK(run_cli({"--strict", "solve", tri.path(), "--seed", "4"}).code == 0);
  CHECK(run_cli({"--strict", "gen", "random", "--n", "3", "--m", "3"}).code == 1);
  CHECK(run_cli({"--strict", "oracle", tri.path()}).code == 0);  // oracle is seedless
}

TEST_CASE("gen random writes to stdout when no prefix is given") {
  CliRun r = run_cli({"gen", "random", "--n", "4", "--m", "5", "--seed", "8"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  Hypergraph h = read_hgr(in);
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 5);
  CHECK_FALSE(validate(h).has_value());
}
