#include <diracidx/report.hpp>

#include <catch2/catch.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

fs::path scratch_dir() {
  fs::path p = fs::temp_directory_path() / "diracidx_cli_tests";
  fs::create_directories(p);
  return p;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(DIRACIDX_CLI_PATH) + " " + args +
                    " >/dev/null 2>/dev/null";
  int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("config errors exit with status 2") {
  REQUIRE(run_cli("gamma --n 0") == 2);
  REQUIRE(run_cli("gamma --n 99") == 2);
  REQUIRE(run_cli("no-such-subcommand") == 2);
  REQUIRE(run_cli("") == 2);
  REQUIRE(run_cli("series --order 11") == 2);
  REQUIRE(run_cli("index-torus --q 40 --N 8") == 2);
  REQUIRE(run_cli("index-s2 --q 4 --l-max 5") == 2);
  REQUIRE(run_cli("index-torus --q 1 --wilson-mass 2.5") == 2);
}

TEST_CASE("single sphere run emits the expected record and exits 0") {
  fs::path out = scratch_dir() / "s2.json";
  REQUIRE(run_cli("index-s2 --q 1 --l-max 10 --format json --no-timestamp -o " +
                  out.string()) == 0);
  diracidx::ValidationReport rep =
      diracidx::ValidationReport::from_json(diracidx::Json::parse(slurp(out)));
  REQUIRE(rep.passed());
  const diracidx::CheckRecord* run = rep.find("s2/run");
  REQUIRE(run != nullptr);
  REQUIRE(run->payload.at("index") == 1);
  REQUIRE(run->payload.at("ker_dim") == 1);
  REQUIRE(run->payload.at("coker_dim") == 0);
  REQUIRE(rep.config().at("sv_rel_tol") == 1e-8);
}

TEST_CASE("gamma suite passes and echoes its configuration") {
  fs::path out = scratch_dir() / "gamma.json";
  REQUIRE(run_cli("gamma --n 8 --format json --no-timestamp -o " + out.string()) ==
          0);
  diracidx::ValidationReport rep =
      diracidx::ValidationReport::from_json(diracidx::Json::parse(slurp(out)));
  REQUIRE(rep.passed());
  REQUIRE(rep.config().at("n_max") == 8);
  REQUIRE(rep.config().contains("symbol_tol"));
  REQUIRE(rep.config().contains("seed"));
  REQUIRE_FALSE(rep.elapsed_ms.has_value());
}

TEST_CASE("fast subcommands are byte-deterministic under a fixed seed") {
  fs::path a = scratch_dir() / "clutch_a.json";
  fs::path b = scratch_dir() / "clutch_b.json";
  REQUIRE(run_cli("clutch --seed 42 --format json --no-timestamp -o " +
                  a.string()) == 0);
  REQUIRE(run_cli("clutch --seed 42 --format json --no-timestamp -o " +
                  b.string()) == 0);
  std::string sa = slurp(a), sb = slurp(b);
  REQUIRE_FALSE(sa.empty());
  REQUIRE(sa == sb);

  fs::path c = scratch_dir() / "series_a.json";
  fs::path d = scratch_dir() / "series_b.json";
  REQUIRE(run_cli("series --format json --no-timestamp -o " + c.string()) == 0);
  REQUIRE(run_cli("series --format json --no-timestamp -o " + d.string()) == 0);
  REQUIRE(slurp(c) == slurp(d));
}

TEST_CASE("text format renders a readable report") {
  fs::path out = scratch_dir() / "spinrep.txt";
  REQUIRE(run_cli("spinrep --r-max 2 --samples 20 --format text -o " +
                  out.string()) == 0);
  std::string text = slurp(out);
  REQUIRE(text.find("suite: spinrep") != std::string::npos);
  REQUIRE(text.find("PASS") != std::string::npos);
}

TEST_CASE("single runs can dump low-lying singular values as CSV") {
  fs::path csv = scratch_dir() / "sv.csv";
  fs::remove(csv);
  fs::path out = scratch_dir() / "torus_run.json";
  REQUIRE(run_cli("index-torus --q 1 --N 8 --format json --no-timestamp --sv-csv " +
                  csv.string() + " -o " + out.string()) == 0);
  std::string text = slurp(csv);
  REQUIRE(text.rfind("torus,q=1;N=8", 0) == 0);
  // one header-free row: model, parameters, then ascending singular values
  REQUIRE(std::count(text.begin(), text.end(), '\n') == 1);
}

TEST_CASE("output directory override via environment") {
  fs::path dir = scratch_dir() / "envdir";
  fs::create_directories(dir);
  std::string cmd = std::string("DIRACIDX_OUTPUT_DIR=") + dir.string() + " " +
                    DIRACIDX_CLI_PATH +
                    " series --format json --no-timestamp -o env.json "
                    ">/dev/null 2>/dev/null";
  REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  REQUIRE(fs::exists(dir / "env.json"));
}
