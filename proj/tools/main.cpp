// Command-line driver: every verification suite behind one subcommand each,
// JSON or text reports, reproducible under a fixed seed.

#include <CLI11.hpp>

#include <diracidx/suites.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <string>
#include <vector>

namespace {

using diracidx::ValidationReport;
namespace suites = diracidx::suites;

struct OutputOptions {
  std::string path;
  std::string format = "text";
  bool no_timestamp = false;
};

std::string now_iso8601() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("DIRACIDX_OUTPUT_DIR"))
      return std::filesystem::path(dir) / p;
  }
  return p;
}

int emit(ValidationReport rep, const OutputOptions& out, double elapsed_ms,
         std::uint64_t seed) {
  if (!rep.config().contains("seed")) rep.config()["seed"] = seed;
  if (!out.no_timestamp) {
    rep.elapsed_ms = elapsed_ms;
    rep.timestamp = now_iso8601();
  }
  std::string body = out.format == "json" ? rep.to_json().dump(2) + "\n"
                                          : rep.render_text();
  if (out.path.empty()) {
    std::cout << body;
  } else {
    std::filesystem::path p = resolve_output(out.path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open output file: " << p.string() << "\n";
      return 2;
    }
    f << body;
    std::cout << "report written to " << p.string() << "  ["
              << (rep.passed() ? "PASS" : "FAIL") << "]\n";
  }
  return rep.passed() ? 0 : 1;
}

int run_suite(const std::function<ValidationReport()>& fn,
              const OutputOptions& out, std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  ValidationReport rep = fn();
  auto t1 = std::chrono::steady_clock::now();
  return emit(std::move(rep), out,
              std::chrono::duration<double, std::milli>(t1 - t0).count(), seed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "diracidx: machine verification of Clifford algebra identities, "
      "characteristic-class series, and desk-scale index computations"};
  app.require_subcommand(1);

  std::uint64_t seed = 42;
  OutputOptions out;
  int jobs = 1;
  app.add_option("--seed", seed, "seed for randomized property checks");
  app.add_option("-o,--output", out.path,
                 "report file (stdout when omitted; relative paths resolve "
                 "against DIRACIDX_OUTPUT_DIR)");
  app.add_option("--format", out.format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--no-timestamp", out.no_timestamp,
               "omit timestamp and timing from the report");
  app.add_option("--jobs", jobs, "max concurrent suites for 'all'")
      ->check(CLI::Range(1, 64));

  // gamma
  auto* gamma = app.add_subcommand("gamma", "generator and symbol identities");
  suites::GammaConfig gamma_cfg;
  gamma->add_option("--n", gamma_cfg.n_max, "largest dimension to check")
      ->check(CLI::Range(1, diracidx::kGammaDimensionCap));
  gamma->add_option("--symbol-samples", gamma_cfg.symbol_samples,
                    "random covectors per dimension");

  // clifford
  auto* clifford = app.add_subcommand("clifford", "algebra products, exponentials, double cover");
  suites::CliffordConfig clifford_cfg;
  clifford->add_option("--theta-grid", clifford_cfg.theta_grid, "rotation angles checked");
  clifford->add_option("--pairs", clifford_cfg.random_pairs, "random group-element pairs");

  // spinrep
  auto* spinrep = app.add_subcommand("spinrep", "canonical lift and characters");
  suites::SpinRepConfig spinrep_cfg;
  spinrep->add_option("--r-max", spinrep_cfg.r_max, "largest half-dimension")
      ->check(CLI::Range(1, 4));
  spinrep->add_option("--samples", spinrep_cfg.samples, "random diagonal unitaries");

  // series
  auto* series = app.add_subcommand("series", "characteristic-class identities");
  suites::SeriesConfig series_cfg;
  series->add_option("--order", series_cfg.order, "truncation order")
      ->check(CLI::Range(3, 10));
  series->add_option("--r-max", series_cfg.r_max, "largest root count")
      ->check(CLI::Range(1, 3));

  // chern
  auto* chern = app.add_subcommand("chern", "sphere character quadrature");
  suites::ChernConfig chern_cfg;
  chern->add_option("--r-max", chern_cfg.r_max, "largest sphere half-dimension")
      ->check(CLI::Range(1, 2));
  chern->add_option("--polar-r1", chern_cfg.polar_r1, "polar nodes on the 2-sphere");
  chern->add_option("--azimuth-r1", chern_cfg.azimuth_r1, "azimuth nodes on the 2-sphere");
  chern->add_option("--polar-r2", chern_cfg.polar_r2, "polar nodes per angle on the 4-sphere");
  chern->add_option("--azimuth-r2", chern_cfg.azimuth_r2, "azimuth nodes on the 4-sphere");

  // index-s2
  auto* s2 = app.add_subcommand("index-s2", "twisted sphere operator index");
  suites::SphereIndexConfig s2_cfg;
  int s2_q = 0;
  double s2_lmax = 0.0;
  auto* s2_q_opt = s2->add_option("--q", s2_q, "single twist degree");
  auto* s2_l_opt = s2->add_option("--l-max", s2_lmax, "basis truncation for --q");
  s2->add_option("--q-min", s2_cfg.q_min, "sweep start");
  s2->add_option("--q-max", s2_cfg.q_max, "sweep end");
  s2->add_option("--sv-csv", s2_cfg.sv_csv_path,
                 "append low-lying singular values to this CSV (single runs)");
  s2->add_option("--sv-rel-tol", s2_cfg.sv_rel_tol,
                 "relative singular-value threshold for kernel detection");
  s2->add_option("--min-gap-ratio", s2_cfg.min_gap_ratio,
                 "required separation between kept and discarded values");

  // index-torus
  auto* torus = app.add_subcommand("index-torus", "lattice flux operator index");
  suites::TorusIndexConfig torus_cfg;
  int torus_q = 0, torus_N = 12;
  double torus_mass = 1.0;
  auto* torus_q_opt = torus->add_option("--q", torus_q, "single flux");
  auto* torus_N_opt = torus->add_option("--N", torus_N, "lattice size for --q");
  auto* torus_m_opt =
      torus->add_option("--wilson-mass", torus_mass, "kernel mass for --q");
  torus->add_option("--q-min", torus_cfg.q_min, "sweep start");
  torus->add_option("--q-max", torus_cfg.q_max, "sweep end");
  torus->add_option("--sv-csv", torus_cfg.sv_csv_path,
                    "append low-lying singular values to this CSV");
  torus->add_option("--sv-rel-tol", torus_cfg.sv_rel_tol,
                    "relative singular-value threshold for kernel detection");
  torus->add_option("--min-gap-ratio", torus_cfg.min_gap_ratio,
                    "required separation between kept and discarded values");

  // sharp
  auto* sharp_cmd = app.add_subcommand("sharp", "graded product operator checks");
  suites::SharpConfig sharp_cfg;
  sharp_cmd->add_option("--pairs", sharp_cfg.pairs, "random operator pairs");
  sharp_cmd->add_option("--max-dim", sharp_cfg.max_dim, "largest graded piece")
      ->check(CLI::Range(1, 8));

  // clutch
  auto* clutch = app.add_subcommand("clutch", "winding numbers and clutching identity");
  suites::ClutchConfig clutch_cfg;
  clutch->add_option("--equator-samples", clutch_cfg.equator_samples,
                     "equator grid for winding counts");
  clutch->add_option("--k-range", clutch_cfg.k_range, "scalar powers checked");
  clutch->add_option("--theta-samples", clutch_cfg.theta_samples,
                     "polar samples for the clutching identity");

  // all
  auto* all = app.add_subcommand("all", "every suite with its defaults");

  // global options (--seed, -o, --format, ...) may follow the subcommand
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gamma->parsed()) {
      gamma_cfg.seed = seed;
      return run_suite([&] { return suites::gamma_suite(gamma_cfg); }, out, seed);
    }
    if (clifford->parsed()) {
      clifford_cfg.seed = seed;
      return run_suite([&] { return suites::clifford_suite(clifford_cfg); }, out, seed);
    }
    if (spinrep->parsed()) {
      spinrep_cfg.seed = seed;
      return run_suite([&] { return suites::spinrep_suite(spinrep_cfg); }, out, seed);
    }
    if (series->parsed())
      return run_suite([&] { return suites::series_suite(series_cfg); }, out, seed);
    if (chern->parsed()) {
      chern_cfg.seed = seed;
      return run_suite([&] { return suites::chern_suite(chern_cfg); }, out, seed);
    }
    if (s2->parsed()) {
      if (*s2_q_opt) {
        s2_cfg.single_q = s2_q;
        if (*s2_l_opt) s2_cfg.single_l_max = s2_lmax;
      }
      return run_suite([&] { return suites::sphere_index_suite(s2_cfg); }, out, seed);
    }
    if (torus->parsed()) {
      if (*torus_q_opt) {
        torus_cfg.single_q = torus_q;
        if (*torus_N_opt) torus_cfg.single_N = torus_N;
        if (*torus_m_opt) torus_cfg.single_mass = torus_mass;
      }
      return run_suite([&] { return suites::torus_index_suite(torus_cfg); }, out, seed);
    }
    if (sharp_cmd->parsed()) {
      sharp_cfg.seed = seed;
      return run_suite([&] { return suites::sharp_suite(sharp_cfg); }, out, seed);
    }
    if (clutch->parsed())
      return run_suite([&] { return suites::clutch_suite(clutch_cfg); }, out, seed);
    if (all->parsed()) {
      suites::AllConfig cfg;
      cfg.seed = seed;
      cfg.apply_seed();
      auto t0 = std::chrono::steady_clock::now();
      ValidationReport rep;
      if (jobs <= 1) {
        rep = suites::all_suites(cfg);
      } else {
        // suites are independent; run them concurrently, merge in fixed order
        std::vector<std::function<ValidationReport()>> tasks = {
            [&] { return suites::gamma_suite(cfg.gamma); },
            [&] { return suites::clifford_suite(cfg.clifford); },
            [&] { return suites::spinrep_suite(cfg.spinrep); },
            [&] { return suites::series_suite(cfg.series); },
            [&] { return suites::chern_suite(cfg.chern); },
            [&] { return suites::sphere_index_suite(cfg.sphere); },
            [&] { return suites::torus_index_suite(cfg.torus); },
            [&] { return suites::sharp_suite(cfg.sharp); },
            [&] { return suites::clutch_suite(cfg.clutch); },
            [&] { return suites::consistency_suite(cfg.consistency); },
        };
        std::vector<ValidationReport> parts(tasks.size());
        for (size_t base = 0; base < tasks.size(); base += size_t(jobs)) {
          std::vector<std::future<ValidationReport>> batch;
          for (size_t i = base; i < std::min(tasks.size(), base + size_t(jobs)); ++i)
            batch.push_back(std::async(std::launch::async, tasks[i]));
          for (size_t i = 0; i < batch.size(); ++i)
            parts[base + i] = batch[i].get();
        }
        rep = ValidationReport::merge(parts, "all");
        rep.config()["seed"] = cfg.seed;
      }
      auto t1 = std::chrono::steady_clock::now();
      return emit(std::move(rep), out,
                  std::chrono::duration<double, std::milli>(t1 - t0).count(),
                  seed);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
