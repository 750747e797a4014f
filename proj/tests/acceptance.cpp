// Acceptance gate: runs every verification suite at its pinned configuration
// and prints one pass/fail line per criterion. Exits nonzero if any criterion
// fails. Criterion 12 runs the installed CLI twice and compares report bytes.

#include <diracidx/suites.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using diracidx::CheckRecord;
using diracidx::CheckStatus;
using diracidx::ValidationReport;
namespace suites = diracidx::suites;

bool g_all_ok = true;

void criterion(int k, const std::string& title, bool ok,
               const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", k,
              title.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  g_all_ok = g_all_ok && ok;
}

bool all_pass_with_prefix(const ValidationReport& rep, const std::string& prefix,
                          int* counted = nullptr) {
  bool ok = true;
  int n = 0;
  for (const CheckRecord& c : rep.checks())
    if (c.id.rfind(prefix, 0) == 0) {
      ++n;
      ok = ok && c.status == CheckStatus::pass;
    }
  if (counted) *counted = n;
  return ok && n > 0;
}

bool check_passes(const ValidationReport& rep, const std::string& id) {
  const CheckRecord* c = rep.find(id);
  return c != nullptr && c->status == CheckStatus::pass;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

int main() {
  std::printf("acceptance suite (seeded, default configurations)\n");

  // 1. generator identities, exact, n = 1..12, plus the tabulated matrices
  {
    suites::GammaConfig cfg;
    ValidationReport rep = suites::gamma_suite(cfg);
    bool ids = true;
    for (int n = 1; n <= 12; ++n)
      ids = ids && all_pass_with_prefix(rep, "gamma/n" + std::to_string(n) + "/");
    bool zero_residuals = true;
    for (const CheckRecord& c : rep.checks())
      if (c.id.rfind("gamma/n", 0) == 0 && c.residual)
        zero_residuals = zero_residuals && *c.residual == 0.0;
    criterion(1, "generator identities exact for n = 1..12, tabulated matrices match",
              ids && zero_residuals && check_passes(rep, "gamma/explicit_low_dim"));

    // 2. squared symbol identity on random covectors, n in {2, 4, 6}
    bool symbol = check_passes(rep, "gamma/symbol/n2") &&
                  check_passes(rep, "gamma/symbol/n4") &&
                  check_passes(rep, "gamma/symbol/n6");
    criterion(2, "squared symbol equals -|xi|^2 I (100 covectors, n = 2, 4, 6)",
              symbol);
  }

  // 3. double cover of the rotation group
  {
    ValidationReport rep = suites::clifford_suite();
    criterion(3, "double cover: rotation by theta with exp(pi e1 e2) = -1 acting trivially",
              check_passes(rep, "clifford/double_cover_rotation") &&
                  check_passes(rep, "clifford/double_cover_kernel"));
  }

  // 4. canonical lift and characters
  {
    ValidationReport rep = suites::spinrep_suite();
    bool ok = true;
    for (int r = 1; r <= 3; ++r) {
      std::string p = "spinrep/lift/r" + std::to_string(r) + "/";
      ok = ok && check_passes(rep, p + "closed_form") &&
           check_passes(rep, p + "character") &&
           check_passes(rep, p + "super_character") &&
           check_passes(rep, p + "minus_one_to_grading");
    }
    criterion(4, "lift closed form, characters prod(1 +- lambda), lift(-I) = grading",
              ok);
  }

  // 5. sphere quadrature of the character form
  {
    ValidationReport rep = suites::chern_suite();
    bool ok = check_passes(rep, "chern/r1/integral_spinor") &&
              check_passes(rep, "chern/r1/integral_dual") &&
              check_passes(rep, "chern/r2/integral_dual") &&
              check_passes(rep, "chern/r1/refinement_monotone") &&
              check_passes(rep, "chern/r2/refinement_monotone");
    criterion(5, "sphere integrals -1/+1 (r=1, 1e-8) and +1 (r=2, 1e-6), monotone refinement",
              ok);
  }

  // 6. series identities in exact arithmetic
  {
    ValidationReport rep = suites::series_suite();
    bool ok = true;
    for (int r = 1; r <= 3; ++r)
      ok = ok && all_pass_with_prefix(rep, "series/kappa/r" + std::to_string(r));
    ok = ok && all_pass_with_prefix(rep, "series/todd_mult/");
    for (int r = 1; r <= 3; ++r)
      ok = ok && check_passes(rep, "series/t_leading/r" + std::to_string(r));
    criterion(6, "Todd multiplicativity, kappa identity, t-class leading term (order 6, exact)",
              ok);
  }

  ValidationReport s2 = suites::sphere_index_suite();
  {
    bool ok = check_passes(s2, "s2/bott_kernel");
    for (int q = -3; q <= 3; ++q)
      ok = ok && check_passes(s2, "s2/index/q" + std::to_string(q));
    criterion(7, "sphere index equals q for q in -3..3, stable in l_max; q=1 has (ker, coker) = (1, 0)",
              ok);
  }

  ValidationReport torus = suites::torus_index_suite();
  {
    bool ok = true;
    for (int q = -3; q <= 3; ++q)
      ok = ok && check_passes(torus, "torus/index/q" + std::to_string(q)) &&
           check_passes(torus, "torus/gap/q" + std::to_string(q));
    criterion(8, "lattice index equals q for q in -3..3, N in {12,16,20}, mass in {0.5,1.0,1.5}, gap > 1e3",
              ok);
  }

  // 9. graded product operator
  {
    ValidationReport rep = suites::sharp_suite();
    bool ok = check_passes(rep, "sharp/multiplicativity") &&
              check_passes(rep, "sharp/kernel_identification") &&
              check_passes(rep, "sharp/adjoint_identity");
    const CheckRecord* adj = rep.find("sharp/adjoint_identity");
    bool discrepancy_recorded =
        adj && !adj->payload.is_null() && adj->payload.contains("literal_residual");
    criterion(9, "sharp product: 200-pair multiplicativity, kernel identification, adjoint identity recorded",
              ok && discrepancy_recorded);
  }

  // 10. clutching and winding
  {
    ValidationReport rep = suites::clutch_suite();
    bool ok = check_passes(rep, "clutch/dirac_symbol") &&
              check_passes(rep, "clutch/dirac_symbol_dual");
    for (int k = -4; k <= 4; ++k)
      ok = ok && check_passes(rep, "clutch/scalar_k" + std::to_string(k));
    ok = ok && all_pass_with_prefix(rep, "clutch/thom/n2/") &&
         all_pass_with_prefix(rep, "clutch/thom/n4/");
    criterion(10, "symbol winds to -1, dual to +1, scalar powers to -k, clutching identity residual < 1e-10",
              ok);
  }

  // 11. the index formula assembled across modules
  {
    ValidationReport rep = suites::consistency_suite();
    bool ok = check_passes(rep, "consistency/bott");
    for (int q = -3; q <= 3; ++q)
      ok = ok && check_passes(rep, "consistency/q" + std::to_string(q));
    criterion(11, "analytic index (sphere, torus) equals the ch-number of the twist, as integers",
              ok);
  }

  // 12. byte-identical reports from two identical CLI invocations
  {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "diracidx_acceptance";
    fs::create_directories(dir);
    fs::path a = dir / "all_a.json";
    fs::path b = dir / "all_b.json";
    std::string base = std::string(DIRACIDX_CLI_PATH) +
                       " all --seed 42 --no-timestamp --format json -o ";
    int ra = std::system((base + a.string() + " >/dev/null 2>&1").c_str());
    int rb = std::system((base + b.string() + " >/dev/null 2>&1").c_str());
    std::string sa = slurp(a), sb = slurp(b);
    bool ok = WEXITSTATUS(ra) == 0 && WEXITSTATUS(rb) == 0 && !sa.empty() &&
              sa == sb;
    criterion(12, "'all --seed 42' produces byte-identical reports across two runs",
              ok, "bytes " + std::to_string(sa.size()));
  }

  std::printf("%s\n", g_all_ok ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL");
  return g_all_ok ? 0 : 1;
}
