#pragma once

#include <diracidx/gamma.hpp>
#include <diracidx/linalg.hpp>
#include <diracidx/report.hpp>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace diracidx {

// The chiral block of the symbol sum_j i x_j E_j for an even gamma set: the
// grading is diag(I, -I), so the + -> - piece is the lower-left block. It is
// invertible exactly when x != 0, with sigma(x)* sigma(x) = |x|^2 I.
inline CMatrix dirac_symbol(const RVector& x, const GammaSet& g) {
  if (g.n % 2 != 0)
    throw std::invalid_argument("dirac_symbol: even gamma set required");
  if (x.size() != g.n)
    throw std::invalid_argument("dirac_symbol: vector dimension mismatch");
  const int h = g.dim() / 2;
  CMatrix full = Complex(0, 1) * clifford_action(g, x);
  return full.bottomLeftCorner(h, h);
}

class ClutchError : public std::runtime_error {
 public:
  explicit ClutchError(const std::string& what) : std::runtime_error(what) {}
};

// Clutching data over the equator circle of the 2-sphere: a rank-k bundle map
// sampled as an invertible k x k matrix loop. The loop is kept as a callable
// so undersampled windings can be refined instead of mis-counted.
class ClutchTriple {
 public:
  using Sigma = std::function<CMatrix(double)>;  // equator angle -> matrix

  ClutchTriple(int rank, Sigma sigma, std::string label, int grid = 256)
      : rank_(rank), sigma_(std::move(sigma)), label_(std::move(label)), grid_(grid) {
    if (rank_ < 1) throw std::invalid_argument("ClutchTriple: rank must be >= 1");
    if (grid_ < 8) throw std::invalid_argument("ClutchTriple: grid too coarse");
  }

  static ClutchTriple identity(int rank) {
    return ClutchTriple(
        rank, [rank](double) { return CMatrix::Identity(rank, rank); },
        "trivial rank " + std::to_string(rank));
  }

  // symbol of the flat 2d operator restricted to the unit circle
  static ClutchTriple dirac_symbol_triple() {
    GammaSet g = build_gamma(2);
    return ClutchTriple(
        1,
        [g](double phi) {
          RVector v(2);
          v << std::cos(phi), std::sin(phi);
          return dirac_symbol(v, g);
        },
        "dirac symbol");
  }

  // scalar loop (v1 + i v2)^k on a rank-1 triple
  static ClutchTriple scalar_power(int k) {
    return ClutchTriple(
        1,
        [k](double phi) {
          Complex z = std::polar(1.0, phi);
          CMatrix m(1, 1);
          m(0, 0) = std::pow(z, k);
          return m;
        },
        "scalar power " + std::to_string(k));
  }

  ClutchTriple conjugated() const {
    Sigma s = sigma_;
    return ClutchTriple(
        rank_, [s](double phi) { return CMatrix(s(phi).conjugate()); },
        label_ + " conjugate", grid_);
  }

  ClutchTriple direct_sum(const ClutchTriple& o) const {
    Sigma a = sigma_, b = o.sigma_;
    return ClutchTriple(
        rank_ + o.rank_,
        [a, b](double phi) { return matrix_direct_sum(a(phi), b(phi)); },
        label_ + " + " + o.label_, std::max(grid_, o.grid_));
  }

  ClutchTriple scaled_by_loop(std::function<Complex(double)> f,
                              const std::string& note) const {
    Sigma s = sigma_;
    return ClutchTriple(
        rank_, [s, f](double phi) { return CMatrix(f(phi) * s(phi)); },
        label_ + " " + note, grid_);
  }

  int rank() const { return rank_; }
  int grid() const { return grid_; }
  const std::string& label() const { return label_; }
  CMatrix sample(double phi) const { return sigma_(phi); }

 private:
  int rank_;
  Sigma sigma_;
  std::string label_;
  int grid_;
};

struct WindingResult {
  int c1 = 0;
  int samples = 0;
  int refinements = 0;
  double max_phase_step = 0.0;
  double integrality_defect = 0.0;  // distance of the raw winding to an integer
  double min_singular_value = 0.0;
};

// First Chern number of the clutched bundle on the 2-sphere by the argument
// principle on det(sigma): unwrap the phase around the equator, counted
// counterclockwise in the (x1, x2) chart. Phase steps of pi/2 or more mean
// the grid cannot certify the count; the grid is doubled, and only after
// max_refinements doublings is the triple rejected.
//
// Sign: clutching the flat symbol produces the bundle whose top Chern form
// integrates to -1 over the 2-sphere, while its determinant loop winds +1
// counterclockwise; hence c1 = -winding.
inline WindingResult chern_number_s2(const ClutchTriple& t,
                                     int max_refinements = 8) {
  int m = t.grid();
  for (int attempt = 0;; ++attempt) {
    std::vector<Complex> dets(m);
    double min_sv = std::numeric_limits<double>::infinity();
    for (int k = 0; k < m; ++k) {
      CMatrix s = t.sample(2.0 * std::numbers::pi * k / m);
      if (s.rows() != t.rank() || s.cols() != t.rank())
        throw ClutchError("chern_number_s2: sample has wrong shape");
      min_sv = std::min(min_sv, smallest_singular_value(s));
      dets[k] = Eigen::PartialPivLU<CMatrix>(s).determinant();
    }
    if (min_sv <= 1e-8)
      throw ClutchError("chern_number_s2: singular sample on the equator");

    double total = 0.0, max_step = 0.0;
    bool undersampled = false;
    for (int k = 0; k < m; ++k) {
      Complex ratio = dets[(k + 1) % m] / dets[k];
      double step = std::arg(ratio);
      max_step = std::max(max_step, std::abs(step));
      if (std::abs(step) >= std::numbers::pi / 2.0) {
        undersampled = true;
        break;
      }
      total += step;
    }
    if (undersampled) {
      if (attempt >= max_refinements)
        throw ClutchError(
            "chern_number_s2: equator undersampled after max refinements");
      m *= 2;
      continue;
    }

    double winding = total / (2.0 * std::numbers::pi);
    int w = int(std::lround(winding));
    double defect = std::abs(winding - w);
    if (defect > 1e-6)
      throw ClutchError("chern_number_s2: winding failed integrality check");
    WindingResult res;
    res.c1 = -w;
    res.samples = m;
    res.refinements = attempt;
    res.max_phase_step = max_step;
    res.integrality_defect = defect;
    res.min_singular_value = min_sv;
    return res;
  }
}

struct StableInvariants {
  int rank = 0;
  int c1 = 0;
};

// The complete stable invariant pair on the 2-sphere: two triples with equal
// rank (mod trivial summands) and c1 are stably equivalent, and both
// invariants add under direct sum.
inline StableInvariants stable_invariants(const ClutchTriple& t) {
  return {t.rank(), chern_number_s2(t).c1};
}

namespace detail {

// deterministic sample of unit vectors on S^{n-1}
inline std::vector<RVector> equator_points(int n, int count) {
  std::vector<RVector> pts;
  pts.reserve(count);
  if (n == 2) {
    for (int k = 0; k < count; ++k) {
      double phi = 2.0 * std::numbers::pi * k / count;
      RVector v(2);
      v << std::cos(phi), std::sin(phi);
      pts.push_back(v);
    }
    return pts;
  }
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> gauss;
  while (int(pts.size()) < count) {
    RVector v(n);
    for (int i = 0; i < n; ++i) v(i) = gauss(rng);
    double nr = v.norm();
    if (nr < 1e-3) continue;
    pts.push_back(v / nr);
  }
  return pts;
}

}  // namespace detail

// Checks the clutching description of the sphere spinor bundle on S^n,
// n in {2, 4}: with gammas E_1..E_{n+1} and polar coordinates
// x = (sin(theta) v, -cos(theta)) on the lower hemisphere, the unitaries
//   g(x) = cos(theta) + sin(theta) E_{n+1} c(v)
// conjugate a(x) = -cos(2 theta) i E_{n+1} + sin(2 theta) i c(v) to the
// constant -i E_{n+1}, equal the identity at theta = 0, and restrict on the
// equator to i c(v) as a map from the + spinors to the - spinors.
inline ValidationReport verify_thom_clutch(int n, int theta_samples = 32,
                                           int equator_samples = 32) {
  if (n != 2 && n != 4)
    throw std::invalid_argument("verify_thom_clutch: n must be 2 or 4");
  ValidationReport rep("thom_clutch");
  rep.config()["n"] = n;
  rep.config()["theta_samples"] = theta_samples;
  rep.config()["equator_samples"] = equator_samples;
  rep.config()["tolerance"] = 1e-10;
  const std::string p = "clutch/thom/n" + std::to_string(n) + "/";

  GammaSet g = build_gamma(n + 1);
  const int d = g.dim();
  const CMatrix& last = g.generators[n];
  const CMatrix id = CMatrix::Identity(d, d);

  // grading of the first-n generators equals i E_{n+1} by construction
  Complex ir(1, 0);
  for (int k = 0; k < n / 2; ++k) ir *= Complex(0, 1);
  CMatrix vol = id;
  for (int j = 0; j < n; ++j) vol = vol * g.generators[j];
  double res_grading = max_abs_diff(CMatrix(ir * vol), CMatrix(Complex(0, 1) * last));
  rep.add(p + "grading_is_iE", "i^r E_1..E_n equals i E_{n+1}",
          res_grading == 0.0, res_grading);

  auto cv = [&](const RVector& v) {
    CMatrix s = CMatrix::Zero(d, d);
    for (int j = 0; j < n; ++j) s += v(j) * g.generators[j];
    return s;
  };

  std::vector<RVector> pts = detail::equator_points(n, equator_samples);

  double worst_unitary = 0.0, worst_conj = 0.0, worst_pole = 0.0;
  for (int it = 0; it < theta_samples; ++it) {
    double theta = (std::numbers::pi / 2.0) * it / (theta_samples - 1);
    for (const RVector& v : pts) {
      CMatrix gv = std::cos(theta) * id + std::sin(theta) * (last * cv(v));
      worst_unitary = std::max(worst_unitary,
                               max_abs_diff(CMatrix(gv.adjoint() * gv), id));
      CMatrix a = -std::cos(2 * theta) * Complex(0, 1) * last +
                  std::sin(2 * theta) * Complex(0, 1) * cv(v);
      // conjugation identity in product form (no inverse needed)
      worst_conj = std::max(
          worst_conj,
          max_abs(CMatrix(gv * a - (Complex(0, -1) * last) * gv)));
      if (it == 0)
        worst_pole = std::max(worst_pole, max_abs_diff(gv, id));
    }
  }
  rep.add(p + "unitary", "g(x) is unitary at all samples", worst_unitary < 1e-10,
          worst_unitary);
  rep.add(p + "conjugation",
          "g(x) a(x) g(x)^{-1} equals -i E_{n+1} at all samples",
          worst_conj < 1e-10, worst_conj);
  rep.add(p + "pole", "g at the pole is the identity", worst_pole == 0.0,
          worst_pole);

  // equator: g(v) = E_{n+1} c(v) maps + spinors to - spinors and equals i c(v)
  double worst_offdiag = 0.0, worst_equals = 0.0;
  const int h = d / 2;
  for (const RVector& v : pts) {
    CMatrix gv = last * cv(v);
    worst_offdiag = std::max(worst_offdiag, max_abs(CMatrix(gv.topLeftCorner(h, h))));
    CMatrix diff = gv - Complex(0, 1) * cv(v);
    worst_equals = std::max(worst_equals, max_abs(CMatrix(diff.bottomLeftCorner(h, h))));
  }
  rep.add(p + "equator_maps_plus_to_minus",
          "equator clutching maps + spinors into - spinors",
          worst_offdiag < 1e-10, worst_offdiag);
  rep.add(p + "equator_equals_ic",
          "equator clutching equals i c(v) on + spinors", worst_equals < 1e-10,
          worst_equals);

  return rep;
}

}  // namespace diracidx
