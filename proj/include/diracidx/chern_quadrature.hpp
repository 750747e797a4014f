#pragma once

#include <diracidx/gamma.hpp>
#include <diracidx/linalg.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace diracidx {

struct SpherePoint {
  RVector t;

  explicit SpherePoint(RVector v) : t(std::move(v)) {
    if (std::abs(t.norm() - 1.0) > 1e-12)
      throw std::invalid_argument("SpherePoint: not on the unit sphere");
  }
};

struct QuadratureNode {
  RVector t;
  double weight;
};

namespace detail {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double p0 = 0, dp = 0;
    for (int it = 0; it < 100; ++it) {
      p0 = 1;
      double p1 = 0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
      }
      dp = n * (t * p0 - p1) / (t * t - 1);
      double dt = p0 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = t;
    w[i] = 2.0 / ((1 - t * t) * dp * dp);
  }
}

}  // namespace detail

// Area of the even sphere S^{2r}.
inline double sphere_area(int r) {
  int m = 2 * r;  // dimension of the sphere
  return 2.0 * std::pow(std::numbers::pi, (m + 1) / 2.0) /
         std::tgamma((m + 1) / 2.0);
}

// Product rule on S^{2r}: Gauss-Legendre in each of the 2r-1 polar angles
// (measure sin^k theta dtheta), uniform in the azimuth. Weights are positive
// and sum to the sphere area up to the polar-rule error.
struct QuadratureRule {
  int r = 0;
  int polar_count = 0;
  int azimuth_count = 0;
  std::vector<QuadratureNode> nodes;

  double total_weight() const {
    double s = 0.0;
    for (const auto& n : nodes) s += n.weight;
    return s;
  }

  static QuadratureRule product_rule(int r, int polar, int azimuth) {
    if (r < 1 || r > 3)
      throw std::invalid_argument("QuadratureRule: r must be in 1..3");
    if (polar < 1 || azimuth < 3)
      throw std::invalid_argument("QuadratureRule: node counts too small");
    QuadratureRule rule;
    rule.r = r;
    rule.polar_count = polar;
    rule.azimuth_count = azimuth;

    std::vector<double> gx, gw;
    detail::gauss_legendre(polar, gx, gw);

    // start from the azimuth circle, then wrap one polar angle per level
    std::vector<QuadratureNode> nodes;
    for (int a = 0; a < azimuth; ++a) {
      double phi = 2.0 * std::numbers::pi * a / azimuth;
      RVector p(2);
      p << std::cos(phi), std::sin(phi);
      nodes.push_back({p, 2.0 * std::numbers::pi / azimuth});
    }
    for (int level = 1; level <= 2 * r - 1; ++level) {
      std::vector<QuadratureNode> next;
      next.reserve(nodes.size() * polar);
      for (int i = 0; i < polar; ++i) {
        double th = std::numbers::pi * (gx[i] + 1.0) / 2.0;
        double wth = gw[i] * std::numbers::pi / 2.0;
        double s = std::sin(th), c = std::cos(th);
        double sk = std::pow(s, level);
        for (const auto& n : nodes) {
          RVector p(n.t.size() + 1);
          p.head(n.t.size()) = s * n.t;
          p(n.t.size()) = c;
          next.push_back({p, n.weight * wth * sk});
        }
      }
      nodes = std::move(next);
    }
    rule.nodes = std::move(nodes);
    return rule;
  }
};

// Projector field of the spinor bundle over S^{2r}: e(t) = (1 + i c(t))/2,
// a rank 2^(r-1) orthogonal projector for |t| = 1. dual picks the conjugate
// bundle: every matrix is replaced by its entrywise conjugate.
inline CMatrix spinor_projector(const RVector& t, const GammaSet& g,
                                bool dual = false) {
  if (g.n != t.size() || g.n % 2 == 0)
    throw std::invalid_argument("spinor_projector: need odd-dimensional gamma set matching t");
  if (std::abs(t.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("spinor_projector: t must be a unit vector");
  const int d = g.dim();
  CMatrix e = 0.5 * (CMatrix::Identity(d, d) + Complex(0, 1) * clifford_action(g, t));
  if (dual) return e.conjugate();
  return e;
}

// Oriented orthonormal tangent frame at t: Gram-Schmidt over coordinate axes,
// then a sign flip on the last vector so that (t, u_1, ..., u_2r) is
// positively oriented ("exterior normal first").
inline std::vector<RVector> tangent_frame(const RVector& t) {
  const int n = int(t.size());
  RMatrix b(n, n);
  b.col(0) = t / t.norm();
  int filled = 1;
  for (int axis = 0; axis < n && filled < n; ++axis) {
    RVector v = RVector::Zero(n);
    v(axis) = 1.0;
    for (int j = 0; j < filled; ++j) v -= b.col(j).dot(v) * b.col(j);
    if (v.norm() < 1e-6) continue;
    b.col(filled++) = v / v.norm();
  }
  if (filled < n) throw std::runtime_error("tangent_frame: degenerate basis");
  if (b.determinant() < 0) b.col(n - 1) = -b.col(n - 1);
  std::vector<RVector> frame;
  frame.reserve(n - 1);
  for (int j = 1; j < n; ++j) frame.push_back(b.col(j));
  return frame;
}

namespace detail {

inline int permutation_sign(const std::vector<int>& p) {
  int s = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

}  // namespace detail

// Value of the degree-2r component of the Chern character form
//   i^r / (r! (2 pi)^r) trace( e (de)^{2r} )
// on an oriented orthonormal tangent frame. The projector is affine in t, so
// de along a tangent direction u is exactly (i/2) c(u); the form is evaluated
// by antisymmetrizing the trace over all (2r)! slot orderings.
inline double chern_density(const RVector& t, const std::vector<RVector>& frame,
                            const GammaSet& g, bool dual = false) {
  const int n = g.n;
  if (n % 2 == 0) throw std::invalid_argument("chern_density: odd gamma set required");
  const int r = g.r;
  if (int(frame.size()) != 2 * r)
    throw std::invalid_argument("chern_density: frame must have 2r vectors");
  for (size_t i = 0; i < frame.size(); ++i) {
    if (std::abs(frame[i].dot(t)) > 1e-10 || std::abs(frame[i].norm() - 1.0) > 1e-10)
      throw std::invalid_argument("chern_density: frame not orthonormal tangent");
    for (size_t j = i + 1; j < frame.size(); ++j)
      if (std::abs(frame[i].dot(frame[j])) > 1e-10)
        throw std::invalid_argument("chern_density: frame not orthonormal tangent");
  }

  CMatrix e = spinor_projector(t, g, dual);
  std::vector<CMatrix> de;
  de.reserve(2 * r);
  for (const RVector& u : frame) {
    CMatrix m = Complex(0, 0.5) * clifford_action(g, u);
    de.push_back(dual ? m.conjugate() : m);
  }

  std::vector<int> idx(2 * r);
  for (int i = 0; i < 2 * r; ++i) idx[i] = i;
  Complex acc(0, 0);
  do {
    CMatrix prod = e;
    for (int i : idx) prod = prod * de[i];
    acc += double(detail::permutation_sign(idx)) * prod.trace();
  } while (std::next_permutation(idx.begin(), idx.end()));

  Complex pref = std::pow(Complex(0, 1), r) /
                 (std::tgamma(r + 1) * std::pow(2.0 * std::numbers::pi, r));
  return (pref * acc).real();
}

// Integral of the top Chern character form of the spinor bundle (dual=false)
// or of its conjugate (dual=true) over S^{2r}.
inline double integrate_chern(int r, const QuadratureRule& rule, bool dual,
                              bool allow_r3 = false) {
  if (rule.r != r) throw std::invalid_argument("integrate_chern: rule/r mismatch");
  if (r > 2 && !allow_r3)
    throw std::invalid_argument("integrate_chern: r > 2 requires allow_r3");
  GammaSet g = build_gamma(2 * r + 1);
  double acc = 0.0;
  for (const auto& node : rule.nodes)
    acc += node.weight * chern_density(node.t, tangent_frame(node.t), g, dual);
  return acc;
}

struct RefinementLevel {
  int polar = 0;
  int azimuth = 0;
  double value = 0.0;
  double residual = 0.0;  // |value - target|
};

struct RefinementTable {
  int r = 0;
  bool dual = false;
  double target = 0.0;
  std::vector<RefinementLevel> levels;

  bool monotone_decreasing() const {
    for (size_t i = 1; i < levels.size(); ++i)
      if (!(levels[i].residual < levels[i - 1].residual)) return false;
    return true;
  }
};

inline RefinementTable chern_refinement(int r, bool dual,
                                        const std::vector<int>& polar_levels,
                                        const std::vector<int>& azimuth_levels) {
  if (polar_levels.size() != azimuth_levels.size() || polar_levels.empty())
    throw std::invalid_argument("chern_refinement: level lists must match");
  RefinementTable table;
  table.r = r;
  table.dual = dual;
  table.target = dual ? 1.0 : ((r % 2 == 0) ? 1.0 : -1.0);
  for (size_t i = 0; i < polar_levels.size(); ++i) {
    auto rule = QuadratureRule::product_rule(r, polar_levels[i], azimuth_levels[i]);
    double v = integrate_chern(r, rule, dual);
    table.levels.push_back(
        {polar_levels[i], azimuth_levels[i], v, std::abs(v - table.target)});
  }
  return table;
}

}  // namespace diracidx
