#pragma once

#include <diracidx/linalg.hpp>
#include <diracidx/report.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace diracidx {

// Dimension cap keeps the generator matrices at most 256 x 256.
inline constexpr int kGammaDimensionCap = 16;

// Generators of the complex Clifford matrix algebra in dimension n: n
// skew-adjoint 2^r x 2^r matrices with E_j^2 = -I and E_j E_k = -E_k E_j,
// r = floor(n/2). Every entry is exactly one of {0, +1, -1, +i, -i} and each
// generator has a single nonzero entry per row and column, so products and
// sums of these matrices are exact in double precision. Identity checks below
// therefore use equality, not tolerances.
//
// For even n the product i^r E_1...E_n equals diag(I, -I); that matrix grades
// the spinor space and every generator is block off-diagonal with respect to
// it. For odd n the product i^(r+1) E_1...E_n is the identity.
struct GammaSet {
  int n = 0;
  int r = 0;
  std::vector<CMatrix> generators;
  CMatrix grading;  // even n only; 0x0 otherwise

  int dim() const { return 1 << r; }
};

// Inductive construction. Start from the 1x1 matrix [-i]; stepping from odd n
// doubles the size with block swaps, stepping from even n appends a diagonal
// generator of the same size.
inline GammaSet build_gamma(int n) {
  if (n < 1) throw std::invalid_argument("build_gamma: dimension must be >= 1");
  if (n > kGammaDimensionCap)
    throw std::invalid_argument("build_gamma: dimension exceeds cap " +
                                std::to_string(kGammaDimensionCap));

  std::vector<CMatrix> gen;
  gen.push_back((CMatrix(1, 1) << Complex(0, -1)).finished());

  for (int have = 1; have < n; ++have) {
    if (have % 2 == 1) {
      const Eigen::Index d = gen[0].rows();
      std::vector<CMatrix> next;
      next.reserve(have + 1);
      for (const CMatrix& e : gen) {
        CMatrix t = CMatrix::Zero(2 * d, 2 * d);
        t.topRightCorner(d, d) = e;
        t.bottomLeftCorner(d, d) = e;
        next.push_back(std::move(t));
      }
      CMatrix t = CMatrix::Zero(2 * d, 2 * d);
      t.topRightCorner(d, d) = -CMatrix::Identity(d, d);
      t.bottomLeftCorner(d, d) = CMatrix::Identity(d, d);
      next.push_back(std::move(t));
      gen = std::move(next);
    } else {
      const Eigen::Index d = gen[0].rows();
      CMatrix t = CMatrix::Zero(d, d);
      for (Eigen::Index i = 0; i < d / 2; ++i) t(i, i) = Complex(0, -1);
      for (Eigen::Index i = d / 2; i < d; ++i) t(i, i) = Complex(0, 1);
      gen.push_back(std::move(t));
    }
  }

  GammaSet g;
  g.n = n;
  g.r = n / 2;
  g.generators = std::move(gen);
  if (n % 2 == 0) {
    CMatrix prod = CMatrix::Identity(g.dim(), g.dim());
    for (const CMatrix& e : g.generators) prod = prod * e;
    Complex ir(1, 0);
    for (int k = 0; k < g.r; ++k) ir *= Complex(0, 1);
    g.grading = ir * prod;
  }
  return g;
}

inline CMatrix clifford_action(const GammaSet& g, const RVector& xi) {
  if (xi.size() != g.n)
    throw std::invalid_argument("clifford_action: vector dimension mismatch");
  CMatrix out = CMatrix::Zero(g.dim(), g.dim());
  for (int j = 0; j < g.n; ++j) out += xi(j) * g.generators[j];
  return out;
}

namespace detail {

inline double entry_lattice_deviation(const CMatrix& m) {
  // distance of each entry to the nearest of {0, +-1, +-i}
  double worst = 0.0;
  static const Complex lattice[5] = {Complex(0, 0), Complex(1, 0),
                                     Complex(-1, 0), Complex(0, 1),
                                     Complex(0, -1)};
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (const Complex& l : lattice) best = std::min(best, std::abs(m(i, j) - l));
      worst = std::max(worst, best);
    }
  return worst;
}

}  // namespace detail

// Checks every defining identity of a GammaSet and reports the max residual
// per identity. Failures are reported, never thrown; residuals are exactly
// zero for build_gamma output.
inline ValidationReport verify_gamma(const GammaSet& g) {
  ValidationReport rep("gamma_identities");
  rep.config()["n"] = g.n;
  rep.config()["tolerance"] = 0.0;
  const std::string p = "gamma/n" + std::to_string(g.n) + "/";
  const int d = g.dim();
  const CMatrix id = CMatrix::Identity(d, d);

  double res = 0.0;
  for (const CMatrix& e : g.generators)
    res = std::max(res, max_abs_diff(e.adjoint(), CMatrix(-e)));
  rep.add(p + "skew_adjoint", "E_j* = -E_j for every generator", res == 0.0, res);

  res = 0.0;
  for (const CMatrix& e : g.generators)
    res = std::max(res, max_abs_diff(CMatrix(e * e), CMatrix(-id)));
  rep.add(p + "squares", "E_j^2 = -I for every generator", res == 0.0, res);

  res = 0.0;
  for (size_t j = 0; j < g.generators.size(); ++j)
    for (size_t k = j + 1; k < g.generators.size(); ++k) {
      CMatrix ac = g.generators[j] * g.generators[k] +
                   g.generators[k] * g.generators[j];
      res = std::max(res, max_abs(ac));
    }
  rep.add(p + "anticommutators", "E_j E_k + E_k E_j = 0 for j != k", res == 0.0,
          res);

  res = 0.0;
  for (const CMatrix& e : g.generators)
    res = std::max(res, detail::entry_lattice_deviation(e));
  rep.add(p + "entry_lattice", "entries lie exactly in {0, +-1, +-i}",
          res == 0.0, res);

  CMatrix prod = id;
  for (const CMatrix& e : g.generators) prod = prod * e;

  if (g.n % 2 == 0) {
    CMatrix expected = CMatrix::Zero(d, d);
    for (int i = 0; i < d / 2; ++i) expected(i, i) = Complex(1, 0);
    for (int i = d / 2; i < d; ++i) expected(i, i) = Complex(-1, 0);

    Complex ir(1, 0);
    for (int k = 0; k < g.r; ++k) ir *= Complex(0, 1);
    res = max_abs_diff(CMatrix(ir * prod), expected);
    res = std::max(res, max_abs_diff(g.grading, expected));
    rep.add(p + "volume_element", "i^r E_1...E_n = diag(I, -I)", res == 0.0, res);

    // each generator swaps the +/- blocks of the grading
    res = 0.0;
    for (const CMatrix& e : g.generators) {
      res = std::max(res, max_abs(CMatrix(e.topLeftCorner(d / 2, d / 2))));
      res = std::max(res, max_abs(CMatrix(e.bottomRightCorner(d / 2, d / 2))));
    }
    rep.add(p + "block_off_diagonal",
            "every generator is off-diagonal for the grading", res == 0.0, res);
  } else {
    Complex ir(1, 0);
    for (int k = 0; k < g.r + 1; ++k) ir *= Complex(0, 1);
    res = max_abs_diff(CMatrix(ir * prod), id);
    rep.add(p + "volume_element", "i^(r+1) E_1...E_n = I", res == 0.0, res);
  }

  return rep;
}

}  // namespace diracidx
