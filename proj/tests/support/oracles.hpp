#pragma once

// Test-only oracles, independent of the library's computation paths:
//  - brute-force reordering for Clifford monomial products
//  - dense scaling-and-squaring matrix exponential
//  - rank by Gaussian row reduction
//  - dense polynomial arithmetic for series cross-checks

#include <diracidx/linalg.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

namespace oracles {

// Multiply two Clifford basis monomials given as ascending index sequences by
// literally bubble-sorting the concatenation: adjacent swaps of distinct
// generators flip the sign, adjacent equal generators cancel to -1.
inline std::pair<int, std::vector<int>> clifford_monomial_product(
    std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < a.size(); ++i) {
      if (a[i] == a[i + 1]) {
        a.erase(a.begin() + i, a.begin() + i + 2);
        sign = -sign;
        changed = true;
        break;
      }
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        sign = -sign;
        changed = true;
      }
    }
  }
  return {sign, a};
}

// Real matrix exponential by scaling and squaring with a Taylor core.
inline diracidx::RMatrix expm(const diracidx::RMatrix& a) {
  using diracidx::RMatrix;
  const int n = int(a.rows());
  double norm = 0.0;
  for (int i = 0; i < n; ++i) norm = std::max(norm, a.row(i).cwiseAbs().sum());
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.5) ++squarings;
  RMatrix x = a / std::pow(2.0, squarings);
  RMatrix sum = RMatrix::Identity(n, n);
  RMatrix term = RMatrix::Identity(n, n);
  for (int k = 1; k <= 64; ++k) {
    term = term * x / double(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

// Rank by Gaussian elimination with partial pivoting, threshold relative to
// the largest entry.
inline int rank_row_reduction(diracidx::CMatrix m, double rel_tol = 1e-10) {
  const int rows = int(m.rows()), cols = int(m.cols());
  if (rows == 0 || cols == 0) return 0;
  double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0;
  const double tol = rel_tol * scale;
  int rank = 0, row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = row;
    for (int i = row + 1; i < rows; ++i)
      if (std::abs(m(i, col)) > std::abs(m(pivot, col))) pivot = i;
    if (std::abs(m(pivot, col)) <= tol) continue;
    m.row(pivot).swap(m.row(row));
    for (int i = row + 1; i < rows; ++i)
      m.row(i) -= (m(i, col) / m(row, col)) * m.row(row);
    ++rank;
    ++row;
  }
  return rank;
}

// Dense truncated polynomial in a fixed number of variables over double,
// exponents stored directly. Deliberately structured unlike the library's
// series type (vector-of-terms with linear scans).
class DensePoly {
 public:
  DensePoly(int nvars, int order) : nvars_(nvars), order_(order) {}

  static DensePoly constant(int nvars, int order, double c) {
    DensePoly p(nvars, order);
    if (c != 0.0) p.terms_.push_back({std::vector<int>(nvars, 0), c});
    return p;
  }

  static DensePoly variable(int nvars, int order, int var) {
    DensePoly p(nvars, order);
    std::vector<int> e(nvars, 0);
    e[var] = 1;
    p.terms_.push_back({e, 1.0});
    return p;
  }

  double coefficient(const std::vector<int>& e) const {
    for (const auto& [ex, c] : terms_)
      if (ex == e) return c;
    return 0.0;
  }

  DensePoly plus(const DensePoly& o) const {
    DensePoly out = *this;
    for (const auto& [e, c] : o.terms_) out.bump(e, c);
    return out;
  }

  DensePoly times(const DensePoly& o) const {
    DensePoly out(nvars_, order_);
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) {
        std::vector<int> e(nvars_);
        int deg = 0;
        for (int i = 0; i < nvars_; ++i) {
          e[i] = ea[i] + eb[i];
          deg += e[i];
        }
        if (deg <= order_) out.bump(e, ca * cb);
      }
    return out;
  }

  DensePoly scaled(double s) const {
    DensePoly out = *this;
    for (auto& [e, c] : out.terms_) c *= s;
    return out;
  }

  // exp(c * x_var) as a truncated Taylor polynomial
  static DensePoly exp_var(int nvars, int order, int var, double c) {
    DensePoly out = constant(nvars, order, 1.0);
    double fact = 1.0;
    for (int k = 1; k <= order; ++k) {
      fact *= k;
      std::vector<int> e(nvars, 0);
      e[var] = k;
      out.bump(e, std::pow(c, k) / fact);
    }
    return out;
  }

  const std::vector<std::pair<std::vector<int>, double>>& terms() const {
    return terms_;
  }

 private:
  void bump(const std::vector<int>& e, double c) {
    for (auto& [ex, cx] : terms_)
      if (ex == e) {
        cx += c;
        return;
      }
    if (c != 0.0) terms_.push_back({e, c});
  }

  int nvars_;
  int order_;
  std::vector<std::pair<std::vector<int>, double>> terms_;
};

}  // namespace oracles
