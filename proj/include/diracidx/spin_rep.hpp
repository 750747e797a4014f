#pragma once

#include <diracidx/clifford.hpp>
#include <diracidx/gamma.hpp>
#include <diracidx/report.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace diracidx {

// Graded spinor space for even ambient dimension 2r. The grading operator is
// diagonal by construction, so the +/- eigenspaces are spanned by the first
// and last 2^(r-1) coordinate vectors.
struct SpinorSpace {
  int r = 0;
  int dim = 0;
  int plus_dim = 0;
  int minus_dim = 0;
  CMatrix grading;

  static SpinorSpace from_gamma(const GammaSet& g) {
    if (g.n % 2 != 0)
      throw std::invalid_argument("SpinorSpace: even ambient dimension required");
    SpinorSpace s;
    s.r = g.r;
    s.dim = g.dim();
    s.grading = g.grading;
    for (int i = 0; i < s.dim; ++i) {
      Complex d = s.grading(i, i);
      if (d == Complex(1, 0))
        ++s.plus_dim;
      else if (d == Complex(-1, 0))
        ++s.minus_dim;
      else
        throw std::domain_error("SpinorSpace: grading not diagonal +-1");
    }
    return s;
  }
};

struct DiagonalUnitary {
  std::vector<Complex> lambdas;

  explicit DiagonalUnitary(std::vector<Complex> l) : lambdas(std::move(l)) {
    for (const Complex& v : lambdas)
      if (std::abs(std::abs(v) - 1.0) > 1e-12)
        throw std::invalid_argument("DiagonalUnitary: entries must have unit modulus");
  }

  static DiagonalUnitary from_angles(const std::vector<double>& theta) {
    std::vector<Complex> l;
    l.reserve(theta.size());
    for (double t : theta) l.push_back(std::polar(1.0, t));
    return DiagonalUnitary(std::move(l));
  }

  static DiagonalUnitary identity(int r) {
    return DiagonalUnitary(std::vector<Complex>(r, Complex(1, 0)));
  }

  static DiagonalUnitary random(int r, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    std::vector<double> th(r);
    for (double& t : th) t = u(rng);
    return from_angles(th);
  }

  int r() const { return int(lambdas.size()); }

  DiagonalUnitary times(const DiagonalUnitary& o) const {
    if (r() != o.r())
      throw std::invalid_argument("DiagonalUnitary: size mismatch");
    std::vector<Complex> l(lambdas);
    for (int i = 0; i < r(); ++i) l[i] *= o.lambdas[i];
    return DiagonalUnitary(std::move(l));
  }

  Complex det() const {
    Complex d(1, 0);
    for (const Complex& v : lambdas) d *= v;
    return d;
  }
};

// Matrix image of a Clifford element under e_j -> E_j. An algebra isomorphism
// onto the full matrix algebra for even n; for odd n still a representation,
// just not injective.
inline CMatrix spin_matrix(const CliffordElement& a, const GammaSet& g) {
  if (a.ambient() != g.n)
    throw std::invalid_argument("spin_matrix: ambient dimension mismatch");
  const int d = g.dim();
  CMatrix out = CMatrix::Zero(d, d);
  for (const auto& [mask, c] : a.terms()) {
    CMatrix prod = CMatrix::Identity(d, d);
    for (int j = 0; j < g.n; ++j)
      if (mask & (CliffordElement::Monomial(1) << j)) prod = prod * g.generators[j];
    out += c * prod;
  }
  return out;
}

// Canonical lift of a diagonal unitary diag(lambda_1..lambda_r) into the even
// complexified Clifford algebra on 2r generators:
//   prod_j ( (1+lambda_j)/2 + (1-lambda_j)/2 * i e_{2j-1} e_{2j} ).
// Its conjugation action on R^{2r} is the block rotation by the phases under
// the identification z_j = x_{2j-1} + i x_{2j}, and the scalar part of
// g * reversal(g) recovers det(T), the square of the circle factor.
inline CliffordElement unitary_lift(const DiagonalUnitary& T) {
  const int r = T.r();
  if (r < 1) throw std::invalid_argument("unitary_lift: empty diagonal");
  const int n = 2 * r;
  CliffordElement out = CliffordElement::one(n);
  for (int j = 1; j <= r; ++j) {
    Complex lam = T.lambdas[j - 1];
    CliffordElement factor =
        CliffordElement::monomial(n, 0, 0.5 * (Complex(1, 0) + lam));
    CliffordElement::Monomial pair =
        (CliffordElement::Monomial(1) << (2 * j - 2)) |
        (CliffordElement::Monomial(1) << (2 * j - 1));
    factor += CliffordElement::monomial(
        n, pair, Complex(0, 1) * (0.5 * (Complex(1, 0) - lam)));
    out = out * factor;
  }
  return out;
}

// det(T) recovered from the lift: scalar part of g * reversal(g).
inline Complex lift_circle_square(const CliffordElement& g) {
  return (g * g.reversal()).scalar_part();
}

inline Complex character_spinor(const DiagonalUnitary& T) {
  GammaSet g = build_gamma(2 * T.r());
  return spin_matrix(unitary_lift(T), g).trace();
}

inline Complex super_character_spinor(const DiagonalUnitary& T) {
  GammaSet g = build_gamma(2 * T.r());
  return (g.grading * spin_matrix(unitary_lift(T), g)).trace();
}

// Rotation of R^{2r} induced by diag(lambda_1..lambda_r) under the fixed
// identification (z_1..z_r) -> (x_1, y_1, ..., x_r, y_r).
inline RMatrix rotation_from_diagonal_unitary(const DiagonalUnitary& T) {
  const int r = T.r();
  RMatrix rot = RMatrix::Zero(2 * r, 2 * r);
  for (int j = 0; j < r; ++j) {
    double c = T.lambdas[j].real(), s = T.lambdas[j].imag();
    rot(2 * j, 2 * j) = c;
    rot(2 * j, 2 * j + 1) = -s;
    rot(2 * j + 1, 2 * j) = s;
    rot(2 * j + 1, 2 * j + 1) = c;
  }
  return rot;
}

// Verifies that the lift of -I is the grading operator, that lift images
// commute with the grading, and that trace / supertrace against the grading
// reproduce prod(1 + lambda_j) and prod(1 - lambda_j).
inline ValidationReport grading_check(int r, int samples = 32,
                                      std::uint64_t seed = 42) {
  if (r < 1) throw std::invalid_argument("grading_check: r must be >= 1");
  ValidationReport rep("grading_check");
  rep.config()["r"] = r;
  rep.config()["samples"] = samples;
  rep.config()["seed"] = seed;
  rep.config()["tolerance"] = 1e-10;
  const std::string p = "spinrep/r" + std::to_string(r) + "/";

  GammaSet g = build_gamma(2 * r);

  CliffordElement vol = CliffordElement::one(2 * r);
  for (int j = 1; j <= r; ++j) {
    CliffordElement::Monomial pair =
        (CliffordElement::Monomial(1) << (2 * j - 2)) |
        (CliffordElement::Monomial(1) << (2 * j - 1));
    vol = vol * CliffordElement::monomial(2 * r, pair, Complex(0, 1));
  }
  double res = max_abs_diff(spin_matrix(vol, g), g.grading);
  rep.add(p + "volume_is_grading",
          "image of prod_j i e_{2j-1} e_{2j} equals the grading operator",
          res == 0.0, res);

  std::mt19937_64 rng(seed);
  double worst_comm = 0.0, worst_tr = 0.0, worst_str = 0.0;
  for (int s = 0; s < samples; ++s) {
    DiagonalUnitary T = DiagonalUnitary::random(r, rng);
    CMatrix img = spin_matrix(unitary_lift(T), g);
    worst_comm = std::max(worst_comm,
                          max_abs(CMatrix(img * g.grading - g.grading * img)));
    Complex expect_tr(1, 0), expect_str(1, 0);
    for (const Complex& lam : T.lambdas) {
      expect_tr *= (Complex(1, 0) + lam);
      expect_str *= (Complex(1, 0) - lam);
    }
    worst_tr = std::max(worst_tr, std::abs(img.trace() - expect_tr));
    worst_str = std::max(
        worst_str, std::abs((g.grading * img).trace() - expect_str));
  }
  rep.add(p + "commutes_with_grading",
          "lift images commute with the grading operator", worst_comm < 1e-10,
          worst_comm);
  rep.add(p + "character", "trace of the lift equals prod(1 + lambda_j)",
          worst_tr < 1e-10, worst_tr);
  rep.add(p + "super_character",
          "supertrace of the lift equals prod(1 - lambda_j)", worst_str < 1e-10,
          worst_str);

  SpinorSpace sp = SpinorSpace::from_gamma(g);
  bool dims_ok = sp.plus_dim == (1 << (r - 1)) && sp.minus_dim == (1 << (r - 1));
  rep.add(p + "eigenspace_dims",
          "grading +/- eigenspaces each have dimension 2^(r-1)", dims_ok,
          dims_ok ? 0.0 : 1.0);

  return rep;
}

}  // namespace diracidx
