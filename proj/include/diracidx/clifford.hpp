#pragma once

#include <diracidx/linalg.hpp>

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace diracidx {

// Element of the complexified Clifford algebra on n anticommuting generators
// with e_i^2 = -1. Coefficients are indexed by basis monomials e_{i1}...e_{ip},
// i1 < ... < ip, encoded as bitmasks (bit j set = generator j+1 present, the
// empty mask is the unit). Exact zero coefficients are dropped so the term map
// is canonical.
class CliffordElement {
 public:
  using Monomial = std::uint32_t;

  explicit CliffordElement(int n) : n_(check_dim(n)) {}

  static CliffordElement zero(int n) { return CliffordElement(n); }

  static CliffordElement one(int n) { return monomial(n, 0, Complex(1, 0)); }

  // j is 1-based, matching the generator labels e_1..e_n.
  static CliffordElement generator(int n, int j) {
    if (j < 1 || j > n)
      throw std::invalid_argument("CliffordElement: generator index out of range");
    return monomial(n, Monomial(1) << (j - 1), Complex(1, 0));
  }

  static CliffordElement monomial(int n, Monomial m, Complex c) {
    CliffordElement e(n);
    if (m >= (Monomial(1) << n))
      throw std::invalid_argument("CliffordElement: monomial outside ambient algebra");
    if (c != Complex(0, 0)) e.terms_[m] = c;
    return e;
  }

  int ambient() const { return n_; }
  const std::map<Monomial, Complex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Complex coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Complex(0, 0) : it->second;
  }

  Complex scalar_part() const { return coefficient(0); }

  double l1_norm() const {
    double s = 0.0;
    for (const auto& [m, c] : terms_) s += std::abs(c);
    return s;
  }

  // true when every monomial has exactly p generators (the zero element
  // is supported on every degree)
  bool supported_on_degree(int p) const {
    for (const auto& [m, c] : terms_)
      if (std::popcount(m) != p) return false;
    return true;
  }

  CliffordElement degree_part(int p) const {
    CliffordElement out(n_);
    for (const auto& [m, c] : terms_)
      if (std::popcount(m) == p) out.terms_[m] = c;
    return out;
  }

  // Reversal anti-automorphism: e_{i1}...e_{ip} -> e_{ip}...e_{i1}, i.e. a
  // sign (-1)^(p(p-1)/2) per monomial of degree p.
  CliffordElement reversal() const {
    CliffordElement out(n_);
    for (const auto& [m, c] : terms_) {
      int p = std::popcount(m);
      int sign = ((p * (p - 1) / 2) % 2 == 0) ? 1 : -1;
      out.terms_[m] = double(sign) * c;
    }
    return out;
  }

  CliffordElement conjugate_coefficients() const {
    CliffordElement out(n_);
    for (const auto& [m, c] : terms_) out.terms_[m] = std::conj(c);
    return out;
  }

  CliffordElement& operator+=(const CliffordElement& o) {
    require_same_ambient(o);
    for (const auto& [m, c] : o.terms_) {
      Complex v = coefficient(m) + c;
      if (v == Complex(0, 0))
        terms_.erase(m);
      else
        terms_[m] = v;
    }
    return *this;
  }

  CliffordElement& operator-=(const CliffordElement& o) { return *this += -o; }

  CliffordElement operator-() const {
    CliffordElement out(n_);
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
  }

  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) {
    a += b;
    return a;
  }

  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) {
    a -= b;
    return a;
  }

  friend CliffordElement operator*(const Complex& s, const CliffordElement& a) {
    CliffordElement out(a.n_);
    if (s == Complex(0, 0)) return out;
    for (const auto& [m, c] : a.terms_) out.terms_[m] = s * c;
    return out;
  }

  friend CliffordElement operator*(const CliffordElement& a, const Complex& s) {
    return s * a;
  }

  // Sign of the basis product e_A e_B = sign * e_{A xor B}: one transposition
  // per pair (i in A, j in B) with i > j, one factor -1 per shared generator.
  static int monomial_product_sign(Monomial a, Monomial b) {
    int swaps = 0;
    Monomial bb = b;
    while (bb) {
      int j = std::countr_zero(bb);
      bb &= bb - 1;
      swaps += std::popcount(a >> (j + 1));
    }
    swaps += std::popcount(a & b);
    return (swaps % 2 == 0) ? 1 : -1;
  }

  friend CliffordElement operator*(const CliffordElement& a,
                                   const CliffordElement& b) {
    a.require_same_ambient(b);
    CliffordElement out(a.n_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma ^ mb;
        Complex v = out.coefficient(m) +
                    double(monomial_product_sign(ma, mb)) * ca * cb;
        if (v == Complex(0, 0))
          out.terms_.erase(m);
        else
          out.terms_[m] = v;
      }
    return out;
  }

  double max_coeff_diff(const CliffordElement& o) const {
    require_same_ambient(o);
    double worst = 0.0;
    for (const auto& [m, c] : terms_)
      worst = std::max(worst, std::abs(c - o.coefficient(m)));
    for (const auto& [m, c] : o.terms_)
      worst = std::max(worst, std::abs(c - coefficient(m)));
    return worst;
  }

 private:
  static int check_dim(int n) {
    if (n < 1 || n > 31)
      throw std::invalid_argument("CliffordElement: ambient dimension out of range");
    return n;
  }

  void require_same_ambient(const CliffordElement& o) const {
    if (n_ != o.n_)
      throw std::invalid_argument("CliffordElement: ambient dimension mismatch");
  }

  int n_;
  std::map<Monomial, Complex> terms_;
};

inline CliffordElement clifford_mul(const CliffordElement& a,
                                    const CliffordElement& b) {
  return a * b;
}

inline CliffordElement commutator(const CliffordElement& a,
                                  const CliffordElement& b) {
  return a * b - b * a;
}

// Truncated exponential of a degree-2 element. The l1 coefficient norm
// dominates the operator norm of the matrix image (every basis monomial maps
// to a unitary), so the Taylor tail bound n^{k+1}/(k+1)! e^n < tail_tol gives
// an operator-norm bound on the truncation error. Arguments are scaled into
// l1 norm <= 1/2 and the result squared back, which keeps every Taylor term
// below 1 and rules out cancellation between large terms.
inline CliffordElement exp_lambda2(const CliffordElement& alpha,
                                   double tail_tol = 1e-14) {
  if (!alpha.supported_on_degree(2))
    throw std::invalid_argument("exp_lambda2: element not supported on degree 2");
  const int n = alpha.ambient();
  const double full_norm = alpha.l1_norm();
  int squarings = 0;
  while (full_norm / std::pow(2.0, squarings) > 0.5) ++squarings;
  CliffordElement scaled = alpha * Complex(std::pow(0.5, squarings), 0.0);

  const double na = scaled.l1_norm();
  CliffordElement sum = CliffordElement::one(n);
  CliffordElement term = CliffordElement::one(n);
  double term_bound = 1.0;
  const double grow = std::exp(na);
  for (int k = 1; k <= 64; ++k) {
    term = term * scaled * Complex(1.0 / k, 0.0);
    sum += term;
    term_bound *= na / k;
    if (term_bound * grow < tail_tol) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

// Left-regular representation of g on the 2^n coefficient space; used to
// invert elements without reference to any matrix representation (the spin
// image is not faithful in odd dimensions).
inline CliffordElement clifford_inverse(const CliffordElement& g) {
  const int n = g.ambient();
  if (n > 10)
    throw std::invalid_argument(
        "clifford_inverse: left-regular solve capped at ambient dimension 10");
  const int dim = 1 << n;
  CMatrix L = CMatrix::Zero(dim, dim);
  for (int t = 0; t < dim; ++t) {
    CliffordElement col =
        g * CliffordElement::monomial(n, CliffordElement::Monomial(t), 1.0);
    for (const auto& [m, c] : col.terms()) L(int(m), t) = c;
  }
  Eigen::FullPivLU<CMatrix> lu(L);
  if (!lu.isInvertible())
    throw std::domain_error("clifford_inverse: element is not invertible");
  CVector e0 = CVector::Zero(dim);
  e0(0) = Complex(1, 0);
  CVector x = lu.solve(e0);
  CliffordElement out = CliffordElement::zero(n);
  for (int m = 0; m < dim; ++m)
    if (x(m) != Complex(0, 0))
      out += CliffordElement::monomial(n, CliffordElement::Monomial(m), x(m));
  return out;
}

struct VectorRepResult {
  RVector vec;      // degree-1 coefficients of g v g^{-1}, real parts
  double residual;  // leakage outside real Lambda^1 plus inversion defect
};

// Conjugation action v -> g v g^{-1} restricted to Lambda^1. Group membership
// is not decidable here, so the off-Lambda^1 leakage is measured and reported
// instead of assumed away.
inline VectorRepResult vector_rep(const CliffordElement& g, const RVector& v) {
  const int n = g.ambient();
  if (v.size() != n)
    throw std::invalid_argument("vector_rep: vector dimension mismatch");
  CliffordElement vec = CliffordElement::zero(n);
  for (int j = 0; j < n; ++j)
    vec += CliffordElement::generator(n, j + 1) * Complex(v(j), 0.0);

  CliffordElement ginv = clifford_inverse(g);
  CliffordElement conj = g * vec * ginv;

  double residual =
      (g * ginv - CliffordElement::one(n)).l1_norm();  // inversion defect
  RVector out(n);
  for (int j = 0; j < n; ++j) {
    Complex c = conj.coefficient(CliffordElement::Monomial(1) << j);
    out(j) = c.real();
    residual = std::max(residual, std::abs(c.imag()));
  }
  for (const auto& [m, c] : conj.terms())
    if (std::popcount(m) != 1) residual = std::max(residual, std::abs(c));
  return {out, residual};
}

// Columns are vector_rep(g, e_j); max residual over columns is reported.
inline RMatrix rotation_of(const CliffordElement& g, double* residual = nullptr) {
  const int n = g.ambient();
  RMatrix rot(n, n);
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    RVector e = RVector::Zero(n);
    e(j) = 1.0;
    VectorRepResult r = vector_rep(g, e);
    rot.col(j) = r.vec;
    worst = std::max(worst, r.residual);
  }
  if (residual) *residual = worst;
  return rot;
}

// Real antisymmetric matrix; the Lie algebra of the rotation group.
struct SkewMatrix {
  RMatrix entries;

  explicit SkewMatrix(RMatrix m) : entries(std::move(m)) {
    if (entries.rows() != entries.cols())
      throw std::invalid_argument("SkewMatrix: must be square");
    double dev = (entries + entries.transpose()).cwiseAbs().maxCoeff();
    if (entries.rows() > 0 && dev > 1e-12)
      throw std::invalid_argument("SkewMatrix: not antisymmetric");
  }

  int n() const { return int(entries.rows()); }
};

// Basis rotation generator: e_i -> e_j, e_j -> -e_i (1-based indices).
inline RMatrix so_generator(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw std::invalid_argument("so_generator: bad index pair");
  RMatrix m = RMatrix::Zero(n, n);
  m(j - 1, i - 1) = 1.0;
  m(i - 1, j - 1) = -1.0;
  return m;
}

// Derivative of the conjugation action: alpha -> [alpha, .] on Lambda^1,
// sending (1/2) e_i e_j to the rotation generator above. Input must be a
// degree-2 element with real coefficients.
inline SkewMatrix d_rho(const CliffordElement& alpha) {
  if (!alpha.supported_on_degree(2))
    throw std::invalid_argument("d_rho: element not supported on degree 2");
  const int n = alpha.ambient();
  RMatrix m = RMatrix::Zero(n, n);
  for (int col = 0; col < n; ++col) {
    CliffordElement e = CliffordElement::generator(n, col + 1);
    CliffordElement br = alpha * e - e * alpha;
    for (const auto& [mask, c] : br.terms()) {
      if (std::popcount(mask) != 1)
        throw std::domain_error("d_rho: bracket left Lambda^1");
      if (std::abs(c.imag()) > 1e-12)
        throw std::invalid_argument("d_rho: coefficients must be real");
      m(std::countr_zero(mask), col) = c.real();
    }
  }
  return SkewMatrix(std::move(m));
}

}  // namespace diracidx
