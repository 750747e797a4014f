#pragma once

#include <diracidx/rational.hpp>
#include <diracidx/report.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace diracidx {

template <class Coef>
struct CoefOps;

template <>
struct CoefOps<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& c) { return c.is_zero(); }
  static Rational from_ratio(long long n, long long d) { return Rational(n, d); }
  static double to_double(const Rational& c) { return c.to_double(); }
  static std::string str(const Rational& c) { return c.str(); }
};

template <>
struct CoefOps<double> {
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double c) { return c == 0.0; }
  static double from_ratio(long long n, long long d) {
    return double(n) / double(d);
  }
  static double to_double(double c) { return c; }
  static std::string str(double c) {
    std::ostringstream os;
    os.precision(17);
    os << c;
    return os.str();
  }
};

// Truncated formal power series in a fixed list of commuting variables, every
// variable counting degree 1. Monomials above the truncation order are
// discarded on the fly, so the ring operations are exact modulo that cutoff.
template <class Coef>
class PowerSeriesT {
 public:
  using Ops = CoefOps<Coef>;
  using Expo = std::vector<std::uint8_t>;

  PowerSeriesT(int nvars, int order) : nvars_(nvars), order_(order) {
    if (nvars < 0 || nvars > 16)
      throw std::invalid_argument("PowerSeries: variable count out of range");
    if (order < 0 || order > 32)
      throw std::invalid_argument("PowerSeries: order out of range");
  }

  static PowerSeriesT zero(int nvars, int order) {
    return PowerSeriesT(nvars, order);
  }

  static PowerSeriesT constant(int nvars, int order, Coef c) {
    PowerSeriesT s(nvars, order);
    if (!Ops::is_zero(c)) s.coef_[Expo(nvars, 0)] = c;
    return s;
  }

  static PowerSeriesT one(int nvars, int order) {
    return constant(nvars, order, Ops::one());
  }

  static PowerSeriesT variable(int nvars, int order, int var) {
    PowerSeriesT s(nvars, order);
    if (var < 0 || var >= nvars)
      throw std::invalid_argument("PowerSeries: variable index out of range");
    if (order >= 1) {
      Expo e(nvars, 0);
      e[var] = 1;
      s.coef_[e] = Ops::one();
    }
    return s;
  }

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  const std::map<Expo, Coef>& terms() const { return coef_; }
  bool is_zero() const { return coef_.empty(); }

  Coef coefficient(const Expo& e) const {
    auto it = coef_.find(e);
    return it == coef_.end() ? Ops::zero() : it->second;
  }

  Coef coefficient(std::initializer_list<int> e) const {
    if (int(e.size()) > nvars_)
      throw std::invalid_argument("PowerSeries: exponent arity mismatch");
    Expo ex(nvars_, 0);
    int i = 0;
    for (int v : e) ex[i++] = std::uint8_t(v);
    return coefficient(ex);
  }

  static int degree(const Expo& e) {
    return std::accumulate(e.begin(), e.end(), 0);
  }

  void set(const Expo& e, Coef c) {
    if (int(e.size()) != nvars_)
      throw std::invalid_argument("PowerSeries: exponent arity mismatch");
    if (degree(e) > order_) return;
    if (Ops::is_zero(c))
      coef_.erase(e);
    else
      coef_[e] = c;
  }

  PowerSeriesT& operator+=(const PowerSeriesT& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.coef_) set(e, coefficient(e) + c);
    return *this;
  }

  PowerSeriesT& operator-=(const PowerSeriesT& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.coef_) set(e, coefficient(e) - c);
    return *this;
  }

  friend PowerSeriesT operator+(PowerSeriesT a, const PowerSeriesT& b) {
    a += b;
    return a;
  }
  friend PowerSeriesT operator-(PowerSeriesT a, const PowerSeriesT& b) {
    a -= b;
    return a;
  }

  PowerSeriesT operator-() const {
    PowerSeriesT out(nvars_, order_);
    for (const auto& [e, c] : coef_) out.coef_[e] = -c;
    return out;
  }

  friend PowerSeriesT operator*(const Coef& s, const PowerSeriesT& a) {
    PowerSeriesT out(a.nvars_, a.order_);
    if (Ops::is_zero(s)) return out;
    for (const auto& [e, c] : a.coef_) out.set(e, s * c);
    return out;
  }

  friend PowerSeriesT operator*(const PowerSeriesT& a, const PowerSeriesT& b) {
    a.require_compatible(b);
    PowerSeriesT out(a.nvars_, a.order_);
    for (const auto& [ea, ca] : a.coef_) {
      int da = degree(ea);
      for (const auto& [eb, cb] : b.coef_) {
        if (da + degree(eb) > a.order_) continue;
        Expo e(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) e[i] = std::uint8_t(ea[i] + eb[i]);
        out.set(e, out.coefficient(e) + ca * cb);
      }
    }
    return out;
  }

  // x_i -> -x_i for every variable: each monomial picks (-1)^degree.
  PowerSeriesT substitute_negate() const {
    PowerSeriesT out(nvars_, order_);
    for (const auto& [e, c] : coef_)
      out.coef_[e] = (degree(e) % 2 == 0) ? c : -c;
    return out;
  }

  PowerSeriesT truncate(int new_order) const {
    PowerSeriesT out(nvars_, std::min(new_order, order_));
    for (const auto& [e, c] : coef_)
      if (degree(e) <= out.order_) out.coef_[e] = c;
    return out;
  }

  // exp of a series with zero constant term (nilpotent modulo truncation)
  static PowerSeriesT exp_of(const PowerSeriesT& s) {
    if (!Ops::is_zero(s.coefficient(Expo(s.nvars_, 0))))
      throw std::invalid_argument("PowerSeries::exp_of: nonzero constant term");
    PowerSeriesT sum = one(s.nvars_, s.order_);
    PowerSeriesT term = one(s.nvars_, s.order_);
    for (int k = 1; k <= s.order_; ++k) {
      // term = s^k / k!
      term = term * s;
      if (term.is_zero()) break;
      PowerSeriesT scaled(s.nvars_, s.order_);
      for (const auto& [e, c] : term.coef_)
        scaled.coef_[e] = c * Ops::from_ratio(1, k);
      term = scaled;
      sum += term;
    }
    return sum;
  }

  // multiplicative inverse; requires unit constant term. Newton doubling:
  // x <- x (2 - s x) gains one binary digit of truncation order per step.
  PowerSeriesT inverse() const {
    Coef c0 = coefficient(Expo(nvars_, 0));
    if (Ops::is_zero(c0))
      throw std::domain_error("PowerSeries::inverse: zero constant term");
    Coef c0inv = Ops::one() / c0;
    PowerSeriesT x = constant(nvars_, order_, c0inv);
    PowerSeriesT two = constant(nvars_, order_, Ops::from_ratio(2, 1));
    int steps = 1;
    while ((1 << steps) <= order_ + 1) ++steps;
    for (int k = 0; k < steps; ++k) x = x * (two - (*this) * x);
    return x;
  }

  // divide every monomial by prod_i x_i^{e[i]}; throws when not divisible.
  PowerSeriesT divide_by_monomial(const Expo& e) const {
    if (int(e.size()) != nvars_)
      throw std::invalid_argument("PowerSeries: exponent arity mismatch");
    PowerSeriesT out(nvars_, order_ - degree(e));
    for (const auto& [m, c] : coef_) {
      Expo q(nvars_);
      for (int i = 0; i < nvars_; ++i) {
        if (m[i] < e[i])
          throw std::domain_error("PowerSeries: monomial not divisible");
        q[i] = std::uint8_t(m[i] - e[i]);
      }
      out.coef_[q] = c;
    }
    return out;
  }

  // substitute variable i by variable map[i] of a smaller ring, summing
  // coefficients (used to specialize several formal roots to one class)
  PowerSeriesT collapse_vars(const std::vector<int>& map, int new_nvars) const {
    if (int(map.size()) != nvars_)
      throw std::invalid_argument("PowerSeries: collapse map arity mismatch");
    PowerSeriesT out(new_nvars, order_);
    for (const auto& [m, c] : coef_) {
      Expo e(new_nvars, 0);
      for (int i = 0; i < nvars_; ++i) e[map[i]] = std::uint8_t(e[map[i]] + m[i]);
      out.set(e, out.coefficient(e) + c);
    }
    return out;
  }

  PowerSeriesT swap_vars(int i, int j) const {
    PowerSeriesT out(nvars_, order_);
    for (const auto& [m, c] : coef_) {
      Expo e = m;
      std::swap(e[i], e[j]);
      out.coef_[e] = c;
    }
    return out;
  }

  // symmetry under every adjacent transposition of vars [first, last)
  bool symmetric_in_range(int first, int last) const {
    for (int i = first; i + 1 < last; ++i)
      if (!(swap_vars(i, i + 1) == *this)) return false;
    return true;
  }

  friend bool operator==(const PowerSeriesT& a, const PowerSeriesT& b) {
    return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.coef_ == b.coef_;
  }

  double max_abs_coeff_diff(const PowerSeriesT& o) const {
    double worst = 0.0;
    for (const auto& [e, c] : coef_)
      worst = std::max(worst,
                       std::abs(Ops::to_double(c) - Ops::to_double(o.coefficient(e))));
    for (const auto& [e, c] : o.coef_)
      worst = std::max(worst,
                       std::abs(Ops::to_double(c) - Ops::to_double(coefficient(e))));
    return worst;
  }

  PowerSeriesT<double> to_double_series() const {
    PowerSeriesT<double> out(nvars_, order_);
    for (const auto& [e, c] : coef_) out.set(e, Ops::to_double(c));
    return out;
  }

  // sorted monomial/coefficient lines, one per term, for report payloads
  std::vector<std::string> to_lines(const std::vector<std::string>& names) const {
    if (int(names.size()) != nvars_)
      throw std::invalid_argument("PowerSeries: name list arity mismatch");
    std::vector<std::pair<Expo, Coef>> items(coef_.begin(), coef_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
      int da = degree(a.first), db = degree(b.first);
      if (da != db) return da < db;
      return a.first < b.first;
    });
    std::vector<std::string> lines;
    for (const auto& [e, c] : items) {
      std::string mono;
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e[i] > 1) mono += "^" + std::to_string(int(e[i]));
      }
      if (mono.empty()) mono = "1";
      lines.push_back(Ops::str(c) + "  " + mono);
    }
    return lines;
  }

 private:
  void require_compatible(const PowerSeriesT& o) const {
    if (nvars_ != o.nvars_ || order_ != o.order_)
      throw std::invalid_argument("PowerSeries: incompatible shapes");
  }

  int nvars_;
  int order_;
  std::map<Expo, Coef> coef_;
};

using RootSeries = PowerSeriesT<Rational>;
using RootSeriesD = PowerSeriesT<double>;

// ---------------------------------------------------------------------------
// Characteristic-class builders. Variable layout for the (c1, roots) ring:
// variable 0 is the line-class x = c1, variables 1..r are the formal roots.
// ---------------------------------------------------------------------------

template <class Coef>
PowerSeriesT<Coef> exp_in_var(int nvars, int order, int var, Coef rate) {
  auto v = PowerSeriesT<Coef>::variable(nvars, order, var);
  return PowerSeriesT<Coef>::exp_of(rate * v);
}

// e^{v/2} - e^{-v/2} in the given variable (odd series starting at v)
template <class Coef>
PowerSeriesT<Coef> sinh2_in_var(int nvars, int order, int var) {
  using Ops = CoefOps<Coef>;
  return exp_in_var<Coef>(nvars, order, var, Ops::from_ratio(1, 2)) -
         exp_in_var<Coef>(nvars, order, var, Ops::from_ratio(-1, 2));
}

template <class Coef>
PowerSeriesT<Coef> euler_class_at(int nvars, int order,
                                  const std::vector<int>& roots) {
  auto out = PowerSeriesT<Coef>::one(nvars, order);
  for (int v : roots) out = out * PowerSeriesT<Coef>::variable(nvars, order, v);
  return out;
}

// (-1)^r e^{x/2} prod_j (e^{x_j/2} - e^{-x_j/2}) at explicit variable indices
template <class Coef>
PowerSeriesT<Coef> t_class_at(int nvars, int order, int c1_var,
                              const std::vector<int>& roots) {
  using Ops = CoefOps<Coef>;
  auto out = exp_in_var<Coef>(nvars, order, c1_var, Ops::from_ratio(1, 2));
  for (int v : roots) out = out * sinh2_in_var<Coef>(nvars, order, v);
  if (roots.size() % 2 == 1) out = -out;
  return out;
}

// prod_j (x_j/2)/sinh(x_j/2): per root, invert the unit series
// (e^{x/2} - e^{-x/2})/x.
template <class Coef>
PowerSeriesT<Coef> a_hat_at(int nvars, int order, const std::vector<int>& roots) {
  auto out = PowerSeriesT<Coef>::one(nvars, order);
  for (int v : roots) {
    typename PowerSeriesT<Coef>::Expo e(nvars, 0);
    e[v] = 1;
    auto unit = sinh2_in_var<Coef>(nvars, order + 1, v).divide_by_monomial(e);
    out = out * unit.inverse().truncate(order);
  }
  return out;
}

// Todd class of the (c1, roots) data: e^{x/2} * prod (x_j/2)/sinh(x_j/2)
template <class Coef>
PowerSeriesT<Coef> todd_at(int nvars, int order, int c1_var,
                           const std::vector<int>& roots) {
  using Ops = CoefOps<Coef>;
  return exp_in_var<Coef>(nvars, order, c1_var, Ops::from_ratio(1, 2)) *
         a_hat_at<Coef>(nvars, order, roots);
}

inline std::vector<int> root_vars(int r) {
  std::vector<int> v(r);
  for (int i = 0; i < r; ++i) v[i] = i + 1;
  return v;
}

inline RootSeries t_class(int r, int order) {
  if (order < r) throw std::invalid_argument("t_class: order must be >= r");
  if (r == 0) return RootSeries::one(1, order);  // rank 0: no roots, no line class
  return t_class_at<Rational>(1 + r, order, 0, root_vars(r));
}

inline RootSeries todd_series(int r, int order) {
  if (r == 0) return RootSeries::one(1, order);
  return todd_at<Rational>(1 + r, order, 0, root_vars(r));
}

inline RootSeries a_hat_series(int r, int order) {
  return a_hat_at<Rational>(1 + r, order, root_vars(r));
}

inline RootSeries euler_class(int r, int order) {
  return euler_class_at<Rational>(1 + r, order, root_vars(r));
}

inline std::vector<std::string> standard_names(int r) {
  std::vector<std::string> names{"x"};
  for (int i = 1; i <= r; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

// kappa(ch(tau)) is the negation substitution of the t-class. Checks, with
// exact rational arithmetic:
//   (a) kappa * Td = euler class, coefficient-wise to the truncation order;
//   (b) after dividing out the euler class, kappa recovers 1/Td to the
//       reduced order (the fiber-integration identity).
inline ValidationReport verify_kappa_identity(int r, int order) {
  if (order < r + 2)
    throw std::invalid_argument("verify_kappa_identity: order must be >= r + 2");
  ValidationReport rep("kappa_identity");
  rep.config()["r"] = r;
  rep.config()["order"] = order;
  rep.config()["arithmetic"] = "rational-exact";
  const std::string p = "series/kappa/r" + std::to_string(r) + "/";

  RootSeries kappa = t_class(r, order).substitute_negate();
  RootSeries td = todd_series(r, order);
  RootSeries chi = euler_class(r, order);

  RootSeries lhs = kappa * td;
  bool ok1 = lhs == chi;
  rep.add(p + "kappa_times_todd",
          "negated t-class times Todd equals the euler class",
          ok1, ok1 ? 0.0 : lhs.max_abs_coeff_diff(chi));

  typename RootSeries::Expo div(1 + r, 0);
  for (int i = 1; i <= r; ++i) div[i] = 1;
  RootSeries pushed = kappa.divide_by_monomial(div);
  RootSeries inv_td = todd_series(r, order).inverse().truncate(order - r);
  bool ok2 = pushed == inv_td;
  rep.add(p + "fiber_integration",
          "kappa divided by the euler class equals 1/Td",
          ok2, ok2 ? 0.0 : pushed.max_abs_coeff_diff(inv_td));

  bool sym = kappa.symmetric_in_range(1, 1 + r) && td.symmetric_in_range(1, 1 + r);
  rep.add(p + "root_symmetry", "t-class and Todd symmetric in the roots", sym,
          sym ? 0.0 : 1.0);

  return rep;
}

// Todd multiplicativity over a direct sum: the combined class built from the
// union of roots with c1 = x^(1) + x^(2) must equal the product of the two
// factors, exactly to truncation. Variable layout: vars 0 and 1 are the two
// line classes, then r1 roots, then r2 roots.
inline ValidationReport verify_todd_multiplicative(int r1, int r2, int order) {
  ValidationReport rep("todd_multiplicative");
  rep.config()["r1"] = r1;
  rep.config()["r2"] = r2;
  rep.config()["order"] = order;
  rep.config()["arithmetic"] = "rational-exact";
  const std::string p = "series/todd_mult/r" + std::to_string(r1) + "_" +
                        std::to_string(r2) + "/";

  const int nvars = 2 + r1 + r2;
  std::vector<int> roots1, roots2, all;
  for (int i = 0; i < r1; ++i) roots1.push_back(2 + i);
  for (int i = 0; i < r2; ++i) roots2.push_back(2 + r1 + i);
  all = roots1;
  all.insert(all.end(), roots2.begin(), roots2.end());

  RootSeries td1 = todd_at<Rational>(nvars, order, 0, roots1);
  RootSeries td2 = todd_at<Rational>(nvars, order, 1, roots2);

  // combined line class: exp((x0 + x1)/2) built from the sum, not the product
  RootSeries half_sum =
      Rational(1, 2) * (RootSeries::variable(nvars, order, 0) +
                        RootSeries::variable(nvars, order, 1));
  RootSeries td_sum = RootSeries::exp_of(half_sum) *
                      a_hat_at<Rational>(nvars, order, all);

  RootSeries prod = td1 * td2;
  bool ok = td_sum == prod;
  rep.add(p + "multiplicative", "Td of a direct sum equals the product of Todd classes",
          ok, ok ? 0.0 : td_sum.max_abs_coeff_diff(prod));
  return rep;
}

}  // namespace diracidx
