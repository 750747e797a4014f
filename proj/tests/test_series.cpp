#include <diracidx/root_series.hpp>

#include <catch2/catch.hpp>

#include "support/oracles.hpp"

using namespace diracidx;

TEST_CASE("rational arithmetic reduces and compares exactly") {
  REQUIRE(Rational(2, 4) == Rational(1, 2));
  REQUIRE(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  REQUIRE(Rational(3, 7) * Rational(7, 3) == Rational(1));
  REQUIRE(Rational(-2, -6) == Rational(1, 3));
  REQUIRE(Rational(1, -2) == Rational(-1, 2));
  REQUIRE((Rational(5, 6) / Rational(5, 3)) == Rational(1, 2));
  REQUIRE(Rational(1, 2).str() == "1/2");
  REQUIRE(Rational(-7).str() == "-7");
  REQUIRE_THROWS_AS(Rational(1, 0), std::domain_error);
  REQUIRE_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("series ring basics: unit, truncation, negation substitution") {
  RootSeries s = t_class(1, 4);
  REQUIRE((RootSeries::one(2, 4) * s) == s);

  // negating all variables flips odd-degree coefficients only
  RootSeries neg = s.substitute_negate();
  for (const auto& [e, c] : s.terms()) {
    Rational expect = (RootSeries::degree(e) % 2 == 0) ? c : -c;
    REQUIRE(neg.coefficient(e) == expect);
  }

  // e^{x/2} negates to e^{-x/2} term by term
  RootSeries ex = exp_in_var<Rational>(1, 5, 0, Rational(1, 2));
  RootSeries emx = exp_in_var<Rational>(1, 5, 0, Rational(-1, 2));
  REQUIRE(ex.substitute_negate() == emx);
}

TEST_CASE("incompatible shapes are rejected") {
  REQUIRE_THROWS_AS(RootSeries::one(2, 4) * RootSeries::one(3, 4),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(RootSeries::one(2, 4) + RootSeries::one(2, 5),
                    std::invalid_argument);
}

TEST_CASE("t-class: rank zero, explicit r = 1 expansion, leading terms") {
  // empty product: the constant series 1
  REQUIRE(t_class(0, 4) == RootSeries::one(1, 4));

  // r = 1 at order 3: -(x1 + x*x1/2 + x^2*x1/8 + x1^3/24)
  RootSeries t = t_class(1, 3);
  REQUIRE(t.coefficient({0, 1}) == Rational(-1));
  REQUIRE(t.coefficient({1, 1}) == Rational(-1, 2));
  REQUIRE(t.coefficient({2, 1}) == Rational(-1, 8));
  REQUIRE(t.coefficient({0, 3}) == Rational(-1, 24));
  REQUIRE(t.terms().size() == 4);

  // sign alternation of the sinh product under negation: factor (-1)^r
  for (int r : {1, 2, 3}) {
    RootSeries prod = RootSeries::one(1 + r, 4);
    for (int v = 1; v <= r; ++v) prod = prod * sinh2_in_var<Rational>(1 + r, 4, v);
    RootSeries flipped = prod.substitute_negate();
    RootSeries expect = (r % 2 == 1) ? -prod : prod;
    REQUIRE(flipped == expect);
  }

  // leading coefficient of the full t-class is (-1)^r on x_1...x_r
  for (int r : {1, 2, 3}) {
    RootSeries tr = t_class(r, r + 2);
    RootSeries::Expo lead(1 + r, 0);
    for (int i = 1; i <= r; ++i) lead[i] = 1;
    REQUIRE(tr.coefficient(lead) == Rational(r % 2 == 0 ? 1 : -1));
    for (const auto& [e, c] : tr.terms()) REQUIRE(RootSeries::degree(e) >= r);
  }
}

TEST_CASE("t-class coefficients agree with the dense polynomial oracle") {
  // oracle route: dense double arithmetic, exp and sinh assembled by hand
  const int order = 4;
  for (int r : {1, 2}) {
    const int nv = 1 + r;
    oracles::DensePoly acc = oracles::DensePoly::exp_var(nv, order, 0, 0.5);
    for (int v = 1; v <= r; ++v) {
      oracles::DensePoly sh = oracles::DensePoly::exp_var(nv, order, v, 0.5)
                                  .plus(oracles::DensePoly::exp_var(nv, order, v, -0.5)
                                            .scaled(-1.0));
      acc = acc.times(sh);
    }
    if (r % 2 == 1) acc = acc.scaled(-1.0);

    RootSeries t = t_class(r, order);
    for (const auto& [e, c] : t.terms()) {
      std::vector<int> ei(e.begin(), e.end());
      REQUIRE(c.to_double() == Approx(acc.coefficient(ei)).margin(1e-12));
    }
    for (const auto& [e, c] : acc.terms()) {
      RootSeries::Expo ee(e.begin(), e.end());
      REQUIRE(t.coefficient(ee).to_double() == Approx(c).margin(1e-12));
    }
  }
}

TEST_CASE("Todd and A-hat: classical expansions, evenness, invertibility") {
  // single complex root: collapse x and x1 to one variable y
  RootSeries td = todd_series(1, 6);
  RootSeries y = td.collapse_vars({0, 0}, 1);
  REQUIRE(y.coefficient({0}) == Rational(1));
  REQUIRE(y.coefficient({1}) == Rational(1, 2));
  REQUIRE(y.coefficient({2}) == Rational(1, 12));
  REQUIRE(y.coefficient({3}) == Rational(0));
  REQUIRE(y.coefficient({4}) == Rational(-1, 720));
  REQUIRE(y.coefficient({6}) == Rational(1, 30240));

  // A-hat is even in the roots to order 6, with the classical coefficients
  RootSeries ah = a_hat_series(1, 6);
  REQUIRE(ah == ah.substitute_negate());
  REQUIRE(ah.coefficient({0, 2}) == Rational(-1, 24));
  REQUIRE(ah.coefficient({0, 4}) == Rational(7, 5760));

  // truncated inverse is exact in rational arithmetic
  for (int r : {1, 2}) {
    RootSeries t = todd_series(r, 6);
    REQUIRE(t * t.inverse() == RootSeries::one(1 + r, 6));
  }
  REQUIRE_THROWS_AS(euler_class(1, 4).inverse(), std::domain_error);

  // float fallback: same inverse identity within 1e-12
  RootSeriesD tdd = todd_series(2, 6).to_double_series();
  RootSeriesD prod = tdd * tdd.inverse();
  REQUIRE(prod.max_abs_coeff_diff(RootSeriesD::one(3, 6)) < 1e-12);
}

TEST_CASE("characteristic series are symmetric in the roots") {
  for (int r : {2, 3}) {
    REQUIRE(t_class(r, r + 3).symmetric_in_range(1, 1 + r));
    REQUIRE(todd_series(r, 5).symmetric_in_range(1, 1 + r));
    REQUIRE(a_hat_series(r, 5).symmetric_in_range(1, 1 + r));
  }
  REQUIRE_FALSE(
      exp_in_var<Rational>(3, 4, 1, Rational(1)).symmetric_in_range(1, 3));
}

TEST_CASE("kappa identity verifies exactly for r = 0..3") {
  for (int r : {0, 1, 2, 3}) {
    ValidationReport rep = verify_kappa_identity(r, 6);
    INFO(rep.render_text());
    REQUIRE(rep.passed());
  }
  REQUIRE_THROWS_AS(verify_kappa_identity(3, 4), std::invalid_argument);
}

TEST_CASE("Todd multiplicativity verifies exactly, including the trivial factor") {
  for (auto [r1, r2] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {0, 2}}) {
    ValidationReport rep = verify_todd_multiplicative(r1, r2, 6);
    INFO("r1=" << r1 << " r2=" << r2 << "\n" << rep.render_text());
    REQUIRE(rep.passed());
  }
}

TEST_CASE("line-class character rules") {
  const int nv = 2, order = 6;
  RootSeries cha = exp_in_var<Rational>(nv, order, 0, Rational(1));
  RootSeries chb = exp_in_var<Rational>(nv, order, 1, Rational(1));
  RootSeries sum = RootSeries::variable(nv, order, 0) +
                   RootSeries::variable(nv, order, 1);
  REQUIRE(cha * chb == RootSeries::exp_of(sum));
}

TEST_CASE("printer emits sorted coefficient lines") {
  RootSeries t = t_class(1, 3);
  auto lines = t.to_lines(standard_names(1));
  REQUIRE(lines.size() == 4);
  REQUIRE(lines[0] == "-1  x1");
  REQUIRE(lines[1] == "-1/2  x*x1");
  REQUIRE(lines[2] == "-1/24  x1^3");
  REQUIRE(lines[3] == "-1/8  x^2*x1");
}

TEST_CASE("divide_by_monomial rejects non-divisible series") {
  RootSeries td = todd_series(1, 4);
  RootSeries::Expo e(2, 0);
  e[1] = 1;
  REQUIRE_THROWS_AS(td.divide_by_monomial(e), std::domain_error);
}
