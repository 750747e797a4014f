#include <diracidx/gamma.hpp>

#include <catch2/catch.hpp>

#include <random>

using namespace diracidx;

namespace {

CMatrix m2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("generators for n = 1..4 match the tabulated matrices exactly") {
  const Complex i(0, 1);

  GammaSet g1 = build_gamma(1);
  REQUIRE(g1.dim() == 1);
  REQUIRE(g1.generators[0](0, 0) == -i);

  GammaSet g2 = build_gamma(2);
  REQUIRE(exactly_equal(g2.generators[0], m2(0, -i, -i, 0)));
  REQUIRE(exactly_equal(g2.generators[1], m2(0, -1, 1, 0)));

  GammaSet g3 = build_gamma(3);
  REQUIRE(exactly_equal(g3.generators[0], m2(0, -i, -i, 0)));
  REQUIRE(exactly_equal(g3.generators[1], m2(0, -1, 1, 0)));
  REQUIRE(exactly_equal(g3.generators[2], m2(-i, 0, 0, i)));

  GammaSet g4 = build_gamma(4);
  CMatrix e1(4, 4), e2(4, 4), e3(4, 4), e4(4, 4);
  e1 << 0, 0, 0, -i, 0, 0, -i, 0, 0, -i, 0, 0, -i, 0, 0, 0;
  e2 << 0, 0, 0, -1, 0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0, 0;
  e3 << 0, 0, -i, 0, 0, 0, 0, i, -i, 0, 0, 0, 0, i, 0, 0;
  e4 << 0, 0, -1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 1, 0, 0;
  REQUIRE(exactly_equal(g4.generators[0], e1));
  REQUIRE(exactly_equal(g4.generators[1], e2));
  REQUIRE(exactly_equal(g4.generators[2], e3));
  REQUIRE(exactly_equal(g4.generators[3], e4));
}

TEST_CASE("all defining identities hold with residual exactly zero up to n = 14") {
  for (int n = 1; n <= 14; ++n) {
    ValidationReport rep = verify_gamma(build_gamma(n));
    INFO("n = " << n << "\n" << rep.render_text());
    REQUIRE(rep.passed());
    for (const CheckRecord& c : rep.checks()) {
      REQUIRE(c.residual.has_value());
      REQUIRE(*c.residual == 0.0);
    }
  }
}

TEST_CASE("a corrupted generator is reported, not thrown") {
  GammaSet g = build_gamma(4);
  g.generators[1](0, 3) = -g.generators[1](0, 3);
  ValidationReport rep = verify_gamma(g);
  REQUIRE_FALSE(rep.passed());
  const CheckRecord* anti = rep.find("gamma/n4/anticommutators");
  REQUIRE(anti != nullptr);
  REQUIRE(anti->status == CheckStatus::fail);
  REQUIRE(*anti->residual > 0.0);
}

TEST_CASE("dimension bounds are enforced") {
  REQUIRE_THROWS_AS(build_gamma(0), std::invalid_argument);
  REQUIRE_THROWS_AS(build_gamma(-2), std::invalid_argument);
  REQUIRE_THROWS_AS(build_gamma(kGammaDimensionCap + 1), std::invalid_argument);
  REQUIRE_NOTHROW(build_gamma(kGammaDimensionCap));
}

TEST_CASE("matrix algebra axioms hold on random instances") {
  std::mt19937_64 rng(19);
  std::normal_distribution<double> gauss;
  auto random = [&](int r, int c) {
    CMatrix m(r, c);
    for (int j = 0; j < c; ++j)
      for (int i = 0; i < r; ++i) m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
  };
  for (int trial = 0; trial < 10; ++trial) {
    CMatrix a = random(4, 3), b = random(3, 5), c = random(3, 5);
    REQUIRE(max_abs_diff(CMatrix((a * b).adjoint()),
                         CMatrix(b.adjoint() * a.adjoint())) < 1e-12);
    REQUIRE(max_abs_diff(CMatrix(a * (b + c)), CMatrix(a * b + a * c)) < 1e-12);
    CMatrix s = random(4, 4), t = random(4, 4);
    REQUIRE(std::abs((s * t).trace() - (t * s).trace()) < 1e-12);
    REQUIRE(std::abs(std::conj(s.trace()) - s.adjoint().trace()) < 1e-14);
  }
}

TEST_CASE("identities still hold exactly at the dimension cap (spot check)") {
  GammaSet g = build_gamma(kGammaDimensionCap);
  REQUIRE(g.dim() == 256);
  const CMatrix id = CMatrix::Identity(256, 256);
  for (int j : {0, 7, 15}) {
    REQUIRE(exactly_equal(CMatrix(g.generators[j].adjoint()),
                          CMatrix(-g.generators[j])));
    REQUIRE(exactly_equal(CMatrix(g.generators[j] * g.generators[j]),
                          CMatrix(-id)));
  }
  REQUIRE(max_abs(CMatrix(g.generators[3] * g.generators[12] +
                          g.generators[12] * g.generators[3])) == 0.0);
}

TEST_CASE("squared symbol is minus the squared norm for random covectors") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss;
  for (int n : {2, 3, 4, 6}) {
    GammaSet g = build_gamma(n);
    for (int s = 0; s < 25; ++s) {
      RVector xi(n);
      for (int j = 0; j < n; ++j) xi(j) = gauss(rng);
      CMatrix c = clifford_action(g, xi);
      double res = max_abs_diff(
          CMatrix(c * c),
          CMatrix(-xi.squaredNorm() * CMatrix::Identity(g.dim(), g.dim())));
      REQUIRE(res < 1e-12);
    }
  }
}
