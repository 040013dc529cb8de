#include "doctest.h"

#include <map>
#include <numbers>
#include <random>

#include "cw/limit.hpp"
#include "cw/plancherel.hpp"
#include "cw/walks.hpp"
#include "support.hpp"

using namespace cw;

namespace {

// Coefficients of h in the A-basis.
std::map<AffineElement, double> a_coefficients(const HeckeAlgebra& alg, const HeckeElement& h) {
  std::map<AffineElement, double> out;
  for (const auto& [w, c] : h.terms()) {
    out[w] = alg.field().to_complex(c).real() * std::pow(alg.field().q_double(), 0.5 * w.length());
  }
  return out;
}

// Laurent coefficients of the principal series character of T_w, grouped by exponent.
std::map<LatticeVector, double> character_coefficients(const AffineElement& w, double q) {
  const double frak = std::sqrt(q) - 1 / std::sqrt(q);
  std::map<LatticeVector, double> out;
  for (FiniteWeylElement u : FiniteWeylElement::all()) {
    for (const auto& term : matrix_element_terms(w.inverse(), u, u)) out[term.exponent] += std::pow(frak, term.folds);
  }
  return out;
}

}  // namespace

TEST_SUITE("limit") {
  TEST_CASE("two steps return with probability 1/(3q)") {
    for (int q : {2, 3, 5}) {
      const auto exact = exact_distribution_rational(RadialWalkSpec::simple(), 2, Rational(q));
      CHECK(exact.mass_at(AffineElement{}) == Rational(1, 3 * q));
      const auto dist = exact_distribution(RadialWalkSpec::simple(), 2, q);
      CHECK(dist.p_n(AffineElement{}) == doctest::Approx(1.0 / (3 * q)).epsilon(1e-15));
    }
  }

  TEST_CASE("zero and one step") {
    const auto zero = exact_distribution(RadialWalkSpec::simple(), 0, 2.0);
    REQUIRE(zero.mass.size() == 1);
    CHECK(zero.mass_at(AffineElement{}) == 1.0);
    const auto one = exact_distribution_rational(RadialWalkSpec::simple(), 1, Rational(2));
    CHECK(one.mass_at(AffineElement{}) == 0);
    for (int i = 0; i < 3; ++i) CHECK(one.mass_at(AffineElement::generator(i)) == Rational(1, 3));
  }

  TEST_CASE("distributions are probability vectors supported in the ball") {
    for (int n : {3, 7, 12}) {
      const auto rational = exact_distribution_rational(RadialWalkSpec::simple(), n, Rational(3));
      CHECK(rational.total() == 1);
      const auto dist = exact_distribution(RadialWalkSpec::simple(), n, 3.0);
      CHECK(std::abs(dist.total() - 1.0) < 1e-12);
      CHECK(dist.mass.size() == rational.mass.size());
      for (const auto& [w, m] : rational.mass) {
        CHECK(m > 0);
        CHECK(w.length() <= n);
        CHECK(std::abs(dist.mass_at(w) - m.get_d()) < 1e-14);
      }
      if (n >= 2) CHECK(dist.mass_at(AffineElement{}) > 0);
    }
  }

  TEST_CASE("a general radial walk") {
    RadialWalkSpec spec;
    spec.weights = {{AffineElement::generator(1), Rational(1, 2)}, {AffineElement::from_word({0, 2}), Rational(1, 2)}};
    const auto dist = exact_distribution(spec, 4, 2.0);
    const auto rational = exact_distribution_rational(spec, 4, Rational(2));
    CHECK(rational.total() == 1);
    for (const auto& [w, m] : rational.mass) CHECK(std::abs(dist.mass_at(w) - m.get_d()) < 1e-14);
    // The same distribution through the algebra.
    const HeckeAlgebra alg(2);
    const auto h = alg.power(alg.add(alg.scale(alg.field().from_rational(Rational(1, 2)), alg.A(AffineElement::generator(1))),
                                     alg.scale(alg.field().from_rational(Rational(1, 2)), alg.A(AffineElement::from_word({0, 2})))),
                             4);
    for (const auto& [w, a] : a_coefficients(alg, h)) CHECK(std::abs(a - dist.mass_at(w)) < 1e-12);
    RadialWalkSpec bad;
    bad.weights = {{AffineElement::generator(1), Rational(1, 2)}};
    CHECK_THROWS(bad.validate());
    bad.weights.emplace_back(AffineElement::generator(2), Rational(-1, 2));
    CHECK_THROWS(bad.validate());
  }

  TEST_CASE("products of A-basis elements have nonnegative coefficients summing to 1") {
    for (int q : {2, 3}) {
      const HeckeAlgebra alg(q);
      const auto elements = testing::ball(3);
      for (const auto& u : elements) {
        for (const auto& v : elements) {
          double sum = 0.0;
          for (const auto& [w, a] : a_coefficients(alg, alg.mul(alg.A(u), alg.A(v)))) {
            CHECK(a > 0);
            sum += a;
          }
          CHECK(std::abs(sum - 1.0) < 1e-12);
        }
      }
    }
  }

  TEST_CASE("Monte Carlo chain") {
    const auto a = mc_simulate(6, 20000, 7, 2.0);
    const auto b = mc_simulate(6, 20000, 7, 2.0);
    CHECK(a.sorted() == b.sorted());
    CHECK(a.trials == 20000);
    CHECK(std::abs(a.total() - 1.0) < 1e-12);
    const auto zero = mc_simulate(0, 100, 1, 2.0);
    CHECK(zero.mass_at(AffineElement{}) == 1.0);
    const auto two = mc_simulate(2, 200000, 42, 2.0);
    const double p = 1.0 / 6;
    CHECK(std::abs(two.mass_at(AffineElement{}) - p) < 4 * std::sqrt(p * (1 - p) / 200000));
    const auto one = mc_simulate(1, 90000, 3, 3.0);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(one.mass_at(AffineElement::generator(i)) - 1.0 / 3) < 0.01);
    CHECK(total_variation(a, a) == 0.0);
    CHECK_THROWS(mc_simulate(2, 0, 1, 2.0));
  }

  TEST_CASE("spectral closed forms") {
    for (double q : {2.0, 3.0, 4.0, 7.0}) {
      const auto d = spectral_data(q);
      const auto numeric = eigen_surface(0.0, 0.0, q);
      for (int i = 0; i < 6; ++i) CHECK(std::abs(numeric[i] - d.lambda[i]) < 1e-12);
      CHECK(d.lambda[0] < 1.0);
      CHECK(d.lambda[0] > d.lambda[1]);
      CHECK(d.lambda[2] > d.lambda[3]);
      CHECK(d.lambda[4] > d.lambda[5]);
      CHECK(d.lambda[0] > std::pow(q, -1.5));
      const Eigen::Map<const Eigen::VectorXd> v(d.v1.data(), 6);
      CHECK(std::abs(v.norm() - 1.0) < 1e-14);
      const Eigen::VectorXcd vc = v.cast<Complex>();
      CHECK((principal_P(q, 0, 0) * vc - d.lambda[0] * vc).norm() < 1e-12);
      const auto mu = induced_eigenvalues(0.0, q);
      for (int i = 0; i < 3; ++i) CHECK(std::abs(mu[i] - d.mu[i]) < 1e-12);
    }
    CHECK(spectral_data(2.0).lambda[0] == doctest::Approx((3 + std::sqrt(73.0)) / 12));
    CHECK(spectral_data(2.0).lambda[1] == doctest::Approx(1.0 / 3));
  }

  TEST_CASE("eigenvalue bounds on grids") {
    for (double q : {2.0, 3.0}) {
      const double l1 = spectral_data(q).lambda[0];
      for (int j = 0; j < 20; ++j) {
        for (int k = 0; k < 20; ++k) {
          if (j == 0 && k == 0) continue;
          const auto ev = eigen_surface(2 * std::numbers::pi * j / 20, 2 * std::numbers::pi * k / 20, q);
          for (double e : ev) CHECK(std::abs(e) < l1);
        }
      }
      for (int k = 0; k < 50; ++k) {
        for (double m : induced_eigenvalues(2 * std::numbers::pi * k / 50, q)) CHECK(std::abs(m) < l1);
      }
    }
  }

  TEST_CASE("beta from finite differences") {
    for (double q : {2.0, 3.0}) {
      const auto d = spectral_data(q);
      const double h = 1e-3;
      const double l0 = eigen_surface(0, 0, q)[0];
      const double along = (eigen_surface(h, 0, q)[0] + eigen_surface(-h, 0, q)[0] - 2 * l0) / (h * h);
      CHECK(std::abs(-along / (2 * d.lambda[0]) / d.beta - 1.0) < 1e-4);
      const double diag = (eigen_surface(h, h, q)[0] + eigen_surface(-h, -h, q)[0] - 2 * l0) / (h * h);
      CHECK(std::abs(-diag / (6 * d.lambda[0]) / d.beta - 1.0) < 1e-4);
    }
  }

  TEST_CASE("C_w") {
    CHECK(C_w(AffineElement{}, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
    const double l1 = spectral_data(2.0).lambda[0];
    double average = 0.0;
    for (const auto& w : testing::ball(4)) {
      const double c = C_w(w, 2.0);
      CHECK(c > 0);
      CHECK(std::abs(c - C_w(w.inverse(), 2.0)) < 1e-12);
      if (w.length() == 1) average += c / 3;
    }
    CHECK(std::abs(average - l1) < 1e-12);
  }

  TEST_CASE("local limit estimate") {
    const auto e = AffineElement{};
    const auto w = AffineElement::from_word({1, 2});
    for (int n : {1, 10, 100}) {
      CHECK(llt_estimate(e, n, 2.0) > 0);
      const double ratio = llt_estimate(w, n, 2.0) / llt_estimate(e, n, 2.0);
      CHECK(std::abs(ratio - C_w(w, 2.0) * std::pow(2.0, -4)) < 1e-12);
    }
    CHECK_THROWS(llt_estimate(e, 0, 2.0));
    // The ratio improves with n.
    const auto d100 = exact_distribution(RadialWalkSpec::simple(), 100, 2.0);
    const auto d200 = exact_distribution(RadialWalkSpec::simple(), 200, 2.0);
    const double r100 = d100.p_n(e) / llt_estimate(e, 100, 2.0);
    const double r200 = d200.p_n(e) / llt_estimate(e, 200, 2.0);
    CHECK(std::abs(r200 - 1) < std::abs(r100 - 1));
  }

  TEST_CASE("return probability equals the spectral integral") {
    const double q = 2.0;
    const int n = 30;
    const auto dist = exact_distribution(RadialWalkSpec::simple(), n, q);
    const HeckeAlgebra alg(2, Scalar::Mode::kNumeric);
    const auto p = alg.power(alg.simple_walk(), n);
    CHECK(std::abs(plancherel_trace(alg, p, 64).value - dist.p_n(AffineElement{})) < 1e-12);
  }

  TEST_CASE("small-angle expansion of the density") {
    double previous = lemma34_check(0.01, 0.013, 2.0);
    CHECK(previous < 0.05);
    for (int k = 1; k <= 3; ++k) {
      const double s = std::pow(0.5, k);
      const double err = lemma34_check(0.01 * s, 0.013 * s, 2.0);
      CHECK(err < 0.55 * previous);
      previous = err;
    }
    CHECK_THROWS_AS(lemma34_check(0.02, -0.02, 2.0), std::domain_error);
    CHECK_THROWS_AS(lemma34_check(0.2, 0.1, 2.0), std::domain_error);
  }

  TEST_CASE("determinant Fourier pattern") {
    // Up to an overall positive factor: 150 - 48 (three cosines) - 2 (three cosines).
    const std::map<std::pair<int, int>, double> pattern{
        {{0, 0}, 150},  {{1, 0}, -24}, {{-1, 0}, -24}, {{0, 1}, -24}, {{0, -1}, -24}, {{1, 1}, -24}, {{-1, -1}, -24},
        {{1, 2}, -1},   {{-1, -2}, -1}, {{2, 1}, -1},  {{-2, -1}, -1}, {{1, -1}, -1}, {{-1, 1}, -1}};
    for (double q : {2.0, 3.0}) {
      const auto coeffs = determinant_fourier(q);
      CHECK(coeffs.size() == pattern.size());
      double scale = 0.0;
      for (const auto& c : coeffs) {
        if (c.k1 == 0 && c.k2 == 0) scale = c.value / 150;
      }
      CHECK(scale > 0);
      for (const auto& c : coeffs) {
        const auto it = pattern.find({c.k1, c.k2});
        REQUIRE(it != pattern.end());
        CHECK(std::abs(c.value - scale * it->second) < 1e-9 * scale);
      }
    }
  }

  TEST_CASE("Laurent coefficients of characters of nonnegative combinations") {
    const double q = 2.0;
    const auto dist = exact_distribution(RadialWalkSpec::simple(), 3, q);
    std::map<LatticeVector, double> total;
    for (const auto& [w, a] : dist.mass) {
      for (const auto& [mu, c] : character_coefficients(w, q)) total[mu] += a * std::pow(q, -0.5 * w.length()) * c;
    }
    double at_one = 0.0;
    for (const auto& [mu, c] : total) {
      CHECK(c >= 0);
      at_one += c;
    }
    const HeckeAlgebra alg(2, Scalar::Mode::kNumeric);
    const auto h = to_hecke(alg, dist);
    CHECK(std::abs(at_one - character(build_principal(q, {1.0, 1.0}), alg, h).real()) < 1e-12);
    for (int j = 0; j < 10; ++j) {
      for (int k = 0; k < 10; ++k) {
        const Complex t1 = std::polar(1.0, 0.6 * j + 0.05);
        const Complex t2 = std::polar(1.0, 0.6 * k + 0.11);
        CHECK(std::abs(character(build_principal(q, {t1, t2}), alg, h)) <= at_one + 1e-12);
      }
    }
  }
}
