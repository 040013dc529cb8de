#include "doctest.h"

#include <numbers>
#include <random>

#include "cw/plancherel.hpp"
#include "support.hpp"

using namespace cw;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

// t with (wt)^lambda = t^{w^{-1} lambda}.
std::pair<Complex, Complex> act(FiniteWeylElement w, Complex t1, Complex t2) {
  return {character_value(w.inverse().apply(kAlpha1), t1, t2), character_value(w.inverse().apply(kAlpha2), t1, t2)};
}

HeckeElement sample_element(const HeckeAlgebra& alg, std::mt19937_64& rng) {
  return testing::random_hecke(alg, rng, 4, 4);
}

}  // namespace

TEST_SUITE("plancherel") {
  TEST_CASE("c-function values") {
    const double q = 2.0;
    const Complex c = c_value(q, {0, 1}, -1.0);
    CHECK(std::isfinite(std::abs(c)));
    CHECK(std::abs(c) > 0);
    std::mt19937_64 rng(97);
    for (int k = 0; k < 50; ++k) {
      const auto [t1, t2] = testing::random_torus(rng);
      const Complex a = c_value(q, t1, t2);
      const Complex b = c_value(q, 1.0 / t1, 1.0 / t2);
      CHECK(std::abs(a * std::conj(a) - a * b) < 1e-10 * std::norm(a));
      CHECK(std::abs(principal_density(q, t1, t2) - 1 / std::norm(a)) < 1e-10 / std::norm(a));
      const Complex u = t1;
      CHECK(std::abs(induced_density(q, u) - 1 / std::norm(c1_value(q, u))) < 1e-12);
    }
    CHECK_THROWS_AS(c_value(q, 1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(c1_value(q, std::sqrt(q)), std::domain_error);
  }

  TEST_CASE("quadrature nodes avoid 1") {
    for (int N : {2, 7, 64}) {
      for (int k = 0; k < N; ++k) CHECK(std::abs(circle_node(k, N) - 1.0) > 1e-3);
    }
  }

  TEST_CASE("Plancherel mass") {
    for (int q : {2, 3, 4}) {
      const HeckeAlgebra alg(q);
      const auto est = plancherel_trace(alg, alg.one(), 64);
      CHECK(std::abs(est.value - 1.0) < 1e-10);
      CHECK(est.abs_err_estimate < 1e-10);
      for (const auto& w : {AffineElement::generator(0), AffineElement::from_word({1, 2}),
                            AffineElement::from_word({0, 1, 2, 1})}) {
        CHECK(std::abs(plancherel_trace(alg, alg.T(w), 64).value) < 1e-10);
      }
    }
    const auto w = plancherel_weights(2.0);
    CHECK(w.torus == doctest::Approx(1.0 / 48));
    CHECK(w.atom == doctest::Approx(1.0 / 7));
  }

  TEST_CASE("spectral and exact traces of powers of P") {
    const HeckeAlgebra alg(3);
    const auto p = alg.simple_walk();
    std::vector<HeckeElement> powers{alg.one()};
    for (int n = 1; n <= 8; ++n) powers.push_back(alg.mul(powers.back(), p));
    const auto spectral = plancherel_traces(alg, powers, 64);
    for (int n = 0; n <= 8; ++n) {
      CHECK(std::abs(spectral[n] - alg.field().to_complex(alg.trace(powers[n]))) < 1e-10);
    }
    CHECK(alg.trace(powers[2]) == alg.field().from_rational(Rational(1, 9)));
  }

  TEST_CASE("quadrature converges spectrally") {
    const HeckeAlgebra alg(2);
    const auto p5 = alg.power(alg.simple_walk(), 5);
    const auto a = plancherel_trace(alg, p5, 128).value;
    const auto b = plancherel_trace(alg, p5, 256).value;
    CHECK(std::abs(a - b) < 1e-10);
  }

  TEST_CASE("trace generating function of 1") {
    const HeckeAlgebra alg(2);
    const Complex t1 = std::polar(0.05, 0.4);
    const Complex t2 = std::polar(0.05, -1.1);
    CHECK(rel(F_series(alg, alg.one(), t1, t2, 40), F_closed_one(2.0, t1, t2)) < 1e-6);
  }

  TEST_CASE("trace generating function of the symmetrizer") {
    const HeckeAlgebra alg(2);
    const Complex t1 = std::polar(0.05, 0.4);
    const Complex t2 = std::polar(0.05, -1.1);
    const auto one0 = alg.symmetrizer_1_0(Basis::kT);
    const Complex series = F_series(alg, one0, t1, t2, 40);
    CHECK(rel(series, F_closed_symmetrizer(2.0, t1, t2)) < 1e-6);
    // The uncorrected value differs by exactly the factor W0(q).
    const Complex unnormalized = 1.0 / c_value(2.0, 1.0 / t1, 1.0 / t2);
    CHECK(std::abs(series / unnormalized - 1.0 / 21) < 1e-8);
  }

  TEST_CASE("F_series domain and tail bound") {
    const HeckeAlgebra alg(2);
    CHECK_THROWS_AS(F_series(alg, alg.one(), 0.6, 0.1, 5), std::domain_error);
    CHECK_THROWS_AS(F_series(alg, alg.one(), 0.1, 0.55, 5), std::domain_error);
    const Complex t1 = std::polar(0.008, 0.3);
    const Complex t2 = std::polar(0.008, 2.0);
    const auto h = alg.simple_walk();
    const double bound = F_series_tail_bound(alg, h, t1, t2, 3);
    CHECK(std::isfinite(bound));
    const Complex gap = F_series(alg, h, t1, t2, 30) - F_series(alg, h, t1, t2, 3);
    CHECK(std::abs(gap) <= bound);
    CHECK(F_series_tail_bound(alg, h, t1, t2, 6) < bound);
    CHECK(std::isinf(F_series_tail_bound(alg, h, 0.2, 0.2, 3)));
  }

  TEST_CASE("F_series is equivariant under x multiplication") {
    const HeckeAlgebra alg(2);
    std::mt19937_64 rng(101);
    const Complex t1 = std::polar(0.04, 0.7);
    const Complex t2 = std::polar(0.03, -0.2);
    for (int k = 0; k < 5; ++k) {
      const auto h = alg.t_to_x(sample_element(alg, rng));
      const LatticeVector lambda{-(k % 2), -1};
      const LatticeVector mu{-1, -(k % 3)};
      const auto shifted = alg.bernstein_mul(alg.bernstein_mul(alg.x_monomial(lambda), h), alg.x_monomial(mu));
      const Complex lhs = F_series(alg, shifted, t1, t2, 30);
      const Complex rhs = character_value(lambda + mu, t1, t2) * F_series(alg, h, t1, t2, 30);
      CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
    }
  }

  TEST_CASE("f_t is the ratio of generating functions") {
    const HeckeAlgebra alg(2);
    std::mt19937_64 rng(103);
    const Complex t1 = std::polar(0.05, 1.3);
    const Complex t2 = std::polar(0.04, 0.1);
    const Complex one = F_series(alg, alg.one(), t1, t2, 30);
    for (int k = 0; k < 5; ++k) {
      const auto h = sample_element(alg, rng);
      const Complex ratio = F_series(alg, h, t1, t2, 30) / one;
      CHECK(std::abs(f_t(alg, h, t1, t2) - ratio) < 1e-8 * std::max(1.0, std::abs(ratio)));
    }
    for (int k = 0; k < 5; ++k) {
      const LatticeVector l = testing::random_lattice(rng, 3);
      CHECK(rel(f_t(alg, alg.x_monomial(l), t1, t2), character_value(l, t1, t2)) < 1e-12);
    }
  }

  TEST_CASE("symmetrized f_t is the principal series character") {
    for (int q : {2, 3}) {
      const HeckeAlgebra alg(q);
      std::mt19937_64 rng(107 + q);
      for (int k = 0; k < 25; ++k) {
        const auto [t1, t2] = testing::random_torus(rng);
        const auto h = sample_element(alg, rng);
        Complex sum = 0.0;
        for (FiniteWeylElement w : FiniteWeylElement::all()) {
          const auto [s1, s2] = act(w, t1, t2);
          sum += f_t(alg, h, s1, s2);
        }
        const Complex chi = character(build_principal(q, {t1, t2}), alg, h);
        CHECK(std::abs(sum - chi) < 1e-9 * std::max(1.0, std::abs(chi)));
      }
    }
  }

  TEST_CASE("residual characters from f_t on the orbit of the induced weight") {
    for (int q : {2, 3}) {
      const HeckeAlgebra alg(q);
      const double rq = std::sqrt(static_cast<double>(q));
      std::mt19937_64 rng(113 + q);
      std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
      for (int k = 0; k < 25; ++k) {
        const Complex u = std::polar(1.0, angle(rng));
        const auto h = sample_element(alg, rng);
        // The cyclic vector has weight (1/q, sqrt(q) u); the other points are its images under s2 and s2 s1.
        const Complex sum = f_t(alg, h, 1.0 / q, rq * u) + f_t(alg, h, u / rq, 1.0 / (rq * u)) +
                            f_t(alg, h, rq / u, 1.0 / q);
        const Complex chi1 = character(build_induced(q, u), alg, h);
        CHECK(std::abs(sum - chi1) < 1e-9 * std::max(1.0, std::abs(chi1)));
        const Complex chi2 = character(build_one_dim(q), alg, h);
        const Complex f2 = f_t(alg, h, 1.0 / q, 1.0 / q);
        CHECK(std::abs(f2 - chi2) < 1e-9 * std::max(1.0, std::abs(chi2)));
      }
    }
  }

  TEST_CASE("a point set off the orbit misses the induced character") {
    const HeckeAlgebra alg(2);
    const double q = 2.0;
    const double rq = std::sqrt(q);
    const Complex u = std::polar(1.0, 0.7);
    const auto h = alg.T(AffineElement::from_word({0, 1, 2, 0}));
    const Complex off_orbit = f_t(alg, h, rq * u, 1.0 / q) + f_t(alg, h, 1.0 / (rq * u), u / rq) + f_t(alg, h, 1.0 / q, rq * u);
    const Complex chi1 = character(build_induced(q, u), alg, h);
    CHECK(std::abs(off_orbit - chi1) > 0.1);
    CHECK(std::abs(off_orbit.real() - chi1.real()) < 1e-12);
  }

  TEST_CASE("central trace integral") {
    const HeckeAlgebra alg(2);
    const auto& f = alg.field();
    const Complex exact_one = f.to_complex(f.inv(alg.poincare_w0()));
    CHECK(std::abs(central_trace_integral(alg, alg.one(Basis::kX), 64) - exact_one) < 1e-10);
    for (LatticeVector l : {LatticeVector{1, 1}, LatticeVector{2, 1}, LatticeVector{2, 2}}) {
      CHECK(std::abs(central_trace_integral(alg, alg.macdonald_P(l), 64)) < 1e-10);
    }
    CHECK_THROWS_AS(central_trace_integral(alg, alg.x_monomial(kAlpha1), 16), std::invalid_argument);
    CHECK_THROWS_AS(central_trace_integral(alg, alg.symmetrizer_1_0(), 16), std::invalid_argument);
  }

  TEST_CASE("traces of x^mu times the symmetrizer") {
    const HeckeAlgebra alg(3);
    const double q = 3.0;
    const auto one0 = alg.symmetrizer_1_0();
    const double w0q = 1 + 2 * q + 2 * q * q + q * q * q;
    const int N = 48;
    for (int m = -4; m <= 4; ++m) {
      for (int n = -4; n <= 4; ++n) {
        const LatticeVector mu{m, n};
        const Scalar exact = alg.trace(alg.x_to_t(alg.bernstein_mul(alg.x_monomial(mu), one0)));
        if (!in_negative_cone(mu) && (m != 0 || n != 0)) {
          CHECK(exact.is_zero());
          continue;
        }
        Complex integral = 0.0;
        for (int j = 0; j < N; ++j) {
          for (int k = 0; k < N; ++k) {
            const Complex t1 = circle_node(j, N);
            const Complex t2 = circle_node(k, N);
            Complex inv_c = 1.0;
            for (LatticeVector a : kPositiveRoots) {
              const Complex y = character_value(a, t1, t2);
              inv_c *= (1.0 - y) / (1.0 - y / q);
            }
            integral += character_value(mu, t1, t2) * inv_c;
          }
        }
        integral /= w0q * N * N;
        CHECK(std::abs(integral - alg.field().to_complex(exact)) < 1e-8);
      }
    }
  }

  TEST_CASE("trace as an integral over a small torus") {
    const HeckeAlgebra alg(2);
    const auto p2 = alg.power(alg.simple_walk(), 2);
    const auto est = series_trace(alg, p2, 0.25, 32);
    CHECK(std::abs(est.value - 1.0 / 6) < 1e-8);
    CHECK_THROWS_AS(series_trace(alg, p2, 0.6, 16), std::domain_error);
  }
}
