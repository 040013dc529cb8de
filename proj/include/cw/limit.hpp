#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cw/hecke.hpp"
#include "cw/reps.hpp"

namespace cw {

// A = sum a_w A_w with a_w >= 0 summing to 1.
struct RadialWalkSpec {
  std::vector<std::pair<AffineElement, Rational>> weights;

  static RadialWalkSpec simple();  // P = (A0 + A1 + A2) / 3
  void validate() const;
  int max_length() const;
};

struct WalkDistribution {
  int n = 0;
  double q = 0.0;
  std::uint64_t trials = 0;  // nonzero for empirical distributions
  std::unordered_map<AffineElement, double, AffineElementHash> mass;

  double mass_at(const AffineElement& w) const;
  // p^{(n)}(c, d) for delta(c, d) = w, i.e. a_w / q^{l(w)}.
  double p_n(const AffineElement& w) const;
  double total() const;
  // Entries sorted by (length, key).
  std::vector<std::pair<AffineElement, double>> sorted() const;
};

struct ExactDistribution {
  int n = 0;
  Rational q;
  std::unordered_map<AffineElement, Rational, AffineElementHash> mass;

  Rational mass_at(const AffineElement& w) const;
  Rational total() const;
};

// Coefficients of walk^n in the A-basis, in doubles.
WalkDistribution exact_distribution(const RadialWalkSpec& walk, int n, double q);
// The same recursion over the rationals.
ExactDistribution exact_distribution_rational(const RadialWalkSpec& walk, int n, const Rational& q);

// Radial chain of the simple walk; trial k draws from a stream seeded by (seed, k).
WalkDistribution mc_simulate(int n, std::uint64_t trials, std::uint64_t seed, double q);

double total_variation(const WalkDistribution& a, const WalkDistribution& b);

// sum a_w A_w as a numeric T-basis element.
HeckeElement to_hecke(const HeckeAlgebra& algebra, const WalkDistribution& dist);

struct SpectralData {
  double q = 0.0;
  std::array<double, 6> lambda{};  // descending
  double a = 0.0;
  double b = 0.0;
  std::array<double, 6> v1{};  // unit, proportional to (a,1,1,a,a,1)
  double beta = 0.0;
  std::array<double, 3> mu{};  // eigenvalues of the induced module at u = 1, descending
};

SpectralData spectral_data(double q);

// Matrices of P in the principal series at e^{i theta} and the induced module at e^{i phi}.
CMatrix principal_P(double q, double theta1, double theta2);
CMatrix induced_P(double q, double phi);

std::array<double, 6> eigen_surface(double theta1, double theta2, double q);
std::array<double, 3> induced_eigenvalues(double phi, double q);

double C_w(const AffineElement& w, double q);
double llt_estimate(const AffineElement& w, int n, double q);

// |1/|c(e^{i theta})|^2 / ((q^6/(q-1)^6) theta1^2 theta2^2 (theta1+theta2)^2) - 1|.
double lemma34_check(double theta1, double theta2, double q);

// Fourier coefficients of 3 sqrt(q) det(pi_{e^{i theta}}(P) - lambda1) sampled on an M x M grid.
struct FourierCoefficient {
  int k1 = 0;
  int k2 = 0;
  double value = 0.0;
};
std::vector<FourierCoefficient> determinant_fourier(double q, int M = 16, double tol = 1e-9);

}  // namespace cw
