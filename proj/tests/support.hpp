#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "cw/hecke.hpp"

namespace cw::testing {

// Random reduced word of the given length, grown by length-increasing right multiplication.
inline AffineElement random_element(std::mt19937_64& rng, int length) {
  AffineElement w;
  std::uniform_int_distribution<int> pick(0, 2);
  while (w.length() < length) {
    const AffineElement next = w.times_generator(pick(rng));
    if (next.length() > w.length()) w = next;
  }
  return w;
}

// All elements of length <= depth.
inline std::vector<AffineElement> ball(int depth) {
  std::vector<AffineElement> out{AffineElement::identity()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    if (out[head].length() == depth) continue;
    for (int i = 0; i < 3; ++i) {
      const AffineElement next = out[head].times_generator(i);
      if (next.length() > out[head].length() &&
          std::find(out.begin(), out.end(), next) == out.end()) {
        out.push_back(next);
      }
    }
  }
  return out;
}

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Scalar random_scalar(const Field& field, std::mt19937_64& rng) {
  return field.from_rational(random_rational(rng)) + field.mul(field.from_rational(random_rational(rng)), field.sqrt_q());
}

// T-basis element with up to `terms` random terms of length <= max_length.
inline HeckeElement random_hecke(const HeckeAlgebra& algebra, std::mt19937_64& rng, int max_length, int terms) {
  std::uniform_int_distribution<int> len(0, max_length);
  HeckeElement h(Basis::kT);
  for (int k = 0; k < terms; ++k) h.add(random_element(rng, len(rng)), random_scalar(algebra.field(), rng));
  return h;
}

inline LatticeVector random_lattice(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> c(-bound, bound);
  return {c(rng), c(rng)};
}

// Point of the unit torus away from the walls t^a = 1.
inline std::pair<Complex, Complex> random_torus(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.1, 2 * std::numbers::pi - 0.1);
  while (true) {
    const Complex t1 = std::polar(1.0, angle(rng));
    const Complex t2 = std::polar(1.0, angle(rng));
    if (std::abs(t1 * t2 - 1.0) > 0.1) return {t1, t2};
  }
}

// Generic complex point with moduli in [0.5, 1.5].
inline std::pair<Complex, Complex> random_generic(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> radius(0.5, 1.5);
  while (true) {
    const Complex t1 = std::polar(radius(rng), angle(rng));
    const Complex t2 = std::polar(radius(rng), angle(rng));
    bool ok = true;
    for (Complex v : {t1, t2, t1 * t2}) ok = ok && std::abs(v - 1.0) > 0.1;
    if (ok) return {t1, t2};
  }
}

}  // namespace cw::testing
