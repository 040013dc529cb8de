#include "cw/limit.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "cw/parallel.hpp"
#include "cw/plancherel.hpp"

namespace cw {

RadialWalkSpec RadialWalkSpec::simple() {
  RadialWalkSpec spec;
  for (int i = 0; i < 3; ++i) spec.weights.emplace_back(AffineElement::generator(i), Rational(1, 3));
  return spec;
}

void RadialWalkSpec::validate() const {
  if (weights.empty()) throw std::invalid_argument("radial walk has no weights");
  Rational total = 0;
  for (const auto& [w, a] : weights) {
    if (a < 0) throw std::invalid_argument("radial walk weight is negative at " + to_string(w));
    total += a;
  }
  if (total != 1) throw std::invalid_argument("radial walk weights sum to " + format_rational(total));
}

int RadialWalkSpec::max_length() const {
  int out = 0;
  for (const auto& [w, a] : weights) out = std::max(out, w.length());
  return out;
}

double WalkDistribution::mass_at(const AffineElement& w) const {
  const auto it = mass.find(w);
  return it == mass.end() ? 0.0 : it->second;
}

double WalkDistribution::p_n(const AffineElement& w) const {
  return mass_at(w) * std::pow(q, -w.length());
}

double WalkDistribution::total() const {
  double s = 0.0;
  for (const auto& entry : sorted()) s += entry.second;
  return s;
}

std::vector<std::pair<AffineElement, double>> WalkDistribution::sorted() const {
  std::vector<std::pair<AffineElement, double>> out(mass.begin(), mass.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    const int lx = x.first.length();
    const int ly = y.first.length();
    return lx != ly ? lx < ly : x.first.key() < y.first.key();
  });
  return out;
}

Rational ExactDistribution::mass_at(const AffineElement& w) const {
  const auto it = mass.find(w);
  return it == mass.end() ? Rational(0) : it->second;
}

Rational ExactDistribution::total() const {
  Rational s = 0;
  for (const auto& [w, m] : mass) s += m;
  return s;
}

namespace {

// All elements of length <= depth in breadth-first order, with right neighbours.
struct Ball {
  std::vector<AffineElement> elements;
  std::vector<int> length;
  std::vector<int> neighbour;     // 3 * index + i -> index of w s_i, or -1 beyond the ball
  std::vector<std::size_t> upto;  // upto[k] = number of elements of length <= k

  explicit Ball(int depth) {
    std::unordered_map<AffineElement, int, AffineElementHash> index;
    elements.push_back(AffineElement::identity());
    length.push_back(0);
    index.emplace(elements[0], 0);
    for (std::size_t head = 0; head < elements.size(); ++head) {
      if (length[head] == depth) continue;
      for (int i = 0; i < 3; ++i) {
        const AffineElement next = elements[head].times_generator(i);
        if (index.try_emplace(next, static_cast<int>(elements.size())).second) {
          elements.push_back(next);
          length.push_back(length[head] + 1);
        }
      }
    }
    neighbour.assign(3 * elements.size(), -1);
    for (std::size_t k = 0; k < elements.size(); ++k) {
      for (int i = 0; i < 3; ++i) {
        const auto it = index.find(elements[k].times_generator(i));
        if (it != index.end()) neighbour[3 * k + i] = it->second;
      }
    }
    upto.assign(depth + 1, 0);
    for (int l : length) ++upto[l];
    for (int k = 1; k <= depth; ++k) upto[k] += upto[k - 1];
  }
};

// dst += s * src * A_i over the first `active` elements.
void apply_generator(const Ball& ball, const std::vector<double>& src, std::vector<double>& dst, int i,
                     double s, std::size_t active, double q) {
  const double stay = 1.0 - 1.0 / q;
  for (std::size_t k = 0; k < active; ++k) {
    const double m = src[k];
    if (m == 0.0) continue;
    const int j = ball.neighbour[3 * k + i];
    if (ball.length[j] > ball.length[k]) {
      dst[j] += s * m;
    } else {
      dst[j] += s * m / q;
      dst[k] += s * m * stay;
    }
  }
}

void apply_generator(const std::unordered_map<AffineElement, Rational, AffineElementHash>& src,
                     std::unordered_map<AffineElement, Rational, AffineElementHash>& dst, int i,
                     const Rational& s, const Rational& q) {
  const Rational stay = 1 - 1 / q;
  for (const auto& [w, m] : src) {
    const AffineElement ws = w.times_generator(i);
    if (ws.length() > w.length()) {
      dst[ws] += s * m;
    } else {
      dst[ws] += s * m / q;
      dst[w] += s * m * stay;
    }
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

WalkDistribution exact_distribution(const RadialWalkSpec& walk, int n, double q) {
  if (n < 0) throw std::invalid_argument("step count must be nonnegative");
  if (!(q > 1.0)) throw std::invalid_argument("q must exceed 1");
  walk.validate();
  const int step = walk.max_length();
  const Ball ball(n * step);
  std::vector<double> cur(ball.elements.size(), 0.0);
  cur[0] = 1.0;
  std::vector<double> next(cur.size());
  std::vector<double> tmp(cur.size());
  std::vector<double> tmp2(cur.size());
  for (int k = 0; k < n; ++k) {
    std::fill(next.begin(), next.end(), 0.0);
    for (const auto& [w, a] : walk.weights) {
      const double weight = a.get_d();
      const ReducedWord word = reduced_word(w);
      int reach = k * step;
      if (word.size() == 1) {
        apply_generator(ball, cur, next, word[0], weight, ball.upto[reach], q);
        continue;
      }
      tmp = cur;
      for (int i : word) {
        std::fill(tmp2.begin(), tmp2.end(), 0.0);
        apply_generator(ball, tmp, tmp2, i, 1.0, ball.upto[reach], q);
        std::swap(tmp, tmp2);
        ++reach;
      }
      for (std::size_t j = 0; j < ball.upto[reach]; ++j) next[j] += weight * tmp[j];
    }
    std::swap(cur, next);
  }
  WalkDistribution out;
  out.n = n;
  out.q = q;
  for (std::size_t k = 0; k < cur.size(); ++k) {
    if (cur[k] != 0.0) out.mass.emplace(ball.elements[k], cur[k]);
  }
  return out;
}

ExactDistribution exact_distribution_rational(const RadialWalkSpec& walk, int n, const Rational& q) {
  if (n < 0) throw std::invalid_argument("step count must be nonnegative");
  if (q <= 1) throw std::invalid_argument("q must exceed 1");
  walk.validate();
  using Map = std::unordered_map<AffineElement, Rational, AffineElementHash>;
  Map cur{{AffineElement::identity(), Rational(1)}};
  for (int k = 0; k < n; ++k) {
    Map next;
    for (const auto& [w, a] : walk.weights) {
      Map tmp = cur;
      for (int i : reduced_word(w)) {
        Map out;
        apply_generator(tmp, out, i, Rational(1), q);
        tmp = std::move(out);
      }
      for (const auto& [x, m] : tmp) next[x] += a * m;
    }
    std::erase_if(next, [](const auto& entry) { return entry.second == 0; });
    cur = std::move(next);
  }
  return {n, q, std::move(cur)};
}

WalkDistribution mc_simulate(int n, std::uint64_t trials, std::uint64_t seed, double q) {
  if (n < 0) throw std::invalid_argument("step count must be nonnegative");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (!(q > 1.0)) throw std::invalid_argument("q must exceed 1");
  constexpr std::size_t kChunks = 64;
  using Counts = std::unordered_map<AffineElement, std::uint64_t, AffineElementHash>;
  std::vector<Counts> counts(kChunks);
  const double fall = 1.0 / q;
  parallel_for(kChunks, [&](std::size_t c) {
    const std::uint64_t begin = trials * c / kChunks;
    const std::uint64_t end = trials * (c + 1) / kChunks;
    for (std::uint64_t t = begin; t < end; ++t) {
      std::mt19937_64 rng(splitmix64(seed ^ splitmix64(t)));
      std::uniform_int_distribution<int> pick(0, 2);
      std::uniform_real_distribution<double> coin(0.0, 1.0);
      AffineElement w;
      int len = 0;
      for (int k = 0; k < n; ++k) {
        const AffineElement ws = w.times_generator(pick(rng));
        const int lws = ws.length();
        if (lws > len || coin(rng) < fall) {
          w = ws;
          len = lws;
        }
      }
      ++counts[c][w];
    }
  });
  Counts total;
  for (const Counts& c : counts) {
    for (const auto& [w, k] : c) total[w] += k;
  }
  WalkDistribution out;
  out.n = n;
  out.q = q;
  out.trials = trials;
  for (const auto& [w, k] : total) out.mass.emplace(w, static_cast<double>(k) / static_cast<double>(trials));
  return out;
}

double total_variation(const WalkDistribution& a, const WalkDistribution& b) {
  double s = 0.0;
  for (const auto& [w, m] : a.sorted()) s += std::abs(m - b.mass_at(w));
  for (const auto& [w, m] : b.sorted()) {
    if (!a.mass.contains(w)) s += m;
  }
  return 0.5 * s;
}

HeckeElement to_hecke(const HeckeAlgebra& algebra, const WalkDistribution& dist) {
  const Field& field = algebra.field();
  HeckeElement out(Basis::kT);
  for (const auto& [w, m] : dist.sorted()) {
    out.add(w, field.mul(field.from_rational(Rational(m)), field.q_half_power(-w.length())));
  }
  return out;
}

SpectralData spectral_data(double q) {
  if (!(q > 1.0)) throw std::invalid_argument("q must exceed 1");
  SpectralData d;
  d.q = q;
  const double s = std::sqrt(q * q + 34 * q + 1);
  const double rq = std::sqrt(q);
  const double l1 = (3 * (q - 1) + s) / (6 * q);
  const double l2 = 2 * (q - 1) / (3 * q);
  const double l4 = (q - 1) / (3 * q);
  const double l6 = (3 * (q - 1) - s) / (6 * q);
  d.lambda = {l1, l2, l2, l4, l4, l6};
  d.a = (s - (q - 1)) / (6 * rq);
  d.b = (q - 1 + s) / (6 * rq);
  const double norm = std::sqrt(3 * d.a * d.a + 3);
  d.v1 = {d.a / norm, 1 / norm, 1 / norm, d.a / norm, d.a / norm, 1 / norm};
  d.beta = 2 / (9 * l1 * s);
  const double m1 = (rq - 2 / rq + 1) / (3 * rq);
  const double m3 = (rq - 2 / rq - 2) / (3 * rq);
  d.mu = {m1, m1, m3};
  return d;
}

CMatrix principal_P(double q, double theta1, double theta2) {
  const Representation rep = build_principal(q, {std::polar(1.0, theta1), std::polar(1.0, theta2)});
  return (rep.T(0) + rep.T(1) + rep.T(2)) / (3 * std::sqrt(q));
}

CMatrix induced_P(double q, double phi) {
  const Representation rep = build_induced(q, std::polar(1.0, phi));
  return (rep.T(0) + rep.T(1) + rep.T(2)) / (3 * std::sqrt(q));
}

namespace {

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const CMatrix& m) {
  const Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
  std::array<double, N> out{};
  for (std::size_t k = 0; k < N; ++k) out[k] = solver.eigenvalues()(static_cast<Eigen::Index>(N - 1 - k));
  return out;
}

}  // namespace

std::array<double, 6> eigen_surface(double theta1, double theta2, double q) {
  return hermitian_eigenvalues<6>(principal_P(q, theta1, theta2));
}

std::array<double, 3> induced_eigenvalues(double phi, double q) {
  return hermitian_eigenvalues<3>(induced_P(q, phi));
}

double C_w(const AffineElement& w, double q) {
  const SpectralData d = spectral_data(q);
  const Representation rep = build_principal(q, {1.0, 1.0});
  const AffineElement inv = w.inverse();
  const CMatrix a = rep.word(reduced_word(inv)) * std::pow(q, -0.5 * inv.length());
  const Eigen::Map<const Eigen::VectorXd> v(d.v1.data(), 6);
  const Eigen::VectorXcd vc = v.cast<Complex>();
  return (vc.transpose() * a * vc)(0).real();
}

double llt_estimate(const AffineElement& w, int n, double q) {
  if (n < 1) throw std::invalid_argument("llt_estimate needs n >= 1");
  const SpectralData d = spectral_data(q);
  const double constant = C_w(w, q) * std::pow(q, 3 - 2 * w.length()) /
                          (27 * std::sqrt(3.0) * std::pow(d.beta, 4) * std::numbers::pi * std::pow(q - 1, 6));
  return constant * std::exp(n * std::log(d.lambda[0]) - 4 * std::log(static_cast<double>(n)));
}

double lemma34_check(double theta1, double theta2, double q) {
  const double norm = std::hypot(theta1, theta2);
  if (!(norm > 0.0) || norm > 0.1) throw std::domain_error("lemma34_check needs 0 < |theta| <= 0.1");
  const double g = theta1 * theta2 * (theta1 + theta2);
  if (std::abs(g) <= 1e-14 * norm * norm * norm) throw std::domain_error("theta lies on the zero set of g");
  const double exact = principal_density(q, std::polar(1.0, theta1), std::polar(1.0, theta2));
  const double model = std::pow(q / (q - 1), 6) * g * g;
  return std::abs(exact / model - 1.0);
}

std::vector<FourierCoefficient> determinant_fourier(double q, int M, double tol) {
  if (M < 4) throw std::invalid_argument("grid must have at least 4 points per axis");
  const double l1 = spectral_data(q).lambda[0];
  const CMatrix id = CMatrix::Identity(6, 6);
  std::vector<Complex> samples(static_cast<std::size_t>(M) * M);
  for (int j = 0; j < M; ++j) {
    for (int k = 0; k < M; ++k) {
      const double t1 = 2 * std::numbers::pi * j / M;
      const double t2 = 2 * std::numbers::pi * k / M;
      samples[j * M + k] = 3 * std::sqrt(q) * (principal_P(q, t1, t2) - l1 * id).determinant();
    }
  }
  std::vector<FourierCoefficient> out;
  for (int k1 = -M / 2 + 1; k1 < M / 2; ++k1) {
    for (int k2 = -M / 2 + 1; k2 < M / 2; ++k2) {
      Complex c = 0.0;
      for (int j = 0; j < M; ++j) {
        for (int k = 0; k < M; ++k) {
          c += samples[j * M + k] * std::polar(1.0, -2 * std::numbers::pi * (k1 * j + k2 * k) / M);
        }
      }
      c /= static_cast<double>(M) * M;
      if (std::abs(c) > tol) out.push_back({k1, k2, c.real()});
    }
  }
  return out;
}

}  // namespace cw
