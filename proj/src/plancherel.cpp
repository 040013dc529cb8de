#include "cw/plancherel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cw/parallel.hpp"

namespace cw {

namespace {

// Componentwise maximum of -nu over the X-basis support x^nu T_u of h.
LatticeVector support_corner(const HeckeAlgebra& algebra, const HeckeElement& h) {
  const HeckeElement x = algebra.to_basis(h, Basis::kX);
  if (x.empty()) return {};
  LatticeVector sigma{std::numeric_limits<int>::min(), std::numeric_limits<int>::min()};
  for (const auto& [key, c] : x.terms()) {
    sigma.m = std::max(sigma.m, -key.wt().m);
    sigma.n = std::max(sigma.n, -key.wt().n);
  }
  return sigma;
}

}  // namespace

Complex c_value(double q, Complex t1, Complex t2) {
  Complex num = 1.0;
  Complex den = 1.0;
  for (LatticeVector a : kPositiveRoots) {
    const Complex y = character_value(-a, t1, t2);
    num *= 1.0 - y / q;
    den *= 1.0 - y;
  }
  if (std::abs(den) < 1e-14) throw std::domain_error("c(t) has a pole: t^a = 1 for a positive root");
  return num / den;
}

Complex c1_value(double q, Complex u) {
  const Complex den = 1.0 - std::sqrt(q) / u;
  if (std::abs(den) < 1e-14) throw std::domain_error("c1(u) has a pole at u = q^{1/2}");
  return (1.0 - std::pow(q, -1.5) / u) / den;
}

double principal_density(double q, Complex t1, Complex t2) {
  double value = 1.0;
  for (LatticeVector a : kPositiveRoots) {
    const Complex y = character_value(-a, t1, t2);
    value *= std::norm(1.0 - y) / std::norm(1.0 - y / q);
  }
  return value;
}

double induced_density(double q, Complex u) {
  return std::norm(1.0 - std::sqrt(q) / u) / std::norm(1.0 - std::pow(q, -1.5) / u);
}

Complex circle_node(int k, int N) {
  return std::polar(1.0, 2.0 * std::numbers::pi * (k + 0.5) / N);
}

PlancherelWeights plancherel_weights(double q) {
  return {1.0 / (6.0 * q * q * q), (q - 1) * (q - 1) / (q * q * (q * q - 1)),
          (q - 1) * (q - 1) * (q - 1) / (q * q * q - 1)};
}

std::vector<Complex> plancherel_traces(const HeckeAlgebra& algebra, const std::vector<HeckeElement>& hs,
                                       int N) {
  if (N < 2) throw std::invalid_argument("grid size must be at least 2");
  std::vector<HeckeElement> t_elements;
  for (const auto& h : hs) t_elements.push_back(algebra.to_basis(h, Basis::kT));
  const EvaluationPlan plan(algebra, t_elements);
  const double q = algebra.field().q_double();
  const PlancherelWeights wts = plancherel_weights(q);
  const std::size_t count = hs.size();

  // Row sums are kept separately and added in row order, so results do not depend on threads.
  std::vector<std::vector<Complex>> rows(N, std::vector<Complex>(count));
  parallel_for(N, [&](std::size_t j) {
    const Complex t1 = circle_node(static_cast<int>(j), N);
    std::vector<Complex>& acc = rows[j];
    for (int k = 0; k < N; ++k) {
      const Complex t2 = circle_node(k, N);
      const double density = principal_density(q, t1, t2);
      const auto chars = plan.characters(build_principal(q, {t1, t2}));
      for (std::size_t e = 0; e < count; ++e) acc[e] += chars[e] * density;
    }
  });
  std::vector<Complex> torus(count), circle(count);
  for (int j = 0; j < N; ++j) {
    for (std::size_t e = 0; e < count; ++e) torus[e] += rows[j][e];
  }
  for (int k = 0; k < N; ++k) {
    const Complex u = circle_node(k, N);
    const double density = induced_density(q, u);
    const auto chars = plan.characters(build_induced(q, u));
    for (std::size_t e = 0; e < count; ++e) circle[e] += chars[e] * density;
  }
  const auto atom = plan.characters(build_one_dim(q));
  std::vector<Complex> out(count);
  const double n2 = static_cast<double>(N) * N;
  for (std::size_t e = 0; e < count; ++e) {
    out[e] = wts.torus * torus[e] / n2 + wts.circle * circle[e] / static_cast<double>(N) +
             wts.atom * atom[e];
  }
  return out;
}

TraceEstimate plancherel_trace(const HeckeAlgebra& algebra, const HeckeElement& h, int N) {
  TraceEstimate est;
  est.N = N;
  est.value = plancherel_traces(algebra, {h}, N)[0];
  if (N >= 32) est.abs_err_estimate = std::abs(est.value - plancherel_traces(algebra, {h}, N / 2)[0]);
  return est;
}

Complex F_closed_one(double q, Complex t1, Complex t2) {
  return 1.0 / (q * q * q * c_value(q, t1, t2) * c_value(q, 1.0 / t1, 1.0 / t2));
}

Complex F_closed_symmetrizer(double q, Complex t1, Complex t2) {
  const double w0q = 1 + 2 * q + 2 * q * q + q * q * q;
  return 1.0 / (w0q * c_value(q, 1.0 / t1, 1.0 / t2));
}

Complex F_series(const HeckeAlgebra& algebra, const HeckeElement& h, Complex t1, Complex t2, int depth) {
  const double q = algebra.field().q_double();
  if (std::abs(t1) >= 1.0 / q || std::abs(t2) >= 1.0 / q || std::abs(t1 * t2) >= 1.0 / q) {
    throw std::domain_error("F_series converges only for |t^a| < 1/q on every positive coroot");
  }
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  const Field& field = algebra.field();
  // Tr(x^mu h) vanishes unless mu lies in sigma - Q+, so the sum runs over mu = sigma - (a, b).
  const LatticeVector sigma = support_corner(algebra, h);
  const HeckeElement shifted = algebra.left_mul_x(sigma, algebra.to_basis(h, Basis::kT));
  // Tr(x^{-a alpha1 - b alpha2} h) = Tr((x^{-b alpha2} h) x^{-a alpha1}) = sum_w G_b[w] R_a[w^{-1}].
  std::vector<HeckeElement> left;
  left.push_back(shifted);
  for (int b = 1; b <= depth; ++b) left.push_back(algebra.left_mul_x(-kAlpha2, left.back()));
  std::vector<HeckeElement> right_inverted;
  HeckeElement r = algebra.one();
  for (int a = 0; a <= depth; ++a) {
    if (a > 0) r = algebra.right_mul_x(r, -kAlpha1);
    HeckeElement inv(Basis::kT);
    for (const auto& [w, c] : r.terms()) inv.add(w.inverse(), c);
    right_inverted.push_back(std::move(inv));
  }
  Complex total = 0.0;
  for (int a = 0; a <= depth; ++a) {
    for (int b = 0; b <= depth; ++b) {
      const HeckeElement& g = left[b];
      const HeckeElement& ri = right_inverted[a];
      const bool g_small = g.size() <= ri.size();
      const HeckeElement& small = g_small ? g : ri;
      const HeckeElement& large = g_small ? ri : g;
      Scalar tr = field.zero();
      for (const auto& [w, c] : small.terms()) {
        if (const Scalar* other = large.find(w)) tr += field.mul(c, *other);
      }
      if (tr.is_zero()) continue;
      total += field.to_complex(tr) * character_value({a, b}, t1, t2);
    }
  }
  return total * character_value(-sigma, t1, t2);
}

double F_series_tail_bound(const HeckeAlgebra& algebra, const HeckeElement& h, Complex t1, Complex t2, int depth) {
  const double q = algebra.field().q_double();
  const double base = 2 * std::sqrt(q);
  const double r1 = std::abs(t1);
  const double r2 = std::abs(t2);
  // l(t_{-(a,b)}) is linear between the rays (1,0), (2,1), (1,2), (0,1).
  const double rates[] = {std::pow(base, 4) * r1, std::pow(base, 6) * r1 * r1 * r2,
                          std::pow(base, 6) * r1 * r2 * r2, std::pow(base, 4) * r2};
  double worst = 0.0;
  for (double r : rates) worst = std::max(worst, r);
  if (worst >= 1.0) return std::numeric_limits<double>::infinity();
  const int cutoff = std::min(4000, depth + 2 + static_cast<int>(std::ceil(50.0 / -std::log(worst))));
  // x^lambda T_u expands into at most (1 + sqrt q)^4 weighted x_v with l(v) <= l(t_lambda) + 3.
  const double spread = std::pow(1 + std::sqrt(q), 4) * std::pow(base, 3);
  const HeckeElement x = algebra.to_basis(h, Basis::kX);
  const LatticeVector sigma = support_corner(algebra, h);
  const double prefactor = std::abs(character_value(-sigma, t1, t2));
  double bound = 0.0;
  for (const auto& [w, c] : x.sorted_terms()) {
    const double size = std::abs(algebra.field().to_complex(c)) * spread;
    for (int a = 0; a <= cutoff; ++a) {
      for (int b = 0; b <= cutoff; ++b) {
        if (a <= depth && b <= depth) continue;
        const LatticeVector lambda = w.wt() + sigma - LatticeVector{a, b};
        int len = 0;
        for (LatticeVector alpha : kPositiveRoots) len += std::abs(pairing(lambda, alpha));
        bound += size * std::pow(base, len) * std::pow(r1, a) * std::pow(r2, b);
      }
    }
  }
  return bound * prefactor;
}

Complex f_t(const HeckeAlgebra& algebra, const HeckeElement& h, Complex t1, Complex t2) {
  return algebra.tau_expansion_at(h, t1, t2)[0];
}

Complex central_trace_integral(const HeckeAlgebra& algebra, const HeckeElement& p, int N) {
  const Polynomial poly = algebra.to_polynomial(algebra.to_basis(p, Basis::kX));
  if (!algebra.is_symmetric(poly)) throw std::invalid_argument("central_trace_integral needs a W0-symmetric polynomial");
  const double q = algebra.field().q_double();
  std::vector<Complex> rows(N);
  parallel_for(N, [&](std::size_t j) {
    const Complex t1 = circle_node(static_cast<int>(j), N);
    Complex acc = 0.0;
    for (int k = 0; k < N; ++k) {
      const Complex t2 = circle_node(k, N);
      acc += algebra.evaluate_polynomial(poly, t1, t2) * principal_density(q, t1, t2);
    }
    rows[j] = acc;
  });
  Complex total = 0.0;
  for (const Complex& v : rows) total += v;
  return total / (6.0 * q * q * q * static_cast<double>(N) * N);
}

TraceEstimate series_trace(const HeckeAlgebra& algebra, const HeckeElement& h, double r, int N) {
  const double q = algebra.field().q_double();
  if (r <= 0 || r >= 1.0 / q) throw std::domain_error("series_trace needs 0 < r < 1/q");
  const HeckeElement x = algebra.to_basis(h, Basis::kX);
  auto integrate = [&](int n) {
    std::vector<Complex> rows(n);
    parallel_for(n, [&](std::size_t j) {
      const Complex t1 = r * circle_node(static_cast<int>(j), n);
      Complex acc = 0.0;
      for (int k = 0; k < n; ++k) {
        const Complex t2 = r * circle_node(k, n);
        acc += f_t(algebra, x, t1, t2) * F_closed_one(q, t1, t2);
      }
      rows[j] = acc;
    });
    Complex total = 0.0;
    for (const Complex& v : rows) total += v;
    return total / (static_cast<double>(n) * n);
  };
  TraceEstimate est;
  est.N = N;
  est.value = integrate(N);
  est.abs_err_estimate = std::abs(est.value - integrate(N / 2));
  return est;
}

}  // namespace cw
