#include "cw/reps.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace cw {

CMatrix Representation::word(const ReducedWord& w) const {
  CMatrix m = CMatrix::Identity(dim(), dim());
  for (int i : w) m = m * gens_.at(i);
  return m;
}

double Representation::relation_residual() const {
  const double frak = std::sqrt(q_) - 1.0 / std::sqrt(q_);
  const CMatrix id = CMatrix::Identity(dim(), dim());
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    const CMatrix quad = gens_[i] * gens_[i] - id - frak * gens_[i];
    worst = std::max(worst, quad.cwiseAbs().maxCoeff());
    for (int j = i + 1; j < 3; ++j) {
      const CMatrix braid = gens_[i] * gens_[j] * gens_[i] - gens_[j] * gens_[i] * gens_[j];
      worst = std::max(worst, braid.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

Representation build_principal(double q, CentralCharacter t) {
  if (t.t1 == 0.0 || t.t2 == 0.0) throw std::invalid_argument("central character must be nonzero");
  const double frak = std::sqrt(q) - 1.0 / std::sqrt(q);
  std::array<CMatrix, 3> gens;
  for (auto& g : gens) g = CMatrix::Zero(6, 6);
  const FiniteWeylElement s_phi = FiniteWeylElement::longest();
  for (FiniteWeylElement w : FiniteWeylElement::all()) {
    const int col = w.index();
    for (int i = 1; i <= 2; ++i) {
      const FiniteWeylElement sw = FiniteWeylElement::generator(i) * w;
      gens[i](sw.index(), col) += 1.0;
      if (sw.length() < w.length()) gens[i](col, col) += frak;
    }
    // T0 (T_w (x) v) = t^{-w^{-1} phi} T_{s_phi w} (x) v, plus frak T_w (x) v when w^{-1} phi > 0.
    const LatticeVector beta = w.inverse().apply(kPhi);
    gens[0]((s_phi * w).index(), col) += t.power(-beta);
    if (is_positive_root(beta)) gens[0](col, col) += frak;
  }
  return {RepKind::kPrincipal, q, std::move(gens)};
}

Representation build_induced(double q, Complex u) {
  if (u == 0.0) throw std::invalid_argument("induced parameter must be nonzero");
  const double r = 1.0 / std::sqrt(q);
  const double frak = std::sqrt(q) - r;
  std::array<CMatrix, 3> g;
  g[0] = CMatrix::Zero(3, 3);
  g[0] << frak, 0, -u, 0, -r, 0, -1.0 / u, 0, 0;
  g[1] = CMatrix::Zero(3, 3);
  g[1] << -r, 0, 0, 0, 0, 1, 0, 1, frak;
  g[2] = CMatrix::Zero(3, 3);
  g[2] << 0, 1, 0, 1, frak, 0, 0, 0, -r;
  return {RepKind::kInduced, q, std::move(g)};
}

Representation build_one_dim(double q) {
  std::array<CMatrix, 3> g;
  for (auto& m : g) m = CMatrix::Constant(1, 1, -1.0 / std::sqrt(q));
  return {RepKind::kOneDim, q, std::move(g)};
}

CMatrix evaluate(const Representation& rep, const HeckeAlgebra& algebra, const HeckeElement& h) {
  const HeckeElement t = algebra.to_basis(h, Basis::kT);
  return EvaluationPlan(algebra, {t}).matrix(rep, 0);
}

Complex character(const Representation& rep, const HeckeAlgebra& algebra, const HeckeElement& h) {
  const HeckeElement t = algebra.to_basis(h, Basis::kT);
  return EvaluationPlan(algebra, {t}).characters(rep)[0];
}

bool is_principal_irreducible(double q, CentralCharacter t, double tol) {
  for (Complex v : {t.t1, t.t2, t.t1 * t.t2}) {
    if (std::abs(v - q) <= tol * q || std::abs(v - 1.0 / q) <= tol / q) return false;
  }
  return true;
}

CMatrix primed_basis(const HeckeAlgebra& algebra) {
  CMatrix b = CMatrix::Zero(6, 6);
  const HeckeElement t_w0 = algebra.T({{}, FiniteWeylElement::longest()});
  for (FiniteWeylElement u : FiniteWeylElement::all()) {
    const HeckeElement v = algebra.mul(algebra.finite_inverse(u), t_w0);
    for (const auto& [w, c] : v.terms()) b(w.theta().index(), u.index()) = algebra.field().to_complex(c);
  }
  return b;
}

EvaluationPlan::EvaluationPlan(const HeckeAlgebra& algebra, const std::vector<HeckeElement>& elements) {
  std::unordered_map<AffineElement, int, AffineElementHash> index;
  index.emplace(AffineElement::identity(), 0);
  parent_.push_back(-1);
  generator_.push_back(-1);
  for (const HeckeElement& h : elements) {
    if (h.basis() != Basis::kT) throw std::invalid_argument("evaluation plan needs T-basis elements");
    std::vector<std::pair<int, Complex>> coeffs;
    for (const auto& [w, c] : h.sorted_terms()) {
      AffineElement prefix;
      int node = 0;
      for (int i : reduced_word(w)) {
        prefix = prefix.times_generator(i);
        auto [it, inserted] = index.try_emplace(prefix, static_cast<int>(parent_.size()));
        if (inserted) {
          parent_.push_back(node);
          generator_.push_back(i);
        }
        node = it->second;
      }
      coeffs.emplace_back(node, algebra.field().to_complex(c));
    }
    coefficients_.push_back(std::move(coeffs));
  }
}

void EvaluationPlan::fill(const Representation& rep, std::vector<Complex>& store) const {
  const int d = rep.dim();
  const std::size_t block = static_cast<std::size_t>(d) * d;
  store.assign(parent_.size() * block, Complex{});
  // sparse columns of the generators
  std::array<std::vector<std::vector<std::pair<int, Complex>>>, 3> cols;
  for (int g = 0; g < 3; ++g) {
    cols[g].resize(d);
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const Complex v = rep.T(g)(k, j);
        if (v != 0.0) cols[g][j].emplace_back(k, v);
      }
    }
  }
  for (int k = 0; k < d; ++k) store[k * d + k] = 1.0;  // column-major identity
  for (std::size_t node = 1; node < parent_.size(); ++node) {
    const Complex* p = &store[parent_[node] * block];
    Complex* out = &store[node * block];
    for (int j = 0; j < d; ++j) {
      Complex* oc = out + j * d;
      for (const auto& [k, g] : cols[generator_[node]][j]) {
        const Complex* pc = p + k * d;
        for (int r = 0; r < d; ++r) oc[r] += pc[r] * g;
      }
    }
  }
}

std::vector<Complex> EvaluationPlan::characters(const Representation& rep) const {
  std::vector<Complex> store;
  fill(rep, store);
  const int d = rep.dim();
  const std::size_t block = static_cast<std::size_t>(d) * d;
  std::vector<Complex> traces(parent_.size());
  for (std::size_t node = 0; node < parent_.size(); ++node) {
    Complex tr = 0.0;
    for (int r = 0; r < d; ++r) tr += store[node * block + r * d + r];
    traces[node] = tr;
  }
  std::vector<Complex> out;
  out.reserve(coefficients_.size());
  for (const auto& coeffs : coefficients_) {
    Complex total = 0.0;
    for (const auto& [node, c] : coeffs) total += c * traces[node];
    out.push_back(total);
  }
  return out;
}

CMatrix EvaluationPlan::matrix(const Representation& rep, std::size_t element) const {
  std::vector<Complex> store;
  fill(rep, store);
  const int d = rep.dim();
  const std::size_t block = static_cast<std::size_t>(d) * d;
  CMatrix m = CMatrix::Zero(d, d);
  for (const auto& [node, c] : coefficients_.at(element)) {
    m += c * Eigen::Map<const CMatrix>(&store[node * block], d, d);
  }
  return m;
}

}  // namespace cw
