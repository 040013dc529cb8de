#include "cw/walks.hpp"

#include <cmath>
#include <stdexcept>

namespace cw {

std::string AlcoveWalk::tag_string() const {
  std::string out;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (k) out += ' ';
    switch (steps[k]) {
      case StepTag::kPosCross:
        out += "C+";
        break;
      case StepTag::kNegCross:
        out += "C-";
        break;
      case StepTag::kPosFold:
        out += "F" + std::to_string(type[k]);
        break;
    }
  }
  return out;
}

namespace {

void extend(AlcoveWalk& partial, const AffineElement& at, std::size_t k, std::vector<AlcoveWalk>& out) {
  if (k == partial.type.size()) {
    partial.end = at;
    out.push_back(partial);
    return;
  }
  const int i = partial.type[k];
  const int sign = crossing_data(at, i).sign;
  if (sign < 0) {
    partial.steps.push_back(StepTag::kPosFold);
    ++partial.folds[i];
    extend(partial, at, k + 1, out);
    --partial.folds[i];
    partial.steps.pop_back();
  }
  partial.steps.push_back(sign > 0 ? StepTag::kPosCross : StepTag::kNegCross);
  extend(partial, at.times_generator(i), k + 1, out);
  partial.steps.pop_back();
}

}  // namespace

std::vector<AlcoveWalk> enumerate(const ReducedWord& type, const AffineElement& start) {
  for (int i : type) {
    if (i < 0 || i > 2) throw std::invalid_argument("walk type uses generators 0, 1, 2");
  }
  if (!is_reduced(type)) throw std::invalid_argument("walk type " + format_word(type) + " is not reduced");
  std::vector<AlcoveWalk> out;
  AlcoveWalk partial;
  partial.start = start;
  partial.type = type;
  extend(partial, start, 0, out);
  return out;
}

AffineElement replay(const AlcoveWalk& p) {
  AffineElement at = p.start;
  for (std::size_t k = 0; k < p.steps.size(); ++k) {
    const int i = p.type[k];
    const int sign = crossing_data(at, i).sign;
    switch (p.steps[k]) {
      case StepTag::kPosCross:
        if (sign < 0) throw std::logic_error("tag C+ on a negative crossing");
        at = at.times_generator(i);
        break;
      case StepTag::kNegCross:
        if (sign > 0) throw std::logic_error("tag C- on a positive crossing");
        at = at.times_generator(i);
        break;
      case StepTag::kPosFold:
        if (sign > 0) throw std::logic_error("fold from the negative side");
        break;
    }
  }
  return at;
}

Scalar q_statistic(const Field& field, const AlcoveWalk& p) {
  const Scalar frak = field.frak();
  Scalar out = field.one();
  for (int k = 0; k < p.fold_count(); ++k) out = field.mul(out, frak);
  return out;
}

HeckeElement expand_T(const HeckeAlgebra& algebra, const ReducedWord& type) {
  const Field& field = algebra.field();
  HeckeElement out(Basis::kX);
  // x_{t_mu u} = x^mu T_{u^{-1}}^{-1}
  for (const AlcoveWalk& p : enumerate(type)) {
    const Scalar weight = q_statistic(field, p);
    const HeckeElement inv = algebra.finite_inverse(p.theta().inverse());
    for (const auto& [u, c] : inv.terms()) out.add({p.wt(), u.theta()}, field.mul(weight, c));
  }
  return out;
}

HeckeElement expand_T(const HeckeAlgebra& algebra, const AffineElement& w) {
  return expand_T(algebra, reduced_word(w));
}

std::vector<MonomialTerm> matrix_element_terms(const AffineElement& w, FiniteWeylElement u,
                                               FiniteWeylElement v) {
  std::vector<MonomialTerm> out;
  const FiniteWeylElement w0 = FiniteWeylElement::longest();
  for (const AlcoveWalk& p : enumerate(reduced_word(w), AffineElement({}, u))) {
    if (p.theta() != v) continue;
    out.push_back({p.fold_count(), -w0.apply(p.wt())});
  }
  return out;
}

Complex matrix_element(double q, const AffineElement& w, FiniteWeylElement u, FiniteWeylElement v,
                       Complex t1, Complex t2) {
  const double frak = std::sqrt(q) - 1.0 / std::sqrt(q);
  Complex total = 0.0;
  for (const MonomialTerm& term : matrix_element_terms(w, u, v)) {
    total += std::pow(frak, term.folds) * character_value(term.exponent, t1, t2);
  }
  return total;
}

}  // namespace cw
