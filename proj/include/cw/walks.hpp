#pragma once

#include <array>
#include <string>
#include <vector>

#include "cw/hecke.hpp"
#include "cw/weyl.hpp"

namespace cw {

enum class StepTag { kPosCross, kNegCross, kPosFold };

struct AlcoveWalk {
  AffineElement start;
  ReducedWord type;
  std::vector<StepTag> steps;
  AffineElement end;
  std::array<int, 3> folds{};  // f0, f1, f2

  LatticeVector wt() const { return end.wt(); }
  FiniteWeylElement theta() const { return end.theta(); }
  int fold_count() const { return folds[0] + folds[1] + folds[2]; }
  std::string tag_string() const;  // e.g. "C+ C- F1 C+"
};

// All positively folded walks of the given reduced type from start, fold-first depth-first order.
std::vector<AlcoveWalk> enumerate(const ReducedWord& type, const AffineElement& start = {});

// Replays the steps from start; throws if a tag contradicts the geometry.
AffineElement replay(const AlcoveWalk& p);

// Q(p) = frak^{number of folds}.
Scalar q_statistic(const Field& field, const AlcoveWalk& p);

// T_w = sum over walks of type reduced_word(w) of Q(p) x_{end(p)}, as an X-basis element.
HeckeElement expand_T(const HeckeAlgebra& algebra, const AffineElement& w);
HeckeElement expand_T(const HeckeAlgebra& algebra, const ReducedWord& type);

// One term frak^folds * t^exponent of a matrix element.
struct MonomialTerm {
  int folds = 0;
  LatticeVector exponent;
};

// [pi_t(T_{w^{-1}})]_{v,u} in the basis T_u^{-1} T_{w0} (x) v_t, as a list of monomials.
std::vector<MonomialTerm> matrix_element_terms(const AffineElement& w, FiniteWeylElement u,
                                               FiniteWeylElement v);
Complex matrix_element(double q, const AffineElement& w, FiniteWeylElement u, FiniteWeylElement v,
                       Complex t1, Complex t2);

}  // namespace cw
