#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "cw/hecke.hpp"

namespace cw {

using CMatrix = Eigen::MatrixXcd;

struct CentralCharacter {
  Complex t1{1.0};
  Complex t2{1.0};
  Complex power(LatticeVector mu) const { return character_value(mu, t1, t2); }
};

enum class RepKind { kPrincipal, kInduced, kOneDim };

// Generator matrices pi(T_0), pi(T_1), pi(T_2); columns are images of basis vectors.
class Representation {
 public:
  Representation(RepKind kind, double q, std::array<CMatrix, 3> generators)
      : kind_(kind), q_(q), gens_(std::move(generators)) {}

  RepKind kind() const { return kind_; }
  double q() const { return q_; }
  int dim() const { return static_cast<int>(gens_[0].rows()); }
  const CMatrix& T(int i) const { return gens_.at(i); }
  CMatrix A(int i) const { return gens_.at(i) / std::sqrt(q_); }
  CMatrix word(const ReducedWord& w) const;

  // Largest entrywise residual of the quadratic and braid relations.
  double relation_residual() const;

 private:
  RepKind kind_;
  double q_;
  std::array<CMatrix, 3> gens_;
};

// Principal series on [1, T1, T2, T_{s1s2}, T_{s2s1}, T_{s1s2s1}] (x) v_t.
Representation build_principal(double q, CentralCharacter t);
// Three-dimensional module on [1, T2, T_{s1s2}] (x) v_u.
Representation build_induced(double q, Complex u);
// pi(T_i) = -q^{-1/2}.
Representation build_one_dim(double q);

CMatrix evaluate(const Representation& rep, const HeckeAlgebra& algebra, const HeckeElement& h);
Complex character(const Representation& rep, const HeckeAlgebra& algebra, const HeckeElement& h);

bool is_principal_irreducible(double q, CentralCharacter t, double tol = 1e-12);

// Columns: T-basis coordinates of T_u^{-1} T_{w0} for u in W0 order.
CMatrix primed_basis(const HeckeAlgebra& algebra);

// Evaluates many T-basis elements through one tree of prefix products, shared across
// representations and quadrature nodes.
class EvaluationPlan {
 public:
  EvaluationPlan(const HeckeAlgebra& algebra, const std::vector<HeckeElement>& elements);

  std::size_t node_count() const { return parent_.size(); }
  std::size_t element_count() const { return coefficients_.size(); }
  // Characters of every element in the representation.
  std::vector<Complex> characters(const Representation& rep) const;
  CMatrix matrix(const Representation& rep, std::size_t element) const;

 private:
  std::vector<int> parent_;     // node 0 is the identity
  std::vector<int> generator_;  // generator appended to the parent's word
  std::vector<std::vector<std::pair<int, Complex>>> coefficients_;

  void fill(const Representation& rep, std::vector<Complex>& store) const;
};

}  // namespace cw
