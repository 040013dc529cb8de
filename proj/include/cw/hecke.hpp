#pragma once

#include <array>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cw/scalar.hpp"
#include "cw/weyl.hpp"

namespace cw {

// T: index w means T_w.  X: index (mu, u) means x^mu T_u.
enum class Basis { kT, kX };

class HeckeElement {
 public:
  using Terms = std::unordered_map<AffineElement, Scalar, AffineElementHash>;

  explicit HeckeElement(Basis basis = Basis::kT) : basis_(basis) {}

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  const Scalar* find(const AffineElement& w) const;
  void add(const AffineElement& w, const Scalar& c);  // drops terms that cancel
  void set(const AffineElement& w, const Scalar& c);

  // Terms sorted by (length, key) for reproducible output.
  std::vector<std::pair<AffineElement, Scalar>> sorted_terms() const;
  int max_length() const;

  bool operator==(const HeckeElement& o) const;

 private:
  Basis basis_;
  Terms terms_;
};

// Laurent polynomial in x, i.e. an element of C[Q].
using Polynomial = std::map<LatticeVector, Scalar>;

// The affine Hecke algebra of type A2~ with equal parameters q.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(Rational q, Scalar::Mode mode = Scalar::Mode::kExact);

  const Field& field() const { return field_; }
  Scalar frak() const { return frak_; }
  Scalar poincare_w0() const;  // W0(q) = 1 + 2q + 2q^2 + q^3

  // Basic elements.
  HeckeElement one(Basis basis = Basis::kT) const;
  HeckeElement T(const AffineElement& w) const;
  HeckeElement A(const AffineElement& w) const;  // q^{-l(w)/2} T_w
  HeckeElement T_inverse_generator(int i) const;  // T_i - frak
  HeckeElement x_monomial(LatticeVector mu) const;  // X-basis x^mu
  HeckeElement x_v(const AffineElement& v) const;   // T-basis product of T_i^{+-1} along the walk of v
  const HeckeElement& finite_inverse(FiniteWeylElement u) const;  // T_u^{-1}, T-basis

  // Linear structure.
  HeckeElement add(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement sub(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement scale(const Scalar& c, const HeckeElement& h) const;

  // Products.  mul dispatches on the basis and rejects mixed input.
  HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement mul_right_generator(const HeckeElement& h, int i, int power = 1) const;  // T-basis
  HeckeElement mul_left_generator(int i, const HeckeElement& h, int power = 1) const;   // T-basis
  HeckeElement left_mul_x(LatticeVector mu, const HeckeElement& h) const;  // T-basis x^mu h
  HeckeElement right_mul_x(const HeckeElement& h, LatticeVector mu) const;  // T-basis h x^mu
  HeckeElement bernstein_mul(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement power(const HeckeElement& h, int n) const;

  Scalar trace(const HeckeElement& h) const;
  HeckeElement star(const HeckeElement& h) const;

  // Basis changes.  t_to_x multiplies the Bernstein images of the generators.
  HeckeElement t_to_x(const HeckeElement& h) const;
  HeckeElement x_to_t(const HeckeElement& h) const;
  HeckeElement to_basis(const HeckeElement& h, Basis basis) const;

  // Special elements.
  HeckeElement symmetrizer_1_0(Basis basis = Basis::kX) const;
  HeckeElement intertwiner_tau(int i) const;              // X-basis, i in {1,2}
  HeckeElement intertwiner_tau(FiniteWeylElement w) const;  // tau_w, X-basis
  HeckeElement simple_walk() const;                       // P = (A0+A1+A2)/3, T-basis

  // Polynomials in x.
  HeckeElement from_polynomial(const Polynomial& p) const;  // X-basis, u = e
  Polynomial to_polynomial(const HeckeElement& h) const;    // requires pure polynomial X element
  Polynomial poly_mul(const Polynomial& a, const Polynomial& b) const;
  Polynomial poly_act(FiniteWeylElement w, const Polynomial& p) const;
  Polynomial poly_one_minus(LatticeVector beta, const Rational& c) const;  // 1 - c x^{beta}
  Polynomial divide_one_minus(const Polynomial& p, LatticeVector beta) const;  // p / (1 - x^beta)
  Polynomial d_poly() const;  // prod (1 - x^{-a})
  Polynomial n_poly() const;  // prod (1 - q^{-1} x^{-a})
  bool is_symmetric(const Polynomial& p) const;
  Complex evaluate_polynomial(const Polynomial& p, Complex t1, Complex t2) const;
  HeckeElement macdonald_P(LatticeVector mu) const;

  // Coefficients of h in the tau-basis of the induced module at t (numeric).
  std::array<Complex, 6> tau_expansion_at(const HeckeElement& h, Complex t1, Complex t2) const;

 private:
  void add_scaled(HeckeElement& out, const AffineElement& w, const Scalar& c, const Scalar& s) const;
  HeckeElement left_generator_on_x(int i, const HeckeElement& h) const;  // T_i * h in X-basis
  HeckeElement finite_left(FiniteWeylElement u, const HeckeElement& h) const;  // T_u * h, X-basis
  HeckeElement x_image_of_generator(int i) const;

  Field field_;
  Scalar frak_;
  std::array<HeckeElement, 6> finite_inverses_;
};

// Signs of the crossings along the canonical reduced word of v: x_v = prod T_{i_k}^{eps_k}.
std::vector<std::pair<int, int>> x_word(const AffineElement& v);

Complex character_value(LatticeVector mu, Complex t1, Complex t2);  // t^mu

}  // namespace cw
