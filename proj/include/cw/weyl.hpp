#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cw {

// Element m*a1v + n*a2v of the coroot lattice Q of type A2.
struct LatticeVector {
  int m = 0;
  int n = 0;

  constexpr LatticeVector operator+(LatticeVector o) const { return {m + o.m, n + o.n}; }
  constexpr LatticeVector operator-(LatticeVector o) const { return {m - o.m, n - o.n}; }
  constexpr LatticeVector operator-() const { return {-m, -n}; }
  constexpr LatticeVector operator*(int k) const { return {k * m, k * n}; }
  constexpr auto operator<=>(const LatticeVector&) const = default;
};

inline constexpr LatticeVector kAlpha1{1, 0};
inline constexpr LatticeVector kAlpha2{0, 1};
inline constexpr LatticeVector kPhi{1, 1};
inline constexpr LatticeVector kRho{1, 1};

// Positive roots in the order alpha1, alpha2, phi; a root is identified with its coroot.
inline constexpr std::array<LatticeVector, 3> kPositiveRoots{kAlpha1, kAlpha2, kPhi};

// <lambda, alpha> with alpha given by its coroot coordinates (Cartan matrix pairing).
constexpr int pairing(LatticeVector lambda, LatticeVector alpha) {
  return alpha.m * (2 * lambda.m - lambda.n) + alpha.n * (2 * lambda.n - lambda.m);
}

constexpr bool is_positive_root(LatticeVector a) {
  return (a.m >= 0 && a.n >= 0) && (a.m != 0 || a.n != 0);
}

// s_alpha(lambda) = lambda - <lambda, alpha> alpha^vee.
constexpr LatticeVector reflect(LatticeVector alpha, LatticeVector lambda) {
  return lambda - alpha * pairing(lambda, alpha);
}

// mu precedes lambda iff lambda - mu lies in Q+.
bool dominance_leq(LatticeVector mu, LatticeVector lambda);
bool in_negative_cone(LatticeVector mu);  // mu in -Q+
bool is_dominant(LatticeVector lambda);

// Fundamental-weight coordinates of lambda (x, y with lambda = x w1 + y w2).
std::array<int, 2> omega_coordinates(LatticeVector lambda);

// Element of W0 = S3. Indices: 0=e, 1=s1, 2=s2, 3=s1s2, 4=s2s1, 5=s1s2s1.
class FiniteWeylElement {
 public:
  static constexpr int kOrder = 6;

  constexpr FiniteWeylElement() = default;
  static FiniteWeylElement from_index(int index);
  static FiniteWeylElement identity() { return {}; }
  static FiniteWeylElement generator(int i);  // i in {1,2}
  static FiniteWeylElement longest() { return from_index(5); }
  static FiniteWeylElement from_word(const std::vector<int>& word);

  int index() const { return index_; }
  int length() const;
  FiniteWeylElement inverse() const;
  FiniteWeylElement operator*(FiniteWeylElement o) const;
  LatticeVector apply(LatticeVector v) const;
  const std::vector<int>& word() const;  // shortest word over {1,2}
  int sign() const { return length() % 2 == 0 ? 1 : -1; }

  auto operator<=>(const FiniteWeylElement&) const = default;

  static const std::array<FiniteWeylElement, kOrder>& all();

 private:
  explicit constexpr FiniteWeylElement(std::uint8_t i) : index_(i) {}
  std::uint8_t index_ = 0;
};

// Positive roots alpha with u^{-1} alpha negative.
std::vector<LatticeVector> inversion_set(FiniteWeylElement u);

using ReducedWord = std::vector<int>;

// w = t_translation * finite.
class AffineElement {
 public:
  AffineElement() = default;
  AffineElement(LatticeVector translation, FiniteWeylElement finite)
      : translation_(translation), finite_(finite) {}

  static AffineElement identity() { return {}; }
  static AffineElement generator(int i);  // s0 = t_phi s_phi
  static AffineElement translation(LatticeVector mu) { return {mu, {}}; }
  static AffineElement from_word(const ReducedWord& word);

  LatticeVector wt() const { return translation_; }
  FiniteWeylElement theta() const { return finite_; }

  AffineElement operator*(const AffineElement& o) const;
  AffineElement times_generator(int i) const;  // w s_i
  AffineElement generator_times(int i) const;  // s_i w
  AffineElement inverse() const;
  int length() const;
  bool is_identity() const { return *this == AffineElement{}; }

  // Image of a point given in coordinates scaled by 3.
  LatticeVector act_scaled(LatticeVector point3) const;
  // Barycenter of the alcove w c0, coordinates scaled by 3.
  LatticeVector barycenter3() const;

  std::uint64_t key() const;

  auto operator<=>(const AffineElement&) const = default;

 private:
  LatticeVector translation_{};
  FiniteWeylElement finite_{};
};

struct AffineElementHash {
  std::size_t operator()(const AffineElement& w) const noexcept;
};

// Canonical reduced word: word(w) = word(w s_i) + [i] with i the smallest right descent.
ReducedWord reduced_word(const AffineElement& w);
bool is_reduced(const ReducedWord& word);
bool bruhat_leq(const AffineElement& v, const AffineElement& w);
// Smallest i with length(w s_i) < length(w), or -1 for the identity.
int smallest_right_descent(const AffineElement& w);

// Hyperplane {x : <x, root> = level} with root one of kPositiveRoots.
struct Hyperplane {
  int root = 0;  // index into kPositiveRoots
  int level = 0;
  auto operator<=>(const Hyperplane&) const = default;
};

struct Crossing {
  Hyperplane wall;
  int sign = 0;  // +1 when a -> a s_i moves to the positive side
};

// Wall between the alcoves a c0 and a s_i c0 and the orientation of the step.
Crossing crossing_data(const AffineElement& a, int i);

// Number of hyperplanes separating c0 and w c0, computed from barycenters.
int geometric_length(const AffineElement& w);

std::string format_word(const ReducedWord& word);
ReducedWord parse_word(const std::string& text);
std::string to_string(const AffineElement& w);

}  // namespace cw
