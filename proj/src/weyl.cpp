#include "cw/weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace cw {

namespace {

// Column images of the coroot basis under each element of W0.
struct Matrix2 {
  LatticeVector c1, c2;
  LatticeVector apply(LatticeVector v) const { return c1 * v.m + c2 * v.n; }
  Matrix2 compose(const Matrix2& o) const { return {apply(o.c1), apply(o.c2)}; }
  bool operator==(const Matrix2&) const = default;
};

struct FiniteTables {
  std::array<Matrix2, 6> matrix;
  std::array<std::vector<int>, 6> word;
  std::array<int, 6> length;
  std::array<std::array<int, 6>, 6> product;
  std::array<int, 6> inverse;

  FiniteTables() {
    const Matrix2 s1{{-1, 0}, {1, 1}};
    const Matrix2 s2{{1, 1}, {0, -1}};
    const Matrix2 id{{1, 0}, {0, 1}};
    matrix = {id, s1, s2, s1.compose(s2), s2.compose(s1), s1.compose(s2).compose(s1)};
    word = {std::vector<int>{}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}};
    length = {0, 1, 1, 2, 2, 3};
    for (int a = 0; a < 6; ++a) {
      for (int b = 0; b < 6; ++b) {
        const Matrix2 ab = matrix[a].compose(matrix[b]);
        product[a][b] = find(ab);
      }
    }
    for (int a = 0; a < 6; ++a) {
      for (int b = 0; b < 6; ++b) {
        if (product[a][b] == 0) inverse[a] = b;
      }
    }
  }

  int find(const Matrix2& m) const {
    for (int k = 0; k < 6; ++k) {
      if (matrix[k] == m) return k;
    }
    throw std::logic_error("W0 table not closed");
  }
};

const FiniteTables& tables() {
  static const FiniteTables t;
  return t;
}

int floor_div3(int v) { return v >= 0 ? v / 3 : -((-v + 2) / 3); }

}  // namespace

bool dominance_leq(LatticeVector mu, LatticeVector lambda) {
  const LatticeVector d = lambda - mu;
  return d.m >= 0 && d.n >= 0;
}

bool in_negative_cone(LatticeVector mu) { return mu.m <= 0 && mu.n <= 0; }

bool is_dominant(LatticeVector lambda) {
  return pairing(lambda, kAlpha1) >= 0 && pairing(lambda, kAlpha2) >= 0;
}

std::array<int, 2> omega_coordinates(LatticeVector lambda) {
  return {pairing(lambda, kAlpha1), pairing(lambda, kAlpha2)};
}

FiniteWeylElement FiniteWeylElement::from_index(int index) {
  if (index < 0 || index >= kOrder) throw std::out_of_range("W0 index");
  return FiniteWeylElement(static_cast<std::uint8_t>(index));
}

FiniteWeylElement FiniteWeylElement::generator(int i) {
  if (i != 1 && i != 2) throw std::invalid_argument("finite generator must be 1 or 2");
  return from_index(i);
}

FiniteWeylElement FiniteWeylElement::from_word(const std::vector<int>& word) {
  FiniteWeylElement w;
  for (int i : word) w = w * generator(i);
  return w;
}

int FiniteWeylElement::length() const { return tables().length[index_]; }

FiniteWeylElement FiniteWeylElement::inverse() const {
  return from_index(tables().inverse[index_]);
}

FiniteWeylElement FiniteWeylElement::operator*(FiniteWeylElement o) const {
  return from_index(tables().product[index_][o.index_]);
}

LatticeVector FiniteWeylElement::apply(LatticeVector v) const {
  return tables().matrix[index_].apply(v);
}

const std::vector<int>& FiniteWeylElement::word() const { return tables().word[index_]; }

const std::array<FiniteWeylElement, FiniteWeylElement::kOrder>& FiniteWeylElement::all() {
  static const std::array<FiniteWeylElement, kOrder> elements = [] {
    std::array<FiniteWeylElement, kOrder> out;
    for (int k = 0; k < kOrder; ++k) out[k] = from_index(k);
    return out;
  }();
  return elements;
}

std::vector<LatticeVector> inversion_set(FiniteWeylElement u) {
  std::vector<LatticeVector> out;
  const FiniteWeylElement inv = u.inverse();
  for (LatticeVector a : kPositiveRoots) {
    if (!is_positive_root(inv.apply(a))) out.push_back(a);
  }
  return out;
}

AffineElement AffineElement::generator(int i) {
  switch (i) {
    case 0:
      return {kPhi, FiniteWeylElement::longest()};
    case 1:
    case 2:
      return {{}, FiniteWeylElement::generator(i)};
    default:
      throw std::invalid_argument("generator index must be 0, 1 or 2");
  }
}

AffineElement AffineElement::from_word(const ReducedWord& word) {
  AffineElement w;
  for (int i : word) w = w.times_generator(i);
  return w;
}

AffineElement AffineElement::operator*(const AffineElement& o) const {
  return {translation_ + finite_.apply(o.translation_), finite_ * o.finite_};
}

AffineElement AffineElement::times_generator(int i) const { return *this * generator(i); }

AffineElement AffineElement::generator_times(int i) const { return generator(i) * *this; }

AffineElement AffineElement::inverse() const {
  const FiniteWeylElement inv = finite_.inverse();
  return {-inv.apply(translation_), inv};
}

int AffineElement::length() const {
  const FiniteWeylElement inv = finite_.inverse();
  int total = 0;
  for (LatticeVector a : kPositiveRoots) {
    const int shift = is_positive_root(inv.apply(a)) ? 0 : 1;
    const int v = pairing(translation_, a) - shift;
    total += v < 0 ? -v : v;
  }
  return total;
}

LatticeVector AffineElement::act_scaled(LatticeVector point3) const {
  return translation_ * 3 + finite_.apply(point3);
}

LatticeVector AffineElement::barycenter3() const { return act_scaled({1, 1}); }

std::uint64_t AffineElement::key() const {
  const auto m = static_cast<std::uint64_t>(static_cast<std::uint32_t>(translation_.m + (1 << 27)));
  const auto n = static_cast<std::uint64_t>(static_cast<std::uint32_t>(translation_.n + (1 << 27)));
  return (m << 32) ^ (n << 3) ^ static_cast<std::uint64_t>(finite_.index());
}

std::size_t AffineElementHash::operator()(const AffineElement& w) const noexcept {
  std::uint64_t x = w.key();
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  return static_cast<std::size_t>(x);
}

int smallest_right_descent(const AffineElement& w) {
  const int l = w.length();
  for (int i = 0; i < 3; ++i) {
    if (w.times_generator(i).length() < l) return i;
  }
  return -1;
}

ReducedWord reduced_word(const AffineElement& w) {
  ReducedWord reversed;
  AffineElement cur = w;
  for (int i = smallest_right_descent(cur); i >= 0; i = smallest_right_descent(cur)) {
    reversed.push_back(i);
    cur = cur.times_generator(i);
  }
  return {reversed.rbegin(), reversed.rend()};
}

bool is_reduced(const ReducedWord& word) {
  return AffineElement::from_word(word).length() == static_cast<int>(word.size());
}

bool bruhat_leq(const AffineElement& v, const AffineElement& w) {
  const ReducedWord word = reduced_word(w);
  AffineElement cur = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const AffineElement next = cur.times_generator(*it);
    if (next.length() < cur.length()) cur = next;
  }
  return cur.is_identity();
}

Crossing crossing_data(const AffineElement& a, int i) {
  const LatticeVector b1 = a.barycenter3();
  const LatticeVector b2 = a.times_generator(i).barycenter3();
  for (int r = 0; r < 3; ++r) {
    const int v1 = pairing(b1, kPositiveRoots[r]);
    const int v2 = pairing(b2, kPositiveRoots[r]);
    const int f1 = floor_div3(v1);
    const int f2 = floor_div3(v2);
    if (f1 != f2) {
      return {{r, f1 > f2 ? f1 : f2}, v2 > v1 ? 1 : -1};
    }
  }
  throw std::logic_error("adjacent alcoves share no wall");
}

int geometric_length(const AffineElement& w) {
  const LatticeVector b0{1, 1};
  const LatticeVector bw = w.barycenter3();
  int total = 0;
  for (LatticeVector a : kPositiveRoots) {
    const int d = floor_div3(pairing(bw, a)) - floor_div3(pairing(b0, a));
    total += d < 0 ? -d : d;
  }
  return total;
}

std::string format_word(const ReducedWord& word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(word[k]);
  }
  return out;
}

ReducedWord parse_word(const std::string& text) {
  ReducedWord out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t");
    item = item.substr(first, last - first + 1);
    if (item != "0" && item != "1" && item != "2") {
      throw std::invalid_argument("bad generator '" + item + "' in word");
    }
    out.push_back(item[0] - '0');
  }
  return out;
}

std::string to_string(const AffineElement& w) {
  return "t(" + std::to_string(w.wt().m) + "," + std::to_string(w.wt().n) + ")[" +
         format_word(w.theta().word()) + "]";
}

}  // namespace cw
