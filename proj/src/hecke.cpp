#include "cw/hecke.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cw {

namespace {

LatticeVector simple_coroot(int i) { return i == 1 ? kAlpha1 : kAlpha2; }

void require_basis(const HeckeElement& h, Basis b, const char* what) {
  if (h.basis() != b) {
    throw std::invalid_argument(std::string(what) + ": element is in the wrong basis");
  }
}

}  // namespace

const Scalar* HeckeElement::find(const AffineElement& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? nullptr : &it->second;
}

void HeckeElement::add(const AffineElement& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void HeckeElement::set(const AffineElement& w, const Scalar& c) {
  if (c.is_zero()) {
    terms_.erase(w);
  } else {
    terms_.insert_or_assign(w, c);
  }
}

std::vector<std::pair<AffineElement, Scalar>> HeckeElement::sorted_terms() const {
  std::vector<std::pair<AffineElement, Scalar>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    const int lx = x.first.length();
    const int ly = y.first.length();
    if (lx != ly) return lx < ly;
    return x.first < y.first;
  });
  return out;
}

int HeckeElement::max_length() const {
  int best = 0;
  for (const auto& [w, c] : terms_) best = std::max(best, w.length());
  return best;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
  if (basis_ != o.basis_ || terms_.size() != o.terms_.size()) return false;
  for (const auto& [w, c] : terms_) {
    const Scalar* other = o.find(w);
    if (other == nullptr || !(*other == c)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> x_word(const AffineElement& v) {
  std::vector<std::pair<int, int>> out;
  AffineElement a;
  for (int i : reduced_word(v)) {
    out.emplace_back(i, crossing_data(a, i).sign);
    a = a.times_generator(i);
  }
  return out;
}

Complex character_value(LatticeVector mu, Complex t1, Complex t2) {
  auto ipow = [](Complex z, int k) {
    Complex base = k >= 0 ? z : 1.0 / z;
    int e = k >= 0 ? k : -k;
    Complex r = 1.0;
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  };
  return ipow(t1, mu.m) * ipow(t2, mu.n);
}

HeckeAlgebra::HeckeAlgebra(Rational q, Scalar::Mode mode) : field_(std::move(q), mode) {
  frak_ = field_.frak();
  for (FiniteWeylElement u : FiniteWeylElement::all()) {
    HeckeElement inv = one();
    const auto& word = u.word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) inv = mul_right_generator(inv, *it, -1);
    finite_inverses_[u.index()] = std::move(inv);
  }
}

Scalar HeckeAlgebra::poincare_w0() const {
  Scalar total = field_.zero();
  for (FiniteWeylElement u : FiniteWeylElement::all()) total += field_.q_half_power(2 * u.length());
  return total;
}

HeckeElement HeckeAlgebra::one(Basis basis) const {
  HeckeElement h(basis);
  h.add(AffineElement::identity(), field_.one());
  return h;
}

HeckeElement HeckeAlgebra::T(const AffineElement& w) const {
  HeckeElement h(Basis::kT);
  h.add(w, field_.one());
  return h;
}

HeckeElement HeckeAlgebra::A(const AffineElement& w) const {
  HeckeElement h(Basis::kT);
  h.add(w, field_.q_half_power(-w.length()));
  return h;
}

HeckeElement HeckeAlgebra::T_inverse_generator(int i) const {
  HeckeElement h = T(AffineElement::generator(i));
  h.add(AffineElement::identity(), -frak_);
  return h;
}

HeckeElement HeckeAlgebra::x_monomial(LatticeVector mu) const {
  HeckeElement h(Basis::kX);
  h.add(AffineElement::translation(mu), field_.one());
  return h;
}

HeckeElement HeckeAlgebra::x_v(const AffineElement& v) const {
  HeckeElement h = one();
  for (auto [i, sign] : x_word(v)) h = mul_right_generator(h, i, sign);
  return h;
}

const HeckeElement& HeckeAlgebra::finite_inverse(FiniteWeylElement u) const {
  return finite_inverses_[u.index()];
}

void HeckeAlgebra::add_scaled(HeckeElement& out, const AffineElement& w, const Scalar& c,
                              const Scalar& s) const {
  out.add(w, field_.mul(c, s));
}

HeckeElement HeckeAlgebra::add(const HeckeElement& a, const HeckeElement& b) const {
  if (a.basis() != b.basis()) throw std::invalid_argument("add: mixed bases");
  HeckeElement out = a;
  for (const auto& [w, c] : b.terms()) out.add(w, c);
  return out;
}

HeckeElement HeckeAlgebra::sub(const HeckeElement& a, const HeckeElement& b) const {
  if (a.basis() != b.basis()) throw std::invalid_argument("sub: mixed bases");
  HeckeElement out = a;
  for (const auto& [w, c] : b.terms()) out.add(w, -c);
  return out;
}

HeckeElement HeckeAlgebra::scale(const Scalar& c, const HeckeElement& h) const {
  HeckeElement out(h.basis());
  if (c.is_zero()) return out;
  for (const auto& [w, x] : h.terms()) out.add(w, field_.mul(c, x));
  return out;
}

HeckeElement HeckeAlgebra::mul_right_generator(const HeckeElement& h, int i, int power) const {
  require_basis(h, Basis::kT, "mul_right_generator");
  HeckeElement out(Basis::kT);
  for (const auto& [w, c] : h.terms()) {
    const AffineElement ws = w.times_generator(i);
    const bool up = ws.length() > w.length();
    out.add(ws, c);
    if (power > 0 && !up) add_scaled(out, w, c, frak_);
    if (power < 0 && up) add_scaled(out, w, c, -frak_);
  }
  return out;
}

HeckeElement HeckeAlgebra::mul_left_generator(int i, const HeckeElement& h, int power) const {
  require_basis(h, Basis::kT, "mul_left_generator");
  HeckeElement out(Basis::kT);
  for (const auto& [w, c] : h.terms()) {
    const AffineElement sw = w.generator_times(i);
    const bool up = sw.length() > w.length();
    out.add(sw, c);
    if (power > 0 && !up) add_scaled(out, w, c, frak_);
    if (power < 0 && up) add_scaled(out, w, c, -frak_);
  }
  return out;
}

HeckeElement HeckeAlgebra::left_mul_x(LatticeVector mu, const HeckeElement& h) const {
  const auto factors = x_word(AffineElement::translation(mu));
  HeckeElement out = h;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    out = mul_left_generator(it->first, out, it->second);
  }
  return out;
}

HeckeElement HeckeAlgebra::right_mul_x(const HeckeElement& h, LatticeVector mu) const {
  HeckeElement out = h;
  for (auto [i, sign] : x_word(AffineElement::translation(mu))) out = mul_right_generator(out, i, sign);
  return out;
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& a, const HeckeElement& b) const {
  if (a.basis() != b.basis()) throw std::invalid_argument("mul: mixed bases");
  if (a.basis() == Basis::kX) return bernstein_mul(a, b);

  HeckeElement out(Basis::kT);
  if (b.size() <= a.size()) {
    // a * T_w built along canonical words; prefixes are shared through the memo.
    std::unordered_map<AffineElement, HeckeElement, AffineElementHash> memo;
    memo.emplace(AffineElement::identity(), a);
    auto products = b.sorted_terms();
    for (const auto& [w, c] : products) {
      const ReducedWord word = reduced_word(w);
      AffineElement prefix;
      for (int i : word) {
        const AffineElement next = prefix.times_generator(i);
        if (!memo.count(next)) memo.emplace(next, mul_right_generator(memo.at(prefix), i));
        prefix = next;
      }
      for (const auto& [v, x] : memo.at(w).terms()) out.add(v, field_.mul(x, c));
    }
  } else {
    for (const auto& [w, c] : a.terms()) {
      HeckeElement part = b;
      const ReducedWord word = reduced_word(w);
      for (auto it = word.rbegin(); it != word.rend(); ++it) part = mul_left_generator(*it, part);
      for (const auto& [v, x] : part.terms()) out.add(v, field_.mul(c, x));
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::power(const HeckeElement& h, int n) const {
  HeckeElement out = one(h.basis());
  for (int k = 0; k < n; ++k) out = mul(out, h);
  return out;
}

Scalar HeckeAlgebra::trace(const HeckeElement& h) const {
  const HeckeElement t = h.basis() == Basis::kT ? h : x_to_t(h);
  const Scalar* c = t.find(AffineElement::identity());
  return c ? *c : field_.zero();
}

HeckeElement HeckeAlgebra::star(const HeckeElement& h) const {
  const HeckeElement t = h.basis() == Basis::kT ? h : x_to_t(h);
  HeckeElement out(Basis::kT);
  for (const auto& [w, c] : t.terms()) out.add(w.inverse(), c.conj());
  return h.basis() == Basis::kT ? out : t_to_x(out);
}

HeckeElement HeckeAlgebra::x_image_of_generator(int i) const {
  HeckeElement g(Basis::kX);
  if (i == 1 || i == 2) {
    g.add({{}, FiniteWeylElement::generator(i)}, field_.one());
    return g;
  }
  // T0 = x^{phi} T_{w0}^{-1}, since s0 = t_phi w0 and the step e -> s0 crosses positively.
  for (const auto& [u, c] : finite_inverse(FiniteWeylElement::longest()).terms()) {
    g.add({kPhi, u.theta()}, c);
  }
  return g;
}

HeckeElement HeckeAlgebra::t_to_x(const HeckeElement& h) const {
  require_basis(h, Basis::kT, "t_to_x");
  std::unordered_map<AffineElement, HeckeElement, AffineElementHash> memo;
  memo.emplace(AffineElement::identity(), one(Basis::kX));
  const std::array<HeckeElement, 3> gens{x_image_of_generator(0), x_image_of_generator(1),
                                         x_image_of_generator(2)};
  HeckeElement out(Basis::kX);
  for (const auto& [w, c] : h.sorted_terms()) {
    AffineElement prefix;
    for (int i : reduced_word(w)) {
      const AffineElement next = prefix.times_generator(i);
      if (!memo.count(next)) {
        const HeckeElement& base = memo.at(prefix);
        HeckeElement img(Basis::kX);
        if (i == 0) {
          img = bernstein_mul(base, gens[0]);
        } else {
          for (const auto& [key, x] : base.terms()) {
            const FiniteWeylElement u = key.theta();
            const FiniteWeylElement us = u * FiniteWeylElement::generator(i);
            img.add({key.wt(), us}, x);
            if (us.length() < u.length()) add_scaled(img, key, x, frak_);
          }
        }
        memo.emplace(next, std::move(img));
      }
      prefix = next;
    }
    for (const auto& [v, x] : memo.at(w).terms()) out.add(v, field_.mul(x, c));
  }
  return out;
}

HeckeElement HeckeAlgebra::x_to_t(const HeckeElement& h) const {
  require_basis(h, Basis::kX, "x_to_t");
  std::map<LatticeVector, HeckeElement> monomials;
  HeckeElement out(Basis::kT);
  for (const auto& [key, c] : h.sorted_terms()) {
    auto it = monomials.find(key.wt());
    if (it == monomials.end()) {
      it = monomials.emplace(key.wt(), x_v(AffineElement::translation(key.wt()))).first;
    }
    HeckeElement part = it->second;
    for (int i : key.theta().word()) part = mul_right_generator(part, i);
    for (const auto& [v, x] : part.terms()) out.add(v, field_.mul(x, c));
  }
  return out;
}

HeckeElement HeckeAlgebra::to_basis(const HeckeElement& h, Basis basis) const {
  if (h.basis() == basis) return h;
  return basis == Basis::kX ? t_to_x(h) : x_to_t(h);
}

HeckeElement HeckeAlgebra::left_generator_on_x(int i, const HeckeElement& h) const {
  const LatticeVector a = simple_coroot(i);
  const FiniteWeylElement s = FiniteWeylElement::generator(i);
  HeckeElement out(Basis::kX);
  for (const auto& [key, c] : h.terms()) {
    const LatticeVector nu = key.wt();
    const FiniteWeylElement w = key.theta();
    const int k = pairing(nu, a);
    const LatticeVector reflected = nu - a * k;
    // T_i x^nu = x^{s_i nu} T_i + frak (x^nu - x^{s_i nu}) / (1 - x^{-a})
    const FiniteWeylElement sw = s * w;
    out.add({reflected, sw}, c);
    if (sw.length() < w.length()) add_scaled(out, {reflected, w}, c, frak_);
    if (k > 0) {
      const Scalar fc = field_.mul(c, frak_);
      for (int j = 0; j < k; ++j) out.add({nu - a * j, w}, fc);
    } else if (k < 0) {
      const Scalar fc = -field_.mul(c, frak_);
      for (int j = 1; j <= -k; ++j) out.add({nu + a * j, w}, fc);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::finite_left(FiniteWeylElement u, const HeckeElement& h) const {
  HeckeElement out = h;
  const auto& word = u.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = left_generator_on_x(*it, out);
  return out;
}

HeckeElement HeckeAlgebra::bernstein_mul(const HeckeElement& a, const HeckeElement& b) const {
  require_basis(a, Basis::kX, "bernstein_mul");
  require_basis(b, Basis::kX, "bernstein_mul");
  std::array<std::vector<std::pair<LatticeVector, Scalar>>, 6> by_finite;
  for (const auto& [key, c] : a.terms()) by_finite[key.theta().index()].emplace_back(key.wt(), c);
  HeckeElement out(Basis::kX);
  for (int k = 0; k < FiniteWeylElement::kOrder; ++k) {
    if (by_finite[k].empty()) continue;
    const HeckeElement moved = finite_left(FiniteWeylElement::from_index(k), b);
    for (const auto& [lambda, c] : by_finite[k]) {
      for (const auto& [key, x] : moved.terms()) {
        out.add({lambda + key.wt(), key.theta()}, field_.mul(c, x));
      }
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::symmetrizer_1_0(Basis basis) const {
  HeckeElement h(basis);
  const Scalar norm = field_.inv(poincare_w0());
  for (FiniteWeylElement u : FiniteWeylElement::all()) {
    h.add({{}, u}, field_.mul(norm, field_.q_half_power(u.length())));
  }
  return h;
}

HeckeElement HeckeAlgebra::intertwiner_tau(int i) const {
  if (i != 1 && i != 2) throw std::invalid_argument("intertwiner index must be 1 or 2");
  const FiniteWeylElement s = FiniteWeylElement::generator(i);
  HeckeElement h(Basis::kX);
  h.add({{}, s}, field_.one());
  h.add({-simple_coroot(i), s}, -field_.one());
  h.add({}, -frak_);
  return h;
}

HeckeElement HeckeAlgebra::intertwiner_tau(FiniteWeylElement w) const {
  HeckeElement h = one(Basis::kX);
  for (int i : w.word()) h = bernstein_mul(h, intertwiner_tau(i));
  return h;
}

HeckeElement HeckeAlgebra::simple_walk() const {
  HeckeElement h(Basis::kT);
  const Scalar c = field_.mul(field_.from_rational(Rational(1, 3)), field_.q_half_power(-1));
  for (int i = 0; i < 3; ++i) h.add(AffineElement::generator(i), c);
  return h;
}

HeckeElement HeckeAlgebra::from_polynomial(const Polynomial& p) const {
  HeckeElement h(Basis::kX);
  for (const auto& [nu, c] : p) h.add(AffineElement::translation(nu), c);
  return h;
}

Polynomial HeckeAlgebra::to_polynomial(const HeckeElement& h) const {
  require_basis(h, Basis::kX, "to_polynomial");
  Polynomial p;
  for (const auto& [key, c] : h.terms()) {
    if (key.theta().index() != 0) throw std::invalid_argument("element is not a polynomial in x");
    p.emplace(key.wt(), c);
  }
  return p;
}

Polynomial HeckeAlgebra::poly_mul(const Polynomial& a, const Polynomial& b) const {
  Polynomial out;
  for (const auto& [x, c] : a) {
    for (const auto& [y, d] : b) {
      auto [it, inserted] = out.try_emplace(x + y, field_.mul(c, d));
      if (!inserted) it->second += field_.mul(c, d);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Polynomial HeckeAlgebra::poly_act(FiniteWeylElement w, const Polynomial& p) const {
  Polynomial out;
  for (const auto& [nu, c] : p) out.emplace(w.apply(nu), c);
  return out;
}

Polynomial HeckeAlgebra::poly_one_minus(LatticeVector beta, const Rational& c) const {
  Polynomial p;
  p.emplace(LatticeVector{}, field_.one());
  auto [it, inserted] = p.try_emplace(beta, field_.from_rational(-c));
  if (!inserted) it->second += field_.from_rational(-c);
  std::erase_if(p, [](const auto& kv) { return kv.second.is_zero(); });
  return p;
}

Polynomial HeckeAlgebra::divide_one_minus(const Polynomial& p, LatticeVector beta) const {
  // p = (1 - y) g with y = x^beta: along each line nu0 + k beta, g_k is the running sum of p_k.
  std::map<LatticeVector, std::map<int, Scalar>> lines;
  for (const auto& [nu, c] : p) {
    const int k = beta.m != 0 ? nu.m / beta.m : nu.n / beta.n;
    lines[nu - beta * k].emplace(k, c);
  }
  Polynomial g;
  for (const auto& [base, coeffs] : lines) {
    Scalar running = field_.zero();
    const int lo = coeffs.begin()->first;
    const int hi = coeffs.rbegin()->first;
    for (int k = lo; k <= hi; ++k) {
      const auto it = coeffs.find(k);
      if (it != coeffs.end()) running += it->second;
      if (!running.is_zero()) g.emplace(base + beta * k, running);
    }
    if (!running.is_zero()) throw std::logic_error("polynomial division left a nonzero remainder");
  }
  return g;
}

Polynomial HeckeAlgebra::d_poly() const {
  Polynomial p{{LatticeVector{}, field_.one()}};
  for (LatticeVector a : kPositiveRoots) p = poly_mul(p, poly_one_minus(-a, 1));
  return p;
}

Polynomial HeckeAlgebra::n_poly() const {
  Polynomial p{{LatticeVector{}, field_.one()}};
  const Rational inv_q = 1 / field_.q();
  for (LatticeVector a : kPositiveRoots) p = poly_mul(p, poly_one_minus(-a, inv_q));
  return p;
}

bool HeckeAlgebra::is_symmetric(const Polynomial& p) const {
  for (int i = 1; i <= 2; ++i) {
    if (poly_act(FiniteWeylElement::generator(i), p) != p) return false;
  }
  return true;
}

Complex HeckeAlgebra::evaluate_polynomial(const Polynomial& p, Complex t1, Complex t2) const {
  Complex total = 0.0;
  for (const auto& [nu, c] : p) total += field_.to_complex(c) * character_value(nu, t1, t2);
  return total;
}

HeckeElement HeckeAlgebra::macdonald_P(LatticeVector mu) const {
  if (!field_.exact()) throw std::logic_error("macdonald_P requires exact mode");
  // Sum_w w(x^mu n / d) = (1/d) Sum_w sign(w) x^{w rho - rho} w(x^mu n).
  Polynomial xn = poly_mul(Polynomial{{mu, field_.one()}}, n_poly());
  Polynomial numerator;
  for (FiniteWeylElement w : FiniteWeylElement::all()) {
    const Scalar sign = field_.from_rational(w.sign());
    const Polynomial shift{{w.apply(kRho) - kRho, sign}};
    for (const auto& [nu, c] : poly_mul(shift, poly_act(w, xn))) {
      auto [it, inserted] = numerator.try_emplace(nu, c);
      if (!inserted) it->second += c;
    }
  }
  std::erase_if(numerator, [](const auto& kv) { return kv.second.is_zero(); });
  for (LatticeVector a : kPositiveRoots) numerator = divide_one_minus(numerator, -a);
  const Scalar norm = field_.div(field_.q_half_power(6), poincare_w0());
  for (auto& [nu, c] : numerator) c = field_.mul(c, norm);
  return from_polynomial(numerator);
}

std::array<Complex, 6> HeckeAlgebra::tau_expansion_at(const HeckeElement& h, Complex t1,
                                                      Complex t2) const {
  const double q = field_.q_double();
  const Complex frak = field_.to_complex(frak_);
  Complex d = 1.0;
  for (LatticeVector a : kPositiveRoots) d *= 1.0 - character_value(-a, t1, t2);
  if (std::abs(d) < 1e-10) {
    throw std::domain_error("tau-basis is singular at this t (|d(t)| < 1e-10); perturb the point");
  }
  using Mat = Eigen::Matrix<Complex, 6, 6>;
  // x^mu acts on tau_u (x) v_t by t^{u^{-1} mu}.
  auto chi = [&](FiniteWeylElement u, LatticeVector mu) {
    return character_value(u.inverse().apply(mu), t1, t2);
  };
  std::array<Mat, 3> gen;
  for (int i = 1; i <= 2; ++i) {
    const LatticeVector a = simple_coroot(i);
    const FiniteWeylElement s = FiniteWeylElement::generator(i);
    Mat m = Mat::Zero();
    for (FiniteWeylElement u : FiniteWeylElement::all()) {
      const FiniteWeylElement v = s * u;
      Complex coeff = 1.0;
      if (v.length() < u.length()) {
        coeff = q * (1.0 - chi(v, -a) / q) * (1.0 - chi(v, a) / q);
      }
      m(v.index(), u.index()) += coeff / (1.0 - chi(v, -a));
      m(u.index(), u.index()) += frak / (1.0 - chi(u, -a));
    }
    gen[i] = m;
  }
  std::array<Mat, 6> finite;
  for (FiniteWeylElement u : FiniteWeylElement::all()) {
    Mat m = Mat::Identity();
    for (int i : u.word()) m = m * gen[i];
    finite[u.index()] = m;
  }
  const HeckeElement x = h.basis() == Basis::kX ? h : t_to_x(h);
  Eigen::Matrix<Complex, 6, 1> out = Eigen::Matrix<Complex, 6, 1>::Zero();
  for (const auto& [key, c] : x.terms()) {
    Eigen::Matrix<Complex, 6, 1> col = finite[key.theta().index()].col(0);
    for (FiniteWeylElement u : FiniteWeylElement::all()) col(u.index()) *= chi(u, key.wt());
    out += field_.to_complex(c) * col;
  }
  std::array<Complex, 6> result;
  for (int k = 0; k < 6; ++k) result[k] = out(k);
  return result;
}

}  // namespace cw
