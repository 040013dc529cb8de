#include "cw/scalar.hpp"

#include <cmath>
#include <cstdlib>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace cw {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s += c;
  }
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.find_first_of(".eE") != std::string::npos) {
    static const std::regex decimal(R"(([+-]?)(\d*)\.?(\d*)(?:[eE]([+-]?\d+))?)");
    std::smatch m;
    if (!std::regex_match(s, m, decimal) || (m[2].length() == 0 && m[3].length() == 0)) {
      throw std::invalid_argument("malformed rational '" + text + "'");
    }
    const std::string digits = m[2].str() + m[3].str();
    Rational r(mpz_class(digits, 10));
    long exponent = -static_cast<long>(m[3].length());
    if (m[4].matched) exponent += std::stol(m[4].str());
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    if (exponent >= 0) {
      r *= scale;
    } else {
      r /= scale;
    }
    r.canonicalize();
    return m[1] == "-" ? Rational(-r) : r;
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) { return r.get_str(); }

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<Quadratic>(&value_)) return q->a == 0 && q->b == 0;
  return std::get<Complex>(value_) == Complex{};
}

void Scalar::require_same_mode(const Scalar& o) const {
  if (mode() != o.mode()) throw std::logic_error("mixed exact and numeric scalars");
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<Quadratic>(&value_)) return exact(-q->a, -q->b);
  return numeric(-std::get<Complex>(value_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_mode(o);
  if (auto* q = std::get_if<Quadratic>(&value_)) {
    const auto& p = std::get<Quadratic>(o.value_);
    q->a += p.a;
    q->b += p.b;
  } else {
    std::get<Complex>(value_) += std::get<Complex>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_mode(o);
  if (auto* q = std::get_if<Quadratic>(&value_)) {
    const auto& p = std::get<Quadratic>(o.value_);
    q->a -= p.a;
    q->b -= p.b;
  } else {
    std::get<Complex>(value_) -= std::get<Complex>(o.value_);
  }
  return *this;
}

bool Scalar::operator==(const Scalar& o) const {
  if (mode() != o.mode()) return false;
  if (const auto* q = std::get_if<Quadratic>(&value_)) {
    const auto& p = std::get<Quadratic>(o.value_);
    return q->a == p.a && q->b == p.b;
  }
  return std::get<Complex>(value_) == std::get<Complex>(o.value_);
}

Scalar Scalar::scaled(const Rational& r) const {
  if (const auto* q = std::get_if<Quadratic>(&value_)) return exact(q->a * r, q->b * r);
  return numeric(std::get<Complex>(value_) * r.get_d());
}

Scalar Scalar::conj() const {
  if (is_exact()) return *this;
  return numeric(std::conj(std::get<Complex>(value_)));
}

Field::Field(Rational q, Scalar::Mode mode) : q_(std::move(q)), mode_(mode) {
  if (q_ <= 0) throw std::invalid_argument("q must be positive");
  q_d_ = q_.get_d();
  sqrt_q_d_ = std::sqrt(q_d_);
  mpz_class num_root, den_root;
  mpz_sqrt(num_root.get_mpz_t(), q_.get_num_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), q_.get_den_mpz_t());
  if (num_root * num_root == q_.get_num() && den_root * den_root == q_.get_den()) {
    square_ = true;
    root_ = Rational(num_root, den_root);
    root_.canonicalize();
  }
}

Scalar Field::normalize(Scalar x) const {
  if (!square_ || !x.is_exact() || x.sqrt_part() == 0) return x;
  return Scalar::exact(x.rational_part() + x.sqrt_part() * root_);
}

Scalar Field::zero() const { return exact() ? Scalar::exact(0) : Scalar::numeric(0.0); }
Scalar Field::one() const { return from_rational(1); }

Scalar Field::from_rational(const Rational& r) const {
  return exact() ? Scalar::exact(r) : Scalar::numeric(r.get_d());
}

Scalar Field::from_complex(Complex z) const {
  if (exact()) throw std::logic_error("complex value in exact mode");
  return Scalar::numeric(z);
}

Scalar Field::sqrt_q() const {
  return exact() ? normalize(Scalar::exact(0, 1)) : Scalar::numeric(sqrt_q_d_);
}

Scalar Field::q_half_power(int k) const {
  if (!exact()) return Scalar::numeric(std::pow(sqrt_q_d_, k));
  const int half = k >= 0 ? k / 2 : -((-k + 1) / 2);
  const bool odd = (k - 2 * half) != 0;
  Rational p = 1;
  for (int j = 0; j < (half >= 0 ? half : -half); ++j) p *= q_;
  if (half < 0) p = 1 / p;
  return odd ? normalize(Scalar::exact(0, p)) : Scalar::exact(p);
}

Scalar Field::frak() const { return q_half_power(1) - q_half_power(-1); }

Scalar Field::mul(const Scalar& x, const Scalar& y) const {
  if (x.mode() != y.mode()) throw std::logic_error("mixed exact and numeric scalars");
  if (x.is_exact()) {
    const Rational& a = x.rational_part();
    const Rational& b = x.sqrt_part();
    const Rational& c = y.rational_part();
    const Rational& d = y.sqrt_part();
    if (b == 0 && d == 0) return Scalar::exact(a * c);
    return normalize(Scalar::exact(a * c + b * d * q_, a * d + b * c));
  }
  return Scalar::numeric(x.numeric_value() * y.numeric_value());
}

Scalar Field::inv(const Scalar& x) const {
  if (x.is_zero()) throw std::domain_error("division by zero scalar");
  if (x.is_exact()) {
    const Scalar y = normalize(x);
    const Rational& a = y.rational_part();
    const Rational& b = y.sqrt_part();
    const Rational norm = a * a - b * b * q_;
    if (norm == 0) throw std::domain_error("zero divisor in Q(sqrt q): q is a square");
    return Scalar::exact(a / norm, -b / norm);
  }
  return Scalar::numeric(1.0 / x.numeric_value());
}

Complex Field::to_complex(const Scalar& x) const {
  if (x.is_exact()) return {x.rational_part().get_d() + x.sqrt_part().get_d() * sqrt_q_d_, 0.0};
  return x.numeric_value();
}

Scalar Field::to_numeric(const Scalar& x) const { return Scalar::numeric(to_complex(x)); }

std::string Field::to_string(const Scalar& x) const {
  std::ostringstream os;
  if (x.is_exact()) {
    os << x.rational_part().get_str();
    if (x.sqrt_part() != 0) os << (x.sqrt_part() > 0 ? "+" : "") << x.sqrt_part().get_str() << "*sqrt(q)";
  } else {
    os.precision(17);
    os << x.numeric_value();
  }
  return os.str();
}

}  // namespace cw
