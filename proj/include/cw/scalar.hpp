#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <variant>

namespace cw {

using Rational = mpq_class;
using Complex = std::complex<double>;

Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

// a + b*sqrt(q) in exact mode, or a complex double in numeric mode.
class Scalar {
 public:
  enum class Mode { kExact, kNumeric };

  struct Quadratic {
    Rational a;
    Rational b;
  };

  Scalar() : value_(Quadratic{}) {}
  static Scalar exact(Rational a, Rational b = 0) {
    a.canonicalize();
    b.canonicalize();
    return Scalar(Quadratic{std::move(a), std::move(b)});
  }
  static Scalar numeric(Complex z) { return Scalar(z); }

  Mode mode() const { return value_.index() == 0 ? Mode::kExact : Mode::kNumeric; }
  bool is_exact() const { return mode() == Mode::kExact; }
  bool is_zero() const;

  const Rational& rational_part() const { return std::get<Quadratic>(value_).a; }
  const Rational& sqrt_part() const { return std::get<Quadratic>(value_).b; }
  Complex numeric_value() const { return std::get<Complex>(value_); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  bool operator==(const Scalar& o) const;

  Scalar scaled(const Rational& r) const;
  Scalar conj() const;

 private:
  explicit Scalar(Quadratic v) : value_(std::move(v)) {}
  explicit Scalar(Complex z) : value_(z) {}
  void require_same_mode(const Scalar& o) const;

  std::variant<Quadratic, Complex> value_;
};

// Q(sqrt q) for a fixed rational q > 0, realized exactly or in complex doubles.
class Field {
 public:
  explicit Field(Rational q, Scalar::Mode mode = Scalar::Mode::kExact);

  const Rational& q() const { return q_; }
  double q_double() const { return q_d_; }
  Scalar::Mode mode() const { return mode_; }
  bool exact() const { return mode_ == Scalar::Mode::kExact; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_rational(const Rational& r) const;
  Scalar from_complex(Complex z) const;  // numeric mode only
  Scalar sqrt_q() const;
  Scalar q_half_power(int k) const;  // q^{k/2}
  Scalar frak() const;               // q^{1/2} - q^{-1/2}

  Scalar mul(const Scalar& x, const Scalar& y) const;
  Scalar inv(const Scalar& x) const;
  Scalar div(const Scalar& x, const Scalar& y) const { return mul(x, inv(y)); }
  Complex to_complex(const Scalar& x) const;
  Scalar to_numeric(const Scalar& x) const;
  std::string to_string(const Scalar& x) const;

 private:
  Scalar normalize(Scalar x) const;

  Rational q_;
  bool square_ = false;  // q = root_^2 with root_ rational; sqrt parts are folded in
  Rational root_;
  double q_d_;
  double sqrt_q_d_;
  Scalar::Mode mode_;
};

}  // namespace cw
