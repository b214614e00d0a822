#pragma once

// Exact rationals, MPFR-backed reals and the precision-escalation loop used
// for every sign decision in the library.

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace coinduel {

using BigInt = mpz_class;

std::string to_string(const BigInt& value);

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(implicit)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(implicit)
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& value);

  /// Exact value of a finite binary double.
  static Rational from_double(double value);

  const mpq_class& mpq() const { return value_; }
  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  BigInt floor() const;
  BigInt ceil() const;

  /// Rounded toward zero, like mpq_get_d.
  double to_double() const { return value_.get_d(); }
  /// "a/b", or "a" when the denominator is one.
  std::string to_fraction_string() const;
  /// Decimal rendering; exact when the denominator divides a power of ten
  /// within `max_digits` fractional digits, otherwise rounded.
  std::string to_decimal_string(int max_digits = 40) const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Rational pow(const Rational& base, unsigned long exponent);
Rational abs(const Rational& value);
std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Parses a probability given as a decimal ("0.18", "1e-5", "2.5E-30") or a
/// fraction of integers ("1/3"). The value must lie strictly inside (0, 1).
Rational parse_probability(std::string_view text);

/// Parses any non-negative decimal or fraction without the range check.
Rational parse_rational(std::string_view text);

/// Parses a non-negative integer of arbitrary size.
BigInt parse_bigint(std::string_view text);

// ---------------------------------------------------------------------------
// Real
// ---------------------------------------------------------------------------

using Bits = mpfr_prec_t;

/// Bits needed to carry `digits` decimal digits, plus a small guard.
Bits digits_to_bits(long digits);

/// Owning wrapper around an mpfr_t. Binary operators round to nearest at the
/// larger of the two operand precisions.
class Real {
 public:
  explicit Real(Bits bits = 64);
  Real(double value, Bits bits);
  Real(long value, Bits bits);
  Real(int value, Bits bits) : Real(static_cast<long>(value), bits) {}
  Real(const BigInt& value, Bits bits, mpfr_rnd_t rnd = MPFR_RNDN);
  Real(const Rational& value, Bits bits, mpfr_rnd_t rnd = MPFR_RNDN);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_string(const std::string& text, Bits bits);

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  Bits precision() const { return mpfr_get_prec(value_); }

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 20) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);

  friend bool operator<(const Real& a, const Real& b) {
    return mpfr_less_p(a.value_, b.value_) != 0;
  }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) {
    return mpfr_lessequal_p(a.value_, b.value_) != 0;
  }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }
  friend bool operator==(const Real& a, const Real& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real expm1(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real cosh(const Real& x);
Real sinh(const Real& x);
Real asin(const Real& x);
Real pi(Bits bits);
Real max(const Real& a, const Real& b);
std::ostream& operator<<(std::ostream& os, const Real& value);

// ---------------------------------------------------------------------------
// Sign certification
// ---------------------------------------------------------------------------

struct PrecisionConfig {
  int working_digits = 40;
  int max_digits = 4000;
  int escalation_factor = 2;

  /// Throws InvalidInput unless 1 <= working_digits <= max_digits and the
  /// factor is at least 2.
  void validate() const;
  PrecisionConfig with_working_digits(int digits) const;
};

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };
enum class SignMethod { ExactRational, HighPrecisionRecurrence, Quadrature };

std::string_view to_string(Sign sign);
std::string_view to_string(SignMethod method);
Sign sign_of(int s);

struct CertifiedSign {
  Sign sign = Sign::Zero;
  SignMethod method = SignMethod::ExactRational;
  /// Zero for exact evaluations.
  int digits_used = 0;

  static CertifiedSign exact(int s) {
    return {sign_of(s), SignMethod::ExactRational, 0};
  }
};

/// A value together with a bound on its absolute error.
struct Estimate {
  Real value;
  Real error;
};

using Evaluator = std::function<Estimate(int digits)>;

/// Evaluates at cfg.working_digits and multiplies the digit count by
/// cfg.escalation_factor until |value| > error. Never returns Zero; throws
/// UncertifiedSign once cfg.max_digits has been tried.
CertifiedSign certify_sign(const Evaluator& evaluator,
                           const PrecisionConfig& cfg,
                           SignMethod method = SignMethod::HighPrecisionRecurrence);

}  // namespace coinduel
