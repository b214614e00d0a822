#include "coinduel/numerics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <utility>

#include "coinduel/errors.hpp"

namespace coinduel {

std::string to_string(const BigInt& value) { return value.get_str(10); }

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  value_.canonicalize();
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw InvalidInput("non-finite double");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return Rational(q);
}

BigInt Rational::floor() const {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

BigInt Rational::ceil() const {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

std::string Rational::to_fraction_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

namespace {

// Inserts a decimal point `frac_digits` places from the right of |scaled|.
std::string place_point(const BigInt& scaled, long frac_digits) {
  BigInt mag = abs(scaled);
  std::string digits = mag.get_str();
  if (frac_digits > 0) {
    if (static_cast<long>(digits.size()) <= frac_digits) {
      digits.insert(0, frac_digits - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - frac_digits, ".");
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
  }
  return (sgn(scaled) < 0 ? "-" : "") + digits;
}

}  // namespace

std::string Rational::to_decimal_string(int max_digits) const {
  BigInt den = value_.get_den();
  long k = 0;
  BigInt rest = den;
  long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 2)) { rest /= 2; ++twos; }
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) { rest /= 5; ++fives; }
  if (rest == 1 && std::max(twos, fives) <= max_digits) {
    k = std::max(twos, fives);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(k));
    BigInt scaled = value_.get_num() * scale / den;
    return place_point(scaled, k);
  }
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(max_digits));
  // round half away from zero
  BigInt twice = 2 * abs(value_.get_num()) * scale;
  BigInt q = (twice + den) / (2 * den);
  if (sgn(value_) < 0) q = -q;
  return place_point(q, max_digits);
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw InvalidInput("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational pow(const Rational& base, unsigned long exponent) {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.mpq().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.mpq().get_den_mpz_t(), exponent);
  return Rational(n, d);
}

Rational abs(const Rational& value) {
  return value.sign() < 0 ? -value : value;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_fraction_string();
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (!all_digits(text)) {
    throw InvalidInput("not a non-negative integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  text = trim(text);
  if (text.empty()) throw InvalidInput("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view a = trim(text.substr(0, slash));
    std::string_view b = trim(text.substr(slash + 1));
    if (!all_digits(a) || !all_digits(b)) {
      throw InvalidInput("malformed fraction: '" + original + "'");
    }
    BigInt den(std::string(b), 10);
    if (den == 0) throw InvalidInput("zero denominator: '" + original + "'");
    return Rational(BigInt(std::string(a), 10), den);
  }

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view ex = text.substr(e + 1);
    bool negative = false;
    if (!ex.empty() && (ex.front() == '+' || ex.front() == '-')) {
      negative = ex.front() == '-';
      ex.remove_prefix(1);
    }
    if (!all_digits(ex) || ex.size() > 9) {
      throw InvalidInput("malformed exponent: '" + original + "'");
    }
    exponent = std::stol(std::string(ex));
    if (negative) exponent = -exponent;
  }
  std::string_view int_part = mantissa;
  std::string_view frac_part;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    int_part = mantissa.substr(0, dot);
    frac_part = mantissa.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) ||
      (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw InvalidInput("malformed decimal: '" + original + "'");
  }
  std::string digits = std::string(int_part) + std::string(frac_part);
  BigInt num(digits, 10);
  long scale = exponent - static_cast<long>(frac_part.size());
  BigInt p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  return scale >= 0 ? Rational(BigInt(num * p10)) : Rational(num, p10);
}

Rational parse_probability(std::string_view text) {
  Rational r = parse_rational(text);
  if (r.sign() <= 0 || r >= Rational(1)) {
    throw InvalidInput("probability must lie strictly between 0 and 1: '" +
                       std::string(text) + "'");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Real

Bits digits_to_bits(long digits) {
  return static_cast<Bits>(std::ceil(static_cast<double>(digits) * 3.321928094887362)) + 16;
}

Real::Real(Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(double value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(long value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const BigInt& value, Bits bits, mpfr_rnd_t rnd) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), rnd);
}

Real::Real(const Rational& value, Bits bits, mpfr_rnd_t rnd) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.mpq().get_mpq_t(), rnd);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::from_string(const std::string& text, Bits bits) {
  Real r(bits);
  if (mpfr_set_str(r.value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw InvalidInput("malformed real: '" + text + "'");
  }
  return r;
}

std::string Real::to_string(int digits) const {
  if (!is_finite()) return mpfr_nan_p(value_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
  std::string fmt = "%." + std::to_string(std::max(1, digits - 1)) + "Re";
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, fmt.c_str(), value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

namespace {

Bits wider(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Real& Real::operator+=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r(a.precision());
  mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, long b) {
  Real r(a.precision());
  mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
Real operator+(const Real& a, long b) {
  Real r(a.precision());
  mpfr_add_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, long b) {
  Real r(a.precision());
  mpfr_sub_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

#define COINDUEL_UNARY(name, fn)             \
  Real name(const Real& x) {                 \
    Real r(x.precision());                   \
    fn(r.get(), x.get(), MPFR_RNDN);         \
    return r;                                \
  }

COINDUEL_UNARY(abs, mpfr_abs)
COINDUEL_UNARY(sqrt, mpfr_sqrt)
COINDUEL_UNARY(exp, mpfr_exp)
COINDUEL_UNARY(log, mpfr_log)
COINDUEL_UNARY(log1p, mpfr_log1p)
COINDUEL_UNARY(expm1, mpfr_expm1)
COINDUEL_UNARY(sin, mpfr_sin)
COINDUEL_UNARY(cos, mpfr_cos)
COINDUEL_UNARY(cosh, mpfr_cosh)
COINDUEL_UNARY(sinh, mpfr_sinh)
COINDUEL_UNARY(asin, mpfr_asin)

#undef COINDUEL_UNARY

Real pi(Bits bits) {
  Real r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Real& value) {
  return os << value.to_string(20);
}

// ---------------------------------------------------------------------------
// Sign certification

void PrecisionConfig::validate() const {
  if (working_digits < 1) throw InvalidInput("working_digits must be positive");
  if (max_digits < working_digits) {
    throw InvalidInput("working_digits must not exceed max_digits");
  }
  if (escalation_factor < 2) throw InvalidInput("escalation_factor must be >= 2");
}

PrecisionConfig PrecisionConfig::with_working_digits(int digits) const {
  PrecisionConfig c = *this;
  c.working_digits = digits;
  c.max_digits = std::max(c.max_digits, digits);
  return c;
}

std::string_view to_string(Sign sign) {
  switch (sign) {
    case Sign::Negative: return "Negative";
    case Sign::Zero: return "Zero";
    case Sign::Positive: return "Positive";
  }
  return "?";
}

std::string_view to_string(SignMethod method) {
  switch (method) {
    case SignMethod::ExactRational: return "ExactRational";
    case SignMethod::HighPrecisionRecurrence: return "HighPrecisionRecurrence";
    case SignMethod::Quadrature: return "Quadrature";
  }
  return "?";
}

Sign sign_of(int s) {
  return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

CertifiedSign certify_sign(const Evaluator& evaluator,
                           const PrecisionConfig& cfg, SignMethod method) {
  cfg.validate();
  long digits = cfg.working_digits;
  while (true) {
    Estimate e = evaluator(static_cast<int>(digits));
    if (e.value.is_finite() && e.error.is_finite() && abs(e.value) > e.error) {
      return {sign_of(e.value.sign()), method, static_cast<int>(digits)};
    }
    if (digits >= cfg.max_digits) break;
    digits = std::min<long>(digits * cfg.escalation_factor, cfg.max_digits);
  }
  throw UncertifiedSign("sign not certified within " +
                        std::to_string(cfg.max_digits) + " digits");
}

}  // namespace coinduel
