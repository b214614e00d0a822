#include "coinduel/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "coinduel/errors.hpp"

namespace coinduel {

namespace {

const Rational kHalf(1, 2);

Rational inv_two_gap(const GameParams& g) { return Rational(1) / (Rational(2) * g.gap()); }

BigInt clamp0(BigInt v) { return v < 0 ? BigInt(0) : v; }

void require_triangle(const GameParams& g, const char* what) {
  if (!g.in_triangle()) throw InvalidInput(std::string(what) + " needs p + q < 1");
}

}  // namespace

BigInt weak_lower(const GameParams& params) {
  return clamp0((inv_two_gap(params) - kHalf).floor());
}

SimpleBounds simple_bounds(const GameParams& params) {
  const Rational one(1);
  BigInt lower = params.on_diagonal() ? weak_lower(params)
                                      : (inv_two_gap(params) + kHalf).floor();
  Rational top = std::max(one - params.p(), params.q());
  return {lower, (top / params.gap()).ceil()};
}

BigInt diagonal_n(const Rational& q) {
  if (q.sign() <= 0 || q >= kHalf) throw InvalidInput("diagonal_n needs 0 < q < 1/2");
  return (q / (Rational(1) - Rational(2) * q)).ceil();
}

bool diagonal_tie(const Rational& q) {
  return (q / (Rational(1) - Rational(2) * q)).is_integer();
}

BigInt linear_lower(const GameParams& params) {
  require_triangle(params, "linear_lower");
  return ((Rational(1) - params.p()) / (params.p() - params.q() * kHalf)).ceil();
}

BigInt ceil_larger_root(const Rational& a, const Rational& b, const Rational& c) {
  if (a.sign() <= 0) throw InvalidInput("ceil_larger_root needs a > 0");
  // Clear denominators.
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  const BigInt A = (a * Rational(l)).num();
  const BigInt B = (b * Rational(l)).num();
  const BigInt C = (c * Rational(l)).num();
  const BigInt disc = B * B - 4 * A * C;
  if (disc < 0) throw NoRealRoot("negative discriminant");
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
  BigInt k;
  BigInt num = s - B, den = 2 * A;
  mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  // k is at or right of the larger root iff Q(k) >= 0 and Q'(k) >= 0.
  auto right_of_root = [&](const BigInt& x) {
    return A * x * x + B * x + C >= 0 && 2 * A * x + B >= 0;
  };
  while (!right_of_root(k)) k += 1;
  while (right_of_root(BigInt(k - 1))) k -= 1;
  return k;
}

namespace {

struct Quadratic {
  Rational a, b, c;
};

Quadratic minus_quadratic(const GameParams& params) {
  const Rational& p = params.p();
  const Rational& q = params.q();
  const Rational one(1), two(2), three(3);
  const Rational d = params.gap();
  return {two * d * d * d, two * (p * p - three * p * q - p + q * q + two * q) * d,
          -((one - p) * q * (one - three * p + three * q))};
}

// DF = n/(2(n+1)) with DF = p(1-p)(nd + p - 1)/(q(1-q)(q - nd)), cleared.
Quadratic plus_quadratic(const GameParams& params) {
  const Rational& p = params.p();
  const Rational& q = params.q();
  const Rational one(1), two(2);
  const Rational d = params.gap();
  const Rational pp = p * (one - p);
  return {d * (two * pp + q * (one - q)), two * pp * (d + p - one) - q * q * (one - q),
          -(two * pp * (one - p))};
}

double approx_root(const Quadratic& f) {
  double A = f.a.to_double(), B = f.b.to_double(), C = f.c.to_double();
  double disc = std::max(0.0, B * B - 4 * A * C);
  // cancellation-free larger root
  return B <= 0 ? (-B + std::sqrt(disc)) / (2 * A) : (2 * C) / (-B - std::sqrt(disc));
}

BigInt ceil_root(const Quadratic& f) { return clamp0(ceil_larger_root(f.a, f.b, f.c)); }

}  // namespace

ImprovedBounds improved_bounds(const GameParams& params) {
  require_triangle(params, "improved_bounds");
  Quadratic lo = minus_quadratic(params), hi = plus_quadratic(params);
  return {ceil_root(lo), ceil_root(hi), approx_root(lo), approx_root(hi)};
}

BigInt h_approx(const GameParams& params) {
  require_triangle(params, "h_approx");
  const Rational& p = params.p();
  Rational v = inv_two_gap(params) - Rational(3, 2) +
               Rational(1) / (Rational(4) * p * (Rational(1) - p));
  return v.ceil();
}

BigInt delta_cap(const GameParams& params) {
  require_triangle(params, "delta_cap");
  const Rational& q = params.q();
  Rational w = Rational(1) - Rational(2) * q;
  BigInt extra = (w * w / (Rational(4) * q * (Rational(1) - q))).ceil();
  return (inv_two_gap(params) + kHalf).floor() + extra;
}

Real q_infinity(unsigned long j, Bits bits) {
  if (j == 0) throw InvalidInput("q_infinity needs j >= 1");
  Real ratio = Real(static_cast<long>(j), bits) / Real(static_cast<long>(j + 1), bits);
  Real out = (Real(1L, bits) - sqrt(ratio)) / 2;
  return out;
}

BigInt BoundSet::lower() const {
  BigInt v = lower_simple;
  for (const auto* o : {&lower_simple_strict, &lower_linear, &lower_improved}) {
    if (*o && **o > v) v = **o;
  }
  return v;
}

BigInt BoundSet::upper() const {
  BigInt v = upper_simple;
  if (upper_improved && *upper_improved < v) v = *upper_improved;
  return v;
}

BoundSet compute_bounds(const GameParams& params) {
  const GameParams g = canonical(params);
  BoundSet b;
  SimpleBounds s = simple_bounds(g);
  b.lower_simple = weak_lower(g);
  b.upper_simple = s.upper;
  if (g.on_diagonal()) {
    b.diagonal = diagonal_n(g.q());
    return b;
  }
  b.lower_simple_strict = s.lower;
  b.lower_linear = linear_lower(g);
  b.upper_improved = ceil_root(plus_quadratic(g));
  try {
    b.lower_improved = ceil_root(minus_quadratic(g));
  } catch (const NoRealRoot&) {
    // left unset; the other lower bounds still apply
  }
  b.h_approx = h_approx(g);
  b.delta_cap = delta_cap(g);
  return b;
}

}  // namespace coinduel
