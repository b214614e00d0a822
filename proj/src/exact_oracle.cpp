#include "coinduel/exact_oracle.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace coinduel {

const std::vector<BigInt>& binomial_row(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<std::vector<BigInt>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<std::vector<BigInt>>(n + 1);
    auto& row = *slot;
    row[0] = 1;
    for (unsigned k = 1; k <= n; ++k) {
      row[k] = row[k - 1] * (n - k + 1) / k;
    }
  }
  return *slot;
}

namespace {

std::vector<BigInt> powers(const BigInt& base, unsigned n) {
  std::vector<BigInt> out(n + 1);
  out[0] = 1;
  for (unsigned k = 1; k <= n; ++k) out[k] = out[k - 1] * base;
  return out;
}

}  // namespace

Rational brute_force_f(const GameParams& params, unsigned n) {
  if (n == 0) return Rational(0);
  // p = a/b, q = c/d; everything is scaled by (b d)^n and kept integral.
  const BigInt a = params.p().num(), b = params.p().den();
  const BigInt c = params.q().num(), d = params.q().den();
  const auto& C = binomial_row(n);
  auto pa = powers(a, n), pb = powers(BigInt(b - a), n);
  auto pc = powers(c, n), pd = powers(BigInt(d - c), n);

  // tail[r] = sum_{s>r} C(n,s) c^s (d-c)^(n-s)
  std::vector<BigInt> tail(n + 1);
  tail[n] = 0;
  for (unsigned s = n; s >= 1; --s) {
    tail[s - 1] = tail[s] + C[s] * pc[s] * pd[n - s];
  }
  BigInt total = 0;
  for (unsigned r = 0; r < n; ++r) {
    total += C[r] * pa[r] * pb[n - r] * tail[r];
  }
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), BigInt(b * d).get_mpz_t(), n);
  return Rational(total, scale);
}

std::vector<Rational> brute_force_f_series(const GameParams& params,
                                           unsigned n_max) {
  std::vector<Rational> out;
  out.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) out.push_back(brute_force_f(params, n));
  return out;
}

BruteForceMax brute_force_argmax(const GameParams& params, unsigned n_max) {
  BruteForceMax best{1, brute_force_f(params, 1)};
  for (unsigned n = 2; n <= n_max; ++n) {
    Rational f = brute_force_f(params, n);
    if (f > best.f_at_N) best = {n, std::move(f)};
  }
  return best;
}

Rational exact_indicator(const GameParams& params, unsigned n) {
  Transform t(params);
  const BigInt zn = t.z().num(), zd = t.z().den();
  const BigInt yn = t.y().num(), yd = t.y().den();
  const auto& C = binomial_row(n);
  auto pzn = powers(zn, n + 1), pzd = powers(zd, n);

  // Phi = phi_n(z) zd^n, Psi = psi_n(z) zd^n
  BigInt phi = 0, psi = 0;
  for (unsigned r = 0; r <= n; ++r) {
    phi += C[r] * C[r] * pzn[r] * pzd[n - r];
  }
  for (unsigned r = 0; r < n; ++r) {
    psi += C[r + 1] * C[r] * pzn[r + 1] * pzd[n - r - 1];
  }
  return Rational(BigInt(yn * phi - yd * psi), BigInt(yd * pzd[n]));
}

bool verify_recurrence_identity(const GameParams& params, unsigned n) {
  Rational lhs = brute_force_f(params, n + 1) - brute_force_f(params, n);
  Rational factor = (Rational(1) - params.p()) * (Rational(1) - params.q());
  return lhs == pow(factor, n + 1) * exact_indicator(params, n);
}

namespace {

using Series = std::vector<Rational>;

Series mul(const Series& a, const Series& b, unsigned order) {
  Series out(order + 1, Rational(0));
  for (unsigned i = 0; i < a.size() && i <= order; ++i) {
    if (a[i].sign() == 0) continue;
    for (unsigned j = 0; j < b.size() && i + j <= order; ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> gf_coefficients(const GameParams& params, unsigned order) {
  const Rational& p = params.p();
  const Rational& q = params.q();
  const Rational a = Rational(1) - p - q;

  // (1 - a t)^2 - 4pq t = 1 + X,  X = -(2a + 4pq) t + a^2 t^2
  Series X(order + 1, Rational(0));
  if (order >= 1) X[1] = -(Rational(2) * a + Rational(4) * p * q);
  if (order >= 2) X[2] = a * a;

  // (1 + X)^(-1/2) = sum_k binom(-1/2, k) X^k
  Series root_inv(order + 1, Rational(0));
  Series x_pow(order + 1, Rational(0));
  x_pow[0] = 1;
  Rational coeff(1);
  for (unsigned k = 0; k <= order; ++k) {
    for (unsigned i = 0; i <= order; ++i) root_inv[i] += coeff * x_pow[i];
    x_pow = mul(x_pow, X, order);
    coeff *= Rational(BigInt(-(2 * static_cast<long>(k) + 1)), BigInt(2 * (k + 1)));
  }

  Series numerator(order + 1, Rational(0));
  numerator[0] = 1;
  if (order >= 1) numerator[1] = -(Rational(1) - p + q);
  Series inner = mul(numerator, root_inv, order);
  for (auto& c : inner) c = -c;
  inner[0] += Rational(1);

  // 1/(2(1-t)) = (1/2) sum t^k : running prefix sums
  Series out(order + 1, Rational(0));
  Rational running(0);
  for (unsigned k = 0; k <= order; ++k) {
    running += inner[k];
    out[k] = running / Rational(2);
  }
  return out;
}

}  // namespace coinduel
