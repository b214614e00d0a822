#include "coinduel/winprob.hpp"

#include <algorithm>
#include <cmath>

#include "coinduel/errors.hpp"
#include "coinduel/interval.hpp"
#include "coinduel/legendre.hpp"

namespace coinduel {

unsigned long WinProbSeries::argmax() const {
  unsigned long best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i].f > values[best].f) best = i;
  }
  return values.empty() ? 0 : values[best].n;
}

YCoefficients y_coefficients(const GameParams& params, Bits bits) {
  const Rational& p = params.p();
  const Rational& q = params.q();
  const Rational m = params.margin();
  Rational a0 = Rational(3) * p + Rational(3) * q - Rational(6) * p * q - Rational(4);
  Rational a1 = Rational(3) - Rational(2) * p - Rational(2) * q + Rational(4) * p * q;
  Rational b0 = Rational(7) * p - Rational(2) * p * p + Rational(7) * q -
                Rational(10) * p * q - Rational(2) * q * q - Rational(5);
  Rational b1 = Rational(3) - Rational(4) * p + p * p - Rational(4) * q +
                Rational(6) * p * q + q * q;
  return {Real(a0, bits), Real(a1, bits), Real(b0, bits), Real(b1, bits),
          Real(m * m, bits)};
}

YState y_seed(const GameParams& params, Bits bits) {
  const Rational m = params.margin();
  if (m.sign() == 0) throw DiagonalDomain("Y_n is undefined on p + q = 1");
  Rational inv = Rational(1) / m;
  return {1, Real(inv + Rational(1), bits), Real(inv, bits), Real(bits)};
}

YState y_advance(const YState& s, const YCoefficients& k) {
  const long n = s.n + 1;
  Real next = (k.a0 + k.a1 * n) * s.y - (k.b0 + k.b1 * n) * s.y1 +
              k.c * s.y2 * (n - 2);
  next = next / (n - 1);
  return {n, next, s.y, s.y1};
}

YState y_advance(const YState& s, const GameParams& params) {
  return y_advance(s, y_coefficients(params, s.y.precision()));
}

namespace {

struct Attempt {
  std::vector<WinProbEntry> values;
  Real worst;
};

Attempt evaluate(const GameParams& g, unsigned long n_max, Bits bits) {
  const Rational m = g.margin();
  const Rational d = g.gap();
  Transform tr(g);
  const Real inv_m(Rational(1) / m, bits);
  const Real dr(d, bits);

  // Y values
  YCoefficients coeffs = y_coefficients(g, bits);
  std::vector<Real> Y;
  Y.reserve(n_max + 2);
  Y.push_back(inv_m);
  YState st = y_seed(g, bits);
  Y.push_back(st.y);
  while (Y.size() < n_max + 2) {
    st = y_advance(st, coeffs);
    Y.push_back(st.y);
  }

  // Enclosures: T_k = m^k P_k(u) = T_{k-1} m r_k, S_n = sum_{k<n} T_k.
  const RealInterval u_iv(tr.u(), bits);
  const RealInterval m_iv(m, bits);
  const RealInterval d_iv(d, bits);
  const RealInterval one(Rational(1), bits);
  RealInterval T = one;
  RealInterval S(Rational(0), bits);
  RealInterval r = u_iv;

  Attempt out{{}, Real(bits)};
  out.values.reserve(n_max + 1);
  for (unsigned long n = 0; n <= n_max; ++n) {
    RealInterval f_iv = (one - T - d_iv * S) / 2;
    Real f = (Real(1L, bits) - (Y[n + 1] - Y[n]) - dr * (Y[n] - inv_m)) / 2;
    Real e1(bits), e2(bits), err(bits);
    mpfr_sub(e1.get(), f.get(), f_iv.lo().get(), MPFR_RNDU);
    mpfr_sub(e2.get(), f_iv.hi().get(), f.get(), MPFR_RNDU);
    mpfr_max(err.get(), e1.get(), e2.get(), MPFR_RNDU);
    if (err.sign() < 0) err = Real(bits);
    if (!err.is_finite() || err > out.worst) out.worst = err;
    out.values.push_back({n, std::move(f), std::move(err)});
    if (n == n_max) break;
    S = S + T;
    if (n >= 1) r = ratio_step(n, u_iv, r);
    T = T * m_iv * r;
  }
  return out;
}

}  // namespace

WinProbSeries f_series(const GameParams& params, unsigned long n_max,
                       const PrecisionConfig& cfg) {
  cfg.validate();
  if (params.on_diagonal()) {
    throw DiagonalDomain("the telescoped form divides by 1 - p - q");
  }
  if (n_max > kMaxSeriesLength) {
    throw InvalidInput("n_max above " + std::to_string(kMaxSeriesLength));
  }
  const GameParams g = canonical(params);

  // Guard digits for the 1/m cancellation in Y and for error growth along n.
  const double log_inv_m = std::max(0.0, -std::log10(g.margin().to_double()));
  int guard = 10 + static_cast<int>(std::ceil(log_inv_m + std::log10(n_max + 1.0)));
  int digits = cfg.working_digits;
  const Real target = Real::from_string("1e-" + std::to_string(cfg.working_digits),
                                        digits_to_bits(cfg.working_digits));
  for (;;) {
    Attempt a = evaluate(g, n_max, digits_to_bits(digits + guard));
    if (a.worst.is_finite() && a.worst <= target) {
      WinProbSeries out{params, std::move(a.values), digits + guard};
      return out;
    }
    if (digits >= cfg.max_digits) {
      throw PrecisionExhausted("f_series: error bound above 1e-" +
                               std::to_string(cfg.working_digits) + " at " +
                               std::to_string(digits + guard) + " digits");
    }
    digits = std::min(cfg.max_digits, digits * cfg.escalation_factor);
  }
}

}  // namespace coinduel
