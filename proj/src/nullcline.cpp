#include "coinduel/nullcline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coinduel/errors.hpp"
#include "coinduel/optimizer.hpp"

namespace coinduel {

double line_L(long n, double q) { return 1.0 / (2 * n + 1) + q; }
double line_K(long n, double q) { return 1.0 / (n + 1) + n * q / (2.0 * (n + 1)); }
double line_M(long n, double q) { return 1.0 / (n + 1) + n * q / (n + 1.0); }

double derivative_formula(long n, double q, double p) {
  double den = q * (1 - q) * (n * (q - p) + q);
  if (den == 0) {
    if (q == 0 && p == 1.0 / (n + 1)) return n / (2.0 * (n + 1));
    if (q == n / (2.0 * n + 1) && p == (n + 1) / (2.0 * n + 1)) return 1;
    throw SingularDenominator("derivative formula has a zero denominator");
  }
  return p * (1 - p) * (n * p - n * q + p - 1) / den;
}

Rational derivative_formula(long n, const Rational& q, const Rational& p) {
  const Rational one(1), nn(n);
  Rational den = q * (one - q) * (nn * (q - p) + q);
  if (den.sign() == 0) {
    if (q.sign() == 0 && p == Rational(1, n + 1)) return Rational(n, 2 * (n + 1));
    if (q == Rational(n, 2 * n + 1) && p == Rational(n + 1, 2 * n + 1)) return one;
    throw SingularDenominator("derivative formula has a zero denominator");
  }
  return p * (one - p) * (nn * p - nn * q + p - one) / den;
}

namespace {

template <class T>
T z_poly(long nl, const T& q, const T& p) {
  const T n(nl), one(1), two(2), three(3);
  const T d = p - q;
  return two * n * n * n * d * d * d +
         two * n * n *
             (two * p * p * p - p * p * (T(7) * q + one) + p * q * (T(7) * q + three) -
              two * q * q * (q + one)) +
         n * (two * p * p * p - p * p * (T(11) * q + two) + p * q * (T(11) * q + T(10)) -
              q * (two * q * q + T(7) * q + one)) -
         (p - one) * q * (three * p - three * q - one);
}

template <class T>
T cubic_poly(long nl, const T& q, const T& p) {
  const T n(nl), two(2), three(3), four(4), one(1);
  const T n2 = n * n, n3 = n2 * n;
  return (two * n3 + four * n2 + two * n) * p * p * p +
         p * p * (-T(6) * n3 * q - two * n2 * (T(7) * q + one) - n * (T(11) * q + two) -
                  three * q) +
         p * (T(6) * n3 * q * q + two * n2 * q * (T(7) * q + three) +
              n * q * (T(11) * q + T(10)) + three * q * q + four * q) -
         n * q * (two * q * q + T(7) * q + one) - three * q * q - q -
         two * n3 * q * q * q - four * n2 * q * q * (q + one);
}

}  // namespace

double second_derivative_poly(long n, double q, double p) { return z_poly<double>(n, q, p); }
Rational second_derivative_poly(long n, const Rational& q, const Rational& p) {
  return z_poly<Rational>(n, q, p);
}
Rational inflection_cubic(long n, const Rational& q, const Rational& p) {
  return cubic_poly<Rational>(n, q, p);
}
double inflection_cubic(long n, double q, double p) { return cubic_poly<double>(n, q, p); }

double second_derivative(long n, double q, double p) {
  double s = n * (p - q) - q;
  double den = q * q * (q - 1) * (q - 1) * s * s * s;
  if (den == 0) throw SingularDenominator("second derivative has a zero denominator");
  return p * (1 - p) * (1 - p - q) * second_derivative_poly(n, q, p) / den;
}

double p1_closed(double q) { return (1 - q) / (2 - 3 * q); }

double p2_closed(double q) {
  return (1 - q) / (2 - 4 * q + std::sqrt(1 - 4 * q + 6 * q * q));
}

double NullclineTrace::p_at(double q) const {
  if (samples.size() < 2 || q < samples.front().q || q > samples.back().q) {
    throw InvalidInput("p_at outside the traced domain");
  }
  auto it = std::lower_bound(samples.begin(), samples.end(), q,
                             [](const NullclineSample& s, double v) { return s.q < v; });
  if (it == samples.begin()) return it->p;
  const NullclineSample& b = *it;
  const NullclineSample& a = *(it - 1);
  double h = b.q - a.q;
  double t = (q - a.q) / h;
  double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * a.p + (t3 - 2 * t2 + t) * h * a.dp_dq +
         (-2 * t3 + 3 * t2) * b.p + (t3 - t2) * h * b.dp_dq;
}

namespace {

// Right-hand side in the variable w = p - K_n(q). The factor q cancels
// analytically between numerator and denominator.
struct Rhs {
  long n;
  double slope0;
  double dp(double q, double w) const {
    double p = line_K(n, q) + w;
    double num = p * (1 - p) * ((n + 1) * w / q - n / 2.0);
    double den = (1 - q) * (q - n * (p - q));
    return num / den;
  }
  double operator()(double q, double w) const { return dp(q, w) - slope0; }
};

void check_invariants(NullclineTrace& t, const Rhs& f, double q, double w) {
  const long n = t.n;
  double p = line_K(n, q) + w;
  double slope = f.dp(q, w);
  auto fail = [&](const char* what) {
    if (t.violations.size() < 50) {
      t.violations.push_back(std::string(what) + " at q=" + std::to_string(q));
    }
  };
  if (!(w > 0)) fail("p <= K_n");
  if (!(p > line_L(n, q))) fail("p <= L_n");
  if (!(p < line_M(n, q))) fail("p >= M_n");
  if (!(slope > f.slope0)) fail("slope <= n/(2(n+1))");
  if (!(slope < 1)) fail("slope >= 1");
}

}  // namespace

NullclineTrace trace(long n, const TraceOptions& opt) {
  if (n < 1) throw InvalidInput("trace needs n >= 1");
  if (opt.samples < 2) throw InvalidInput("trace needs at least two samples");
  NullclineTrace t;
  t.n = n;
  t.endpoint_q = n / (2.0 * n + 1);
  t.endpoint_p = (n + 1) / (2.0 * n + 1);
  t.q_start = opt.q_start;
  t.q_end = opt.q_end > 0 ? opt.q_end : t.endpoint_q - 1e-6;
  if (!(t.q_start > 0 && t.q_start < t.q_end && t.q_end < t.endpoint_q)) {
    throw InvalidInput("trace needs 0 < q_start < q_end < n/(2n+1)");
  }

  const Rhs f{n, n / (2.0 * (n + 1))};
  // Dormand-Prince 5(4) tableau
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = b1 - 5179.0 / 57600, e3 = b3 - 7571.0 / 16695,
                          e4 = b4 - 393.0 / 640, e5 = b5 - (-92097.0 / 339200),
                          e6 = b6 - 187.0 / 2100, e7 = -1.0 / 40;

  double q = t.q_start, w = 0;
  double h = 1e-6;
  auto record = [&](double qq, double ww) {
    t.samples.push_back({qq, line_K(n, qq) + ww, f.dp(qq, ww)});
  };
  record(q, w);
  const int m = opt.samples;
  for (int i = 1; i < m; ++i) {
    const double target =
        i == m - 1 ? t.q_end : t.q_start + (t.q_end - t.q_start) * i / (m - 1);
    while (q < target) {
      const bool last = q + h >= target;
      const double hh = last ? target - q : h;
      if (hh < 1e-15 * std::max(1.0, q) && !last) {
        throw StepFailure("step size underflow at q=" + std::to_string(q));
      }
      double k1 = f(q, w);
      double k2 = f(q + c2 * hh, w + hh * a21 * k1);
      double k3 = f(q + c3 * hh, w + hh * (a31 * k1 + a32 * k2));
      double k4 = f(q + c4 * hh, w + hh * (a41 * k1 + a42 * k2 + a43 * k3));
      double k5 = f(q + c5 * hh, w + hh * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
      double k6 = f(q + hh,
                    w + hh * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
      double w5 = w + hh * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      double k7 = f(q + hh, w5);
      double err =
          std::abs(hh * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7));
      if (!std::isfinite(err)) err = std::numeric_limits<double>::infinity();
      if (err <= opt.tolerance) {
        q = last ? target : q + hh;
        w = w5;
        ++t.steps_accepted;
        check_invariants(t, f, q, w);
      } else {
        ++t.steps_rejected;
      }
      double factor = err == 0 ? 5.0 : 0.9 * std::pow(opt.tolerance / err, 0.2);
      double next = hh * std::clamp(factor, 0.2, 5.0);
      if (err <= opt.tolerance && last) {
        h = std::max(h, next);  // a shortened landing step says little about h
      } else {
        h = next;
      }
      if (h < 1e-15 * std::max(1.0, q)) {
        throw StepFailure("step size underflow at q=" + std::to_string(q));
      }
    }
    record(q, w);
  }
  return t;
}

double inflection_root(long n, double q) {
  double lo = q, hi = 1 - q;
  double flo = inflection_cubic(n, q, lo), fhi = inflection_cubic(n, q, hi);
  if ((flo > 0) == (fhi > 0)) throw NoRealRoot("inflection cubic has no root in (q, 1-q)");
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = inflection_cubic(n, q, mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<InflectionSample> inflection_curve(long n, const std::vector<double>& qs) {
  std::vector<InflectionSample> out;
  out.reserve(qs.size());
  for (double q : qs) out.push_back({q, inflection_root(n, q)});
  return out;
}

double q_minus_closed(long n, long j) {
  double nd = n, jd = j;
  double inner = jd * (jd * jd + jd * (2 * nd - 1) + (nd - 1) * (nd - 1)) / (jd + 1);
  return (-std::sqrt(inner) + jd + nd - 1) / (2 * jd + 2 * nd - 1);
}

Intersection q_intersection(long n, long j, IntersectionIndexing indexing,
                            double tolerance) {
  if (n < 1 || j < 1) throw InvalidInput("q_intersection needs n, j >= 1");
  Intersection out;
  out.curve_index = n + 2 * j - 1;
  out.line_index = indexing == IntersectionIndexing::Arc ? n + j - 1 : n + j + 1;
  out.q_minus = q_minus_closed(n, j);
  const long m = out.curve_index, k = out.line_index;
  if (m == 2 * k) {
    // L_k meets p_{2k} at the left edge, where both equal 1/(2k+1).
    out.q = 0;
    return out;
  }
  TraceOptions opt;
  opt.tolerance = tolerance;
  opt.samples = 4001;
  NullclineTrace t = trace(m, opt);
  auto g = [&](double q) { return t.p_at(q) - line_L(k, q); };
  for (std::size_t i = 1; i < t.samples.size(); ++i) {
    double a = t.samples[i - 1].q, b = t.samples[i].q;
    double ga = t.samples[i - 1].p - line_L(k, a);
    double gb = t.samples[i].p - line_L(k, b);
    if ((ga > 0) != (gb > 0)) {
      for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
        double mid = 0.5 * (a + b);
        double gm = g(mid);
        if ((gm > 0) == (ga > 0)) {
          a = mid;
          ga = gm;
        } else {
          b = mid;
        }
      }
      out.q = 0.5 * (a + b);
      return out;
    }
  }
  throw NoIntersection("L_" + std::to_string(k) + " does not cross p_" + std::to_string(m));
}

BigInt delta(const GameParams& params) {
  if (!params.in_triangle()) throw InvalidInput("delta needs p + q < 1");
  OptimalResult r = optimal_n(params);
  BigInt base = (Rational(1) / (Rational(2) * params.gap()) + Rational(1, 2)).floor();
  return r.N - base;
}

}  // namespace coinduel
