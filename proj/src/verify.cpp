#include "coinduel/verify.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "coinduel/bounds.hpp"
#include "coinduel/errors.hpp"
#include "coinduel/exact_oracle.hpp"
#include "coinduel/indicator.hpp"
#include "coinduel/legendre.hpp"
#include "coinduel/nullcline.hpp"
#include "coinduel/optimizer.hpp"
#include "coinduel/regions.hpp"
#include "coinduel/winprob.hpp"

namespace coinduel {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Rational points a/D < b/D with a random denominator D.
class PointSource {
 public:
  explicit PointSource(std::uint64_t seed) : rng_(seed) {}

  GameParams any() {
    for (;;) {
      long D = std::uniform_int_distribution<long>(3, 1000)(rng_);
      std::uniform_int_distribution<long> num(1, D - 1);
      long a = num(rng_), b = num(rng_);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      return GameParams(Rational(a, D), Rational(b, D));
    }
  }

  GameParams inside() {
    for (;;) {
      GameParams g = any();
      if (g.in_triangle()) return g;
    }
  }

  // Alternates between p + q < 1 and p + q > 1.
  GameParams alternating() {
    flip_ = !flip_;
    GameParams g = inside();
    return flip_ ? g : reflect(g);
  }

  Rational diagonal_q() {
    long D = std::uniform_int_distribution<long>(3, 500)(rng_);
    long a = std::uniform_int_distribution<long>(1, (D - 1) / 2)(rng_);
    Rational q(a, D);
    return q;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  bool flip_ = false;
};

long upper_of(const GameParams& g) {
  BigInt u = compute_bounds(g).upper();
  return u.fits_slong_p() ? u.get_si() : std::numeric_limits<long>::max();
}

// Collects failures; keeps the first few messages.
struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first;

  void fail(const std::string& what) {
    ++failed;
    if (first.empty()) first = what;
  }
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) fail(what);
  }
  std::string summary() const {
    std::ostringstream os;
    os << checked << " checks, " << failed << " failures";
    if (!first.empty()) os << "; first: " << first;
    return os.str();
  }
};

template <class Fn>
CheckResult timed(std::string name, Fn body) {
  CheckResult r;
  r.name = std::move(name);
  auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail += std::string(r.detail.empty() ? "" : "; ") + "exception: " + e.what();
  }
  r.seconds = seconds_since(t0);
  return r;
}

const std::map<int, std::string>& table_values() {
  static const std::map<int, std::string> values = {
      {5, "72768"},
      {10, "7276890317"},
      {15, "727689031794675"},
      {20, "72768903179467598852"},
      {25, "7276890317946759885295987"},
      {30, "727689031794675988529598753552"},
      {100,
       "72768903179467598852959875355238752845211083888022"
       "00705287946389719626497897751224788321883906136928"},
  };
  return values;
}

}  // namespace

bool VerifyReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

CheckResult check_small_example() {
  return timed("small example", [](CheckResult& r) {
    GameParams g = GameParams::parse("0.18", "0.2");
    OptimalResult res = optimal_n(g);
    WinProbSeries series = f_series(g, 26, PrecisionConfig{});
    double f26 = series.values[26].f.to_double();
    Rational f1 = brute_force_f(g, 1);
    std::ostringstream os;
    os << "N=" << to_string(res.N) << " f(26)=" << f26 << " f(1)=" << f1;
    r.detail = os.str();
    r.passed = res.N == 26 && f26 >= 0.355 && f26 <= 0.365 && f1 == Rational(18, 125);
  });
}

CheckResult check_table(const std::vector<int>& ks) {
  return timed("table of giant N", [&](CheckResult& r) {
    Tally t;
    for (int k : ks) {
      auto it = table_values().find(k);
      if (it == table_values().end()) throw InvalidInput("no reference value for k=" + std::to_string(k));
      std::string e = std::to_string(k);
      GameParams g = GameParams::parse("1e-" + e, "2e-" + e);
      std::string got = to_string(optimal_n(g).N);
      t.expect(got == it->second, "k=" + e + " gave " + got);
    }
    r.detail = t.summary();
    r.passed = t.failed == 0;
  });
}

CheckResult check_oracle_equivalence(int points, std::uint64_t seed, long max_upper) {
  return timed("optimizer vs brute force", [&](CheckResult& r) {
    PointSource src(seed);
    Tally t;
    long ties = 0;
    while (t.checked < points) {
      GameParams g = src.alternating();
      long upper = upper_of(g);
      if (upper > max_upper) continue;
      OptimalResult res = optimal_n(g);
      BruteForceMax bf = brute_force_argmax(g, static_cast<unsigned>(upper + 2));
      if (res.tie) ++ties;
      t.expect(res.N == static_cast<unsigned long>(bf.N),
               g.describe() + ": " + to_string(res.N) + " vs " + std::to_string(bf.N));
    }
    r.detail = t.summary() + ", ties " + std::to_string(ties);
    r.passed = t.failed == 0;
  });
}

CheckResult check_identities(int points, std::uint64_t seed) {
  return timed("exact identities", [&](CheckResult& r) {
    PointSource src(seed);
    Tally t;
    const Bits bits = 256;
    for (int i = 0; i < points; ++i) {
      GameParams g = src.inside();
      Transform tr(g);
      const Rational& z = tr.z();
      for (unsigned n = 0; n <= 15; ++n) {
        t.expect(verify_recurrence_identity(g, n), "difference identity n=" + std::to_string(n));
        t.expect(psi(n, z) * 2 == phi(n + 1, z) - (Rational(1) + z) * phi(n, z),
                 "psi from phi n=" + std::to_string(n));
        Rational w = (Rational(1) + z) / (Rational(1) - z);
        t.expect(phi(n, z) == pow(Rational(1) - z, n) * legendre_p(n, w),
                 "phi vs Legendre n=" + std::to_string(n));
      }
      std::vector<Rational> gf = gf_coefficients(g, 12);
      std::vector<Rational> f = brute_force_f_series(g, 12);
      for (unsigned n = 0; n <= 12; ++n) {
        t.expect(gf[n] == f[n], "generating function t^" + std::to_string(n));
      }

      // Y_n from its definition against the three-term recurrence.
      if (i < 10) {
        const Rational m = g.margin();
        const std::vector<Rational> P = legendre_p_table(100, tr.u());
        Rational y_def = Rational(1) / m;
        Rational mk(1);
        YCoefficients coeffs = y_coefficients(g, bits);
        YState state = y_seed(g, bits);
        for (unsigned n = 1; n <= 100; ++n) {
          y_def += mk * P[n - 1];
          mk *= m;
          if (n > 1) state = y_advance(state, coeffs);
          Real exact(y_def, bits);
          Real err = abs(state.y - exact);
          Real scale = max(abs(exact), Real(1L, bits));
          t.expect(err.to_double() <= 1e-20 * scale.to_double(), "Y_" + std::to_string(n));
        }
      }
    }
    r.detail = t.summary();
    r.passed = t.failed == 0;
  });
}

CheckResult check_bounds_sandwich(int points, std::uint64_t seed) {
  return timed("bounds sandwich", [&](CheckResult& r) {
    PointSource src(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Tally t;
    for (int i = 0; i < points; ++i) {
      GameParams g = src.alternating();
      if (i % 4 == 3) {
        // near the diagonal p = q, where N is large
        Rational gap(std::llround(std::pow(10.0, 3 + 3 * unit(src.rng()))));
        gap = Rational(1) / gap;
        Rational q = g.q();
        if (q + gap >= Rational(1)) continue;
        g = GameParams(q, q + gap);
      }
      BoundSet b = compute_bounds(g);
      BigInt N = optimal_n(g).N;
      std::vector<std::pair<std::string, BigInt>> lows = {{"weak", b.lower_simple}};
      std::vector<std::pair<std::string, BigInt>> highs = {{"simple upper", b.upper_simple}};
      if (b.lower_simple_strict) lows.emplace_back("strict", *b.lower_simple_strict);
      if (b.lower_linear) lows.emplace_back("linear", *b.lower_linear);
      if (b.lower_improved) lows.emplace_back("N-", *b.lower_improved);
      if (b.upper_improved) highs.emplace_back("N+", *b.upper_improved);
      if (b.diagonal) {
        lows.emplace_back("diagonal", *b.diagonal);
        highs.emplace_back("diagonal", *b.diagonal);
      }
      for (const auto& [name, v] : lows) {
        t.expect(v <= N, g.describe() + ": " + name + " " + to_string(v) + " > N " + to_string(N));
      }
      for (const auto& [name, v] : highs) {
        t.expect(N <= v, g.describe() + ": " + name + " " + to_string(v) + " < N " + to_string(N));
      }
    }
    r.detail = t.summary();
    r.passed = t.failed == 0;
  });
}

CheckResult check_diagonal_symmetry(int diagonal_points, int pairs, std::uint64_t seed) {
  return timed("diagonal and symmetry", [&](CheckResult& r) {
    PointSource src(seed);
    Tally t;
    // q = n/(2n+1) makes f(n) = f(n+1); always include a few of those.
    for (int i = 0; i < diagonal_points; ++i) {
      Rational q = i < 8 ? Rational(i + 1, 2 * i + 3) : src.diagonal_q();
      GameParams g(q, Rational(1) - q);
      long upper = upper_of(g);
      if (upper > 200) {
        --i;
        continue;
      }
      BigInt N = diagonal_n(q);
      BruteForceMax bf = brute_force_argmax(g, static_cast<unsigned>(upper + 2));
      t.expect(N == static_cast<unsigned long>(bf.N),
               g.describe() + ": " + to_string(N) + " vs " + std::to_string(bf.N));
    }
    // The reflected point is solved by brute force as given, without reflection.
    for (int i = 0; i < pairs; ++i) {
      GameParams g = src.inside();
      long upper = upper_of(g);
      if (upper > 80) {
        --i;
        continue;
      }
      GameParams h = reflect(g);
      BigInt N = optimal_n(g).N;
      BruteForceMax bf = brute_force_argmax(h, static_cast<unsigned>(upper + 2));
      t.expect(N == static_cast<unsigned long>(bf.N),
               g.describe() + " vs reflection: " + to_string(N) + " vs " + std::to_string(bf.N));
    }
    r.detail = t.summary();
    r.passed = t.failed == 0;
  });
}

CheckResult check_nullclines(int samples) {
  return timed("nullcline traces", [&](CheckResult& r) {
    Tally t;
    TraceOptions opt;
    opt.samples = samples;
    std::vector<NullclineTrace> traces;
    for (long n = 1; n <= 10; ++n) {
      traces.push_back(trace(n, opt));
      const NullclineTrace& tr = traces.back();
      t.expect(tr.violations.empty(),
               "n=" + std::to_string(n) + ": " + (tr.violations.empty() ? "" : tr.violations[0]));
      const NullclineSample& last = tr.samples.back();
      t.expect(std::abs(last.p - tr.endpoint_p) < 1e-5 && std::abs(last.dp_dq - 1) < 1e-3,
               "endpoint n=" + std::to_string(n));
    }
    double sup1 = 0, sup2 = 0;
    for (const auto& s : traces[0].samples) sup1 = std::max(sup1, std::abs(s.p - p1_closed(s.q)));
    for (const auto& s : traces[1].samples) sup2 = std::max(sup2, std::abs(s.p - p2_closed(s.q)));
    t.expect(sup1 <= 1e-8, "p1 sup error " + std::to_string(sup1));
    t.expect(sup2 <= 1e-8, "p2 sup error " + std::to_string(sup2));
    for (std::size_t k = 0; k + 1 < traces.size(); ++k) {
      for (const auto& s : traces[k + 1].samples) {
        if (s.q > traces[k].q_end) break;
        double above = traces[k].p_at(s.q);
        t.expect(above > s.p, "nesting n=" + std::to_string(k + 1) + " at q=" + std::to_string(s.q));
      }
    }
    std::ostringstream os;
    os << t.summary() << ", sup |p1 - closed| " << sup1 << ", sup |p2 - closed| " << sup2;
    r.detail = os.str();
    r.passed = t.failed == 0;
  });
}

CheckResult check_areas(long samples, std::uint64_t seed, int threads) {
  return timed("Monte Carlo areas", [&](CheckResult& r) {
    RegionOptions opt;
    opt.mode = SampleMode::MonteCarlo;
    opt.count = samples;
    opt.seed = seed;
    opt.threads = threads;
    auto t0 = Clock::now();
    RegionSummary s = summarize(sample_region(opt));
    double elapsed = seconds_since(t0);
    const double agree_target = M_PI * M_PI / 4 - 2;
    std::ostringstream os;
    os.precision(4);
    os << std::fixed << "n=" << samples << " agree " << s.bounds_agree.value() << " (target "
       << agree_target << "), determined " << s.determined.value()
       << " (target 0.60), lower bound exact " << s.lower_correct.value()
       << " (target 0.87), capped " << s.capped;
    r.detail = os.str();
    r.passed = std::abs(s.bounds_agree.value() - agree_target) <= 0.02 &&
               std::abs(s.determined.value() - 0.60) <= 0.02 &&
               std::abs(s.lower_correct.value() - 0.87) <= 0.02 && elapsed <= 600;
  });
}

CheckResult check_unimodality(int points, std::uint64_t seed) {
  return timed("unimodality", [&](CheckResult& r) {
    PointSource src(seed);
    Tally t;
    long plateaus = 0;
    while (t.checked < points) {
      GameParams g = src.any();
      long upper = upper_of(g);
      if (upper > 60) continue;
      std::vector<Rational> f = brute_force_f_series(g, static_cast<unsigned>(upper + 10));
      // differences must read + ... + [0] - ... -
      int phase = 0;  // 0 rising, 1 after a zero, 2 falling
      long zeros = 0;
      bool ok = true;
      for (std::size_t n = 0; n + 1 < f.size(); ++n) {
        int s = (f[n + 1] - f[n]).sign();
        if (s > 0) {
          ok = ok && phase == 0;
        } else if (s == 0) {
          ok = ok && phase == 0;
          phase = 1;
          ++zeros;
        } else {
          phase = 2;
        }
      }
      ok = ok && phase == 2 && zeros <= 1;
      plateaus += zeros;
      t.expect(ok, g.describe());
    }
    r.detail = t.summary() + ", two-point plateaus " + std::to_string(plateaus);
    r.passed = t.failed == 0;
  });
}

CheckResult check_strategies(int points, std::uint64_t seed, const std::vector<unsigned long>& ns) {
  return timed("indicator strategies", [&](CheckResult& r) {
    PointSource src(seed);
    Tally t;
    PrecisionConfig cfg;
    for (int i = 0; i < points; ++i) {
      GameParams g = src.alternating();
      for (unsigned long n : ns) {
        IndicatorQuery query{g, BigInt(n)};
        std::string where = g.describe() + " n=" + std::to_string(n);
        try {
          Sign e = indicator_sign_with(query, Strategy::Exact, cfg).sign;
          Sign rec = indicator_sign_with(query, Strategy::Recurrence, cfg).sign;
          Sign quad = indicator_sign_with(query, Strategy::Quadrature, cfg).sign;
          t.expect(e == rec && e == quad, where + ": " + std::string(to_string(e)) + "/" +
                                              std::string(to_string(rec)) + "/" +
                                              std::string(to_string(quad)));
        } catch (const Error& err) {
          ++t.checked;
          t.fail(where + ": " + err.what());
        }
      }
    }
    r.detail = t.summary();
    r.passed = t.failed == 0;
  });
}

VerifyReport run_verify(VerifyLevel level, std::uint64_t seed, int threads) {
  const bool full = level == VerifyLevel::Full;
  VerifyReport report;
  report.checks.push_back(check_small_example());
  report.checks.push_back(check_table(full ? std::vector<int>{5, 10, 15, 20, 25, 30}
                                           : std::vector<int>{5, 10, 15, 20}));
  report.checks.push_back(check_oracle_equivalence(full ? 300 : 40, seed + 1));
  report.checks.push_back(check_identities(full ? 20 : 4, seed + 2));
  report.checks.push_back(check_bounds_sandwich(full ? 500 : 60, seed + 3));
  report.checks.push_back(check_diagonal_symmetry(full ? 50 : 12, full ? 100 : 20, seed + 4));
  report.checks.push_back(check_nullclines(100));
  report.checks.push_back(check_areas(full ? 1000000 : 20000, seed + 5, threads));
  report.checks.push_back(check_unimodality(full ? 200 : 30, seed + 6));
  report.checks.push_back(check_strategies(full ? 50 : 8, seed + 7));
  return report;
}

}  // namespace coinduel
