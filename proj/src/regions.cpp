#include "coinduel/regions.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "coinduel/bounds.hpp"
#include "coinduel/errors.hpp"
#include "coinduel/interval.hpp"
#include "coinduel/legendre.hpp"
#include "coinduel/optimizer.hpp"

namespace coinduel {

namespace {

constexpr long kChunk = 4096;

long as_long(const BigInt& v) {
  return v.fits_slong_p() ? v.get_si() : std::numeric_limits<long>::max();
}

// Runs fn(chunk_index) for every chunk, spread over `threads` workers.
template <class Fn>
void for_chunks(long chunks, int threads, Fn fn) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(chunks)));
  if (threads == 1) {
    for (long c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex mutex;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (long c = t; c < chunks; c += threads) {
        try {
          fn(c);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::mt19937_64 chunk_stream(std::uint64_t seed, long chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

long fast_optimal_n(const GameParams& params, long n_cap) {
  if (!params.in_triangle()) throw InvalidInput("fast_optimal_n needs p + q < 1");
  Transform t(params);
  const DoubleInterval u = DoubleInterval::from_rational(t.u());
  const DoubleInterval rho = DoubleInterval::from_rational(t.rho());
  DoubleInterval r = u;  // r_1
  for (long n = 1; n <= n_cap; ++n) {
    if (!(r.lo > 0)) break;
    r = ratio_step(static_cast<unsigned long>(n), u, r);  // r_{n+1}
    if (r.hi < rho.lo) continue;           // J_n > 0
    if (r.lo > rho.hi) return n;           // J_n < 0
    // undecided in doubles
    OptimalResult res = optimal_n(params);
    long N = as_long(res.N);
    return N <= n_cap ? N : -1;
  }
  return -1;
}

RegionSample classify(const GameParams& g, long n_cap) {
  RegionSample s;
  s.q = g.q().to_double();
  s.p = g.p().to_double();
  BoundSet b = compute_bounds(g);
  const BigInt strict = *b.lower_simple_strict;
  const BigInt piecewise = std::max(strict, *b.lower_linear);
  const BigInt weak_piecewise = std::max(b.lower_simple, *b.lower_linear);
  s.bounds_agree = strict == b.upper_simple;
  s.determined = piecewise == b.upper_simple;

  if (b.lower() > n_cap) {
    s.capped = true;
    return s;
  }
  long N = fast_optimal_n(g, n_cap);
  if (N < 0) {
    s.capped = true;
    return s;
  }
  s.N = N;
  const BigInt bigN(N);
  if (bigN < b.lower() || bigN > b.upper()) {
    throw BoundViolation("N=" + std::to_string(N) + " outside [" + to_string(b.lower()) +
                         ", " + to_string(b.upper()) + "] at " + g.describe());
  }
  s.delta = as_long(BigInt(bigN - strict));
  s.lower_correct = bigN == piecewise;
  s.lower_weak_correct = bigN == weak_piecewise;
  s.improved_agree = b.lower_improved && b.upper_improved &&
                     *b.lower_improved == *b.upper_improved;
  s.minus_correct = b.lower_improved && *b.lower_improved == bigN;
  s.h_correct = *b.h_approx == bigN;
  return s;
}

std::vector<RegionSample> sample_region(const RegionOptions& opt) {
  if (opt.count < 1) throw InvalidInput("sample count must be positive");
  std::vector<RegionSample> out;
  if (opt.mode == SampleMode::Grid) {
    // cell centres ((2i+1)/(2R), (2j+1)/(2R)) strictly inside T
    const long R = opt.count;
    std::vector<std::pair<long, long>> cells;
    for (long i = 0; i < R; ++i) {
      for (long j = i + 1; j < R; ++j) {
        if ((2 * i + 1) + (2 * j + 1) < 2 * R) cells.emplace_back(i, j);
      }
    }
    out.resize(cells.size());
    const long chunks = (static_cast<long>(cells.size()) + kChunk - 1) / kChunk;
    for_chunks(chunks, opt.threads, [&](long c) {
      const long end = std::min<long>((c + 1) * kChunk, cells.size());
      for (long k = c * kChunk; k < end; ++k) {
        auto [i, j] = cells[k];
        GameParams g(Rational(2 * i + 1, 2 * R), Rational(2 * j + 1, 2 * R));
        out[k] = classify(g, opt.n_cap);
      }
    });
    return out;
  }

  out.resize(opt.count);
  const long chunks = (opt.count + kChunk - 1) / kChunk;
  for_chunks(chunks, opt.threads, [&](long c) {
    std::mt19937_64 rng = chunk_stream(opt.seed, c);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const long end = std::min((c + 1) * kChunk, opt.count);
    for (long k = c * kChunk; k < end; ++k) {
      for (;;) {
        double q = unit(rng), p = unit(rng);
        if (q > 0 && q < p && p + q < 1) {
          GameParams g = GameParams::from_doubles(q, p);
          if (!g.in_triangle()) continue;
          out[k] = classify(g, opt.n_cap);
          break;
        }
      }
    }
  });
  return out;
}

double Fraction::sigma() const {
  if (total == 0) return 0;
  double f = value();
  return std::sqrt(f * (1 - f) / total);
}

RegionSummary summarize(const std::vector<RegionSample>& samples) {
  RegionSummary s;
  auto add = [](Fraction& f, bool hit) {
    ++f.total;
    if (hit) ++f.hits;
  };
  for (const auto& x : samples) {
    ++s.samples;
    add(s.bounds_agree, x.bounds_agree);
    add(s.determined, x.determined);
    if (x.capped) {
      ++s.capped;
      continue;
    }
    add(s.lower_correct, x.lower_correct);
    add(s.lower_weak_correct, x.lower_weak_correct);
    add(s.improved_agree, x.improved_agree);
    add(s.h_correct, x.h_correct);
    add(s.minus_correct, x.minus_correct);
  }
  return s;
}

void write_csv(std::ostream& os, const std::vector<RegionSample>& samples, int digits) {
  os << "q,p,N,delta,bounds_agree,lower_correct,improved_agree,h_correct\n";
  std::ostringstream line;
  line << std::setprecision(digits);
  for (const auto& s : samples) {
    line.str("");
    line << s.q << ',' << s.p << ',';
    if (s.capped) {
      line << ",," << s.bounds_agree << ",,,";
    } else {
      line << s.N << ',' << s.delta << ',' << s.bounds_agree << ',' << s.lower_correct
           << ',' << s.improved_agree << ',' << s.h_correct;
    }
    os << line.str() << '\n';
  }
}

void write_svg(std::ostream& os, const std::vector<RegionSample>& samples, SvgField field,
               int size) {
  static const char* palette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                  "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};
  const double w = size / 2.0, h = size;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& s : samples) {
    const char* colour = "#dddddd";
    if (!s.capped) {
      long k = 0;
      switch (field) {
        case SvgField::N: k = s.N % 10; break;
        case SvgField::Delta: k = std::min(s.delta, 9L); break;
        case SvgField::BoundsAgree: k = s.bounds_agree ? 4 : 2; break;
        case SvgField::LowerCorrect: k = s.lower_correct ? 4 : 2; break;
        case SvgField::ImprovedAgree: k = s.improved_agree ? 4 : 2; break;
        case SvgField::HCorrect: k = s.h_correct ? 4 : 2; break;
      }
      colour = palette[std::clamp(k, 0L, 9L)];
    }
    // q in [0, 1/2] to x, p in [0, 1] to y (upwards)
    os << "<rect x=\"" << s.q * 2 * w << "\" y=\"" << (1 - s.p) * h
       << "\" width=\"1.5\" height=\"1.5\" fill=\"" << colour << "\"/>\n";
  }
  os << "</svg>\n";
}

RescaledPoint rescale(double q, double p) {
  if (p == q) throw DegenerateDiagonal("rescale needs p != q");
  return {p + q, 1 / (p - q)};
}

RescaledPoint rescale(const GameParams& params) {
  return rescale(params.q().to_double(), params.p().to_double());
}

std::pair<double, double> unrescale(const RescaledPoint& x) {
  double d = 1 / x.h;
  return {(x.s - d) / 2, (x.s + d) / 2};
}

std::vector<RegionSample> sample_rescaled(double h_max, long count, std::uint64_t seed,
                                          long n_cap, int threads) {
  if (!(h_max > 1) || count < 1) throw InvalidInput("sample_rescaled needs h_max > 1");
  std::vector<RegionSample> out(count);
  const long chunks = (count + kChunk - 1) / kChunk;
  for_chunks(chunks, threads, [&](long c) {
    std::mt19937_64 rng = chunk_stream(seed ^ 0x9e3779b97f4a7c15ULL, c);
    std::uniform_real_distribution<double> hs(1.0, h_max), ss(0.0, 1.0);
    const long end = std::min((c + 1) * kChunk, count);
    for (long k = c * kChunk; k < end; ++k) {
      for (;;) {
        RescaledPoint x{ss(rng), hs(rng)};
        if (!(x.s > 1 / x.h)) continue;
        auto [q, p] = unrescale(x);
        if (!(q > 0 && q < p && p + q < 1)) continue;
        GameParams g = GameParams::from_doubles(q, p);
        if (!g.in_triangle()) continue;
        out[k] = classify(g, n_cap);
        break;
      }
    }
  });
  return out;
}

}  // namespace coinduel
