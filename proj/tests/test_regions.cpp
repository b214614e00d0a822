#include "doctest.h"

#include <cmath>
#include <sstream>

#include "coinduel/errors.hpp"
#include "coinduel/optimizer.hpp"
#include "coinduel/regions.hpp"

using namespace coinduel;

TEST_CASE("fast N agrees with the certified optimizer") {
  for (const char* q : {"0.01", "0.1", "0.18", "0.3"}) {
    for (const char* p : {"0.2", "0.35", "0.5", "0.65"}) {
      if (!(parse_probability(q) < parse_probability(p))) continue;
      GameParams g = GameParams::parse(q, p);
      if (!g.in_triangle()) continue;
      CHECK(fast_optimal_n(g, 100000) == optimal_n(g).N.get_si());
    }
  }
  CHECK(fast_optimal_n(GameParams::parse("1e-5", "2e-5"), 100) == -1);
}

TEST_CASE("classify a single point") {
  RegionSample s = classify(GameParams::parse("0.18", "0.2"), 1000);
  CHECK(s.N == 26);
  CHECK(s.delta == 1);
  CHECK_FALSE(s.bounds_agree);
  CHECK_FALSE(s.lower_correct);
  CHECK(s.h_correct);
  CHECK(s.minus_correct);
  CHECK_FALSE(s.capped);
}

TEST_CASE("Monte Carlo is reproducible and thread-independent") {
  RegionOptions opt;
  opt.count = 9000;
  opt.seed = 7;
  auto a = sample_region(opt);
  opt.threads = 3;
  auto b = sample_region(opt);
  REQUIRE(a.size() == b.size());
  std::ostringstream ca, cb;
  write_csv(ca, a);
  write_csv(cb, b);
  CHECK(ca.str() == cb.str());
  for (const auto& s : a) {
    CHECK(s.q > 0);
    CHECK(s.q < s.p);
    CHECK(s.p + s.q < 1);
  }
  RegionSummary sum = summarize(a);
  CHECK(sum.bounds_agree.value() == doctest::Approx(M_PI * M_PI / 4 - 2).epsilon(0.1));
  CHECK(sum.bounds_agree.sigma() < 0.01);
}

TEST_CASE("grid mode covers the triangle at cell centres") {
  RegionOptions opt;
  opt.mode = SampleMode::Grid;
  opt.count = 20;
  auto g = sample_region(opt);
  // cells (i, j) with i < j and i + j + 1 < 20
  CHECK(g.size() == 90);
  for (const auto& s : g) CHECK_FALSE(s.capped);
}

TEST_CASE("capped samples leave N columns empty") {
  RegionSample s = classify(GameParams::parse("0.1", "0.1001"), 100);
  CHECK(s.capped);
  std::ostringstream os;
  write_csv(os, {s});
  std::string csv = os.str();
  CHECK(csv.find("q,p,N,delta,bounds_agree,lower_correct,improved_agree,h_correct\n") == 0);
  CHECK(csv.find(",,,") != std::string::npos);
  RegionSummary sum = summarize({s});
  CHECK(sum.capped == 1);
  CHECK(sum.lower_correct.total == 0);
}

TEST_CASE("svg output") {
  RegionOptions opt;
  opt.count = 50;
  std::ostringstream os;
  write_svg(os, sample_region(opt), SvgField::Delta);
  CHECK(os.str().find("<svg") == 0);
  CHECK(os.str().find("</svg>") != std::string::npos);
}

TEST_CASE("harmonic rescaling") {
  RescaledPoint r = rescale(0.18, 0.2);
  CHECK(r.s == doctest::Approx(0.38));
  CHECK(r.h == doctest::Approx(50));
  auto [q, p] = unrescale(r);
  CHECK(q == doctest::Approx(0.18));
  CHECK(p == doctest::Approx(0.2));
  CHECK_THROWS_AS(rescale(0.3, 0.3), DegenerateDiagonal);
  auto band = sample_rescaled(10, 500, 3, 100000);
  for (const auto& s : band) {
    RescaledPoint x = rescale(s.q, s.p);
    CHECK(x.h > 1);
    CHECK(x.h < 10 + 1e-9);
  }
  CHECK(summarize(band).minus_correct.value() > 0.8);
}
