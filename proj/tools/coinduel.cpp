// coinduel: optimal game length, win probabilities, indicator signs, bounds,
// nullcline traces and region maps for the biased-coin duel.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "coinduel/bounds.hpp"
#include "coinduel/errors.hpp"
#include "coinduel/indicator.hpp"
#include "coinduel/nullcline.hpp"
#include "coinduel/optimizer.hpp"
#include "coinduel/regions.hpp"
#include "coinduel/verify.hpp"
#include "coinduel/winprob.hpp"

using json = nlohmann::ordered_json;
using namespace coinduel;

namespace {

constexpr const char* kSchemaVersion = "1.0";

constexpr int kExitFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitUncertified = 3;

struct Envelope {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  int precision_used = 0;
};

void emit(const Envelope& env, double ms, bool as_json, const std::string& text) {
  if (!as_json) {
    std::cout << text;
    return;
  }
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = env.command;
  doc["inputs"] = env.inputs;
  doc["result"] = env.result;
  doc["timing_ms"] = ms;
  doc["precision_used"] = env.precision_used;
  std::cout << doc.dump(2) << "\n";
}

// --precision, then COINDUEL_PRECISION, then nothing (callers pick a default).
std::optional<int> requested_digits(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("COINDUEL_PRECISION")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw InvalidInput(std::string("COINDUEL_PRECISION must be a positive integer, got '") + env + "'");
  }
  return std::nullopt;
}

PrecisionConfig precision_for(int digits, int max_digits) {
  PrecisionConfig cfg;
  cfg.working_digits = digits;
  if (max_digits > 0) cfg.max_digits = max_digits;
  if (cfg.max_digits < digits) cfg.max_digits = digits;
  return cfg;
}

json bound_json(const std::optional<BigInt>& v) {
  return v ? json(to_string(*v)) : json(nullptr);
}

json bounds_json(const BoundSet& b) {
  json j;
  j["lower"] = to_string(b.lower());
  j["upper"] = to_string(b.upper());
  j["lower_simple"] = to_string(b.lower_simple);
  j["lower_simple_strict"] = bound_json(b.lower_simple_strict);
  j["lower_linear"] = bound_json(b.lower_linear);
  j["lower_improved"] = bound_json(b.lower_improved);
  j["upper_simple"] = to_string(b.upper_simple);
  j["upper_improved"] = bound_json(b.upper_improved);
  j["h_approx"] = bound_json(b.h_approx);
  j["delta_cap"] = bound_json(b.delta_cap);
  j["delta_cap_conditional"] = b.delta_cap_conditional;
  j["diagonal"] = bound_json(b.diagonal);
  return j;
}

std::string bounds_text(const BoundSet& b) {
  std::ostringstream os;
  auto opt = [](const std::optional<BigInt>& v) { return v ? to_string(*v) : std::string("-"); };
  os << "bounds: " << to_string(b.lower()) << " <= N <= " << to_string(b.upper()) << "\n"
     << "  simple      " << to_string(b.lower_simple) << " / " << opt(b.lower_simple_strict)
     << " .. " << to_string(b.upper_simple) << "\n"
     << "  linear      " << opt(b.lower_linear) << "\n"
     << "  improved    " << opt(b.lower_improved) << " .. " << opt(b.upper_improved) << "\n"
     << "  H           " << opt(b.h_approx) << "\n";
  if (b.diagonal) os << "  diagonal    " << to_string(*b.diagonal) << "\n";
  return os.str();
}

std::ostream* open_output(const std::string& path, std::ofstream& file) {
  if (path == "-") return &std::cout;
  file.open(path);
  if (!file) throw InvalidInput("cannot write " + path);
  return &file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal game length for a biased-coin duel"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print one JSON document instead of text");

  std::string q_text, p_text;
  int precision = 0;
  int max_precision = 0;
  auto add_point = [&](CLI::App* cmd) {
    cmd->add_option("--q", q_text, "Underdog heads probability (decimal or a/b)")->required();
    cmd->add_option("--p", p_text, "Favorite heads probability (decimal or a/b)")->required();
  };
  auto add_precision = [&](CLI::App* cmd) {
    cmd->add_option("--precision", precision, "Working decimal digits")->check(CLI::PositiveNumber);
    cmd->add_option("--max-precision", max_precision, "Give up past this many digits")
        ->check(CLI::PositiveNumber);
  };

  auto* opt_cmd = app.add_subcommand("optimal-n", "Smallest n maximizing the underdog's chance");
  add_point(opt_cmd);
  add_precision(opt_cmd);

  unsigned long n_max = 0;
  std::string csv_path;
  auto* wp_cmd = app.add_subcommand("win-prob", "f(0..n_max) with error bounds");
  add_point(wp_cmd);
  add_precision(wp_cmd);
  wp_cmd->add_option("--n-max", n_max, "Last n")->required()->check(CLI::Range(1UL, kMaxSeriesLength));
  wp_cmd->add_option("--csv", csv_path, "Write n,f,abs_error,argmax rows here ('-' for stdout)");

  std::string n_text, strategy_text = "auto";
  auto* ind_cmd = app.add_subcommand("indicator", "Certified sign of f(n+1) - f(n)");
  add_point(ind_cmd);
  add_precision(ind_cmd);
  ind_cmd->add_option("--n", n_text, "Game length (any size)")->required();
  ind_cmd->add_option("--strategy", strategy_text, "auto, exact, recurrence or quadrature")
      ->check(CLI::IsMember({"auto", "exact", "recurrence", "quadrature"}));

  auto* bnd_cmd = app.add_subcommand("bounds", "Analytic bounds on N");
  add_point(bnd_cmd);

  long nc_n = 1;
  int nc_samples = 101;
  auto* nc_cmd = app.add_subcommand("nullcline", "Trace the curve where f(n+1) = f(n)");
  nc_cmd->add_option("--n", nc_n, "Curve index")->required()->check(CLI::Range(1L, 100000L));
  nc_cmd->add_option("--samples", nc_samples, "Output points")->check(CLI::Range(2, 1000000));
  nc_cmd->add_option("--csv", csv_path, "Write q,p,dp_dq rows here ('-' for stdout)");

  RegionOptions region;
  std::string mode_text = "mc", svg_path, field_text = "N";
  double h_max = 0;
  auto* rm_cmd = app.add_subcommand("region-map", "Sample the triangle p + q < 1");
  rm_cmd->add_option("--mode", mode_text, "grid or mc")->check(CLI::IsMember({"grid", "mc"}));
  rm_cmd->add_option("--count", region.count, "Samples, or points per axis for a grid")
      ->check(CLI::PositiveNumber);
  rm_cmd->add_option("--seed", region.seed, "Random seed");
  rm_cmd->add_option("--n-cap", region.n_cap, "Skip points with larger N")->check(CLI::PositiveNumber);
  rm_cmd->add_option("--threads", region.threads, "Worker threads")->check(CLI::Range(1, 256));
  rm_cmd->add_option("--rescaled", h_max, "Sample 1 < 1/(p-q) < H uniformly in (p+q, 1/(p-q))");
  rm_cmd->add_option("--csv", csv_path, "Write per-sample rows here ('-' for stdout)");
  rm_cmd->add_option("--svg", svg_path, "Write a scatter plot here");
  rm_cmd->add_option("--field", field_text, "Colour for --svg")
      ->check(CLI::IsMember({"N", "delta", "agree", "lower", "improved", "h"}));

  std::string level_text = "quick";
  std::uint64_t verify_seed = 20240601;
  int verify_threads = 1;
  auto* vf_cmd = app.add_subcommand("verify", "Run the oracle cross-checks");
  vf_cmd->add_option("--level", level_text, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  vf_cmd->add_option("--seed", verify_seed, "Random seed");
  vf_cmd->add_option("--threads", verify_threads, "Worker threads for the area estimate")
      ->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  };

  Envelope env;
  std::ostringstream text;
  int exit_code = EXIT_SUCCESS;
  try {
    if (opt_cmd->parsed()) {
      env.command = "optimal-n";
      env.inputs = {{"q", q_text}, {"p", p_text}};
      GameParams g = GameParams::parse(q_text, p_text);
      auto digits = requested_digits(precision);
      int working = digits ? *digits : suggested_digits(compute_bounds(g).upper());
      OptimalResult res = optimal_n(g, precision_for(working, max_precision));
      env.precision_used = working;
      json probes = json::array();
      for (const auto& pr : res.method_trace) {
        env.precision_used = std::max(env.precision_used, pr.sign.digits_used);
        probes.push_back({{"n", to_string(pr.n)},
                          {"sign", to_string(pr.sign.sign)},
                          {"method", to_string(pr.sign.method)},
                          {"digits", pr.sign.digits_used}});
      }
      env.inputs["precision"] = working;
      env.result = {{"N", to_string(res.N)},
                    {"tie", res.tie},
                    {"reflected", res.reflected},
                    {"bounds", bounds_json(res.bounds)},
                    {"probes", probes}};
      text << "N = " << to_string(res.N) << (res.tie ? " (f(N) = f(N+1))" : "") << "\n"
           << bounds_text(res.bounds) << "probes: " << res.method_trace.size() << "\n";
    } else if (wp_cmd->parsed()) {
      env.command = "win-prob";
      env.inputs = {{"q", q_text}, {"p", p_text}, {"n_max", n_max}};
      GameParams g = GameParams::parse(q_text, p_text);
      PrecisionConfig cfg = precision_for(requested_digits(precision).value_or(30), max_precision);
      WinProbSeries s = f_series(g, n_max, cfg);
      env.precision_used = s.digits_used;
      const unsigned long best = s.argmax();
      json rows = json::array();
      for (const auto& e : s.values) {
        rows.push_back({{"n", e.n}, {"f", e.f.to_string(20)}, {"abs_error", e.abs_error.to_string(3)}});
      }
      env.result = {{"argmax", best}, {"values", rows}};
      if (!csv_path.empty()) {
        std::ofstream file;
        std::ostream& os = *open_output(csv_path, file);
        os << "n,f,abs_error,argmax\n";
        for (const auto& e : s.values) {
          os << e.n << ',' << e.f.to_string(20) << ',' << e.abs_error.to_string(3) << ','
             << (e.n == best ? 1 : 0) << '\n';
        }
      }
      text << "argmax n = " << best << ", f = " << s.values[best].f.to_string(20) << "\n";
    } else if (ind_cmd->parsed()) {
      env.command = "indicator";
      env.inputs = {{"q", q_text}, {"p", p_text}, {"n", n_text}, {"strategy", strategy_text}};
      GameParams g = GameParams::parse(q_text, p_text);
      BigInt n = parse_bigint(n_text);
      IndicatorConfig cfg;
      cfg.precision = precision_for(
          requested_digits(precision).value_or(suggested_digits(n < 1 ? BigInt(1) : n)), max_precision);
      Strategy strategy = strategy_text == "exact"        ? Strategy::Exact
                          : strategy_text == "recurrence" ? Strategy::Recurrence
                          : strategy_text == "quadrature" ? Strategy::Quadrature
                                                          : Strategy::Auto;
      CertifiedSign s = strategy == Strategy::Auto
                            ? indicator_sign({g, n}, cfg)
                            : indicator_sign_with({g, n}, strategy, cfg.precision);
      env.precision_used = s.digits_used;
      env.result = {{"sign", to_string(s.sign)},
                    {"method", to_string(s.method)},
                    {"digits_used", s.digits_used}};
      text << to_string(s.sign) << " (" << to_string(s.method) << ")\n";
    } else if (bnd_cmd->parsed()) {
      env.command = "bounds";
      env.inputs = {{"q", q_text}, {"p", p_text}};
      BoundSet b = compute_bounds(GameParams::parse(q_text, p_text));
      env.result = bounds_json(b);
      text << bounds_text(b);
    } else if (nc_cmd->parsed()) {
      env.command = "nullcline";
      env.inputs = {{"n", nc_n}, {"samples", nc_samples}};
      TraceOptions opt;
      opt.samples = nc_samples;
      NullclineTrace tr = trace(nc_n, opt);
      env.precision_used = 15;
      json rows = json::array();
      for (const auto& s : tr.samples) rows.push_back({{"q", s.q}, {"p", s.p}, {"dp_dq", s.dp_dq}});
      env.result = {{"endpoint", {{"q", tr.endpoint_q}, {"p", tr.endpoint_p}}},
                    {"steps_accepted", tr.steps_accepted},
                    {"steps_rejected", tr.steps_rejected},
                    {"violations", tr.violations},
                    {"samples", rows}};
      if (!csv_path.empty()) {
        std::ofstream file;
        std::ostream& os = *open_output(csv_path, file);
        os << std::setprecision(17) << "q,p,dp_dq\n";
        for (const auto& s : tr.samples) os << s.q << ',' << s.p << ',' << s.dp_dq << '\n';
      }
      text << "traced p_" << nc_n << " on [" << tr.q_start << ", " << tr.q_end << "] in "
           << tr.steps_accepted << " steps, " << tr.violations.size() << " invariant violations\n";
      if (!tr.violations.empty()) exit_code = kExitFailure;
    } else if (rm_cmd->parsed()) {
      env.command = "region-map";
      region.mode = mode_text == "grid" ? SampleMode::Grid : SampleMode::MonteCarlo;
      env.inputs = {{"mode", mode_text}, {"count", region.count}, {"seed", region.seed},
                    {"n_cap", region.n_cap}};
      if (h_max != 0) env.inputs["rescaled"] = h_max;
      std::vector<RegionSample> samples =
          h_max != 0 ? sample_rescaled(h_max, region.count, region.seed, region.n_cap, region.threads)
                     : sample_region(region);
      RegionSummary s = summarize(samples);
      env.precision_used = 15;
      auto frac = [](const Fraction& f) {
        return json{{"value", f.value()}, {"sigma", f.sigma()}, {"hits", f.hits}, {"total", f.total}};
      };
      env.result = {{"samples", s.samples},
                    {"capped", s.capped},
                    {"bounds_agree", frac(s.bounds_agree)},
                    {"determined", frac(s.determined)},
                    {"lower_correct", frac(s.lower_correct)},
                    {"lower_weak_correct", frac(s.lower_weak_correct)},
                    {"improved_agree", frac(s.improved_agree)},
                    {"h_correct", frac(s.h_correct)},
                    {"minus_correct", frac(s.minus_correct)}};
      if (!csv_path.empty()) {
        std::ofstream file;
        write_csv(*open_output(csv_path, file), samples);
      }
      if (!svg_path.empty()) {
        std::ofstream file;
        SvgField field = field_text == "delta"      ? SvgField::Delta
                         : field_text == "agree"    ? SvgField::BoundsAgree
                         : field_text == "lower"    ? SvgField::LowerCorrect
                         : field_text == "improved" ? SvgField::ImprovedAgree
                         : field_text == "h"        ? SvgField::HCorrect
                                                    : SvgField::N;
        write_svg(*open_output(svg_path, file), samples, field);
      }
      text << std::fixed << std::setprecision(4) << s.samples << " samples (" << s.capped
           << " capped)\n"
           << "  simple bounds agree     " << s.bounds_agree.value() << "\n"
           << "  N pinned by bounds      " << s.determined.value() << "\n"
           << "  piecewise lower exact   " << s.lower_correct.value() << "\n"
           << "  N- = N+                 " << s.improved_agree.value() << "\n"
           << "  N = N-                  " << s.minus_correct.value() << "\n"
           << "  H = N                   " << s.h_correct.value() << "\n";
    } else if (vf_cmd->parsed()) {
      env.command = "verify";
      env.inputs = {{"level", level_text}, {"seed", verify_seed}};
      VerifyReport report = run_verify(level_text == "full" ? VerifyLevel::Full : VerifyLevel::Quick,
                                       verify_seed, verify_threads);
      json checks = json::array();
      for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        text << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << " ["
             << std::fixed << std::setprecision(2) << c.seconds << " s]\n";
      }
      env.result = {{"passed", report.passed()}, {"checks", checks}};
      if (!report.passed()) exit_code = kExitFailure;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const UncertifiedSign& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUncertified;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }

  emit(env, elapsed_ms(), as_json, text.str());
  return exit_code;
}
