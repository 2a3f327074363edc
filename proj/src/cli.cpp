#include "upp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "upp/composition.hpp"
#include "upp/curve_io.hpp"
#include "upp/nc_ops.hpp"
#include "upp/oracle.hpp"
#include "upp/pseudo_inverse.hpp"

namespace upp {

namespace {

constexpr const char* kUsage = R"(usage: upptool <command> [args]

commands:
  eval <curve.json> <t>                     value of the curve at t
  lpi <curve.json>                          lower pseudo-inverse
  upi <curve.json>                          upper pseudo-inverse
  compose <f.json> <g.json> [--force-general|--force-specialized] [--explain]
  convolve-rl <U.json> <R> <theta>          min-plus convolution with a
                                            rate-latency curve
  hdev <alpha.json> <beta.json>             maximum horizontal deviation
  iwrr <config.json> [--force-general] [--explain]
                                            IWRR per-flow service curve
  check <curve.json>                        validate representation invariants
  minimize <curve.json>                     merge collinear pieces, shrink T
  sample <curve.json> --from A --to B --step S
                                            CSV of t,value,leftLimit,rightLimit
  bench <config.json> [--reps N]            forced-general vs specialized
                                            composition timings
  oracle lpi|upi <curve.json> <y> [--horizon H] [--step S]
  oracle compose <f.json> <g.json> <t>
  oracle conv-rl <U.json> <R> <theta> <t>
  oracle random [--seed N] [--kind generic|uc|wui]

flags: --output json|csv on curve-producing commands switches the format.
)";

struct Args {
  std::vector<std::string> positional;
  bool forceGeneral = false;
  bool forceSpecialized = false;
  bool explain = false;
  std::string output = "json";
  std::optional<std::string> from, to, step, horizon, kind;
  std::uint64_t seed = 1;
  int reps = 9;
};

Args parseArgs(const std::vector<std::string>& argv, std::size_t start) {
  Args a;
  for (std::size_t i = start; i < argv.size(); ++i) {
    const std::string& s = argv[i];
    auto next = [&](const char* flag) -> std::string {
      if (i + 1 >= argv.size())
        throw ParseError(std::string(flag) + " needs a value");
      return argv[++i];
    };
    if (s == "--force-general") a.forceGeneral = true;
    else if (s == "--force-specialized") a.forceSpecialized = true;
    else if (s == "--explain") a.explain = true;
    else if (s == "--output") a.output = next("--output");
    else if (s == "--from") a.from = next("--from");
    else if (s == "--to") a.to = next("--to");
    else if (s == "--step") a.step = next("--step");
    else if (s == "--horizon") a.horizon = next("--horizon");
    else if (s == "--kind") a.kind = next("--kind");
    else if (s == "--seed") a.seed = std::stoull(next("--seed"));
    else if (s == "--reps") a.reps = std::stoi(next("--reps"));
    else if (!s.empty() && s[0] == '-')
      throw ParseError("unknown flag " + s);
    else a.positional.push_back(s);
  }
  if (a.output != "json" && a.output != "csv")
    throw ParseError("--output must be json or csv");
  if (a.forceGeneral && a.forceSpecialized)
    throw ParseError("--force-general and --force-specialized conflict");
  return a;
}

const std::string& positional(const Args& a, std::size_t i, const char* what) {
  if (i >= a.positional.size())
    throw ParseError(std::string("missing argument: ") + what);
  return a.positional[i];
}

void emitCurve(const Curve& f, const Args& a, std::ostream& out) {
  if (a.output == "json") {
    out << curveToJsonText(f);
    return;
  }
  out << "# T=" << f.pseudoPeriodStart() << " d=" << f.pseudoPeriodLength()
      << " c=" << f.pseudoPeriodHeight() << "\n";
  out << "t,value,leftLimit,rightLimit\n";
  for (const Element& e : f.baseSequence().elements()) {
    if (!isPoint(e)) continue;
    const Rational& t = asPoint(e).time;
    const ExtValue left = t.isZero() ? f.valueAt(t) : f.leftLimitAt(t);
    out << t << "," << f.valueAt(t) << "," << left << ","
        << f.rightLimitAt(t) << "\n";
  }
}

ComposeMode modeOf(const Args& a) {
  if (a.forceGeneral) return ComposeMode::ForceGeneral;
  if (a.forceSpecialized) return ComposeMode::ForceSpecialized;
  return ComposeMode::Auto;
}

double percentile(std::vector<double> v, double p) {
  std::sort(v.begin(), v.end());
  const std::size_t idx = static_cast<std::size_t>(
      p / 100.0 * static_cast<double>(v.size() - 1) + 0.5);
  return v[idx];
}

int cmdEval(const Args& a, std::ostream& out) {
  const Curve f = loadCurveFile(positional(a, 0, "curve file"));
  const Rational t = Rational::fromString(positional(a, 1, "time"));
  out << f.valueAt(t) << "\n";
  return 0;
}

int cmdPseudoInverse(const Args& a, std::ostream& out, bool lower) {
  const Curve f = loadCurveFile(positional(a, 0, "curve file"));
  emitCurve(lower ? lowerPseudoInverse(f) : upperPseudoInverse(f), a, out);
  return 0;
}

int cmdCompose(const Args& a, std::ostream& out, std::ostream& err) {
  const Curve f = loadCurveFile(positional(a, 0, "outer curve file"));
  const Curve g = loadCurveFile(positional(a, 1, "inner curve file"));
  ComposeStats stats;
  const Curve h = compose(f, g, modeOf(a), &stats);
  if (a.explain)
    err << "path: " << stats.path
        << "  outer cut elements: " << stats.outerCutElements
        << "  inner cut elements: " << stats.innerCutElements << "\n";
  emitCurve(h, a, out);
  return 0;
}

int cmdConvolveRl(const Args& a, std::ostream& out) {
  const Curve u = loadCurveFile(positional(a, 0, "curve file"));
  const Rational r = Rational::fromString(positional(a, 1, "rate"));
  const Rational th = Rational::fromString(positional(a, 2, "latency"));
  emitCurve(convolveWithRateLatency(u, r, th), a, out);
  return 0;
}

int cmdHdev(const Args& a, std::ostream& out) {
  const Curve alpha = loadCurveFile(positional(a, 0, "arrival curve file"));
  const Curve beta = loadCurveFile(positional(a, 1, "service curve file"));
  out << horizontalDeviation(alpha, beta) << "\n";
  return 0;
}

int cmdIwrr(const Args& a, std::ostream& out, std::ostream& err) {
  const IwrrConfig cfg = loadIwrrConfigFile(positional(a, 0, "config file"));
  ComposeStats stats;
  const auto t0 = std::chrono::steady_clock::now();
  const Curve result = iwrrServiceCurve(cfg, modeOf(a), &stats);
  const auto t1 = std::chrono::steady_clock::now();
  const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  err << "path: " << stats.path << "  elapsed: " << std::fixed
      << std::setprecision(2) << ms << " ms\n";
  if (a.explain)
    err << "outer cut elements: " << stats.outerCutElements
        << "  inner cut elements: " << stats.innerCutElements << "\n";
  emitCurve(result, a, out);
  return 0;
}

int cmdCheck(const Args& a, std::ostream& out) {
  // Structural invariants (alternation, chaining, domain bounds, d > 0) are
  // enforced by construction while parsing; evaluate the UPP property on a
  // sampled window on top of that.
  const Curve f = loadCurveFile(positional(a, 0, "curve file"));
  const Rational& T = f.pseudoPeriodStart();
  const Rational& d = f.pseudoPeriodLength();
  const Rational& c = f.pseudoPeriodHeight();
  const Rational stepR = d / Rational(16);
  for (Rational t = T; t < T + d; t += stepR) {
    for (int k = 1; k <= 3; ++k) {
      const ExtValue expect = f.valueAt(t) + ExtValue(Rational(k) * c);
      const ExtValue got = f.valueAt(t + Rational(k) * d);
      if (!(got == expect))
        throw InvariantError("UPP property fails at t=" + t.str());
    }
  }
  out << "ok: " << f.baseSequence().size() << " elements, T="
      << T << " d=" << d << " c=" << c << "\n";
  return 0;
}

int cmdMinimize(const Args& a, std::ostream& out) {
  emitCurve(minimize(loadCurveFile(positional(a, 0, "curve file"))), a, out);
  return 0;
}

int cmdSample(const Args& a, std::ostream& out) {
  const Curve f = loadCurveFile(positional(a, 0, "curve file"));
  if (!a.from || !a.to || !a.step)
    throw ParseError("sample needs --from, --to and --step");
  const Rational from = Rational::fromString(*a.from);
  const Rational to = Rational::fromString(*a.to);
  const Rational step = Rational::fromString(*a.step);
  if (step.sign() <= 0 || to < from)
    throw ParseError("sample needs step > 0 and to >= from");
  out << "t,value,leftLimit,rightLimit\n";
  for (Rational t = from; t <= to; t += step) {
    const ExtValue left = t.isZero() ? f.valueAt(t) : f.leftLimitAt(t);
    out << t << "," << f.valueAt(t) << "," << left << ","
        << f.rightLimitAt(t) << "\n";
  }
  return 0;
}

int cmdBench(const Args& a, std::ostream& out) {
  const IwrrConfig cfg = loadIwrrConfigFile(positional(a, 0, "config file"));
  if (a.reps < 1) throw ParseError("--reps must be >= 1");
  const Curve gamma = iwrrGamma(cfg);

  auto timeMode = [&](ComposeMode mode) {
    std::vector<double> ms;
    std::optional<Curve> result;
    for (int i = 0; i < a.reps; ++i) {
      const auto t0 = std::chrono::steady_clock::now();
      Curve r = compose(gamma, cfg.beta, mode);
      const auto t1 = std::chrono::steady_clock::now();
      ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
      if (!result) result = std::move(r);
    }
    return std::make_pair(ms, *result);
  };

  auto [generalTimes, generalResult] = timeMode(ComposeMode::ForceGeneral);
  auto [specialTimes, specialResult] = timeMode(ComposeMode::Auto);

  out << std::fixed << std::setprecision(2);
  out << "runtime          not optimized      optimized\n";
  for (double p : {75.0, 50.0, 25.0}) {
    std::ostringstream label;
    label << (p == 50.0 ? "median" : (p == 75.0 ? "75th percentile"
                                                : "25th percentile"));
    out << std::left << std::setw(17) << label.str() << std::setw(19)
        << (std::to_string(percentile(generalTimes, p)).substr(0, 10) + " ms")
        << percentile(specialTimes, p) << " ms\n";
  }
  const double ratio =
      percentile(generalTimes, 50.0) / percentile(specialTimes, 50.0);
  out << "median speedup   " << ratio << "x\n";
  out << "results pointwise equal: "
      << (equivalent(generalResult, specialResult) ? "yes" : "NO") << "\n";
  return 0;
}

int cmdOracle(const Args& a, std::ostream& out) {
  const std::string& sub = positional(a, 0, "oracle subcommand");
  if (sub == "lpi" || sub == "upi") {
    const Curve f = loadCurveFile(positional(a, 1, "curve file"));
    const Rational y = Rational::fromString(positional(a, 2, "threshold"));
    const Rational horizon =
        a.horizon ? Rational::fromString(*a.horizon)
                  : f.pseudoPeriodStart() +
                        Rational(8) * f.pseudoPeriodLength() + Rational(8);
    const Rational step =
        a.step ? Rational::fromString(*a.step) : Rational(1, 16);
    const oracle::ScanResult r =
        sub == "lpi" ? oracle::lowerPseudoInverseAt(f, y, horizon, step)
                     : oracle::upperPseudoInverseAt(f, y, horizon, step);
    if (r.isValue())
      out << r.value << "\n";
    else
      out << (r.isPlusInfinity() ? "inf" : "beyond horizon") << "\n";
    return 0;
  }
  if (sub == "compose") {
    const Curve f = loadCurveFile(positional(a, 1, "outer curve file"));
    const Curve g = loadCurveFile(positional(a, 2, "inner curve file"));
    out << oracle::composeAt(f, g,
                             Rational::fromString(positional(a, 3, "time")))
        << "\n";
    return 0;
  }
  if (sub == "conv-rl") {
    const Curve u = loadCurveFile(positional(a, 1, "curve file"));
    const Rational r = Rational::fromString(positional(a, 2, "rate"));
    const Rational th = Rational::fromString(positional(a, 3, "latency"));
    const Rational t = Rational::fromString(positional(a, 4, "time"));
    out << oracle::convolveRateLatencyAt(u, r, th, t) << "\n";
    return 0;
  }
  if (sub == "random") {
    std::mt19937_64 rng(a.seed);
    oracle::RandomOptions opts;
    if (a.kind) {
      if (*a.kind == "uc") opts.kind = oracle::RandomKind::UltimatelyConstant;
      else if (*a.kind == "wui")
        opts.kind = oracle::RandomKind::WeaklyUltimatelyInfinite;
      else if (*a.kind != "generic")
        throw ParseError("--kind must be generic, uc or wui");
    }
    out << curveToJsonText(oracle::randomCurve(rng, opts));
    return 0;
  }
  throw ParseError("unknown oracle subcommand: " + sub);
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  try {
    if (args.empty()) {
      err << kUsage;
      return 2;
    }
    const std::string& cmd = args[0];
    const Args a = parseArgs(args, 1);
    if (cmd == "eval") return cmdEval(a, out);
    if (cmd == "lpi") return cmdPseudoInverse(a, out, true);
    if (cmd == "upi") return cmdPseudoInverse(a, out, false);
    if (cmd == "compose") return cmdCompose(a, out, err);
    if (cmd == "convolve-rl") return cmdConvolveRl(a, out);
    if (cmd == "hdev") return cmdHdev(a, out);
    if (cmd == "iwrr") return cmdIwrr(a, out, err);
    if (cmd == "check") return cmdCheck(a, out);
    if (cmd == "minimize") return cmdMinimize(a, out);
    if (cmd == "sample") return cmdSample(a, out);
    if (cmd == "bench") return cmdBench(a, out);
    if (cmd == "oracle") return cmdOracle(a, out);
    if (cmd == "--help" || cmd == "help") {
      out << kUsage;
      return 0;
    }
    err << "unknown command: " << cmd << "\n" << kUsage;
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "precondition violation: " << e.what() << "\n";
    return 3;
  } catch (const InvariantError& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace upp
