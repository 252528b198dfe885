#include "hga/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <json.hpp>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "hga/applications.hpp"
#include "hga/errors.hpp"
#include "hga/io.hpp"
#include "hga/means.hpp"
#include "hga/oracle.hpp"
#include "hga/sharp_bounds.hpp"
#include "hga/simple_bounds.hpp"

namespace hga::cli {
namespace {

using nlohmann::json;

struct GlobalOptions {
  double tol = 1e-12;
  std::uint64_t seed = 0;
  std::string format = "json";
};

struct WeightOptions {
  std::string list;
  std::size_t equal = 0;

  std::vector<double> resolve() const {
    if (!list.empty() && equal > 0) throw ValidationError("give either --weights or --equal, not both");
    if (!list.empty()) return io::parse_number_list(list, "weights");
    if (equal >= 2) return std::vector<double>(equal, 1.0 / static_cast<double>(equal));
    throw ValidationError("weights required: --weights w1,w2,... or --equal N with N >= 2");
  }
};

double rel_diff(double x, double ref) {
  return std::abs(x - ref) / std::max(std::abs(ref), std::numeric_limits<double>::min());
}

json sample_json(const WeightedSample& s) {
  const MeanTriple m = compute_means(s);
  return {{"values", std::vector<double>(s.values().begin(), s.values().end())},
          {"weights", std::vector<double>(s.weights().begin(), s.weights().end())},
          {"means", {{"h", m.h}, {"g", m.g}, {"a", m.a}}}};
}

json witness_json(const std::optional<WeightedSample>& s) { return s ? sample_json(*s) : json(nullptr); }

json make_report(const std::string& command, json inputs, double lower, double upper, json witnesses,
                 json residuals) {
  return {{"command", command},     {"version", kVersion},       {"inputs", std::move(inputs)},
          {"bounds", {{"lower", lower}, {"upper", upper}}},     {"witnesses", std::move(witnesses)},
          {"residuals", std::move(residuals)}};
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (j.is_array() && !j.empty() && !j.front().is_primitive()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_array()) {
    out << prefix << " =";
    for (const auto& v : j) out << ' ' << (v.is_number_float() ? format_number(v.get<double>()) : v.dump());
    out << '\n';
  } else if (j.is_number_float()) {
    out << prefix << " = " << format_number(j.get<double>()) << '\n';
  } else if (j.is_string()) {
    out << prefix << " = " << j.get<std::string>() << '\n';
  } else {
    out << prefix << " = " << j.dump() << '\n';
  }
}

void emit(const json& report, const GlobalOptions& opts, std::ostream& out) {
  if (opts.format == "text") {
    flatten(report, "", out);
  } else {
    out << report.dump(2) << '\n';
  }
}

// Relative residuals of a witness against the two known means and the endpoint it attains.
struct WitnessCheck {
  json residuals = nullptr;
  double worst = 0.0;
};

WitnessCheck check_witness(const std::optional<WeightedSample>& w, MeanKind k1, double v1, MeanKind k2, double v2,
                           MeanKind target, double endpoint) {
  WitnessCheck c;
  if (!w) return c;
  const MeanTriple m = compute_means(*w);
  auto pick = [&](MeanKind k) { return k == MeanKind::harmonic ? m.h : k == MeanKind::geometric ? m.g : m.a; };
  const double r1 = rel_diff(pick(k1), v1);
  const double r2 = rel_diff(pick(k2), v2);
  const double r3 = rel_diff(pick(target), endpoint);
  c.residuals = {{std::string(to_string(k1)), r1}, {std::string(to_string(k2)), r2}, {"endpoint", r3}};
  c.worst = std::max({r1, r2, r3});
  return c;
}

int run_bound(const std::string& command, MeanKind k1, double v1, MeanKind k2, double v2, MeanKind target,
              const std::vector<double>& weights, const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
  BoundInterval iv;
  if (target == MeanKind::harmonic) {
    iv = harmonic_bounds(v1, v2, weights);
  } else if (target == MeanKind::geometric) {
    iv = geometric_bounds(v1, v2, weights);
  } else {
    iv = arithmetic_bounds(v1, v2, weights);
  }
  for (const auto& w : iv.warnings) err << "warning: " << w << '\n';

  const WitnessCheck lo = check_witness(iv.lower_witness, k1, v1, k2, v2, target, iv.lower);
  const WitnessCheck hi = check_witness(iv.upper_witness, k1, v1, k2, v2, target, iv.upper);
  json inputs = {{std::string(to_string(k1)), v1}, {std::string(to_string(k2)), v2}, {"weights", weights}};
  json report = make_report(command, std::move(inputs), iv.lower, iv.upper,
                            {{"lower", witness_json(iv.lower_witness)}, {"upper", witness_json(iv.upper_witness)}},
                            {{"lower", lo.residuals}, {"upper", hi.residuals}});
  report["target"] = to_string(target);
  report["alpha"] = iv.alpha;
  report["witness_index"] = iv.witness_index;
  report["roots"] = {{"xi0", iv.roots.xi0}, {"xi1", iv.roots.xi1}};
  report["warnings"] = iv.warnings;
  const bool ok = std::max(lo.worst, hi.worst) <= opts.tol;
  report["verified"] = ok;
  emit(report, opts, out);
  if (!ok) {
    err << "witness residual " << format_number(std::max(lo.worst, hi.worst)) << " exceeds tolerance "
        << format_number(opts.tol) << '\n';
    return kVerificationFailure;
  }
  return kOk;
}

int run_means(const std::string& path, const GlobalOptions& opts, std::ostream& out) {
  const WeightedSample s = io::parse_sample(io::read_input(path));
  const MeanTriple m = compute_means(s);
  double wsum = 0.0;
  for (double w : s.weights()) wsum += w;
  json report = make_report("means",
                            {{"values", std::vector<double>(s.values().begin(), s.values().end())},
                             {"weights", std::vector<double>(s.weights().begin(), s.weights().end())}},
                            m.h, m.a, json::object(), {{"weight_sum", std::abs(wsum - 1.0)}});
  report["means"] = {{"h", m.h}, {"g", m.g}, {"a", m.a}};
  const MinWeight mw = min_weight(s);
  report["min_weight"] = {{"alpha", mw.alpha}, {"index", mw.index}};
  emit(report, opts, out);
  return kOk;
}

int run_simple(std::optional<double> a, std::optional<double> g, std::optional<double> h, double alpha,
               std::optional<int> n, const GlobalOptions& opts, std::ostream& out) {
  const int given = static_cast<int>(a.has_value()) + static_cast<int>(g.has_value()) + static_cast<int>(h.has_value());
  if (given != 2) throw ValidationError("simple needs exactly two of --a, --g, --h");
  json inputs = {{"alpha", alpha}};
  json report;
  if (a && g) {
    inputs["a"] = *a;
    inputs["g"] = *g;
    const SimpleBoundReport r = simple_harmonic_lower(*a, *g, alpha);
    report = make_report("simple", inputs, r.bound, *g, json::object(), json::object());
    report["kind"] = to_string(r.kind);
    report["strict"] = r.is_strict;
  } else if (h && g) {
    inputs["h"] = *h;
    inputs["g"] = *g;
    const SimpleBoundReport r = simple_arithmetic_upper(*h, *g, alpha);
    report = make_report("simple", inputs, *g, r.bound, json::object(), json::object());
    report["kind"] = to_string(r.kind);
    report["strict"] = r.is_strict;
  } else {
    if (!n) throw ValidationError("simple --a --h needs --n");
    inputs["a"] = *a;
    inputs["h"] = *h;
    inputs["n"] = *n;
    const SimpleGeometricInterval iv = simple_geometric_interval(*a, *h, alpha, *n);
    report = make_report("simple", inputs, iv.lower.bound, iv.upper.bound, json::object(), json::object());
    report["kind"] = "geometric-interval";
    report["strict"] = iv.lower.is_strict && iv.upper.is_strict;
    report["improves_over_trivial"] = improves_over_trivial(*a, *h, alpha, *n);
  }
  emit(report, opts, out);
  return kOk;
}

int run_threshold(const GlobalOptions& opts, std::ostream& out) {
  const double t0 = improvement_threshold();
  const double residual = std::abs(t0 * std::exp(t0 + 1.0) - 1.0);
  json report = make_report("threshold", json::object(), t0, t0, json::object(), {{"equation", residual}});
  report["t0"] = t0;
  report["residual"] = residual;
  emit(report, opts, out);
  return kOk;
}

std::vector<double> random_weights(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(n);
  double sum = 0.0;
  for (double& x : w) sum += (x = 0.05 + expo(rng));
  for (double& x : w) x /= sum;
  return w;
}

int run_verify(const std::string& kind, std::size_t n, std::size_t trials, std::size_t samples,
               std::optional<double> oracle_tol, const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
  MeanKind target;
  if (kind == "ga") {
    target = MeanKind::harmonic;
  } else if (kind == "ha") {
    target = MeanKind::geometric;
  } else if (kind == "ag") {
    target = MeanKind::arithmetic;
  } else {
    throw ValidationError("--kind must be one of ga, ha, ag");
  }
  if (n < 2) throw ValidationError("--n must be at least 2");
  const double tol = oracle_tol.value_or(kOracleTolerance);

  std::size_t passed = 0;
  double worst_endpoint = 0.0;
  json failures = json::array();
  for (std::size_t t = 0; t < trials; ++t) {
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                      static_cast<std::uint32_t>(t)};
    std::mt19937_64 rng(seq);
    const std::vector<double> w = random_weights(rng, n);
    std::lognormal_distribution<double> logn(0.0, 1.0);
    std::vector<double> x(n);
    for (double& v : x) v = logn(rng);
    const WeightedSample s(x, w);
    const MeanTriple m = compute_means(s);

    BoundInterval iv;
    KnownPair known{};
    double withheld = 0.0;
    if (target == MeanKind::harmonic) {
      iv = harmonic_bounds(m.a, m.g, w);
      known = {{MeanKind::arithmetic, m.a}, {MeanKind::geometric, m.g}};
      withheld = m.h;
    } else if (target == MeanKind::geometric) {
      iv = geometric_bounds(m.a, m.h, w);
      known = {{MeanKind::arithmetic, m.a}, {MeanKind::harmonic, m.h}};
      withheld = m.g;
    } else {
      iv = arithmetic_bounds(m.h, m.g, w);
      known = {{MeanKind::harmonic, m.h}, {MeanKind::geometric, m.g}};
      withheld = m.a;
    }

    std::vector<std::string> problems;
    if (withheld < iv.lower * (1.0 - tol) || withheld > iv.upper * (1.0 + tol)) {
      problems.push_back("withheld mean " + format_number(withheld) + " outside the interval");
    }
    if (n <= kMaxOracleSize) {
      const OracleReport exhaustive = two_value_search(w, known, target);
      const SharpnessVerdict v = verify_sharpness(iv, exhaustive, tol);
      worst_endpoint = std::max({worst_endpoint, rel_diff(exhaustive.observed_min, iv.lower),
                                 rel_diff(exhaustive.observed_max, iv.upper)});
      for (const auto& d : v.details) problems.push_back("two-value: " + d);
    }
    const OracleReport random = random_feasible_search(w, known, target, samples, opts.seed + t);
    const SharpnessVerdict rv = verify_sharpness(iv, random, tol);
    if (!rv.contained) {
      for (const auto& d : rv.details) problems.push_back("random: " + d);
    }

    if (problems.empty()) {
      ++passed;
    } else if (failures.size() < 10) {
      failures.push_back({{"trial", t}, {"weights", w}, {"values", x}, {"problems", problems}});
    }
  }

  const bool ok = passed == trials;
  json report = make_report("verify",
                            {{"kind", kind}, {"n", n}, {"trials", trials}, {"samples", samples}, {"seed", opts.seed},
                             {"tolerance", tol}},
                            0.0, 0.0, json::object(), {{"max_endpoint_rel_error", worst_endpoint}});
  report["bounds"] = {{"lower", nullptr}, {"upper", nullptr}};
  report["passed"] = passed;
  report["failed"] = trials - passed;
  report["failures"] = failures;
  emit(report, opts, out);
  if (!ok) {
    err << (trials - passed) << " of " << trials << " trials failed verification\n";
    return kVerificationFailure;
  }
  return kOk;
}

int run_trace(const std::string& path, const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
  const SymmetricMatrix m = io::parse_matrix(io::read_input(path));
  const TraceDet td = factor_trace_det(m);
  const TraceVerdict v = verify_trace_bound(m);
  const double n = static_cast<double>(m.order());
  json report = make_report("trace-inv-bound", {{"order", m.order()}}, n * n / td.trace, v.bound, json::object(),
                            {{"slack_ratio", v.slack_ratio}});
  report["trace"] = td.trace;
  report["det"] = td.det;
  report["log_det"] = td.log_det;
  report["trace_inverse"] = v.trace_inverse;
  report["verified"] = v.passed;
  emit(report, opts, out);
  if (!v.passed) {
    err << "trace(A^-1) is not below the bound\n";
    return kVerificationFailure;
  }
  return kOk;
}

std::string input_text(const std::string& arg) {
  if (arg == "-" || std::filesystem::is_regular_file(arg)) return io::read_input(arg);
  return arg;
}

int run_poly(const std::string& arg, bool from_roots, const GlobalOptions& opts, std::ostream& out,
             std::ostream& err) {
  const std::vector<double> numbers = io::parse_json_numbers(input_text(arg), from_roots ? "roots" : "coefficients");
  json inputs;
  double lower = 0.0;
  double upper = 0.0;
  double value = 0.0;
  std::vector<double> coeffs;
  if (from_roots) {
    const PolynomialVerdict v = verify_polynomial_bounds(numbers);
    const PolynomialCoeffs p = expand_from_roots(numbers);
    coeffs.assign(p.coefficients().begin(), p.coefficients().end());
    lower = v.lower;
    upper = v.upper;
    value = v.value;
    inputs = {{"roots", numbers}};
  } else {
    const PolynomialCoeffs p(numbers);
    coeffs = numbers;
    lower = fransen_lohne_lower(p);
    upper = reverse_upper(p);
    value = std::abs(p[p.degree() - 1]);
    inputs = {{"coefficients", numbers}};
  }
  const bool ok = lower <= value * (1.0 + 1e-12) && value <= upper;
  json report = make_report("poly-bound", std::move(inputs), lower, upper, json::object(),
                            {{"lower_slack", (value - lower) / value}, {"upper_slack", (upper - value) / value}});
  report["coefficients"] = coeffs;
  report["abs_a_n_minus_1"] = value;
  report["verified"] = ok;
  emit(report, opts, out);
  if (!ok) {
    err << "|a_{n-1}| lies outside the coefficient bounds\n";
    return kVerificationFailure;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sharp bounds among weighted harmonic, geometric and arithmetic means", "hga"};
  // --h names the harmonic mean, so help is only spelled --help.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1, 1);
  app.fallthrough();
  GlobalOptions opts;
  app.add_option("--tol", opts.tol, "Relative tolerance for residual checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "Random seed")->capture_default_str();
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.set_version_flag("--version", kVersion);

  std::string sample_path;
  auto* means = app.add_subcommand("means", "Harmonic, geometric and arithmetic means of a sample");
  means->add_option("sample", sample_path, "JSON or CSV sample file, '-' for stdin")->required();

  double a = 0.0;
  double g = 0.0;
  double h = 0.0;
  WeightOptions wopts;
  auto add_weights = [&](CLI::App* sub) {
    sub->add_option("--weights", wopts.list, "Comma-separated weights");
    sub->add_option("--equal", wopts.equal, "Use N equal weights");
  };
  auto* bound_h = app.add_subcommand("bound-h", "Sharp bounds on h given a and g");
  bound_h->add_option("--a", a)->required();
  bound_h->add_option("--g", g)->required();
  add_weights(bound_h);
  auto* bound_g = app.add_subcommand("bound-g", "Sharp bounds on g given a and h");
  bound_g->add_option("--a", a)->required();
  bound_g->add_option("--h", h)->required();
  add_weights(bound_g);
  auto* bound_a = app.add_subcommand("bound-a", "Sharp bounds on a given h and g");
  bound_a->add_option("--h", h)->required();
  bound_a->add_option("--g", g)->required();
  add_weights(bound_a);

  std::optional<double> sa;
  std::optional<double> sg;
  std::optional<double> sh;
  double alpha = 0.0;
  std::optional<int> sn;
  auto* simple = app.add_subcommand("simple", "Closed-form non-sharp bounds");
  simple->add_option("--a", sa);
  simple->add_option("--g", sg);
  simple->add_option("--h", sh);
  simple->add_option("--alpha", alpha, "Minimum weight")->required();
  simple->add_option("--n", sn, "Sample size (geometric interval)");

  auto* threshold = app.add_subcommand("threshold", "Root t0 of t e^(t+1) = 1");

  std::string kind;
  std::size_t vn = 4;
  std::size_t trials = 20;
  std::size_t samples = 500;
  std::optional<double> oracle_tol;
  auto* verify = app.add_subcommand("verify", "Check sharp bounds against the brute-force oracles");
  verify->add_option("--kind", kind, "ga: h from (g,a); ha: g from (h,a); ag: a from (h,g)")
      ->required()
      ->check(CLI::IsMember({"ga", "ha", "ag"}));
  verify->add_option("--n", vn)->capture_default_str();
  verify->add_option("--trials", trials)->capture_default_str();
  verify->add_option("--samples", samples, "Random feasible samples per trial")->capture_default_str();
  verify->add_option("--oracle-tol", oracle_tol, "Relative oracle tolerance (default 1e-6)");

  std::string matrix_path;
  auto* trace = app.add_subcommand("trace-inv-bound", "Upper bound on trace(A^-1) for an SPD matrix");
  trace->add_option("matrix", matrix_path, "Matrix file, '-' for stdin")->required();

  std::string poly_arg;
  bool from_roots = false;
  auto* poly = app.add_subcommand("poly-bound", "Coefficient bounds for polynomials with positive roots");
  poly->add_option("input", poly_arg, "JSON list (inline, file or '-')")->required();
  poly->add_flag("--from-roots", from_roots, "Input lists roots instead of coefficients");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformedInput;
  }

  try {
    if (means->parsed()) return run_means(sample_path, opts, out);
    if (bound_h->parsed()) {
      return run_bound("bound-h", MeanKind::arithmetic, a, MeanKind::geometric, g, MeanKind::harmonic,
                       wopts.resolve(), opts, out, err);
    }
    if (bound_g->parsed()) {
      return run_bound("bound-g", MeanKind::arithmetic, a, MeanKind::harmonic, h, MeanKind::geometric,
                       wopts.resolve(), opts, out, err);
    }
    if (bound_a->parsed()) {
      return run_bound("bound-a", MeanKind::harmonic, h, MeanKind::geometric, g, MeanKind::arithmetic,
                       wopts.resolve(), opts, out, err);
    }
    if (simple->parsed()) return run_simple(sa, sg, sh, alpha, sn, opts, out);
    if (threshold->parsed()) return run_threshold(opts, out);
    if (verify->parsed()) return run_verify(kind, vn, trials, samples, oracle_tol, opts, out, err);
    if (trace->parsed()) return run_trace(matrix_path, opts, out, err);
    if (poly->parsed()) return run_poly(poly_arg, from_roots, opts, out, err);
  } catch (const InfeasibleError& e) {
    err << "infeasible input: " << e.what() << '\n';
    return kInfeasibleInput;
  } catch (const DegenerateInputError& e) {
    err << "infeasible input: " << e.what() << '\n';
    return kInfeasibleInput;
  } catch (const DefinitenessError& e) {
    err << "infeasible input: " << e.what() << '\n';
    return kInfeasibleInput;
  } catch (const GenerationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  }
  return kMalformedInput;
}

}  // namespace hga::cli
