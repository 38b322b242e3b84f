#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include "chm/errors.hpp"
#include "chm/estimates.hpp"
#include "chm/io.hpp"
#include "chm/montecarlo.hpp"
#include "chm/suites.hpp"
#include "complex_arg.hpp"
#include "sweep.hpp"

namespace chm::cli {

namespace {

using nlohmann::json;

constexpr double kMaxSigma = 4.0;
constexpr double kLognormalBudget = 10.0;  // tolerance in units of se_estimate

struct GlobalOptions {
  double tol = kDefaultTolerance;
  std::uint64_t seed = 42;
  std::string out_path;
  std::string format;
};

// Reports an input problem; the caller returns kInputError.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Complex complex_arg(const std::string& text, const char* what) {
  const auto value = parse_complex(text);
  if (!value) {
    throw InputError(std::string("cannot parse ") + what + " '" + text +
                     "' (expected a, bi, a+bi or a-bi without spaces)");
  }
  return *value;
}

// Writes to --out when given, otherwise to `fallback`.
template <typename Emit>
void emit(const GlobalOptions& global, std::ostream& fallback, Emit&& body) {
  if (global.out_path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(global.out_path);
  if (!file) throw InputError("cannot open output file " + global.out_path);
  body(file);
}

json certificate_json(const ExistenceCertificate& cert, Complex c) {
  json out = {{"c", to_json(c)}, {"holds", cert.holds}, {"a", cert.a}, {"R", cert.radius}};
  out["violating_atom"] = cert.violating_atom ? json(*cert.violating_atom) : json(nullptr);
  return out;
}

int cmd_hmean(const GlobalOptions& global, const std::string& file, const std::string& c_text,
              std::ostream& out, std::ostream& err) {
  const Complex c = complex_arg(c_text, "--c");
  if (c == Complex{}) throw InputError("--c must be non-zero");
  const FiniteDistribution dist = load_distribution(file);
  const Complex mean = expectation(dist);
  Complex h;
  try {
    h = harmonic_mean(dist);
  } catch (const DegenerateMean& e) {
    err << "hmean: degenerate mean: " << e.what() << '\n';
    return kDegenerateMean;
  }
  const auto cert = existence_certificate(dist, c);
  if (!cert.holds) {
    err << "hmean: warning: existence certificate fails for c at atom " << *cert.violating_atom
        << " (H computed anyway)\n";
  }
  const json report = {{"E", to_json(mean)},
                       {"H", to_json(h)},
                       {"abs_H", std::abs(h)},
                       {"certificate", certificate_json(cert, c)}};
  emit(global, out, [&](std::ostream& s) { s << report.dump(2) << '\n'; });
  return kSuccess;
}

int cmd_sweep2(const GlobalOptions& global, const std::string& c1_text, const std::string& c2_text,
               std::size_t steps, std::ostream& out) {
  const Complex c1 = complex_arg(c1_text, "--c1");
  const Complex c2 = complex_arg(c2_text, "--c2");
  if (c1 == Complex{} || c2 == Complex{}) throw InputError("c1 and c2 must be non-zero");
  if (c1 == c2) throw InputError("c1 and c2 must differ");
  if (steps < 2) throw InputError("--steps must be at least 2");
  const std::string format = global.format.empty() ? "csv" : global.format;

  const Sweep sweep = sweep_two_point(c1, c2, steps);
  emit(global, out, [&](std::ostream& s) {
    if (format == "svg") {
      write_sweep_svg(sweep, s);
    } else if (format == "json") {
      json rows = json::array();
      for (const auto& row : sweep.rows) {
        rows.push_back({{"theta", row.theta},
                        {"h", row.h ? to_json(*row.h) : json(nullptr)},
                        {"locus_dist", row.h ? json(row.on_locus_distance) : json(nullptr)}});
      }
      s << rows.dump(2) << '\n';
    } else {
      write_sweep_csv(sweep, s);
    }
  });
  return kSuccess;
}

// Runs one named check on a user-supplied case. Refusals are reported and
// are not failures.
SuiteSummary verify_single(Suite suite, const FiniteDistribution& dist, std::optional<Complex> c,
                           std::optional<Region> region, const GlobalOptions& global) {
  SuiteSummary summary;
  summary.suite = suite;
  summary.seed = global.seed;
  summary.cases = 1;
  summary.checks = 1;

  CaseRecord record;
  record.atoms.assign(dist.atoms().begin(), dist.atoms().end());
  record.direction = c;
  record.region = region;

  std::vector<BoundReport> reports;
  try {
    switch (suite) {
      case Suite::modulus:
        reports.push_back(check_modulus(dist, global.tol));
        break;
      case Suite::inner:
        reports.push_back(check_inner_product(dist, c.value_or(Complex(1.0, 0.0)), global.tol));
        break;
      case Suite::proofI:
        reports.push_back(proof_quantity_I(dist, global.tol));
        break;
      case Suite::disk:
        if (!region) throw InputError("verify disk --dist needs --center and --radius");
        reports.push_back(check_disk_bound(dist, *region, global.tol));
        break;
      case Suite::twopoint: {
        if (dist.size() != 2) throw InputError("verify twopoint --dist needs exactly two atoms");
        const double theta = dist.atoms()[1].weight;
        reports = check_two_point(dist.atoms()[0].point, dist.atoms()[1].point, {&theta, 1}, global.tol);
        break;
      }
      case Suite::classical: {
        std::vector<RealAtom> atoms;
        for (const auto& atom : dist.atoms()) {
          if (atom.point.imag() != 0.0) throw InputError("verify classical --dist needs real atoms");
          atoms.push_back({atom.point.real(), atom.weight});
        }
        reports = check_classical(RealDistribution(std::move(atoms)), global.tol);
        break;
      }
    }
  } catch (const HypothesisViolated& e) {
    reports.push_back(refused_report(BoundName::disk_bound, global.tol, e.what()));
    switch (suite) {
      case Suite::inner:
        reports.back().name = BoundName::inner_product;
        break;
      case Suite::proofI:
        reports.back().name = BoundName::proof_I;
        break;
      default:
        break;
    }
  }

  summary.checks = reports.size();
  summary.worst_slack = std::numeric_limits<double>::infinity();
  for (const auto& report : reports) {
    if (report.refused) {
      ++summary.refused;
      continue;
    }
    summary.worst_slack = std::min(summary.worst_slack, report.slack);
    if (report.holds) {
      ++summary.passed;
    } else {
      ++summary.failed;
      record.report = report;
      summary.failures.push_back(record);
    }
  }
  if (summary.refused == summary.checks) summary.worst_slack = 0.0;
  return summary;
}

int cmd_verify(const GlobalOptions& global, const std::string& suite_name, std::size_t cases,
               const std::string& dist_file, const std::string& c_text,
               const std::string& center_text, std::optional<double> radius, std::ostream& out) {
  std::vector<Suite> suites;
  if (suite_name == "all") {
    suites.assign(all_suites().begin(), all_suites().end());
  } else if (const auto suite = parse_suite(suite_name)) {
    suites.push_back(*suite);
  } else {
    throw InputError("unknown suite '" + suite_name + "'");
  }
  if (cases < 1) throw InputError("--cases must be at least 1");

  std::vector<SuiteSummary> summaries;
  if (!dist_file.empty()) {
    if (suites.size() != 1) throw InputError("--dist needs a single named suite");
    const FiniteDistribution dist = load_distribution(dist_file);
    std::optional<Complex> c;
    if (!c_text.empty()) c = complex_arg(c_text, "--c");
    std::optional<Region> region;
    if (!center_text.empty() || radius) {
      if (center_text.empty() || !radius) throw InputError("--center and --radius go together");
      region = Region::disk(complex_arg(center_text, "--center"), *radius);
    }
    summaries.push_back(verify_single(suites.front(), dist, c, region, global));
  } else {
    for (const Suite suite : suites) {
      summaries.push_back(run_suite(suite, cases, global.seed, global.tol));
    }
  }

  bool ok = true;
  json report = json::array();
  for (const auto& summary : summaries) {
    ok = ok && summary.ok();
    report.push_back(to_json(summary));
  }
  const json doc = {{"seed", global.seed}, {"tol", global.tol}, {"ok", ok}, {"suites", report}};
  emit(global, out, [&](std::ostream& s) { s << doc.dump(2) << '\n'; });
  return ok ? kSuccess : kVerificationFailure;
}

int cmd_lognormal(const GlobalOptions& global, const std::string& mu_text, double sigma, double n,
                  std::ostream& out) {
  const Complex mu = complex_arg(mu_text, "--mu");
  if (!(sigma > 0.0 && sigma <= kMaxSigma)) {
    throw InputError("--sigma must lie in (0, 4]");
  }
  if (!(n >= 1.0) || n != std::floor(n) || n > 1e9) {
    throw InputError("--n must be a whole number between 1 and 1e9");
  }
  const ComplexNormalParams params{mu, sigma};
  const auto result = lognormal_experiment(params, static_cast<std::size_t>(n), global.seed);
  const double budget = kLognormalBudget * result.se_estimate;
  const bool within = result.err_arith <= budget && result.err_harm <= budget;

  json doc = to_json(result);
  doc["mu"] = to_json(mu);
  doc["sigma"] = sigma;
  doc["budget"] = budget;
  doc["within_tolerance"] = within;
  emit(global, out, [&](std::ostream& s) { s << doc.dump(2) << '\n'; });
  return within ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complex harmonic mean: compute, sweep and verify estimates"};
  app.name("chm");
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(
      "Complex numbers are written a, bi, a+bi or a-bi with no spaces, e.g. 1+1i, 8, -2.5e-1-3i.\n"
      "Exit codes: 0 success, 1 input error, 2 degenerate mean, 3 verification failure.");

  GlobalOptions global;
  app.add_option("--tol", global.tol, "Report tolerance")->capture_default_str();
  app.add_option("--seed", global.seed, "Root seed for randomized commands")->capture_default_str();
  app.add_option("--out", global.out_path, "Write output to this file instead of stdout");
  app.add_option("--format", global.format, "Output format for sweep2")
      ->check(CLI::IsMember({"csv", "svg", "json"}));

  std::string hmean_file;
  std::string hmean_c = "1";
  auto* hmean = app.add_subcommand("hmean", "E[Z], H[Z], |H[Z]| and the existence certificate");
  hmean->add_option("file", hmean_file, "Distribution JSON file")->required();
  hmean->add_option("--c", hmean_c, "Certificate direction")->capture_default_str();

  std::string c1_text;
  std::string c2_text;
  std::size_t steps = 11;
  auto* sweep2 = app.add_subcommand("sweep2", "Sweep the weight of a two-point law");
  sweep2->add_option("--c1", c1_text, "First atom (weight 1 - theta)")->required();
  sweep2->add_option("--c2", c2_text, "Second atom (weight theta)")->required();
  sweep2->add_option("--steps", steps, "Number of weights, theta = k/(steps-1)")->capture_default_str();

  std::string suite_name = "all";
  std::size_t cases = 10000;
  std::string dist_file;
  std::string verify_c;
  std::string center_text;
  std::optional<double> radius;
  auto* verify = app.add_subcommand("verify", "Run randomized theorem-check suites");
  verify->add_option("suite", suite_name, "modulus|inner|disk|twopoint|classical|proofI|all")
      ->capture_default_str();
  verify->add_option("--cases", cases, "Random cases per suite")->capture_default_str();
  verify->add_option("--dist", dist_file, "Check this distribution instead of random cases");
  verify->add_option("--c", verify_c, "Direction for the inner suite with --dist");
  verify->add_option("--center", center_text, "Disk center for the disk suite with --dist");
  verify->add_option("--radius", radius, "Disk radius for the disk suite with --dist");

  std::string mu_text = "0";
  double sigma = 0.5;
  double n = 1e6;
  auto* lognormal = app.add_subcommand("lognormal", "Complex lognormal experiment");
  lognormal->add_option("--mu", mu_text, "Mean of the complex normal")->capture_default_str();
  lognormal->add_option("--sigma", sigma, "Variance parameter, in (0, 4]")->capture_default_str();
  lognormal->add_option("--n", n, "Number of samples")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (!(global.tol >= 0.0) || !std::isfinite(global.tol)) {
      throw InputError("--tol must be a finite number >= 0");
    }
    if (hmean->parsed()) return cmd_hmean(global, hmean_file, hmean_c, out, err);
    if (sweep2->parsed()) return cmd_sweep2(global, c1_text, c2_text, steps, out);
    if (verify->parsed()) {
      return cmd_verify(global, suite_name, cases, dist_file, verify_c, center_text, radius, out);
    }
    if (lognormal->parsed()) return cmd_lognormal(global, mu_text, sigma, n, out);
  } catch (const InputError& e) {
    err << app.get_subcommands().front()->get_name() << ": " << e.what() << '\n';
    return kInputError;
  } catch (const DegenerateMean& e) {
    err << "degenerate mean: " << e.what() << '\n';
    return kDegenerateMean;
  } catch (const Error& e) {
    err << app.get_subcommands().front()->get_name() << ": " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace chm::cli
