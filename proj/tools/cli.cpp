#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "output.hpp"
#include "sig6/core.hpp"
#include "sig6/error.hpp"
#include "sig6/grid.hpp"
#include "sig6/identities.hpp"
#include "sig6/selftest.hpp"
#include "sig6/weierstrass.hpp"

namespace sig6::cli {

namespace {

/// Outcome of one subcommand before it is written out.
struct Outcome {
  Report report;
  std::string failure;  // worst offender, when report.pass is false
};

struct Options {
  std::string kk;
  std::string kk_grid;
  std::string u_range = "0:4K:17";
  std::string x_grid = "0.02:0.9:45";
  std::string p_grid = "0.05:0.95:19";
  std::string which = "theorem";
  std::string tol;
  std::string max_terms;
  std::string format = "csv";
  std::string output;
};

double relative_gap(double a, double b) {
  return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b));
}

double tolerance_or(const Options& options, double fallback) {
  if (options.tol.empty()) {
    return fallback;
  }
  const double tol = parse_number(options.tol);
  if (!(tol > 0.0)) {
    throw UsageError("--tol must be positive");
  }
  return tol;
}

hypergeom::SeriesSpec series_spec(const Options& options) {
  hypergeom::SeriesSpec spec;
  if (!options.max_terms.empty()) {
    const double terms = parse_number(options.max_terms);
    if (!(terms >= 1.0 && terms <= 1e12 && terms == std::floor(terms))) {
      throw UsageError("--max-terms must be a positive integer");
    }
    spec.max_terms = static_cast<std::int64_t>(terms);
  }
  return spec;
}

double admissible_kk(double kk, bool strict_lower) {
  const bool low_ok = strict_lower ? kk > kMinModulus : kk >= kMinModulus;
  if (!(low_ok && kk <= kMaxModulus)) {
    throw UsageError("modulus kk = " + format_double(kk) + " outside the admissible range " +
                     (strict_lower ? "(1e-6, 1 - 1e-6]" : "[1e-6, 1 - 1e-6]"));
  }
  return kk;
}

std::vector<double> modulus_values(const Options& options, bool strict_lower) {
  if (!options.kk.empty() && !options.kk_grid.empty()) {
    throw UsageError("--kk and --kk-grid are mutually exclusive");
  }
  std::vector<double> values;
  if (!options.kk.empty()) {
    values.push_back(parse_number(options.kk));
  } else if (!options.kk_grid.empty()) {
    values = parse_grid(options.kk_grid);
  } else {
    throw UsageError("one of --kk or --kk-grid is required");
  }
  for (const double kk : values) {
    admissible_kk(kk, strict_lower);
  }
  return values;
}

nlohmann::ordered_json base_config(const std::string& command) {
  nlohmann::ordered_json config;
  config["command"] = command;
  return config;
}

Outcome k_table(const Options& options) {
  const auto moduli = modulus_values(options, true);
  const double tol = tolerance_or(options, 1e-9);
  Outcome outcome;
  Report& report = outcome.report;
  report.config = base_config("k-table");
  if (options.kk.empty()) {
    report.config["kk_grid"] = options.kk_grid;
  } else {
    report.config["kk"] = moduli.front();
  }
  report.config["tol"] = tol;
  report.columns = {"kk", "K_series", "K_quad", "K_psi", "K_cubic", "K_agm",
                    "max_pairwise_relative_diff"};
  for (const double kk : moduli) {
    const Modulus modulus = Modulus::from_kk(kk);
    const std::array<double, 5> routes = {
        complete_K_series(modulus), complete_K_quadrature(modulus),
        complete_K_psi_integral(modulus), complete_K_cubic_integral(modulus),
        weierstrass::complete_K_agm(modulus)};
    double worst = 0.0;
    for (std::size_t i = 0; i < routes.size(); ++i) {
      for (std::size_t j = i + 1; j < routes.size(); ++j) {
        worst = std::max(worst, relative_gap(routes[i], routes[j]));
      }
    }
    report.rows.push_back({kk, routes[0], routes[1], routes[2], routes[3], routes[4], worst});
    if (worst > report.max_residual) {
      report.max_residual = worst;
      outcome.failure = "kk = " + format_double(kk) + ": routes differ by " + format_double(worst);
    }
  }
  report.pass = report.max_residual <= tol;
  return outcome;
}

Outcome eval(const Options& options) {
  if (!options.kk_grid.empty()) {
    throw UsageError("eval takes a single --kk");
  }
  const auto moduli = modulus_values(options, false);
  const double tol = tolerance_or(options, 1e-12);
  const Sig6Context ctx(Modulus::from_kk(moduli.front()));
  const auto grid = parse_grid(options.u_range, ctx.K());
  Outcome outcome;
  Report& report = outcome.report;
  report.config = base_config("eval");
  report.config["kk"] = moduli.front();
  report.config["K"] = ctx.K();
  report.config["u_range"] = options.u_range;
  report.config["tol"] = tol;
  report.columns = {"u", "phi", "s6", "c6", "pythagorean_residual"};
  for (const double u : grid) {
    const double angle = phi(ctx, u);
    const double s = std::sin(angle);
    const double c = std::cos(angle);
    const double residual = s * s + c * c - 1.0;
    report.rows.push_back({u, angle, s, c, residual});
    if (std::fabs(residual) > report.max_residual) {
      report.max_residual = std::fabs(residual);
      outcome.failure = "u = " + format_double(u) + ": s^2 + c^2 - 1 = " + format_double(residual);
    }
  }
  report.pass = report.max_residual <= tol;
  return outcome;
}

void fill_identity_rows(Outcome& outcome, const identities::IdentityReport& identity,
                        std::span<const double> parameters, const std::string& parameter_name) {
  Report& report = outcome.report;
  const bool with_parameter = !parameter_name.empty();
  report.columns = {"x", "xi", "lhs", "rhs", "residual"};
  if (with_parameter) {
    report.columns.insert(report.columns.begin(), parameter_name);
  }
  double worst = -1.0;
  for (std::size_t i = 0; i < identity.points.size(); ++i) {
    const auto& point = identity.points[i];
    std::vector<Cell> row = {point.x, point.xi, point.lhs, point.rhs, point.residual};
    if (with_parameter) {
      row.insert(row.begin(), parameters[i]);
    }
    report.rows.push_back(std::move(row));
    if (point.residual > worst) {
      worst = point.residual;
      outcome.failure = (with_parameter ? parameter_name + " = " + format_double(parameters[i])
                                        : "x = " + format_double(point.x)) +
                        ": relative residual " + format_double(point.residual);
    }
  }
  report.max_residual = identity.max_relative_residual;
  report.pass = identity.pass;
}

Outcome verify_identity(const Options& options) {
  const auto grid = parse_grid(options.x_grid);
  for (const double x : grid) {
    if (!(x > 0.0 && x < 1.0)) {
      throw UsageError("--x-grid values must lie in (0, 1)");
    }
  }
  const double tol = tolerance_or(options, 1e-9);
  const auto spec = series_spec(options);
  Outcome outcome;
  outcome.report.config = base_config("verify-identity");
  outcome.report.config["x_grid"] = options.x_grid;
  outcome.report.config["tol"] = tol;
  outcome.report.config["max_terms"] = spec.max_terms;
  fill_identity_rows(outcome, identities::verify_sextic_identity(grid, spec, tol), grid, "");
  return outcome;
}

Outcome verify_bbg(const Options& options) {
  const auto grid = parse_grid(options.p_grid);
  for (const double p : grid) {
    if (!(p > 0.0 && p < 1.0)) {
      throw UsageError("--p-grid values must lie in (0, 1)");
    }
  }
  const auto which =
      options.which == "corollary" ? identities::BbgForm::corollary : identities::BbgForm::theorem;
  const double tol = tolerance_or(options, 1e-9);
  const auto spec = series_spec(options);
  Outcome outcome;
  outcome.report.config = base_config("verify-bbg");
  outcome.report.config["p_grid"] = options.p_grid;
  outcome.report.config["which"] = options.which;
  outcome.report.config["tol"] = tol;
  outcome.report.config["max_terms"] = spec.max_terms;
  fill_identity_rows(outcome, identities::verify_bbg(grid, which, spec, tol), grid, "p");
  return outcome;
}

Outcome roots(const Options& options) {
  const auto moduli = modulus_values(options, false);
  const double tol = tolerance_or(options, 1e-12);
  constexpr double kRootSumBound = 1e-14;
  constexpr double kOmegaBound = 1e-8;
  Outcome outcome;
  Report& report = outcome.report;
  report.config = base_config("roots");
  if (options.kk.empty()) {
    report.config["kk_grid"] = options.kk_grid;
  } else {
    report.config["kk"] = moduli.front();
  }
  report.config["tol"] = tol;
  report.columns = {"kk",        "alpha",     "beta",       "g2",         "g3",
                    "delta",     "e1",        "e2",         "e3",         "omega_agm",
                    "omega_integral", "root_sum", "midpoint_residual"};
  bool pass = true;
  for (const double kk : moduli) {
    const Modulus modulus = Modulus::from_kk(kk);
    const auto data = weierstrass::build(modulus);
    const double omega_integral = weierstrass::half_period_integral(data);
    const double root_sum = data.e1 + data.e2 + data.e3;
    const double midpoint = weierstrass::midpoint_relation_check(data);
    report.rows.push_back({kk, modulus.alpha(), modulus.beta(), data.g2, data.g3, data.delta,
                           data.e1, data.e2, data.e3, data.omega, omega_integral, root_sum,
                           midpoint});
    const double residual = std::max(std::fabs(root_sum), midpoint);
    report.max_residual = std::max(report.max_residual, residual);
    const bool row_pass = std::fabs(root_sum) <= kRootSumBound && midpoint <= tol &&
                          std::fabs(omega_integral - data.omega) <= kOmegaBound &&
                          data.delta > 0.0;
    if (!row_pass && pass) {
      outcome.failure = "kk = " + format_double(kk) + ": root sum " + format_double(root_sum) +
                        ", midpoint residual " + format_double(midpoint) +
                        ", omega gap " + format_double(omega_integral - data.omega);
    }
    pass = pass && row_pass;
  }
  report.pass = pass;
  return outcome;
}

Outcome self_test(const Options&) {
  Outcome outcome;
  Report& report = outcome.report;
  report.config = base_config("self-test");
  report.columns = {"criterion", "title", "checks", "worst_check", "worst_value", "threshold",
                    "pass"};
  double worst_ratio = 0.0;
  for (const auto& criterion : selftest::run_all()) {
    const auto& worst = criterion.worst();
    report.rows.push_back({static_cast<std::int64_t>(criterion.id), criterion.title,
                           static_cast<std::int64_t>(criterion.checks.size()), worst.name,
                           worst.value, worst.threshold, criterion.pass()});
    if (worst.threshold > 0.0) {
      worst_ratio = std::max(worst_ratio, worst.value / worst.threshold);
    }
    if (!criterion.pass() && report.pass) {
      report.pass = false;
      outcome.failure = "criterion " + std::to_string(criterion.id) + " (" + criterion.title +
                        "): " + worst.name + " = " + format_double(worst.value) +
                        " exceeds " + format_double(worst.threshold);
    }
  }
  // Largest worst-value / threshold ratio; at most 1 when every bound holds.
  report.max_residual = worst_ratio;
  return outcome;
}

}  // namespace

double parse_number(std::string_view text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (!text.empty() && *begin == '+') {
    ++begin;
  }
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw UsageError("not a finite number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_grid(std::string_view text, std::optional<double> unit) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) {
      break;
    }
    start = colon + 1;
  }
  if (parts.size() != 3) {
    throw UsageError("grid must have the form start:stop:count, got '" + std::string(text) + "'");
  }
  auto bound = [&](std::string_view token) {
    if (unit && !token.empty() && token.back() == 'K') {
      const std::string_view coefficient = token.substr(0, token.size() - 1);
      if (coefficient.empty() || coefficient == "+") {
        return *unit;
      }
      if (coefficient == "-") {
        return -*unit;
      }
      return parse_number(coefficient) * *unit;
    }
    return parse_number(token);
  };
  const double first = bound(parts[0]);
  const double last = bound(parts[1]);
  const double count = parse_number(parts[2]);
  if (!(count >= 1.0 && count == std::floor(count) && count <= 1e7)) {
    throw UsageError("grid count must be a positive integer, got '" + std::string(parts[2]) + "'");
  }
  if (!(first < last)) {
    throw UsageError("grid start must be below stop in '" + std::string(text) + "'");
  }
  return linspace(first, last, static_cast<std::size_t>(count));
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signature-six hypergeometric toolkit: evaluation, tabulation and verification"};
  app.name("sig6");
  app.require_subcommand(1, 1);

  Options options;
  auto add_output = [&options](CLI::App* command) {
    command->add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    command->add_option("--output", options.output, "Write to PATH instead of standard output");
  };

  auto* k_table_cmd = app.add_subcommand("k-table", "Complete integral K by five routes");
  k_table_cmd->add_option("--kk", options.kk, "Modulus");
  k_table_cmd->add_option("--kk-grid", options.kk_grid, "Modulus grid start:stop:count");
  k_table_cmd->add_option("--tol", options.tol, "Largest admissible relative route gap (1e-9)");
  add_output(k_table_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "Tabulate phi, s6 and c6 over a u-grid");
  eval_cmd->add_option("--kk", options.kk, "Modulus")->required();
  eval_cmd->add_option("--u-range", options.u_range,
                       "u-grid start:stop:count; bounds may use K, e.g. -K:4K:33");
  eval_cmd->add_option("--tol", options.tol, "Largest admissible |s^2 + c^2 - 1| (1e-12)");
  add_output(eval_cmd);

  auto* identity_cmd =
      app.add_subcommand("verify-identity", "Check F(1/6,5/6;1;xi) = (1-x+x^2)^(1/4) F(1/2,1/2;1;x)");
  identity_cmd->add_option("--x-grid", options.x_grid, "x-grid start:stop:count");
  identity_cmd->add_option("--tol", options.tol, "Largest admissible relative residual (1e-9)");
  identity_cmd->add_option("--max-terms", options.max_terms, "Series term budget");
  add_output(identity_cmd);

  auto* bbg_cmd = app.add_subcommand("verify-bbg", "Check the identity along a p-parametrization");
  bbg_cmd->add_option("--p-grid", options.p_grid, "p-grid start:stop:count");
  bbg_cmd->add_option("--which", options.which, "Parametrization")
      ->check(CLI::IsMember({"theorem", "corollary"}));
  bbg_cmd->add_option("--tol", options.tol, "Largest admissible relative residual (1e-9)");
  bbg_cmd->add_option("--max-terms", options.max_terms, "Series term budget");
  add_output(bbg_cmd);

  auto* roots_cmd = app.add_subcommand("roots", "Weierstrass invariants, roots and half-period");
  roots_cmd->add_option("--kk", options.kk, "Modulus");
  roots_cmd->add_option("--kk-grid", options.kk_grid, "Modulus grid start:stop:count");
  roots_cmd->add_option("--tol", options.tol, "Largest admissible midpoint residual (1e-12)");
  add_output(roots_cmd);

  auto* self_test_cmd = app.add_subcommand("self-test", "Run the full verification suite");
  add_output(self_test_cmd);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("sig6");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& arg : argv_storage) {
    argv.push_back(arg.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kExitPass;
    }
    err << "sig6: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::map<const CLI::App*, std::function<Outcome(const Options&)>> commands = {
      {k_table_cmd, k_table}, {eval_cmd, eval},   {identity_cmd, verify_identity},
      {bbg_cmd, verify_bbg},  {roots_cmd, roots}, {self_test_cmd, self_test}};
  const CLI::App* chosen = app.get_subcommands().front();
  const Format format = options.format == "json" ? Format::json : Format::csv;

  Outcome outcome;
  try {
    outcome = commands.at(chosen)(options);
  } catch (const UsageError& e) {
    err << "sig6 " << chosen->get_name() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const sig6::Error& e) {
    err << "sig6 " << chosen->get_name() << ": numerical failure: " << e.what() << '\n';
    return kExitVerificationFailure;
  }

  if (options.output.empty()) {
    write_report(outcome.report, format, out);
  } else {
    std::ofstream file(options.output, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "sig6 " << chosen->get_name() << ": cannot open " << options.output << '\n';
      return kExitUsage;
    }
    write_report(outcome.report, format, file);
  }

  if (!outcome.report.pass) {
    err << "sig6 " << chosen->get_name() << ": verification failed; worst: " << outcome.failure
        << '\n';
    return kExitVerificationFailure;
  }
  return kExitPass;
}

}  // namespace sig6::cli
