#include "catmom/cli.hpp"

#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "catmom/moments.hpp"
#include "catmom/recurrence.hpp"
#include "catmom/transforms.hpp"
#include "catmom/verify.hpp"
#include "catmom/weight.hpp"

namespace catmom::cli {

namespace {

// Precondition violations detected after flag parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numbers that are well formed but rejected by the underlying module
// (k = 0, path bounds, ...) are usage errors too.
ExactScalar rational_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + flag + ": " + e.what());
  }
}

ExactScalar decimal_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_decimal(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + flag + ": " + e.what());
  }
}

void require_nonzero_k(const ExactScalar& k) {
  if (sgn(k) == 0) throw UsageError("--k: must be nonzero (moment functional undefined for k = 0)");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

UnitSequence apply_pipe(UnitSequence seq, const std::string& pipe) {
  if (trim(pipe).empty()) return seq;
  for (const auto& raw : split(pipe, '|')) {
    const std::string stage = trim(raw);
    const auto colon = stage.find(':');
    const std::string op = trim(stage.substr(0, colon));
    const std::string arg = colon == std::string::npos ? "" : trim(stage.substr(colon + 1));
    const bool needs_arg = op == "invert" || op == "binomial";
    if (needs_arg == arg.empty() || (!needs_arg && colon != std::string::npos)) {
      throw UsageError("--pipe: malformed stage '" + stage + "' (expected invert:x, binomial:y, eta, epsilon or gamma)");
    }
    if (op == "invert") {
      seq = invert_interp(seq, rational_flag("pipe", arg));
    } else if (op == "binomial") {
      seq = binomial_interp(seq, rational_flag("pipe", arg));
    } else if (op == "eta") {
      seq = eta(seq);
    } else if (op == "epsilon") {
      seq = epsilon(seq);
    } else if (op == "gamma") {
      seq = gamma(seq);
    } else {
      throw UsageError("--pipe: unknown stage '" + op + "'");
    }
  }
  return seq;
}

int run_moments(const std::string& h_text, const std::string& k_text, std::size_t n,
                const std::string& method, std::ostream& out) {
  const ExactScalar h = rational_flag("h", h_text);
  const ExactScalar k = rational_flag("k", k_text);
  require_nonzero_k(k);
  const MomentRequest req{h, k, n};

  auto compute = [&](const std::string& m) -> std::optional<std::vector<ExactScalar>> {
    if (m == "gf") return mu_gf_series(req);
    if (m == "cfrac") return mu_cfrac(req, mu_cfrac_min_depth(n));
    if (m == "recur") return mu_recur(req);
    std::vector<ExactScalar> v;
    if (m == "paths" && n > kPathBound) return std::nullopt;
    for (std::size_t i = 0; i <= n; ++i) {
      if (m == "closed") v.push_back(mu_closed(i, h, k));
      if (m == "lagrange") v.push_back(mu_lagrange(i, h, k));
      if (m == "paths") v.push_back(mu_paths(i, h, k));
    }
    return v;
  };

  if (method != "all") {
    const auto values = compute(method);
    if (!values) throw UsageError("--n: exceeds the path enumeration bound " + std::to_string(kPathBound));
    out << method << "\t" << join(*values) << "\n";
    return kSuccess;
  }

  const std::vector<std::string> methods = {"gf", "cfrac", "closed", "recur", "lagrange", "paths"};
  std::optional<std::vector<ExactScalar>> reference;
  bool all_agree = true;
  out << "method\tvalues\tverdict\n";
  for (const auto& m : methods) {
    const auto values = compute(m);
    if (!values) {
      out << m << "\tskipped (n > " << kPathBound << ")\t-\n";
      continue;
    }
    if (!reference) reference = values;
    const bool agree = *values == *reference;
    all_agree = all_agree && agree;
    out << m << "\t" << join(*values) << "\t" << (agree ? "AGREE" : "DISAGREE") << "\n";
  }
  out << "verdict: " << (all_agree ? "AGREE" : "DISAGREE") << "\n";
  return all_agree ? kSuccess : kVerificationFailure;
}

int run_paths(std::size_t n, const std::string& h_text, const std::string& k_text, bool list,
              std::ostream& out) {
  const ExactScalar h = rational_flag("h", h_text);
  const ExactScalar k = rational_flag("k", k_text);
  if (n > kPathBound) {
    throw UsageError("--n: " + std::to_string(n) + " exceeds the enumeration bound " +
                     std::to_string(kPathBound) + "; use `moments` with an analytic method");
  }
  const std::string label = "mu_" + std::to_string(n) + "(" + to_string(h) + "," + to_string(k) + ")";
  if (!list) {
    out << label << " = " << to_string(mu_paths(n, h, k)) << "\n";
    return kSuccess;
  }
  const auto paths = enumerate_paths(n);
  ExactScalar total = 0;
  for (const auto& p : paths) {
    out << (p.steps.empty() ? "(empty)" : p.to_string()) << "\t" << p.weight_monomial() << "\n";
    total += p.weight(h, k);
  }
  out << "total: " << paths.size() << " paths, " << label << " = " << to_string(total) << "\n";
  return kSuccess;
}

int run_weight(const std::string& h_text, const std::string& k_text, std::size_t samples,
               std::optional<std::size_t> quad, std::ostream& out) {
  const ExactScalar h = decimal_flag("h", h_text);
  const ExactScalar k = decimal_flag("k", k_text);
  if (sgn(k) <= 0) throw UsageError("--k: must be > 0 (no absolutely continuous weight in scope)");
  if (samples < 2) throw UsageError("--samples: must be >= 2");
  const WeightSpec spec(h.get_d(), k.get_d());
  write_weight_csv(out, weight_csv(spec, samples));
  if (quad) {
    const auto exact = mu_recur({h, k, *quad});
    out << "\nn,quad,exact,rel_err\n";
    for (std::size_t n = 0; n <= *quad; ++n) {
      const double q = quad_moment(n, spec, 1e-12);
      const double e = exact[n].get_d();
      const double rel = std::abs(q - e) / std::max(1.0, std::abs(e));
      out << n << "," << format_double(q) << "," << format_double(e) << "," << format_double(rel) << "\n";
    }
  }
  return kSuccess;
}

int run_verify(const std::string& suite, const std::string& grid_text, std::ostream& out) {
  const Grid grid = grid_text == "small" ? Grid::small : Grid::full;
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else {
    suites = {suite};
  }
  bool ok = true;
  for (const auto& s : suites) {
    const SuiteReport report = run_suite(s, grid);
    print_report(out, report);
    ok = ok && report.ok();
  }
  return ok ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sequence transforms, generalized Motzkin moments and their orthogonal polynomials"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  std::string b_text, h_text = "1", k_text = "1", input, pipe, method = "all", suite, grid = "full";
  std::size_t terms = 10, n = 10, samples = 101, quad_n = 0;
  bool list = false;

  auto* seq = app.add_subcommand("seq", "Print a prefix of W(1,b,h,k)");
  seq->add_option("--b", b_text, "Second term b")->required();
  seq->add_option("--h", h_text, "Recurrence multiplier h")->required();
  seq->add_option("--k", k_text, "Recurrence subtrahend k")->required();
  seq->add_option("--terms", terms, "Number of terms")->check(CLI::PositiveNumber);

  auto* transform = app.add_subcommand("transform", "Apply a left-to-right transform pipeline");
  transform->add_option("--input", input, "Comma-separated rationals with leading 1")->required();
  transform->add_option("--pipe", pipe, "Stages: invert:x | binomial:y | eta | epsilon | gamma");

  auto* moments = app.add_subcommand("moments", "Table of mu_0..mu_n(h,k)");
  moments->add_option("--h", h_text, "h")->required();
  moments->add_option("--k", k_text, "k (nonzero)")->required();
  moments->add_option("--n", n, "Largest index");
  moments->add_option("--method", method, "Route")
      ->check(CLI::IsMember({"gf", "cfrac", "closed", "recur", "lagrange", "paths", "all"}));

  auto* paths = app.add_subcommand("paths", "mu_n(h,k) by Motzkin path enumeration");
  paths->add_option("--n", n, "Path length")->required();
  paths->add_option("--h", h_text, "East-step weight");
  paths->add_option("--k", k_text, "South-east-step weight");
  paths->add_flag("--list", list, "List every path with its weight monomial");

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.emplace_back("all");
  verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_choices));
  verify->add_option("--grid", grid, "Grid size")->check(CLI::IsMember({"small", "full"}));

  auto* weight = app.add_subcommand("weight", "CSV samples of the weight function");
  weight->add_option("--h", h_text, "h")->required();
  weight->add_option("--k", k_text, "k (> 0)")->required();
  weight->add_option("--samples", samples, "Number of samples");
  auto* quad_opt = weight->add_option("--quad", quad_n, "Append quadrature vs exact rows for n = 0..N");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (seq->parsed()) {
      const RecParams p{rational_flag("b", b_text), rational_flag("h", h_text), rational_flag("k", k_text)};
      out << to_string(w_generate(p, terms)) << "\n";
      return kSuccess;
    }
    if (transform->parsed()) {
      std::vector<ExactScalar> values;
      for (const auto& part : split(input, ',')) values.push_back(rational_flag("input", trim(part)));
      if (values.empty() || values[0] != 1) throw UsageError("--input: first term must be 1");
      out << to_string(apply_pipe(UnitSequence(std::move(values)), pipe)) << "\n";
      return kSuccess;
    }
    if (moments->parsed()) return run_moments(h_text, k_text, n, method, out);
    if (paths->parsed()) return run_paths(n, h_text, k_text, list, out);
    if (verify->parsed()) return run_verify(suite, grid, out);
    if (weight->parsed()) {
      std::optional<std::size_t> quad;
      if (quad_opt->count() > 0) quad = quad_n;
      return run_weight(h_text, k_text, samples, quad, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const QuadratureError& e) {
    err << "error: " << e.what() << " (estimate " << format_double(e.estimate()) << ", error bound "
        << format_double(e.error_bound()) << ")\n";
    return kNonConvergence;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace catmom::cli
