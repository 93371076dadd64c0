#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ricalc/json_io.hpp"
#include "ricalc/lz.hpp"
#include "ricalc/optimal.hpp"
#include "ricalc/step_function.hpp"
#include "ricalc/verify.hpp"

namespace {

ricalc::StepFunction load_step(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return ricalc::step_from_json(j);
}

std::pair<double, double> parse_pair(const std::string& s, const char* what) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw std::runtime_error(std::string(what) + " expects two comma-separated values");
  return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

int run_norm(const std::string& file, const std::string& space_json,
             const std::string& functional, const std::string& x_json, double gamma,
             double ndim) {
  const ricalc::StepFunction f = load_step(file);
  double value = 0.0;
  bool exact = false;
  if (!functional.empty()) {
    const ricalc::LZParams X = ricalc::lz_params_from_json(nlohmann::json::parse(x_json));
    if (functional == "maximal-range") {
      value = ricalc::maximal_range_norm(f, X);
    } else if (functional == "maximal-domain") {
      value = ricalc::maximal_domain_norm(f, X);
    } else if (functional == "frac-range-simple") {
      value = ricalc::frac_range_norm_simple(f, X, gamma, ndim);
    } else if (functional == "hilbert-range") {
      value = ricalc::hilbert_range_norm(f, X);
    } else if (functional == "riesz-range") {
      value = ricalc::riesz_range_norm(f, X, gamma, ndim);
    } else {
      throw std::runtime_error("unknown functional: " + functional);
    }
  } else if (!space_json.empty()) {
    const ricalc::LZParams X =
        ricalc::lz_params_from_json(nlohmann::json::parse(space_json));
    value = ricalc::lz_norm(f, X);
    exact = ricalc::lz_exact_norm(X);
  } else {
    throw std::runtime_error("provide --space or --functional");
  }
  const nlohmann::json out = {{"value", ricalc::number_to_json(value)},
                              {"exact", exact}};
  std::cout << ricalc::format_number(value) << " ("
            << (exact ? "exact" : "approximate") << ")\n"
            << out.dump() << "\n";
  return 0;
}

int run_optimal(const std::string& op_name, double p, double q,
                const std::string& a_str, const std::string& b_str,
                const std::string& direction, double gamma, double ndim) {
  ricalc::LZParams X;
  X.p = p;
  X.q = q;
  if (!a_str.empty()) std::tie(X.a0, X.aI) = parse_pair(a_str, "--A");
  if (!b_str.empty()) {
    X.has_B = true;
    std::tie(X.b0, X.bI) = parse_pair(b_str, "--B");
  }
  if (!ricalc::lz_valid(X)) throw std::runtime_error("p and q must lie in [1, inf]");
  ricalc::ClassicalOperator op;
  if (op_name == "M") {
    op = ricalc::ClassicalOperator::MaximalM;
  } else if (op_name == "Mgamma") {
    op = ricalc::ClassicalOperator::FractionalM;
  } else if (op_name == "H") {
    op = ricalc::ClassicalOperator::HilbertH;
  } else if (op_name == "I") {
    op = ricalc::ClassicalOperator::RieszI;
  } else {
    throw std::runtime_error("unknown operator: " + op_name +
                             " (expected M, Mgamma, H or I)");
  }
  const ricalc::PartnerDirection dir = direction == "domain"
                                           ? ricalc::PartnerDirection::Domain
                                           : ricalc::PartnerDirection::Range;
  const ricalc::OptimalPartnerResult r =
      ricalc::optimal_partner_lookup(op, X, dir, gamma, ndim);
  std::cout << ricalc::partner_to_json(r).dump(2) << "\n";
  return 0;
}

int run_verify(const ricalc::SuiteConfig& cfg, const std::string& out_path) {
  const std::vector<ricalc::VerifyRow> rows = ricalc::run_suite(cfg);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  ricalc::write_report_csv(rows, out);
  if (!out.good()) throw std::runtime_error("I/O failure writing " + out_path);
  std::cout << ricalc::summary_json(cfg, rows).dump(2) << "\n";
  return ricalc::count_failures(rows) == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calculus of rearrangements: norms, operators, optimal partners"};
  app.require_subcommand(1);

  // norm
  auto* norm = app.add_subcommand("norm", "Evaluate a norm or norm functional");
  std::string norm_file, space_json, functional, x_json;
  double gamma = 0.5, ndim = 1.0;
  norm->add_option("file", norm_file, "JSON function spec")->required();
  norm->add_option("--space", space_json, "LZ parameters as JSON");
  norm->add_option("--functional", functional,
                   "maximal-range | maximal-domain | frac-range-simple | "
                   "hilbert-range | riesz-range");
  norm->add_option("--X", x_json, "LZ parameters of the source space as JSON");
  norm->add_option("--gamma", gamma, "Smoothness parameter gamma");
  norm->add_option("--n", ndim, "Ambient dimension n");

  // optimal
  auto* optimal = app.add_subcommand("optimal", "Query the optimal-partner tables");
  std::string op_name, a_str, b_str, direction = "range";
  double opt_p = 1.0, opt_q = 1.0, opt_gamma = 0.5, opt_n = 1.0;
  optimal->add_option("operator", op_name, "M, Mgamma, H or I")->required();
  optimal->add_option("--p", opt_p, "Primary index p (inf allowed)");
  optimal->add_option("--q", opt_q, "Secondary index q (inf allowed)");
  optimal->add_option("--A", a_str, "Log exponents a0,aI");
  optimal->add_option("--B", b_str, "Iterated-log exponents b0,bI");
  optimal->add_option("--gamma", opt_gamma, "Smoothness parameter gamma");
  optimal->add_option("--n", opt_n, "Ambient dimension n");
  optimal->add_option("--direction", direction, "range or domain");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  ricalc::SuiteConfig cfg;
  if (const char* env = std::getenv("RICALC_JOBS")) cfg.jobs = std::atoi(env);
  if (cfg.jobs < 1) cfg.jobs = 1;
  std::string out_path = "report.csv";
  verify->add_option("suite", cfg.suite,
                     "preliminaries, maximal, fractional, hilbert, riesz, "
                     "lemmas or all")
      ->required();
  verify->add_option("--seed", cfg.seed, "Random seed");
  verify->add_option("--n", cfg.n, "Corpus size");
  verify->add_option("--tol", cfg.tol, "Tolerance for the exact-identity checks");
  verify->add_option("--out", out_path, "Report CSV path");
  verify->add_option("--jobs", cfg.jobs, "Parallelism degree");

  CLI11_PARSE(app, argc, argv);

  try {
    if (norm->parsed()) return run_norm(norm_file, space_json, functional, x_json,
                                        gamma, ndim);
    if (optimal->parsed())
      return run_optimal(op_name, opt_p, opt_q, a_str, b_str, direction, opt_gamma,
                         opt_n);
    return run_verify(cfg, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
