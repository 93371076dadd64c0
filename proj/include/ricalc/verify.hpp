#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ricalc/lz.hpp"

namespace ricalc {

/// One verification check outcome. `constant` carries the check-specific
/// scalar being monitored (a defect, a ratio, an empirical constant).
struct VerifyRow {
  std::string check;
  std::string inputs_digest;
  double lhs = 0.0;
  double rhs = 0.0;
  double constant = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

struct SuiteConfig {
  std::string suite = "all"; // preliminaries, maximal, fractional, hilbert,
                             // riesz, lemmas, all
  std::uint64_t seed = 1;
  int n = 200;      // corpus size for the cheap per-pair checks
  double tol = 1e-9;
  int jobs = 1;
};

/// Runs the requested suite. Deterministic: every task derives its random
/// stream from (seed, task index), and rows are fully sorted before return,
/// so the output is independent of the parallelism degree.
std::vector<VerifyRow> run_suite(const SuiteConfig& cfg);

/// CSV with fixed columns check,inputs_digest,lhs,rhs,constant,tolerance,pass;
/// infinities render as "inf".
void write_report_csv(const std::vector<VerifyRow>& rows, std::ostream& os);

nlohmann::json summary_json(const SuiteConfig& cfg, const std::vector<VerifyRow>& rows);

int count_failures(const std::vector<VerifyRow>& rows);

/// The 60-tuple parameter sweep used by the supremum-operator boundedness
/// cross-check (predicate vs direct numerical probe) at alpha = 1/2.
std::vector<LZParams> t_boundedness_sweep();

} // namespace ricalc
