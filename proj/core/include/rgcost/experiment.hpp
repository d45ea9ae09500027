// Configuration-driven sweeps over (family parameter, R) cells, tying the
// graph, rewiring, rank and homology machinery together into deterministic
// CSV/JSON reports.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgcost/group.hpp"
#include "rgcost/numeric.hpp"

namespace rgcost {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExperimentSpec {
  Family family = Family::torus;
  int rank = 2;  // torus only
  std::vector<std::int64_t> sizes;
  std::vector<std::int64_t> R_values;
  std::optional<std::int64_t> gamma_d;
  bool homology = true;
  bool two_route = true;
};

struct ExperimentConfig {
  std::vector<ExperimentSpec> experiments;
  int workers = 1;
  std::string output_dir = "out";
};

// Strict JSON parsing: unknown keys are rejected.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

struct ReportRow {
  std::string family;
  std::string params;
  std::int64_t N = 0;
  std::int64_t R = 0;
  std::int64_t edges_G = 0;
  std::int64_t edges_H = 0;
  Rat density;
  std::optional<std::int64_t> dL_measured;
  BigInt dL_budget;
  Rat bad_fraction;
  bool degenerate = false;
  std::int64_t correction_size = 0;
  Rat rank_upper;
  std::optional<std::int64_t> rank_lower_ab;
  std::optional<std::int64_t> betti;
  std::optional<BigInt> trs;
  std::optional<double> log_trs_over_index;
  std::optional<Rat> gamma_d;
  std::int64_t runtime_ms = 0;
  std::string error;  // empty when every check passed
};

struct RSummary {
  std::int64_t R = 0;
  std::optional<Rat> limsup_density;  // max over non-degenerate rows
};

struct TorsionAudit {
  std::string params;
  std::int64_t R = 0;
  double log_trs_over_index = 0;
  double budget = 0;  // ((|H|+|I|-N+1)/N) * ln(4 b dL^4)
  bool pass = true;
};

struct ExperimentSummary {
  std::string family;
  std::vector<RSummary> per_R;
  std::optional<Rat> cc_upper_estimate;  // min over R of the limsup density
  std::vector<TorsionAudit> torsion_audits;
};

struct RunResult {
  std::vector<ReportRow> rows;
  std::vector<ExperimentSummary> summaries;
  bool invariant_violation = false;
};

struct RunOptions {
  int workers = 1;
  bool timings = false;  // keep runtime_ms at 0 for byte-identical reports
  bool force_two_route = false;
};

RunResult run_experiment(const ExperimentConfig& config, const RunOptions& options);

extern const std::vector<std::string> kReportColumns;

void write_csv(const RunResult& result, std::ostream& os);
void write_json_rows(const RunResult& result, std::ostream& os);
void write_summary_json(const RunResult& result, std::ostream& os);
std::string csv_string(const RunResult& result);

}  // namespace rgcost
