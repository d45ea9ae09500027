#include "rgcost/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "rgcost/farber.hpp"
#include "rgcost/groupoid.hpp"
#include "rgcost/homology.hpp"
#include "rgcost/rewire.hpp"
#include "rgcost/schreier.hpp"
#include "rgcost/snf.hpp"

namespace rgcost {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

void require_keys(const json& j, const std::vector<std::string>& allowed,
                  const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

ExperimentSpec parse_spec(const json& j) {
  require_keys(j, {"family", "k", "sizes", "R", "gamma_d", "homology", "two_route"},
               "experiment");
  ExperimentSpec spec;
  if (!j.contains("family")) throw ConfigError("experiment missing 'family'");
  spec.family = family_from_name(j.at("family").get<std::string>());
  if (j.contains("k")) spec.rank = j.at("k").get<int>();
  if (!j.contains("sizes") || !j.at("sizes").is_array() || j.at("sizes").empty())
    throw ConfigError("experiment needs a nonempty 'sizes' array");
  spec.sizes = j.at("sizes").get<std::vector<std::int64_t>>();
  if (!j.contains("R") || !j.at("R").is_array() || j.at("R").empty())
    throw ConfigError("experiment needs a nonempty 'R' array");
  spec.R_values = j.at("R").get<std::vector<std::int64_t>>();
  for (const auto R : spec.R_values)
    if (R < 2 || R % 2 != 0) throw ConfigError("R values must be even and >= 2");
  if (j.contains("gamma_d")) spec.gamma_d = j.at("gamma_d").get<std::int64_t>();
  if (j.contains("homology")) spec.homology = j.at("homology").get<bool>();
  if (j.contains("two_route")) spec.two_route = j.at("two_route").get<bool>();
  return spec;
}

std::string spec_params_label(const ExperimentSpec& spec, std::int64_t size) {
  std::string out;
  if (spec.family == Family::torus) out = "k=" + std::to_string(spec.rank) + ";";
  const char* size_name =
      (spec.family == Family::sl3z_principal || spec.family == Family::sl3z_projective) ? "p"
                                                                                        : "n";
  out += std::string(size_name) + "=" + std::to_string(size);
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

struct CellResult {
  ReportRow row;
  bool violation = false;
};

// The full pipeline for one (family parameter, R) cell. Any thrown error is
// recorded in the row's error column by the caller.
CellResult compute_cell(const ExperimentSpec& spec, std::int64_t size, std::int64_t R,
                        bool timings) {
  const auto start = std::chrono::steady_clock::now();
  CellResult out;
  ReportRow& row = out.row;
  row.family = family_name(spec.family);
  row.params = spec_params_label(spec, size);
  row.R = R;

  FamilyParams params;
  params.rank = spec.rank;
  params.sizes = {size};
  const FamilyInstance fam = make_family(spec.family, params);
  const GroupInstance& group = fam.group;
  const PermutationAction& action = fam.actions.at(0);
  const std::int64_t N = action.n_vertices;
  row.N = N;
  const int k = group.generator_count();

  auto fail = [&](const std::string& message) {
    if (!row.error.empty()) row.error += "; ";
    row.error += message;
    out.violation = true;
  };

  const auto cert = verify_right_angled(group);
  if (!cert.ok()) {
    fail("right-angled certificate failed");
    return out;
  }

  const LabeledSchreierGraph graph = build_schreier(action);
  row.edges_G = graph.edge_count();

  const RewiringResult rew = build_rewiring(graph, group, R);
  row.edges_H = rew.edges_H;
  row.density = rew.density;
  row.dL_measured = rew.distortion;
  row.dL_budget = rew.distortion_budget;
  row.bad_fraction = rew.bad_fraction;
  row.degenerate = rew.degenerate;

  // density <= 1 + (k-1)/R + 2k |X_bad|/N, exact rational comparison
  const Rat density_bound = Rat(1) + make_rat(k - 1, R) + Rat(2 * k) * rew.bad_fraction;
  if (rew.density > density_bound) fail("density bound violated");
  if (!rew.distortion) {
    fail("rewiring disconnected");
    return out;
  }
  if (BigInt(static_cast<long>(*rew.distortion)) > rew.distortion_budget)
    fail("distortion budget violated");

  const LabeledRewiring labeling = label_rewiring(graph, rew.kept, group);
  const CorrectionSet corrections = correction_set(graph, labeling, group);
  row.correction_size = static_cast<std::int64_t>(corrections.entries.size());

  std::optional<Rat> gamma;
  if (spec.gamma_d) {
    gamma = gamma_sum(action, group, *spec.gamma_d);
    row.gamma_d = gamma;
  }
  const RankUpperBound rank = rank_upper_bound(rew.edges_H, N, corrections, gamma);
  row.rank_upper = rank.groupoid;

  if (spec.homology) {
    const SubgroupPresentation schreier = schreier_presentation(group, action, 0);
    const SparseIntegerMatrix schreier_matrix = abelianized_matrix(schreier);
    const SnfResult snf = smith_normal_form(schreier_matrix);
    row.betti = snf.betti;
    row.trs = snf.trs;
    row.log_trs_over_index = torsion_growth_stat(snf.trs, N);
    row.rank_lower_ab = abelian_rank_lower_bound(snf);

    if (snf.trs > hadamard_bound(schreier_matrix)) fail("hadamard bound violated");
    // ln trs / n <= d ln b for the ambient presentation
    const double schreier_budget =
        static_cast<double>(k) * std::log(static_cast<double>(group.max_relator_length));
    if (*row.log_trs_over_index > schreier_budget + 1e-12) fail("schreier torsion bound violated");
    // d(H) - 1 <= N * rank_upper
    if (make_rat(*row.rank_lower_ab - 1, N) > rank.groupoid) fail("rank sandwich violated");

    if (spec.two_route) {
      const SubgroupPresentation rewired = rewired_complex(graph, labeling, group);
      const SparseIntegerMatrix rewired_matrix = abelianized_matrix(rewired);
      const SnfResult snf_rewired = smith_normal_form(rewired_matrix);
      if (!snf.same_abelian_group(snf_rewired)) fail("two-route homology mismatch");
      const double max_disc = 4.0 * static_cast<double>(group.max_relator_length) *
                              std::pow(static_cast<double>(*rew.distortion), 4.0);
      if (static_cast<double>(rewired.max_relator_length) > max_disc + 1e-9)
        fail("rewired relator length bound violated");
    }
  }

  if (timings) {
    row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  }
  return out;
}

std::string rat_decimal(const Rat& q) { return format_double(rat_to_double(q)); }

void append_csv_field(std::string& line, const std::string& field, bool first) {
  if (!first) line += ',';
  const bool needs_quote = field.find_first_of(",\"\n") != std::string::npos;
  if (!needs_quote) {
    line += field;
    return;
  }
  line += '"';
  for (const char c : field) {
    if (c == '"') line += '"';
    line += c;
  }
  line += '"';
}

std::vector<std::string> row_fields(const ReportRow& row) {
  std::vector<std::string> f;
  f.push_back(row.family);
  f.push_back(row.params);
  f.push_back(std::to_string(row.N));
  f.push_back(std::to_string(row.R));
  f.push_back(std::to_string(row.edges_G));
  f.push_back(std::to_string(row.edges_H));
  f.push_back(rat_to_string(row.density));
  f.push_back(rat_decimal(row.density));
  f.push_back(row.dL_measured ? std::to_string(*row.dL_measured) : "unbounded");
  f.push_back(row.dL_budget.get_str());
  f.push_back(rat_to_string(row.bad_fraction));
  f.push_back(row.degenerate ? "true" : "false");
  f.push_back(std::to_string(row.correction_size));
  f.push_back(rat_to_string(row.rank_upper));
  f.push_back(row.rank_lower_ab ? std::to_string(*row.rank_lower_ab) : "");
  f.push_back(row.betti ? std::to_string(*row.betti) : "");
  f.push_back(row.trs ? row.trs->get_str() : "");
  f.push_back(row.log_trs_over_index ? format_double(*row.log_trs_over_index) : "");
  f.push_back(row.gamma_d ? rat_to_string(*row.gamma_d) : "");
  f.push_back(std::to_string(row.runtime_ms));
  f.push_back(row.error);
  return f;
}

}  // namespace

const std::vector<std::string> kReportColumns = {
    "family",     "params",          "N",
    "R",          "edges_G",         "edges_H",
    "density",    "density_decimal", "dL_measured",
    "dL_budget",  "bad_fraction",    "degenerate",
    "correction_size", "rank_upper", "rank_lower_ab",
    "betti",      "trs",             "log_trs_over_index",
    "gamma_d",    "runtime_ms",      "error"};

ExperimentConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  require_keys(j, {"experiments", "workers", "output"}, "config");
  ExperimentConfig config;
  if (!j.contains("experiments") || !j.at("experiments").is_array() ||
      j.at("experiments").empty())
    throw ConfigError("config needs a nonempty 'experiments' array");
  for (const auto& spec : j.at("experiments")) config.experiments.push_back(parse_spec(spec));
  if (j.contains("workers")) {
    config.workers = j.at("workers").get<int>();
    if (config.workers < 1) throw ConfigError("workers must be >= 1");
  }
  if (j.contains("output")) config.output_dir = j.at("output").get<std::string>();
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

RunResult run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  struct Cell {
    std::size_t spec_index;
    std::int64_t size;
    std::int64_t R;
  };
  std::vector<Cell> cells;
  for (std::size_t e = 0; e < config.experiments.size(); ++e)
    for (const auto size : config.experiments[e].sizes)
      for (const auto R : config.experiments[e].R_values) cells.push_back(Cell{e, size, R});

  std::vector<CellResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  const int workers = std::max(1, options.workers);
  auto worker = [&]() {
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= cells.size()) return;
      const Cell& cell = cells[idx];
      ExperimentSpec spec = config.experiments[cell.spec_index];
      if (options.force_two_route) spec.two_route = true;
      try {
        results[idx] = compute_cell(spec, cell.size, cell.R, options.timings);
      } catch (const std::exception& e) {
        CellResult res;
        res.row.family = family_name(spec.family);
        res.row.params = spec_params_label(spec, cell.size);
        res.row.R = cell.R;
        res.row.error = e.what();
        res.violation = true;
        results[idx] = res;
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  RunResult run;
  for (auto& res : results) {
    run.invariant_violation |= res.violation;
    run.rows.push_back(std::move(res.row));
  }

  // per-experiment summaries in configuration order
  for (std::size_t e = 0; e < config.experiments.size(); ++e) {
    const auto& spec = config.experiments[e];
    ExperimentSummary summary;
    summary.family = family_name(spec.family);
    std::optional<Rat> cc;
    for (const auto R : spec.R_values) {
      RSummary rs;
      rs.R = R;
      for (std::size_t idx = 0; idx < cells.size(); ++idx) {
        if (cells[idx].spec_index != e || cells[idx].R != R) continue;
        const ReportRow& row = run.rows[idx];
        if (!row.error.empty() || row.degenerate) continue;
        if (!rs.limsup_density || row.density > *rs.limsup_density)
          rs.limsup_density = row.density;
      }
      if (rs.limsup_density && (!cc || *rs.limsup_density < *cc)) cc = rs.limsup_density;
      summary.per_R.push_back(rs);
    }
    summary.cc_upper_estimate = cc;
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
      if (cells[idx].spec_index != e) continue;
      const ReportRow& row = run.rows[idx];
      if (!row.log_trs_over_index || !row.dL_measured || !row.error.empty()) continue;
      TorsionAudit audit;
      audit.params = row.params;
      audit.R = row.R;
      audit.log_trs_over_index = *row.log_trs_over_index;
      // generators of the rewired presentation per unit of index times the
      // maximal disc size bound
      const Rat gens_per_index =
          make_rat(row.edges_H + row.correction_size - row.N + 1, row.N);
      const int b = make_group(spec.family, spec.rank).max_relator_length;
      audit.budget = rat_to_double(gens_per_index) *
                     std::log(4.0 * b * std::pow(static_cast<double>(*row.dL_measured), 4.0));
      audit.pass = audit.log_trs_over_index <= audit.budget + 1e-12;
      if (!audit.pass) run.invariant_violation = true;
      summary.torsion_audits.push_back(audit);
    }
    run.summaries.push_back(std::move(summary));
  }
  return run;
}

void write_csv(const RunResult& result, std::ostream& os) {
  std::string line;
  for (std::size_t i = 0; i < kReportColumns.size(); ++i)
    append_csv_field(line, kReportColumns[i], i == 0);
  os << line << "\r\n";
  for (const auto& row : result.rows) {
    line.clear();
    const auto fields = row_fields(row);
    for (std::size_t i = 0; i < fields.size(); ++i) append_csv_field(line, fields[i], i == 0);
    os << line << "\r\n";
  }
}

std::string csv_string(const RunResult& result) {
  std::ostringstream os;
  write_csv(result, os);
  return os.str();
}

void write_json_rows(const RunResult& result, std::ostream& os) {
  ordered_json arr = ordered_json::array();
  for (const auto& row : result.rows) {
    const auto fields = row_fields(row);
    ordered_json obj;
    for (std::size_t i = 0; i < kReportColumns.size(); ++i) obj[kReportColumns[i]] = fields[i];
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

void write_summary_json(const RunResult& result, std::ostream& os) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : result.summaries) {
    ordered_json js;
    js["family"] = s.family;
    ordered_json per_r = ordered_json::array();
    for (const auto& rs : s.per_R) {
      ordered_json jr;
      jr["R"] = rs.R;
      jr["limsup_density"] = rs.limsup_density ? rat_to_string(*rs.limsup_density) : "";
      per_r.push_back(std::move(jr));
    }
    js["per_R"] = std::move(per_r);
    js["cc_upper_estimate"] =
        s.cc_upper_estimate ? rat_to_string(*s.cc_upper_estimate) : "";
    ordered_json audits = ordered_json::array();
    for (const auto& a : s.torsion_audits) {
      ordered_json ja;
      ja["params"] = a.params;
      ja["R"] = a.R;
      ja["log_trs_over_index"] = format_double(a.log_trs_over_index);
      ja["budget"] = format_double(a.budget);
      ja["pass"] = a.pass;
      audits.push_back(std::move(ja));
    }
    js["torsion_audits"] = std::move(audits);
    arr.push_back(std::move(js));
  }
  os << arr.dump(2) << '\n';
}

}  // namespace rgcost
