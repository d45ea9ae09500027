// Command line front end: experiment sweeps plus graph/matrix dumps.
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rgcost/experiment.hpp"
#include "rgcost/groupoid.hpp"
#include "rgcost/homology.hpp"
#include "rgcost/rewire.hpp"
#include "rgcost/schreier.hpp"

namespace fs = std::filesystem;
using namespace rgcost;

namespace {

void print_families() {
  std::cout << "built-in families:\n"
            << "  torus            params: k (rank, >= 2), sizes = side lengths n >= 2;"
            << " subgroup (nZ)^k, n^k cosets\n"
            << "  heisenberg       sizes = moduli n >= 2; mod-n congruence kernel, n^3 cosets\n"
            << "  sl3z-principal   sizes = primes p in {2,3,5,7} (closure guard);"
            << " mod-p congruence kernel, |SL(3,p)| cosets\n"
            << "  sl3z-projective  sizes = primes p in {2,3,5,7,11,13};"
            << " stabilizer of [1:0:0], p^2+p+1 cosets\n";
}

struct DumpArgs {
  std::string family;
  int k = 2;
  std::int64_t size = 0;
  std::int64_t R = 0;
  std::string route = "schreier";
  std::string out_path;
};

FamilyInstance build_one(const DumpArgs& args) {
  FamilyParams params;
  params.rank = args.k;
  params.sizes = {args.size};
  return make_family(family_from_name(args.family), params);
}

std::ostream& open_or_stdout(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

int run_command(const std::string& config_path, const std::string& out_dir_flag, int workers_flag,
                const std::string& format, bool verify, bool timings) {
  ExperimentConfig config = load_config(config_path);
  if (!out_dir_flag.empty()) config.output_dir = out_dir_flag;
  RunOptions options;
  options.workers = workers_flag > 0 ? workers_flag : config.workers;
  options.timings = timings;
  options.force_two_route = verify;

  const RunResult result = run_experiment(config, options);

  fs::create_directories(config.output_dir);
  if (format == "csv" || format == "both") {
    std::ofstream csv(fs::path(config.output_dir) / "report.csv", std::ios::binary);
    write_csv(result, csv);
  }
  if (format == "json" || format == "both") {
    std::ofstream json_rows(fs::path(config.output_dir) / "report.json");
    write_json_rows(result, json_rows);
  }
  {
    std::ofstream summary(fs::path(config.output_dir) / "summary.json");
    write_summary_json(result, summary);
  }

  for (const auto& s : result.summaries) {
    std::cout << s.family << ":";
    for (const auto& rs : s.per_R)
      std::cout << "  R=" << rs.R << " limsup_density="
                << (rs.limsup_density ? rat_to_string(*rs.limsup_density) : "-");
    std::cout << "  cc_upper="
              << (s.cc_upper_estimate ? rat_to_string(*s.cc_upper_estimate) : "-") << '\n';
  }
  std::size_t failed = 0;
  for (const auto& row : result.rows)
    if (!row.error.empty()) {
      ++failed;
      std::cerr << "row " << row.family << " " << row.params << " R=" << row.R << ": "
                << row.error << '\n';
    }
  std::cout << result.rows.size() << " rows (" << failed << " with errors) -> "
            << config.output_dir << '\n';
  return result.invariant_violation ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schreier graph rewiring, rank-gradient bounds and homology torsion"};
  app.require_subcommand(0, 1);

  bool families = false;
  app.add_flag("--families", families, "list the built-in families and exit");

  auto* run = app.add_subcommand("run", "run an experiment sweep from a JSON config");
  std::string config_path, out_dir, format = "csv";
  int workers = 0;
  bool verify = false, timings = false;
  run->add_option("config", config_path, "path to the JSON config")->required();
  run->add_option("--out", out_dir, "output directory (overrides the config)");
  run->add_option("--workers", workers, "worker count (overrides the config)");
  run->add_option("--format", format, "csv|json|both")
      ->check(CLI::IsMember({"csv", "json", "both"}));
  run->add_flag("--verify", verify, "force all cross-route checks on");
  run->add_flag("--timings", timings, "record per-row runtimes (breaks byte-identical output)");

  auto* dump_graph_cmd = app.add_subcommand("dump-graph", "write a Schreier graph adjacency list");
  DumpArgs ga;
  dump_graph_cmd->add_option("--family", ga.family, "family tag")->required();
  dump_graph_cmd->add_option("--k", ga.k, "torus rank");
  dump_graph_cmd->add_option("--size", ga.size, "family size parameter (n or p)")->required();
  dump_graph_cmd->add_option("--out", ga.out_path, "output file (default stdout)");

  auto* dump_matrix_cmd =
      app.add_subcommand("dump-matrix", "write an abelianized relation matrix");
  DumpArgs ma;
  dump_matrix_cmd->add_option("--family", ma.family, "family tag")->required();
  dump_matrix_cmd->add_option("--k", ma.k, "torus rank");
  dump_matrix_cmd->add_option("--size", ma.size, "family size parameter (n or p)")->required();
  dump_matrix_cmd->add_option("--route", ma.route, "schreier|rewired")
      ->check(CLI::IsMember({"schreier", "rewired"}));
  dump_matrix_cmd->add_option("--R", ma.R, "rewiring parameter (rewired route)");
  dump_matrix_cmd->add_option("--out", ma.out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (families) {
      print_families();
      return 0;
    }
    if (*run) return run_command(config_path, out_dir, workers, format, verify, timings);
    if (*dump_graph_cmd) {
      const FamilyInstance fam = build_one(ga);
      std::ofstream file;
      dump_graph(build_schreier(fam.actions.at(0)), open_or_stdout(ga.out_path, file));
      return 0;
    }
    if (*dump_matrix_cmd) {
      const FamilyInstance fam = build_one(ma);
      const LabeledSchreierGraph graph = build_schreier(fam.actions.at(0));
      SparseIntegerMatrix matrix;
      if (ma.route == "schreier") {
        matrix = abelianized_matrix(schreier_presentation(fam.group, fam.actions.at(0)));
      } else {
        if (ma.R < 2) throw std::runtime_error("--route rewired requires --R (even, >= 2)");
        const RewiringResult rew = build_rewiring(graph, fam.group, ma.R);
        const LabeledRewiring labeling = label_rewiring(graph, rew.kept, fam.group);
        matrix = abelianized_matrix(rewired_complex(graph, labeling, fam.group));
      }
      std::ofstream file;
      dump_matrix(matrix, open_or_stdout(ma.out_path, file));
      return 0;
    }
    std::cout << app.help();
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
