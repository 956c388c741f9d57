// Command-line front end: front generation, subset selection, hypervolume
// queries and the benchmark matrix. Exit codes: 0 success, 1 usage error,
// 2 data or contract error.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hvss/bench.hpp"
#include "hvss/contribution.hpp"
#include "hvss/fronts.hpp"
#include "hvss/hypervolume.hpp"
#include "hvss/io.hpp"
#include "hvss/selectors.hpp"

namespace {

using namespace hvss;

struct GenArgs {
  std::string shape;
  std::size_t dim = 3;
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  bool normalize = false;
  std::string out;
};

struct SelectArgs {
  std::string in;
  std::size_t k = 0;
  std::string algorithm = "lgi";
  double ref = 1.1;
  bool normalize = false;
  std::string out;
  std::string stats;
};

struct HvArgs {
  std::string in;
  double ref = 1.1;
};

struct BenchArgs {
  std::string config;
  std::string out;
  bool serial = false;
  unsigned jobs = 1;
};

// Rescale a raw table into the unit box per objective, mirroring
// normalize_unit_box but without the antichain requirement.
void normalize_table(io::PointTable& table) {
  if (table.count < 2) {
    throw std::runtime_error("--normalize needs at least 2 points");
  }
  for (std::size_t j = 0; j < table.dim; ++j) {
    double lo = table.rows[j];
    double hi = table.rows[j];
    for (std::size_t i = 1; i < table.count; ++i) {
      lo = std::min(lo, table.rows[i * table.dim + j]);
      hi = std::max(hi, table.rows[i * table.dim + j]);
    }
    if (hi == lo) {
      throw std::runtime_error("--normalize: objective " + std::to_string(j) +
                               " is constant");
    }
    for (std::size_t i = 0; i < table.count; ++i) {
      double& v = table.rows[i * table.dim + j];
      v = (v - lo) / (hi - lo);
    }
  }
}

// Error out, listing 1-based CSV line numbers of rows that do not lie
// strictly below the reference point.
void require_below_reference(const io::PointTable& table,
                             const ReferencePoint& ref,
                             const std::string& path) {
  std::string bad;
  std::size_t bad_count = 0;
  for (std::size_t i = 0; i < table.count; ++i) {
    bool inside = true;
    for (std::size_t j = 0; j < table.dim; ++j) {
      if (!(table.rows[i * table.dim + j] < ref[j])) {
        inside = false;
        break;
      }
    }
    if (!inside) {
      if (++bad_count <= 20) {
        if (!bad.empty()) bad += ", ";
        bad += std::to_string(i + 2);  // +1 header, +1 one-based
      }
    }
  }
  if (bad_count > 0) {
    if (bad_count > 20) bad += ", ...";
    throw std::runtime_error(path + ": " + std::to_string(bad_count) +
                             " point(s) not strictly below the reference "
                             "point (lines " + bad + ")");
  }
}

int cmd_gen_front(const GenArgs& args) {
  FrontSpec spec;
  spec.shape = *shape_from_id(args.shape);
  spec.dim = args.dim;
  spec.count = args.count;
  spec.seed = args.seed;

  Front front = generate_front(spec);
  if (args.normalize) front = normalize_unit_box(front);

  io::write_points_csv(args.out, front.view());
  io::FrontMetadata meta{spec.shape, spec.dim, spec.count, spec.seed,
                         args.normalize};
  io::write_front_metadata(std::filesystem::path(args.out).string() +
                               ".meta.json",
                           meta);
  return 0;
}

int cmd_select(const SelectArgs& args) {
  io::PointTable table = io::read_points_csv(args.in);
  if (args.normalize) normalize_table(table);

  const auto ref = ReferencePoint::uniform(table.dim ? table.dim : 2, args.ref);
  require_below_reference(table, ref, args.in);

  const auto alg = algorithm_from_id(args.algorithm);
  const auto problem = SelectionProblem::create(table.view(), args.k, ref);

  const auto t0 = std::chrono::steady_clock::now();
  const SelectionResult res = run_algorithm(*alg, problem);
  const auto t1 = std::chrono::steady_clock::now();

  std::vector<double> rows;
  rows.reserve(res.selected.size() * table.dim);
  for (std::size_t idx : res.selected) {
    const double* row = table.rows.data() + idx * table.dim;
    rows.insert(rows.end(), row, row + table.dim);
  }
  io::write_points_csv(
      args.out, PointsView{rows.data(), res.selected.size(), table.dim});

  if (!args.stats.empty()) {
    io::SelectionStats stats;
    stats.hv = res.final_hv();
    stats.hv_trajectory = res.hv_trajectory;
    stats.hvc_evaluations = res.hvc_evaluations;
    stats.seconds = std::chrono::duration<double>(t1 - t0).count();
    io::write_selection_stats(args.stats, stats);
  }
  return 0;
}

int cmd_hv(const HvArgs& args) {
  const io::PointTable table = io::read_points_csv(args.in);
  const auto ref = ReferencePoint::uniform(table.dim ? table.dim : 2, args.ref);
  require_below_reference(table, ref, args.in);
  const double value = hv(table.view(), ref);
  std::printf("%.12g\n", value);
  return 0;
}

int cmd_bench(const BenchArgs& args) {
  const bench::BenchConfig cfg = bench::load_config(args.config);
  const unsigned jobs = args.serial ? 1 : std::max(1u, args.jobs);
  const bench::BenchOutcome outcome = bench::run(cfg, jobs);
  bench::write_records_csv(args.out, outcome.records);
  bench::write_summary_json(std::filesystem::path(args.out).string() +
                                ".summary.json",
                            cfg, outcome);
  if (!outcome.all_consistent) {
    std::cerr << "bench: selected-subset digests disagree across algorithms "
                 "in at least one cell (see summary)\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypervolume subset selection toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd =
      app.add_subcommand("gen-front", "generate a Pareto-front sample");
  gen_cmd->add_option("--shape", gen.shape, "front shape")
      ->required()
      ->check(CLI::IsMember(
          {"spherical", "inverted_spherical", "discontinuous"}));
  gen_cmd->add_option("--dim", gen.dim, "number of objectives")
      ->required()
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  gen_cmd->add_option("--count", gen.count, "number of points")
      ->required()
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_flag("--normalize", gen.normalize,
                    "rescale each objective into [0, 1]");
  gen_cmd->add_option("--out", gen.out, "output CSV path")->required();

  SelectArgs sel;
  auto* sel_cmd = app.add_subcommand("select", "greedy subset selection");
  sel_cmd->add_option("--in", sel.in, "input points CSV")->required();
  sel_cmd->add_option("--k", sel.k, "subset size")->required();
  sel_cmd->add_option("--algorithm", sel.algorithm, "gi, ugi or lgi")
      ->check(CLI::IsMember({"gi", "ugi", "lgi"}));
  sel_cmd->add_option("--ref", sel.ref,
                      "reference value, replicated across objectives");
  sel_cmd->add_flag("--normalize", sel.normalize,
                    "rescale each objective into [0, 1] before selecting");
  sel_cmd->add_option("--out", sel.out, "selected points CSV")->required();
  sel_cmd->add_option("--stats", sel.stats, "selection stats JSON");

  HvArgs hva;
  auto* hv_cmd = app.add_subcommand("hv", "exact hypervolume of a point set");
  hv_cmd->add_option("--in", hva.in, "input points CSV")->required();
  hv_cmd->add_option("--ref", hva.ref,
                     "reference value, replicated across objectives");

  BenchArgs ben;
  auto* bench_cmd =
      app.add_subcommand("bench", "run the timing matrix from a config");
  bench_cmd->add_option("--config", ben.config, "bench config JSON")
      ->required();
  bench_cmd->add_option("--out", ben.out, "records CSV path")->required();
  bench_cmd->add_flag("--serial", ben.serial,
                      "run every cell on the calling thread");
  bench_cmd->add_option("--jobs", ben.jobs,
                        "worker threads for benchmark cells");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen_front(gen);
    if (sel_cmd->parsed()) return cmd_select(sel);
    if (hv_cmd->parsed()) return cmd_hv(hva);
    if (bench_cmd->parsed()) return cmd_bench(ben);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
