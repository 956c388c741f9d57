#include "hvss/bench.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace hvss::bench {

namespace {

using nlohmann::json;

FrontShape parse_shape(const std::string& s) {
  const auto shape = shape_from_id(s);
  if (!shape) throw std::runtime_error("bench config: unknown shape '" + s + "'");
  return *shape;
}

Algorithm parse_algorithm(const std::string& s) {
  const auto alg = algorithm_from_id(s);
  if (!alg) {
    throw std::runtime_error("bench config: unknown algorithm '" + s + "'");
  }
  return *alg;
}

}  // namespace

BenchConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("bench config " + path.string() + ": " +
                             e.what());
  }

  BenchConfig cfg;
  for (const auto& s : j.at("shapes")) cfg.shapes.push_back(parse_shape(s));
  for (const auto& d : j.at("dims")) cfg.dims.push_back(d.get<std::size_t>());
  for (const auto& p : j.at("pool_sizes")) {
    cfg.pool_sizes.push_back(p.get<std::size_t>());
  }
  cfg.k = j.at("k").get<std::size_t>();
  cfg.repeats = j.value("repeats", std::size_t{1});
  if (j.contains("algorithms")) {
    for (const auto& a : j.at("algorithms")) {
      cfg.algorithms.push_back(parse_algorithm(a));
    }
  } else {
    cfg.algorithms = {Algorithm::Greedy, Algorithm::GreedyUpdate,
                      Algorithm::LazyGreedy};
  }
  cfg.seed_base = j.value("seed_base", std::uint64_t{0});
  cfg.reference_value = j.value("reference_value", 1.1);
  cfg.master_count = j.value("master_count", std::size_t{0});

  if (cfg.shapes.empty() || cfg.dims.empty() || cfg.pool_sizes.empty() ||
      cfg.algorithms.empty()) {
    throw std::runtime_error(
        "bench config: shapes, dims, pool_sizes and algorithms must be "
        "non-empty");
  }
  if (cfg.repeats < 1) {
    throw std::runtime_error("bench config: repeats must be >= 1");
  }
  return cfg;
}

std::uint64_t index_digest(std::span<const std::size_t> indices) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t idx : indices) {
    const auto v = static_cast<std::uint64_t>(idx);
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  return h;
}

namespace {

struct Cell {
  std::size_t shape_i, dim_i, pool_i, repeat;
};

}  // namespace

BenchOutcome run(const BenchConfig& cfg, unsigned jobs) {
  const std::size_t max_pool =
      *std::max_element(cfg.pool_sizes.begin(), cfg.pool_sizes.end());
  const std::size_t master_count =
      cfg.master_count > 0 ? cfg.master_count : 5 * max_pool;
  if (master_count < max_pool) {
    throw std::runtime_error("bench config: master_count smaller than the "
                             "largest pool size");
  }

  // One master pool per (shape, dim); every repeat subsamples it. The
  // discontinuous surface exceeds the reference value, so its pool is
  // rescaled into the unit box before any subsampling.
  std::map<std::pair<std::size_t, std::size_t>, Front> masters;
  for (std::size_t si = 0; si < cfg.shapes.size(); ++si) {
    for (std::size_t di = 0; di < cfg.dims.size(); ++di) {
      FrontSpec spec{cfg.shapes[si], cfg.dims[di], master_count,
                     cfg.seed_base};
      Front master = generate_front(spec);
      if (cfg.shapes[si] == FrontShape::Discontinuous) {
        master = normalize_unit_box(master);
      }
      masters.emplace(std::make_pair(si, di), std::move(master));
    }
  }

  std::vector<Cell> cells;
  for (std::size_t si = 0; si < cfg.shapes.size(); ++si) {
    for (std::size_t di = 0; di < cfg.dims.size(); ++di) {
      for (std::size_t pi = 0; pi < cfg.pool_sizes.size(); ++pi) {
        for (std::size_t rep = 0; rep < cfg.repeats; ++rep) {
          cells.push_back({si, di, pi, rep});
        }
      }
    }
  }

  const std::size_t algs = cfg.algorithms.size();
  std::vector<BenchRecord> records(cells.size() * algs);

  auto run_cell = [&](std::size_t ci) {
    const Cell& cell = cells[ci];
    const Front& master = masters.at({cell.shape_i, cell.dim_i});
    const std::size_t pool = cfg.pool_sizes[cell.pool_i];
    const Front sub = subsample(master, pool, cfg.seed_base + cell.repeat);
    const auto ref =
        ReferencePoint::uniform(cfg.dims[cell.dim_i], cfg.reference_value);
    const SelectionProblem problem =
        SelectionProblem::create(sub.view(), cfg.k, ref);

    for (std::size_t ai = 0; ai < algs; ++ai) {
      const auto t0 = std::chrono::steady_clock::now();
      const SelectionResult res =
          run_algorithm(cfg.algorithms[ai], problem);
      const auto t1 = std::chrono::steady_clock::now();

      BenchRecord& rec = records[ci * algs + ai];
      rec.algorithm = cfg.algorithms[ai];
      rec.shape = cfg.shapes[cell.shape_i];
      rec.dim = cfg.dims[cell.dim_i];
      rec.pool = pool;
      rec.k = cfg.k;
      rec.repeat = cell.repeat;
      rec.seconds = std::chrono::duration<double>(t1 - t0).count();
      rec.hvc_evaluations = res.hvc_evaluations;
      rec.hv = res.final_hv();
      rec.digest = index_digest(res.selected);
    }
  };

  if (jobs <= 1 || cells.size() <= 1) {
    for (std::size_t ci = 0; ci < cells.size(); ++ci) run_cell(ci);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t ci = next.fetch_add(1);
        if (ci >= cells.size()) return;
        run_cell(ci);
      }
    };
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(jobs, cells.size());
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  BenchOutcome outcome;
  outcome.records = std::move(records);
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    const std::uint64_t first = outcome.records[ci * algs].digest;
    bool ok = true;
    for (std::size_t ai = 1; ai < algs; ++ai) {
      if (outcome.records[ci * algs + ai].digest != first) ok = false;
    }
    if (!ok) {
      for (std::size_t ai = 0; ai < algs; ++ai) {
        outcome.records[ci * algs + ai].digest_ok = false;
      }
      outcome.all_consistent = false;
    }
  }
  return outcome;
}

void write_records_csv(const std::filesystem::path& path,
                       const std::vector<BenchRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << "algorithm,shape,dim,pool,k,repeat,seconds,hvc_evals,hv,digest\n";
  char buf[96];
  for (const BenchRecord& r : records) {
    std::snprintf(buf, sizeof buf, "%.9g,%llu,%.17g,%016llx",
                  r.seconds,
                  static_cast<unsigned long long>(r.hvc_evaluations), r.hv,
                  static_cast<unsigned long long>(r.digest));
    out << algorithm_id(r.algorithm) << ',' << shape_id(r.shape) << ','
        << r.dim << ',' << r.pool << ',' << r.k << ',' << r.repeat << ','
        << buf << '\n';
  }
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

void write_summary_json(const std::filesystem::path& path,
                        const BenchConfig& cfg, const BenchOutcome& outcome) {
  // Mean seconds per (shape, dim, pool, algorithm) cell across repeats.
  std::map<std::array<std::size_t, 4>, std::pair<double, std::size_t>> acc;
  std::vector<json> mismatches;
  for (const BenchRecord& r : outcome.records) {
    const std::array<std::size_t, 4> key{
        static_cast<std::size_t>(r.shape), r.dim, r.pool,
        static_cast<std::size_t>(r.algorithm)};
    auto& slot = acc[key];
    slot.first += r.seconds;
    slot.second += 1;
    if (!r.digest_ok) {
      mismatches.push_back(json{{"algorithm", algorithm_id(r.algorithm)},
                                {"shape", shape_id(r.shape)},
                                {"dim", r.dim},
                                {"pool", r.pool},
                                {"repeat", r.repeat}});
    }
  }
  json cells = json::array();
  for (const auto& [key, slot] : acc) {
    cells.push_back(json{
        {"shape", shape_id(static_cast<FrontShape>(key[0]))},
        {"dim", key[1]},
        {"pool", key[2]},
        {"k", cfg.k},
        {"algorithm", algorithm_id(static_cast<Algorithm>(key[3]))},
        {"mean_seconds", slot.first / static_cast<double>(slot.second)},
        {"repeats", slot.second}});
  }
  json j{{"cells", cells},
         {"all_consistent", outcome.all_consistent},
         {"digest_mismatches", mismatches}};
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << j.dump(2) << '\n';
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

}  // namespace hvss::bench
