#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "hvss/fronts.hpp"
#include "hvss/selectors.hpp"

namespace hvss::bench {

struct BenchConfig {
  std::vector<FrontShape> shapes;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> pool_sizes;
  std::size_t k = 100;
  std::size_t repeats = 1;
  std::vector<Algorithm> algorithms;
  std::uint64_t seed_base = 0;
  double reference_value = 1.1;
  /// Size of the master pool each repeat subsamples from; 0 selects the
  /// default of five times the largest pool size.
  std::size_t master_count = 0;
};

BenchConfig load_config(const std::filesystem::path& path);

struct BenchRecord {
  Algorithm algorithm = Algorithm::Greedy;
  FrontShape shape = FrontShape::Spherical;
  std::size_t dim = 0;
  std::size_t pool = 0;
  std::size_t k = 0;
  std::size_t repeat = 0;
  double seconds = 0.0;
  std::uint64_t hvc_evaluations = 0;
  double hv = 0.0;
  std::uint64_t digest = 0;
  /// False when this record's digest disagrees with the other algorithms in
  /// the same (shape, dim, pool, repeat) cell.
  bool digest_ok = true;
};

struct BenchOutcome {
  std::vector<BenchRecord> records;
  bool all_consistent = true;
};

/// Runs the full shapes x dims x pools x repeats x algorithms matrix.
/// Each repeat subsamples the master pool with seed seed_base + repeat;
/// only the selection call is timed. Cells may run on `jobs` worker
/// threads; the records come back in deterministic order regardless.
BenchOutcome run(const BenchConfig& config, unsigned jobs = 1);

/// Stable order-sensitive hash of a selected index sequence (FNV-1a over
/// the little-endian 64-bit indices).
std::uint64_t index_digest(std::span<const std::size_t> indices);

/// Records CSV with the fixed header
/// algorithm,shape,dim,pool,k,repeat,seconds,hvc_evals,hv,digest.
void write_records_csv(const std::filesystem::path& path,
                       const std::vector<BenchRecord>& records);

/// Per-cell mean seconds plus any digest mismatches, as JSON.
void write_summary_json(const std::filesystem::path& path,
                        const BenchConfig& config,
                        const BenchOutcome& outcome);

}  // namespace hvss::bench
