#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hvss/core.hpp"
#include "hvss/fronts.hpp"

namespace hvss::io {

/// Owning row-major point table, as read from disk. Carries no invariant
/// beyond consistent dimension.
struct PointTable {
  std::vector<double> rows;
  std::size_t count = 0;
  std::size_t dim = 0;

  PointsView view() const noexcept { return {rows.data(), count, dim}; }
};

/// Point-set CSV: header "f1,f2,...,fd", one point per row, decimal
/// floating point, LF line endings. Writing uses 17 significant digits so
/// a read reproduces every coordinate exactly.
PointTable read_points_csv(const std::filesystem::path& path);
void write_points_csv(const std::filesystem::path& path, PointsView pts);

struct FrontMetadata {
  FrontShape shape = FrontShape::Spherical;
  std::size_t dim = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  bool normalized = false;
};

/// Sidecar JSON written next to a generated front.
void write_front_metadata(const std::filesystem::path& path,
                          const FrontMetadata& meta);

struct SelectionStats {
  double hv = 0.0;
  std::vector<double> hv_trajectory;
  std::uint64_t hvc_evaluations = 0;
  double seconds = 0.0;
};

void write_selection_stats(const std::filesystem::path& path,
                           const SelectionStats& stats);

}  // namespace hvss::io
