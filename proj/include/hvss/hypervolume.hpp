#pragma once

#include <cstdint>
#include <deque>
#include <span>
#include <vector>

#include "hvss/core.hpp"

namespace hvss {

/// Volume of the box [p, r]. Requires p_j < r_j in every coordinate.
double inclusive_hv(const Point& p, const ReferencePoint& r);

/// Reusable scratch for the exact hypervolume recursion. Not thread-safe;
/// keep one instance per thread. Reusing an instance across calls avoids
/// reallocating the per-depth buffers in hot loops.
class HvWorkspace {
 public:
  HvWorkspace() = default;
  HvWorkspace(const HvWorkspace&) = delete;
  HvWorkspace& operator=(const HvWorkspace&) = delete;

  /// Exact measure of the union of boxes [row, ref]. Rows must be strictly
  /// below ref in every coordinate; dominated and duplicate rows are
  /// permitted and contribute nothing. No validation is performed here.
  double measure(PointsView pts, const double* ref);

  /// Measure of {worse(row, clip) : row in pts} against ref, i.e. the
  /// union of the input boxes intersected with the box [clip, ref].
  double measure_clipped(PointsView pts, const double* clip,
                         const double* ref);

 private:
  struct Level {
    std::vector<double> rows;
    std::vector<double> sorted;
    std::vector<double> corners;
    std::vector<double> sums;
    std::vector<std::uint32_t> order;
    std::vector<std::pair<double, double>> stair;
  };

  Level& level(std::size_t depth);
  void prepare(std::size_t n, std::size_t d);
  double recurse(std::size_t depth, std::size_t n, std::size_t d,
                 const double* ref);
  double tiny_hv(Level& lv, std::size_t n, std::size_t d, const double* ref);
  double sweep_2d(Level& lv, std::size_t n, const double* ref);
  double sweep_3d(Level& lv, std::size_t n, const double* ref);
  void sort_rows(Level& lv, std::size_t n, std::size_t d);
  std::size_t antichain_fast(Level& lv, double* rows, std::size_t n,
                             std::size_t w);

  std::deque<Level> levels_;
  const void* ops_ = nullptr;  // kernel table, refreshed per entry point
};

/// Exact hypervolume of a front with respect to reference point r.
double hv(const Front& front, const ReferencePoint& r);

/// Exact hypervolume of an arbitrary point matrix. Dominated members are
/// permitted and do not change the result. Validates dimensions and the
/// strictly-below-reference precondition; empty input yields 0.
double hv(PointsView pts, const ReferencePoint& r);
double hv(PointsView pts, const ReferencePoint& r, HvWorkspace& ws);

}  // namespace hvss
