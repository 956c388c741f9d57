#pragma once

// Shared helpers for the test binaries: random instance generators and a
// brute-force greedy reference built on the definition-path contribution.

#include <vector>

#include "hvss/contribution.hpp"
#include "hvss/core.hpp"
#include "hvss/rng.hpp"

namespace hvss::testing {

/// Uniform points in [0, 1]^d, reduced to their maximal antichain.
/// |result| <= max_points.
inline Front random_box_front(Rng& rng, std::size_t dim,
                              std::size_t max_points) {
  std::vector<double> rows(max_points * dim);
  for (double& v : rows) v = rng.uniform01();
  return nondominated_filter(PointsView{rows.data(), max_points, dim});
}

/// Uniform point in [0, 1]^d.
inline Point random_point(Rng& rng, std::size_t dim) {
  std::vector<double> v(dim);
  for (double& x : v) x = rng.uniform01();
  return Point(std::move(v));
}

/// Uniform antichain of exactly n points (keeps sampling until the filter
/// retains n survivors, then truncates).
inline Front random_antichain(Rng& rng, std::size_t dim, std::size_t n) {
  std::vector<double> pool;
  for (;;) {
    std::vector<double> rows((4 * n) * dim);
    for (double& v : rows) v = rng.uniform01();
    pool.insert(pool.end(), rows.begin(), rows.end());
    Front f = nondominated_filter(
        PointsView{pool.data(), pool.size() / dim, dim});
    if (f.size() >= n) {
      std::vector<double> take(f.view().data, f.view().data + n * dim);
      return nondominated_filter(PointsView{take.data(), n, dim});
    }
    pool.assign(f.view().data, f.view().data + f.size() * dim);
  }
}

/// Greedy selection driven solely by the definition-path contribution;
/// independent reference for the selector outputs. Returns indices in
/// selection order.
inline std::vector<std::size_t> greedy_by_definition(const Front& candidates,
                                                     std::size_t k,
                                                     const ReferencePoint& r) {
  std::vector<std::size_t> selected;
  std::vector<bool> taken(candidates.size(), false);
  std::vector<Point> chosen;
  const std::size_t rounds = std::min(k, candidates.size());
  for (std::size_t t = 0; t < rounds; ++t) {
    double best_v = 0.0;
    std::size_t best_i = 0;
    bool have = false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (taken[i]) continue;
      const Front sel = Front::checked(chosen);
      const double v = hvc_definition(candidates.point(i), sel, r);
      if (!have || v > best_v || (v == best_v && i < best_i)) {
        best_v = v;
        best_i = i;
        have = true;
      }
    }
    taken[best_i] = true;
    selected.push_back(best_i);
    chosen.push_back(candidates.point(best_i));
  }
  return selected;
}

}  // namespace hvss::testing
