// Exact hypervolume for minimization fronts, WFG style. Points are sorted
// ascending on the last objective; each point contributes its column depth
// (ref minus its last coordinate) times its exclusive area against the
// points sorted before it, computed one dimension down:
//
//   hv_d(S) = sum_j (r_d - z_j) * [ inc_{d-1}(s_j)
//                                   - hv_{d-1}(nds(limit(s_1..s_{j-1}, s_j))) ]
//
// which telescopes the plain dimension sweep. The recursion sheds one
// objective per level and bottoms out at direct inclusion-exclusion for up
// to four points, a staircase sweep at d == 3, and a linear sweep at
// d == 2. All scratch lives in per-depth buffers sized once per call;
// the inner loops allocate nothing. Clipped rows stay strictly below the
// reference whenever the inputs do, so no box side ever needs clamping.

#include "hvss/hypervolume.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <numeric>
#include <string>

#include "hvss/kernels.hpp"

namespace hvss {

namespace {

inline double box_volume(const double* p, const double* ref, std::size_t w) {
  double v = 1.0;
  for (std::size_t j = 0; j < w; ++j) v *= ref[j] - p[j];
  return v;
}

void require_admissible(PointsView pts, const ReferencePoint& r) {
  if (pts.count == 0) return;
  if (pts.dim != r.dim()) {
    throw std::invalid_argument("hv: dimension mismatch: points are " +
                                std::to_string(pts.dim) + "-d, reference is " +
                                std::to_string(r.dim()) + "-d");
  }
  for (std::size_t i = 0; i < pts.count; ++i) {
    const double* row = pts.data + i * pts.dim;
    for (std::size_t j = 0; j < pts.dim; ++j) {
      if (!(row[j] < r[j])) {
        throw std::invalid_argument(
            "hv: point " + std::to_string(i) + " does not strictly dominate "
            "the reference in coordinate " + std::to_string(j));
      }
    }
  }
}

}  // namespace

double inclusive_hv(const Point& p, const ReferencePoint& r) {
  if (p.dim() != r.dim()) {
    throw std::invalid_argument("inclusive_hv: dimension mismatch");
  }
  for (std::size_t j = 0; j < p.dim(); ++j) {
    if (!(p[j] < r[j])) {
      throw std::invalid_argument(
          "inclusive_hv: point does not strictly dominate the reference in "
          "coordinate " + std::to_string(j));
    }
  }
  return box_volume(p.data(), r.data(), p.dim());
}

HvWorkspace::Level& HvWorkspace::level(std::size_t depth) {
  while (levels_.size() <= depth) levels_.emplace_back();
  return levels_[depth];
}

void HvWorkspace::prepare(std::size_t n, std::size_t d) {
  const std::size_t depths = d > 3 ? d - 3 : 0;
  for (std::size_t dep = 0; dep <= depths; ++dep) {
    Level& lv = level(dep);
    if (lv.rows.size() < n * d) lv.rows.resize(n * d);
    if (lv.sorted.size() < n * d) lv.sorted.resize(n * d);
    if (lv.order.size() < n) lv.order.resize(n);
    if (lv.corners.size() < 16 * d) lv.corners.resize(16 * d);
    if (lv.sums.size() < n) lv.sums.resize(n);
  }
  ops_ = &kernels::active();
}

// Antichain reduction that is free to reorder rows: sorting by coordinate
// sum first means a row can only be covered by rows already kept (a
// dominator never has the larger sum), so the usual purge pass disappears
// and small-sum rows, the strongest dominators, are scanned first.
std::size_t HvWorkspace::antichain_fast(Level& lv, double* rows,
                                        std::size_t n, std::size_t w) {
  const auto& ops = *static_cast<const kernels::Ops*>(ops_);
  double* sums = lv.sums.data();
  std::uint32_t* idx = lv.order.data();
  for (std::size_t i = 0; i < n; ++i) {
    const double* r = rows + i * w;
    double s = 0.0;
    for (std::size_t c = 0; c < w; ++c) s += r[c];
    sums[i] = s;
    idx[i] = static_cast<std::uint32_t>(i);
  }
  const auto before = [rows, sums, w](std::uint32_t a, std::uint32_t b) {
    if (sums[a] != sums[b]) return sums[a] < sums[b];
    const double* ra = rows + std::size_t{a} * w;
    const double* rb = rows + std::size_t{b} * w;
    return std::lexicographical_compare(ra, ra + w, rb, rb + w);
  };
  if (n <= 32) {
    for (std::size_t i = 1; i < n; ++i) {
      const std::uint32_t key = idx[i];
      std::size_t j = i;
      while (j > 0 && before(key, idx[j - 1])) {
        idx[j] = idx[j - 1];
        --j;
      }
      idx[j] = key;
    }
  } else {
    std::sort(idx, idx + n, before);
  }
  double* out = lv.sorted.data();
  std::size_t m = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double* cand = rows + std::size_t{idx[k]} * w;
    if (ops.find_dominator(out, m, w, cand, m) != m) continue;
    std::memcpy(out + m * w, cand, w * sizeof(double));
    ++m;
  }
  std::memcpy(rows, out, m * w * sizeof(double));
  return m;
}

// Inclusion-exclusion over at most four boxes; corners[mask] is built from
// corners[mask without its lowest bit] in one max per coordinate.
double HvWorkspace::tiny_hv(Level& lv, std::size_t n, std::size_t d,
                            const double* ref) {
  const double* rows = lv.rows.data();
  if (n == 1) return box_volume(rows, ref, d);
  double* corners = lv.corners.data();
  double total = 0.0;
  const unsigned top = 1u << n;
  for (unsigned mask = 1; mask < top; ++mask) {
    const unsigned low = mask & (0u - mask);
    const unsigned rest = mask ^ low;
    const std::size_t i = static_cast<std::size_t>(std::countr_zero(low));
    const double* src = rows + i * d;
    double* dst = corners + mask * d;
    if (rest == 0) {
      std::memcpy(dst, src, d * sizeof(double));
    } else {
      const double* base = corners + rest * d;
      for (std::size_t j = 0; j < d; ++j) {
        const double a = base[j];
        const double b = src[j];
        dst[j] = (a > b) ? a : b;
      }
    }
    const double vol = box_volume(dst, ref, d);
    total += (std::popcount(mask) % 2 == 1) ? vol : -vol;
  }
  return total;
}

void HvWorkspace::sort_rows(Level& lv, std::size_t n, std::size_t d) {
  std::uint32_t* order = lv.order.data();
  std::iota(order, order + n, 0u);
  const double* rows = lv.rows.data();
  const auto before = [rows, d](std::uint32_t a, std::uint32_t b) {
    const double* ra = rows + std::size_t{a} * d;
    const double* rb = rows + std::size_t{b} * d;
    if (ra[d - 1] != rb[d - 1]) return ra[d - 1] < rb[d - 1];
    return std::lexicographical_compare(ra, ra + d, rb, rb + d);
  };
  if (n <= 32) {
    for (std::size_t i = 1; i < n; ++i) {
      const std::uint32_t key = order[i];
      std::size_t j = i;
      while (j > 0 && before(key, order[j - 1])) {
        order[j] = order[j - 1];
        --j;
      }
      order[j] = key;
    }
  } else {
    std::sort(order, order + n, before);
  }
  double* sorted = lv.sorted.data();
  for (std::size_t i = 0; i < n; ++i) {
    std::memcpy(sorted + i * d, rows + std::size_t{order[i]} * d,
                d * sizeof(double));
  }
  std::memcpy(lv.rows.data(), sorted, n * d * sizeof(double));
}

double HvWorkspace::sweep_2d(Level& lv, std::size_t n, const double* ref) {
  lv.order.resize(std::max(lv.order.size(), n));
  std::uint32_t* order = lv.order.data();
  std::iota(order, order + n, 0u);
  const double* rows = lv.rows.data();
  std::sort(order, order + n, [rows](std::uint32_t a, std::uint32_t b) {
    const double* ra = rows + std::size_t{a} * 2;
    const double* rb = rows + std::size_t{b} * 2;
    if (ra[0] != rb[0]) return ra[0] < rb[0];
    return ra[1] < rb[1];
  });
  double acc = 0.0;
  double ceiling = ref[1];
  for (std::size_t k = 0; k < n; ++k) {
    const double x = rows[std::size_t{order[k]} * 2];
    const double y = rows[std::size_t{order[k]} * 2 + 1];
    if (y < ceiling) {
      acc += (ref[0] - x) * (ceiling - y);
      ceiling = y;
    }
  }
  return acc;
}

// 3-d base case: sweep the last coordinate upward while maintaining the
// 2-d staircase of the points seen so far together with its covered area.
// The staircase is sorted by x ascending; y is strictly descending.
double HvWorkspace::sweep_3d(Level& lv, std::size_t n, const double* ref) {
  lv.order.resize(std::max(lv.order.size(), n));
  std::uint32_t* order = lv.order.data();
  std::iota(order, order + n, 0u);
  const double* rows = lv.rows.data();
  std::sort(order, order + n, [rows](std::uint32_t a, std::uint32_t b) {
    const double* ra = rows + std::size_t{a} * 3;
    const double* rb = rows + std::size_t{b} * 3;
    if (ra[2] != rb[2]) return ra[2] < rb[2];
    if (ra[0] != rb[0]) return ra[0] < rb[0];
    return ra[1] < rb[1];
  });

  auto& stair = lv.stair;
  stair.clear();
  const double rx = ref[0];
  const double ry = ref[1];
  const double rz = ref[2];
  double area = 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double* p = rows + std::size_t{order[k]} * 3;
    const double x = p[0];
    const double y = p[1];
    const double z = p[2];

    auto it = std::lower_bound(
        stair.begin(), stair.end(), x,
        [](const std::pair<double, double>& s, double v) { return s.first < v; });
    const bool dominated =
        (it != stair.begin() && std::prev(it)->second <= y) ||
        (it != stair.end() && it->first == x && it->second <= y);
    if (!dominated) {
      double cur_x = x;
      double cur_y = (it == stair.begin()) ? ry : std::prev(it)->second;
      auto walk = it;
      double added = 0.0;
      while (walk != stair.end() && walk->second >= y) {
        added += (walk->first - cur_x) * (cur_y - y);
        cur_x = walk->first;
        cur_y = walk->second;
        ++walk;
      }
      const double right_x = (walk != stair.end()) ? walk->first : rx;
      added += (right_x - cur_x) * (cur_y - y);
      area += added;
      const auto pos = stair.erase(it, walk);
      stair.insert(pos, {x, y});
    }

    const double z_next =
        (k + 1 < n) ? rows[std::size_t{order[k + 1]} * 3 + 2] : rz;
    total += (z_next - z) * area;
  }
  return total;
}

double HvWorkspace::recurse(std::size_t depth, std::size_t n, std::size_t d,
                            const double* ref) {
  if (n == 0) return 0.0;
  Level& lv = levels_[depth];
  if (n <= 4) return tiny_hv(lv, n, d, ref);
  if (d == 2) return sweep_2d(lv, n, ref);
  if (d == 3) return sweep_3d(lv, n, ref);

  sort_rows(lv, n, d);
  Level& next = level(depth + 1);
  const std::size_t w = d - 1;  // width once the sweep axis is peeled off
  const double* rows = lv.rows.data();

  // Corner table over the first four sorted rows: subsets of short
  // prefixes are handled by direct inclusion-exclusion below, without
  // materializing or filtering a child set.
  const std::size_t tbl = std::min<std::size_t>(n - 1, 4);
  double* corners = lv.corners.data();
  for (unsigned mask = 1; mask < (1u << tbl); ++mask) {
    const unsigned low = mask & (0u - mask);
    const unsigned rest = mask ^ low;
    const double* src =
        rows + std::size_t{std::countr_zero(low)} * d;
    double* dst = corners + std::size_t{mask} * w;
    if (rest == 0) {
      std::memcpy(dst, src, w * sizeof(double));
    } else {
      const double* base = corners + std::size_t{rest} * w;
      for (std::size_t c = 0; c < w; ++c) {
        dst[c] = (base[c] > src[c]) ? base[c] : src[c];
      }
    }
  }

  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double* pj = rows + j * d;
    double exclusive = box_volume(pj, ref, w);
    if (j > 0 && j <= 4) {
      for (unsigned mask = 1; mask < (1u << j); ++mask) {
        const double* cm = corners + std::size_t{mask} * w;
        double vol = 1.0;
        for (std::size_t c = 0; c < w; ++c) {
          const double m2 = (cm[c] > pj[c]) ? cm[c] : pj[c];
          vol *= ref[c] - m2;
        }
        exclusive -= (std::popcount(mask) % 2 == 1) ? vol : -vol;
      }
    } else if (j > 4) {
      // Clip the prefix up to pj (dropping the sweep axis), then keep the
      // antichain of the clipped rows.
      double* child = next.rows.data();
      for (std::size_t i = 0; i < j; ++i) {
        const double* si = rows + i * d;
        double* out = child + i * w;
        for (std::size_t c = 0; c < w; ++c) {
          const double a = si[c];
          const double b = pj[c];
          out[c] = (a > b) ? a : b;
        }
      }
      const std::size_t m = antichain_fast(next, child, j, w);
      exclusive -= recurse(depth + 1, m, w, ref);
    }
    total += (ref[w] - pj[w]) * exclusive;
  }
  return total;
}

double HvWorkspace::measure(PointsView pts, const double* ref) {
  if (pts.count == 0) return 0.0;
  prepare(pts.count, pts.dim);
  Level& lv = levels_[0];
  std::memcpy(lv.rows.data(), pts.data,
              pts.count * pts.dim * sizeof(double));
  return recurse(0, pts.count, pts.dim, ref);
}

double HvWorkspace::measure_clipped(PointsView pts, const double* clip,
                                    const double* ref) {
  if (pts.count == 0) return 0.0;
  prepare(pts.count, pts.dim);
  Level& lv = levels_[0];
  kernels::active().worse_rows(lv.rows.data(), pts.data, pts.count, pts.dim,
                               clip);
  const std::size_t m =
      antichain_fast(lv, lv.rows.data(), pts.count, pts.dim);
  return recurse(0, m, pts.dim, ref);
}

double hv(PointsView pts, const ReferencePoint& r, HvWorkspace& ws) {
  require_admissible(pts, r);
  return ws.measure(pts, r.data());
}

double hv(PointsView pts, const ReferencePoint& r) {
  HvWorkspace ws;
  return hv(pts, r, ws);
}

double hv(const Front& front, const ReferencePoint& r) {
  return hv(front.view(), r);
}

}  // namespace hvss
