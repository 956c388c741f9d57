#include "hvss/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include "hvss/kernels.hpp"

namespace hvss {

namespace {

void require_coords(std::span<const double> v, const char* what) {
  if (v.size() < 2) {
    throw std::invalid_argument(std::string(what) +
                                ": dimension must be at least 2");
  }
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!std::isfinite(v[j])) {
      throw std::invalid_argument(std::string(what) + ": coordinate " +
                                  std::to_string(j) + " is not finite");
    }
  }
}

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a) +
                                " vs " + std::to_string(b));
  }
}

}  // namespace

Point::Point(std::vector<double> values) : values_(std::move(values)) {
  require_coords(values_, "point");
}

Point::Point(std::initializer_list<double> values)
    : Point(std::vector<double>(values)) {}

ReferencePoint::ReferencePoint(std::vector<double> values)
    : values_(std::move(values)) {
  require_coords(values_, "reference point");
}

ReferencePoint::ReferencePoint(std::initializer_list<double> values)
    : ReferencePoint(std::vector<double>(values)) {}

ReferencePoint ReferencePoint::uniform(std::size_t dim, double value) {
  return ReferencePoint(std::vector<double>(dim, value));
}

namespace detail {

Front make_front_unchecked(std::vector<double> rows, std::size_t dim) {
  return Front(std::move(rows), dim);
}

std::size_t antichain_compact(double* rows, std::size_t n, std::size_t d) {
  const kernels::Ops& ops = kernels::active();
  std::size_t m = 0;  // survivors live in rows[0 .. m)
  for (std::size_t i = 0; i < n; ++i) {
    const double* c = rows + i * d;
    if (ops.find_dominator(rows, m, d, c, m) != m) continue;  // c is covered
    // Drop survivors that c weakly dominates, keeping their order.
    std::size_t w = 0;
    for (std::size_t s = 0; s < m; ++s) {
      if (ops.leq_all(c, rows + s * d, d)) continue;
      if (w != s) {
        std::memmove(rows + w * d, rows + s * d, d * sizeof(double));
      }
      ++w;
    }
    m = w;
    if (m != i) {
      std::memmove(rows + m * d, c, d * sizeof(double));
    }
    ++m;
  }
  return m;
}

}  // namespace detail

Front Front::checked(std::vector<double> rows, std::size_t dim) {
  if (dim < 2) {
    throw std::invalid_argument("front: dimension must be at least 2");
  }
  if (rows.size() % dim != 0) {
    throw std::invalid_argument("front: row data not a multiple of dim");
  }
  const std::size_t n = rows.size() / dim;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!std::isfinite(rows[i])) {
      throw std::invalid_argument("front: row " + std::to_string(i / dim) +
                                  " has a non-finite coordinate");
    }
  }
  const kernels::Ops& ops = kernels::active();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t den =
        ops.find_dominator(rows.data(), n, dim, rows.data() + i * dim, i);
    if (den != n) {
      throw std::invalid_argument("front: row " + std::to_string(i) +
                                  " is weakly dominated by row " +
                                  std::to_string(den));
    }
  }
  return Front(std::move(rows), dim);
}

Front Front::checked(const std::vector<Point>& points) {
  if (points.empty()) return Front();
  const std::size_t d = points.front().dim();
  std::vector<double> rows;
  rows.reserve(points.size() * d);
  for (const Point& p : points) {
    require_same_dim(p.dim(), d);
    rows.insert(rows.end(), p.data(), p.data() + d);
  }
  return checked(std::move(rows), d);
}

Point Front::point(std::size_t i) const {
  auto r = row(i);
  return Point(std::vector<double>(r.begin(), r.end()));
}

bool weakly_dominates(std::span<const double> a, std::span<const double> b) {
  require_same_dim(a.size(), b.size());
  return kernels::active().leq_all(a.data(), b.data(), a.size());
}

bool weakly_dominates(const Point& a, const Point& b) {
  return weakly_dominates(a.coords(), b.coords());
}

Point worse(const Point& a, const Point& b) {
  require_same_dim(a.dim(), b.dim());
  std::vector<double> out(a.dim());
  kernels::active().worse_rows(out.data(), a.data(), 1, a.dim(), b.data());
  return Point(std::move(out));
}

Front limit(const Front& s, const Point& p) {
  if (!s.empty()) require_same_dim(s.dim(), p.dim());
  if (s.empty()) return detail::make_front_unchecked({}, p.dim());
  const std::size_t d = s.dim();
  std::vector<double> rows(s.size() * d);
  kernels::active().worse_rows(rows.data(), s.view().data, s.size(), d,
                               p.data());
  const std::size_t m = detail::antichain_compact(rows.data(), s.size(), d);
  rows.resize(m * d);
  return detail::make_front_unchecked(std::move(rows), d);
}

Front nondominated_filter(PointsView points) {
  if (points.count == 0) {
    return detail::make_front_unchecked({}, points.dim);
  }
  std::vector<double> rows(points.data,
                           points.data + points.count * points.dim);
  const std::size_t m =
      detail::antichain_compact(rows.data(), points.count, points.dim);
  rows.resize(m * points.dim);
  return detail::make_front_unchecked(std::move(rows), points.dim);
}

Front nondominated_filter(const std::vector<Point>& points) {
  if (points.empty()) return Front();
  const std::size_t d = points.front().dim();
  std::vector<double> rows;
  rows.reserve(points.size() * d);
  for (const Point& p : points) {
    require_same_dim(p.dim(), d);
    rows.insert(rows.end(), p.data(), p.data() + d);
  }
  const std::size_t m =
      detail::antichain_compact(rows.data(), points.size(), d);
  rows.resize(m * d);
  return detail::make_front_unchecked(std::move(rows), d);
}

}  // namespace hvss
