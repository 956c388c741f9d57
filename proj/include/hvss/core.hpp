#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace hvss {

/// Error for broken runtime contracts: situations the documented
/// preconditions should make impossible.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Objective vector under the minimization convention. Immutable after
/// construction; every coordinate is finite and the dimension is >= 2.
class Point {
 public:
  explicit Point(std::vector<double> values);
  Point(std::initializer_list<double> values);

  std::size_t dim() const noexcept { return values_.size(); }
  double operator[](std::size_t j) const noexcept { return values_[j]; }
  const double* data() const noexcept { return values_.data(); }
  std::span<const double> coords() const noexcept { return values_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> values_;
};

/// Upper corner bounding every dominated box. Finite coordinates, dim >= 2.
class ReferencePoint {
 public:
  explicit ReferencePoint(std::vector<double> values);
  ReferencePoint(std::initializer_list<double> values);

  /// (value, value, ..., value) replicated across `dim` coordinates.
  static ReferencePoint uniform(std::size_t dim, double value);

  std::size_t dim() const noexcept { return values_.size(); }
  double operator[](std::size_t j) const noexcept { return values_[j]; }
  const double* data() const noexcept { return values_.data(); }
  std::span<const double> coords() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

/// Non-owning view of a row-major point matrix (count x dim).
struct PointsView {
  const double* data = nullptr;
  std::size_t count = 0;
  std::size_t dim = 0;

  std::span<const double> row(std::size_t i) const noexcept {
    return {data + i * dim, dim};
  }
  bool empty() const noexcept { return count == 0; }
};

class Front;

namespace detail {

/// Builds a Front without checking the antichain invariant. Callers must
/// guarantee it by construction.
Front make_front_unchecked(std::vector<double> rows, std::size_t dim);

/// In-place nondominated compaction of a row-major matrix. Keeps the first
/// representative of duplicate rows, drops every weakly dominated row, and
/// returns the number of surviving rows (compacted to the front of the
/// buffer, input order preserved).
std::size_t antichain_compact(double* rows, std::size_t n, std::size_t d);

}  // namespace detail

/// Set of mutually nondominated points of one dimension, stored row-major.
/// No member weakly dominates another; duplicates are excluded.
class Front {
 public:
  Front() = default;

  /// Validates the mutual-nondominance invariant and throws
  /// std::invalid_argument naming the offending rows when it fails.
  static Front checked(std::vector<double> rows, std::size_t dim);
  static Front checked(const std::vector<Point>& points);

  std::size_t size() const noexcept {
    return dim_ == 0 ? 0 : rows_.size() / dim_;
  }
  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return rows_.empty(); }

  std::span<const double> row(std::size_t i) const noexcept {
    return {rows_.data() + i * dim_, dim_};
  }
  Point point(std::size_t i) const;
  PointsView view() const noexcept { return {rows_.data(), size(), dim_}; }

 private:
  friend Front detail::make_front_unchecked(std::vector<double>, std::size_t);
  Front(std::vector<double> rows, std::size_t dim)
      : rows_(std::move(rows)), dim_(dim) {}

  std::vector<double> rows_;
  std::size_t dim_ = 0;
};

/// True iff a_j <= b_j for every coordinate.
bool weakly_dominates(std::span<const double> a, std::span<const double> b);
bool weakly_dominates(const Point& a, const Point& b);

/// Componentwise maximum of two points.
Point worse(const Point& a, const Point& b);

/// Nondominated subset of {worse(s, p) : s in S}, duplicates removed.
Front limit(const Front& s, const Point& p);

/// Maximal antichain of the input under weak dominance; keeps the first
/// representative of any duplicate group.
Front nondominated_filter(PointsView points);
Front nondominated_filter(const std::vector<Point>& points);

}  // namespace hvss
