#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hvss/core.hpp"

namespace hvss {

enum class Algorithm { Greedy, GreedyUpdate, LazyGreedy };

/// Short identifiers used by the CLI and the benchmark files:
/// "gi", "ugi", "lgi".
const char* algorithm_id(Algorithm alg);
std::optional<Algorithm> algorithm_from_id(std::string_view id);

/// A subset-selection instance: candidate points, target size k, reference
/// point. Candidates must lie strictly below the reference in every
/// coordinate; offending input rows are dropped at construction and their
/// indices retained for reporting. Dominated or duplicate candidates are
/// allowed (they simply never contribute).
class SelectionProblem {
 public:
  static SelectionProblem create(PointsView candidates, std::size_t k,
                                 ReferencePoint ref);
  static SelectionProblem create(const Front& candidates, std::size_t k,
                                 ReferencePoint ref);

  PointsView candidates() const noexcept {
    return {rows_.data(), count_, dim_};
  }
  std::size_t k() const noexcept { return k_; }
  const ReferencePoint& ref() const noexcept { return ref_; }

  /// Indices (into the original input) of rows rejected for not lying
  /// strictly below the reference point.
  const std::vector<std::size_t>& rejected() const noexcept {
    return rejected_;
  }

 private:
  SelectionProblem(std::vector<double> rows, std::size_t count,
                   std::size_t dim, std::size_t k, ReferencePoint ref,
                   std::vector<std::size_t> rejected)
      : rows_(std::move(rows)),
        count_(count),
        dim_(dim),
        k_(k),
        ref_(std::move(ref)),
        rejected_(std::move(rejected)) {}

  std::vector<double> rows_;
  std::size_t count_ = 0;
  std::size_t dim_ = 0;
  std::size_t k_ = 0;
  ReferencePoint ref_;
  std::vector<std::size_t> rejected_;
};

struct SelectionResult {
  /// Candidate indices in selection order; |selected| = min(k, n).
  std::vector<std::size_t> selected;
  /// Hypervolume of the selected set after each pick (running sums of the
  /// accepted gains, cross-checked against a full evaluation at the end).
  std::vector<double> hv_trajectory;
  /// Direct contribution evaluations performed.
  std::uint64_t hvc_evaluations = 0;
  /// Incremental update applications performed.
  std::uint64_t update_operations = 0;

  double final_hv() const {
    return hv_trajectory.empty() ? 0.0 : hv_trajectory.back();
  }
};

/// Greedy inclusion: every round evaluates the contribution of every
/// remaining candidate and takes the largest (ties to the lowest index).
SelectionResult select_greedy(const SelectionProblem& problem);

/// Greedy inclusion with incremental contribution updates: candidates keep
/// their contribution values, and each pick subtracts the joint
/// contribution instead of recomputing from scratch. Selects the same
/// sequence as select_greedy.
SelectionResult select_greedy_update(const SelectionProblem& problem);

/// Lazy greedy inclusion: tentative contributions (upper bounds, by
/// submodularity) live in a max-heap; only the popped maximum is
/// recomputed, and it is accepted as soon as it still beats the heap top
/// under the (value, lowest index) order. Selects the same sequence as
/// select_greedy.
SelectionResult select_lazy_greedy(const SelectionProblem& problem);

SelectionResult run_algorithm(Algorithm alg, const SelectionProblem& problem);

struct ExhaustiveResult {
  std::vector<std::size_t> subset;  // ascending indices
  double hv = 0.0;
};

/// Exact optimum by enumerating all size-k subsets; ties resolve to the
/// lexicographically smallest index set. Requires C(n, k) <= 1e6.
ExhaustiveResult exhaustive_best_subset(const SelectionProblem& problem);

}  // namespace hvss
