#include "hvss/selectors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "hvss/contribution.hpp"
#include "hvss/hypervolume.hpp"
#include "hvss/kernels.hpp"

namespace hvss {

const char* algorithm_id(Algorithm alg) {
  switch (alg) {
    case Algorithm::Greedy:
      return "gi";
    case Algorithm::GreedyUpdate:
      return "ugi";
    case Algorithm::LazyGreedy:
      return "lgi";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_id(std::string_view id) {
  if (id == "gi") return Algorithm::Greedy;
  if (id == "ugi") return Algorithm::GreedyUpdate;
  if (id == "lgi") return Algorithm::LazyGreedy;
  return std::nullopt;
}

SelectionProblem SelectionProblem::create(PointsView candidates, std::size_t k,
                                          ReferencePoint ref) {
  if (candidates.count > 0 && candidates.dim != ref.dim()) {
    throw std::invalid_argument("selection problem: dimension mismatch");
  }
  const std::size_t d = ref.dim();
  std::vector<double> rows;
  rows.reserve(candidates.count * d);
  std::vector<std::size_t> rejected;
  std::size_t kept = 0;
  for (std::size_t i = 0; i < candidates.count; ++i) {
    const double* row = candidates.data + i * d;
    bool inside = true;
    for (std::size_t j = 0; j < d; ++j) {
      if (!(row[j] < ref[j])) {
        inside = false;
        break;
      }
    }
    if (inside) {
      rows.insert(rows.end(), row, row + d);
      ++kept;
    } else {
      rejected.push_back(i);
    }
  }
  return SelectionProblem(std::move(rows), kept, d, k, std::move(ref),
                          std::move(rejected));
}

SelectionProblem SelectionProblem::create(const Front& candidates,
                                          std::size_t k, ReferencePoint ref) {
  return create(candidates.view(), k, std::move(ref));
}

namespace {

// Shared tie-break: larger value wins, equal values go to the lower index.
inline bool better(double av, std::size_t ai, double bv, std::size_t bi) {
  return av > bv || (av == bv && ai < bi);
}

// State common to the three selectors: the growing selected set, the
// running trajectory, and the final drift cross-check.
struct Run {
  explicit Run(const SelectionProblem& problem)
      : cand(problem.candidates()),
        ref(problem.ref()),
        n(cand.count),
        d(cand.dim),
        k(std::min(problem.k(), n)) {
    selected_rows.reserve(k * d);
    res.selected.reserve(k);
    res.hv_trajectory.reserve(k);
  }

  PointsView cand;
  const ReferencePoint& ref;
  std::size_t n;
  std::size_t d;
  std::size_t k;

  HvWorkspace ws;
  std::vector<double> selected_rows;
  SelectionResult res;
  double running = 0.0;

  PointsView selected_view() const {
    return {selected_rows.data(), res.selected.size(), d};
  }

  double evaluate(std::size_t idx) {
    ++res.hvc_evaluations;
    return hvc_fast(cand.row(idx), selected_view(), ref, ws);
  }

  void accept(std::size_t idx, double gain) {
    const auto row = cand.row(idx);
    selected_rows.insert(selected_rows.end(), row.begin(), row.end());
    res.selected.push_back(idx);
    running += gain;
    res.hv_trajectory.push_back(running);
  }

  // Running sums drift by rounding only; anything past 1e-6 relative means
  // a selector bug.
  void final_check() {
    if (res.selected.empty()) return;
    const double full = ws.measure(selected_view(), ref.data());
    const double tol = 1e-6 * std::max(1.0, std::abs(full));
    if (std::abs(full - running) > tol) {
      throw ContractError("selection trajectory drifted from full value: " +
                          std::to_string(running) + " vs " +
                          std::to_string(full));
    }
  }

  // Candidate pool smaller than the target: take everything in index order.
  void take_all() {
    for (std::size_t i = 0; i < n; ++i) accept(i, evaluate(i));
  }
};

}  // namespace

SelectionResult select_greedy(const SelectionProblem& problem) {
  Run run(problem);
  if (run.k == 0) return std::move(run.res);
  if (run.n < problem.k()) {
    run.take_all();
    run.final_check();
    return std::move(run.res);
  }

  std::vector<std::size_t> remaining(run.n);
  for (std::size_t i = 0; i < run.n; ++i) remaining[i] = i;

  for (std::size_t round = 0; round < run.k; ++round) {
    double best_v = 0.0;
    std::size_t best_i = 0;
    bool have = false;
    for (std::size_t idx : remaining) {
      const double v = run.evaluate(idx);
      if (!have || better(v, idx, best_v, best_i)) {
        best_v = v;
        best_i = idx;
        have = true;
      }
    }
    remaining.erase(std::find(remaining.begin(), remaining.end(), best_i));
    run.accept(best_i, best_v);
  }
  run.final_check();
  return std::move(run.res);
}

SelectionResult select_greedy_update(const SelectionProblem& problem) {
  Run run(problem);
  if (run.k == 0) return std::move(run.res);
  if (run.n < problem.k()) {
    run.take_all();
    run.final_check();
    return std::move(run.res);
  }

  std::vector<std::size_t> remaining(run.n);
  std::vector<double> value(run.n);
  for (std::size_t i = 0; i < run.n; ++i) {
    remaining[i] = i;
    value[i] = run.evaluate(i);
  }

  std::vector<double> worse_buf(run.d);
  const kernels::Ops& ops = kernels::active();

  for (std::size_t round = 0; round < run.k; ++round) {
    if (round > 0) {
      // The set grew by p_new; every remaining candidate loses exactly its
      // joint contribution with p_new, measured against the pre-insertion
      // selected set.
      const std::size_t t = run.res.selected.size();
      const PointsView before{run.selected_rows.data(), t - 1, run.d};
      const double* p_new = run.selected_rows.data() + (t - 1) * run.d;
      for (std::size_t idx : remaining) {
        ops.worse_rows(worse_buf.data(), run.cand.row(idx).data(), 1, run.d,
                       p_new);
        const double joint =
            hvc_fast(std::span<const double>(worse_buf), before, run.ref,
                     run.ws);
        value[idx] = apply_hvc_update(value[idx], joint);
        ++run.res.update_operations;
      }
    }
    double best_v = 0.0;
    std::size_t best_i = 0;
    bool have = false;
    for (std::size_t idx : remaining) {
      if (!have || better(value[idx], idx, best_v, best_i)) {
        best_v = value[idx];
        best_i = idx;
        have = true;
      }
    }
    remaining.erase(std::find(remaining.begin(), remaining.end(), best_i));
    run.accept(best_i, best_v);
  }
  run.final_check();
  return std::move(run.res);
}

SelectionResult select_lazy_greedy(const SelectionProblem& problem) {
  Run run(problem);
  if (run.k == 0) return std::move(run.res);
  if (run.n < problem.k()) {
    run.take_all();
    run.final_check();
    return std::move(run.res);
  }

  struct Entry {
    double value;
    std::uint32_t index;
    std::uint32_t stamp;  // round at which `value` was last made exact
  };
  struct Less {
    bool operator()(const Entry& a, const Entry& b) const {
      return better(b.value, b.index, a.value, a.index);
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, Less> heap;

  // Initial tentative values are the inclusive volumes: exact contributions
  // against the empty set, hence valid upper bounds from then on.
  for (std::size_t i = 0; i < run.n; ++i) {
    heap.push(Entry{run.evaluate(i), static_cast<std::uint32_t>(i), 0});
  }

  for (std::size_t round = 0; round < run.k; ++round) {
    const auto stamp = static_cast<std::uint32_t>(round);
    for (;;) {
      Entry e = heap.top();
      heap.pop();
      if (e.stamp == stamp) {
        run.accept(e.index, e.value);
        break;
      }
      const double fresh = run.evaluate(e.index);
      if (fresh > e.value + 1e-9 * std::max(1.0, e.value)) {
        throw ContractError(
            "tentative contribution was not an upper bound: stored " +
            std::to_string(e.value) + ", recomputed " + std::to_string(fresh));
      }
      e.value = fresh;
      e.stamp = stamp;
      if (heap.empty() ||
          !better(heap.top().value, heap.top().index, e.value, e.index)) {
        run.accept(e.index, e.value);
        break;
      }
      heap.push(e);
    }
  }
  run.final_check();
  return std::move(run.res);
}

SelectionResult run_algorithm(Algorithm alg, const SelectionProblem& problem) {
  switch (alg) {
    case Algorithm::Greedy:
      return select_greedy(problem);
    case Algorithm::GreedyUpdate:
      return select_greedy_update(problem);
    case Algorithm::LazyGreedy:
      return select_lazy_greedy(problem);
  }
  throw std::invalid_argument("unknown algorithm");
}

ExhaustiveResult exhaustive_best_subset(const SelectionProblem& problem) {
  const PointsView cand = problem.candidates();
  const std::size_t n = cand.count;
  const std::size_t k = std::min(problem.k(), n);
  if (k == 0) return {};

  double combos = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    combos *= static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  if (combos > 1e6) {
    throw std::invalid_argument(
        "exhaustive enumeration too large: C(" + std::to_string(n) + ", " +
        std::to_string(k) + ") > 1e6");
  }

  HvWorkspace ws;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<double> rows(k * cand.dim);

  ExhaustiveResult best;
  bool have = false;
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) {
      const auto row = cand.row(idx[i]);
      std::copy(row.begin(), row.end(), rows.begin() + i * cand.dim);
    }
    const double value =
        ws.measure(PointsView{rows.data(), k, cand.dim}, problem.ref().data());
    // Enumeration runs in lexicographic order, so the first maximum seen is
    // the lexicographically smallest optimal subset.
    if (!have || value > best.hv) {
      best.hv = value;
      best.subset = idx;
      have = true;
    }
    // Advance to the next k-combination.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

}  // namespace hvss
