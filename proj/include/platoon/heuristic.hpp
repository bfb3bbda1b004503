#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "platoon/cost.hpp"
#include "platoon/state.hpp"

namespace platoon {

enum class GoalMode { Paired, Unpaired };

// The goal state set. Paired goals pin every vehicle to one target cell;
// unpaired goals come from a class-ordering template and leave vehicles
// interchangeable within their class. Either way the set is materialized
// as explicit states, each with an optional preference weight charged on
// its dummy-node edge.
class GoalSpec {
 public:
  // One goal state per the id -> cell map. Every vehicle of `reference`
  // must have exactly one target and targets must be distinct.
  static GoalSpec paired(const PlatoonState& reference,
                         const std::map<std::string, int>& targets);

  // Explicit goal states, all sharing the reference grid and roster.
  static GoalSpec from_states(std::vector<PlatoonState> states,
                              std::vector<double> weights = {});

  // Every placement consistent with the class template (see
  // enumerate_goal_set), weight zero each.
  static GoalSpec from_template(const PlatoonState& reference,
                                const std::vector<RowSet>& row_sets);

  GoalMode mode() const { return mode_; }
  const std::vector<PlatoonState>& states() const { return states_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return states_.size(); }

 private:
  GoalSpec(GoalMode mode, std::vector<PlatoonState> states,
           std::vector<double> weights);

  GoalMode mode_;
  std::vector<PlatoonState> states_;
  std::vector<double> weights_;
};

enum class BaseHeuristic { Manhattan, Misplaced };

struct HeuristicKind {
  BaseHeuristic base = BaseHeuristic::Manhattan;
  bool stochastic = false;
};

// Per-vehicle |row displacement|*beta_long + |col displacement|*beta_lc,
// summed over the roster. Requires the paired correspondence (same ids in
// state and goal); throws UnpairedGoal otherwise.
double manhattan(const PlatoonState& state, const PlatoonState& goal,
                 const CostParams& params);

// (number of vehicles not in their goal cell) * min(beta_long, beta_lc).
double misplaced(const PlatoonState& state, const PlatoonState& goal,
                 const CostParams& params);

// min over goal states of (base heuristic + that goal's preference weight).
// Throws EmptyGoalSet when the set is empty.
double multi_goal(const PlatoonState& state, const GoalSpec& goals,
                  BaseHeuristic base, const CostParams& params);

// Random factor for the stochastic heuristic, drawn uniformly from the open
// interval (exp(-c_min), 1), deterministically from (node_key, run_seed).
// Re-querying the same pair returns the identical value.
double draw_epsilon(double c_min_value, std::string_view node_key,
                    std::uint64_t run_seed);

// h - eps*c_min/exp(h) for a caller-supplied eps.
double stochastic_wrap_with_epsilon(double h, double c_min_value, double eps);

// Hierarchical stochastic wrapper: h - eps*c_min/exp(h) with eps from
// draw_epsilon. The perturbation is strictly inside (0, c_min), so an
// admissible h stays admissible. Throws NonpositiveCmin when c_min <= 0.
double stochastic_wrap(double h, double c_min_value,
                       std::string_view node_key, std::uint64_t run_seed);

}  // namespace platoon
