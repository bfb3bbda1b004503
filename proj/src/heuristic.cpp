#include "platoon/heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "platoon/rng.hpp"

namespace platoon {

GoalSpec::GoalSpec(GoalMode mode, std::vector<PlatoonState> states,
                   std::vector<double> weights)
    : mode_(mode), states_(std::move(states)), weights_(std::move(weights)) {
  if (weights_.empty()) weights_.assign(states_.size(), 0.0);
  if (weights_.size() != states_.size())
    throw InvariantViolation("goal weights do not match goal states");
  for (double w : weights_)
    if (!(w >= 0.0)) throw InvariantViolation("goal weights must be nonnegative");
  for (size_t i = 1; i < states_.size(); ++i)
    if (!states_[i].same_roster(states_[0]))
      throw InfeasibleGoal("goal states do not share a grid and roster");
}

GoalSpec GoalSpec::paired(const PlatoonState& reference,
                          const std::map<std::string, int>& targets) {
  if (static_cast<int>(targets.size()) != reference.vehicle_count())
    throw InvariantViolation("paired goal must target every vehicle exactly once");
  std::vector<int> cells(static_cast<size_t>(reference.vehicle_count()), 0);
  for (const auto& [id, cell] : targets) {
    auto idx = reference.index_of(id);
    if (!idx)
      throw InvariantViolation("paired goal names unknown vehicle '" + id + "'");
    cells[static_cast<size_t>(*idx)] = cell;  // duplicates rejected below
  }
  std::vector<double> zeros(cells.size(), 0.0);
  std::vector<PlatoonState> states;
  states.push_back(reference.with_occupancy(cells, zeros));
  return GoalSpec(GoalMode::Paired, std::move(states), {});
}

GoalSpec GoalSpec::from_states(std::vector<PlatoonState> states,
                               std::vector<double> weights) {
  if (states.empty()) throw EmptyGoalSet("goal state list is empty");
  return GoalSpec(GoalMode::Paired, std::move(states), std::move(weights));
}

GoalSpec GoalSpec::from_template(const PlatoonState& reference,
                                 const std::vector<RowSet>& row_sets) {
  return GoalSpec(GoalMode::Unpaired, enumerate_goal_set(reference, row_sets), {});
}

namespace {

void require_same_roster(const PlatoonState& state, const PlatoonState& goal) {
  if (!state.same_roster(goal))
    throw UnpairedGoal("state and goal do not share a grid and roster");
}

}  // namespace

double manhattan(const PlatoonState& state, const PlatoonState& goal,
                 const CostParams& params) {
  require_same_roster(state, goal);
  const GridSpec& spec = state.spec();
  double h = 0.0;
  for (int i = 0; i < state.vehicle_count(); ++i) {
    const int a = state.cell_of(i);
    const int b = goal.cell_of(i);
    h += std::abs(spec.row_of(a) - spec.row_of(b)) * params.beta_long +
         std::abs(spec.col_of(a) - spec.col_of(b)) * params.beta_lc;
  }
  return h;
}

double misplaced(const PlatoonState& state, const PlatoonState& goal,
                 const CostParams& params) {
  require_same_roster(state, goal);
  int n = 0;
  for (int i = 0; i < state.vehicle_count(); ++i)
    if (state.cell_of(i) != goal.cell_of(i)) ++n;
  return n * c_min(params);
}

double multi_goal(const PlatoonState& state, const GoalSpec& goals,
                  BaseHeuristic base, const CostParams& params) {
  if (goals.size() == 0) throw EmptyGoalSet("goal set is empty");
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < goals.size(); ++i) {
    const double h = base == BaseHeuristic::Manhattan
                         ? manhattan(state, goals.states()[i], params)
                         : misplaced(state, goals.states()[i], params);
    best = std::min(best, h + goals.weights()[i]);
  }
  return best;
}

double draw_epsilon(double c_min_value, std::string_view node_key,
                    std::uint64_t run_seed) {
  if (!(c_min_value > 0.0))
    throw NonpositiveCmin("the epsilon interval needs a positive minimum edge cost");
  // open interval (exp(-c_min), 1), shrunk by 1e-9 at both ends
  const double lo = std::exp(-c_min_value) * (1.0 + 1e-9);
  const double hi = 1.0 - 1e-9;
  const double u = unit_from_bits(hash_bytes(node_key, run_seed));
  return lo + u * (hi - lo);
}

double stochastic_wrap_with_epsilon(double h, double c_min_value, double eps) {
  return h - eps * c_min_value / std::exp(h);
}

double stochastic_wrap(double h, double c_min_value, std::string_view node_key,
                       std::uint64_t run_seed) {
  return stochastic_wrap_with_epsilon(
      h, c_min_value, draw_epsilon(c_min_value, node_key, run_seed));
}

}  // namespace platoon
