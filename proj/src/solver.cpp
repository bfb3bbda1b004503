#include "platoon/solver.hpp"

#include <functional>
#include <unordered_map>
#include <utility>

#include "platoon/rng.hpp"

namespace platoon {

namespace {

// Search node: a platoon state or the single virtual dummy node sitting
// behind the goal set.
struct SortNode {
  std::optional<PlatoonState> state;
  std::string key;  // state_key, or empty for the dummy
  bool dummy = false;
};

struct SortNodeHash {
  size_t operator()(const SortNode& n) const {
    return std::hash<std::string>()(n.key) ^ (n.dummy ? 0x9e3779b9u : 0u);
  }
};
struct SortNodeEq {
  bool operator()(const SortNode& a, const SortNode& b) const {
    return a.dummy == b.dummy && a.key == b.key;
  }
};

SolveResult solve_impl(const PlatoonState& initial, const GoalSpec& goals,
                       const CostParams& params, HeuristicKind kind,
                       const SearchOptions& opts,
                       std::optional<std::uint64_t> run_seed,
                       const std::function<void(double, double)>* on_expand) {
  params.validate();
  if (goals.size() == 0) throw EmptyGoalSet("goal set is empty");
  for (const PlatoonState& g : goals.states())
    if (!g.same_roster(initial))
      throw InfeasibleGoal("goal states do not match the instance roster");

  // Manhattan needs a vehicle-to-cell pairing; a class template does not
  // provide one, so fall back to the misplaced base.
  BaseHeuristic base = kind.base;
  if (base == BaseHeuristic::Manhattan && goals.mode() == GoalMode::Unpaired)
    base = BaseHeuristic::Misplaced;

  const bool stochastic = kind.stochastic;
  const std::uint64_t seed = run_seed.value_or(0);
  const double cmin = c_min(params);

  std::unordered_map<std::string, int> goal_index;
  for (size_t i = 0; i < goals.size(); ++i)
    goal_index.emplace(state_key(goals.states()[i]), static_cast<int>(i));

  // The wrap applies to every node, the dummy included: its base h of 0
  // turns slightly negative, keeping it in the outermost layer so that a
  // goal plateau never drains ahead of it. Admissibility only needs
  // h <= true remaining cost, which a negative value satisfies.
  auto heuristic = [&](const SortNode& n) -> double {
    const double h = n.dummy ? 0.0 : multi_goal(*n.state, goals, base, params);
    return stochastic ? stochastic_wrap(h, cmin, n.key, seed) : h;
  };

  auto successors = [&](const SortNode& n) {
    std::vector<std::pair<SortNode, double>> out;
    if (n.dummy) return out;
    const PlatoonState& s = *n.state;
    auto moves = legal_moves(s);
    out.reserve(moves.size() + 1);
    for (const Move& m : moves) {
      const double w = edge_cost_for_move(s, m, params);
      PlatoonState next = apply_move(s, m, params);
      std::string key = state_key(next);
      out.emplace_back(SortNode{std::move(next), std::move(key), false}, w);
    }
    if (auto it = goal_index.find(n.key); it != goal_index.end())
      out.emplace_back(SortNode{std::nullopt, "", true},
                       goals.weights()[static_cast<size_t>(it->second)]);
    return out;
  };

  auto is_goal = [](const SortNode& n) { return n.dummy; };

  SortNode start{initial, state_key(initial), false};
  AStarResult<SortNode> raw;
  if (on_expand) {
    auto obs = [&](const SortNode&, double g, double f) { (*on_expand)(g, f); };
    raw = astar<SortNode, decltype(is_goal)&, decltype(successors)&,
                decltype(heuristic)&, SortNodeHash, SortNodeEq, decltype(obs)&>(
        start, is_goal, successors, heuristic, opts, obs);
  } else {
    raw = astar<SortNode, decltype(is_goal)&, decltype(successors)&,
                decltype(heuristic)&, SortNodeHash, SortNodeEq>(
        start, is_goal, successors, heuristic, opts);
  }

  SolveResult result;
  result.status = raw.status;
  result.stats = raw.stats;
  if (raw.status != SearchStatus::Found) return result;

  // strip the dummy tail and rebuild the move list from state diffs
  SortingPath& path = result.path;
  for (SortNode& n : raw.path)
    if (!n.dummy) path.states.push_back(std::move(*n.state));
  const std::string goal_key = state_key(path.states.back());
  path.chosen_goal = goal_index.at(goal_key);
  path.total_cost =
      raw.cost - goals.weights()[static_cast<size_t>(path.chosen_goal)];
  for (size_t k = 0; k + 1 < path.states.size(); ++k) {
    const PlatoonState& a = path.states[k];
    const PlatoonState& b = path.states[k + 1];
    for (int i = 0; i < a.vehicle_count(); ++i) {
      if (a.cell_of(i) == b.cell_of(i)) continue;
      path.moves.push_back(Move{a.vehicle(i).id, a.cell_of(i), b.cell_of(i),
                                classify_move(a.spec(), a.cell_of(i), b.cell_of(i))});
      break;
    }
  }
  return result;
}

}  // namespace

SolveResult solve_sorting(const PlatoonState& initial, const GoalSpec& goals,
                          const CostParams& params, HeuristicKind kind,
                          const SearchOptions& opts,
                          std::optional<std::uint64_t> run_seed) {
  return solve_impl(initial, goals, params, kind, opts, run_seed, nullptr);
}

SolveResult solve_sorting_traced(const PlatoonState& initial,
                                 const GoalSpec& goals, const CostParams& params,
                                 HeuristicKind kind, const SearchOptions& opts,
                                 std::optional<std::uint64_t> run_seed,
                                 const std::function<void(double, double)>& on_expand) {
  return solve_impl(initial, goals, params, kind, opts, run_seed, &on_expand);
}

std::string move_sequence_key(const std::vector<Move>& moves) {
  std::string key;
  for (const Move& m : moves) {
    if (!key.empty()) key.push_back(';');
    key += m.vehicle;
    key.push_back(':');
    key += std::to_string(m.from_cell);
    key.push_back('>');
    key += std::to_string(m.to_cell);
  }
  return key;
}

}  // namespace platoon
