#pragma once

// Shared helpers for the test suites: an independent uniform-cost-search
// oracle and randomized instance/path generators. The oracle owns its own
// queue and visited set and never touches the A* engine, so search results
// can be checked against it.

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "platoon/cost.hpp"
#include "platoon/heuristic.hpp"
#include "platoon/solver.hpp"
#include "platoon/state.hpp"

namespace testsupport {

using namespace platoon;

// Exhaustive Dijkstra from `initial` over the whole reachable space;
// returns min over goal states of (distance + preference weight), or
// infinity when no goal is reachable.
inline double ucs_optimal_cost(const PlatoonState& initial, const GoalSpec& goals,
                               const CostParams& params) {
  struct Item {
    double dist;
    long long order;
    PlatoonState state;
  };
  struct Cmp {
    bool operator()(const Item& a, const Item& b) const {
      if (a.dist != b.dist) return a.dist > b.dist;
      return a.order > b.order;
    }
  };
  std::priority_queue<Item, std::vector<Item>, Cmp> queue;
  std::unordered_map<std::string, double> dist;
  long long counter = 0;

  dist[state_key(initial)] = 0.0;
  queue.push({0.0, counter++, initial});
  std::unordered_map<std::string, double> settled;
  while (!queue.empty()) {
    Item item = queue.top();
    queue.pop();
    const std::string key = state_key(item.state);
    auto it = settled.find(key);
    if (it != settled.end()) continue;
    settled.emplace(key, item.dist);
    for (const Move& m : legal_moves(item.state)) {
      const double w = edge_cost_for_move(item.state, m, params);
      PlatoonState next = apply_move(item.state, m, params);
      const std::string nkey = state_key(next);
      const double nd = item.dist + w;
      auto dit = dist.find(nkey);
      if (dit == dist.end() || nd < dit->second) {
        dist[nkey] = nd;
        queue.push({nd, counter++, std::move(next)});
      }
    }
  }

  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < goals.size(); ++i) {
    auto it = settled.find(state_key(goals.states()[i]));
    if (it != settled.end())
      best = std::min(best, it->second + goals.weights()[i]);
  }
  return best;
}

// Small random instance: <= 4 vehicles on a grid of <= 4x3 cells, all
// relative speeds zero, paired goal produced by scrambling the initial
// state with a random walk (always reachable).
struct RandomInstance {
  PlatoonState initial;
  PlatoonState goal_state;
  GoalSpec goal;
};

inline PlatoonState random_walk(const PlatoonState& from, int steps,
                                const CostParams& params, std::mt19937& rng) {
  PlatoonState cur = from;
  for (int s = 0; s < steps; ++s) {
    auto moves = legal_moves(cur);
    if (moves.empty()) break;
    std::uniform_int_distribution<size_t> pick(0, moves.size() - 1);
    cur = apply_move(cur, moves[pick(rng)], params);
  }
  return cur;
}

inline RandomInstance random_instance(std::mt19937& rng,
                                      const CostParams& params = {}) {
  std::uniform_int_distribution<int> rows_d(2, 4);
  std::uniform_int_distribution<int> cols_d(1, 3);
  const int rows = rows_d(rng);
  const int cols = cols_d(rng);
  const int cells = rows * cols;
  std::uniform_int_distribution<int> veh_d(1, std::min(4, cells - 1));
  const int n = veh_d(rng);

  std::vector<int> all_cells(static_cast<size_t>(cells));
  for (int c = 1; c <= cells; ++c) all_cells[static_cast<size_t>(c - 1)] = c;
  std::shuffle(all_cells.begin(), all_cells.end(), rng);

  GridSpec spec{rows, cols, 7.0, 3.5};
  std::vector<std::pair<Vehicle, int>> placements;
  for (int i = 0; i < n; ++i) {
    const std::string id(1, static_cast<char>('A' + i));
    placements.push_back({Vehicle{id, i % 2 == 0 ? "left" : "through", 0.0},
                          all_cells[static_cast<size_t>(i)]});
  }

  PlatoonState initial(spec, placements);
  std::uniform_int_distribution<int> walk_d(3, 14);
  PlatoonState goal_state = random_walk(initial, walk_d(rng), params, rng);
  std::map<std::string, int> targets;
  for (int i = 0; i < goal_state.vehicle_count(); ++i)
    targets[goal_state.vehicle(i).id] = goal_state.cell_of(i);
  return RandomInstance{initial, goal_state, GoalSpec::paired(initial, targets)};
}

// Random valid stepwise path with up to max_moves non-hold moves.
inline SortingPath random_path(std::mt19937& rng, int max_moves,
                               const CostParams& params = {}) {
  RandomInstance inst = random_instance(rng, params);
  SortingPath path;
  path.states.push_back(inst.initial);
  std::uniform_int_distribution<int> len_d(1, max_moves);
  const int len = len_d(rng);
  for (int s = 0; s < len; ++s) {
    const PlatoonState& cur = path.states.back();
    auto moves = legal_moves(cur);
    if (moves.empty()) break;
    std::uniform_int_distribution<size_t> pick(0, moves.size() - 1);
    const Move m = moves[pick(rng)];
    path.total_cost += edge_cost_for_move(cur, m, params);
    path.states.push_back(apply_move(cur, m, params));
    path.moves.push_back(m);
  }
  return path;
}

}  // namespace testsupport
