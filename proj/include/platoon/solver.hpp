#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "platoon/astar.hpp"
#include "platoon/cost.hpp"
#include "platoon/heuristic.hpp"
#include "platoon/state.hpp"

namespace platoon {

// A* shortest path through the permutation graph: one vehicle moves per
// transition. total_cost is the sum of edge costs between consecutive
// states and excludes any goal preference weight.
struct SortingPath {
  std::vector<PlatoonState> states;  // initial .. chosen goal
  std::vector<Move> moves;           // states.size() - 1 entries
  double total_cost = 0.0;
  int chosen_goal = -1;  // index into the goal set
};

struct SolveResult {
  SearchStatus status = SearchStatus::NoPath;
  SortingPath path;  // empty unless status == Found
  SearchStats stats;
};

// Multi-target A* over the platoon graph. Goal states are tied to a single
// virtual dummy node behind the goal set, each goal contributing its
// preference weight on that last edge, so the search terminates exactly
// when the cheapest route through any goal is proven. With an unpaired
// (class template) goal set the Manhattan base is replaced by misplaced,
// which does not need a vehicle-to-cell pairing.
//
// run_seed feeds the per-node random factor when kind.stochastic is set;
// the same seed always reproduces the same search.
SolveResult solve_sorting(const PlatoonState& initial, const GoalSpec& goals,
                          const CostParams& params, HeuristicKind kind,
                          const SearchOptions& opts = {},
                          std::optional<std::uint64_t> run_seed = {});

// Canonical one-line key for a move sequence ("F:5>8;D:6>5;..."), used to
// deduplicate equal-cost paths and for lexicographic tie-breaking.
std::string move_sequence_key(const std::vector<Move>& moves);

// Observer variant: fn(g, f) per expansion, in expansion order.
SolveResult solve_sorting_traced(const PlatoonState& initial,
                                 const GoalSpec& goals,
                                 const CostParams& params, HeuristicKind kind,
                                 const SearchOptions& opts,
                                 std::optional<std::uint64_t> run_seed,
                                 const std::function<void(double, double)>& on_expand);

}  // namespace platoon
