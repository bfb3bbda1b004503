#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "platoon/cost.hpp"
#include "platoon/heuristic.hpp"
#include "platoon/portfolio.hpp"
#include "platoon/schedule.hpp"
#include "platoon/solver.hpp"
#include "platoon/state.hpp"

namespace platoon {

// Instance document:
//   {"rows": 4, "cols": 3, "cell_length_m": 7.0, "lane_width_m": 3.5,
//    "vehicles": [{"id": "A", "class": "left", "speed_mps": 0.0, "pos": 7}, ...]}
// Throws ParseError on malformed input, InvariantViolation on duplicate
// cells/ids or out-of-range positions.
PlatoonState parse_instance(const std::string& text);
std::string serialize_instance(const PlatoonState& state);

// Goal document, one of:
//   {"paired": {"A": 4, ...}}
//   {"template": {"row_sets": [{"rows": [2], "class": "left"}, ...]}}
//   {"goal_states": [{"A": 4, ...}, ...], "weights": [0.0, ...]}
GoalSpec parse_goal(const std::string& text, const PlatoonState& reference);
std::string serialize_goal(const GoalSpec& goals);

// Path document: the initial instance plus the move list.
struct PathDocument {
  PlatoonState initial;
  std::vector<Move> moves;
  double total_cost = 0.0;
  int chosen_goal = -1;
};
PathDocument parse_path(const std::string& text);
std::string serialize_path(const PlatoonState& initial, const SortingPath& path);

// Rebuilds the full state sequence by replaying the moves.
SortingPath replay_path(const PathDocument& doc, const CostParams& params);

// Cost parameter overrides: a flat JSON object, unknown keys rejected.
CostParams parse_params(const std::string& text, CostParams base = {});

// Schedule CSV: "move,vehicle,from,to,step" rows in seq order.
std::string schedule_to_csv(const Schedule& schedule);
Schedule parse_schedule_csv(const std::string& text, ScheduleMode mode);

std::string stats_to_json(const SearchStats& stats, SearchStatus status,
                          double cost);

std::string summary_to_json(const PortfolioSummary& summary,
                            const PortfolioResult& result);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace platoon
