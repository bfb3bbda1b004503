#pragma once

#include <string>
#include <vector>

#include "platoon/solver.hpp"
#include "platoon/state.hpp"

namespace platoon {

// One non-hold move of the stepwise path, in path order. seq is 1-based
// and gapless.
struct MoveRecord {
  std::string vehicle;
  int from_pos = 0;
  int to_pos = 0;
  int seq = 0;

  bool operator==(const MoveRecord&) const = default;
};

enum class ScheduleMode { Conservative, Aggressive };

const char* to_string(ScheduleMode mode);
ScheduleMode schedule_mode_from_string(const std::string& name);

// before must be placed at a strictly earlier step (strict) or no later
// step (weak) than after. Indices refer to MoveRecord::seq.
struct PrecedenceEdge {
  int before_seq = 0;
  int after_seq = 0;
  bool strict = true;

  bool operator==(const PrecedenceEdge&) const = default;
};

struct PrecedenceDag {
  std::vector<MoveRecord> moves;
  std::vector<PrecedenceEdge> edges;
  ScheduleMode mode = ScheduleMode::Conservative;
};

// Assignment of every move to a positive step index. objective is the sum
// over vehicles of their final move's step; makespan the largest step.
struct Schedule {
  std::vector<MoveRecord> moves;
  std::vector<int> step;  // aligned with moves
  int makespan = 0;
  long long objective = 0;
  ScheduleMode mode = ScheduleMode::Conservative;

  int step_of_seq(int seq) const { return step[static_cast<size_t>(seq - 1)]; }
};

// Path edges as move records, holds omitted.
std::vector<MoveRecord> extract_moves(const SortingPath& path);

// Precedence constraints of the chosen multi-movement level:
//  - each vehicle's consecutive own moves are ordered strictly;
//  - per cell, each departure is ordered against the next arrival —
//    strictly at the conservative level (the cell must be empty at the end
//    of the previous step), weakly at the aggressive level (the cell may be
//    vacated and refilled within one step).
// The edges always form a DAG: the path's own order is a topological order.
PrecedenceDag build_precedence(const std::vector<MoveRecord>& moves,
                               ScheduleMode mode);

// Longest-path leveling of the DAG. Every step takes its smallest feasible
// value simultaneously, so both the sum objective and the makespan are
// minimized. Throws CyclicPrecedence on a cyclic input (unreachable for
// DAGs built from valid paths).
Schedule earliest_schedule(const PrecedenceDag& dag);

// Exhaustive optimal schedule over step assignments bounded by step_bound,
// minimizing (objective, makespan) lexicographically. Test oracle; feasible
// only for small move lists. Throws BoundTooSmall when no assignment fits.
Schedule brute_force_schedule(const std::vector<MoveRecord>& moves,
                              ScheduleMode mode, int step_bound);

struct Violation {
  int step = 0;
  int cell = 0;
  std::vector<std::string> vehicles;
  std::string what;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
  PlatoonState final_state;
};

// Step-by-step simulation of the schedule from `initial`. Conservative:
// every target cell must be vacant at the end of the previous step.
// Aggressive: the same-step vacates-before-enters relation must be
// linearizable (chains allowed, swaps rejected) and no two vehicles may end
// a step in the same cell.
ValidationReport validate_schedule(const PlatoonState& initial,
                                   const Schedule& schedule);

}  // namespace platoon
