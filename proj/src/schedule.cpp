#include "platoon/schedule.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>

namespace platoon {

const char* to_string(ScheduleMode mode) {
  return mode == ScheduleMode::Conservative ? "conservative" : "aggressive";
}

ScheduleMode schedule_mode_from_string(const std::string& name) {
  if (name == "conservative") return ScheduleMode::Conservative;
  if (name == "aggressive") return ScheduleMode::Aggressive;
  throw ParseError("unknown schedule mode '" + name + "'");
}

std::vector<MoveRecord> extract_moves(const SortingPath& path) {
  std::vector<MoveRecord> out;
  out.reserve(path.moves.size());
  for (const Move& m : path.moves) {
    if (m.from_cell == m.to_cell) continue;  // holds are not scheduled
    out.push_back(MoveRecord{m.vehicle, m.from_cell, m.to_cell,
                             static_cast<int>(out.size()) + 1});
  }
  return out;
}

PrecedenceDag build_precedence(const std::vector<MoveRecord>& moves,
                               ScheduleMode mode) {
  PrecedenceDag dag;
  dag.moves = moves;
  dag.mode = mode;
  const bool strict_cell = mode == ScheduleMode::Conservative;

  // consecutive moves of one vehicle: always strict
  std::unordered_map<std::string, int> last_own;  // vehicle -> seq
  // a departure opens the cell for the next arrival: strict at the
  // conservative level, weak at the aggressive level
  std::unordered_map<int, int> open_departure;  // cell -> departing seq
  for (const MoveRecord& m : moves) {
    if (auto it = last_own.find(m.vehicle); it != last_own.end())
      dag.edges.push_back(PrecedenceEdge{it->second, m.seq, true});
    last_own[m.vehicle] = m.seq;

    if (auto it = open_departure.find(m.to_pos); it != open_departure.end()) {
      dag.edges.push_back(PrecedenceEdge{it->second, m.seq, strict_cell});
      open_departure.erase(it);
    }
    open_departure[m.from_pos] = m.seq;
  }
  return dag;
}

Schedule earliest_schedule(const PrecedenceDag& dag) {
  Schedule sched;
  sched.moves = dag.moves;
  sched.mode = dag.mode;
  sched.step.assign(dag.moves.size(), 1);

  // Edges built from a valid path point from earlier to later seq, so seq
  // order is a topological order; anything else is a cyclic input.
  for (const PrecedenceEdge& e : dag.edges)
    if (e.before_seq >= e.after_seq)
      throw CyclicPrecedence("precedence edge against path order");

  for (const PrecedenceEdge& e : dag.edges) {
    int& after = sched.step[static_cast<size_t>(e.after_seq - 1)];
    const int before = sched.step[static_cast<size_t>(e.before_seq - 1)];
    after = std::max(after, before + (e.strict ? 1 : 0));
  }

  sched.makespan = 0;
  std::map<std::string, int> final_step;  // per vehicle, its last move's step
  for (size_t i = 0; i < sched.moves.size(); ++i) {
    sched.makespan = std::max(sched.makespan, sched.step[i]);
    final_step[sched.moves[i].vehicle] = sched.step[i];
  }
  sched.objective = 0;
  for (const auto& [veh, s] : final_step) sched.objective += s;
  return sched;
}

namespace {

long long objective_of(const std::vector<MoveRecord>& moves,
                       const std::vector<int>& step) {
  std::map<std::string, int> final_step;
  for (size_t i = 0; i < moves.size(); ++i) final_step[moves[i].vehicle] = step[i];
  long long obj = 0;
  for (const auto& [veh, s] : final_step) obj += s;
  return obj;
}

}  // namespace

Schedule brute_force_schedule(const std::vector<MoveRecord>& moves,
                              ScheduleMode mode, int step_bound) {
  if (step_bound < 1) throw BoundTooSmall("step bound must be at least 1");
  const PrecedenceDag dag = build_precedence(moves, mode);

  // incoming edges per move, usable left-to-right in seq order
  std::vector<std::vector<PrecedenceEdge>> incoming(moves.size());
  for (const PrecedenceEdge& e : dag.edges)
    incoming[static_cast<size_t>(e.after_seq - 1)].push_back(e);

  std::map<std::string, std::vector<size_t>> own_moves;
  for (size_t i = 0; i < moves.size(); ++i)
    own_moves[moves[i].vehicle].push_back(i);

  std::vector<int> step(moves.size(), 0);
  std::vector<int> best_step;
  long long best_obj = std::numeric_limits<long long>::max();
  int best_mk = std::numeric_limits<int>::max();

  // lower bound on the final objective given assignments for moves [0, i)
  auto objective_lb = [&](size_t i) {
    long long lb = 0;
    for (const auto& [veh, idxs] : own_moves) {
      int chain = 0;  // step of the vehicle's latest assigned move
      int remaining = 0;
      for (size_t k : idxs) {
        if (k < i)
          chain = step[k];
        else
          ++remaining;
      }
      // each later own move needs a strictly later step
      lb += remaining > 0 ? std::max(chain, 0) + remaining
                          : std::max(chain, 1);
    }
    return lb;
  };

  auto rec = [&](auto&& self, size_t i, int makespan_so_far) -> void {
    if (i == moves.size()) {
      const long long obj = objective_of(moves, step);
      if (obj < best_obj || (obj == best_obj && makespan_so_far < best_mk)) {
        best_obj = obj;
        best_mk = makespan_so_far;
        best_step = step;
      }
      return;
    }
    if (objective_lb(i) > best_obj) return;
    for (int s = 1; s <= step_bound; ++s) {
      bool ok = true;
      for (const PrecedenceEdge& e : incoming[i]) {
        const int before = step[static_cast<size_t>(e.before_seq - 1)];
        if (e.strict ? (s <= before) : (s < before)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      step[i] = s;
      const int mk = std::max(makespan_so_far, s);
      if (objective_lb(i + 1) <= best_obj) self(self, i + 1, mk);
      step[i] = 0;
    }
  };
  rec(rec, 0, 0);

  if (best_step.empty())
    throw BoundTooSmall("no feasible schedule within " +
                        std::to_string(step_bound) + " steps");

  Schedule sched;
  sched.moves = moves;
  sched.mode = mode;
  sched.step = best_step;
  sched.makespan = best_mk;
  sched.objective = best_obj;
  return sched;
}

ValidationReport validate_schedule(const PlatoonState& initial,
                                   const Schedule& schedule) {
  ValidationReport report;
  report.final_state = initial;

  std::vector<int> cells(static_cast<size_t>(initial.vehicle_count()));
  for (int i = 0; i < initial.vehicle_count(); ++i)
    cells[static_cast<size_t>(i)] = initial.cell_of(i);
  std::vector<int> occupant(static_cast<size_t>(initial.spec().cell_count()) + 1, -1);
  for (int i = 0; i < initial.vehicle_count(); ++i)
    occupant[static_cast<size_t>(cells[static_cast<size_t>(i)])] = i;

  auto fail = [&](int step, int cell, std::vector<std::string> vehicles,
                  std::string what) {
    report.ok = false;
    report.violations.push_back(
        Violation{step, cell, std::move(vehicles), std::move(what)});
  };

  // moves grouped by step
  std::map<int, std::vector<size_t>> by_step;
  for (size_t i = 0; i < schedule.moves.size(); ++i) {
    if (schedule.step[i] < 1)
      fail(schedule.step[i], schedule.moves[i].from_pos,
           {schedule.moves[i].vehicle}, "step index below 1");
    by_step[schedule.step[i]].push_back(i);
  }
  if (!report.ok) return report;

  for (const auto& [step, idxs] : by_step) {
    // targets must be distinct within a step
    std::map<int, std::vector<std::string>> target_users;
    for (size_t i : idxs)
      target_users[schedule.moves[i].to_pos].push_back(schedule.moves[i].vehicle);
    for (const auto& [cell, users] : target_users)
      if (users.size() > 1)
        fail(step, cell, users, "two vehicles end the step in the same cell");

    // every mover must sit at its origin
    for (size_t i : idxs) {
      const MoveRecord& m = schedule.moves[i];
      auto idx = initial.index_of(m.vehicle);
      if (!idx) {
        fail(step, m.from_pos, {m.vehicle}, "unknown vehicle");
        continue;
      }
      if (cells[static_cast<size_t>(*idx)] != m.from_pos)
        fail(step, m.from_pos, {m.vehicle},
             "vehicle is not at the move's origin cell");
    }
    if (!report.ok) return report;

    if (schedule.mode == ScheduleMode::Conservative) {
      // target must be vacant at the end of the previous step
      for (size_t i : idxs) {
        const MoveRecord& m = schedule.moves[i];
        if (occupant[static_cast<size_t>(m.to_pos)] >= 0)
          fail(step, m.to_pos,
               {m.vehicle,
                initial.vehicle(occupant[static_cast<size_t>(m.to_pos)]).id},
               "target cell not vacant at the end of the previous step");
      }
    } else {
      // aggressive: the vacates-before-enters relation inside the step must
      // be linearizable; chains are fine, swaps are collisions
      std::map<int, size_t> departing;  // cell -> move index leaving it
      for (size_t i : idxs) departing[schedule.moves[i].from_pos] = i;
      std::map<size_t, size_t> waits_on;  // mover -> mover that must vacate first
      for (size_t i : idxs) {
        const MoveRecord& m = schedule.moves[i];
        const int occ = occupant[static_cast<size_t>(m.to_pos)];
        if (occ < 0) continue;
        auto dep = departing.find(m.to_pos);
        if (dep == departing.end() || dep->second == i) {
          fail(step, m.to_pos, {m.vehicle, initial.vehicle(occ).id},
               "target cell occupied and not vacated this step");
        } else {
          waits_on[i] = dep->second;
        }
      }
      // waits_on has at most one successor per node, so any cycle comes
      // back to its own start
      for (const auto& [i, first] : waits_on) {
        size_t cur = first;
        std::vector<std::string> vehicles{schedule.moves[i].vehicle};
        for (size_t hops = 0; hops < waits_on.size(); ++hops) {
          if (cur == i) {
            fail(step, schedule.moves[i].to_pos, vehicles,
                 "cyclic same-step movement (swap)");
            break;
          }
          vehicles.push_back(schedule.moves[cur].vehicle);
          auto next = waits_on.find(cur);
          if (next == waits_on.end()) break;
          cur = next->second;
        }
      }
    }
    if (!report.ok) return report;

    // apply the step: vacate every origin, then fill every target
    for (size_t i : idxs)
      occupant[static_cast<size_t>(schedule.moves[i].from_pos)] = -1;
    for (size_t i : idxs) {
      const MoveRecord& m = schedule.moves[i];
      const int idx = *initial.index_of(m.vehicle);
      if (occupant[static_cast<size_t>(m.to_pos)] >= 0) {
        fail(step, m.to_pos,
             {m.vehicle, initial.vehicle(occupant[static_cast<size_t>(m.to_pos)]).id},
             "collision while applying the step");
        return report;
      }
      occupant[static_cast<size_t>(m.to_pos)] = idx;
      cells[static_cast<size_t>(idx)] = m.to_pos;
    }
  }

  std::vector<double> speeds(static_cast<size_t>(initial.vehicle_count()), 0.0);
  for (int i = 0; i < initial.vehicle_count(); ++i)
    speeds[static_cast<size_t>(i)] = initial.speed_of(i);
  report.final_state = initial.with_occupancy(cells, speeds);
  return report;
}

}  // namespace platoon
