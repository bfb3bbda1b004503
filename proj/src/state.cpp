#include "platoon/state.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <sstream>

#include "platoon/cost.hpp"

namespace platoon {

namespace {

void check_spec(const GridSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1)
    throw InvariantViolation("grid must have at least one row and one column");
  if (!(spec.cell_length_m > 0.0))
    throw InvariantViolation("cell_length_m must be positive");
  if (spec.cell_count() > 32000)
    throw InvariantViolation("grid too large");
}

}  // namespace

PlatoonState::PlatoonState(const GridSpec& spec,
                           const std::vector<std::pair<Vehicle, int>>& placements)
    : spec_(spec) {
  check_spec(spec);
  if (placements.size() > 254)
    throw InvariantViolation("too many vehicles");

  std::vector<std::pair<Vehicle, int>> sorted = placements;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first.id < b.first.id; });

  auto roster = std::make_shared<std::vector<Vehicle>>();
  roster->reserve(sorted.size());
  occupant_.assign(static_cast<size_t>(spec.cell_count()), int16_t{-1});
  for (const auto& [veh, cell] : sorted) {
    if (veh.id.empty())
      throw InvariantViolation("vehicle id must be non-empty");
    if (!roster->empty() && roster->back().id == veh.id)
      throw InvariantViolation("duplicate vehicle id '" + veh.id + "'");
    if (!spec.contains(cell))
      throw InvariantViolation("vehicle '" + veh.id + "' placed at cell " +
                               std::to_string(cell) + ", outside 1.." +
                               std::to_string(spec.cell_count()));
    if (!vacant(cell))
      throw InvariantViolation("cell " + std::to_string(cell) +
                               " assigned to more than one vehicle");
    occupant_[static_cast<size_t>(cell - 1)] =
        static_cast<int16_t>(roster->size());
    cell_of_.push_back(cell);
    speeds_.push_back(veh.rel_speed);
    roster->push_back(veh);
  }
  roster_ = std::move(roster);
}

const Vehicle& PlatoonState::vehicle(int index) const {
  return (*roster_)[static_cast<size_t>(index)];
}

std::optional<int> PlatoonState::index_of(std::string_view id) const {
  if (!roster_) return std::nullopt;
  auto it = std::lower_bound(roster_->begin(), roster_->end(), id,
                             [](const Vehicle& v, std::string_view key) {
                               return v.id < key;
                             });
  if (it == roster_->end() || it->id != id) return std::nullopt;
  return static_cast<int>(it - roster_->begin());
}

bool PlatoonState::same_roster(const PlatoonState& other) const {
  if (roster_ == other.roster_) return spec_ == other.spec_;
  if (!roster_ || !other.roster_ || roster_->size() != other.roster_->size())
    return false;
  if (!(spec_ == other.spec_)) return false;
  for (size_t i = 0; i < roster_->size(); ++i) {
    if ((*roster_)[i].id != (*other.roster_)[i].id ||
        (*roster_)[i].move_class != (*other.roster_)[i].move_class)
      return false;
  }
  return true;
}

PlatoonState PlatoonState::with_occupancy(const std::vector<int>& cell_per_vehicle,
                                          const std::vector<double>& speeds) const {
  if (cell_per_vehicle.size() != roster_->size() || speeds.size() != roster_->size())
    throw InvariantViolation("occupancy/speed vector size mismatch");
  PlatoonState out;
  out.spec_ = spec_;
  out.roster_ = roster_;
  out.cell_of_ = cell_per_vehicle;
  out.speeds_ = speeds;
  out.occupant_.assign(static_cast<size_t>(spec_.cell_count()), int16_t{-1});
  for (size_t i = 0; i < cell_per_vehicle.size(); ++i) {
    const int cell = cell_per_vehicle[i];
    if (!spec_.contains(cell))
      throw InvariantViolation("cell " + std::to_string(cell) + " out of range");
    if (out.occupant_[static_cast<size_t>(cell - 1)] >= 0)
      throw InvariantViolation("cell " + std::to_string(cell) +
                               " assigned to more than one vehicle");
    out.occupant_[static_cast<size_t>(cell - 1)] = static_cast<int16_t>(i);
  }
  return out;
}

MoveKind classify_move(const GridSpec& spec, int from_cell, int to_cell) {
  if (from_cell == to_cell) return MoveKind::Hold;
  const int dr = spec.row_of(to_cell) - spec.row_of(from_cell);
  const int dc = spec.col_of(to_cell) - spec.col_of(from_cell);
  if (dc == 0 && (dr == 1 || dr == -1)) return MoveKind::Longitudinal;
  if (dr == 0 && (dc == 1 || dc == -1)) return MoveKind::Lateral;
  throw NonAdjacent("cells " + std::to_string(from_cell) + " and " +
                    std::to_string(to_cell) + " are not 4-adjacent");
}

std::vector<Move> legal_moves(const PlatoonState& state) {
  const GridSpec& spec = state.spec();
  std::vector<Move> moves;
  for (int i = 0; i < state.vehicle_count(); ++i) {
    const int cell = state.cell_of(i);
    const int row = spec.row_of(cell);
    const int col = spec.col_of(cell);
    // up, down, left, right
    const int targets[4] = {
        row > 1 ? spec.cell_at(row - 1, col) : 0,
        row < spec.rows ? spec.cell_at(row + 1, col) : 0,
        col > 1 ? spec.cell_at(row, col - 1) : 0,
        col < spec.cols ? spec.cell_at(row, col + 1) : 0,
    };
    for (int t : targets) {
      if (t == 0 || !state.vacant(t)) continue;
      moves.push_back(Move{state.vehicle(i).id, cell, t,
                           classify_move(spec, cell, t)});
    }
  }
  return moves;
}

bool is_legal_move(const PlatoonState& state, const Move& move) {
  auto idx = state.index_of(move.vehicle);
  if (!idx) return false;
  if (state.cell_of(*idx) != move.from_cell) return false;
  if (!state.spec().contains(move.to_cell)) return false;
  if (!state.vacant(move.to_cell)) return false;
  const int dr = state.spec().row_of(move.to_cell) - state.spec().row_of(move.from_cell);
  const int dc = state.spec().col_of(move.to_cell) - state.spec().col_of(move.from_cell);
  return std::abs(dr) + std::abs(dc) == 1;
}

PlatoonState apply_move(const PlatoonState& state, const Move& move,
                        const CostParams& params) {
  if (!is_legal_move(state, move))
    throw IllegalMove("vehicle '" + move.vehicle + "' cannot move " +
                      std::to_string(move.from_cell) + " -> " +
                      std::to_string(move.to_cell));
  const int idx = *state.index_of(move.vehicle);
  std::vector<int> cells(static_cast<size_t>(state.vehicle_count()));
  std::vector<double> speeds(cells.size());
  for (int i = 0; i < state.vehicle_count(); ++i) {
    cells[static_cast<size_t>(i)] = state.cell_of(i);
    // every vehicle relaxes toward cruising on every transition
    speeds[static_cast<size_t>(i)] = speed_update(state.speed_of(i), params);
  }
  cells[static_cast<size_t>(idx)] = move.to_cell;
  return state.with_occupancy(cells, speeds);
}

std::string state_key(const PlatoonState& state) {
  std::string key;
  const GridSpec& spec = state.spec();
  key.reserve(static_cast<size_t>(spec.cell_count()) +
              static_cast<size_t>(state.vehicle_count()) * 8 + 8);
  auto push_i32 = [&key](int32_t v) {
    for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
  };
  push_i32(spec.rows);
  push_i32(spec.cols);
  for (int c = 1; c <= spec.cell_count(); ++c)
    key.push_back(static_cast<char>(state.occupant(c) & 0xff));
  for (int i = 0; i < state.vehicle_count(); ++i) {
    key.append(state.vehicle(i).id);
    key.push_back('\0');
    key.append(state.vehicle(i).move_class);
    key.push_back('\0');
    push_i32(static_cast<int32_t>(std::llround(state.speed_of(i) / kSpeedQuantum)));
  }
  return key;
}

std::vector<PlatoonState> enumerate_goal_set(const PlatoonState& state,
                                             const std::vector<RowSet>& tmpl) {
  if (tmpl.empty()) throw InfeasibleTemplate("template has no row sets");
  const GridSpec& spec = state.spec();

  // cells covered by each row set, and the vehicles of each class
  std::vector<std::vector<int>> set_cells;
  std::vector<std::vector<int>> set_vehicles;
  std::vector<char> used_row(static_cast<size_t>(spec.rows) + 1, 0);
  std::vector<char> used_vehicle(static_cast<size_t>(state.vehicle_count()), 0);
  for (const RowSet& rs : tmpl) {
    std::vector<int> cells;
    for (int row : rs.rows) {
      if (row < 1 || row > spec.rows)
        throw InfeasibleTemplate("row " + std::to_string(row) + " out of range");
      if (used_row[static_cast<size_t>(row)])
        throw InfeasibleTemplate("row " + std::to_string(row) +
                                 " listed in more than one row set");
      used_row[static_cast<size_t>(row)] = 1;
      for (int col = 1; col <= spec.cols; ++col)
        cells.push_back(spec.cell_at(row, col));
    }
    std::vector<int> members;
    for (int i = 0; i < state.vehicle_count(); ++i) {
      if (state.vehicle(i).move_class == rs.vehicle_class) {
        if (used_vehicle[static_cast<size_t>(i)])
          throw InfeasibleTemplate("class '" + rs.vehicle_class +
                                   "' listed in more than one row set");
        used_vehicle[static_cast<size_t>(i)] = 1;
        members.push_back(i);
      }
    }
    if (members.size() != cells.size())
      throw InfeasibleTemplate(
          "class '" + rs.vehicle_class + "' has " +
          std::to_string(members.size()) + " vehicles for " +
          std::to_string(cells.size()) + " template cells");
    set_cells.push_back(std::move(cells));
    set_vehicles.push_back(std::move(members));
  }
  for (int i = 0; i < state.vehicle_count(); ++i)
    if (!used_vehicle[static_cast<size_t>(i)])
      throw InfeasibleTemplate("vehicle '" + state.vehicle(i).id +
                               "' has no row set for class '" +
                               state.vehicle(i).move_class + "'");

  // cross product of per-set permutations, in lexicographic order
  std::vector<PlatoonState> goals;
  std::vector<double> zero_speeds(static_cast<size_t>(state.vehicle_count()), 0.0);
  std::vector<int> assignment(static_cast<size_t>(state.vehicle_count()), 0);
  std::vector<std::vector<int>> perms = set_vehicles;  // mutated in recursion

  auto emit = [&] {
    goals.push_back(state.with_occupancy(assignment, zero_speeds));
  };
  auto rec = [&](auto&& self, size_t set_index) -> void {
    if (set_index == perms.size()) {
      emit();
      return;
    }
    std::vector<int>& order = perms[set_index];
    std::sort(order.begin(), order.end());
    do {
      for (size_t j = 0; j < order.size(); ++j)
        assignment[static_cast<size_t>(order[j])] = set_cells[set_index][j];
      self(self, set_index + 1);
    } while (std::next_permutation(order.begin(), order.end()));
  };
  rec(rec, 0);
  return goals;
}

}  // namespace platoon
