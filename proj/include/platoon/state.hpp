#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "platoon/errors.hpp"

namespace platoon {

// Grid cells are indexed 1..rows*cols, row-major, row 1 nearest the stop
// line (the downstream front of the platoon).
struct GridSpec {
  int rows = 0;
  int cols = 0;                 // lanes
  double cell_length_m = 7.0;   // critical lane-change gap L
  double lane_width_m = 3.5;    // informational

  int cell_count() const { return rows * cols; }
  int row_of(int cell) const { return (cell - 1) / cols + 1; }
  int col_of(int cell) const { return (cell - 1) % cols + 1; }
  int cell_at(int row, int col) const { return (row - 1) * cols + col; }
  bool contains(int cell) const { return cell >= 1 && cell <= cell_count(); }

  // Longitudinal coordinate, increasing toward the front: a vehicle with a
  // positive relative speed drifts toward larger values of this axis.
  int longitudinal(int cell) const { return rows - row_of(cell); }
  int lateral(int cell) const { return col_of(cell); }

  bool operator==(const GridSpec&) const = default;
};

struct Vehicle {
  std::string id;
  std::string move_class;  // e.g. "left", "through"; free-form tag
  double rel_speed = 0.0;  // m/s relative to the cruising speed
};

enum class MoveKind { Hold, Longitudinal, Lateral };

struct Move {
  std::string vehicle;
  int from_cell = 0;
  int to_cell = 0;
  MoveKind kind = MoveKind::Hold;

  bool operator==(const Move&) const = default;
};

// Immutable grid occupancy plus per-vehicle relative speeds. The vehicle
// roster (ids and classes) is fixed at construction and shared between
// states that evolve from one another; occupancy and speeds are per-state.
class PlatoonState {
 public:
  PlatoonState() = default;

  // vehicles: (vehicle, cell) placements. Throws InvariantViolation on
  // duplicate ids, duplicate cells, or out-of-range cells.
  PlatoonState(const GridSpec& spec,
               const std::vector<std::pair<Vehicle, int>>& placements);

  const GridSpec& spec() const { return spec_; }
  int vehicle_count() const { return static_cast<int>(cell_of_.size()); }
  bool empty() const { return roster_ == nullptr; }

  // Vehicles are kept sorted by id; `index` below refers to that order.
  const Vehicle& vehicle(int index) const;
  std::optional<int> index_of(std::string_view id) const;
  int cell_of(int index) const { return cell_of_[static_cast<size_t>(index)]; }
  double speed_of(int index) const { return speeds_[static_cast<size_t>(index)]; }

  // -1 when vacant, else the vehicle index occupying the cell.
  int occupant(int cell) const { return occupant_[static_cast<size_t>(cell - 1)]; }
  bool vacant(int cell) const { return occupant(cell) < 0; }
  int vacant_cells() const { return spec_.cell_count() - vehicle_count(); }

  // Guideline check, reported as a warning by callers rather than an error:
  // the grid should hold at least as many vacant cells as vehicles.
  bool has_sufficient_vacancy() const { return vacant_cells() >= vehicle_count(); }

  bool same_roster(const PlatoonState& other) const;

  PlatoonState with_occupancy(const std::vector<int>& cell_per_vehicle,
                              const std::vector<double>& speeds) const;

 private:
  GridSpec spec_;
  std::shared_ptr<const std::vector<Vehicle>> roster_;  // sorted by id
  std::vector<int> cell_of_;     // per vehicle index
  std::vector<double> speeds_;   // per vehicle index
  std::vector<int16_t> occupant_;  // per cell, -1 vacant
};

// Every single-vehicle move into a 4-adjacent vacant cell. Holds are not
// enumerated: a search edge is exactly one vehicle moving, everyone else
// implicitly holds. Deterministic order: ascending vehicle id, then
// up / down / left / right (up = toward row 1).
std::vector<Move> legal_moves(const PlatoonState& state);

bool is_legal_move(const PlatoonState& state, const Move& move);

MoveKind classify_move(const GridSpec& spec, int from_cell, int to_cell);

struct CostParams;  // cost.hpp

// Applies a legal move: the mover's occupancy changes and every vehicle's
// speed relaxes one transition toward cruising. Value semantics; the input
// state is unchanged. Throws IllegalMove when the move is not legal.
PlatoonState apply_move(const PlatoonState& state, const Move& move,
                        const CostParams& params);

// Canonical byte string identifying (occupancy, quantized speeds, roster,
// grid). Equal states yield equal keys and distinct states distinct keys;
// speeds are compared after rounding to 0.01 m/s.
std::string state_key(const PlatoonState& state);

// Speed quantum used by state_key.
inline constexpr double kSpeedQuantum = 0.01;

// One row-set of a class-ordering template: the listed grid rows must be
// exactly filled by the vehicles of the given class.
struct RowSet {
  std::vector<int> rows;
  std::string vehicle_class;
};

// All permutations of `state`'s vehicles consistent with the template
// (each class permuted freely within its row-set), every result a valid
// state at zero relative speed. Throws InfeasibleTemplate when the class
// counts cannot exactly fill the template rows.
std::vector<PlatoonState> enumerate_goal_set(const PlatoonState& state,
                                             const std::vector<RowSet>& tmpl);

}  // namespace platoon
