#include "platoon/cost.hpp"

#include <cmath>
#include <cstdlib>

#include "platoon/errors.hpp"

namespace platoon {

void CostParams::validate() const {
  if (!(beta_long > 0.0) || beta_long > 1.0)
    throw InvalidParams("beta_long must lie in (0, 1]");
  if (!(beta_lc > 0.0) || beta_lc > 1.0)
    throw InvalidParams("beta_lc must lie in (0, 1]");
  if (!(gamma > 0.0)) throw InvalidParams("gamma must be positive");
  if (!(a_max_accel > 0.0)) throw InvalidParams("a_max_accel must be positive");
  if (!(a_min_decel < 0.0)) throw InvalidParams("a_min_decel must be negative");
  if (!(cell_length_m > 0.0)) throw InvalidParams("cell_length_m must be positive");
}

double c_min(const CostParams& params) {
  return std::min(params.beta_long, params.beta_lc);
}

double vehicle_cost(const GridSpec& grid, int from_cell, int to_cell,
                    double rel_speed, const CostParams& params) {
  const MoveKind kind = classify_move(grid, from_cell, to_cell);  // NonAdjacent check
  const double v = rel_speed;
  double cost = 0.0;
  if (kind == MoveKind::Longitudinal) {
    // displacement along the longitudinal axis; positive toward the front,
    // so moving against a large relative speed is penalized hard
    const int d_long = grid.longitudinal(from_cell) - grid.longitudinal(to_cell);
    cost += params.beta_long + std::abs(v) * std::exp(v * d_long);
  } else {
    // longitudinal position held: cruising-speed deviation penalty
    cost += std::exp(params.gamma * std::abs(v)) - 1.0;
  }
  if (kind == MoveKind::Lateral) cost += params.beta_lc;
  return cost;
}

double speed_update(double v, const CostParams& params) {
  const double a_limit = v >= 0.0 ? params.a_max_accel : params.a_min_decel;
  const double mag = std::abs(a_limit);
  if (v * v / (2.0 * params.cell_length_m) <= mag) return 0.0;
  const double next = std::sqrt(v * v - 2.0 * mag * params.cell_length_m);
  return v < 0.0 ? -next : next;
}

namespace {

// Index of the single vehicle whose cell differs, after verifying the pair
// really is one legal move apart.
int diff_vehicle(const PlatoonState& from, const PlatoonState& to) {
  if (!from.same_roster(to))
    throw NotAdjacentStates("states do not share a grid and roster");
  int mover = -1;
  for (int i = 0; i < from.vehicle_count(); ++i) {
    if (from.cell_of(i) == to.cell_of(i)) continue;
    if (mover >= 0)
      throw NotAdjacentStates("more than one vehicle moved");
    mover = i;
  }
  if (mover < 0) throw NotAdjacentStates("no vehicle moved");
  Move move{from.vehicle(mover).id, from.cell_of(mover), to.cell_of(mover),
            MoveKind::Hold};
  if (!is_legal_move(from, move))
    throw NotAdjacentStates("the differing move is not legal");
  return mover;
}

}  // namespace

double edge_cost(const PlatoonState& from, const PlatoonState& to,
                 const CostParams& params) {
  (void)diff_vehicle(from, to);
  double total = 0.0;
  for (int i = 0; i < from.vehicle_count(); ++i)
    total += vehicle_cost(from.spec(), from.cell_of(i), to.cell_of(i),
                          from.speed_of(i), params);
  return total;
}

double edge_cost_for_move(const PlatoonState& state, const Move& move,
                          const CostParams& params) {
  if (!is_legal_move(state, move))
    throw IllegalMove("move is not legal in this state");
  const int mover = *state.index_of(move.vehicle);
  double total = 0.0;
  for (int i = 0; i < state.vehicle_count(); ++i) {
    const int from = state.cell_of(i);
    const int to = i == mover ? move.to_cell : from;
    total += vehicle_cost(state.spec(), from, to, state.speed_of(i), params);
  }
  return total;
}

}  // namespace platoon
