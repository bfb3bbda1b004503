#pragma once

#include "platoon/state.hpp"

namespace platoon {

// Edge-cost coefficients. beta_long and beta_lc must be strictly positive:
// the stochastic heuristic needs a positive minimum edge cost.
struct CostParams {
  double beta_long = 1.0;        // longitudinal move weight, (0,1]
  double beta_lc = 1.0;          // lane-change weight, (0,1]
  double gamma = 1.0;            // hold-penalty exponent, > 0
  double a_max_accel = 3.0;      // m/s^2, > 0
  double a_min_decel = -5.0;     // m/s^2, < 0
  double cell_length_m = 7.0;    // L, mirrored from GridSpec
  double cruise_speed_mps = 15.0;

  void validate() const;  // throws InvalidParams
};

// Minimum possible edge cost: min(beta_long, beta_lc).
double c_min(const CostParams& params);

// Cost for one vehicle between 4-adjacent (or identical) cells, evaluated
// at its pre-transition relative speed v:
//   row held:    (exp(gamma*|v|) - 1)            plus a lane-change term
//   row changed: beta_long + |v|*exp(v * d_long) where d_long is the
//                longitudinal displacement, positive toward the front
//   column changed: + beta_lc
// Throws NonAdjacent when the two cells are neither equal nor 4-adjacent.
double vehicle_cost(const GridSpec& grid, int from_cell, int to_cell,
                    double rel_speed, const CostParams& params);

// One-transition relaxation of a relative speed toward cruising. The speed
// snaps to zero once the remaining gap is within one cell of comfortable
// acceleration/deceleration, otherwise its magnitude shrinks by the
// kinematic bound over one cell length.
double speed_update(double rel_speed, const CostParams& params);

// Sum of vehicle_cost over every vehicle (movers and holders alike).
// Throws NotAdjacentStates unless the states differ by exactly one legal
// move on a shared roster.
double edge_cost(const PlatoonState& from, const PlatoonState& to,
                 const CostParams& params);

// Same sum, for a known-legal move out of `state`. Fast path used by the
// search; throws IllegalMove when the move is not legal in `state`.
double edge_cost_for_move(const PlatoonState& state, const Move& move,
                          const CostParams& params);

}  // namespace platoon
