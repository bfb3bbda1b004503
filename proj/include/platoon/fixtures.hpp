#pragma once

#include <vector>

#include "platoon/solver.hpp"
#include "platoon/state.hpp"

namespace platoon::fixtures {

// Bundled 4x3 tandem-sorting scenario: six vehicles, A/B/C left-turning and
// D/E/F through. goal_a queues the left group ahead of the through group,
// goal_b the opposite.

// The worked demo instance (C@4 F@5 D@6 A@7 E@9 B@11).
PlatoonState demo_instance();

// Its 13-move stepwise reference solution to goal_a.
std::vector<Move> demo_reference_moves();

// Benchmark initial states, 1..30.
PlatoonState sample(int number);
int sample_count();

PlatoonState goal_a_state();  // A B C D E F at cells 4..9
PlatoonState goal_b_state();  // D E F A B C at cells 4..9

GoalSpec goal_a(const PlatoonState& reference);
GoalSpec goal_b(const PlatoonState& reference);
GoalSpec both_goals(const PlatoonState& reference);

// The eight benchmark samples used by the portfolio experiments.
const std::vector<int>& representative_samples();

}  // namespace platoon::fixtures
