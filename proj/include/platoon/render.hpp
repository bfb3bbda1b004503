#pragma once

#include <string>

#include "platoon/schedule.hpp"
#include "platoon/state.hpp"

namespace platoon {

// Fixed-width ASCII grid, row 1 (the stop line) on top, '.' for vacant.
std::string render_state(const PlatoonState& state);

// One frame per schedule step, starting from the initial occupancy.
std::string render_schedule_frames(const PlatoonState& initial,
                                   const Schedule& schedule);

}  // namespace platoon
