#include "platoon/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace platoon {

namespace {

size_t label_width(const PlatoonState& state) {
  size_t w = 1;
  for (int i = 0; i < state.vehicle_count(); ++i)
    w = std::max(w, state.vehicle(i).id.size());
  return w;
}

void render_grid(std::ostringstream& out, const PlatoonState& state,
                 const std::vector<int>& cell_per_vehicle, size_t width) {
  const GridSpec& spec = state.spec();
  std::map<int, int> occ;  // cell -> vehicle index
  for (size_t i = 0; i < cell_per_vehicle.size(); ++i)
    occ[cell_per_vehicle[i]] = static_cast<int>(i);
  for (int row = 1; row <= spec.rows; ++row) {
    for (int col = 1; col <= spec.cols; ++col) {
      if (col > 1) out << ' ';
      auto it = occ.find(spec.cell_at(row, col));
      std::string label = it == occ.end() ? "." : state.vehicle(it->second).id;
      label.resize(width, ' ');
      out << label;
    }
    out << '\n';
  }
}

}  // namespace

std::string render_state(const PlatoonState& state) {
  std::ostringstream out;
  std::vector<int> cells(static_cast<size_t>(state.vehicle_count()));
  for (int i = 0; i < state.vehicle_count(); ++i)
    cells[static_cast<size_t>(i)] = state.cell_of(i);
  render_grid(out, state, cells, label_width(state));
  return out.str();
}

std::string render_schedule_frames(const PlatoonState& initial,
                                   const Schedule& schedule) {
  std::ostringstream out;
  const size_t width = label_width(initial);

  std::vector<int> cells(static_cast<size_t>(initial.vehicle_count()));
  for (int i = 0; i < initial.vehicle_count(); ++i)
    cells[static_cast<size_t>(i)] = initial.cell_of(i);

  out << "step 0\n";
  render_grid(out, initial, cells, width);

  for (int step = 1; step <= schedule.makespan; ++step) {
    for (size_t i = 0; i < schedule.moves.size(); ++i) {
      if (schedule.step[i] != step) continue;
      auto idx = initial.index_of(schedule.moves[i].vehicle);
      if (idx) cells[static_cast<size_t>(*idx)] = schedule.moves[i].to_pos;
    }
    out << "step " << step << '\n';
    render_grid(out, initial, cells, width);
  }
  return out.str();
}

}  // namespace platoon
