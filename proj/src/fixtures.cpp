#include "platoon/fixtures.hpp"

#include <array>

#include "platoon/errors.hpp"
#include "platoon/heuristic.hpp"

namespace platoon::fixtures {

namespace {

constexpr int kRows = 4;
constexpr int kCols = 3;

// One character per cell 1..12; '0' marks a vacant cell.
PlatoonState from_layout(const char* layout) {
  GridSpec spec{kRows, kCols, 7.0, 3.5};
  std::vector<std::pair<Vehicle, int>> placements;
  for (int cell = 1; cell <= kRows * kCols; ++cell) {
    const char c = layout[cell - 1];
    if (c == '0') continue;
    const std::string id(1, c);
    const std::string cls = c <= 'C' ? "left" : "through";
    placements.push_back({Vehicle{id, cls, 0.0}, cell});
  }
  return PlatoonState(spec, placements);
}

constexpr std::array<const char*, 30> kSamples = {
    "C000E0DA0F0B",  // 1
    "D0C0FA0B000E",  // 2
    "C0B0A00E0FD0",  // 3
    "CBE0AD00000F",  // 4
    "0C00EA0F0BD0",  // 5
    "B0C0F000EDA0",  // 6
    "FEA0000BC0D0",  // 7
    "BE0F00C00D0A",  // 8
    "0B0A00ECD0F0",  // 9
    "0A0E000DBFC0",  // 10
    "00F0AC00DE0B",  // 11
    "D0CE00B0F00A",  // 12
    "D0ABEF000C00",  // 13
    "FD000C0AE0B0",  // 14
    "000AD0CBF00E",  // 15
    "BFACDE000000",  // 16
    "00CE0F0ABD00",  // 17
    "0E00BC0D0AF0",  // 18
    "ADC000EF00B0",  // 19
    "B0D0A00FC0E0",  // 20
    "AD00B0F0C00E",  // 21
    "B00ACF0D00E0",  // 22
    "D0F000A0BEC0",  // 23
    "CFAD0BE00000",  // 24
    "000ECDA00F0B",  // 25
    "EB000FA0C00D",  // 26
    "0D0BE0000CFA",  // 27
    "ABF00C00ED00",  // 28
    "BDF0000EA0C0",  // 29
    "E00DCA000BF0",  // 30
};

constexpr const char* kDemo = "000CFDA0E0B0";
constexpr const char* kGoalA = "000ABCDEF000";
constexpr const char* kGoalB = "000DEFABC000";

GoalSpec paired_from_layout(const PlatoonState& reference, const char* layout) {
  std::map<std::string, int> targets;
  for (int cell = 1; cell <= kRows * kCols; ++cell)
    if (layout[cell - 1] != '0')
      targets[std::string(1, layout[cell - 1])] = cell;
  return GoalSpec::paired(reference, targets);
}

}  // namespace

PlatoonState demo_instance() { return from_layout(kDemo); }

std::vector<Move> demo_reference_moves() {
  const GridSpec spec{kRows, kCols, 7.0, 3.5};
  const std::array<std::tuple<char, int, int>, 13> raw = {{
      {'F', 5, 8},
      {'D', 6, 5},
      {'E', 9, 12},
      {'F', 8, 9},
      {'D', 5, 8},
      {'C', 4, 5},
      {'A', 7, 4},
      {'D', 8, 7},
      {'B', 11, 8},
      {'E', 12, 11},
      {'C', 5, 6},
      {'B', 8, 5},
      {'E', 11, 8},
  }};
  std::vector<Move> moves;
  for (const auto& [veh, from, to] : raw)
    moves.push_back(Move{std::string(1, veh), from, to, classify_move(spec, from, to)});
  return moves;
}

PlatoonState sample(int number) {
  if (number < 1 || number > sample_count())
    throw InvariantViolation("sample number out of range");
  return from_layout(kSamples[static_cast<size_t>(number - 1)]);
}

int sample_count() { return static_cast<int>(kSamples.size()); }

PlatoonState goal_a_state() { return from_layout(kGoalA); }
PlatoonState goal_b_state() { return from_layout(kGoalB); }

GoalSpec goal_a(const PlatoonState& reference) {
  return paired_from_layout(reference, kGoalA);
}

GoalSpec goal_b(const PlatoonState& reference) {
  return paired_from_layout(reference, kGoalB);
}

GoalSpec both_goals(const PlatoonState& reference) {
  std::vector<PlatoonState> states;
  for (const PlatoonState& g :
       {paired_from_layout(reference, kGoalA).states()[0],
        paired_from_layout(reference, kGoalB).states()[0]})
    states.push_back(g);
  return GoalSpec::from_states(std::move(states));
}

const std::vector<int>& representative_samples() {
  static const std::vector<int> ids = {22, 28, 9, 11, 14, 29, 27, 30};
  return ids;
}

}  // namespace platoon::fixtures
