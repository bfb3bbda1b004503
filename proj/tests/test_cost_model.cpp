#include <doctest.h>

#include <cmath>
#include <random>

#include "platoon/cost.hpp"
#include "platoon/fixtures.hpp"
#include "support.hpp"

using namespace platoon;
using doctest::Approx;

namespace {
const GridSpec kGrid{4, 3, 7.0, 3.5};
}

TEST_SUITE("cost_model") {

TEST_CASE("params validation") {
  CostParams p;
  CHECK_NOTHROW(p.validate());
  p.beta_long = 0.0;  // strictly positive required
  CHECK_THROWS_AS(p.validate(), InvalidParams);
  p = CostParams{};
  p.beta_lc = 1.5;
  CHECK_THROWS_AS(p.validate(), InvalidParams);
  p = CostParams{};
  p.gamma = 0.0;
  CHECK_THROWS_AS(p.validate(), InvalidParams);
  p = CostParams{};
  p.a_min_decel = 1.0;
  CHECK_THROWS_AS(p.validate(), InvalidParams);
}

TEST_CASE("c_min is the smaller movement weight") {
  CostParams p;
  CHECK(c_min(p) == 1.0);
  p.beta_long = 0.4;
  p.beta_lc = 0.9;
  CHECK(c_min(p) == Approx(0.4));
  p.beta_long = 0.5;
  p.beta_lc = 0.5;
  CHECK(c_min(p) == Approx(0.5));
}

TEST_CASE("vehicle_cost: cruising hold is free") {
  CostParams p;
  CHECK(vehicle_cost(kGrid, 5, 5, 0.0, p) == Approx(0.0));
}

TEST_CASE("vehicle_cost: lateral move at cruise costs beta_lc") {
  CostParams p;
  CHECK(vehicle_cost(kGrid, 5, 6, 0.0, p) == Approx(1.0));
  p.beta_lc = 0.7;
  CHECK(vehicle_cost(kGrid, 5, 6, 0.0, p) == Approx(0.7));
}

TEST_CASE("vehicle_cost: holding with speed costs exp(gamma*|v|) - 1") {
  CostParams p;  // gamma = 1
  CHECK(vehicle_cost(kGrid, 5, 5, 2.0, p) == Approx(std::exp(2.0) - 1.0));
  CHECK(vehicle_cost(kGrid, 5, 5, -2.0, p) == Approx(std::exp(2.0) - 1.0));
}

TEST_CASE("vehicle_cost: moving against the relative speed is expensive") {
  CostParams p;
  // v = +2 (faster than cruise): cell 5 -> 8 moves backward in the platoon
  const double against = vehicle_cost(kGrid, 5, 8, 2.0, p);
  const double with = vehicle_cost(kGrid, 5, 2, 2.0, p);
  CHECK(against == Approx(1.0 + 2.0 * std::exp(2.0)));
  CHECK(with == Approx(1.0 + 2.0 * std::exp(-2.0)));
  CHECK(against > with);
}

TEST_CASE("vehicle_cost rejects non-adjacent cells") {
  CostParams p;
  CHECK_THROWS_AS(vehicle_cost(kGrid, 5, 12, 0.0, p), NonAdjacent);
  CHECK_THROWS_AS(vehicle_cost(kGrid, 1, 5, 0.0, p), NonAdjacent);  // diagonal
}

TEST_CASE("speed_update") {
  CostParams p;  // L = 7, a_max 3, a_min -5
  CHECK(speed_update(0.0, p) == 0.0);
  // v^2 / 2L <= |a|: snaps to zero
  CHECK(speed_update(3.0, p) == 0.0);    // 9/14 <= 3
  CHECK(speed_update(-6.0, p) == 0.0);   // 36/14 <= 5
  // large magnitudes shrink toward cruising
  CHECK(speed_update(10.0, p) == Approx(std::sqrt(100.0 - 2 * 3.0 * 7.0)));
  CHECK(speed_update(-12.0, p) == Approx(-std::sqrt(144.0 - 2 * 5.0 * 7.0)));
}

TEST_CASE("speed_update never grows the magnitude") {
  CostParams p;
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> v_d(-30.0, 30.0);
  for (int i = 0; i < 2000; ++i) {
    const double v = v_d(rng);
    const double next = speed_update(v, p);
    CHECK(std::abs(next) <= std::abs(v) + 1e-12);
    CHECK(v * next >= 0.0);  // sign preserved (or zero)
  }
}

TEST_CASE("vehicle_cost is nonnegative and zero only for a cruise hold") {
  CostParams p;
  p.beta_long = 0.3;
  p.beta_lc = 0.8;
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> v_d(-5.0, 5.0);
  const int pairs[][2] = {{5, 5}, {5, 2}, {5, 8}, {5, 4}, {5, 6}};
  for (int i = 0; i < 2000; ++i) {
    const double v = v_d(rng);
    for (auto [a, b] : pairs) {
      const double cost = vehicle_cost(kGrid, a, b, v, p);
      CHECK(cost >= 0.0);
      if (cost == 0.0) {
        CHECK(a == b);
        CHECK(v == 0.0);
      }
    }
  }
  CHECK(vehicle_cost(kGrid, 5, 5, 0.0, p) == 0.0);
}

TEST_CASE("hold cost grows with the speed magnitude") {
  CostParams p;
  double prev = vehicle_cost(kGrid, 5, 5, 0.0, p);
  for (double v = 0.5; v <= 6.0; v += 0.5) {
    const double cur = vehicle_cost(kGrid, 5, 5, v, p);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("edge_cost: single moves at cruise cost exactly their weight") {
  CostParams p;
  p.beta_long = 0.6;
  p.beta_lc = 0.9;
  auto s = fixtures::demo_instance();
  auto longi = apply_move(s, Move{"F", 5, 8, MoveKind::Longitudinal}, p);
  CHECK(edge_cost(s, longi, p) == Approx(0.6));
  auto lat = apply_move(s, Move{"E", 9, 8, MoveKind::Lateral}, p);
  CHECK(edge_cost(s, lat, p) == Approx(0.9));
}

TEST_CASE("edge_cost rejects non-adjacent states") {
  CostParams p;
  auto s = fixtures::demo_instance();
  CHECK_THROWS_AS(edge_cost(s, s, p), NotAdjacentStates);  // nothing moved
  auto one = apply_move(s, Move{"F", 5, 8, MoveKind::Longitudinal}, p);
  auto two = apply_move(one, Move{"D", 6, 5, MoveKind::Lateral}, p);
  CHECK_THROWS_AS(edge_cost(s, two, p), NotAdjacentStates);  // two moves apart
}

TEST_CASE("edge_cost_for_move agrees with edge_cost") {
  CostParams p;
  std::mt19937 rng(9);
  for (int round = 0; round < 40; ++round) {
    auto inst = testsupport::random_instance(rng);
    for (const Move& m : legal_moves(inst.initial)) {
      auto next = apply_move(inst.initial, m, p);
      CHECK(edge_cost_for_move(inst.initial, m, p) ==
            Approx(edge_cost(inst.initial, next, p)));
    }
  }
}

TEST_CASE("the demo reference path sums to 13 under unit weights") {
  CostParams p;
  auto state = fixtures::demo_instance();
  double total = 0.0;
  for (const Move& m : fixtures::demo_reference_moves()) {
    total += edge_cost_for_move(state, m, p);
    state = apply_move(state, m, p);
  }
  CHECK(total == Approx(13.0).epsilon(1e-12));
  // the path ends at the bundled goal
  CHECK(state_key(state) == state_key(fixtures::goal_a_state()));
}

}  // TEST_SUITE
