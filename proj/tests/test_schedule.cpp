#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "platoon/fixtures.hpp"
#include "platoon/schedule.hpp"
#include "support.hpp"

using namespace platoon;

namespace {

SortingPath demo_path() {
  CostParams params;
  SortingPath path;
  path.states.push_back(fixtures::demo_instance());
  for (const Move& m : fixtures::demo_reference_moves()) {
    path.total_cost += edge_cost_for_move(path.states.back(), m, params);
    path.states.push_back(apply_move(path.states.back(), m, params));
    path.moves.push_back(m);
  }
  return path;
}

bool has_edge(const PrecedenceDag& dag, int before, int after, bool strict) {
  return std::find(dag.edges.begin(), dag.edges.end(),
                   PrecedenceEdge{before, after, strict}) != dag.edges.end();
}

// independent oracle: scan the per-cell event sequence of the move list and
// require departure -> next arrival edges plus per-vehicle chains
std::set<std::pair<int, int>> expected_edges(const std::vector<MoveRecord>& moves) {
  std::set<std::pair<int, int>> edges;
  std::map<std::string, int> last_own;
  std::map<int, int> pending_departure;
  for (const MoveRecord& m : moves) {
    if (last_own.count(m.vehicle)) edges.insert({last_own[m.vehicle], m.seq});
    last_own[m.vehicle] = m.seq;
    if (pending_departure.count(m.to_pos)) {
      edges.insert({pending_departure[m.to_pos], m.seq});
      pending_departure.erase(m.to_pos);
    }
    pending_departure[m.from_pos] = m.seq;
  }
  return edges;
}

}  // namespace

TEST_SUITE("schedule") {

TEST_CASE("extract_moves: empty path and single-move path") {
  SortingPath empty;
  empty.states.push_back(fixtures::demo_instance());
  CHECK(extract_moves(empty).empty());

  CostParams params;
  SortingPath one;
  one.states.push_back(fixtures::demo_instance());
  Move m{"F", 5, 8, MoveKind::Longitudinal};
  one.states.push_back(apply_move(one.states[0], m, params));
  one.moves.push_back(m);
  auto records = extract_moves(one);
  REQUIRE(records.size() == 1);
  CHECK(records[0].seq == 1);
  CHECK(records[0].vehicle == "F");
  CHECK(records[0].from_pos == 5);
  CHECK(records[0].to_pos == 8);
}

TEST_CASE("extract_moves: the demo path gives 13 records in order") {
  auto records = extract_moves(demo_path());
  REQUIRE(records.size() == 13);
  CHECK(records[0].vehicle == "F");
  CHECK(records[0].from_pos == 5);
  CHECK(records[0].to_pos == 8);
  CHECK(records[1].vehicle == "D");
  CHECK(records[1].from_pos == 6);
  CHECK(records[1].to_pos == 5);
  CHECK(records[2].vehicle == "E");
  CHECK(records[2].from_pos == 9);
  CHECK(records[2].to_pos == 12);
  for (size_t i = 0; i < records.size(); ++i)
    CHECK(records[i].seq == static_cast<int>(i) + 1);
}

TEST_CASE("build_precedence: two moves of one vehicle link strictly") {
  std::vector<MoveRecord> moves = {{"A", 1, 2, 1}, {"A", 2, 4, 2}};
  for (ScheduleMode mode : {ScheduleMode::Conservative, ScheduleMode::Aggressive}) {
    auto dag = build_precedence(moves, mode);
    REQUIRE(dag.edges.size() == 1);
    CHECK(dag.edges[0] == PrecedenceEdge{1, 2, true});
  }
}

TEST_CASE("build_precedence: departure before the next arrival into a cell") {
  std::vector<MoveRecord> moves = {{"A", 5, 2, 1}, {"B", 6, 5, 2}};
  auto cons = build_precedence(moves, ScheduleMode::Conservative);
  REQUIRE(cons.edges.size() == 1);
  CHECK(cons.edges[0] == PrecedenceEdge{1, 2, true});
  auto aggr = build_precedence(moves, ScheduleMode::Aggressive);
  REQUIRE(aggr.edges.size() == 1);
  CHECK(aggr.edges[0] == PrecedenceEdge{1, 2, false});
}

TEST_CASE("build_precedence: demo path cell-reuse edges") {
  auto moves = extract_moves(demo_path());
  auto dag = build_precedence(moves, ScheduleMode::Conservative);
  CHECK(has_edge(dag, 1, 2, true));    // cell 5
  CHECK(has_edge(dag, 4, 5, true));    // cell 8
  CHECK(has_edge(dag, 3, 4, true));    // cell 9
  CHECK(has_edge(dag, 6, 7, true));    // cell 4
  CHECK(has_edge(dag, 7, 8, true));    // cell 7
  CHECK(has_edge(dag, 9, 10, true));   // cell 11
  CHECK(has_edge(dag, 2, 11, true));   // cell 6

  // full edge set matches the event-scan oracle
  auto expected = expected_edges(moves);
  std::set<std::pair<int, int>> got;
  for (const PrecedenceEdge& e : dag.edges) {
    CHECK(e.strict);  // everything is strict at the conservative level
    got.insert({e.before_seq, e.after_seq});
  }
  CHECK(got == expected);
}

TEST_CASE("precedence DAGs from random paths are acyclic in path order") {
  std::mt19937 rng(31);
  for (int round = 0; round < 50; ++round) {
    auto path = testsupport::random_path(rng, 12);
    auto moves = extract_moves(path);
    for (ScheduleMode mode : {ScheduleMode::Conservative, ScheduleMode::Aggressive}) {
      auto dag = build_precedence(moves, mode);
      for (const PrecedenceEdge& e : dag.edges) CHECK(e.before_seq < e.after_seq);
      CHECK_NOTHROW(earliest_schedule(dag));
    }
  }
}

TEST_CASE("earliest_schedule: single move lands at step 1") {
  std::vector<MoveRecord> moves = {{"A", 1, 2, 1}};
  for (ScheduleMode mode : {ScheduleMode::Conservative, ScheduleMode::Aggressive}) {
    auto sched = earliest_schedule(build_precedence(moves, mode));
    CHECK(sched.makespan == 1);
    CHECK(sched.objective == 1);
    CHECK(sched.step == std::vector<int>{1});
  }
}

TEST_CASE("earliest_schedule: demo path compresses to 9 and 4 steps") {
  auto moves = extract_moves(demo_path());
  auto cons = earliest_schedule(build_precedence(moves, ScheduleMode::Conservative));
  CHECK(cons.makespan == 9);
  auto aggr = earliest_schedule(build_precedence(moves, ScheduleMode::Aggressive));
  CHECK(aggr.makespan == 4);
}

TEST_CASE("earliest_schedule rejects cyclic input") {
  PrecedenceDag dag;
  dag.moves = {{"A", 1, 2, 1}, {"B", 3, 1, 2}};
  dag.edges = {{2, 1, true}};  // against path order
  CHECK_THROWS_AS(earliest_schedule(dag), CyclicPrecedence);
}

TEST_CASE("brute_force_schedule: base cases") {
  std::vector<MoveRecord> one = {{"A", 1, 2, 1}};
  auto sched = brute_force_schedule(one, ScheduleMode::Conservative, 3);
  CHECK(sched.makespan == 1);
  CHECK(sched.objective == 1);

  // independent vehicles both move at step 1 in either mode
  std::vector<MoveRecord> indep = {{"A", 1, 2, 1}, {"B", 11, 12, 2}};
  for (ScheduleMode mode : {ScheduleMode::Conservative, ScheduleMode::Aggressive}) {
    auto s = brute_force_schedule(indep, mode, 4);
    CHECK(s.makespan == 1);
    CHECK(s.step == std::vector<int>{1, 1});
  }

  CHECK_THROWS_AS(brute_force_schedule(one, ScheduleMode::Conservative, 0),
                  BoundTooSmall);
  std::vector<MoveRecord> chain = {{"A", 1, 2, 1}, {"A", 2, 4, 2}};
  CHECK_THROWS_AS(brute_force_schedule(chain, ScheduleMode::Aggressive, 1),
                  BoundTooSmall);
}

TEST_CASE("earliest_schedule matches brute force on demo path prefixes") {
  auto moves = extract_moves(demo_path());
  for (size_t len : {4u, 6u, 8u}) {
    std::vector<MoveRecord> prefix(moves.begin(), moves.begin() + len);
    for (ScheduleMode mode : {ScheduleMode::Conservative, ScheduleMode::Aggressive}) {
      auto fast = earliest_schedule(build_precedence(prefix, mode));
      auto exact = brute_force_schedule(prefix, mode, static_cast<int>(len));
      CHECK(fast.objective == exact.objective);
      CHECK(fast.makespan == exact.makespan);
    }
  }
}

TEST_CASE("earliest_schedule is optimal on random short paths") {
  std::mt19937 rng(37);
  int rounds = 0;
  while (rounds < 110) {
    auto path = testsupport::random_path(rng, 8);
    auto moves = extract_moves(path);
    if (moves.empty()) continue;
    ++rounds;
    for (ScheduleMode mode : {ScheduleMode::Conservative, ScheduleMode::Aggressive}) {
      auto fast = earliest_schedule(build_precedence(moves, mode));
      auto exact = brute_force_schedule(moves, mode,
                                        static_cast<int>(moves.size()));
      CHECK(fast.objective == exact.objective);
      CHECK(fast.makespan == exact.makespan);
      // round-trip validity and dominance
      CHECK(validate_schedule(path.states[0], fast).ok);
    }
    auto cons = earliest_schedule(build_precedence(moves, ScheduleMode::Conservative));
    auto aggr = earliest_schedule(build_precedence(moves, ScheduleMode::Aggressive));
    CHECK(aggr.makespan <= cons.makespan);
    CHECK(cons.makespan <= static_cast<int>(moves.size()));
  }
}

TEST_CASE("validate_schedule accepts both demo schedules and replays the goal") {
  auto path = demo_path();
  auto moves = extract_moves(path);
  for (ScheduleMode mode : {ScheduleMode::Conservative, ScheduleMode::Aggressive}) {
    auto sched = earliest_schedule(build_precedence(moves, mode));
    auto report = validate_schedule(path.states[0], sched);
    CHECK(report.ok);
    CHECK(report.violations.empty());
    // conservation: the replayed occupancy is the path's final state
    CHECK(state_key(report.final_state) == state_key(path.states.back()));
  }
}

TEST_CASE("validate_schedule: same-step swap is a collision") {
  GridSpec spec{2, 2, 7.0, 3.5};
  PlatoonState initial(spec, {{Vehicle{"A", "left", 0.0}, 1},
                              {Vehicle{"B", "left", 0.0}, 2}});
  Schedule swap;
  swap.moves = {{"A", 1, 2, 1}, {"B", 2, 1, 2}};
  swap.step = {1, 1};
  swap.makespan = 1;
  swap.objective = 2;
  swap.mode = ScheduleMode::Aggressive;
  auto report = validate_schedule(initial, swap);
  CHECK_FALSE(report.ok);
  REQUIRE(!report.violations.empty());
  CHECK(report.violations[0].what.find("cyclic") != std::string::npos);

  // a chain, by contrast, linearizes: B vacates 2 into 4 while A fills 2
  Schedule chain;
  chain.moves = {{"B", 2, 4, 1}, {"A", 1, 2, 2}};
  chain.step = {1, 1};
  chain.makespan = 1;
  chain.objective = 2;
  chain.mode = ScheduleMode::Aggressive;
  CHECK(validate_schedule(initial, chain).ok);

  // conservative rejects the same chain: cell 2 was not empty beforehand
  chain.mode = ScheduleMode::Conservative;
  auto strict = validate_schedule(initial, chain);
  CHECK_FALSE(strict.ok);
}

TEST_CASE("validate_schedule reports movers displaced from their origin") {
  GridSpec spec{2, 2, 7.0, 3.5};
  PlatoonState initial(spec, {{Vehicle{"A", "left", 0.0}, 1}});
  Schedule bad;
  bad.moves = {{"A", 2, 4, 1}};  // A is at 1, not 2
  bad.step = {1};
  bad.makespan = 1;
  bad.objective = 1;
  bad.mode = ScheduleMode::Conservative;
  auto report = validate_schedule(initial, bad);
  CHECK_FALSE(report.ok);
}

}  // TEST_SUITE
