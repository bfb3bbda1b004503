#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "platoon/schedule.hpp"
#include "platoon/solver.hpp"

namespace platoon {

// Seeded stochastic-search portfolio. Workers share nothing; one worker per
// seed. threads caps execution width only and never affects results.
struct PortfolioConfig {
  std::vector<std::uint64_t> seeds;  // distinct; workers == seeds.size()
  std::optional<double> time_limit_s;  // per run
  std::vector<ScheduleMode> modes = {ScheduleMode::Conservative,
                                     ScheduleMode::Aggressive};
  CostParams params;
  HeuristicKind kind{BaseHeuristic::Manhattan, /*stochastic=*/true};
  unsigned threads = 0;  // 0 = hardware concurrency

  void validate() const;
};

struct RunRecord {
  std::uint64_t seed = 0;
  SearchStatus status = SearchStatus::NoPath;
  SortingPath path;  // empty unless Found
  double cost = 0.0;
  double elapsed_s = 0.0;
  SearchStats stats;
  std::string path_key;  // canonical move-sequence key, "" on failure
  std::map<ScheduleMode, Schedule> schedules;  // per requested mode
};

struct BestPlan {
  SortingPath path;
  ScheduleMode mode = ScheduleMode::Conservative;
  Schedule schedule;
};

struct PortfolioResult {
  BestPlan best;  // minimum makespan; ties by objective, then move sequence
  std::map<ScheduleMode, BestPlan> best_per_mode;
  int distinct_paths = 0;
  std::vector<RunRecord> runs;  // in seed-list order
};

// Runs one stochastic solve per seed, deduplicates the returned paths by
// move sequence, compresses each distinct path in each requested mode and
// selects the minimum-makespan plan. Deterministic for a given seed list
// regardless of thread interleaving. Throws AllRunsTimedOut when no run
// produces a path.
PortfolioResult run_portfolio(const PlatoonState& initial,
                              const GoalSpec& goals,
                              const PortfolioConfig& config);

struct ModeSummary {
  std::map<int, int> makespan_hist;  // makespan -> number of runs
  int best_makespan = 0;
  // prob_best_by_k[k-1]: probability that a uniformly random k-subset of
  // the runs contains at least one best-makespan run, by exact counting.
  std::vector<double> prob_best_by_k;
  int k_star = 0;  // smallest k with probability > 0.9999
};

struct PortfolioSummary {
  int runs = 0;
  int successes = 0;
  int timeouts = 0;
  int distinct_paths = 0;
  double min_elapsed_s = 0.0;
  double max_elapsed_s = 0.0;
  double mean_elapsed_s = 0.0;
  std::map<ScheduleMode, ModeSummary> modes;
};

// Aggregates run records: per-mode step-count histograms, runtime extremes
// and the k-subset best-result probability curve.
PortfolioSummary aggregate_stats(const std::vector<RunRecord>& runs);

}  // namespace platoon
