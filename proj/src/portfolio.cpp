#include "platoon/portfolio.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>
#include <unordered_map>

namespace platoon {

void PortfolioConfig::validate() const {
  if (seeds.empty()) throw InvalidParams("portfolio needs at least one seed");
  std::set<std::uint64_t> distinct(seeds.begin(), seeds.end());
  if (distinct.size() != seeds.size())
    throw InvalidParams("portfolio seeds must be distinct");
  if (modes.empty()) throw InvalidParams("portfolio needs at least one schedule mode");
  if (time_limit_s && !(*time_limit_s > 0.0))
    throw InvalidParams("time limit must be positive");
  params.validate();
}

PortfolioResult run_portfolio(const PlatoonState& initial,
                              const GoalSpec& goals,
                              const PortfolioConfig& config) {
  config.validate();

  const size_t n = config.seeds.size();
  std::vector<RunRecord> runs(n);

  SearchOptions opts;
  opts.time_limit_s = config.time_limit_s;

  // share-nothing workers: each owns its whole search; results land in
  // pre-sized slots, so the outcome is independent of interleaving
  auto work = [&](size_t slot) {
    const auto t0 = std::chrono::steady_clock::now();
    RunRecord& rec = runs[slot];
    rec.seed = config.seeds[slot];
    SolveResult solved = solve_sorting(initial, goals, config.params,
                                       config.kind, opts, rec.seed);
    rec.status = solved.status;
    rec.stats = solved.stats;
    if (solved.status == SearchStatus::Found) {
      rec.path = std::move(solved.path);
      rec.cost = rec.path.total_cost;
      rec.path_key = move_sequence_key(rec.path.moves);
    }
    rec.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
  };

  unsigned width = config.threads != 0 ? config.threads
                                       : std::max(1u, std::thread::hardware_concurrency());
  width = std::min<unsigned>(width, static_cast<unsigned>(n));
  if (width <= 1) {
    for (size_t i = 0; i < n; ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(width);
    for (unsigned t = 0; t < width; ++t)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) work(i);
      });
    for (std::thread& t : pool) t.join();
  }

  // deduplicate paths by canonical move sequence, first occurrence wins
  std::unordered_map<std::string, size_t> first_run_of;
  std::vector<size_t> distinct;  // run indices
  for (size_t i = 0; i < n; ++i) {
    if (runs[i].status != SearchStatus::Found) continue;
    if (first_run_of.emplace(runs[i].path_key, i).second) distinct.push_back(i);
  }
  if (distinct.empty())
    throw AllRunsTimedOut("no portfolio run produced a path");

  // compress each distinct path once per mode, then share the schedules
  // with every run that found the same path
  std::unordered_map<std::string, std::map<ScheduleMode, Schedule>> schedules;
  for (size_t i : distinct) {
    auto moves = extract_moves(runs[i].path);
    for (ScheduleMode mode : config.modes)
      schedules[runs[i].path_key].emplace(
          mode, earliest_schedule(build_precedence(moves, mode)));
  }
  for (RunRecord& rec : runs)
    if (rec.status == SearchStatus::Found) rec.schedules = schedules[rec.path_key];

  PortfolioResult result;
  result.distinct_paths = static_cast<int>(distinct.size());
  result.runs = std::move(runs);

  auto better = [](const BestPlan& a, const BestPlan& b) {
    if (a.schedule.makespan != b.schedule.makespan)
      return a.schedule.makespan < b.schedule.makespan;
    if (a.schedule.objective != b.schedule.objective)
      return a.schedule.objective < b.schedule.objective;
    return move_sequence_key(a.path.moves) < move_sequence_key(b.path.moves);
  };

  bool have_best = false;
  for (ScheduleMode mode : config.modes) {
    bool have_mode_best = false;
    BestPlan mode_best;
    for (size_t i : distinct) {
      const RunRecord& rec = result.runs[i];
      BestPlan plan{rec.path, mode, rec.schedules.at(mode)};
      if (!have_mode_best || better(plan, mode_best)) {
        mode_best = std::move(plan);
        have_mode_best = true;
      }
    }
    if (!have_best || better(mode_best, result.best)) {
      result.best = mode_best;
      have_best = true;
    }
    result.best_per_mode.emplace(mode, std::move(mode_best));
  }
  return result;
}

PortfolioSummary aggregate_stats(const std::vector<RunRecord>& runs) {
  if (runs.empty()) throw InvalidParams("no runs to aggregate");
  PortfolioSummary out;
  out.runs = static_cast<int>(runs.size());

  double total = 0.0;
  std::set<std::string> distinct;
  bool first = true;
  for (const RunRecord& rec : runs) {
    if (rec.status == SearchStatus::Found) {
      ++out.successes;
      distinct.insert(rec.path_key);
    } else {
      ++out.timeouts;
    }
    total += rec.elapsed_s;
    if (first) {
      out.min_elapsed_s = out.max_elapsed_s = rec.elapsed_s;
      first = false;
    } else {
      out.min_elapsed_s = std::min(out.min_elapsed_s, rec.elapsed_s);
      out.max_elapsed_s = std::max(out.max_elapsed_s, rec.elapsed_s);
    }
  }
  out.mean_elapsed_s = total / static_cast<double>(runs.size());
  out.distinct_paths = static_cast<int>(distinct.size());

  std::set<ScheduleMode> modes;
  for (const RunRecord& rec : runs)
    for (const auto& [mode, sched] : rec.schedules) modes.insert(mode);

  for (ScheduleMode mode : modes) {
    ModeSummary ms;
    int n = 0;
    for (const RunRecord& rec : runs) {
      auto it = rec.schedules.find(mode);
      if (it == rec.schedules.end()) continue;
      ++n;
      ++ms.makespan_hist[it->second.makespan];
    }
    if (n == 0) continue;
    ms.best_makespan = ms.makespan_hist.begin()->first;
    const int b = ms.makespan_hist.begin()->second;  // runs achieving the best

    // P(random k-subset of the n runs contains a best run)
    //   = 1 - C(n-b, k)/C(n, k), evaluated as a telescoping product
    ms.prob_best_by_k.resize(static_cast<size_t>(n));
    ms.k_star = 0;
    for (int k = 1; k <= n; ++k) {
      double miss = 1.0;
      for (int i = 0; i < k; ++i) {
        const double num = static_cast<double>(n - b - i);
        const double den = static_cast<double>(n - i);
        miss *= num > 0.0 ? num / den : 0.0;
      }
      const double p = 1.0 - miss;
      ms.prob_best_by_k[static_cast<size_t>(k - 1)] = p;
      if (ms.k_star == 0 && p > 0.9999) ms.k_star = k;
    }
    out.modes.emplace(mode, std::move(ms));
  }
  return out;
}

}  // namespace platoon
