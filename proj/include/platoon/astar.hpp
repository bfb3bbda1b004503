#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <unordered_map>
#include <vector>

namespace platoon {

struct SearchOptions {
  std::optional<double> time_limit_s;  // wall clock, > 0 when present
  bool allow_reopen = true;
};

enum class SearchStatus { Found, NoPath, TimedOut };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NoPath: return "no_path";
    case SearchStatus::TimedOut: return "timed_out";
  }
  return "?";
}

struct SearchStats {
  std::int64_t explored = 0;   // distinct nodes closed
  std::int64_t generated = 0;  // distinct nodes assigned an id
  std::int64_t reopened = 0;
  double elapsed_s = 0.0;
  double f_initial = 0.0;  // f of the start node
  double f_final = 0.0;    // f at termination (= path cost on success)
};

template <class Node>
struct AStarResult {
  SearchStatus status = SearchStatus::NoPath;
  std::vector<Node> path;  // start .. goal inclusive when found
  double cost = 0.0;
  SearchStats stats;
};

namespace detail {
struct NullExpandObserver {
  template <class Node>
  void operator()(const Node&, double /*g*/, double /*f*/) const {}
};
}  // namespace detail

// A* over an implicit graph. Nodes are interned on first generation and
// given sequential ids; ties on f are broken by smallest id, which makes
// the expansion order FIFO in generation order and fully deterministic for
// deterministic successor enumeration. When a cheaper route to a node is
// found its g and parent are rewritten (stale queue entries are skipped on
// pop); closed nodes are reopened on improvement when opts.allow_reopen,
// which keeps the search optimal even for admissible-but-inconsistent
// heuristics. Edge costs must be nonnegative and h finite.
//
// successors(node) -> iterable of std::pair<Node, double>
// observer(node, g, f) is called once per expansion, in expansion order.
template <class Node, class IsGoal, class Successors, class Heuristic,
          class Hash = std::hash<Node>, class Eq = std::equal_to<Node>,
          class Observer = detail::NullExpandObserver>
AStarResult<Node> astar(const Node& start, IsGoal&& is_goal,
                        Successors&& successors, Heuristic&& heuristic,
                        const SearchOptions& opts = {},
                        Observer&& observer = {}) {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - t0).count(); };

  AStarResult<Node> result;

  struct Entry {
    double f;
    double g;  // g at push time; entry is stale if it no longer matches
    std::int64_t id;
  };
  struct EntryCmp {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.f != b.f) return a.f > b.f;
      return a.id > b.id;
    }
  };

  std::unordered_map<Node, std::int64_t, Hash, Eq> ids;
  std::vector<const Node*> node_of;  // id -> key in `ids` (pointer-stable)
  std::vector<double> g_of;
  std::vector<double> h_of;
  std::vector<std::int64_t> parent_of;
  std::vector<char> closed;

  auto intern = [&](const Node& n) -> std::int64_t {
    auto [it, inserted] = ids.try_emplace(n, static_cast<std::int64_t>(node_of.size()));
    if (inserted) {
      node_of.push_back(&it->first);
      g_of.push_back(std::numeric_limits<double>::infinity());
      h_of.push_back(heuristic(it->first));
      parent_of.push_back(-1);
      closed.push_back(0);
    }
    return it->second;
  };

  std::priority_queue<Entry, std::vector<Entry>, EntryCmp> open;

  const std::int64_t start_id = intern(start);
  g_of[static_cast<std::size_t>(start_id)] = 0.0;
  open.push({h_of[static_cast<std::size_t>(start_id)], 0.0, start_id});
  result.stats.f_initial = h_of[static_cast<std::size_t>(start_id)];

  auto finish = [&](SearchStatus status) {
    result.status = status;
    result.stats.generated = static_cast<std::int64_t>(node_of.size());
    result.stats.elapsed_s = elapsed();
    return result;
  };

  int ticks = 0;
  while (!open.empty()) {
    if (opts.time_limit_s && (++ticks & 0xff) == 0 && elapsed() > *opts.time_limit_s) {
      result.stats.f_final = open.top().f;  // best frontier estimate so far
      return finish(SearchStatus::TimedOut);
    }

    const Entry top = open.top();
    open.pop();
    const auto uz = static_cast<std::size_t>(top.id);
    if (top.g != g_of[uz] || closed[uz]) continue;  // stale duplicate

    closed[uz] = 1;
    ++result.stats.explored;
    const Node& node = *node_of[uz];
    observer(node, top.g, top.f);

    if (is_goal(node)) {
      result.cost = g_of[uz];
      result.stats.f_final = top.f;
      for (std::int64_t id = top.id; id >= 0; id = parent_of[static_cast<std::size_t>(id)])
        result.path.push_back(*node_of[static_cast<std::size_t>(id)]);
      std::reverse(result.path.begin(), result.path.end());
      return finish(SearchStatus::Found);
    }

    for (auto&& [succ, w] : successors(node)) {
      const std::int64_t vid = intern(succ);
      const auto vz = static_cast<std::size_t>(vid);
      const double ng = g_of[uz] + w;
      if (!(ng < g_of[vz])) continue;
      if (closed[vz]) {
        if (!opts.allow_reopen) continue;
        closed[vz] = 0;
        ++result.stats.reopened;
      }
      g_of[vz] = ng;
      parent_of[vz] = top.id;
      open.push({ng + h_of[vz], ng, vid});
    }
  }

  return finish(SearchStatus::NoPath);
}

}  // namespace platoon
