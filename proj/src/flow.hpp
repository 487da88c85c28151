#pragma once

#include <limits>
#include <vector>

namespace edgekeep::detail {

// Dinic max-flow over integer capacities. Node ids are 0..nodes-1.
class FlowNetwork {
 public:
  static constexpr int infinite = std::numeric_limits<int>::max() / 4;

  explicit FlowNetwork(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

  // Arc from -> to with capacity cap; the paired reverse arc gets reverse_cap.
  void add_arc(int from, int to, int cap, int reverse_cap = 0) {
    arcs_.push_back({to, cap, head_[static_cast<std::size_t>(from)]});
    head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, reverse_cap, head_[static_cast<std::size_t>(to)]});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
  }

  // Pushes flow from s to t, stopping once `limit` units have been routed.
  int max_flow(int s, int t, int limit = infinite) {
    int total = 0;
    while (total < limit && bfs(s, t)) {
      iter_ = head_;
      while (total < limit) {
        int pushed = dfs(s, t, limit - total);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  // Nodes reachable from s in the residual network (valid after max_flow
  // ran to completion, i.e. without hitting its limit).
  std::vector<char> residual_reach(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int a = head_[static_cast<std::size_t>(u)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
          seen[static_cast<std::size_t>(arc.to)] = 1;
          stack.push_back(arc.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int next;
  };

  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::vector<int> queue{s};
    level_[static_cast<std::size_t>(s)] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int a = head_[static_cast<std::size_t>(u)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
          level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(u)] + 1;
          queue.push_back(arc.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  int dfs(int u, int t, int want) {
    if (u == t) return want;
    for (int& a = iter_[static_cast<std::size_t>(u)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
      Arc& arc = arcs_[static_cast<std::size_t>(a)];
      if (arc.cap <= 0 || level_[static_cast<std::size_t>(arc.to)] != level_[static_cast<std::size_t>(u)] + 1)
        continue;
      int got = dfs(arc.to, t, want < arc.cap ? want : arc.cap);
      if (got > 0) {
        arc.cap -= got;
        arcs_[static_cast<std::size_t>(a ^ 1)].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace edgekeep::detail
