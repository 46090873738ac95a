#include "scycle/long_cycle.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace scycle {

namespace {

std::vector<std::vector<Vertex>> biconnected_blocks(const Graph& g) {
  const std::size_t n = g.universe();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Vertex>> blocks;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  for (Vertex root : g.vertices()) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (disc[w] < 0) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Vertex child = f.v;
      stack.pop_back();
      if (stack.empty()) break;
      Vertex u = stack.back().v;
      low[u] = std::min(low[u], low[child]);
      if (low[child] >= disc[u]) {
        std::vector<Vertex> block;
        while (!edge_stack.empty()) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e == Edge{u, child}) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front() || (a.front() == b.front() && a < b); });
  return blocks;
}

// Per-query search state with generation-stamped scratch arrays.
class BlockSearch {
 public:
  BlockSearch(const Graph& g, Vertex start, int ell)
      : g_(g), start_(start), ell_(ell), in_block_(g.universe(), 0), on_path_(g.universe(), 0),
        seen_(g.universe(), 0), parent_(g.universe(), -1) {}

  std::optional<Cycle> run(const std::vector<Vertex>& block) {
    ++block_gen_;
    for (Vertex v : block) in_block_[v] = block_gen_;
    path_.assign(1, start_);
    on_path_[start_] = block_gen_;
    return extend();
  }

 private:
  bool in_block(Vertex v) const { return in_block_[v] == block_gen_; }
  bool on_path(Vertex v) const { return on_path_[v] == block_gen_; }

  // BFS from `from` to start_ through block vertices off the current path.
  bool reach_start(Vertex from) {
    ++seen_gen_;
    std::deque<Vertex> queue{from};
    seen_[from] = seen_gen_;
    parent_[from] = -1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g_.neighbors(u)) {
        if (!in_block(w) || seen_[w] == seen_gen_) continue;
        if (w == start_) {
          // The path edge back to start_ is not a return route.
          if (u == from && path_.size() == 2) continue;
          parent_[w] = u;
          seen_[w] = seen_gen_;
          return true;
        }
        if (on_path(w)) continue;
        seen_[w] = seen_gen_;
        parent_[w] = u;
        queue.push_back(w);
      }
    }
    return false;
  }

  std::optional<Cycle> extend() {
    const Vertex tip = path_.back();
    if (path_.size() == static_cast<std::size_t>(ell_)) {
      if (!reach_start(tip)) return std::nullopt;
      std::vector<Vertex> seq = path_;
      std::vector<Vertex> back;
      for (Vertex x = parent_[start_]; x != tip; x = parent_[x]) back.push_back(x);
      seq.insert(seq.end(), back.rbegin(), back.rend());
      return Cycle(std::move(seq));
    }
    for (Vertex w : g_.neighbors(tip)) {
      if (!in_block(w) || on_path(w)) continue;
      path_.push_back(w);
      on_path_[w] = block_gen_;
      bool viable = path_.size() == static_cast<std::size_t>(ell_) || reach_start(w);
      if (viable) {
        if (auto c = extend()) return c;
      }
      on_path_[w] = 0;
      path_.pop_back();
    }
    return std::nullopt;
  }

  const Graph& g_;
  Vertex start_;
  int ell_;
  std::vector<int> in_block_, on_path_, seen_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> path_;
  int block_gen_ = 0, seen_gen_ = 0;
};

}  // namespace

LongCycleSearcher::LongCycleSearcher(const Graph& g)
    : g_(g), blocks_(biconnected_blocks(g)), blocks_of_(g.universe()) {
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (Vertex v : blocks_[b]) blocks_of_[v].push_back(static_cast<int>(b));
}

std::optional<Cycle> LongCycleSearcher::through(Vertex v, int ell) const {
  if (!g_.alive(v)) return std::nullopt;
  const int target = effective_length(ell);
  BlockSearch search(g_, v, target);
  for (int b : blocks_of_[v]) {
    const auto& block = blocks_[b];
    if (block.size() < static_cast<std::size_t>(target)) continue;
    if (auto c = search.run(block)) return c;
  }
  return std::nullopt;
}

std::optional<Cycle> long_cycle_through(const Graph& g, Vertex v, int ell) {
  return LongCycleSearcher(g).through(v, ell);
}

std::optional<Cycle> find_long_s_cycle(const Graph& g, const VertexSet& s, int ell) {
  if (s.empty()) return std::nullopt;
  LongCycleSearcher searcher(g);
  for (Vertex v : s.members())
    if (auto c = searcher.through(v, ell)) return c;
  return std::nullopt;
}

}  // namespace scycle
