#include "scycle/cubic_packing.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "scycle/errors.hpp"

namespace scycle {

int Multigraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= degree_.size() ||
      static_cast<std::size_t>(v) >= degree_.size())
    throw std::out_of_range("multigraph edge endpoint out of range");
  ends_.emplace_back(u, v);
  ++degree_[u];
  ++degree_[v];
  return static_cast<int>(ends_.size()) - 1;
}

std::size_t Multigraph::count_degree(int d) const {
  return static_cast<std::size_t>(std::count(degree_.begin(), degree_.end(), d));
}

std::size_t s_threshold_or_zero(int k) {
  if (k <= 0) return 0;
  if (k == 1) return 1;
  const double lk = std::log2(static_cast<double>(k));
  const double value = 4.0 * k * (lk + std::log2(lk) + 4.0);
  // Exact powers of two land on integers; keep them from rounding up.
  return static_cast<std::size_t>(std::ceil(value - 1e-9));
}

std::size_t s_threshold(int k) {
  if (k < 1) throw std::invalid_argument("s_threshold requires k >= 1");
  return s_threshold_or_zero(k);
}

namespace {

// Working copy of the multigraph during peeling. Each working edge remembers
// the chain of original edges and the original vertices it replaced.
class Peeler {
 public:
  explicit Peeler(const Multigraph& mg)
      : incident_(mg.vertex_count()), vertex_alive_(mg.vertex_count(), 1) {
    for (std::size_t id = 0; id < mg.edge_count(); ++id) {
      auto [u, v] = mg.edge(static_cast<int>(id));
      add_edge(u, v, {}, {static_cast<int>(id)});
    }
  }

  std::vector<MultiCycle>& found() { return found_; }

  void normalize_all() {
    for (std::size_t v = 0; v < vertex_alive_.size(); ++v) worklist_.push_back(static_cast<int>(v));
    normalize();
  }

  bool extract_shortest() {
    MultiCycle work;
    if (!shortest_cycle(work)) return false;
    found_.push_back(expand(work));
    for (int v : work.vertices) kill_vertex(v);
    normalize();
    return true;
  }

 private:
  struct WorkEdge {
    int u, v;
    std::vector<int> inner;  // original vertices strictly between u and v
    std::vector<int> chain;  // original edge ids from u to v
    bool alive = true;
  };

  int add_edge(int u, int v, std::vector<int> inner, std::vector<int> chain) {
    edges_.push_back({u, v, std::move(inner), std::move(chain)});
    int id = static_cast<int>(edges_.size()) - 1;
    incident_[u].push_back(id);
    incident_[v].push_back(id);
    return id;
  }

  const std::vector<int>& live_incidence(int x) {
    auto& inc = incident_[x];
    std::erase_if(inc, [&](int e) { return !edges_[e].alive; });
    return inc;
  }

  int other_end(int e, int x) const { return edges_[e].u == x ? edges_[e].v : edges_[e].u; }

  // Appends the inner vertices and chain of `e` walked starting at `from`.
  void walk(int e, int from, std::vector<int>& inner, std::vector<int>& chain) const {
    const WorkEdge& we = edges_[e];
    if (we.u == from) {
      inner.insert(inner.end(), we.inner.begin(), we.inner.end());
      chain.insert(chain.end(), we.chain.begin(), we.chain.end());
    } else {
      inner.insert(inner.end(), we.inner.rbegin(), we.inner.rend());
      chain.insert(chain.end(), we.chain.rbegin(), we.chain.rend());
    }
  }

  void kill_vertex(int x) {
    if (!vertex_alive_[x]) return;
    vertex_alive_[x] = 0;
    for (int e : incident_[x]) {
      if (!edges_[e].alive) continue;
      edges_[e].alive = false;
      worklist_.push_back(other_end(e, x));
    }
    incident_[x].clear();
  }

  void normalize() {
    while (!worklist_.empty()) {
      int x = worklist_.front();
      worklist_.pop_front();
      if (!vertex_alive_[x]) continue;
      const auto& inc = live_incidence(x);
      if (inc.size() <= 1) {
        kill_vertex(x);
      } else if (inc.size() == 2 && inc[0] == inc[1]) {
        int e = inc[0];
        MultiCycle c;
        c.vertices.push_back(x);
        walk(e, x, c.vertices, c.edges);
        found_.push_back(std::move(c));
        edges_[e].alive = false;
        vertex_alive_[x] = 0;
        incident_[x].clear();
      } else if (inc.size() == 2) {
        int e1 = inc[0], e2 = inc[1];
        int a = other_end(e1, x), b = other_end(e2, x);
        std::vector<int> inner, chain;
        // a -> x along e1, then x -> b along e2.
        std::vector<int> tmp_inner, tmp_chain;
        walk(e1, x, tmp_inner, tmp_chain);
        inner.assign(tmp_inner.rbegin(), tmp_inner.rend());
        chain.assign(tmp_chain.rbegin(), tmp_chain.rend());
        inner.push_back(x);
        walk(e2, x, inner, chain);
        edges_[e1].alive = false;
        edges_[e2].alive = false;
        vertex_alive_[x] = 0;
        incident_[x].clear();
        add_edge(a, b, std::move(inner), std::move(chain));
        worklist_.push_back(a);
        worklist_.push_back(b);
      }
    }
  }

  // Shortest cycle of the working graph as working vertices/edges.
  bool shortest_cycle(MultiCycle& out) {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (edges_[e].alive && edges_[e].u == edges_[e].v) {
        out.vertices = {edges_[e].u};
        out.edges = {static_cast<int>(e)};
        return true;
      }
    }
    const std::size_t n = vertex_alive_.size();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    int best_u = -1, best_w = -1, best_e = -1;
    std::vector<int> best_parent_edge;
    std::vector<int> dist(n), parent_edge(n);
    for (std::size_t root = 0; root < n && best > 2; ++root) {
      if (!vertex_alive_[root]) continue;
      std::fill(dist.begin(), dist.end(), -1);
      std::fill(parent_edge.begin(), parent_edge.end(), -1);
      std::deque<int> queue{static_cast<int>(root)};
      dist[root] = 0;
      bool improved = false;
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (static_cast<std::size_t>(2 * dist[u] + 1) >= best) break;
        for (int e : live_incidence(u)) {
          if (e == parent_edge[u]) continue;
          int w = other_end(e, u);
          if (dist[w] < 0) {
            dist[w] = dist[u] + 1;
            parent_edge[w] = e;
            queue.push_back(w);
          } else {
            std::size_t len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
            if (len < best) {
              best = len;
              best_u = u;
              best_w = w;
              best_e = e;
              improved = true;
            }
          }
        }
      }
      if (improved) best_parent_edge = parent_edge;
    }
    if (best_e < 0) return false;

    auto climb = [&](int start, std::vector<int>& verts, std::vector<int>& via) {
      int x = start;
      verts.push_back(x);
      while (best_parent_edge[x] >= 0) {
        via.push_back(best_parent_edge[x]);
        x = other_end(best_parent_edge[x], x);
        verts.push_back(x);
      }
    };
    std::vector<int> up_u, via_u, up_w, via_w;
    climb(best_u, up_u, via_u);
    climb(best_w, up_w, via_w);
    std::size_t iw = 0, iu = 0;
    for (; iw < up_w.size(); ++iw) {
      auto it = std::find(up_u.begin(), up_u.end(), up_w[iw]);
      if (it != up_u.end()) {
        iu = static_cast<std::size_t>(it - up_u.begin());
        break;
      }
    }
    out.vertices.clear();
    out.edges.clear();
    for (std::size_t j = iu + 1; j-- > 0;) out.vertices.push_back(up_u[j]);
    for (std::size_t j = 0; j < iw; ++j) out.vertices.push_back(up_w[j]);
    for (std::size_t j = iu; j-- > 0;) out.edges.push_back(via_u[j]);
    out.edges.push_back(best_e);
    for (std::size_t j = 0; j < iw; ++j) out.edges.push_back(via_w[j]);
    return true;
  }

  MultiCycle expand(const MultiCycle& work) const {
    MultiCycle c;
    for (std::size_t i = 0; i < work.vertices.size(); ++i) {
      c.vertices.push_back(work.vertices[i]);
      walk(work.edges[i], work.vertices[i], c.vertices, c.edges);
    }
    return c;
  }

  std::vector<WorkEdge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<char> vertex_alive_;
  std::deque<int> worklist_;
  std::vector<MultiCycle> found_;
};

}  // namespace

std::vector<MultiCycle> pack_cycles(const Multigraph& mg, int k) {
  for (std::size_t v = 0; v < mg.vertex_count(); ++v) {
    int d = mg.degree(static_cast<int>(v));
    if (d != 2 && d != 3)
      throw std::invalid_argument("pack_cycles: vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(d));
  }
  Peeler peeler(mg);
  peeler.normalize_all();
  while (peeler.found().size() < static_cast<std::size_t>(std::max(k, 0)) && peeler.extract_shortest()) {
  }
  auto& cycles = peeler.found();
  if (cycles.size() < static_cast<std::size_t>(std::max(k, 0))) {
    if (k >= 1 && mg.count_degree(3) < s_threshold(k))
      throw InsufficientBranchVertices("multigraph has " + std::to_string(mg.count_degree(3)) +
                                       " degree-3 vertices, fewer than s_k = " +
                                       std::to_string(s_threshold(k)));
    throw PackingShortfall("peeling found " + std::to_string(cycles.size()) + " cycles, needed " +
                           std::to_string(k));
  }
  return std::move(cycles);
}

bool is_multicycle_in(const Multigraph& mg, const MultiCycle& c) {
  const std::size_t t = c.vertices.size();
  if (t == 0 || c.edges.size() != t) return false;
  std::set<int> seen_v(c.vertices.begin(), c.vertices.end());
  std::set<int> seen_e(c.edges.begin(), c.edges.end());
  if (seen_v.size() != t || seen_e.size() != t) return false;
  for (std::size_t i = 0; i < t; ++i) {
    int e = c.edges[i];
    if (e < 0 || static_cast<std::size_t>(e) >= mg.edge_count()) return false;
    int a = c.vertices[i], b = c.vertices[(i + 1) % t];
    auto [u, v] = mg.edge(e);
    if (!((u == a && v == b) || (u == b && v == a))) return false;
  }
  return true;
}

}  // namespace scycle
