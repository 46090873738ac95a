// Frame improvement step: given a long S-cycle avoiding the hitting
// candidate, grow the frame or its pendant family so the score increases.

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <string>

#include "scycle/errors.hpp"
#include "scycle/frame.hpp"

namespace scycle {

namespace {

// Small undirected graph on a handful of global vertex ids.
struct LocalGraph {
  std::vector<Vertex> ids;
  std::vector<std::vector<int>> adj;

  static LocalGraph from_edges(std::vector<Edge> edges) {
    LocalGraph lg;
    for (auto& [u, v] : edges) {
      if (u > v) std::swap(u, v);
      lg.ids.push_back(u);
      lg.ids.push_back(v);
    }
    std::sort(lg.ids.begin(), lg.ids.end());
    lg.ids.erase(std::unique(lg.ids.begin(), lg.ids.end()), lg.ids.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    lg.adj.resize(lg.ids.size());
    for (auto [u, v] : edges) {
      int a = lg.index(u), b = lg.index(v);
      lg.adj[a].push_back(b);
      lg.adj[b].push_back(a);
    }
    for (auto& nbrs : lg.adj) std::sort(nbrs.begin(), nbrs.end());
    return lg;
  }

  int index(Vertex v) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    return it != ids.end() && *it == v ? static_cast<int>(it - ids.begin()) : -1;
  }
};

// Successive-shortest-path min-cost flow with unit costs; graphs here have a
// few dozen nodes.
class MinCostFlow {
 public:
  struct Arc {
    int to, rev, cap, cost;
    bool forward;
  };

  explicit MinCostFlow(int nodes) : g_(nodes) {}

  void add_arc(int u, int v, int cap, int cost) {
    g_[u].push_back({v, static_cast<int>(g_[v].size()), cap, cost, true});
    g_[v].push_back({u, static_cast<int>(g_[u].size()) - 1, 0, -cost, false});
  }

  int run(int source, int sink, int want) {
    int flow = 0;
    const int inf = std::numeric_limits<int>::max();
    while (flow < want) {
      std::vector<int> dist(g_.size(), inf), prev_node(g_.size(), -1), prev_arc(g_.size(), -1);
      dist[source] = 0;
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t u = 0; u < g_.size(); ++u) {
          if (dist[u] == inf) continue;
          for (std::size_t i = 0; i < g_[u].size(); ++i) {
            const Arc& a = g_[u][i];
            if (a.cap > 0 && dist[u] + a.cost < dist[a.to]) {
              dist[a.to] = dist[u] + a.cost;
              prev_node[a.to] = static_cast<int>(u);
              prev_arc[a.to] = static_cast<int>(i);
              changed = true;
            }
          }
        }
      }
      if (dist[sink] == inf) break;
      for (int v = sink; v != source; v = prev_node[v]) {
        Arc& a = g_[prev_node[v]][prev_arc[v]];
        a.cap -= 1;
        g_[v][a.rev].cap += 1;
      }
      ++flow;
    }
    return flow;
  }

  std::vector<Arc>& arcs(int u) { return g_[u]; }

 private:
  std::vector<std::vector<Arc>> g_;
};

// Shortest path from some source through `via` to some target in `lg`, with
// no interior vertex in sources or targets.
std::optional<Path> shortest_path_through(const LocalGraph& lg, const std::vector<Vertex>& sources,
                                          Vertex via, const std::vector<Vertex>& targets) {
  const int n = static_cast<int>(lg.ids.size());
  std::vector<char> role(n, 0);  // 1 source, 2 target
  for (Vertex v : sources)
    if (int i = lg.index(v); i >= 0) role[i] = 1;
  for (Vertex v : targets)
    if (int i = lg.index(v); i >= 0) role[i] = 2;
  const int start = lg.index(via);
  if (start < 0) return std::nullopt;

  if (role[start] != 0) {
    // `via` is itself an endpoint: plain BFS to the other side.
    const char goal = role[start] == 1 ? 2 : 1;
    std::vector<int> parent(n, -2);
    std::deque<int> queue{start};
    parent[start] = -1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : lg.adj[u]) {
        if (parent[w] != -2) continue;
        if (role[w] != 0 && role[w] != goal) continue;
        parent[w] = u;
        if (role[w] == goal) {
          Path p;
          for (int x = w; x != -1; x = parent[x]) p.vertices.push_back(lg.ids[x]);
          // Orient source -> target.
          if (goal == 1) return p;
          std::reverse(p.vertices.begin(), p.vertices.end());
          return p;
        }
        queue.push_back(w);
      }
    }
    return std::nullopt;
  }

  // Split nodes: in(x) = 2x, out(x) = 2x + 1; two disjoint unit paths leave
  // out(via), one into the sources and one into the targets.
  const int sink_a = 2 * n, sink_t = 2 * n + 1, super = 2 * n + 2;
  MinCostFlow mcf(2 * n + 3);
  for (int x = 0; x < n; ++x) {
    if (x != start) mcf.add_arc(2 * x, 2 * x + 1, 1, 0);
    if (role[x] == 1) {
      mcf.add_arc(2 * x + 1, sink_a, 1, 0);
      continue;
    }
    if (role[x] == 2) {
      mcf.add_arc(2 * x + 1, sink_t, 1, 0);
      continue;
    }
    for (int y : lg.adj[x])
      if (y != start) mcf.add_arc(2 * x + 1, 2 * y, 1, 1);
  }
  mcf.add_arc(sink_a, super, 1, 0);
  mcf.add_arc(sink_t, super, 1, 0);
  if (mcf.run(2 * start + 1, super, 2) < 2) return std::nullopt;

  std::vector<Vertex> to_source, to_target;
  for (auto& first : mcf.arcs(2 * start + 1)) {
    if (!first.forward || first.cap != 0) continue;
    std::vector<Vertex> leg;
    int node = first.to;  // in(y)
    for (;;) {
      const int x = node / 2;
      leg.push_back(lg.ids[x]);
      int next = -1;
      for (auto& a : mcf.arcs(2 * x + 1))
        if (a.forward && a.cap == 0) next = a.to;
      if (next == sink_a) {
        to_source = leg;
        break;
      }
      if (next == sink_t) {
        to_target = leg;
        break;
      }
      if (next < 0) return std::nullopt;
      node = next;
    }
  }
  if (to_source.empty() || to_target.empty()) return std::nullopt;
  Path p;
  p.vertices.assign(to_source.rbegin(), to_source.rend());
  p.vertices.push_back(via);
  p.vertices.insert(p.vertices.end(), to_target.begin(), to_target.end());
  return p;
}

std::vector<Edge> path_edges(const std::vector<Vertex>& seq) {
  std::vector<Edge> out;
  for (std::size_t i = 1; i < seq.size(); ++i) out.emplace_back(seq[i - 1], seq[i]);
  return out;
}

bool cycles_meet(const Cycle& a, const Cycle& b) {
  return std::any_of(a.vertices().begin(), a.vertices().end(), [&](Vertex v) { return b.contains(v); });
}

Vertex smallest_terminal(const std::vector<Vertex>& vertices, const VertexSet& s) {
  Vertex best = -1;
  for (Vertex v : vertices)
    if (s.contains(v) && (best < 0 || v < best)) best = v;
  return best;
}

// Maximal subpaths of a cycle between consecutive frame vertices.
struct Segment {
  std::vector<Vertex> vertices;
  bool is_h_path;
};

std::vector<Segment> segments_of(const Cycle& c, const Frame& h) {
  const auto& seq = c.vertices();
  const std::size_t t = seq.size();
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < t; ++i)
    if (h.contains(seq[i])) hits.push_back(i);
  std::vector<Segment> out;
  for (std::size_t j = 0; j < hits.size(); ++j) {
    const std::size_t from = hits[j];
    const std::size_t to = hits[(j + 1) % hits.size()];
    Segment seg;
    for (std::size_t i = from;; i = (i + 1) % t) {
      seg.vertices.push_back(seq[i]);
      if (i == to && seg.vertices.size() > 1) break;
    }
    seg.is_h_path = seg.vertices.size() > 2 || !h.has_edge(seg.vertices.front(), seg.vertices.back());
    out.push_back(std::move(seg));
  }
  return out;
}

// The component of H - x containing `q`, listed along the path it forms.
std::vector<Vertex> component_path(const Frame& h, const VertexSet& x, Vertex q) {
  std::vector<char> in(h.universe(), 0);
  std::vector<Vertex> members{q}, stack{q};
  in[q] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : h.neighbors(u))
      if (!x.contains(w) && !in[w]) {
        in[w] = 1;
        members.push_back(w);
        stack.push_back(w);
      }
  }
  auto inner_degree = [&](Vertex v) {
    return std::count_if(h.neighbors(v).begin(), h.neighbors(v).end(), [&](Vertex w) { return in[w] != 0; });
  };
  std::sort(members.begin(), members.end());
  Vertex end = -1;
  for (Vertex v : members)
    if (inner_degree(v) <= 1) {
      end = v;
      break;
    }
  if (end < 0) throw NoImprovingCase("component of H - X is not a path");
  std::vector<Vertex> order{end};
  Vertex prev = -1, cur = end;
  while (order.size() < members.size()) {
    Vertex next = -1;
    for (Vertex w : h.neighbors(cur))
      if (in[w] && w != prev) next = w;
    if (next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  if (order.size() != members.size()) throw NoImprovingCase("component of H - X is not a path");
  return order;
}

VertexSet without(const VertexSet& x, Vertex v) {
  VertexSet out = x;
  out.erase(v);
  return out;
}

Frame augment_or_bug(const Frame& h, const VertexSet& x, const Path& p, const VertexSet& s, int ell,
                     CaseLabel label) {
  try {
    return augment_with_path(h, x, p, s, ell);
  } catch (const AugmentPreconditionViolated& e) {
    throw NoImprovingCase(std::string("case ") + std::string(to_string(label)) + ": " + e.what());
  }
}

}  // namespace

ImproveResult improve(const Frame& h, const PendantSet& pend, const Cycle& c, const HittingCandidate& cand,
                      const VertexSet& s, int ell) {
  const VertexSet& x = cand.x;
  for (Vertex v : c.vertices())
    if (x.contains(v)) throw std::invalid_argument("improve: cycle meets the hitting candidate");

  std::vector<Vertex> hits;
  for (Vertex v : c.vertices())
    if (h.contains(v)) hits.push_back(v);
  auto first_pendant_meeting = [&](auto&& meets) -> int {
    for (std::size_t i = 0; i < pend.size(); ++i)
      if (meets(pend[i].cycle)) return static_cast<int>(i);
    return -1;
  };

  if (hits.empty()) {
    int ki = first_pendant_meeting([&](const Cycle& k) { return cycles_meet(k, c); });
    Frame out = h;
    if (ki < 0) {
      out.add_cycle(c);
      return {std::move(out), pend, CaseLabel::Disjoint};
    }
    // Shortest arc of K from y_K to the first vertex on C.
    const auto& kseq = pend[ki].cycle.vertices();
    const std::size_t t = kseq.size();
    const std::size_t p = static_cast<std::size_t>(
        std::find(kseq.begin(), kseq.end(), pend[ki].attachment) - kseq.begin());
    std::optional<std::vector<Vertex>> best;
    for (std::size_t step : {std::size_t{1}, t - 1}) {
      std::vector<Vertex> arc{kseq[p]};
      for (std::size_t i = (p + step) % t; i != p; i = (i + step) % t) {
        arc.push_back(kseq[i]);
        if (c.contains(kseq[i])) break;
      }
      if (!c.contains(arc.back())) continue;
      if (!best || arc.size() < best->size() || (arc.size() == best->size() && arc < *best)) best = arc;
    }
    if (!best) throw NoImprovingCase("case ii: pendant does not reach the cycle");
    out.add_path(*best);
    out.add_cycle(c);
    return {std::move(out), {}, CaseLabel::DisjointViaPendant};
  }

  if (hits.size() == 1) {
    const Vertex y_c = hits.front();
    int ki = first_pendant_meeting([&](const Cycle& k) { return cycles_meet(k, c); });
    if (ki < 0) {
      PendantSet out = pend;
      out.push_back({c, y_c});
      return {h, std::move(out), CaseLabel::NewPendant};
    }
    const Pendant& k = pend[ki];
    std::vector<Vertex> both = c.vertices();
    both.insert(both.end(), k.cycle.vertices().begin(), k.cycle.vertices().end());
    const Vertex via = smallest_terminal(both, s);
    std::vector<Edge> edges = c.edges();
    auto kedges = k.cycle.edges();
    edges.insert(edges.end(), kedges.begin(), kedges.end());
    auto q = shortest_path_through(LocalGraph::from_edges(edges), {y_c}, via, {k.attachment});
    if (!q) throw NoImprovingCase("case iv: no H-path through a terminal");
    return {augment_or_bug(h, without(x, k.attachment), *q, s, ell, CaseLabel::OneVertexViaPendant), {},
            CaseLabel::OneVertexViaPendant};
  }

  // The cycle meets H in at least two vertices.
  const auto segments = segments_of(c, h);
  std::optional<Path> q_star;
  for (const auto& seg : segments) {
    if (!seg.is_h_path) continue;
    if (std::any_of(seg.vertices.begin(), seg.vertices.end(), [&](Vertex v) { return s.contains(v); })) {
      q_star = Path{seg.vertices};
      break;
    }
  }
  bool trivial = false;
  if (!q_star) {
    std::vector<Vertex> candidates = hits;
    std::sort(candidates.begin(), candidates.end());
    const auto& seq = c.vertices();
    const std::size_t t = seq.size();
    for (Vertex v : candidates) {
      if (!s.contains(v)) continue;
      std::size_t i = static_cast<std::size_t>(std::find(seq.begin(), seq.end(), v) - seq.begin());
      if (h.has_edge(v, seq[(i + 1) % t]) && h.has_edge(v, seq[(i + t - 1) % t])) {
        q_star = Path{{v}};
        trivial = true;
        break;
      }
    }
  }
  if (!q_star) throw NoImprovingCase("case v: no H-path through a terminal and no trivial path");

  auto tag = [&](ImproveResult r) {
    r.trivial_path = trivial;
    return r;
  };

  const Vertex q1 = q_star->front(), q2 = q_star->back();
  const std::vector<Vertex> d = component_path(h, x, q1);
  auto pos_in_d = [&](Vertex v) -> std::ptrdiff_t {
    auto it = std::find(d.begin(), d.end(), v);
    return it == d.end() ? -1 : it - d.begin();
  };

  if (!trivial && pos_in_d(q2) < 0)
    return tag({augment_or_bug(h, x, *q_star, s, ell, CaseLabel::Cross), {}, CaseLabel::Cross});

  if (!trivial) {
    const auto& qv = q_star->vertices;
    std::vector<Vertex> interior(qv.begin() + 1, qv.end() - 1);
    std::sort(interior.begin(), interior.end());
    int ki = first_pendant_meeting([&](const Cycle& k) {
      return std::any_of(k.vertices().begin(), k.vertices().end(),
                         [&](Vertex v) { return std::binary_search(interior.begin(), interior.end(), v); });
    });
    if (ki >= 0) {
      const Pendant& k = pend[ki];
      const Vertex via = smallest_terminal(k.cycle.vertices(), s);
      std::vector<Edge> edges = path_edges(qv);
      auto kedges = k.cycle.edges();
      edges.insert(edges.end(), kedges.begin(), kedges.end());
      auto p = shortest_path_through(LocalGraph::from_edges(edges), {q1, q2}, via, {k.attachment});
      if (!p) throw NoImprovingCase("case v-pendant: no H-path through the pendant terminal");
      return tag({augment_or_bug(h, without(x, k.attachment), *p, s, ell, CaseLabel::CrossPendant), {},
                  CaseLabel::CrossPendant});
    }
  }

  {
    auto a = pos_in_d(q1), b = pos_in_d(q2);
    if (a > b) std::swap(a, b);
    bool segment_has_terminal = false;
    for (auto i = a; i <= b; ++i) segment_has_terminal |= s.contains(d[i]);
    if (!segment_has_terminal) {
      Frame out = h;
      for (auto i = a; i < b; ++i) out.remove_edge(d[i], d[i + 1]);
      out.add_path(q_star->vertices);
      return tag({std::move(out), pend, CaseLabel::Splice});
    }
  }

  std::vector<char> in_d(h.universe(), 0);
  for (Vertex v : d) in_d[v] = 1;
  std::optional<std::vector<Vertex>> reach;
  for (const auto& seg : segments) {
    const bool front_in = in_d[seg.vertices.front()] != 0, back_in = in_d[seg.vertices.back()] != 0;
    if (front_in == back_in) continue;
    std::vector<Vertex> oriented = seg.vertices;
    if (front_in) std::reverse(oriented.begin(), oriented.end());
    if (!reach || oriented.size() < reach->size() || (oriented.size() == reach->size() && oriented < *reach))
      reach = std::move(oriented);
  }
  if (reach)
    return tag({augment_or_bug(h, x, Path{*reach}, s, ell, CaseLabel::Reach), {}, CaseLabel::Reach});

  // C meets H only inside D: replace the stretch of D between its first and
  // last cycle vertices by C.
  std::ptrdiff_t r1 = static_cast<std::ptrdiff_t>(d.size()), r2 = -1;
  for (Vertex v : hits) {
    auto i = pos_in_d(v);
    r1 = std::min(r1, i);
    r2 = std::max(r2, i);
  }
  if (r1 >= r2) throw NoImprovingCase("case v-replace: cycle meets D in fewer than two vertices");
  Frame out = h;
  for (auto i = r1; i < r2; ++i) out.remove_edge(d[i], d[i + 1]);
  out.add_cycle(c);
  return tag({std::move(out), {}, CaseLabel::Replace});
}

}  // namespace scycle
