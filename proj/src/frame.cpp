#include "scycle/frame.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "scycle/errors.hpp"

namespace scycle {

bool Frame::has_edge(Vertex u, Vertex v) const {
  if (!contains(u)) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Vertex> Frame::vertices() const {
  std::vector<Vertex> out;
  out.reserve(vertex_count_);
  for (std::size_t v = 0; v < adj_.size(); ++v)
    if (!adj_[v].empty()) out.push_back(static_cast<Vertex>(v));
  return out;
}

VertexSet Frame::vertex_set() const { return VertexSet::of(universe(), vertices()); }

std::vector<Edge> Frame::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
  return out;
}

Graph Frame::as_graph() const {
  Graph g(universe(), vertex_set());
  for (auto [u, v] : edges()) g.add_edge(u, v);
  return g;
}

void Frame::add_edge(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("frame edge cannot be a loop");
  if (has_edge(u, v)) return;
  for (auto [a, b] : {Edge{u, v}, Edge{v, u}}) {
    auto& nbrs = adj_.at(a);
    if (nbrs.empty()) ++vertex_count_;
    nbrs.insert(std::lower_bound(nbrs.begin(), nbrs.end(), b), b);
  }
  ++edge_count_;
}

void Frame::remove_edge(Vertex u, Vertex v) {
  if (!has_edge(u, v)) return;
  for (auto [a, b] : {Edge{u, v}, Edge{v, u}}) {
    auto& nbrs = adj_[a];
    nbrs.erase(std::lower_bound(nbrs.begin(), nbrs.end(), b));
    if (nbrs.empty()) --vertex_count_;
  }
  --edge_count_;
}

void Frame::add_path(std::span<const Vertex> path) {
  for (std::size_t i = 1; i < path.size(); ++i) add_edge(path[i - 1], path[i]);
}

void Frame::add_cycle(const Cycle& c) {
  for (auto [u, v] : c.edges()) add_edge(u, v);
}

FrameStructure analyze(const Frame& h) {
  FrameStructure st;
  const std::size_t n = h.universe();
  st.edge_of.assign(n, -1);
  std::vector<char> is_branch(n, 0);
  for (Vertex v : h.vertices()) {
    auto d = h.degree(v);
    if (d != 2 && d != 3)
      throw MalformedFrame("frame vertex " + std::to_string(v) + " has degree " + std::to_string(d));
    if (d == 3) {
      is_branch[v] = 1;
      st.branch.push_back(v);
    }
  }

  // Each branch vertex has three darts; every B-path consumes one dart at
  // each end.
  std::vector<std::array<char, 3>> used(n, {0, 0, 0});
  auto dart_index = [&](Vertex b, Vertex toward) {
    auto nbrs = h.neighbors(b);
    return static_cast<std::size_t>(std::find(nbrs.begin(), nbrs.end(), toward) - nbrs.begin());
  };
  for (Vertex b : st.branch) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (used[b][i]) continue;
      used[b][i] = 1;
      std::vector<Vertex> seq{b};
      Vertex prev = b, cur = h.neighbors(b)[i];
      while (!is_branch[cur]) {
        seq.push_back(cur);
        auto nbrs = h.neighbors(cur);
        Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = next;
      }
      seq.push_back(cur);
      used[cur][dart_index(cur, prev)] = 1;
      const int idx = static_cast<int>(st.edges.size());
      for (std::size_t j = 1; j + 1 < seq.size(); ++j) st.edge_of[seq[j]] = idx;
      st.edges.push_back({std::move(seq), false});
    }
  }

  for (Vertex v : h.vertices()) {
    if (is_branch[v] || st.edge_of[v] >= 0) continue;
    std::vector<Vertex> seq{v};
    Vertex prev = v, cur = h.neighbors(v)[0];
    while (cur != v) {
      if (is_branch[cur]) throw MalformedFrame("degree-2 vertex not on a B-path reaches a branch vertex");
      seq.push_back(cur);
      auto nbrs = h.neighbors(cur);
      Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
      prev = cur;
      cur = next;
    }
    Cycle c(std::move(seq));
    const int idx = static_cast<int>(st.edges.size());
    for (Vertex x : c.vertices()) st.edge_of[x] = idx;
    st.edges.push_back({c.vertices(), true});
    st.cycle_components.push_back(std::move(c));
  }
  return st;
}

Multigraph FrameStructure::contracted() const {
  Multigraph mg(branch.size());
  auto index = [&](Vertex b) {
    return static_cast<int>(std::lower_bound(branch.begin(), branch.end(), b) - branch.begin());
  };
  for (const auto& e : edges) {
    if (e.is_cycle) continue;
    mg.add_edge(index(e.vertices.front()), index(e.vertices.back()));
  }
  return mg;
}

Score score_of(const Frame& h, const PendantSet& pend, const VertexSet& s) {
  Score score;
  for (Vertex v : h.vertices()) {
    if (h.degree(v) == 3) ++score.branch_count;
    if (s.contains(v)) ++score.terminal_weight;
  }
  score.terminal_weight += pend.size();
  return score;
}

std::uint8_t HittingCandidate::provenance(Vertex v) const {
  std::uint8_t mask = 0;
  for (const auto& piece : pieces)
    if (std::binary_search(piece.members.begin(), piece.members.end(), v))
      mask |= static_cast<std::uint8_t>(piece.kind);
  return mask;
}

bool is_wide(const Frame& h, const VertexSet& x, int ell) {
  if (ell <= 1) return true;
  const std::size_t max_len = static_cast<std::size_t>(ell - 1);
  std::vector<char> on_path(h.universe(), 0);
  std::vector<Vertex> path;
  // Looks for a path of length < ell with both ends outside x through x.
  auto search = [&](auto&& self, std::size_t x_count) -> bool {
    Vertex tip = path.back();
    if (path.size() > 1 && !x.contains(tip) && x_count > 0) return true;
    if (path.size() - 1 == max_len) return false;
    for (Vertex w : h.neighbors(tip)) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      bool bad = self(self, x_count + (x.contains(w) ? 1 : 0));
      path.pop_back();
      on_path[w] = 0;
      if (bad) return true;
    }
    return false;
  };
  for (Vertex u : h.vertices()) {
    if (x.contains(u)) continue;
    path.assign(1, u);
    on_path[u] = 1;
    bool bad = search(search, 0);
    on_path[u] = 0;
    if (bad) return false;
  }
  return true;
}

HittingCandidate build_hitting_candidate(const Frame& h, const PendantSet& pend, const VertexSet& s,
                                         int ell) {
  HittingCandidate cand{VertexSet(h.universe()), {}};
  if (h.empty() && pend.empty()) return cand;
  const FrameStructure st = analyze(h);
  const Graph hg = h.as_graph();
  const int r = half_radius(ell);

  auto add_piece = [&](PieceKind kind, Vertex anchor, std::vector<Vertex> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (Vertex v : members) cand.x.insert(v);
    cand.pieces.push_back({kind, anchor, std::move(members)});
  };

  for (Vertex b : st.branch) add_piece(PieceKind::Branch, b, ball(hg, VertexSet(h.universe(), {b}), r).members());

  for (const auto& e : st.edges) {
    const auto& seq = e.vertices;
    std::vector<std::size_t> terminal_pos;
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (s.contains(seq[i])) terminal_pos.push_back(i);
    std::vector<Vertex> members;
    if (e.is_cycle) {
      if (terminal_pos.empty()) throw MalformedFrame("cycle component without a terminal");
      // Smallest-id terminal on the cycle.
      std::size_t p = *std::min_element(terminal_pos.begin(), terminal_pos.end(),
                                        [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
      const std::size_t len = seq.size();
      for (std::size_t i = 0; i < len; ++i) {
        std::size_t d = i > p ? i - p : p - i;
        d = std::min(d, len - d);
        if (d <= static_cast<std::size_t>(r)) members.push_back(seq[i]);
      }
    } else {
      if (terminal_pos.empty()) continue;
      const std::size_t first = terminal_pos.front(), last = terminal_pos.back();
      for (std::size_t i = 0; i < seq.size(); ++i) {
        std::size_t d1 = i > first ? i - first : first - i;
        std::size_t d2 = i > last ? i - last : last - i;
        if (std::min(d1, d2) <= static_cast<std::size_t>(r)) members.push_back(seq[i]);
      }
    }
    add_piece(PieceKind::FrameEdge, seq.front(), std::move(members));
  }

  for (const auto& k : pend) {
    if (!h.contains(k.attachment)) throw MalformedFrame("pendant attachment outside the frame");
    add_piece(PieceKind::Pendant, k.attachment,
              ball(hg, VertexSet(h.universe(), {k.attachment}), std::max(ell - 1, 0)).members());
  }
  return cand;
}

namespace {

// Component labels of H - x restricted to H vertices; -1 for others.
std::vector<int> component_labels(const Frame& h, const VertexSet& x) {
  std::vector<int> label(h.universe(), -1);
  int next = 0;
  for (Vertex root : h.vertices()) {
    if (x.contains(root) || label[root] >= 0) continue;
    std::vector<Vertex> stack{root};
    label[root] = next;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : h.neighbors(u))
        if (!x.contains(w) && label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

bool connected_avoiding(const Frame& h, Vertex from, Vertex to, const VertexSet& blocked) {
  if (blocked.contains(from) || blocked.contains(to)) return false;
  std::vector<char> seen(h.universe(), 0);
  std::vector<Vertex> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    if (u == to) return true;
    for (Vertex w : h.neighbors(u))
      if (!seen[w] && !blocked.contains(w)) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return false;
}

}  // namespace

Frame augment_with_path(const Frame& h, const VertexSet& x, const Path& p, const VertexSet& s, int ell) {
  const auto& seq = p.vertices;
  if (p.length() < 1) throw AugmentPreconditionViolated("path has no edge");
  {
    std::vector<Vertex> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw AugmentPreconditionViolated("path repeats a vertex");
  }
  if (!h.contains(p.front()) || !h.contains(p.back()))
    throw AugmentPreconditionViolated("endpoint outside the frame");
  for (std::size_t i = 1; i + 1 < seq.size(); ++i)
    if (h.contains(seq[i])) throw AugmentPreconditionViolated("internal vertex in the frame");
  if (p.length() == 1 && h.has_edge(p.front(), p.back()))
    throw AugmentPreconditionViolated("no edge outside the frame");
  for (Vertex v : seq)
    if (x.contains(v)) throw AugmentPreconditionViolated("path meets the hitting candidate");
  for (Vertex v : h.vertices())
    if (h.degree(v) == 3 && !x.contains(v))
      throw AugmentPreconditionViolated("branch vertex outside the hitting candidate");
  if (ell >= 3) {
    auto label = component_labels(h, x);
    if (label[p.front()] == label[p.back()])
      throw AugmentPreconditionViolated("endpoints in the same component of H - X");
  }
  bool path_has_terminal = std::any_of(seq.begin(), seq.end(), [&](Vertex v) { return s.contains(v); });
  if (!path_has_terminal && connected_avoiding(h, p.front(), p.back(), s))
    throw AugmentPreconditionViolated("a cycle through the path avoids S");

  Frame out = h;
  out.add_path(seq);
  return out;
}

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::Disjoint: return "i";
    case CaseLabel::DisjointViaPendant: return "ii";
    case CaseLabel::NewPendant: return "iii";
    case CaseLabel::OneVertexViaPendant: return "iv";
    case CaseLabel::Cross: return "v-cross";
    case CaseLabel::CrossPendant: return "v-pendant";
    case CaseLabel::Splice: return "v-splice";
    case CaseLabel::Reach: return "v-reach";
    case CaseLabel::Replace: return "v-replace";
    case CaseLabel::StopSimonovits: return "stop-simonovits";
    case CaseLabel::StopPendants: return "stop-pendants";
    case CaseLabel::StopHitting: return "stop-hitting";
  }
  return "?";
}

std::vector<Cycle> extract_packing(const Frame& h, int k, const VertexSet& s, int ell) {
  const FrameStructure st = analyze(h);
  const auto& loops = st.cycle_components;
  const int need = k - static_cast<int>(loops.size());
  if (st.branch.size() < s_threshold_or_zero(need))
    throw InsufficientBranchVertices("frame has " + std::to_string(st.branch.size()) +
                                     " branch vertices, needs " + std::to_string(s_threshold_or_zero(need)));
  std::vector<Cycle> out;
  if (need <= 0) {
    out.assign(loops.begin(), loops.begin() + k);
  } else {
    const Multigraph mg = st.contracted();
    const auto packed = pack_cycles(mg, need);
    for (int i = 0; i < need; ++i) {
      const MultiCycle& mc = packed[i];
      std::vector<Vertex> seq;
      for (std::size_t j = 0; j < mc.vertices.size(); ++j) {
        const Vertex from = st.branch[mc.vertices[j]];
        const auto& path = st.edges[mc.edges[j]].vertices;
        if (path.front() == from)
          seq.insert(seq.end(), path.begin(), path.end() - 1);
        else
          seq.insert(seq.end(), path.rbegin(), path.rend() - 1);
      }
      out.emplace_back(std::move(seq));
    }
    out.insert(out.end(), loops.begin(), loops.end());
  }
  for (const auto& c : out)
    if (!is_long_s_cycle(c, s, effective_length(ell)))
      throw MalformedFrame("frame contains a cycle that is not a long S-cycle");
  return out;
}

}  // namespace scycle
