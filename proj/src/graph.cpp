#include "scycle/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace scycle {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : bits_(universe, 0) {
  for (Vertex v : members) insert(v);
}

bool VertexSet::insert(Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= bits_.size())
    throw std::out_of_range("vertex " + std::to_string(v) + " outside universe");
  if (bits_[v]) return false;
  bits_[v] = 1;
  ++count_;
  return true;
}

bool VertexSet::erase(Vertex v) {
  if (!contains(v)) return false;
  bits_[v] = 0;
  --count_;
  return true;
}

void VertexSet::insert_all(const VertexSet& other) {
  for (Vertex v : other.members()) insert(v);
}

void VertexSet::clear() {
  std::fill(bits_.begin(), bits_.end(), 0);
  count_ = 0;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (std::size_t v = 0; v < bits_.size(); ++v)
    if (bits_[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

Graph::Graph(std::size_t universe)
    : adj_(universe), alive_(universe, 1), live_count_(universe) {}

Graph::Graph(std::size_t universe, const VertexSet& live) : adj_(universe), alive_(universe, 0) {
  for (Vertex v : live.members()) {
    if (static_cast<std::size_t>(v) >= universe) throw std::out_of_range("live vertex outside universe");
    alive_[v] = 1;
    ++live_count_;
  }
}

Graph Graph::from_edges(std::size_t universe, std::span<const Edge> edges) {
  Graph g(universe);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (!alive(u) || !alive(v))
    throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                " references a missing vertex");
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v)
    throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!alive(u) || !alive(v)) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(live_count_);
  for (std::size_t v = 0; v < alive_.size(); ++v)
    if (alive_[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

VertexSet Graph::vertex_set() const { return VertexSet::of(universe(), vertices()); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
  return out;
}

Cycle::Cycle(std::vector<Vertex> sequence) : seq_(std::move(sequence)) {
  if (seq_.size() < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Vertex> sorted = seq_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("cycle repeats a vertex");
  std::rotate(seq_.begin(), std::min_element(seq_.begin(), seq_.end()), seq_.end());
  if (seq_[1] > seq_.back()) std::reverse(seq_.begin() + 1, seq_.end());
}

bool Cycle::contains(Vertex v) const { return std::find(seq_.begin(), seq_.end(), v) != seq_.end(); }

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> out;
  out.reserve(seq_.size());
  for (std::size_t i = 0; i < seq_.size(); ++i) out.emplace_back(seq_[i], seq_[(i + 1) % seq_.size()]);
  return out;
}

bool is_path_in(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  std::vector<Vertex> sorted = p.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (!g.alive(p.vertices.front())) return false;
  for (std::size_t i = 1; i < p.vertices.size(); ++i)
    if (!g.has_edge(p.vertices[i - 1], p.vertices[i])) return false;
  return true;
}

bool is_cycle_in(const Graph& g, const Cycle& c) {
  for (auto [u, v] : c.edges())
    if (!g.has_edge(u, v)) return false;
  return true;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  VertexSet live(g.universe());
  for (Vertex v : keep.members())
    if (g.alive(v)) live.insert(v);
  Graph out(g.universe(), live);
  for (auto [u, v] : g.edges())
    if (live.contains(u) && live.contains(v)) out.add_edge(u, v);
  return out;
}

bool is_long_s_cycle(const Cycle& c, const VertexSet& s, int ell) {
  if (c.length() < static_cast<std::size_t>(std::max(ell, 0))) return false;
  for (Vertex v : c.vertices())
    if (s.contains(v)) return true;
  return false;
}

bool is_h_path(const Path& p, const VertexSet& h_vertices, const EdgePredicate& h_edges) {
  if (p.length() < 1) return false;
  if (!h_vertices.contains(p.front()) || !h_vertices.contains(p.back())) return false;
  for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i)
    if (h_vertices.contains(p.vertices[i])) return false;
  for (std::size_t i = 1; i < p.vertices.size(); ++i)
    if (!h_edges(p.vertices[i - 1], p.vertices[i])) return true;
  return false;
}

VertexSet ball(const Graph& g, const VertexSet& centers, int radius) {
  VertexSet out(g.universe());
  std::vector<int> dist(g.universe(), -1);
  std::deque<Vertex> queue;
  for (Vertex c : centers.members()) {
    if (!g.alive(c)) continue;
    dist[c] = 0;
    out.insert(c);
    queue.push_back(c);
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (dist[u] >= radius) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      out.insert(w);
      queue.push_back(w);
    }
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.universe(), 0);
  for (Vertex root : g.vertices()) {
    if (seen[root]) continue;
    VertexSet part(g.universe());
    std::vector<Vertex> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      part.insert(u);
      for (Vertex w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    out.push_back(std::move(part));
  }
  return out;
}

}  // namespace scycle
