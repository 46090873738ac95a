#pragma once

#include <cstddef>
#include <compare>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace scycle {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Membership bitmap over a fixed universe 0..universe-1. Iteration is by
/// ascending id.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  template <typename Range>
  static VertexSet of(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < bits_.size() && bits_[v] != 0;
  }
  /// Returns true if v was not yet a member. Throws std::out_of_range for ids
  /// outside the universe.
  bool insert(Vertex v);
  bool erase(Vertex v);
  void insert_all(const VertexSet& other);
  void clear();

  std::vector<Vertex> members() const;

  bool operator==(const VertexSet& other) const {
    return count_ == other.count_ && bits_ == other.bits_;
  }

 private:
  std::vector<char> bits_;
  std::size_t count_ = 0;
};

/// Simple undirected graph over dense ids with a liveness mask. Neighbor lists
/// are kept sorted ascending.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t universe);
  Graph(std::size_t universe, const VertexSet& live);

  /// Throws std::invalid_argument on loops, parallel edges, or ids out of
  /// range.
  static Graph from_edges(std::size_t universe, std::span<const Edge> edges);

  void add_edge(Vertex u, Vertex v);

  std::size_t universe() const { return adj_.size(); }
  std::size_t vertex_count() const { return live_count_; }
  std::size_t edge_count() const { return edge_count_; }

  bool alive(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < alive_.size() && alive_[v] != 0;
  }
  bool has_edge(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  std::vector<Vertex> vertices() const;
  VertexSet vertex_set() const;
  /// Every edge once as (u, v) with u < v, ascending.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> alive_;
  std::size_t live_count_ = 0;
  std::size_t edge_count_ = 0;
};

struct Path {
  std::vector<Vertex> vertices;

  /// Number of edges.
  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool operator==(const Path&) const = default;
};

/// A cycle of length >= 3 stored in canonical rotation/orientation: the minimum
/// id first, then the direction whose second element is smaller.
class Cycle {
 public:
  /// Throws std::invalid_argument for fewer than 3 vertices or repeats.
  explicit Cycle(std::vector<Vertex> sequence);

  const std::vector<Vertex>& vertices() const { return seq_; }
  std::size_t length() const { return seq_.size(); }
  bool contains(Vertex v) const;
  /// Ordered edge list (c0,c1), ..., (c_{t-1}, c0).
  std::vector<Edge> edges() const;

  auto operator<=>(const Cycle&) const = default;

 private:
  std::vector<Vertex> seq_;
};

using EdgePredicate = std::function<bool(Vertex, Vertex)>;

bool is_path_in(const Graph& g, const Path& p);
bool is_cycle_in(const Graph& g, const Cycle& c);

Graph induced_subgraph(const Graph& g, const VertexSet& keep);

bool is_long_s_cycle(const Cycle& c, const VertexSet& s, int ell);

bool is_h_path(const Path& p, const VertexSet& h_vertices, const EdgePredicate& h_edges);

/// Vertices within breadth-first distance `radius` of some center.
VertexSet ball(const Graph& g, const VertexSet& centers, int radius);

/// Connected components ordered by minimum vertex id.
std::vector<VertexSet> components(const Graph& g);

/// floor((ell - 1) / 2): the radius with 2 * dist <= ell - 1.
inline int half_radius(int ell) { return ell >= 1 ? (ell - 1) / 2 : 0; }

/// Cycles in a simple graph have at least 3 edges.
inline int effective_length(int ell) { return ell < 3 ? 3 : ell; }

}  // namespace scycle
