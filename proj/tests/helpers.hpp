#pragma once

#include <vector>

#include "scycle/graph.hpp"

namespace scycle::test {

inline Graph make_graph(std::size_t n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

inline VertexSet set_of(std::size_t n, std::vector<Vertex> members) { return VertexSet::of(n, members); }

inline VertexSet all_of(const Graph& g) { return g.vertex_set(); }

inline Graph disjoint_triangles() { return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
  return g;
}

}  // namespace scycle::test
