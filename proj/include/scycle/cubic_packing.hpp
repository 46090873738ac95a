#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace scycle {

/// Multigraph with loops and parallel edges. A loop adds 2 to the degree of
/// its vertex.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t vertex_count) : degree_(vertex_count, 0) {}

  /// Returns the new edge id.
  int add_edge(int u, int v);

  std::size_t vertex_count() const { return degree_.size(); }
  std::size_t edge_count() const { return ends_.size(); }
  const std::pair<int, int>& edge(int id) const { return ends_[id]; }
  int degree(int v) const { return degree_[v]; }
  std::size_t count_degree(int d) const;

 private:
  std::vector<std::pair<int, int>> ends_;
  std::vector<int> degree_;
};

/// A cycle in a multigraph: vertices[i] -- edges[i] -- vertices[i+1], closing
/// back to vertices[0]. A loop has one vertex and one edge, a digon two of
/// each.
struct MultiCycle {
  std::vector<int> vertices;
  std::vector<int> edges;
};

/// ceil(4k(log2 k + log2 log2 k + 4)) for k >= 2, 1 for k = 1, and 0 for
/// k <= 0 (the frame solver's boundary convention). Use s_threshold for the
/// user-facing k >= 1 contract.
std::size_t s_threshold_or_zero(int k);

/// Throws std::invalid_argument for k < 1.
std::size_t s_threshold(int k);

/// Greedy shortest-cycle peeling. Requires every degree in {2, 3}.
///
/// Repeatedly removes a shortest cycle, then prunes vertices of degree <= 1
/// and suppresses degree-2 vertices; loops created by suppression are taken
/// as cycles on the spot. Returns at least k pairwise vertex-disjoint cycles.
///
/// Throws InsufficientBranchVertices when fewer than k cycles were found and
/// the graph has fewer than s_threshold(k) degree-3 vertices, and
/// PackingShortfall when fewer than k were found despite enough of them.
std::vector<MultiCycle> pack_cycles(const Multigraph& mg, int k);

/// True iff `c` is a closed trail in `mg` without repeated vertices.
bool is_multicycle_in(const Multigraph& mg, const MultiCycle& c);

}  // namespace scycle
