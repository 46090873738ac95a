#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "scycle/graph.hpp"

namespace scycle {

/// Length parameter for long-cycle searches. `ell` is clamped to the
/// simple-graph floor of 3.
struct SearchBudget {
  int ell = 3;

  explicit SearchBudget(int requested) : ell(effective_length(requested)) {}

  /// Nominal fixed-parameter factor 2^(2l) (2l)! of the reference algorithm;
  /// documentation only, the search below does not consult it.
  double nominal_factor() const { return std::ldexp(std::tgamma(2.0 * ell + 1.0), 2 * ell); }
};

/// Exact search for cycles of length >= ell through a given vertex.
///
/// Block decomposition is computed once per searcher; each query explores
/// only the biconnected blocks containing the query vertex. Within a block it
/// enumerates simple paths of exactly ell-1 edges out of the vertex (pruned
/// by reachability back to it) and closes them by a breadth-first return
/// path that avoids the path interior.
class LongCycleSearcher {
 public:
  explicit LongCycleSearcher(const Graph& g);

  std::optional<Cycle> through(Vertex v, int ell) const;

 private:
  const Graph& g_;
  // Blocks as sorted vertex lists; blocks_of_[v] lists block ids containing v
  // in ascending order of each block's minimum vertex.
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<std::vector<int>> blocks_of_;
};

std::optional<Cycle> long_cycle_through(const Graph& g, Vertex v, int ell);

/// First hit of long_cycle_through over the terminals in ascending id order.
std::optional<Cycle> find_long_s_cycle(const Graph& g, const VertexSet& s, int ell);

}  // namespace scycle
