#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scycle/graph.hpp"
#include "scycle/solver.hpp"

namespace scycle {

/// Default vertex cap for exhaustive routines.
inline constexpr std::size_t kOracleCap = 20;
/// Subset tables are indexed by 32-bit masks; no cap may exceed this.
inline constexpr std::size_t kOracleHardCap = 26;

/// Every simple cycle of a small graph, each once in canonical form.
struct CycleInventory {
  std::size_t universe = 0;
  /// Live vertices, ascending; bit i of a mask stands for vertices[i].
  std::vector<Vertex> vertices;
  std::vector<Cycle> cycles;

  std::vector<Cycle> long_s_cycles(const VertexSet& s, int ell) const;
};

/// Backtracking from each cycle's minimum vertex with the orientation fixed by
/// its two neighbours. Throws InstanceTooLarge above `cap` live vertices.
CycleInventory enumerate_cycles(const Graph& g, std::size_t cap = kOracleCap);

/// For every vertex subset M of a small graph: is there a cycle whose vertex
/// set is exactly M?
class CycleSupports {
 public:
  static CycleSupports from_inventory(const CycleInventory& inv);
  /// Held-Karp style dynamic program over (subset, endpoint) states, rooted
  /// at each subset's minimum vertex. Independent of enumerate_cycles.
  static CycleSupports by_subset_dp(const Graph& g, std::size_t cap = kOracleCap);

  std::size_t universe() const { return universe_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  bool hosts(std::uint32_t mask) const { return hosts_[mask] != 0; }
  std::uint32_t mask_of(const VertexSet& set) const;
  VertexSet set_of(std::uint32_t mask) const;

  /// Distinct vertex sets of long S-cycles, ascending as masks.
  std::vector<std::uint32_t> long_s_supports(const VertexSet& s, int ell) const;

  bool operator==(const CycleSupports&) const = default;

 private:
  std::size_t universe_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<char> hosts_;
};

/// Maximum number of pairwise vertex-disjoint long S-cycles.
std::size_t max_packing(const CycleSupports& sup, const VertexSet& s, int ell);
std::size_t max_packing(const CycleInventory& inv, const VertexSet& s, int ell);

/// Vertex sets of a maximum packing, chosen greedily by lowest free vertex.
std::vector<VertexSet> max_packing_supports(const CycleSupports& sup, const VertexSet& s, int ell);

/// A cycle of g on exactly the vertices of `support`, if one exists.
std::optional<Cycle> cycle_on(const Graph& g, const VertexSet& support);

/// A minimum-cardinality vertex set meeting every long S-cycle. Among sets of
/// the minimum size, the one with the smallest mask is returned.
VertexSet min_hitting_set(const CycleSupports& sup, const VertexSet& s, int ell);
VertexSet min_hitting_set(const CycleInventory& inv, const VertexSet& s, int ell);

/// Whether a long S-cycle survives deletion of `removed`.
bool has_long_s_cycle(const CycleSupports& sup, const VertexSet& s, int ell, const VertexSet& removed);

struct Verdict {
  bool pass = true;
  std::string clause;
};

/// Packing: exactly k cycles of g, each a long S-cycle, pairwise disjoint.
/// Hitting set: g - X has no long S-cycle (subset DP up to `cap` vertices,
/// exact search above) and |X| is within the size bound, or |X| <= |S| <= k.
Verdict verify_outcome(const Graph& g, const VertexSet& s, int k, int ell, const SolveOutcome& out,
                       std::size_t cap = kOracleCap);

}  // namespace scycle
