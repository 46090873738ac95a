#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "scycle/cubic_packing.hpp"
#include "scycle/graph.hpp"

namespace scycle {

/// Subgraph H of the input graph. A vertex belongs to H iff it has an H-edge;
/// frames never carry isolated vertices.
class Frame {
 public:
  Frame() = default;
  explicit Frame(std::size_t universe) : adj_(universe) {}

  std::size_t universe() const { return adj_.size(); }
  bool empty() const { return edge_count_ == 0; }
  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < adj_.size() && !adj_[v].empty();
  }
  bool has_edge(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_count_; }

  std::vector<Vertex> vertices() const;
  VertexSet vertex_set() const;
  std::vector<Edge> edges() const;
  /// H as a graph over the same universe (non-H vertices dead).
  Graph as_graph() const;

  /// No-op if the edge is already present.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void add_path(std::span<const Vertex> path);
  void add_cycle(const Cycle& c);

  bool operator==(const Frame&) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
};

/// One edge of the contracted multigraph: a B-path of H (branch vertex to
/// branch vertex through degree-2 vertices, possibly closing on itself) or a
/// whole cycle component.
struct FrameEdge {
  std::vector<Vertex> vertices;
  bool is_cycle = false;
};

/// Derived views of a frame: branch vertices B, cycle components, and the
/// contracted edges (B-paths first, then cycle components).
struct FrameStructure {
  std::vector<Vertex> branch;
  std::vector<Cycle> cycle_components;
  std::vector<FrameEdge> edges;
  /// For each non-branch vertex of H, the index of the frame edge carrying
  /// it; -1 elsewhere.
  std::vector<int> edge_of;

  std::size_t path_edge_count() const { return edges.size() - cycle_components.size(); }
  /// The cubic part: branch vertices (indexed as in `branch`) joined by
  /// B-paths; edge i of the result is edges[i].
  Multigraph contracted() const;
};

/// Throws MalformedFrame unless every vertex of H has degree 2 or 3.
FrameStructure analyze(const Frame& h);

struct Pendant {
  Cycle cycle;
  Vertex attachment;
};
using PendantSet = std::vector<Pendant>;

struct Score {
  std::size_t branch_count = 0;
  std::size_t terminal_weight = 0;

  auto operator<=>(const Score&) const = default;
};

Score score_of(const Frame& h, const PendantSet& pend, const VertexSet& s);

enum class PieceKind : std::uint8_t { Branch = 1, FrameEdge = 2, Pendant = 4 };

struct CandidatePiece {
  PieceKind kind;
  /// The branch vertex, the first vertex of the frame edge, or y_K.
  Vertex anchor;
  std::vector<Vertex> members;
};

struct HittingCandidate {
  VertexSet x;
  std::vector<CandidatePiece> pieces;

  /// Bitwise OR of the PieceKind values that contributed v.
  std::uint8_t provenance(Vertex v) const;
};

/// Exact check by bounded path enumeration; intended for small frames.
bool is_wide(const Frame& h, const VertexSet& x, int ell);

/// Union of the branch balls, the terminal balls on frame edges, and the
/// radius-(ell-1) balls around pendant attachments. Throws MalformedFrame if
/// a cycle component carries no terminal.
HittingCandidate build_hitting_candidate(const Frame& h, const PendantSet& pend, const VertexSet& s,
                                         int ell);

/// Adds the H-path `p` to `h`. Checks every clause it can verify locally and
/// throws AugmentPreconditionViolated naming the first one that fails.
/// Wideness of `x` is the caller's responsibility. For ell <= 2 the
/// linking-two-components clause is skipped, since it only serves cycle
/// length and every cycle of a simple graph is then long.
Frame augment_with_path(const Frame& h, const VertexSet& x, const Path& p, const VertexSet& s, int ell);

enum class CaseLabel {
  Disjoint,            // i
  DisjointViaPendant,  // ii
  NewPendant,          // iii
  OneVertexViaPendant, // iv
  Cross,               // v-cross
  CrossPendant,        // v-pendant
  Splice,              // v-splice
  Reach,               // v-reach
  Replace,             // v-replace
  StopSimonovits,
  StopPendants,
  StopHitting,
};

std::string_view to_string(CaseLabel label);

struct ImproveResult {
  Frame frame;
  PendantSet pendants;
  CaseLabel label;
  /// Set when case v had to fall back to the trivial path at a terminal whose
  /// two cycle neighbours are frame neighbours.
  bool trivial_path = false;
};

/// One step of the frame-growing case analysis for a long S-cycle `c` that
/// avoids `x`. The returned pair has a strictly larger score. Throws
/// NoImprovingCase if no case applies (an internal bug).
ImproveResult improve(const Frame& h, const PendantSet& pend, const Cycle& c, const HittingCandidate& x,
                      const VertexSet& s, int ell);

/// k disjoint long S-cycles of H: cycle components first used as-is, the rest
/// lifted from a cubic packing of the contracted multigraph. Throws
/// InsufficientBranchVertices when |B| < s(k - |cycle components|).
std::vector<Cycle> extract_packing(const Frame& h, int k, const VertexSet& s, int ell);

}  // namespace scycle
