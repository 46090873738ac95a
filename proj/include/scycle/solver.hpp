#pragma once

#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

#include "scycle/frame.hpp"
#include "scycle/graph.hpp"

namespace scycle {

struct Packing {
  std::vector<Cycle> cycles;
};

struct HittingSet {
  VertexSet vertices;
};

/// Either k disjoint long S-cycles or a vertex set meeting all of them.
using SolveOutcome = std::variant<Packing, HittingSet>;

inline bool is_packing(const SolveOutcome& out) { return std::holds_alternative<Packing>(out); }

/// One record per loop pass: the state the pass started from and the case
/// that ended it.
struct TraceRecord {
  std::size_t iteration = 0;
  Score score;
  std::size_t branch = 0;
  std::size_t cycle_components = 0;
  std::size_t pendants = 0;
  std::size_t candidate_size = 0;
  CaseLabel label = CaseLabel::StopHitting;
  bool trivial_path = false;
};

struct SolveResult {
  SolveOutcome outcome;
  /// Number of improving steps taken.
  std::size_t iterations = 0;
  /// True when |S| < k and S itself was returned.
  bool shortcut = false;
  std::vector<TraceRecord> trace;
};

/// Size guarantee for a returned hitting set: 18 l k (log2 k + log2 log2 k +
/// 37/9) for k >= 2, and (9/2) l s_1 + 2 l = 6.5 l for k = 1.
double hitting_set_bound(int k, int ell);

/// s_k (k + |S|).
std::size_t iteration_cap(int k, std::size_t terminals);

/// Sees the frame, pendants and hitting candidate of every pass that gets as
/// far as building a candidate.
using StepObserver = std::function<void(const Frame&, const PendantSet&, const HittingCandidate&)>;

/// Frame-growing solver. Throws std::invalid_argument for k < 1, ell < 1, or
/// terminals that are not live vertices of g.
SolveResult solve(const Graph& g, const VertexSet& s, int k, int ell, const StepObserver& observe = {});

}  // namespace scycle
