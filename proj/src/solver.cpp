#include "scycle/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "scycle/cubic_packing.hpp"
#include "scycle/errors.hpp"
#include "scycle/long_cycle.hpp"

namespace scycle {

double hitting_set_bound(int k, int ell) {
  if (k <= 1) return 6.5 * ell;
  const double lk = std::log2(static_cast<double>(k));
  return 18.0 * ell * k * (lk + std::log2(lk) + 37.0 / 9.0);
}

std::size_t iteration_cap(int k, std::size_t terminals) {
  return s_threshold(k) * (static_cast<std::size_t>(k) + terminals);
}

SolveResult solve(const Graph& g, const VertexSet& s, int k, int ell, const StepObserver& observe) {
  if (k < 1) throw std::invalid_argument("solve requires k >= 1");
  if (ell < 1) throw std::invalid_argument("solve requires ell >= 1");
  for (Vertex v : s.members())
    if (!g.alive(v)) throw std::invalid_argument("terminal " + std::to_string(v) + " is not a vertex");

  SolveResult result;
  VertexSet terminals(g.universe());
  terminals.insert_all(s);
  // With fewer than k terminals no k disjoint S-cycles exist, so S itself is
  // the answer. At |S| = k a packing is still possible and the loop runs.
  if (terminals.size() < static_cast<std::size_t>(k)) {
    result.outcome = HittingSet{terminals};
    result.shortcut = true;
    TraceRecord rec;
    rec.candidate_size = terminals.size();
    rec.label = CaseLabel::StopHitting;
    result.trace.push_back(rec);
    return result;
  }

  const std::size_t cap = iteration_cap(k, terminals.size());
  Frame frame(g.universe());
  PendantSet pendants;

  for (;;) {
    const FrameStructure st = analyze(frame);
    const Score score = score_of(frame, pendants, terminals);
    TraceRecord rec;
    rec.iteration = result.iterations;
    rec.score = score;
    rec.branch = st.branch.size();
    rec.cycle_components = st.cycle_components.size();
    rec.pendants = pendants.size();

    const int remaining = k - static_cast<int>(st.cycle_components.size());
    if (st.branch.size() >= s_threshold_or_zero(remaining)) {
      rec.label = CaseLabel::StopSimonovits;
      result.trace.push_back(rec);
      result.outcome = Packing{extract_packing(frame, k, terminals, ell)};
      return result;
    }
    if (pendants.size() >= static_cast<std::size_t>(k)) {
      rec.label = CaseLabel::StopPendants;
      result.trace.push_back(rec);
      Packing packing;
      for (int i = 0; i < k; ++i) packing.cycles.push_back(pendants[i].cycle);
      result.outcome = std::move(packing);
      return result;
    }

    HittingCandidate cand = build_hitting_candidate(frame, pendants, terminals, ell);
    rec.candidate_size = cand.x.size();
    if (observe) observe(frame, pendants, cand);
    VertexSet keep = g.vertex_set();
    for (Vertex v : cand.x.members()) keep.erase(v);
    const Graph residual = induced_subgraph(g, keep);
    auto found = find_long_s_cycle(residual, terminals, ell);
    if (!found) {
      rec.label = CaseLabel::StopHitting;
      result.trace.push_back(rec);
      result.outcome = HittingSet{std::move(cand.x)};
      return result;
    }
    if (result.iterations >= cap)
      throw IterationCapExceeded("solver exceeded s_k (k + |S|) = " + std::to_string(cap) + " iterations");

    ImproveResult step = improve(frame, pendants, *found, cand, terminals, ell);
    const Score next = score_of(step.frame, step.pendants, terminals);
    if (!(score < next))
      throw NoImprovingCase("improvement step " + std::string(to_string(step.label)) +
                            " did not raise the score");
    frame = std::move(step.frame);
    pendants = std::move(step.pendants);
    ++result.iterations;

    rec.label = step.label;
    rec.trivial_path = step.trivial_path;
    result.trace.push_back(rec);
  }
}

}  // namespace scycle
