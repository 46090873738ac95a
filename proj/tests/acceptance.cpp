// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// gating criterion fails.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "scycle/cubic_packing.hpp"
#include "scycle/generators.hpp"
#include "scycle/long_cycle.hpp"
#include "scycle/oracle.hpp"
#include "scycle/solver.hpp"

using namespace scycle;

namespace {

constexpr std::size_t kCorpusSize = 500;
constexpr double kCorpusSeconds = 60.0;
constexpr std::size_t kDualityMaxN = 16;
constexpr std::size_t kCubicCount = 200;
constexpr std::size_t kLongCycleCorpus = 300;
constexpr double kScalingSeconds = 10.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Tally {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first;

  void fail(const std::string& why) {
    if (failures++ == 0) first = why;
  }
};

int failed_gates = 0;

void report(const char* id, const char* title, const Tally& t, const std::string& extra = "") {
  const bool pass = t.failures == 0;
  if (!pass) ++failed_gates;
  std::printf("%s %s %s: %zu checked, %zu failures%s%s%s\n", pass ? "PASS" : "FAIL", id, title, t.checked,
              t.failures, extra.c_str(), pass ? "" : "; first: ", pass ? "" : t.first.c_str());
}

struct CorpusCase {
  Instance inst;
  std::string name;
};

// Parameters drawn from the case seed with the same pinned generator as the
// instances themselves.
CorpusCase corpus_case(std::size_t i) {
  const std::uint64_t seed = 1000 + i;
  Rng rng(seed ^ 0x5eedULL);
  const std::size_t n = 5 + rng.below(26);
  const double p = 0.1 * static_cast<double>(1 + rng.below(5));
  const int k = 1 + static_cast<int>(rng.below(4));
  const int ell = 1 + static_cast<int>(rng.below(7));
  const long choices[] = {1, 2, static_cast<long>(n / 4), static_cast<long>(n / 2), -1};
  const long t = choices[rng.below(5)];
  GenOptions opt{.k = k, .ell = ell, .terminals = t, .seed = seed};
  return {generate_gnp(n, p, opt), "gnp#" + std::to_string(i) + " (n=" + std::to_string(n) + " k=" +
                                       std::to_string(k) + " ell=" + std::to_string(ell) + ")"};
}

Graph without(const Graph& g, const VertexSet& x) {
  VertexSet keep = g.vertex_set();
  for (Vertex v : x.members()) keep.erase(v);
  return induced_subgraph(g, keep);
}

void corpus_criteria() {
  Tally packings, hittings, bound, duality, monotone;
  const auto start = Clock::now();
  double solve_seconds = 0;
  for (std::size_t i = 0; i < kCorpusSize; ++i) {
    const auto [inst, name] = corpus_case(i);
    const Graph g = inst.graph();
    const VertexSet s = inst.terminal_set();
    SolveResult r;
    const auto t0 = Clock::now();
    try {
      r = solve(g, s, inst.k, inst.ell);
    } catch (const std::exception& e) {
      packings.fail(name + ": solve threw " + e.what());
      monotone.fail(name + ": solve threw " + e.what());
      continue;
    }
    solve_seconds += seconds_since(t0);

    ++monotone.checked;
    if (r.iterations > iteration_cap(inst.k, s.size())) monotone.fail(name + ": iteration cap exceeded");
    for (std::size_t j = 1; j < r.trace.size(); ++j)
      if (!(r.trace[j - 1].score < r.trace[j].score)) monotone.fail(name + ": score did not increase");

    if (const auto* p = std::get_if<Packing>(&r.outcome)) {
      ++packings.checked;
      const auto v = verify_outcome(g, s, inst.k, inst.ell, r.outcome);
      if (!v.pass) packings.fail(name + ": " + v.clause);
      (void)p;
    } else {
      const auto& x = std::get<HittingSet>(r.outcome).vertices;
      ++hittings.checked;
      const Graph rest = without(g, x);
      if (find_long_s_cycle(rest, s, inst.ell)) hittings.fail(name + ": exact search finds a residual cycle");
      if (inst.n <= kDualityMaxN &&
          !CycleSupports::by_subset_dp(rest).long_s_supports(s, effective_length(inst.ell)).empty())
        hittings.fail(name + ": exhaustive subset check finds a residual cycle");
      if (!r.shortcut) {
        ++bound.checked;
        if (static_cast<double>(x.size()) > hitting_set_bound(inst.k, inst.ell))
          bound.fail(name + ": |X| = " + std::to_string(x.size()));
      }
    }

    if (inst.n <= kDualityMaxN) {
      ++duality.checked;
      const std::size_t best = max_packing(CycleSupports::by_subset_dp(g), s, inst.ell);
      if (is_packing(r.outcome) && best < static_cast<std::size_t>(inst.k))
        duality.fail(name + ": packing returned but oracle maximum is " + std::to_string(best));
    }
  }
  const double total = seconds_since(start);
  char timing[96];
  std::snprintf(timing, sizeof timing, "; solve %.2f s, with checks %.2f s (limit %.0f s)", solve_seconds, total,
                kCorpusSeconds);
  if (total >= kCorpusSeconds) packings.fail("corpus took " + std::to_string(total) + " s");
  report("AC1", "packings verify", packings, timing);
  report("AC2", "hitting sets leave no long S-cycle", hittings);
  report("AC3", "hitting set size bound", bound);
  report("AC4", "no packing beyond the oracle maximum (n <= 16)", duality);
  report("AC8", "score strictly increases, iterations within cap", monotone);
}

void tightness_criterion() {
  Tally t;
  for (int k = 2; k <= 3; ++k)
    for (int ell = 1; ell <= 4; ++ell) {
      const Instance inst = generate_union_of_cliques(k, ell);
      const Graph g = inst.graph();
      const VertexSet s = inst.terminal_set();
      const auto inv = enumerate_cycles(g);
      const std::size_t best = max_packing(inv, s, ell);
      const std::size_t hit = min_hitting_set(inv, s, ell).size();
      const std::size_t formula = static_cast<std::size_t>((k - 1) * ell);
      const auto r = solve(g, s, k, ell);
      const std::string name = "k=" + std::to_string(k) + " ell=" + std::to_string(ell);
      if (ell < 3) {
        // A clique on 2 ell - 1 <= 3 vertices: cycles have at least 3 edges,
        // so the deletion count is not (k-1) ell here.
        std::printf("INFO AC5 %s: outside the family's range, max_packing=%zu min_hitting_set=%zu (k-1)ell=%zu\n",
                    name.c_str(), best, hit, formula);
        continue;
      }
      ++t.checked;
      if (is_packing(r.outcome)) t.fail(name + ": solve returned a packing");
      if (best != static_cast<std::size_t>(k - 1)) t.fail(name + ": max_packing " + std::to_string(best));
      if (hit != formula) t.fail(name + ": min_hitting_set " + std::to_string(hit));
      if (!verify_outcome(g, s, k, ell, r.outcome).pass) t.fail(name + ": outcome does not verify");
    }
  report("AC5", "union-of-cliques tightness (ell >= 3)", t);
}

bool packing_ok(const Multigraph& mg, const std::vector<MultiCycle>& cycles, int k) {
  if (cycles.size() < static_cast<std::size_t>(k)) return false;
  std::set<int> used;
  for (const auto& c : cycles) {
    if (!is_multicycle_in(mg, c)) return false;
    for (int v : c.vertices)
      if (!used.insert(v).second) return false;
  }
  return true;
}

void cubic_criterion() {
  Tally t;
  std::size_t big = 0;
  for (std::size_t i = 0; i < kCubicCount; ++i) {
    const std::size_t n = 40 + 2 * (i % 41);
    const Multigraph mg = random_cubic_multigraph(n, 7000 + i);
    const std::string name = "cubic#" + std::to_string(i) + " (n=" + std::to_string(n) + ")";
    for (int k : {2, 4}) {
      if (n < s_threshold(k)) continue;
      ++t.checked;
      big += k == 4;
      try {
        if (!packing_ok(mg, pack_cycles(mg, k), k)) t.fail(name + ": invalid packing for k=" + std::to_string(k));
      } catch (const std::exception& e) {
        t.fail(name + ": k=" + std::to_string(k) + " threw " + e.what());
      }
    }
  }
  report("AC6", "cubic multigraph packings", t, "; " + std::to_string(big) + " with k=4");
}

void long_cycle_criterion() {
  Tally t;
  std::vector<std::pair<std::string, Graph>> graphs{
      {"K4", complete_graph(4)}, {"C6", cycle_graph(6)}, {"Petersen", petersen_graph()}};
  for (std::size_t i = 0; i < kLongCycleCorpus; ++i) {
    Rng rng(9000 + i);
    const std::size_t n = 3 + rng.below(10);
    const double p = 0.15 + 0.1 * static_cast<double>(rng.below(6));
    graphs.emplace_back("gnp#" + std::to_string(i), generate_gnp(n, p, {.seed = 9000 + i}).graph());
  }
  for (const auto& [name, g] : graphs) {
    const auto inv = enumerate_cycles(g);
    const LongCycleSearcher searcher(g);
    for (Vertex v : g.vertices())
      for (int ell = 1; ell <= static_cast<int>(g.vertex_count()) + 1; ++ell) {
        ++t.checked;
        bool expected = false;
        for (const auto& c : inv.cycles)
          expected = expected || (c.contains(v) && static_cast<int>(c.length()) >= ell);
        const auto got = searcher.through(v, ell);
        const bool valid = !got || (is_cycle_in(g, *got) && got->contains(v) &&
                                    static_cast<int>(got->length()) >= effective_length(ell));
        if (got.has_value() != expected || !valid)
          t.fail(name + " v=" + std::to_string(v) + " ell=" + std::to_string(ell));
      }
  }
  report("AC7", "long_cycle_through matches enumeration", t);
}

void scaling_run() {
  const std::size_t n = 10000;
  const double p = 6.0 / static_cast<double>(n - 1);
  const Instance inst = generate_gnp(n, p, {.k = 3, .ell = 5, .terminals = 50, .seed = 2024});
  const auto start = Clock::now();
  const auto r = solve(inst.graph(), inst.terminal_set(), inst.k, inst.ell);
  const double secs = seconds_since(start);
  std::printf("INFO AC9 scaling: n=%zu m=%zu k=3 ell=5 |S|=50 -> %s in %.2f s (target < %.0f s), "
              "%zu iterations of cap %zu\n",
              inst.n, inst.edges.size(), is_packing(r.outcome) ? "packing" : "hitting set", secs, kScalingSeconds,
              r.iterations, iteration_cap(inst.k, inst.terminals.size()));
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  corpus_criteria();
  tightness_criterion();
  cubic_criterion();
  long_cycle_criterion();
  scaling_run();
  std::printf("%s: %d gating criteria failed\n", failed_gates ? "FAIL" : "PASS", failed_gates);
  return failed_gates ? 1 : 0;
}
