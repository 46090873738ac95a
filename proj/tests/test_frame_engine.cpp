#include <doctest.h>

#include <algorithm>
#include <set>

#include "frame_checks.hpp"
#include "helpers.hpp"
#include "scycle/errors.hpp"
#include "scycle/generators.hpp"
#include "scycle/long_cycle.hpp"
#include "scycle/oracle.hpp"
#include "scycle/solver.hpp"

using namespace scycle;
using namespace scycle::test;

namespace {

Frame frame_of(std::size_t n, const std::vector<std::vector<Vertex>>& paths) {
  Frame h(n);
  for (const auto& p : paths) h.add_path(p);
  return h;
}

// Two branch vertices 0 and 1 joined by three paths, with a pendant 4-cycle
// hanging off vertex 10 of the middle path.
struct ThetaWithPendant {
  static constexpr std::size_t n = 25;
  Frame h = frame_of(n, {{0, 2, 3, 4, 5, 6, 7, 1},
                         {0, 8, 9, 10, 11, 12, 21, 22, 1},
                         {0, 13, 14, 15, 16, 17, 23, 24, 1}});
  PendantSet pend{{Cycle({10, 18, 19, 20}), 10}};
  VertexSet s = set_of(n, {3, 6, 15, 19});
  int ell = 4;
};

Frame c8(std::size_t universe = 9) { return frame_of(universe, {{0, 1, 2, 3, 4, 5, 6, 7, 0}}); }

}  // namespace

TEST_CASE("analyze: degrees and derived views") {
  ThetaWithPendant t;
  const auto st = analyze(t.h);
  CHECK(st.branch == std::vector<Vertex>{0, 1});
  CHECK(st.cycle_components.empty());
  CHECK(st.edges.size() == 3);
  CHECK(st.contracted().count_degree(3) == 2);

  Frame bad = frame_of(4, {{0, 1, 2}});
  CHECK_THROWS_AS(analyze(bad), MalformedFrame);
  Frame star = frame_of(5, {{0, 1, 2, 0}, {0, 3, 4, 0}});
  CHECK_THROWS_AS(analyze(star), MalformedFrame);

  const auto cyc = analyze(c8());
  CHECK(cyc.branch.empty());
  REQUIRE(cyc.cycle_components.size() == 1);
  CHECK(cyc.edges.size() == 1);
  CHECK(cyc.edges[0].is_cycle);
}

TEST_CASE("is_wide against the definition") {
  const Frame p = frame_of(5, {{0, 1, 2, 3, 4}});
  // 1-2-3 crosses {2} with length 2 < 4.
  CHECK_FALSE(is_wide(p, set_of(5, {2}), 4));
  CHECK_FALSE(is_wide(p, set_of(5, {1}), 4));
  CHECK(is_wide(p, VertexSet(5), 4));
  // Only crossing path is 0-1-2-3-4 of length 4.
  CHECK(is_wide(p, set_of(5, {1, 2, 3}), 4));
  CHECK_FALSE(is_wide(p, set_of(5, {1, 2, 3}), 5));
}

TEST_CASE("hitting candidate of the empty frame") {
  const auto cand = build_hitting_candidate(Frame(5), {}, set_of(5, {0}), 4);
  CHECK(cand.x.empty());
  CHECK(cand.pieces.empty());
}

TEST_CASE("hitting candidate of a single cycle") {
  for (int ell = 2; ell <= 6; ++ell) {
    const std::size_t len = static_cast<std::size_t>(2 * ell);
    Frame h(len);
    std::vector<Vertex> seq;
    for (std::size_t v = 0; v < len; ++v) seq.push_back(static_cast<Vertex>(v));
    seq.push_back(0);
    h.add_path(seq);
    const auto s = set_of(len, {3});
    const auto cand = build_hitting_candidate(h, {}, s, ell);
    const int r = half_radius(ell);
    CHECK(cand.x.size() == static_cast<std::size_t>(2 * r + 1));
    CHECK(cand.x == ball(h.as_graph(), s, r));
  }
}

TEST_CASE("hitting candidate of a theta with a pendant") {
  ThetaWithPendant t;
  const auto cand = build_hitting_candidate(t.h, t.pend, t.s, t.ell);
  // Branch balls {0,2,8,13}, {1,7,22,24}; terminal balls {2..7}, {14,15,16};
  // pendant ball of radius 3 at 10 along the middle path.
  const auto expected =
      set_of(t.n, {0, 2, 8, 13, 1, 7, 22, 24, 3, 4, 5, 6, 14, 15, 16, 9, 10, 11, 12, 21});
  CHECK(cand.x == expected);
  CHECK(cand.provenance(0) ==
        (static_cast<std::uint8_t>(PieceKind::Branch) | static_cast<std::uint8_t>(PieceKind::Pendant)));
  CHECK(cand.provenance(15) == static_cast<std::uint8_t>(PieceKind::FrameEdge));
  CHECK(cand.provenance(17) == 0);
  check_frame_state(t.h, t.pend, cand, t.s, t.ell);
}

TEST_CASE("cycle component without a terminal is malformed") {
  CHECK_THROWS_AS(build_hitting_candidate(c8(), {}, VertexSet(9), 4), MalformedFrame);
}

TEST_CASE("score_of") {
  CHECK(score_of(Frame(3), {}, VertexSet(3)) == Score{0, 0});
  CHECK(score_of(c8(), {}, set_of(9, {1, 5})) == Score{0, 2});
  ThetaWithPendant t;
  CHECK(score_of(t.h, t.pend, t.s) == Score{2, 4});
  CHECK(Score{1, 0} > Score{0, 99});
}

TEST_CASE("augment_with_path builds a theta") {
  const Frame h = c8();
  const auto s = set_of(9, {0, 4});
  const auto x = set_of(9, {0, 4});
  const Frame theta = augment_with_path(h, x, Path{{2, 8, 6}}, s, 4);
  const auto st = analyze(theta);
  CHECK(st.branch == std::vector<Vertex>{2, 6});
  for (const auto& c : enumerate_cycles(theta.as_graph()).cycles) CHECK(is_long_s_cycle(c, s, 4));
}

TEST_CASE("augment_with_path rejects bad paths") {
  const Frame h = c8(10);
  const auto s = set_of(10, {0, 4});
  const auto x = set_of(10, {0, 4});
  auto clause = [&](const Path& p) {
    try {
      augment_with_path(h, x, p, s, 4);
    } catch (const AugmentPreconditionViolated& e) {
      return e.clause();
    }
    return std::string("accepted");
  };
  CHECK(clause(Path{{2, 3, 6}}) != "accepted");
  CHECK(clause(Path{{1, 8, 3}}) != "accepted");
  CHECK(clause(Path{{2}}) != "accepted");
  CHECK(clause(Path{{2, 8, 9}}) != "accepted");
  CHECK(clause(Path{{2, 8, 6}}) == "accepted");
  // Same-component and internal-vertex failures name different clauses.
  CHECK(clause(Path{{2, 3, 6}}) != clause(Path{{1, 8, 3}}));
}

TEST_CASE("improve: case i from the empty frame") {
  const auto s = set_of(6, {1});
  const Cycle c({0, 1, 2, 3});
  const auto cand = build_hitting_candidate(Frame(6), {}, s, 4);
  const auto r = improve(Frame(6), {}, c, cand, s, 4);
  CHECK(r.label == CaseLabel::Disjoint);
  CHECK(r.pendants.empty());
  CHECK(analyze(r.frame).cycle_components == std::vector<Cycle>{c});
  CHECK(score_of(r.frame, r.pendants, s) == Score{0, 1});
}

TEST_CASE("improve: case i with a second component") {
  Frame h(16);
  h.add_cycle(Cycle({0, 1, 2, 3, 4}));
  const auto s = set_of(16, {0, 12});
  const auto cand = build_hitting_candidate(h, {}, s, 4);
  const auto r = improve(h, {}, Cycle({10, 11, 12, 13}), cand, s, 4);
  CHECK(r.label == CaseLabel::Disjoint);
  CHECK(analyze(r.frame).cycle_components.size() == 2);
}

TEST_CASE("improve: case iii adds a pendant") {
  const Frame big = c8(12);
  const auto s = set_of(12, {0, 9});
  const auto cand = build_hitting_candidate(big, {}, s, 4);
  const Cycle c({4, 8, 9, 10});
  const auto r = improve(big, {}, c, cand, s, 4);
  CHECK(r.label == CaseLabel::NewPendant);
  REQUIRE(r.pendants.size() == 1);
  CHECK(r.pendants[0].attachment == 4);
  CHECK(r.pendants[0].cycle == c);
  CHECK(score_of(r.frame, r.pendants, s).terminal_weight == score_of(big, {}, s).terminal_weight + 1);
}

TEST_CASE("improve rejects a cycle meeting the candidate") {
  const Frame h = c8();
  const auto s = set_of(9, {0});
  const auto cand = build_hitting_candidate(h, {}, s, 4);
  CHECK_THROWS_AS(improve(h, {}, Cycle({0, 1, 8}), cand, s, 4), std::invalid_argument);
}

TEST_CASE("to_string covers every label") {
  std::set<std::string_view> names;
  for (int i = 0; i <= static_cast<int>(CaseLabel::StopHitting); ++i)
    names.insert(to_string(static_cast<CaseLabel>(i)));
  CHECK(names == std::set<std::string_view>{"i", "ii", "iii", "iv", "v-cross", "v-pendant", "v-splice", "v-reach",
                                            "v-replace", "stop-simonovits", "stop-pendants", "stop-hitting"});
}

TEST_CASE("extract_packing from cycle components") {
  Frame h(12);
  h.add_cycle(Cycle({0, 1, 2, 3}));
  h.add_cycle(Cycle({5, 6, 7, 8, 9}));
  const auto s = set_of(12, {2, 9});
  const auto cycles = extract_packing(h, 2, s, 4);
  REQUIRE(cycles.size() == 2);
  CHECK(verify_outcome(h.as_graph(), s, 2, 4, Packing{cycles}).pass);
}

TEST_CASE("extract_packing from a theta") {
  ThetaWithPendant t;
  const auto cycles = extract_packing(t.h, 1, t.s, t.ell);
  REQUIRE(cycles.size() == 1);
  CHECK(is_long_s_cycle(cycles[0], t.s, t.ell));
  CHECK(is_cycle_in(t.h.as_graph(), cycles[0]));
  CHECK_THROWS_AS(extract_packing(t.h, 2, t.s, t.ell), InsufficientBranchVertices);
}

TEST_CASE("extract_packing lifts cycles from a subdivided cubic graph") {
  const int ell = 5;
  const Instance cubic = generate_cubic(40, {.seed = 3});
  std::size_t next = 40;
  const std::size_t n = 40 + cubic.edges.size() * static_cast<std::size_t>(ell - 1);
  Frame h(n);
  for (auto [u, v] : cubic.edges) {
    std::vector<Vertex> path{u};
    for (int i = 0; i < ell - 1; ++i) path.push_back(static_cast<Vertex>(next++));
    path.push_back(v);
    h.add_path(path);
  }
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v) s.insert(static_cast<Vertex>(v));
  CHECK(analyze(h).branch.size() == 40);
  const auto cycles = extract_packing(h, 2, s, ell);
  REQUIRE(cycles.size() == 2);
  CHECK(verify_outcome(h.as_graph(), s, 2, ell, Packing{cycles}, 0).pass);
}

TEST_CASE("solve: triangle") {
  const Graph tri = cycle_graph(3);
  const auto r = solve(tri, set_of(3, {0}), 1, 3);
  REQUIRE(is_packing(r.outcome));
  CHECK(std::get<Packing>(r.outcome).cycles == std::vector<Cycle>{Cycle({0, 1, 2})});
}

TEST_CASE("solve: K4 with k = 2 returns a hitting set") {
  const Graph k4 = complete_graph(4);
  const auto r = solve(k4, all_of(k4), 2, 3);
  REQUIRE_FALSE(is_packing(r.outcome));
  CHECK(verify_outcome(k4, all_of(k4), 2, 3, r.outcome).pass);
  CHECK(max_packing(enumerate_cycles(k4), all_of(k4), 3) == 1);
}

TEST_CASE("solve: two disjoint five-cycles") {
  const Graph g = make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  const auto r = solve(g, all_of(g), 2, 5);
  REQUIRE(is_packing(r.outcome));
  std::set<Cycle> got(std::get<Packing>(r.outcome).cycles.begin(), std::get<Packing>(r.outcome).cycles.end());
  CHECK(got == std::set<Cycle>{Cycle({0, 1, 2, 3, 4}), Cycle({5, 7, 9, 6, 8})});
}

TEST_CASE("solve: Petersen outcome verifies") {
  const Graph pet = petersen_graph();
  for (int k = 1; k <= 3; ++k)
    for (int ell = 3; ell <= 9; ++ell) {
      const auto r = solve(pet, all_of(pet), k, ell);
      CHECK(verify_outcome(pet, all_of(pet), k, ell, r.outcome).pass);
    }
}

TEST_CASE("solve: fewer terminals than k short-cuts to S") {
  const Graph g = disjoint_triangles();
  const auto r = solve(g, set_of(6, {1}), 2, 3);
  CHECK(r.shortcut);
  CHECK(std::get<HittingSet>(r.outcome).vertices == set_of(6, {1}));
}

TEST_CASE("solve: argument checks") {
  const Graph g = cycle_graph(4);
  CHECK_THROWS_AS(solve(g, all_of(g), 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(solve(g, all_of(g), 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(solve(induced_subgraph(g, set_of(4, {0, 1})), set_of(4, {3}), 1, 3), std::invalid_argument);
}

TEST_CASE("solve: invariants hold at every step on random instances") {
  std::size_t steps = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const std::size_t n = 6 + seed % 13;
    const int k = 1 + static_cast<int>(seed % 3);
    const int ell = 2 + static_cast<int>(seed % 5);
    const long t = (seed % 4 == 0) ? -1 : static_cast<long>(1 + seed % n);
    const Instance inst =
        generate_gnp(n, 0.15 + 0.05 * static_cast<double>(seed % 6), {.k = k, .ell = ell, .terminals = t, .seed = seed});
    const Graph g = inst.graph();
    const VertexSet s = inst.terminal_set();
    CAPTURE(seed);
    const auto r = solve(g, s, k, ell, [&](const Frame& h, const PendantSet& pend, const HittingCandidate& cand) {
      ++steps;
      for (auto [u, v] : h.edges()) CHECK(g.has_edge(u, v));
      check_frame_state(h, pend, cand, s, ell);
    });
    CHECK(verify_outcome(g, s, k, ell, r.outcome).pass);
    CHECK(r.iterations <= iteration_cap(k, s.size()));
    for (std::size_t i = 1; i < r.trace.size(); ++i) CHECK(r.trace[i - 1].score < r.trace[i].score);
  }
  CHECK(steps > 100);
}
