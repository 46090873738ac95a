#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "scycle/generators.hpp"

using namespace scycle;
using namespace scycle::test;

TEST_CASE("graph rejects loops, parallel edges and bad ids") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric and sorted") {
  const Graph g = make_graph(5, {{3, 1}, {0, 3}, {3, 4}, {2, 3}});
  const auto nb = g.neighbors(3);
  CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{0, 1, 2, 4});
  for (Vertex u : g.vertices())
    for (Vertex w : g.neighbors(u)) CHECK(g.has_edge(w, u));
  CHECK(g.edges() == std::vector<Edge>{{0, 3}, {1, 3}, {2, 3}, {3, 4}});
}

TEST_CASE("cycle canonical form") {
  CHECK(Cycle({2, 0, 1}).vertices() == std::vector<Vertex>{0, 1, 2});
  CHECK(Cycle({3, 5, 0, 4}).vertices() == std::vector<Vertex>{0, 4, 3, 5});
  CHECK(Cycle({4, 0, 3, 5}).vertices() == std::vector<Vertex>{0, 3, 5, 4});
  CHECK(Cycle({1, 2, 3}) == Cycle({3, 2, 1}));
  CHECK_THROWS_AS(Cycle({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Cycle({0, 1, 0, 2}), std::invalid_argument);
}

TEST_CASE("path and cycle membership") {
  const Graph g = cycle_graph(5);
  CHECK(is_path_in(g, Path{{0, 1, 2}}));
  CHECK_FALSE(is_path_in(g, Path{{0, 2}}));
  CHECK_FALSE(is_path_in(g, Path{{0, 1, 0}}));
  CHECK(is_cycle_in(g, Cycle({0, 1, 2, 3, 4})));
  CHECK_FALSE(is_cycle_in(g, Cycle({0, 1, 2})));
}

TEST_CASE("induced_subgraph") {
  const Graph tri = cycle_graph(3);
  const Graph kept = induced_subgraph(tri, set_of(3, {0, 1}));
  CHECK(kept.edges() == std::vector<Edge>{{0, 1}});
  CHECK(kept.vertex_count() == 2);

  const Graph k4 = complete_graph(4);
  CHECK(induced_subgraph(k4, k4.vertex_set()) == k4);

  const Graph p = path_graph(4);
  const Graph sub = induced_subgraph(p, set_of(4, {0, 1, 3}));
  CHECK(sub.edges() == std::vector<Edge>{{0, 1}});
  CHECK(sub.alive(3));
  CHECK_FALSE(sub.alive(2));
  CHECK(sub.degree(3) == 0);
}

TEST_CASE("is_long_s_cycle") {
  const Cycle tri({0, 1, 2});
  CHECK(is_long_s_cycle(tri, set_of(3, {1}), 3));
  CHECK_FALSE(is_long_s_cycle(tri, set_of(3, {1}), 4));
  CHECK_FALSE(is_long_s_cycle(tri, set_of(6, {5}), 3));
}

TEST_CASE("is_h_path") {
  // H is the edge 0-2; vertex 1 is outside.
  const auto h = set_of(3, {0, 2});
  auto h_edge = [](Vertex u, Vertex v) { return (u == 0 && v == 2) || (u == 2 && v == 0); };
  CHECK(is_h_path(Path{{0, 1, 2}}, h, h_edge));
  CHECK_FALSE(is_h_path(Path{{0, 2}}, h, h_edge));
  CHECK_FALSE(is_h_path(Path{{0}}, h, h_edge));
  CHECK_FALSE(is_h_path(Path{{0, 1}}, h, h_edge));
}

TEST_CASE("ball") {
  const Graph p = path_graph(5);
  CHECK(ball(p, set_of(5, {2}), 1) == set_of(5, {1, 2, 3}));
  const Graph k4 = complete_graph(4);
  CHECK(ball(k4, set_of(4, {0, 3}), 0) == set_of(4, {0, 3}));
  const Graph c6 = cycle_graph(6);
  CHECK(ball(c6, set_of(6, {0}), 2) == set_of(6, {4, 5, 0, 1, 2}));
}

TEST_CASE("components") {
  const auto parts = components(make_graph(3, {{0, 1}}));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == set_of(3, {0, 1}));
  CHECK(parts[1] == set_of(3, {2}));
  CHECK(components(Graph(0)).empty());
  const Graph pet = petersen_graph();
  REQUIRE(components(pet).size() == 1);
  CHECK(components(pet)[0] == pet.vertex_set());
}

TEST_CASE("radius helpers use floor semantics") {
  CHECK(half_radius(1) == 0);
  CHECK(half_radius(4) == 1);
  CHECK(half_radius(5) == 2);
  CHECK(effective_length(1) == 3);
  CHECK(effective_length(7) == 7);
}
