#pragma once

#include <cstdint>
#include <random>

#include "scycle/cubic_packing.hpp"
#include "scycle/instance.hpp"

namespace scycle {

/// Seeded randomness for instance generation. The engine is std::mt19937_64
/// (fully specified by the standard); values are derived from raw 64-bit
/// outputs without implementation-defined distributions:
///   uniform01()  = (x >> 11) * 2^-53
///   below(n)     = x mod n, redrawing while x < (2^64 - n) mod n
/// so corpora reproduce across standard libraries and languages.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

struct GenOptions {
  int k = 2;
  int ell = 3;
  /// Number of terminals; negative (or >= n) means every vertex.
  long terminals = -1;
  std::uint64_t seed = 1;
};

/// Erdos-Renyi G(n, p): each pair u < v in lexicographic order is an edge
/// when uniform01() < p. Terminals are then drawn by partial Fisher-Yates.
Instance generate_gnp(std::size_t n, double p, const GenOptions& opt);

/// Uniform pairing model on 3n half-edges, rejected until simple. Requires
/// even n >= 4.
Instance generate_cubic(std::size_t n, const GenOptions& opt);

Instance generate_grid(std::size_t rows, std::size_t cols, const GenOptions& opt);

/// k-1 disjoint cliques on 2 ell - 1 vertices each, every vertex a terminal.
/// Requires k >= 2.
Instance generate_union_of_cliques(int k, int ell);

/// Pairing model without rejection: loops and parallel edges kept. Requires
/// even n >= 2.
Multigraph random_cubic_multigraph(std::size_t n, std::uint64_t seed);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph petersen_graph();

}  // namespace scycle
