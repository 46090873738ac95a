#include "scycle/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace scycle {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t threshold = (0 - n) % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x < threshold);
  return x % n;
}

namespace {

std::vector<Vertex> draw_terminals(std::size_t n, long count, Rng& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (count < 0 || static_cast<std::size_t>(count) >= n) return order;
  for (std::size_t i = 0; i < static_cast<std::size_t>(count); ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(order[i], order[j]);
  }
  order.resize(static_cast<std::size_t>(count));
  std::sort(order.begin(), order.end());
  return order;
}

// Perfect matching of 3n half-edges by Fisher-Yates; half-edge h belongs to
// vertex h / 3.
std::vector<std::pair<int, int>> cubic_pairing(std::size_t n, Rng& rng) {
  std::vector<int> half(3 * n);
  std::iota(half.begin(), half.end(), 0);
  for (std::size_t i = half.size(); i > 1; --i) std::swap(half[i - 1], half[rng.below(i)]);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < half.size(); i += 2) out.emplace_back(half[i] / 3, half[i + 1] / 3);
  return out;
}

void check_options(const GenOptions& opt) {
  if (opt.k < 1) throw std::invalid_argument("k must be at least 1");
  if (opt.ell < 1) throw std::invalid_argument("ell must be at least 1");
}

}  // namespace

Instance generate_gnp(std::size_t n, double p, const GenOptions& opt) {
  check_options(opt);
  if (n < 1) throw std::invalid_argument("gnp needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp needs 0 <= p <= 1");
  Rng rng(opt.seed);
  Instance inst{n, opt.k, opt.ell, {}, {}};
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) inst.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  inst.terminals = draw_terminals(n, opt.terminals, rng);
  return inst;
}

Instance generate_cubic(std::size_t n, const GenOptions& opt) {
  check_options(opt);
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("cubic needs even n >= 4");
  Rng rng(opt.seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto pairs = cubic_pairing(n, rng);
    std::set<Edge> seen;
    bool simple = true;
    for (auto [u, v] : pairs) {
      if (u == v || !seen.insert({std::min(u, v), std::max(u, v)}).second) {
        simple = false;
        break;
      }
    }
    if (!simple) continue;
    Instance inst{n, opt.k, opt.ell, {}, {}};
    inst.edges.assign(seen.begin(), seen.end());
    inst.terminals = draw_terminals(n, opt.terminals, rng);
    return inst;
  }
  throw std::runtime_error("cubic generator: no simple pairing found");
}

Instance generate_grid(std::size_t rows, std::size_t cols, const GenOptions& opt) {
  check_options(opt);
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs rows, cols >= 1");
  Rng rng(opt.seed);
  Instance inst{rows * cols, opt.k, opt.ell, {}, {}};
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) inst.edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) inst.edges.emplace_back(id(r, c), id(r + 1, c));
    }
  inst.terminals = draw_terminals(inst.n, opt.terminals, rng);
  return inst;
}

Instance generate_union_of_cliques(int k, int ell) {
  if (k < 2) throw std::invalid_argument("union-of-cliques needs k >= 2");
  if (ell < 1) throw std::invalid_argument("union-of-cliques needs ell >= 1");
  const std::size_t size = static_cast<std::size_t>(2 * ell - 1);
  Instance inst{size * static_cast<std::size_t>(k - 1), k, ell, {}, {}};
  for (int c = 0; c < k - 1; ++c) {
    const Vertex base = static_cast<Vertex>(c * size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i + 1; j < size; ++j)
        inst.edges.emplace_back(base + static_cast<Vertex>(i), base + static_cast<Vertex>(j));
  }
  inst.terminals.resize(inst.n);
  std::iota(inst.terminals.begin(), inst.terminals.end(), 0);
  return inst;
}

Multigraph random_cubic_multigraph(std::size_t n, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("cubic multigraph needs even n >= 2");
  Rng rng(seed);
  Multigraph mg(n);
  for (auto [u, v] : cubic_pairing(n, rng)) mg.add_edge(u, v);
  return mg;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v)
    g.add_edge(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
  return g;
}

Graph petersen_graph() {
  // Outer ring 0..4, inner pentagram 5..9, spokes i -- i+5.
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, i + 5);
  }
  return g;
}

}  // namespace scycle
