#include "scycle/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "scycle/errors.hpp"
#include "scycle/long_cycle.hpp"

namespace scycle {

namespace {

void check_cap(const Graph& g, std::size_t cap) {
  if (cap > kOracleHardCap) throw std::invalid_argument("oracle cap above " + std::to_string(kOracleHardCap));
  if (g.vertex_count() > cap)
    throw InstanceTooLarge("graph has " + std::to_string(g.vertex_count()) + " vertices, oracle cap is " +
                           std::to_string(cap));
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<std::uint32_t> adj(vertices.size(), 0);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i])) {
      auto j = std::lower_bound(vertices.begin(), vertices.end(), w) - vertices.begin();
      adj[i] |= std::uint32_t{1} << j;
    }
  return adj;
}

// any[m] = some long S-cycle support is a subset of m.
std::vector<char> subset_closure(std::size_t n, const std::vector<std::uint32_t>& supports) {
  std::vector<char> any(std::size_t{1} << n, 0);
  for (auto m : supports) any[m] = 1;
  for (std::size_t bit = 0; bit < n; ++bit)
    for (std::size_t m = 0; m < any.size(); ++m)
      if (m & (std::size_t{1} << bit)) any[m] |= any[m ^ (std::size_t{1} << bit)];
  return any;
}

}  // namespace

std::vector<Cycle> CycleInventory::long_s_cycles(const VertexSet& s, int ell) const {
  std::vector<Cycle> out;
  for (const auto& c : cycles)
    if (is_long_s_cycle(c, s, ell)) out.push_back(c);
  return out;
}

CycleInventory enumerate_cycles(const Graph& g, std::size_t cap) {
  check_cap(g, cap);
  CycleInventory inv;
  inv.universe = g.universe();
  inv.vertices = g.vertices();
  std::vector<char> on_path(g.universe(), 0);
  std::vector<Vertex> path;
  auto extend = [&](auto&& self, Vertex root) -> void {
    const Vertex tip = path.back();
    for (Vertex w : g.neighbors(tip)) {
      if (w == root && path.size() >= 3 && path[1] < tip) inv.cycles.emplace_back(path);
      if (w <= root || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      self(self, root);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (Vertex root : inv.vertices) {
    path.assign(1, root);
    on_path[root] = 1;
    extend(extend, root);
    on_path[root] = 0;
  }
  std::sort(inv.cycles.begin(), inv.cycles.end());
  return inv;
}

CycleSupports CycleSupports::from_inventory(const CycleInventory& inv) {
  if (inv.vertices.size() > kOracleHardCap) throw InstanceTooLarge("inventory too large for subset tables");
  CycleSupports sup;
  sup.universe_ = inv.universe;
  sup.vertices_ = inv.vertices;
  sup.hosts_.assign(std::size_t{1} << inv.vertices.size(), 0);
  for (const auto& c : inv.cycles) sup.hosts_[sup.mask_of(VertexSet::of(inv.universe, c.vertices()))] = 1;
  return sup;
}

CycleSupports CycleSupports::by_subset_dp(const Graph& g, std::size_t cap) {
  check_cap(g, cap);
  CycleSupports sup;
  sup.universe_ = g.universe();
  sup.vertices_ = g.vertices();
  const std::size_t n = sup.vertices_.size();
  sup.hosts_.assign(std::size_t{1} << n, 0);
  const auto adj = adjacency_masks(g, sup.vertices_);

  // reach[m] = endpoints u such that some path from the root visits exactly
  // {root} + (m shifted above the root) and ends at u.
  std::vector<std::uint32_t> reach;
  for (std::size_t root = 0; root < n; ++root) {
    const std::size_t higher = n - root - 1;
    const std::uint32_t root_bit = std::uint32_t{1} << root;
    reach.assign(std::size_t{1} << higher, 0);
    reach[0] = root_bit;
    for (std::size_t m = 0; m < reach.size(); ++m) {
      std::uint32_t tips = reach[m];
      if (!tips) continue;
      const std::uint32_t full = (static_cast<std::uint32_t>(m) << (root + 1)) | root_bit;
      if (std::popcount(full) >= 3 && (tips & adj[root])) sup.hosts_[full] = 1;
      while (tips) {
        const int u = std::countr_zero(tips);
        tips &= tips - 1;
        std::uint32_t next = adj[u] & ~full & ~((root_bit << 1) - 1);
        while (next) {
          const int w = std::countr_zero(next);
          next &= next - 1;
          reach[m | (std::size_t{1} << (w - root - 1))] |= std::uint32_t{1} << w;
        }
      }
    }
  }
  return sup;
}

std::uint32_t CycleSupports::mask_of(const VertexSet& set) const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (set.contains(vertices_[i])) mask |= std::uint32_t{1} << i;
  return mask;
}

VertexSet CycleSupports::set_of(std::uint32_t mask) const {
  VertexSet out(universe_);
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (mask & (std::uint32_t{1} << i)) out.insert(vertices_[i]);
  return out;
}

std::vector<std::uint32_t> CycleSupports::long_s_supports(const VertexSet& s, int ell) const {
  const std::uint32_t terminals = mask_of(s);
  const int min_size = std::max(ell, 3);
  std::vector<std::uint32_t> out;
  for (std::size_t m = 0; m < hosts_.size(); ++m)
    if (hosts_[m] && (m & terminals) && std::popcount(static_cast<std::uint32_t>(m)) >= min_size)
      out.push_back(static_cast<std::uint32_t>(m));
  return out;
}

std::vector<VertexSet> max_packing_supports(const CycleSupports& sup, const VertexSet& s, int ell) {
  const std::size_t n = sup.vertices().size();
  const auto supports = sup.long_s_supports(s, ell);
  if (supports.empty()) return {};
  const auto any = subset_closure(n, supports);
  // Only inclusion-minimal supports matter for disjoint packing; bucket them
  // by lowest vertex.
  std::vector<std::vector<std::uint32_t>> by_low(n);
  for (auto m : supports) {
    bool minimal = true;
    for (std::uint32_t rest = m; rest && minimal; rest &= rest - 1)
      if (any[m ^ (rest & -rest)]) minimal = false;
    if (minimal) by_low[std::countr_zero(m)].push_back(m);
  }
  std::vector<signed char> memo(std::size_t{1} << n, -1);
  auto best = [&](auto&& self, std::uint32_t avail) -> int {
    if (!any[avail]) return 0;
    if (memo[avail] >= 0) return memo[avail];
    const std::uint32_t low = avail & -avail;
    int result = self(self, avail ^ low);
    for (auto c : by_low[std::countr_zero(low)])
      if ((c & ~avail) == 0) result = std::max(result, 1 + self(self, avail & ~c));
    memo[avail] = static_cast<signed char>(result);
    return result;
  };
  std::uint32_t avail = (std::uint32_t{1} << n) - 1;
  std::vector<VertexSet> out;
  int remaining = best(best, avail);
  while (remaining > 0) {
    const std::uint32_t low = avail & -avail;
    std::uint32_t pick = 0;
    for (auto c : by_low[std::countr_zero(low)])
      if ((c & ~avail) == 0 && 1 + best(best, avail & ~c) == remaining) {
        pick = c;
        break;
      }
    if (pick) {
      out.push_back(sup.set_of(pick));
      avail &= ~pick;
      --remaining;
    } else {
      avail ^= low;
    }
  }
  return out;
}

std::size_t max_packing(const CycleSupports& sup, const VertexSet& s, int ell) {
  return max_packing_supports(sup, s, ell).size();
}

std::size_t max_packing(const CycleInventory& inv, const VertexSet& s, int ell) {
  return max_packing(CycleSupports::from_inventory(inv), s, ell);
}

VertexSet min_hitting_set(const CycleSupports& sup, const VertexSet& s, int ell) {
  const std::size_t n = sup.vertices().size();
  const auto any = subset_closure(n, sup.long_s_supports(s, ell));
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::size_t size = 0; size <= n; ++size) {
    if (size == 0) {
      if (!any[full]) return sup.set_of(0);
      continue;
    }
    // Gosper's hack: all masks with `size` bits in increasing order.
    std::uint64_t x = (std::uint64_t{1} << size) - 1;
    while (x <= full) {
      if (!any[full & ~static_cast<std::uint32_t>(x)]) return sup.set_of(static_cast<std::uint32_t>(x));
      const std::uint64_t c = x & (~x + 1);
      const std::uint64_t r = x + c;
      x = (((r ^ x) >> 2) / c) | r;
    }
  }
  return sup.set_of(full);
}

VertexSet min_hitting_set(const CycleInventory& inv, const VertexSet& s, int ell) {
  return min_hitting_set(CycleSupports::from_inventory(inv), s, ell);
}

std::optional<Cycle> cycle_on(const Graph& g, const VertexSet& support) {
  const auto members = support.members();
  if (members.size() < 3) return std::nullopt;
  const Vertex root = members.front();
  std::vector<char> used(g.universe(), 0);
  std::vector<Vertex> path{root};
  used[root] = 1;
  auto extend = [&](auto&& self) -> bool {
    const Vertex tip = path.back();
    if (path.size() == members.size()) return g.has_edge(tip, root);
    for (Vertex w : g.neighbors(tip)) {
      if (used[w] || !support.contains(w)) continue;
      used[w] = 1;
      path.push_back(w);
      if (self(self)) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  };
  if (!extend(extend)) return std::nullopt;
  return Cycle(path);
}

bool has_long_s_cycle(const CycleSupports& sup, const VertexSet& s, int ell, const VertexSet& removed) {
  const std::uint32_t gone = sup.mask_of(removed);
  for (auto m : sup.long_s_supports(s, ell))
    if ((m & gone) == 0) return true;
  return false;
}

Verdict verify_outcome(const Graph& g, const VertexSet& s, int k, int ell, const SolveOutcome& out,
                       std::size_t cap) {
  auto fail = [](std::string clause) { return Verdict{false, std::move(clause)}; };
  if (const auto* packing = std::get_if<Packing>(&out)) {
    if (packing->cycles.size() != static_cast<std::size_t>(k))
      return fail("cycle count: expected " + std::to_string(k) + ", got " +
                  std::to_string(packing->cycles.size()));
    std::vector<char> used(g.universe(), 0);
    for (const auto& c : packing->cycles) {
      if (!is_cycle_in(g, c)) return fail("not a cycle of G");
      if (!is_long_s_cycle(c, s, effective_length(ell))) return fail("not a long S-cycle");
      for (Vertex v : c.vertices()) {
        if (used[v]) return fail("disjointness: vertex " + std::to_string(v) + " shared");
        used[v] = 1;
      }
    }
    return {};
  }

  const auto& x = std::get<HittingSet>(out).vertices;
  for (Vertex v : x.members())
    if (!g.alive(v)) return fail("hitting set vertex " + std::to_string(v) + " is not in G");
  const bool shortcut = s.size() <= static_cast<std::size_t>(k) && x.size() <= s.size();
  if (!shortcut && static_cast<double>(x.size()) > hitting_set_bound(k, ell))
    return fail("size bound: |X| = " + std::to_string(x.size()) + " exceeds " +
                std::to_string(hitting_set_bound(k, ell)));
  VertexSet keep = g.vertex_set();
  for (Vertex v : x.members()) keep.erase(v);
  const Graph residual = induced_subgraph(g, keep);
  bool survives;
  if (residual.vertex_count() <= std::min(cap, kOracleHardCap))
    survives = has_long_s_cycle(CycleSupports::by_subset_dp(residual, std::min(cap, kOracleHardCap)), s, ell,
                                VertexSet(g.universe()));
  else
    survives = find_long_s_cycle(residual, s, ell).has_value();
  if (survives) return fail("residual cycle: G - X still has a long S-cycle");
  return {};
}

}  // namespace scycle
