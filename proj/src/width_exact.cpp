// Exact solvers. All four parameters are computed by dynamic programming over
// node subsets; tables hold one small integer per subset.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "widthlab/error.hpp"
#include "widthlab/width.hpp"

namespace widthlab {

namespace {

// 2^26 one-byte entries is the largest table the solvers will allocate.
constexpr int kHardSubsetLimit = 26;

using Mask = std::uint32_t;

void check_size(const MultiGraph& g, Param kind, int limit) {
  if (g.node_count() == 0) throw Error(Errc::InvalidArgument, "graph has no nodes");
  const int cap = std::min(limit, kHardSubsetLimit);
  if (g.node_count() > cap)
    throw Error(Errc::TooLarge, std::string(to_string(kind)) + ": " + std::to_string(g.node_count()) +
                                    " nodes exceed the exact limit of " + std::to_string(cap) +
                                    "; use the heuristic");
}

// Neighbourhoods of the underlying simple graph.
std::vector<Mask> simple_adjacency(const MultiGraph& g) {
  std::vector<Mask> adj(g.node_count(), 0);
  for (auto [a, b] : g.arcs()) {
    if (a == b) continue;
    adj[a] |= Mask{1} << b;
    adj[b] |= Mask{1} << a;
  }
  return adj;
}

// Nodes outside S + {v} reachable from v through S: v's neighbourhood once
// the nodes of S have been eliminated.
Mask eliminated_neighbourhood(const std::vector<Mask>& adj, Mask s, int v) {
  Mask reach = Mask{1} << v;
  Mask frontier = reach;
  Mask touched = 0;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    touched |= next;
    frontier = next & s & ~reach;
    reach |= frontier;
  }
  return touched & ~s & ~(Mask{1} << v);
}

std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

// Subsets in order of decreasing cardinality, one layer at a time.
template <typename Fn>
void for_each_subset_by_layer_desc(int n, Fn&& fn) {
  for (int k = n; k >= 0; --k) {
    if (k == 0) {
      fn(Mask{0});
      continue;
    }
    Mask s = (k == 32) ? ~Mask{0} : ((Mask{1} << k) - 1);
    const Mask limit = Mask{1} << n;
    while (s < limit) {
      fn(s);
      const Mask c = s & (~s + 1);
      const Mask r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
}

// Cut sizes with multiplicity for every subset.
std::vector<std::uint16_t> cut_table(const MultiGraph& g) {
  const int n = g.node_count();
  const auto mult = g.multiplicity();
  std::vector<int> deg(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) deg[v] += mult[v][w];
  std::vector<std::uint16_t> cut(std::size_t{1} << n, 0);
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    const int v = std::countr_zero(s);
    const Mask rest = s & (s - 1);
    int inside = 0;
    for (Mask r = rest; r; r &= r - 1) inside += mult[v][std::countr_zero(r)];
    cut[s] = static_cast<std::uint16_t>(cut[rest] + deg[v] - 2 * inside);
  }
  return cut;
}

// Generic linear-arrangement DP: best[S] is the least achievable maximum
// cost over orderings of the nodes outside the placed prefix S, where
// placing v after S costs step(S, v). The lexicographically smallest optimal
// ordering is read off greedily: a node may come next whenever the best
// completion after it still meets the global optimum.
template <typename Step>
std::pair<int, std::vector<int>> arrangement_dp(int n, Step&& step) {
  const Mask full = (n == 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
  std::vector<std::uint8_t> best(std::size_t{1} << n, 0);
  for_each_subset_by_layer_desc(n, [&](Mask s) {
    if (s == full) return;
    int value = std::numeric_limits<int>::max();
    for (Mask free = full & ~s; free; free &= free - 1) {
      const int v = std::countr_zero(free);
      const int rest = best[s | (Mask{1} << v)];
      if (rest >= value) continue;
      value = std::min(value, std::max(rest, step(s, v)));
    }
    best[s] = static_cast<std::uint8_t>(std::min(value, 255));
  });
  std::vector<int> order;
  Mask s = 0;
  while (s != full) {
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1) continue;
      const Mask next = s | (Mask{1} << v);
      if (std::max<int>(best[next], step(s, v)) <= best[0]) {
        order.push_back(v);
        s = next;
        break;
      }
    }
  }
  return {best[0], order};
}

}  // namespace

WidthReport treewidth_exact(const MultiGraph& g, const ExactLimits& limits) {
  check_size(g, Param::Treewidth, limits.treewidth);
  const int n = g.node_count();
  const auto adj = simple_adjacency(g);
  // The Q-sets of the DP are bounded by n, which fits the byte table.
  auto [value, order] = arrangement_dp(n, [&](Mask s, int v) {
    return std::popcount(eliminated_neighbourhood(adj, s, v));
  });
  WidthReport report{Param::Treewidth, value, true, decomposition_from_elimination(g, order)};
  return report;
}

WidthReport pathwidth_exact(const MultiGraph& g, const ExactLimits& limits) {
  check_size(g, Param::Pathwidth, limits.pathwidth);
  const int n = g.node_count();
  const auto adj = simple_adjacency(g);
  const Mask full = (Mask{1} << n) - 1;
  // Vertex separation: prefix nodes that still have a neighbour outside.
  std::vector<std::uint8_t> boundary(std::size_t{1} << n, 0);
  for (Mask p = 1; p <= full; ++p) {
    int count = 0;
    for (Mask r = p; r; r &= r - 1)
      if (adj[std::countr_zero(r)] & ~p) ++count;
    boundary[p] = static_cast<std::uint8_t>(count);
  }
  auto [value, order] =
      arrangement_dp(n, [&](Mask s, int v) { return int{boundary[s | (Mask{1} << v)]}; });
  PathDecomposition pd;
  Mask prefix = 0;
  for (int v : order) {
    Mask bag = Mask{1} << v;
    for (Mask r = prefix; r; r &= r - 1)
      if (adj[std::countr_zero(r)] & ~prefix) bag |= Mask{1} << std::countr_zero(r);
    pd.bags.push_back(bits_of(bag));
    prefix |= Mask{1} << v;
  }
  return WidthReport{Param::Pathwidth, value, true, std::move(pd)};
}

WidthReport cutwidth_exact(const MultiGraph& g, const ExactLimits& limits) {
  check_size(g, Param::Cutwidth, limits.cutwidth);
  const int n = g.node_count();
  const auto cut = cut_table(g);
  if (*std::max_element(cut.begin(), cut.end()) > 255)
    throw Error(Errc::TooLarge, "cut sizes exceed the exact solver's table range");
  auto [value, order] = arrangement_dp(n, [&](Mask s, int v) { return int{cut[s | (Mask{1} << v)]}; });
  return WidthReport{Param::Cutwidth, value, true, make_layout(g, order)};
}

WidthReport congestion_exact(const MultiGraph& g, const ExactLimits& limits) {
  check_size(g, Param::Congestion, limits.congestion);
  const int n = g.node_count();
  if (n == 1) {
    HostTree host{1, {}, {0}};
    return WidthReport{Param::Congestion, 0, true, host};
  }
  const auto cut = cut_table(g);
  const Mask full = (Mask{1} << n) - 1;
  // best[S]: least possible maximum load over carvings of S, counting the
  // arc above S; split[S] is the canonical part holding S's lowest node.
  std::vector<std::uint16_t> best(std::size_t{1} << n, 0);
  std::vector<Mask> split(std::size_t{1} << n, 0);
  for (Mask s = 1; s <= full; ++s) {
    const Mask low = s & (~s + 1);
    const Mask rest = s ^ low;
    if (rest == 0) {
      best[s] = cut[s];
      continue;
    }
    int value = std::numeric_limits<int>::max();
    Mask choice = 0;
    // Descending submask walk; ties move to the smaller part.
    for (Mask sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
      const Mask a = low | sub;
      const int v = std::max(best[a], best[s ^ a]);
      if (v <= value) {
        value = v;
        choice = a;
      }
      if (sub == 0) break;
    }
    best[s] = static_cast<std::uint16_t>(std::max<int>(cut[s], value));
    split[s] = choice;
  }

  HostTree host;
  host.leaf_of.resize(n);
  for (int v = 0; v < n; ++v) host.leaf_of[v] = v;
  host.node_count = n;
  auto build = [&](auto&& self, Mask s) -> int {
    if (std::popcount(s) == 1) return std::countr_zero(s);
    const int a = self(self, split[s]);
    const int b = self(self, s ^ split[s]);
    const int x = host.node_count++;
    host.arcs.emplace_back(x, a);
    host.arcs.emplace_back(x, b);
    return x;
  };
  const int a = build(build, split[full]);
  const int b = build(build, full ^ split[full]);
  host.arcs.emplace_back(a, b);
  return WidthReport{Param::Congestion, best[full], true, std::move(host)};
}

WidthReport width_exact(const MultiGraph& g, Param kind, const ExactLimits& limits) {
  switch (kind) {
    case Param::Treewidth: return treewidth_exact(g, limits);
    case Param::Pathwidth: return pathwidth_exact(g, limits);
    case Param::Cutwidth: return cutwidth_exact(g, limits);
    case Param::Congestion: return congestion_exact(g, limits);
  }
  throw Error(Errc::InvalidArgument, "unknown parameter");
}

}  // namespace widthlab
