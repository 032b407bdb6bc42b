#include "widthlab/width.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "widthlab/error.hpp"

namespace widthlab {

std::string_view to_string(Param p) noexcept {
  switch (p) {
    case Param::Treewidth: return "tw";
    case Param::Pathwidth: return "pw";
    case Param::Cutwidth: return "cw";
    case Param::Congestion: return "cng";
  }
  return "?";
}

Param parse_param(std::string_view name) {
  if (name == "tw") return Param::Treewidth;
  if (name == "pw") return Param::Pathwidth;
  if (name == "cw") return Param::Cutwidth;
  if (name == "cng") return Param::Congestion;
  throw Error(Errc::InvalidArgument, "unknown parameter '" + std::string(name) + "'");
}

int ExactLimits::for_param(Param p) const {
  switch (p) {
    case Param::Treewidth: return treewidth;
    case Param::Pathwidth: return pathwidth;
    case Param::Cutwidth: return cutwidth;
    case Param::Congestion: return congestion;
  }
  return 0;
}

namespace {

int max_bag_width(const std::vector<std::vector<int>>& bags) {
  std::size_t largest = 0;
  for (const auto& b : bags) largest = std::max(largest, b.size());
  return static_cast<int>(largest) - 1;
}

}  // namespace

int TreeDecomposition::width() const { return max_bag_width(bags); }
int PathDecomposition::width() const { return max_bag_width(bags); }

TreeDecomposition PathDecomposition::as_tree() const {
  TreeDecomposition td;
  td.bags = bags;
  for (std::size_t i = 0; i + 1 < bags.size(); ++i)
    td.arcs.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  return td;
}

std::string_view to_string(NiceKind k) noexcept {
  switch (k) {
    case NiceKind::Leaf: return "leaf";
    case NiceKind::Introduce: return "introduce";
    case NiceKind::Forget: return "forget";
    case NiceKind::Join: return "join";
  }
  return "?";
}

int NiceTreeDecomposition::width() const {
  std::size_t largest = 0;
  for (const auto& b : bags) largest = std::max(largest, b.bag.size());
  return static_cast<int>(largest) - 1;
}

TreeDecomposition NiceTreeDecomposition::as_tree() const {
  TreeDecomposition td;
  for (std::size_t i = 0; i < bags.size(); ++i) {
    td.bags.push_back(bags[i].bag);
    for (int c : bags[i].children) td.arcs.emplace_back(static_cast<int>(i), c);
  }
  return td;
}

// ---------------------------------------------------------------------------
// Witness construction shared by the exact and heuristic solvers.

TreeDecomposition decomposition_from_elimination(const MultiGraph& g, const std::vector<int>& order) {
  const int n = g.node_count();
  std::vector<std::set<int>> adj(n);
  for (auto [a, b] : g.arcs()) {
    if (a == b) continue;
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  TreeDecomposition td;
  td.bags.resize(n);
  std::vector<int> parent(n, -1);
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    std::vector<int> later(adj[v].begin(), adj[v].end());
    auto& bag = td.bags[i];
    bag = later;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    int next = -1;
    for (int u : later)
      if (next < 0 || pos[u] < next) next = pos[u];
    parent[i] = next >= 0 ? next : (i + 1 < n ? i + 1 : -1);
    for (int a : later) {
      adj[a].erase(v);
      for (int b : later)
        if (a != b) adj[a].insert(b);
    }
    adj[v].clear();
  }
  for (int i = 0; i < n; ++i)
    if (parent[i] >= 0) td.arcs.emplace_back(parent[i], i);
  return td;
}

namespace {

// Vertex separation bags for an ordering (see pathwidth_exact).
PathDecomposition path_from_ordering(const MultiGraph& g, const std::vector<int>& order) {
  const int n = g.node_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  // last[v]: position of v's latest neighbour.
  std::vector<int> last(n);
  for (int v = 0; v < n; ++v) last[v] = pos[v];
  for (auto [a, b] : g.arcs()) {
    last[a] = std::max(last[a], pos[b]);
    last[b] = std::max(last[b], pos[a]);
  }
  PathDecomposition pd;
  for (int i = 0; i < n; ++i) {
    std::vector<int> bag{order[i]};
    for (int j = 0; j < i; ++j)
      if (last[order[j]] >= i) bag.push_back(order[j]);
    std::sort(bag.begin(), bag.end());
    pd.bags.push_back(std::move(bag));
  }
  return pd;
}

std::vector<int> separation_profile(const MultiGraph& g, const std::vector<int>& order) {
  const int n = g.node_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<int> last(n);
  for (int v = 0; v < n; ++v) last[v] = pos[v];
  for (auto [a, b] : g.arcs()) {
    last[a] = std::max(last[a], pos[b]);
    last[b] = std::max(last[b], pos[a]);
  }
  // Node order[j] is in the boundary of prefixes j .. last-1.
  std::vector<int> diff(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    if (last[v] > pos[v]) {
      ++diff[pos[v]];
      --diff[last[v]];
    }
  }
  std::vector<int> profile;
  int running = 0;
  for (int l = 0; l < n; ++l) {
    running += diff[l];
    profile.push_back(running);
  }
  return profile;
}

using Rng = std::mt19937_64;

// Simulated annealing over orderings, minimizing the largest entry of a
// profile and then its sum.
template <typename Profile>
std::vector<int> anneal_ordering(int n, Profile&& profile, Rng& rng, std::vector<int> start) {
  if (n <= 2) return start;
  auto energy = [&](const std::vector<int>& order) {
    const auto p = profile(order);
    int mx = 0;
    long sum = 0;
    for (int x : p) {
      mx = std::max(mx, x);
      sum += x;
    }
    return mx + static_cast<double>(sum) / (static_cast<double>(p.size()) * (mx + 1) + 1.0);
  };
  std::vector<int> current = std::move(start);
  double current_e = energy(current);
  std::vector<int> best = current;
  double best_e = current_e;
  const int iterations = std::min(60000, 400 * n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double temperature = 1.0;
  const double cooling = std::pow(0.005, 1.0 / iterations);
  for (int it = 0; it < iterations; ++it, temperature *= cooling) {
    const int from = pick(rng);
    int to = pick(rng);
    if (from == to) continue;
    std::vector<int> candidate = current;
    const int node = candidate[from];
    candidate.erase(candidate.begin() + from);
    candidate.insert(candidate.begin() + to, node);
    const double e = energy(candidate);
    if (e <= current_e || unit(rng) < std::exp((current_e - e) / temperature)) {
      current = std::move(candidate);
      current_e = e;
      if (e < best_e) {
        best_e = e;
        best = current;
      }
    }
  }
  return best;
}

// Greedy min-fill elimination, ties broken at random.
std::vector<int> greedy_elimination(const MultiGraph& g, Rng& rng, bool min_degree) {
  const int n = g.node_count();
  std::vector<std::set<int>> adj(n);
  for (auto [a, b] : g.arcs()) {
    if (a == b) continue;
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<bool> gone(n, false);
  std::vector<int> order;
  std::vector<double> jitter(n);
  std::uniform_real_distribution<double> unit(0.0, 0.5);
  for (int step = 0; step < n; ++step) {
    for (auto& j : jitter) j = unit(rng);
    int pick = -1;
    double pick_score = 0;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      double score;
      if (min_degree) {
        score = static_cast<double>(adj[v].size());
      } else {
        long fill = 0;
        for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
          for (auto b = std::next(a); b != adj[v].end(); ++b)
            if (!adj[*a].count(*b)) ++fill;
        score = static_cast<double>(fill);
      }
      score += jitter[v];
      if (pick < 0 || score < pick_score) {
        pick = v;
        pick_score = score;
      }
    }
    order.push_back(pick);
    gone[pick] = true;
    std::vector<int> nb(adj[pick].begin(), adj[pick].end());
    for (int a : nb) {
      adj[a].erase(pick);
      for (int b : nb)
        if (a != b) adj[a].insert(b);
    }
    adj[pick].clear();
  }
  return order;
}

std::vector<int> identity_order(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

std::vector<int> shuffled_order(int n, Rng& rng) {
  auto order = identity_order(n);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

// Carving built by recursively splitting clusters at the best point of a
// linear ordering.
HostTree bisection_host(const MultiGraph& g, const std::vector<int>& order) {
  const int n = g.node_count();
  HostTree host;
  host.leaf_of = identity_order(n);
  host.node_count = n;
  if (n <= 1) return host;
  std::vector<char> inside(n, 0);
  auto cut_of = [&](const std::vector<int>& part) {
    std::fill(inside.begin(), inside.end(), 0);
    for (int v : part) inside[v] = 1;
    int c = 0;
    for (auto [a, b] : g.arcs())
      if (inside[a] != inside[b]) ++c;
    return c;
  };
  auto best_split = [&](const std::vector<int>& cluster) {
    std::size_t best_at = 1;
    int best_val = -1;
    for (std::size_t at = 1; at < cluster.size(); ++at) {
      std::vector<int> a(cluster.begin(), cluster.begin() + static_cast<long>(at));
      std::vector<int> b(cluster.begin() + static_cast<long>(at), cluster.end());
      const int val = std::max(cut_of(a), cut_of(b));
      if (best_val < 0 || val < best_val) {
        best_val = val;
        best_at = at;
      }
    }
    return best_at;
  };
  auto build = [&](auto&& self, const std::vector<int>& cluster) -> int {
    if (cluster.size() == 1) return cluster[0];
    const std::size_t at = best_split(cluster);
    const int a = self(self, std::vector<int>(cluster.begin(), cluster.begin() + static_cast<long>(at)));
    const int b = self(self, std::vector<int>(cluster.begin() + static_cast<long>(at), cluster.end()));
    const int x = host.node_count++;
    host.arcs.emplace_back(x, a);
    host.arcs.emplace_back(x, b);
    return x;
  };
  const std::size_t at = best_split(order);
  const int a = build(build, std::vector<int>(order.begin(), order.begin() + static_cast<long>(at)));
  const int b = build(build, std::vector<int>(order.begin() + static_cast<long>(at), order.end()));
  host.arcs.emplace_back(a, b);
  return host;
}

}  // namespace

WidthReport heuristic_upper(const MultiGraph& g, Param kind, std::uint64_t seed) {
  const int n = g.node_count();
  if (n == 0) throw Error(Errc::InvalidArgument, "graph has no nodes");
  Rng rng(seed);
  switch (kind) {
    case Param::Treewidth: {
      TreeDecomposition best;
      int best_w = -1;
      for (int round = 0; round < 8; ++round) {
        const auto order = greedy_elimination(g, rng, round % 2 == 1);
        auto td = decomposition_from_elimination(g, order);
        if (best_w < 0 || td.width() < best_w) {
          best_w = td.width();
          best = std::move(td);
        }
      }
      return WidthReport{kind, best_w, false, std::move(best)};
    }
    case Param::Pathwidth: {
      auto profile = [&](const std::vector<int>& o) { return separation_profile(g, o); };
      const auto order = anneal_ordering(n, profile, rng, greedy_elimination(g, rng, false));
      auto pd = path_from_ordering(g, order);
      const int w = pd.width();
      return WidthReport{kind, w, false, std::move(pd)};
    }
    case Param::Cutwidth: {
      auto profile = [&](const std::vector<int>& o) { return cut_profile(g, o); };
      const auto order = anneal_ordering(n, profile, rng, shuffled_order(n, rng));
      auto layout = make_layout(g, order);
      const int w = layout.width();
      return WidthReport{kind, w, false, std::move(layout)};
    }
    case Param::Congestion: {
      auto profile = [&](const std::vector<int>& o) { return cut_profile(g, o); };
      const auto order = anneal_ordering(n, profile, rng, shuffled_order(n, rng));
      HostTree best = caterpillar_host(order);
      int best_val = congestion_of(g, best);
      HostTree split = bisection_host(g, order);
      if (const int v = congestion_of(g, split); v < best_val) {
        best_val = v;
        best = std::move(split);
      }
      return WidthReport{kind, best_val, false, std::move(best)};
    }
  }
  throw Error(Errc::InvalidArgument, "unknown parameter");
}

int witness_value(const MultiGraph& g, const WidthReport& report) {
  auto require = [](const DecompositionReport& r) {
    if (!r.valid())
      throw Error(Errc::InvalidDecomposition,
                  "witness violates " + std::string(to_string(r.problems.front().kind)));
    return r.width;
  };
  switch (report.kind) {
    case Param::Treewidth:
      if (auto* td = std::get_if<TreeDecomposition>(&report.witness)) return require(validate_decomposition(g, *td));
      break;
    case Param::Pathwidth:
      if (auto* pd = std::get_if<PathDecomposition>(&report.witness)) return require(validate_decomposition(g, *pd));
      break;
    case Param::Cutwidth:
      if (auto* layout = std::get_if<LinearLayout>(&report.witness)) {
        const auto cuts = cut_profile(g, layout->ordering);
        return cuts.empty() ? 0 : *std::max_element(cuts.begin(), cuts.end());
      }
      break;
    case Param::Congestion:
      if (auto* host = std::get_if<HostTree>(&report.witness)) return congestion_of(g, *host);
      break;
  }
  throw Error(Errc::InvalidDecomposition, "witness type does not match the parameter");
}

std::string_view to_string(DecompositionViolation v) noexcept {
  switch (v) {
    case DecompositionViolation::NotATree: return "NotATree";
    case DecompositionViolation::BadBagEntry: return "BadBagEntry";
    case DecompositionViolation::NodeUncovered: return "NodeUncovered";
    case DecompositionViolation::BagsDisconnected: return "BagsDisconnected";
    case DecompositionViolation::ArcUncovered: return "ArcUncovered";
  }
  return "?";
}

DecompositionReport validate_decomposition(const MultiGraph& g, const TreeDecomposition& d) {
  DecompositionReport report;
  report.width = d.width();
  const int n = g.node_count();
  const int b = static_cast<int>(d.bags.size());

  bool tree = static_cast<int>(d.arcs.size()) == std::max(b - 1, 0);
  std::vector<std::vector<int>> adj(b);
  for (auto [x, y] : d.arcs) {
    if (x < 0 || y < 0 || x >= b || y >= b || x == y) {
      tree = false;
      continue;
    }
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  if (tree && b > 0) {
    std::vector<bool> seen(b, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
    }
    tree = reached == b;
  }
  if (!tree) report.problems.push_back({DecompositionViolation::NotATree});

  std::vector<std::vector<char>> member(b, std::vector<char>(n, 0));
  for (int i = 0; i < b; ++i) {
    for (int v : d.bags[i]) {
      if (v < 0 || v >= n || member[i][v]) {
        report.problems.push_back({DecompositionViolation::BadBagEntry, v});
        continue;
      }
      member[i][v] = 1;
    }
  }
  for (int v = 0; v < n; ++v) {
    int bags_with_v = 0;
    for (int i = 0; i < b; ++i) bags_with_v += member[i][v];
    if (bags_with_v == 0) {
      report.problems.push_back({DecompositionViolation::NodeUncovered, v});
      continue;
    }
    if (!tree) continue;
    // In a tree, the bags holding v form a subtree iff they span
    // bags_with_v - 1 tree arcs.
    int arcs_with_v = 0;
    for (auto [x, y] : d.arcs)
      if (member[x][v] && member[y][v]) ++arcs_with_v;
    if (arcs_with_v != bags_with_v - 1) report.problems.push_back({DecompositionViolation::BagsDisconnected, v});
  }
  for (auto [u, v] : g.arcs()) {
    bool covered = false;
    for (int i = 0; i < b && !covered; ++i) covered = member[i][u] && member[i][v];
    if (!covered) report.problems.push_back({DecompositionViolation::ArcUncovered, -1, {u, v}});
  }
  return report;
}

DecompositionReport validate_decomposition(const MultiGraph& g, const PathDecomposition& d) {
  return validate_decomposition(g, d.as_tree());
}

NiceTreeDecomposition make_nice(const TreeDecomposition& input) {
  // Contract every tree arc whose one bag contains the other.
  const int b = static_cast<int>(input.bags.size());
  std::vector<std::set<int>> bags(b);
  for (int i = 0; i < b; ++i) bags[i] = std::set<int>(input.bags[i].begin(), input.bags[i].end());
  std::vector<std::set<int>> adj(b);
  for (auto [x, y] : input.arcs) {
    adj[x].insert(y);
    adj[y].insert(x);
  }
  std::vector<bool> alive(b, true);
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < b && !changed; ++x) {
      if (!alive[x]) continue;
      for (int y : adj[x]) {
        if (!std::includes(bags[y].begin(), bags[y].end(), bags[x].begin(), bags[x].end())) continue;
        for (int z : adj[x]) {
          if (z == y) continue;
          adj[z].erase(x);
          adj[z].insert(y);
          adj[y].insert(z);
        }
        adj[y].erase(x);
        adj[x].clear();
        alive[x] = false;
        changed = true;
        break;
      }
    }
  }

  NiceTreeDecomposition nice;
  if (b == 0) {
    nice.bags.push_back({NiceKind::Leaf, {}, {}, -1});
    return nice;
  }
  int root = -1;
  for (int x = 0; x < b && root < 0; ++x)
    if (alive[x] && adj[x].size() <= 1) root = x;

  auto add = [&](NiceKind kind, std::vector<int> bag, std::vector<int> children, int vertex) {
    nice.bags.push_back({kind, std::move(bag), std::move(children), vertex});
    return static_cast<int>(nice.bags.size()) - 1;
  };
  // Forget what the parent lacks, then introduce what it adds.
  auto chain_up = [&](int node, const std::set<int>& from, const std::set<int>& to) {
    std::set<int> current = from;
    for (int v : from) {
      if (to.count(v)) continue;
      current.erase(v);
      node = add(NiceKind::Forget, std::vector<int>(current.begin(), current.end()), {node}, v);
    }
    for (int v : to) {
      if (current.count(v)) continue;
      current.insert(v);
      node = add(NiceKind::Introduce, std::vector<int>(current.begin(), current.end()), {node}, v);
    }
    return node;
  };
  auto build = [&](auto&& self, int x, int parent) -> int {
    std::vector<int> tops;
    for (int c : adj[x]) {
      if (c == parent) continue;
      tops.push_back(chain_up(self(self, c, x), bags[c], bags[x]));
    }
    if (tops.empty()) return chain_up(add(NiceKind::Leaf, {}, {}, -1), {}, bags[x]);
    int current = tops[0];
    const std::vector<int> bag(bags[x].begin(), bags[x].end());
    for (std::size_t i = 1; i < tops.size(); ++i) current = add(NiceKind::Join, bag, {current, tops[i]}, -1);
    return current;
  };
  nice.root = build(build, root, -1);
  return nice;
}

bool nice_tags_consistent(const NiceTreeDecomposition& d) {
  for (const auto& node : d.bags) {
    switch (node.kind) {
      case NiceKind::Leaf:
        if (!node.children.empty() || !node.bag.empty()) return false;
        break;
      case NiceKind::Introduce:
      case NiceKind::Forget: {
        if (node.children.size() != 1) return false;
        const auto& child = d.bags[node.children[0]].bag;
        const auto& bigger = node.kind == NiceKind::Introduce ? node.bag : child;
        const auto& smaller = node.kind == NiceKind::Introduce ? child : node.bag;
        std::vector<int> expected = smaller;
        if (std::find(expected.begin(), expected.end(), node.vertex) != expected.end()) return false;
        expected.push_back(node.vertex);
        std::sort(expected.begin(), expected.end());
        if (expected != bigger) return false;
        break;
      }
      case NiceKind::Join:
        if (node.children.size() != 2) return false;
        for (int c : node.children)
          if (d.bags[c].bag != node.bag) return false;
        break;
    }
  }
  return true;
}

namespace {

void write_bag(std::ostream& out, const std::vector<int>& bag) {
  out << " :";
  for (int v : bag) out << ' ' << v;
  out << '\n';
}

}  // namespace

std::string format_decomposition(const TreeDecomposition& d) {
  std::ostringstream out;
  out << "decomposition tree " << d.bags.size() << '\n';
  for (std::size_t i = 0; i < d.bags.size(); ++i) {
    out << "bag " << i;
    write_bag(out, d.bags[i]);
  }
  for (auto [x, y] : d.arcs) out << "arc " << x << ' ' << y << '\n';
  return out.str();
}

std::string format_decomposition(const PathDecomposition& d) {
  std::ostringstream out;
  out << "decomposition path " << d.bags.size() << '\n';
  for (std::size_t i = 0; i < d.bags.size(); ++i) {
    out << "bag " << i;
    write_bag(out, d.bags[i]);
  }
  return out.str();
}

std::string format_decomposition(const NiceTreeDecomposition& d) {
  std::ostringstream out;
  out << "nice " << d.bags.size() << " root " << d.root << '\n';
  for (std::size_t i = 0; i < d.bags.size(); ++i) {
    const auto& node = d.bags[i];
    out << "bag " << i << ' ' << to_string(node.kind);
    if (node.kind == NiceKind::Introduce || node.kind == NiceKind::Forget) out << ' ' << node.vertex;
    write_bag(out, node.bag);
  }
  for (std::size_t i = 0; i < d.bags.size(); ++i)
    for (int c : d.bags[i].children) out << "arc " << i << ' ' << c << '\n';
  return out.str();
}

TreeDecomposition parse_tree_decomposition(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, word, shape;
  TreeDecomposition td;
  bool header = false, path = false;
  std::size_t count = 0;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!(ls >> word)) continue;
    if (!header) {
      if (word != "decomposition" || !(ls >> shape >> count) || (shape != "tree" && shape != "path"))
        throw Error(Errc::MalformedLine, "expected 'decomposition tree|path B'");
      header = true;
      path = shape == "path";
      td.bags.resize(count);
      seen.assign(count, false);
      continue;
    }
    if (word == "bag") {
      std::size_t index = 0;
      std::string colon;
      if (!(ls >> index >> colon) || colon != ":" || index >= count || seen[index])
        throw Error(Errc::MalformedLine, "bad bag line: '" + line + "'");
      seen[index] = true;
      int v;
      std::vector<int> bag;
      while (ls >> v) bag.push_back(v);
      std::sort(bag.begin(), bag.end());
      td.bags[index] = std::move(bag);
    } else if (word == "arc" && !path) {
      int x, y;
      if (!(ls >> x >> y)) throw Error(Errc::MalformedLine, "bad arc line: '" + line + "'");
      td.arcs.emplace_back(x, y);
    } else {
      throw Error(Errc::MalformedLine, "unexpected line: '" + line + "'");
    }
  }
  if (!header) throw Error(Errc::MalformedLine, "missing decomposition header");
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw Error(Errc::MalformedLine, "some bags are not listed");
  if (path)
    for (std::size_t i = 0; i + 1 < count; ++i) td.arcs.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  return td;
}

}  // namespace widthlab
