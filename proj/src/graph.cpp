#include "widthlab/graph.hpp"

#include <algorithm>
#include <sstream>

#include "widthlab/error.hpp"

namespace widthlab {

MultiGraph::MultiGraph(int node_count, std::vector<Arc> arcs) : node_count_(node_count) {
  if (node_count < 0) throw Error(Errc::InvalidArgument, "negative node count");
  for (auto [u, v] : arcs) add_arc(u, v);
}

void MultiGraph::add_arc(int u, int v) {
  if (u < 0 || v < 0 || u >= node_count_ || v >= node_count_)
    throw Error(Errc::IndexOutOfRange, "arc endpoint outside the graph");
  arcs_.emplace_back(std::min(u, v), std::max(u, v));
}

int MultiGraph::degree(int v) const {
  int d = 0;
  for (auto [a, b] : arcs_) d += (a == v) + (b == v);
  return d;
}

int MultiGraph::max_degree() const {
  std::vector<int> deg(node_count_, 0);
  for (auto [a, b] : arcs_) {
    ++deg[a];
    ++deg[b];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool MultiGraph::is_connected() const {
  if (node_count_ <= 1) return true;
  std::vector<std::vector<int>> adj(node_count_);
  for (auto [a, b] : arcs_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(node_count_, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == node_count_;
}

bool MultiGraph::has_loops() const {
  return std::any_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.first == a.second; });
}

MultiGraph MultiGraph::without_loops() const {
  MultiGraph out(node_count_);
  for (auto [a, b] : arcs_)
    if (a != b) out.add_arc(a, b);
  return out;
}

std::vector<std::vector<int>> MultiGraph::multiplicity() const {
  std::vector<std::vector<int>> m(node_count_, std::vector<int>(node_count_, 0));
  for (auto [a, b] : arcs_) {
    if (a == b) continue;
    ++m[a][b];
    ++m[b][a];
  }
  return m;
}

MultiGraph build_dual(const Triangulation& tri) {
  MultiGraph g(tri.size());
  for (int t = 0; t < tri.size(); ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto& gl = tri.gluing(t, f);
      if (gl && std::pair(t, f) < std::pair(gl->tet, gl->face)) g.add_arc(t, gl->tet);
    }
  }
  return g;
}

namespace {

std::vector<std::string> data_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

MultiGraph parse_edge_list(std::string_view text) {
  const auto lines = data_lines(text);
  if (lines.empty()) throw Error(Errc::MalformedLine, "missing 'n M' header");
  std::istringstream header(lines[0]);
  int n = -1, m = -1;
  std::string rest;
  if (!(header >> n >> m) || (header >> rest) || n < 0 || m < 0)
    throw Error(Errc::MalformedLine, "header must be 'n M' with nonnegative counts");
  if (static_cast<int>(lines.size()) - 1 != m)
    throw Error(Errc::MalformedLine, "header announces " + std::to_string(m) + " arcs, found " +
                                         std::to_string(lines.size() - 1));
  MultiGraph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream in(lines[i]);
    int u = -1, v = -1;
    if (!(in >> u >> v) || (in >> rest))
      throw Error(Errc::MalformedLine, "arc line must be 'u v': '" + lines[i] + "'");
    g.add_arc(u, v);
  }
  return g;
}

std::string format_edge_list(const MultiGraph& g) {
  std::ostringstream out;
  out << g.node_count() << ' ' << g.arc_count() << '\n';
  for (auto [u, v] : g.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

int LinearLayout::width() const {
  return cuts.empty() ? 0 : *std::max_element(cuts.begin(), cuts.end());
}

std::vector<int> cut_profile(const MultiGraph& g, const std::vector<int>& order) {
  const int n = g.node_count();
  std::vector<int> pos(n, -1);
  if (static_cast<int>(order.size()) != n)
    throw Error(Errc::NotAPermutation, "ordering has the wrong length");
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    if (v < 0 || v >= n || pos[v] >= 0) throw Error(Errc::NotAPermutation, "ordering repeats or skips a node");
    pos[v] = i;
  }
  // An arc between positions p < q lies in cutsets p+1 .. q.
  std::vector<int> diff(n + 1, 0);
  for (auto [a, b] : g.arcs()) {
    const int p = std::min(pos[a], pos[b]), q = std::max(pos[a], pos[b]);
    if (p == q) continue;
    ++diff[p];
    --diff[q];
  }
  std::vector<int> cuts;
  int running = 0;
  for (int l = 0; l + 1 < n; ++l) {
    running += diff[l];
    cuts.push_back(running);
  }
  return cuts;
}

LinearLayout make_layout(const MultiGraph& g, std::vector<int> order) {
  LinearLayout layout;
  layout.cuts = cut_profile(g, order);
  layout.ordering = std::move(order);
  return layout;
}

LinearLayout parse_layout(const MultiGraph& g, std::string_view text) {
  auto lines = data_lines(text);
  std::ostringstream joined;
  for (const auto& l : lines) joined << l << ' ';
  std::istringstream in(joined.str());
  std::string word;
  if (!(in >> word) || word != "layout") throw Error(Errc::MalformedLine, "layout file must start with 'layout'");
  std::vector<int> order;
  while (in >> word) {
    try {
      std::size_t used = 0;
      order.push_back(std::stoi(word, &used));
      if (used != word.size()) throw std::invalid_argument(word);
    } catch (const std::exception&) {
      throw Error(Errc::MalformedLine, "layout entry '" + word + "' is not a node id");
    }
  }
  return make_layout(g, std::move(order));
}

std::string format_layout(const LinearLayout& layout) {
  std::ostringstream out;
  out << "layout\n";
  for (std::size_t i = 0; i < layout.ordering.size(); ++i)
    out << (i ? " " : "") << layout.ordering[i];
  out << '\n';
  return out.str();
}

std::vector<std::vector<int>> HostTree::adjacency() const {
  std::vector<std::vector<int>> adj(node_count);
  for (auto [a, b] : arcs) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

void validate_host(const MultiGraph& g, const HostTree& host) {
  const int h = host.node_count;
  if (h <= 0) throw Error(Errc::InvalidHost, "host tree has no nodes");
  if (static_cast<int>(host.arcs.size()) != h - 1)
    throw Error(Errc::InvalidHost, "host tree needs exactly node_count-1 arcs");
  for (auto [a, b] : host.arcs)
    if (a < 0 || b < 0 || a >= h || b >= h || a == b)
      throw Error(Errc::InvalidHost, "host arc endpoint out of range");
  const auto adj = host.adjacency();
  std::vector<bool> seen(h, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != h) throw Error(Errc::InvalidHost, "host is not connected");
  int leaves = 0;
  for (int v = 0; v < h; ++v) {
    const auto d = adj[v].size();
    if (h == 1 && d == 0) {
      ++leaves;
      continue;
    }
    if (d == 1) ++leaves;
    else if (d != 3)
      throw Error(Errc::InvalidHost, "host node " + std::to_string(v) + " has degree " + std::to_string(d));
  }
  if (static_cast<int>(host.leaf_of.size()) != g.node_count() || leaves != g.node_count())
    throw Error(Errc::InvalidHost, "host leaves are not in bijection with guest nodes");
  std::vector<bool> used(h, false);
  for (int x : host.leaf_of) {
    if (x < 0 || x >= h) throw Error(Errc::InvalidHost, "leaf map points outside the host");
    const auto d = adj[x].size();
    if (!(d == 1 || (h == 1 && d == 0))) throw Error(Errc::InvalidHost, "guest node mapped to an internal host node");
    if (used[x]) throw Error(Errc::InvalidHost, "two guest nodes share a host leaf");
    used[x] = true;
  }
}

std::vector<int> host_loads(const MultiGraph& g, const HostTree& host) {
  validate_host(g, host);
  const int h = host.node_count;
  const auto adj = host.adjacency();
  std::vector<int> guest_at(h, -1);
  for (int v = 0; v < g.node_count(); ++v) guest_at[host.leaf_of[v]] = v;

  // Root at node 0; below[x] marks the guest nodes whose leaves lie under x.
  std::vector<int> parent(h, -1), order;
  order.reserve(h);
  std::vector<int> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : adj[v])
      if (parent[w] < 0) {
        parent[w] = v;
        stack.push_back(w);
      }
  }
  std::vector<std::vector<char>> below(h, std::vector<char>(g.node_count(), 0));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (guest_at[v] >= 0) below[v][guest_at[v]] = 1;
    if (v != 0)
      for (int i = 0; i < g.node_count(); ++i) below[parent[v]][i] |= below[v][i];
  }
  std::vector<int> loads;
  loads.reserve(host.arcs.size());
  for (auto [a, b] : host.arcs) {
    const int child = parent[a] == b ? a : b;
    int load = 0;
    for (auto [u, v] : g.arcs())
      if (below[child][u] != below[child][v]) ++load;
    loads.push_back(load);
  }
  return loads;
}

int congestion_of(const MultiGraph& g, const HostTree& host) {
  const auto loads = host_loads(g, host);
  return loads.empty() ? 0 : *std::max_element(loads.begin(), loads.end());
}

HostTree caterpillar_host(const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  HostTree host;
  host.leaf_of.assign(n, -1);
  for (int v = 0; v < n; ++v) host.leaf_of[v] = v;
  if (n <= 1) {
    host.node_count = n;
    return host;
  }
  if (n == 2) {
    host.node_count = 2;
    host.arcs.emplace_back(0, 1);
    return host;
  }
  host.node_count = 2 * n - 2;
  const int spine = n;  // spine nodes n .. 2n-3
  host.arcs.emplace_back(order[0], spine);
  for (int i = 1; i < n - 1; ++i) host.arcs.emplace_back(order[i], spine + i - 1);
  host.arcs.emplace_back(order[n - 1], spine + n - 3);
  for (int s = 0; s + 1 < n - 2; ++s) host.arcs.emplace_back(spine + s, spine + s + 1);
  return host;
}

HostTree parse_host(std::string_view text) {
  const auto lines = data_lines(text);
  if (lines.empty()) throw Error(Errc::MalformedLine, "missing 'host H' header");
  HostTree host;
  std::string word, rest;
  {
    std::istringstream in(lines[0]);
    if (!(in >> word >> host.node_count) || word != "host" || (in >> rest) || host.node_count <= 0)
      throw Error(Errc::MalformedLine, "header must be 'host H'");
  }
  std::vector<std::pair<int, int>> leaves;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream in(lines[i]);
    int a = -1, b = -1;
    if (!(in >> word >> a >> b) || (in >> rest) || (word != "arc" && word != "leaf"))
      throw Error(Errc::MalformedLine, "expected 'arc a b' or 'leaf guest host': '" + lines[i] + "'");
    if (word == "arc") host.arcs.emplace_back(a, b);
    else leaves.emplace_back(a, b);
  }
  host.leaf_of.assign(leaves.size(), -1);
  for (auto [guest, node] : leaves) {
    if (guest < 0 || guest >= static_cast<int>(leaves.size()) || host.leaf_of[guest] >= 0)
      throw Error(Errc::MalformedLine, "leaf lines must map guest nodes 0..n-1 exactly once");
    host.leaf_of[guest] = node;
  }
  return host;
}

std::string format_host(const HostTree& host) {
  std::ostringstream out;
  out << "host " << host.node_count << '\n';
  for (auto [a, b] : host.arcs) out << "arc " << a << ' ' << b << '\n';
  for (std::size_t v = 0; v < host.leaf_of.size(); ++v) out << "leaf " << v << ' ' << host.leaf_of[v] << '\n';
  return out.str();
}

}  // namespace widthlab
