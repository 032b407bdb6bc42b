#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "widthlab/triangulation.hpp"

namespace widthlab {

using Arc = std::pair<int, int>;

/// Undirected multigraph. Parallel arcs are kept as separate entries and a
/// loop contributes two to the degree of its node.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int node_count) : node_count_(node_count) {}
  MultiGraph(int node_count, std::vector<Arc> arcs);

  int node_count() const { return node_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  void add_arc(int u, int v);

  int degree(int v) const;
  int max_degree() const;
  bool is_connected() const;
  bool has_loops() const;

  /// Same nodes, loops removed, multiplicities kept.
  MultiGraph without_loops() const;

  /// Arc multiplicity matrix (loops excluded).
  std::vector<std::vector<int>> multiplicity() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  int node_count_ = 0;
  std::vector<Arc> arcs_;
};

/// Node per tetrahedron, arc per glued face pair (self-gluings become loops).
MultiGraph build_dual(const Triangulation& tri);

/// Edge-list format: header `n M`, then one `u v` line per arc.
MultiGraph parse_edge_list(std::string_view text);
std::string format_edge_list(const MultiGraph& g);

struct LinearLayout {
  std::vector<int> ordering;
  std::vector<int> cuts;  // C_1 .. C_{n-1}

  int width() const;
};

/// Sizes of the prefix cutsets of `order`; loops never cross a cut.
std::vector<int> cut_profile(const MultiGraph& g, const std::vector<int>& order);

LinearLayout make_layout(const MultiGraph& g, std::vector<int> order);

/// `layout` header then the ordering as whitespace-separated node ids.
LinearLayout parse_layout(const MultiGraph& g, std::string_view text);
std::string format_layout(const LinearLayout& layout);

/// Unrooted binary tree (every node of degree 1 or 3) whose leaves are in
/// bijection with the guest nodes.
struct HostTree {
  int node_count = 0;
  std::vector<Arc> arcs;
  std::vector<int> leaf_of;  // guest node -> host node

  /// Host nodes adjacent to each host node, ordered by arc index.
  std::vector<std::vector<int>> adjacency() const;
};

/// Throws InvalidHost when `host` is not an unrooted binary tree whose leaves
/// are exactly the images of the guest nodes.
void validate_host(const MultiGraph& g, const HostTree& host);

/// Number of guest arcs routed through each host arc.
std::vector<int> host_loads(const MultiGraph& g, const HostTree& host);

int congestion_of(const MultiGraph& g, const HostTree& host);

/// Caterpillar host whose spine follows `order`.
HostTree caterpillar_host(const std::vector<int>& order);

/// `host H` header, `arc a b` and `leaf guest hostnode` lines.
HostTree parse_host(std::string_view text);
std::string format_host(const HostTree& host);

}  // namespace widthlab
