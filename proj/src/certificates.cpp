#include <algorithm>
#include <functional>

#include "widthlab/error.hpp"
#include "widthlab/handles.hpp"

namespace widthlab {

namespace {

class Measure {
 public:
  Measure(const HandleDecomposition& hd, const SurfaceObserver& observer, int& euler_failures)
      : hd_(hd), observer_(observer), euler_failures_(euler_failures) {}

  SurfaceSummary operator()(const HandleSet& set) const {
    auto surface = hd_.boundary_surface(set);
    if (surface.euler != hd_.expected_euler(set)) ++euler_failures_;
    if (observer_) observer_(set, surface);
    return surface;
  }

 private:
  const HandleDecomposition& hd_;
  const SurfaceObserver& observer_;
  int& euler_failures_;
};

}  // namespace

LinearCertificate linear_certificate(const HandleDecomposition& hd, const LinearLayout& layout,
                                     const SurfaceObserver& observer) {
  const MultiGraph dual = build_dual(hd.triangulation());
  LinearCertificate cert;
  cert.layout = make_layout(dual, layout.ordering);
  cert.k = cert.layout.width();
  cert.bound_3k4 = 3 * cert.k + 4;
  cert.L_upper = 6 * cert.k + 7;
  const Measure measure(hd, observer, cert.euler_failures);

  HandleSet current = hd.empty_set();
  std::vector<int> prefix;
  SurfaceSummary surface;
  int last_index = -1;
  cert.steps_ok = true;
  for (int tet : cert.layout.ordering) {
    prefix.push_back(tet);
    const HandleSet next = hd.admissible_closure(prefix);
    LinearStep step;
    step.tet = tet;
    step.genus_before = surface.total_genus;
    step.max_genus = surface.total_genus;
    for (int h = 0; h < hd.handle_count(); ++h) {
      if (!next.contains(h) || current.contains(h)) continue;
      const Handle which = hd.handle(h);
      // A thick surface sits wherever the 0/1 phase gives way to 2/3.
      if (which.index >= 2 && last_index >= 0 && last_index <= 1) cert.splitting_width.push_back(surface.complexity);
      last_index = which.index;
      current.insert(h);
      surface = measure(current);
      step.max_genus = std::max(step.max_genus, surface.total_genus);
      step.attachments.push_back({h, which, surface});
    }
    step.handles_added = static_cast<int>(step.attachments.size());
    step.within_handle_limit = step.handles_added <= 15;
    step.within_genus_step = step.max_genus <= step.genus_before + 4;
    cert.steps_ok = cert.steps_ok && step.within_handle_limit && step.within_genus_step;
    cert.max_genus_sum = std::max(cert.max_genus_sum, step.max_genus);
    cert.steps.push_back(std::move(step));
  }
  std::sort(cert.splitting_width.rbegin(), cert.splitting_width.rend());
  cert.linear_width = cert.splitting_width.empty() ? 0 : cert.splitting_width.front();
  cert.holds_3k4 = cert.max_genus_sum <= cert.bound_3k4;
  return cert;
}

LinearCertificate linear_certificate(const Triangulation& tri, const LinearLayout& layout) {
  return linear_certificate(HandleDecomposition(tri), layout);
}

namespace {

// The leaf handle union of a self-glued tetrahedron must bound a sphere
// or a torus.
SelfGluingClass classify_leaf(const Triangulation& tri, int tet, const SurfaceSummary& surface) {
  if (!self_glued_pair(tri, tet)) return SelfGluingClass::NoSelfGluing;
  if (surface.components() != 1) return SelfGluingClass::Invalid;
  if (surface.total_genus == 0) return SelfGluingClass::SnappedBall;
  if (surface.total_genus == 1) return SelfGluingClass::SolidTorus;
  return SelfGluingClass::Invalid;
}

struct Rooted {
  std::vector<int> parent;      // host node above, -1 at the root ends
  std::vector<int> parent_arc;  // arc index to the parent, root arc for the ends
  std::vector<std::vector<int>> children;
  std::vector<std::vector<int>> below;  // guest nodes under each host node
};

Rooted root_host(const HostTree& host, int root_arc) {
  const int size = host.node_count;
  std::vector<std::vector<std::pair<int, int>>> adj(size);
  for (int i = 0; i < static_cast<int>(host.arcs.size()); ++i) {
    auto [a, b] = host.arcs[i];
    adj[a].emplace_back(b, i);
    adj[b].emplace_back(a, i);
  }
  std::vector<int> guest_at(size, -1);
  for (int g = 0; g < static_cast<int>(host.leaf_of.size()); ++g) guest_at[host.leaf_of[g]] = g;

  Rooted r;
  r.parent.assign(size, -1);
  r.parent_arc.assign(size, -1);
  r.children.assign(size, {});
  r.below.assign(size, {});
  auto walk = [&](auto&& self, int x) -> void {
    for (auto [y, arc] : adj[x]) {
      if (arc == r.parent_arc[x]) continue;
      r.parent[y] = x;
      r.parent_arc[y] = arc;
      r.children[x].push_back(y);
      self(self, y);
      r.below[x].insert(r.below[x].end(), r.below[y].begin(), r.below[y].end());
    }
    if (guest_at[x] >= 0) r.below[x].push_back(guest_at[x]);
    std::sort(r.below[x].begin(), r.below[x].end());
  };
  auto [s, t] = host.arcs[root_arc];
  r.parent_arc[s] = root_arc;
  r.parent_arc[t] = root_arc;
  walk(walk, s);
  walk(walk, t);
  return r;
}

// Handles of both sides plus the 1-handles of triangles joining them.
HandleSet join_sides(const HandleDecomposition& hd, const std::vector<int>& left, const std::vector<int>& right) {
  HandleSet set = hd.admissible_closure(left);
  const HandleSet other = hd.admissible_closure(right);
  for (int h : other.members()) set.insert(h);
  std::vector<char> side(hd.triangulation().size(), 0);
  for (int t : left) side[t] = 1;
  for (int t : right) side[t] = 2;
  const auto counts = hd.index_counts();
  for (int f = 0; f < counts[1]; ++f) {
    const int h = hd.handle_id(1, f);
    const auto& tets = hd.incident_tets(h);
    if (tets.size() == 2 && side[tets[0]] && side[tets[1]] && side[tets[0]] != side[tets[1]]) set.insert(h);
  }
  return set;
}

GraphSplittingCertificate certify_rooted(const HandleDecomposition& hd, const HostTree& host,
                                         const std::vector<int>& loads, int k, int root_arc,
                                         const SurfaceObserver& observer) {
  GraphSplittingCertificate cert;
  cert.host = host;
  cert.k = k;
  cert.bound_6k = 6 * k;
  const Measure measure(hd, observer, cert.euler_failures);
  const Rooted r = root_host(host, root_arc);
  const auto& tri = hd.triangulation();

  for (int g = 0; g < tri.size(); ++g) {
    const auto surface = measure(leaf_handlebody(hd, g));
    LeafRecord leaf{host.leaf_of[g], g, classify_leaf(tri, g, surface), surface.total_genus};
    const bool consistent = leaf.genus <= 1 && leaf.cls != SelfGluingClass::Invalid &&
                            (leaf.genus == 1) == (leaf.cls == SelfGluingClass::SolidTorus);
    cert.leaves_ok = cert.leaves_ok && consistent;
    cert.graph_width.push_back(leaf.genus);
    cert.max_top_genus = std::max(cert.max_top_genus, leaf.genus);
    cert.leaves.push_back(leaf);
  }

  for (int v = 0; v < host.node_count; ++v) {
    if (r.children[v].size() != 2) continue;
    InternalRecord rec;
    rec.host_node = v;
    rec.children = {r.children[v][0], r.children[v][1]};
    rec.surface = measure(join_sides(hd, r.below[rec.children[0]], r.below[rec.children[1]]));
    rec.incident_arcs =
        (loads[r.parent_arc[rec.children[0]]] + loads[r.parent_arc[rec.children[1]]] + loads[r.parent_arc[v]]) / 2;
    rec.incidence_ok = 2 * rec.incident_arcs <= 3 * k + 1;
    cert.incidence_ok = cert.incidence_ok && rec.incidence_ok;
    cert.graph_width.push_back(rec.surface.total_genus);
    cert.max_top_genus = std::max(cert.max_top_genus, rec.surface.total_genus);
    cert.internal_nodes.push_back(std::move(rec));
  }

  auto [s, t] = host.arcs[root_arc];
  cert.root.arc = root_arc;
  cert.root.ends = {s, t};
  cert.root.surface = measure(join_sides(hd, r.below[s], r.below[t]));
  cert.graph_width.push_back(cert.root.surface.total_genus);
  cert.max_top_genus = std::max(cert.max_top_genus, cert.root.surface.total_genus);
  std::sort(cert.graph_width.rbegin(), cert.graph_width.rend());
  cert.holds_6k = cert.max_top_genus < cert.bound_6k;
  return cert;
}

}  // namespace

GraphSplittingCertificate graph_certificate(const HandleDecomposition& hd, const HostTree& host,
                                            std::optional<int> root_arc, const SurfaceObserver& observer) {
  const auto& tri = hd.triangulation();
  const MultiGraph dual = build_dual(tri);
  if (static_cast<int>(host.leaf_of.size()) != dual.node_count())
    throw Error(Errc::HostDoesNotMatchGraph, "host has " + std::to_string(host.leaf_of.size()) +
                                                 " leaves for " + std::to_string(dual.node_count()) +
                                                 " tetrahedra");
  validate_host(dual, host);
  if (tri.size() == 1) {
    GraphSplittingCertificate cert;
    cert.host = host;
    cert.single_tet_case = true;
    return cert;
  }
  const auto loads = host_loads(dual, host);
  const int k = congestion_of(dual, host);
  const int arc_count = static_cast<int>(host.arcs.size());
  if (root_arc) {
    if (*root_arc < 0 || *root_arc >= arc_count)
      throw Error(Errc::InvalidArgument, "root arc " + std::to_string(*root_arc) + " is not a host arc");
    return certify_rooted(hd, host, loads, k, *root_arc, observer);
  }
  std::optional<GraphSplittingCertificate> best;
  for (int arc = 0; arc < arc_count; ++arc) {
    auto cert = certify_rooted(hd, host, loads, k, arc, observer);
    if (!best || cert.max_top_genus < best->max_top_genus) best = std::move(cert);
  }
  return std::move(*best);
}

GraphSplittingCertificate graph_certificate(const Triangulation& tri, const HostTree& host,
                                            std::optional<int> root_arc) {
  return graph_certificate(HandleDecomposition(tri), host, root_arc);
}

}  // namespace widthlab
