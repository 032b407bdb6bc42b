#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "widthlab/graph.hpp"
#include "widthlab/triangulation.hpp"

namespace widthlab {

/// A handle of the canonical decomposition. Index 0 handles sit in
/// tetrahedra, index 1 in triangles, index 2 on edges and index 3 on
/// vertices; `face` is the tetrahedron or the skeleton orbit.
struct Handle {
  int index = 0;
  int face = 0;

  friend bool operator==(const Handle&, const Handle&) = default;
};

/// Membership flags over the handles of one HandleDecomposition.
class HandleSet {
 public:
  HandleSet() = default;
  explicit HandleSet(int handle_count) : present_(handle_count, 0) {}

  int size() const { return static_cast<int>(present_.size()); }
  bool contains(int h) const { return present_[h] != 0; }
  void insert(int h) { present_[h] = 1; }
  void erase(int h) { present_[h] = 0; }
  int count() const;

  /// Handle ids in increasing order.
  std::vector<int> members() const;

  bool is_subset_of(const HandleSet& other) const;
  bool intersects(const HandleSet& other) const;

  friend bool operator==(const HandleSet&, const HandleSet&) = default;

 private:
  std::vector<std::uint8_t> present_;
};

struct SurfaceSummary {
  std::vector<int> component_genera;  // non-increasing
  int total_genus = 0;
  int complexity = 0;  // sum of max(0, 2g - 1) over components
  int euler = 0;

  int components() const { return static_cast<int>(component_genera.size()); }
};

int c_complexity(const SurfaceSummary& s);

/// The canonical handle decomposition of a closed triangulation together
/// with the second barycentric subdivision used to measure boundaries.
class HandleDecomposition {
 public:
  /// Requires a closed triangulation with valid edges and vertex links.
  explicit HandleDecomposition(const Triangulation& tri);

  const Triangulation& triangulation() const { return tri_; }
  const Skeleton& skeleton() const { return skeleton_; }

  int handle_count() const { return static_cast<int>(handles_.size()); }
  const std::vector<Handle>& handles() const { return handles_; }
  const Handle& handle(int h) const { return handles_[h]; }

  /// Number of handles of each index.
  std::array<int, 4> index_counts() const { return counts_; }

  int handle_id(int index, int face) const { return offset_[index] + face; }

  /// Tetrahedra meeting the face of handle h, without repetition.
  const std::vector<int>& incident_tets(int h) const { return incident_tets_[h]; }

  /// Handles of the next lower index whose faces contain the face of h.
  const std::vector<int>& cofaces(int h) const { return cofaces_[h]; }

  HandleSet empty_set() const { return HandleSet(handle_count()); }
  HandleSet all_handles() const;

  /// A handle may be present only when every handle of a face containing
  /// its face is present.
  bool is_admissible(const HandleSet& set) const;

  /// The 0-handles of `tets` plus every handle whose incident tetrahedra
  /// all lie in `tets`.
  HandleSet admissible_closure(const std::vector<int>& tets) const;

  /// Boundary of the handle union, realized as the frontier of a derived
  /// neighbourhood in the second barycentric subdivision. Throws
  /// NotAdmissible for sets that are not admissible.
  SurfaceSummary boundary_surface(const HandleSet& set) const;

  /// 2 (h0 - h1 + h2 - h3): the Euler characteristic the boundary of the
  /// union must have.
  int expected_euler(const HandleSet& set) const;

 private:
  Triangulation tri_;
  Skeleton skeleton_;
  std::vector<Handle> handles_;
  std::array<int, 4> counts_{};
  std::array<int, 4> offset_{};
  std::vector<std::vector<int>> incident_tets_;
  std::vector<std::vector<int>> cofaces_;

  // First subdivision: each cell is a chain of faces, stored as the
  // handles of those faces.
  struct Cell {
    std::array<int, 4> handles{};
    int length = 0;
  };
  std::vector<Cell> cells_;
  // Second subdivision: edges and triangles as chains of cells.
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::array<int, 3>> triangles_;
};

std::vector<Handle> chd(const Triangulation& tri);

/// Called for every handle set whose boundary a certificate measures.
using SurfaceObserver = std::function<void(const HandleSet&, const SurfaceSummary&)>;

/// The leaf handle union of a tetrahedron: its 0-handle plus the handles
/// whose faces lie only in that tetrahedron.
HandleSet leaf_handlebody(const HandleDecomposition& hd, int tet);

struct Attachment {
  int handle = 0;
  Handle which;
  SurfaceSummary surface;
};

struct LinearStep {
  int tet = 0;
  int handles_added = 0;
  int genus_before = 0;
  int max_genus = 0;  // largest total genus seen during the step
  std::vector<Attachment> attachments;
  bool within_handle_limit = true;  // at most 15 handles
  bool within_genus_step = true;    // max_genus <= genus_before + 4
};

struct LinearCertificate {
  LinearLayout layout;
  int k = 0;
  std::vector<LinearStep> steps;
  int max_genus_sum = 0;
  int bound_3k4 = 0;
  bool holds_3k4 = false;
  bool steps_ok = false;
  /// c-values of the thick surfaces of the induced linear splitting,
  /// non-increasing, and their largest entry.
  std::vector<int> splitting_width;
  int linear_width = 0;
  int L_upper = 0;
  int euler_failures = 0;

  bool all_checks_pass() const { return holds_3k4 && steps_ok && euler_failures == 0; }
};

/// Filtration by the admissible closures of the layout's prefixes; the new
/// handles of each step are attached one at a time by index.
LinearCertificate linear_certificate(const HandleDecomposition& hd, const LinearLayout& layout,
                                     const SurfaceObserver& observer = {});
LinearCertificate linear_certificate(const Triangulation& tri, const LinearLayout& layout);

struct LeafRecord {
  int host_node = 0;
  int tet = 0;
  SelfGluingClass cls = SelfGluingClass::NoSelfGluing;
  int genus = 0;
};

struct InternalRecord {
  int host_node = 0;
  std::array<int, 2> children{};
  SurfaceSummary surface;  // top boundary of the node's compression body
  int incident_arcs = 0;   // guest arcs routed through the node
  bool incidence_ok = true;
};

struct RootRecord {
  int arc = 0;  // index into host.arcs
  Arc ends{};
  SurfaceSummary surface;
};

struct GraphSplittingCertificate {
  HostTree host;
  int k = 0;
  bool single_tet_case = false;
  std::vector<LeafRecord> leaves;
  std::vector<InternalRecord> internal_nodes;
  RootRecord root;
  int max_top_genus = 0;
  int bound_6k = 0;
  bool holds_6k = true;  // vacuous in the single-tetrahedron case
  bool leaves_ok = true;
  bool incidence_ok = true;
  /// Top-boundary genera of leaves, internal nodes and root, non-increasing.
  std::vector<int> graph_width;
  int euler_failures = 0;

  bool all_checks_pass() const { return holds_6k && leaves_ok && incidence_ok && euler_failures == 0; }
};

/// Graph splitting along `host`. Without `root_arc` every host arc is tried
/// and the one giving the smallest maximal genus (then smallest index) kept.
GraphSplittingCertificate graph_certificate(const HandleDecomposition& hd, const HostTree& host,
                                            std::optional<int> root_arc = std::nullopt,
                                            const SurfaceObserver& observer = {});
GraphSplittingCertificate graph_certificate(const Triangulation& tri, const HostTree& host,
                                            std::optional<int> root_arc = std::nullopt);

/// Lexicographic comparison of non-increasing multisets, shorter operand
/// padded with zeros. Throws NotSorted.
std::strong_ordering compare_widths_lex(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace widthlab
