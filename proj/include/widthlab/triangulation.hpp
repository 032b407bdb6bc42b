#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "widthlab/perm.hpp"

namespace widthlab {

/// Face f of a tetrahedron is the triangle opposite vertex f.
struct Gluing {
  int tet = 0;
  int face = 0;
  Perm4 corners;  // sends vertex i of the source tetrahedron to corners[i]

  friend bool operator==(const Gluing&, const Gluing&) = default;
};

/// Local edge numbering inside a tetrahedron: 01 02 03 12 13 23.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Index in kEdgeVertices of the edge joining vertices a != b.
int edge_index(int a, int b);

/// A generalized triangulation: tetrahedra whose triangular faces are glued
/// in pairs, self-identifications allowed.
class Triangulation {
 public:
  explicit Triangulation(int tet_count);

  int size() const { return static_cast<int>(gluings_.size()); }

  const std::optional<Gluing>& gluing(int tet, int face) const {
    return gluings_[tet][face];
  }

  /// Glues (tet, face) to (other, other_face), sending vertex i to corners[i];
  /// the reverse gluing is recorded with the inverse map.
  void glue(int tet, int face, int other, int other_face, Perm4 corners);

  bool is_closed() const;

  /// Number of glued face pairs.
  int gluing_pairs() const;

  /// Connectivity of the face-pairing structure.
  bool is_connected() const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  std::vector<std::array<std::optional<Gluing>, 4>> gluings_;
};

/// Reads the `tets N` / `t f : t' f' : p0p1p2p3` gluing-table format.
Triangulation parse_triangulation(std::string_view text);

/// Writes each glued pair once, from its lexicographically smaller side.
std::string serialize(const Triangulation& tri);

struct SkeletonSummary {
  int vertex_count = 0;
  int edge_count = 0;
  int triangle_count = 0;
  int tet_count = 0;
  int euler = 0;
};

/// Orbits of tetrahedron vertices, edges and faces under the gluings.
class Skeleton {
 public:
  explicit Skeleton(const Triangulation& tri);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return edge_count_; }
  int triangle_count() const { return triangle_count_; }
  int tet_count() const { return static_cast<int>(vertex_of_.size()); }

  int vertex(int tet, int v) const { return vertex_of_[tet][v]; }
  int edge(int tet, int e) const { return edge_of_[tet][e]; }
  int triangle(int tet, int f) const { return triangle_of_[tet][f]; }

  /// True if some copy of the edge orbit is identified with itself reversed.
  bool edge_reversed(int edge) const { return reversed_[edge]; }

  /// Euler characteristic of the link of a vertex orbit, assembled from the
  /// corner triangles around it.
  int link_euler(int vertex) const { return link_euler_[vertex]; }

  SkeletonSummary summary() const;

 private:
  int vertex_count_ = 0;
  int edge_count_ = 0;
  int triangle_count_ = 0;
  std::vector<std::array<int, 4>> vertex_of_;
  std::vector<std::array<int, 6>> edge_of_;
  std::vector<std::array<int, 4>> triangle_of_;
  std::vector<bool> reversed_;
  std::vector<int> link_euler_;
};

SkeletonSummary skeleton(const Triangulation& tri);

enum class IssueKind { NotClosed, Disconnected, EdgeReversed, BadVertexLink };

std::string_view to_string(IssueKind kind) noexcept;

struct ValidationIssue {
  IssueKind kind;
  int index;  // tet*4+face, edge orbit, or vertex orbit; -1 for Disconnected
  std::string detail;
};

struct ValidationReport {
  bool all_faces_glued = false;
  bool connected = false;
  bool edges_ok = false;
  bool links_ok = false;
  std::vector<ValidationIssue> issues;

  bool valid() const { return issues.empty(); }
};

ValidationReport validate_closed(const Triangulation& tri);

/// Consistent orientation exists: adjacent tetrahedra with equal orientation
/// must be glued by odd corner maps.
bool check_orientable(const Triangulation& tri);

/// Throws InvalidTriangulation (or Disconnected) unless the triangulation is
/// valid, closed, connected and orientable.
void require_closed_orientable(const Triangulation& tri);

enum class SelfGluingClass { NoSelfGluing, SnappedBall, SolidTorus, Invalid };

std::string_view to_string(SelfGluingClass cls) noexcept;

/// Faces (a, b) of `tet` glued to each other, if any. Throws
/// MoreThanOneSelfGluedPair when two such pairs exist.
std::optional<std::array<int, 2>> self_glued_pair(const Triangulation& tri, int tet);

/// Snapped ball or solid torus according to the boundary genus of the leaf
/// handle union of `tet`.
SelfGluingClass classify_self_gluing(const Triangulation& tri, int tet);

}  // namespace widthlab
