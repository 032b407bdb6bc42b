#include "widthlab/triangulation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <sstream>

#include "widthlab/error.hpp"

namespace widthlab {

int edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int e = 0; e < 6; ++e)
    if (kEdgeVertices[e][0] == a && kEdgeVertices[e][1] == b) return e;
  throw Error(Errc::InvalidArgument, "no edge joins a vertex to itself");
}

Triangulation::Triangulation(int tet_count) {
  if (tet_count <= 0) throw Error(Errc::InvalidArgument, "tetrahedron count must be positive");
  gluings_.resize(static_cast<std::size_t>(tet_count));
}

void Triangulation::glue(int tet, int face, int other, int other_face, Perm4 corners) {
  const int n = size();
  if (tet < 0 || tet >= n || other < 0 || other >= n || face < 0 || face > 3 ||
      other_face < 0 || other_face > 3)
    throw Error(Errc::IndexOutOfRange, "gluing refers to a face outside the triangulation");
  if (tet == other && face == other_face)
    throw Error(Errc::InvalidArgument, "a face cannot be glued to itself");
  if (corners[face] != other_face)
    throw Error(Errc::InvalidArgument, "corner map must send face " + std::to_string(face) +
                                           " to face " + std::to_string(other_face));
  if (gluings_[tet][face] || gluings_[other][other_face])
    throw Error(Errc::DuplicateFaceAssignment, "face already glued");
  gluings_[tet][face] = Gluing{other, other_face, corners};
  gluings_[other][other_face] = Gluing{tet, face, corners.inverse()};
}

bool Triangulation::is_closed() const {
  for (const auto& faces : gluings_)
    for (const auto& g : faces)
      if (!g) return false;
  return true;
}

int Triangulation::gluing_pairs() const {
  int glued = 0;
  for (const auto& faces : gluings_)
    for (const auto& g : faces)
      if (g) ++glued;
  return glued / 2;
}

bool Triangulation::is_connected() const {
  std::vector<bool> seen(gluings_.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int t = stack.back();
    stack.pop_back();
    for (const auto& g : gluings_[t]) {
      if (g && !seen[g->tet]) {
        seen[g->tet] = true;
        ++reached;
        stack.push_back(g->tet);
      }
    }
  }
  return reached == size();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(Errc code, int line, const std::string& msg) {
  throw Error(code, "line " + std::to_string(line) + ": " + msg);
}

std::vector<int> read_ints(std::string_view part, int line) {
  std::vector<int> out;
  std::istringstream in{std::string(part)};
  std::string token;
  while (in >> token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      fail(Errc::MalformedLine, line, "expected an integer, got '" + token + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace

Triangulation parse_triangulation(std::string_view text) {
  std::optional<Triangulation> tri;
  // Faces that appeared on the left-hand side of some line.
  std::vector<std::array<bool, 4>> explicit_source;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!tri) {
      if (line.substr(0, 4) != "tets")
        fail(Errc::MalformedLine, line_no, "expected header 'tets N'");
      auto count = read_ints(line.substr(4), line_no);
      if (count.size() != 1 || count[0] <= 0)
        fail(Errc::MalformedLine, line_no, "header needs one positive tetrahedron count");
      tri.emplace(count[0]);
      explicit_source.assign(static_cast<std::size_t>(count[0]), {});
      continue;
    }

    const auto c1 = line.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : line.find(':', c1 + 1);
    if (c2 == std::string_view::npos || line.find(':', c2 + 1) != std::string_view::npos)
      fail(Errc::MalformedLine, line_no, "expected 't f : t' f' : p0p1p2p3'");
    const auto src = read_ints(line.substr(0, c1), line_no);
    const auto dst = read_ints(line.substr(c1 + 1, c2 - c1 - 1), line_no);
    std::string digits;
    for (char ch : line.substr(c2 + 1))
      if (!std::isspace(static_cast<unsigned char>(ch))) digits.push_back(ch);
    if (src.size() != 2 || dst.size() != 2)
      fail(Errc::MalformedLine, line_no, "each side needs a tetrahedron and a face index");
    if (digits.size() != 4 || !std::all_of(digits.begin(), digits.end(),
                                           [](char ch) { return ch >= '0' && ch <= '9'; }))
      fail(Errc::MalformedLine, line_no, "corner map must be four digits");
    const auto corners = Perm4::from_images(
        {digits[0] - '0', digits[1] - '0', digits[2] - '0', digits[3] - '0'});
    if (!corners) fail(Errc::MalformedLine, line_no, "corner map is not a permutation of 0123");

    const int t = src[0], f = src[1], t2 = dst[0], f2 = dst[1];
    const int n = tri->size();
    if (t < 0 || t >= n || t2 < 0 || t2 >= n || f < 0 || f > 3 || f2 < 0 || f2 > 3)
      fail(Errc::IndexOutOfRange, line_no, "tetrahedron or face index out of range");
    if (t == t2 && f == f2) fail(Errc::MalformedLine, line_no, "a face cannot be glued to itself");
    if ((*corners)[f] != f2)
      fail(Errc::MalformedLine, line_no, "corner map must send face " + std::to_string(f) +
                                             " to face " + std::to_string(f2));
    if (explicit_source[t][f])
      fail(Errc::DuplicateFaceAssignment, line_no,
           "face (" + std::to_string(t) + "," + std::to_string(f) + ") assigned twice");
    explicit_source[t][f] = true;

    const Gluing wanted{t2, f2, *corners};
    if (const auto& existing = tri->gluing(t, f)) {
      // Only acceptable as the explicit statement of an implied partner.
      if (*existing != wanted)
        fail(Errc::NonInvolutiveGluing, line_no,
             "face (" + std::to_string(t) + "," + std::to_string(f) +
                 ") is already glued to (" + std::to_string(existing->tet) + "," +
                 std::to_string(existing->face) + ") with a different partner or map");
      continue;
    }
    if (tri->gluing(t2, f2))
      fail(Errc::DuplicateFaceAssignment, line_no,
           "face (" + std::to_string(t2) + "," + std::to_string(f2) + ") already glued");
    tri->glue(t, f, t2, f2, *corners);
  }
  if (!tri) throw Error(Errc::MalformedLine, "missing header 'tets N'");
  return *tri;
}

std::string serialize(const Triangulation& tri) {
  std::ostringstream out;
  out << "tets " << tri.size() << '\n';
  for (int t = 0; t < tri.size(); ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      if (!g || std::pair(g->tet, g->face) < std::pair(t, f)) continue;
      out << t << ' ' << f << " : " << g->tet << ' ' << g->face << " : " << g->corners.str()
          << '\n';
    }
  }
  return out.str();
}

Skeleton::Skeleton(const Triangulation& tri) {
  const int n = tri.size();
  vertex_of_.assign(n, {-1, -1, -1, -1});
  edge_of_.assign(n, {-1, -1, -1, -1, -1, -1});
  triangle_of_.assign(n, {-1, -1, -1, -1});

  for (int t = 0; t < n; ++t) {
    for (int v = 0; v < 4; ++v) {
      if (vertex_of_[t][v] >= 0) continue;
      const int id = vertex_count_++;
      std::deque<std::pair<int, int>> queue{{t, v}};
      vertex_of_[t][v] = id;
      while (!queue.empty()) {
        auto [ct, cv] = queue.front();
        queue.pop_front();
        for (int f = 0; f < 4; ++f) {
          if (f == cv) continue;
          const auto& g = tri.gluing(ct, f);
          if (!g) continue;
          const int nv = g->corners[cv];
          if (vertex_of_[g->tet][nv] < 0) {
            vertex_of_[g->tet][nv] = id;
            queue.emplace_back(g->tet, nv);
          }
        }
      }
    }
  }

  // Edge orbits carry an orientation relative to the first copy visited.
  std::vector<std::array<int, 6>> orient(n, {0, 0, 0, 0, 0, 0});
  for (int t = 0; t < n; ++t) {
    for (int e = 0; e < 6; ++e) {
      if (edge_of_[t][e] >= 0) continue;
      const int id = edge_count_++;
      reversed_.push_back(false);
      edge_of_[t][e] = id;
      orient[t][e] = 1;
      std::deque<std::pair<int, int>> queue{{t, e}};
      while (!queue.empty()) {
        auto [ct, ce] = queue.front();
        queue.pop_front();
        const int a = kEdgeVertices[ce][0], b = kEdgeVertices[ce][1];
        for (int f = 0; f < 4; ++f) {
          if (f == a || f == b) continue;
          const auto& g = tri.gluing(ct, f);
          if (!g) continue;
          const int na = g->corners[a], nb = g->corners[b];
          const int ne = edge_index(na, nb);
          const int no = orient[ct][ce] * (na < nb ? 1 : -1);
          if (edge_of_[g->tet][ne] < 0) {
            edge_of_[g->tet][ne] = id;
            orient[g->tet][ne] = no;
            queue.emplace_back(g->tet, ne);
          } else if (orient[g->tet][ne] != no) {
            reversed_[id] = true;
          }
        }
      }
    }
  }

  for (int t = 0; t < n; ++t) {
    for (int f = 0; f < 4; ++f) {
      if (triangle_of_[t][f] >= 0) continue;
      const int id = triangle_count_++;
      triangle_of_[t][f] = id;
      if (const auto& g = tri.gluing(t, f)) triangle_of_[g->tet][g->face] = id;
    }
  }

  // Link of a vertex orbit: one corner triangle per tetrahedron corner, one
  // link edge per (triangle orbit, corner) and one link vertex per edge end.
  std::vector<int> link_v(vertex_count_, 0), link_e(vertex_count_, 0), link_f(vertex_count_, 0);
  for (int t = 0; t < n; ++t)
    for (int v = 0; v < 4; ++v) ++link_f[vertex_of_[t][v]];
  std::vector<bool> triangle_done(triangle_count_, false);
  for (int t = 0; t < n; ++t) {
    for (int f = 0; f < 4; ++f) {
      const int id = triangle_of_[t][f];
      if (triangle_done[id]) continue;
      triangle_done[id] = true;
      for (int v = 0; v < 4; ++v)
        if (v != f) ++link_e[vertex_of_[t][v]];
    }
  }
  std::vector<bool> edge_done(edge_count_, false);
  for (int t = 0; t < n; ++t) {
    for (int e = 0; e < 6; ++e) {
      const int id = edge_of_[t][e];
      if (edge_done[id]) continue;
      edge_done[id] = true;
      ++link_v[vertex_of_[t][kEdgeVertices[e][0]]];
      if (!reversed_[id]) ++link_v[vertex_of_[t][kEdgeVertices[e][1]]];
    }
  }
  link_euler_.resize(vertex_count_);
  for (int x = 0; x < vertex_count_; ++x) link_euler_[x] = link_v[x] - link_e[x] + link_f[x];
}

SkeletonSummary Skeleton::summary() const {
  SkeletonSummary s;
  s.vertex_count = vertex_count_;
  s.edge_count = edge_count_;
  s.triangle_count = triangle_count_;
  s.tet_count = tet_count();
  s.euler = s.vertex_count - s.edge_count + s.triangle_count - s.tet_count;
  return s;
}

SkeletonSummary skeleton(const Triangulation& tri) { return Skeleton(tri).summary(); }

std::string_view to_string(IssueKind kind) noexcept {
  switch (kind) {
    case IssueKind::NotClosed: return "NotClosed";
    case IssueKind::Disconnected: return "Disconnected";
    case IssueKind::EdgeReversed: return "EdgeReversed";
    case IssueKind::BadVertexLink: return "BadVertexLink";
  }
  return "Unknown";
}

ValidationReport validate_closed(const Triangulation& tri) {
  ValidationReport report;
  report.all_faces_glued = true;
  for (int t = 0; t < tri.size(); ++t) {
    for (int f = 0; f < 4; ++f) {
      if (tri.gluing(t, f)) continue;
      report.all_faces_glued = false;
      report.issues.push_back({IssueKind::NotClosed, 4 * t + f,
                               "face (" + std::to_string(t) + "," + std::to_string(f) +
                                   ") is not glued"});
    }
  }
  report.connected = tri.is_connected();
  if (!report.connected)
    report.issues.push_back({IssueKind::Disconnected, -1, "dual graph is disconnected"});

  const Skeleton sk(tri);
  report.edges_ok = true;
  for (int e = 0; e < sk.edge_count(); ++e) {
    if (!sk.edge_reversed(e)) continue;
    report.edges_ok = false;
    report.issues.push_back(
        {IssueKind::EdgeReversed, e, "edge " + std::to_string(e) + " is identified with itself in reverse"});
  }
  report.links_ok = true;
  for (int v = 0; v < sk.vertex_count(); ++v) {
    const int chi = sk.link_euler(v);
    if (chi == 2) continue;
    report.links_ok = false;
    report.issues.push_back({IssueKind::BadVertexLink, v,
                             "link of vertex " + std::to_string(v) + " has Euler characteristic " +
                                 std::to_string(chi)});
  }
  return report;
}

bool check_orientable(const Triangulation& tri) {
  std::vector<int> orientation(tri.size(), 0);
  for (int start = 0; start < tri.size(); ++start) {
    if (orientation[start] != 0) continue;
    orientation[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      for (int f = 0; f < 4; ++f) {
        const auto& g = tri.gluing(t, f);
        if (!g) continue;
        const int wanted = -g->corners.sign() * orientation[t];
        if (orientation[g->tet] == 0) {
          orientation[g->tet] = wanted;
          stack.push_back(g->tet);
        } else if (orientation[g->tet] != wanted) {
          return false;
        }
      }
    }
  }
  return true;
}

void require_closed_orientable(const Triangulation& tri) {
  const auto report = validate_closed(tri);
  if (!report.connected) throw Error(Errc::Disconnected, "triangulation is disconnected");
  if (!report.valid())
    throw Error(Errc::InvalidTriangulation, std::string(to_string(report.issues.front().kind)) +
                                                ": " + report.issues.front().detail);
  if (!check_orientable(tri)) throw Error(Errc::InvalidTriangulation, "triangulation is not orientable");
}

std::string_view to_string(SelfGluingClass cls) noexcept {
  switch (cls) {
    case SelfGluingClass::NoSelfGluing: return "NoSelfGluing";
    case SelfGluingClass::SnappedBall: return "SnappedBall";
    case SelfGluingClass::SolidTorus: return "SolidTorus";
    case SelfGluingClass::Invalid: return "Invalid";
  }
  return "Unknown";
}

std::optional<std::array<int, 2>> self_glued_pair(const Triangulation& tri, int tet) {
  if (tet < 0 || tet >= tri.size()) throw Error(Errc::IndexOutOfRange, "no such tetrahedron");
  std::optional<std::array<int, 2>> pair;
  for (int f = 0; f < 4; ++f) {
    const auto& g = tri.gluing(tet, f);
    if (!g || g->tet != tet || g->face < f) continue;
    if (pair)
      throw Error(Errc::MoreThanOneSelfGluedPair,
                  "tetrahedron " + std::to_string(tet) + " has two self-glued face pairs");
    pair = std::array<int, 2>{f, g->face};
  }
  return pair;
}

}  // namespace widthlab
