#include "widthlab/census.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "widthlab/error.hpp"
#include "widthlab/width.hpp"

namespace widthlab {

namespace {

int perm_index(const Perm4& p) {
  static const auto table = [] {
    std::array<std::uint8_t, 256> out{};
    const auto& all = Perm4::all();
    for (std::size_t i = 0; i < all.size(); ++i)
      out[all[i][0] | all[i][1] << 2 | all[i][2] << 4 | all[i][3] << 6] = static_cast<std::uint8_t>(i);
    return out;
  }();
  return table[p[0] | p[1] << 2 | p[2] << 4 | p[3] << 6];
}

// Breadth-first relabeling from (start, labeling): every tetrahedron reached
// through a new gluing is labeled so that the gluing reads as the identity.
// Stops early, returning false, once the code exceeds `bound`.
class CodeBuilder {
 public:
  explicit CodeBuilder(const Triangulation& tri)
      : tri_(tri), new_index_(tri.size()), old_index_(tri.size()), label_(tri.size()) {}

  bool build(int start, const Perm4& labeling, const std::vector<std::uint8_t>& bound,
             std::vector<std::uint8_t>& code) {
    std::fill(new_index_.begin(), new_index_.end(), -1);
    code.clear();
    int reached = 1;
    new_index_[start] = 0;
    old_index_[0] = start;
    label_[start] = labeling;
    bool tied = !bound.empty();
    auto emit = [&](int value) {
      const auto byte = static_cast<std::uint8_t>(value);
      if (tied) {
        const auto limit = bound[code.size()];
        if (byte > limit) return false;
        if (byte < limit) tied = false;
      }
      code.push_back(byte);
      return true;
    };
    for (int j = 0; j < reached; ++j) {
      const int t = old_index_[j];
      const Perm4 back = label_[t].inverse();
      for (int face = 0; face < 4; ++face) {
        const auto& g = tri_.gluing(t, back[face]);
        if (new_index_[g->tet] < 0) {
          new_index_[g->tet] = reached;
          old_index_[reached++] = g->tet;
          label_[g->tet] = label_[t] * g->corners.inverse();
        }
        const Perm4 corners = label_[g->tet] * g->corners * back;
        if (!emit(new_index_[g->tet]) || !emit(label_[g->tet][g->face]) || !emit(perm_index(corners)))
          return false;
      }
    }
    return true;
  }

 private:
  const Triangulation& tri_;
  std::vector<int> new_index_;
  std::vector<int> old_index_;
  std::vector<Perm4> label_;
};

Triangulation from_code(const std::vector<std::uint8_t>& code) {
  const int n = static_cast<int>(code.size() / 12);
  Triangulation tri(n);
  for (int t = 0; t < n; ++t) {
    for (int f = 0; f < 4; ++f) {
      if (tri.gluing(t, f)) continue;
      const std::size_t at = static_cast<std::size_t>(t * 4 + f) * 3;
      tri.glue(t, f, code[at], code[at + 1], Perm4::all()[code[at + 2]]);
    }
  }
  return tri;
}

// Odd corner maps carrying face f onto face g.
const std::array<std::array<std::vector<Perm4>, 4>, 4>& odd_maps() {
  static const auto table = [] {
    std::array<std::array<std::vector<Perm4>, 4>, 4> out;
    for (const Perm4& p : Perm4::all())
      if (p.sign() < 0)
        for (int f = 0; f < 4; ++f) out[f][p[f]].push_back(p);
    return out;
  }();
  return table;
}

bool matching_connected(int n, const std::vector<int>& partner) {
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int t = stack.back();
    stack.pop_back();
    for (int f = 0; f < 4; ++f) {
      const int u = partner[t * 4 + f] / 4;
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

// Fixed-size gluing table used inside the enumeration loop.
struct RawTable {
  int n = 0;
  std::array<int, 4 * kCensusMaxTets> partner{};  // slot t*4+f -> slot
  std::array<Perm4, 4 * kCensusMaxTets> corners{};
};

// Union-find with parity over at most 6 * kCensusMaxTets elements.
struct ParityForest {
  std::array<int, 6 * kCensusMaxTets> parent{};
  std::array<int, 6 * kCensusMaxTets> parity{};  // relative to parent

  explicit ParityForest(int size) {
    for (int i = 0; i < size; ++i) parent[i] = i;
  }
  std::pair<int, int> find(int x) {
    int p = 0;
    while (parent[x] != x) {
      p ^= parity[x];
      x = parent[x];
    }
    return {x, p};
  }
  // Returns false when the new relation contradicts the known ones.
  bool unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ rel;
    return true;
  }
};

// Edge orientations and vertex-link Euler characteristics of a closed
// table, without building a Triangulation.
bool raw_valid(const RawTable& table) {
  const int n = table.n;
  ParityForest edges(6 * n), vertices(4 * n);
  for (int slot = 0; slot < 4 * n; ++slot) {
    const int other = table.partner[slot];
    if (other < slot) continue;
    const int t = slot / 4, f = slot % 4, u = other / 4;
    const Perm4& p = table.corners[slot];
    for (int v = 0; v < 4; ++v)
      if (v != f) vertices.unite(t * 4 + v, u * 4 + p[v], 0);
    for (int e = 0; e < 6; ++e) {
      const int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
      if (a == f || b == f) continue;
      const int flip = (p[a] < p[b]) ? 0 : 1;
      if (!edges.unite(t * 6 + e, u * 6 + edge_index(p[a], p[b]), flip)) return false;
    }
  }
  // chi(link) = edge ends - link edges + corners, collected per vertex orbit.
  std::array<int, 4 * kCensusMaxTets> chi{};
  for (int i = 0; i < 4 * n; ++i) chi[vertices.find(i).first] += 1;
  for (int slot = 0; slot < 4 * n; ++slot) {
    if (table.partner[slot] < slot) continue;
    const int t = slot / 4, f = slot % 4;
    for (int v = 0; v < 4; ++v)
      if (v != f) chi[vertices.find(t * 4 + v).first] -= 1;
  }
  for (int i = 0; i < 6 * n; ++i) {
    if (edges.find(i).first != i) continue;
    // Any copy of the orbit gives the two ends.
    for (int j = 0; j < 6 * n; ++j) {
      if (edges.find(j).first != i) continue;
      const int t = j / 6, e = j % 6;
      chi[vertices.find(t * 4 + kEdgeVertices[e][0]).first] += 1;
      chi[vertices.find(t * 4 + kEdgeVertices[e][1]).first] += 1;
      break;
    }
  }
  for (int i = 0; i < 4 * n; ++i)
    if (vertices.find(i).first == i && chi[i] != 2) return false;
  return true;
}

Triangulation from_raw(const RawTable& table) {
  Triangulation tri(table.n);
  for (int slot = 0; slot < 4 * table.n; ++slot) {
    const int other = table.partner[slot];
    if (other > slot) tri.glue(slot / 4, slot % 4, other / 4, other % 4, table.corners[slot]);
  }
  return tri;
}

// All gluing tables of n tetrahedra with odd corner maps; every orientable
// triangulation has such a labeling.
void enumerate_size(int n, std::set<std::vector<std::uint8_t>>& found) {
  const int slots = 4 * n;
  RawTable table;
  table.n = n;
  std::vector<int> partner(slots, -1);
  std::vector<std::pair<int, int>> pairs;

  auto assign_maps = [&](auto&& self, std::size_t i) -> void {
    if (i == pairs.size()) {
      if (!raw_valid(table)) return;
      const Triangulation tri = from_raw(table);
      if (!validate_closed(tri).valid()) throw Error(Errc::Internal, "census filter accepted an invalid table");
      found.insert(canonical_code(tri));
      return;
    }
    auto [a, b] = pairs[i];
    for (const Perm4& p : odd_maps()[a % 4][b % 4]) {
      table.corners[a] = p;
      table.corners[b] = p.inverse();
      self(self, i + 1);
    }
  };
  auto match = [&](auto&& self) -> void {
    int first = -1;
    for (int s = 0; s < slots && first < 0; ++s)
      if (partner[s] < 0) first = s;
    if (first < 0) {
      if (!matching_connected(n, partner)) return;
      std::copy(partner.begin(), partner.end(), table.partner.begin());
      assign_maps(assign_maps, 0);
      return;
    }
    for (int s = first + 1; s < slots; ++s) {
      if (partner[s] >= 0) continue;
      partner[first] = s;
      partner[s] = first;
      pairs.emplace_back(first, s);
      self(self);
      pairs.pop_back();
      partner[first] = partner[s] = -1;
    }
  };
  match(match);
}

}  // namespace

std::vector<std::uint8_t> canonical_code(const Triangulation& tri) {
  if (!tri.is_closed() || !tri.is_connected())
    throw Error(Errc::InvalidArgument, "canonical codes need a closed connected triangulation");
  CodeBuilder builder(tri);
  std::vector<std::uint8_t> best, code;
  for (int t = 0; t < tri.size(); ++t)
    for (const Perm4& p : Perm4::all())
      if (builder.build(t, p, best, code)) best.swap(code);
  return best;
}

Triangulation canonical_form(const Triangulation& tri) { return from_code(canonical_code(tri)); }

std::vector<Triangulation> enumerate_census(int max_tets) {
  if (max_tets < 1) throw Error(Errc::InvalidArgument, "census size must be positive");
  if (max_tets > kCensusMaxTets)
    throw Error(Errc::TooLarge, "census is limited to " + std::to_string(kCensusMaxTets) + " tetrahedra");
  std::vector<Triangulation> out;
  for (int n = 1; n <= max_tets; ++n) {
    std::set<std::vector<std::uint8_t>> found;
    enumerate_size(n, found);
    for (const auto& code : found) out.push_back(from_code(code));
  }
  return out;
}

CensusRecord certify_entry(const Triangulation& tri, const SurfaceObserver& observer) {
  CensusRecord record;
  record.tri = tri;
  const MultiGraph dual = build_dual(tri);
  const auto cw = cutwidth_exact(dual);
  const auto cng = congestion_exact(dual);
  record.cutwidth = cw.value;
  record.congestion = cng.value;
  const HandleDecomposition hd(tri);
  record.linear = linear_certificate(hd, std::get<LinearLayout>(cw.witness), observer);
  record.graph = graph_certificate(hd, std::get<HostTree>(cng.witness), std::nullopt, observer);
  return record;
}

}  // namespace widthlab
