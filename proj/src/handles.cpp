#include "widthlab/handles.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include <boost/pending/disjoint_sets.hpp>

#include "widthlab/error.hpp"

namespace widthlab {

int HandleSet::count() const {
  return static_cast<int>(std::count(present_.begin(), present_.end(), std::uint8_t{1}));
}

std::vector<int> HandleSet::members() const {
  std::vector<int> out;
  for (int h = 0; h < size(); ++h)
    if (present_[h]) out.push_back(h);
  return out;
}

bool HandleSet::is_subset_of(const HandleSet& other) const {
  for (int h = 0; h < size(); ++h)
    if (present_[h] && !other.present_[h]) return false;
  return true;
}

bool HandleSet::intersects(const HandleSet& other) const {
  for (int h = 0; h < size(); ++h)
    if (present_[h] && other.present_[h]) return true;
  return false;
}

int c_complexity(const SurfaceSummary& s) {
  int c = 0;
  for (int g : s.component_genera) c += std::max(0, 2 * g - 1);
  return c;
}

namespace {

// A chain of faces of one tetrahedron: bit S is set when the vertex subset
// S belongs to the chain.
using ChainCode = std::uint16_t;

const std::vector<ChainCode>& local_chains() {
  static const std::vector<ChainCode> chains = [] {
    std::vector<ChainCode> out;
    for (unsigned code = 2; code < (1u << 16); code += 2) {
      bool chain = true;
      for (unsigned a = code; a && chain; a &= a - 1) {
        const unsigned s = static_cast<unsigned>(std::countr_zero(a));
        for (unsigned b = a & (a - 1); b; b &= b - 1) {
          const unsigned t = static_cast<unsigned>(std::countr_zero(b));
          if ((s & t) != s && (s & t) != t) {
            chain = false;
            break;
          }
        }
      }
      if (chain) out.push_back(static_cast<ChainCode>(code));
    }
    return out;
  }();
  return chains;
}

unsigned map_subset(unsigned subset, const Perm4& p) {
  unsigned out = 0;
  for (int i = 0; i < 4; ++i)
    if (subset >> i & 1) out |= 1u << p[i];
  return out;
}

ChainCode map_chain(ChainCode code, const Perm4& p) {
  unsigned out = 0;
  for (unsigned c = code; c; c &= c - 1) out |= 1u << map_subset(static_cast<unsigned>(std::countr_zero(c)), p);
  return static_cast<ChainCode>(out);
}

unsigned top_subset(ChainCode code) { return 15u - static_cast<unsigned>(std::countl_zero(code)); }

}  // namespace

HandleDecomposition::HandleDecomposition(const Triangulation& tri) : tri_(tri), skeleton_(tri) {
  if (!tri.is_closed()) throw Error(Errc::InvalidTriangulation, "handle decompositions need a closed triangulation");
  const int n = tri.size();
  counts_ = {n, skeleton_.triangle_count(), skeleton_.edge_count(), skeleton_.vertex_count()};
  offset_ = {0, counts_[0], counts_[0] + counts_[1], counts_[0] + counts_[1] + counts_[2]};
  for (int i = 0; i < 4; ++i)
    for (int f = 0; f < counts_[i]; ++f) handles_.push_back({i, f});

  auto handle_of = [&](int t, unsigned subset) {
    switch (std::popcount(subset)) {
      case 4: return handle_id(0, t);
      case 3: return handle_id(1, skeleton_.triangle(t, std::countr_zero(~subset & 15u)));
      case 2: {
        const int a = std::countr_zero(subset);
        const int b = std::countr_zero(subset & (subset - 1));
        return handle_id(2, skeleton_.edge(t, edge_index(a, b)));
      }
      default: return handle_id(3, skeleton_.vertex(t, std::countr_zero(subset)));
    }
  };

  incident_tets_.assign(handles_.size(), {});
  cofaces_.assign(handles_.size(), {});
  for (int t = 0; t < n; ++t) {
    for (unsigned s = 1; s < 16; ++s) {
      const int h = handle_of(t, s);
      incident_tets_[h].push_back(t);
      for (int x = 0; x < 4; ++x)
        if (!(s >> x & 1)) cofaces_[h].push_back(handle_of(t, s | 1u << x));
    }
  }
  for (auto* lists : {&incident_tets_, &cofaces_}) {
    for (auto& list : *lists) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  // First subdivision: local chains identified across the face gluings.
  const auto& chains = local_chains();
  const int per_tet = static_cast<int>(chains.size());
  std::vector<int> chain_index(1u << 16, -1);
  for (int i = 0; i < per_tet; ++i) chain_index[chains[i]] = i;
  boost::disjoint_sets_with_storage<> cells(static_cast<std::size_t>(n) * per_tet);
  for (int t = 0; t < n; ++t) {
    for (int i = 0; i < per_tet; ++i) {
      const unsigned top = top_subset(chains[i]);
      for (int f = 0; f < 4; ++f) {
        if (top >> f & 1) continue;
        const auto& g = tri.gluing(t, f);
        const int j = chain_index[map_chain(chains[i], g->corners)];
        cells.union_set(t * per_tet + i, g->tet * per_tet + j);
      }
    }
  }
  std::vector<int> cell_of(static_cast<std::size_t>(n) * per_tet, -1);
  std::map<std::size_t, int> root_id;
  for (int t = 0; t < n; ++t) {
    for (int i = 0; i < per_tet; ++i) {
      const std::size_t local = static_cast<std::size_t>(t) * per_tet + i;
      const std::size_t root = cells.find_set(local);
      auto [it, fresh] = root_id.emplace(root, static_cast<int>(cells_.size()));
      if (fresh) {
        Cell cell;
        for (unsigned c = chains[i]; c; c &= c - 1)
          cell.handles[cell.length++] = handle_of(t, static_cast<unsigned>(std::countr_zero(c)));
        cells_.push_back(cell);
      }
      cell_of[local] = it->second;
    }
  }

  // Second subdivision: chains of first-subdivision cells. Each cell has
  // every face exactly once, so global cell ids determine the simplex.
  for (int t = 0; t < n; ++t) {
    for (int i = 0; i < per_tet; ++i) {
      const unsigned code = chains[i];
      const int c3 = cell_of[static_cast<std::size_t>(t) * per_tet + i];
      for (unsigned sub = (code - 1) & code; sub; sub = (sub - 1) & code) {
        const int c2 = cell_of[static_cast<std::size_t>(t) * per_tet + chain_index[sub]];
        edges_.push_back({c2, c3});
        for (unsigned low = (sub - 1) & sub; low; low = (low - 1) & sub) {
          const int c1 = cell_of[static_cast<std::size_t>(t) * per_tet + chain_index[low]];
          triangles_.push_back({c1, c2, c3});
        }
      }
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  std::sort(triangles_.begin(), triangles_.end());
  triangles_.erase(std::unique(triangles_.begin(), triangles_.end()), triangles_.end());
}

HandleSet HandleDecomposition::all_handles() const {
  HandleSet set(handle_count());
  for (int h = 0; h < handle_count(); ++h) set.insert(h);
  return set;
}

bool HandleDecomposition::is_admissible(const HandleSet& set) const {
  if (set.size() != handle_count()) return false;
  for (int h = 0; h < handle_count(); ++h) {
    if (!set.contains(h)) continue;
    for (int c : cofaces_[h])
      if (!set.contains(c)) return false;
  }
  return true;
}

HandleSet HandleDecomposition::admissible_closure(const std::vector<int>& tets) const {
  HandleSet set(handle_count());
  for (int t : tets) {
    if (t < 0 || t >= counts_[0]) throw Error(Errc::IndexOutOfRange, "tetrahedron " + std::to_string(t));
    set.insert(handle_id(0, t));
  }
  // Handles are stored by index, so cofaces are decided first.
  for (int h = counts_[0]; h < handle_count(); ++h) {
    bool all = true;
    for (int c : cofaces_[h]) all = all && set.contains(c);
    if (all) set.insert(h);
  }
  return set;
}

int HandleDecomposition::expected_euler(const HandleSet& set) const {
  int chi = 0;
  for (int h = 0; h < handle_count(); ++h)
    if (set.contains(h)) chi += handles_[h].index % 2 == 0 ? 1 : -1;
  return 2 * chi;
}

SurfaceSummary HandleDecomposition::boundary_surface(const HandleSet& set) const {
  if (!is_admissible(set)) throw Error(Errc::NotAdmissible, "handle set is not closed under cofaces");
  // A cell lies on the frontier when its chain has faces both inside and
  // outside the set.
  const int cell_count = static_cast<int>(cells_.size());
  std::vector<std::uint8_t> mixed(cell_count, 0);
  for (int c = 0; c < cell_count; ++c) {
    bool in = false, out = false;
    for (int i = 0; i < cells_[c].length; ++i) (set.contains(cells_[c].handles[i]) ? in : out) = true;
    mixed[c] = in && out;
  }
  boost::disjoint_sets_with_storage<> parts(cell_count);
  for (const auto& e : edges_)
    if (mixed[e[0]] && mixed[e[1]]) parts.union_set(e[0], e[1]);
  std::map<std::size_t, int> euler_of;
  for (int c = 0; c < cell_count; ++c)
    if (mixed[c]) ++euler_of[parts.find_set(c)];
  for (const auto& e : edges_)
    if (mixed[e[0]] && mixed[e[1]]) --euler_of[parts.find_set(e[0])];
  for (const auto& t : triangles_)
    if (mixed[t[0]] && mixed[t[1]] && mixed[t[2]]) ++euler_of[parts.find_set(t[0])];

  SurfaceSummary s;
  for (const auto& [root, chi] : euler_of) {
    if (chi > 2 || chi % 2 != 0)
      throw Error(Errc::Internal, "boundary component with Euler characteristic " + std::to_string(chi));
    s.component_genera.push_back((2 - chi) / 2);
    s.euler += chi;
  }
  std::sort(s.component_genera.rbegin(), s.component_genera.rend());
  for (int g : s.component_genera) s.total_genus += g;
  s.complexity = c_complexity(s);
  return s;
}

std::vector<Handle> chd(const Triangulation& tri) { return HandleDecomposition(tri).handles(); }

HandleSet leaf_handlebody(const HandleDecomposition& hd, int tet) { return hd.admissible_closure({tet}); }

SelfGluingClass classify_self_gluing(const Triangulation& tri, int tet) {
  if (!self_glued_pair(tri, tet)) return SelfGluingClass::NoSelfGluing;
  const HandleDecomposition hd(tri);
  const auto surface = hd.boundary_surface(leaf_handlebody(hd, tet));
  if (surface.components() != 1) return SelfGluingClass::Invalid;
  switch (surface.total_genus) {
    case 0: return SelfGluingClass::SnappedBall;
    case 1: return SelfGluingClass::SolidTorus;
    default: return SelfGluingClass::Invalid;
  }
}

std::strong_ordering compare_widths_lex(const std::vector<int>& a, const std::vector<int>& b) {
  for (const auto* v : {&a, &b})
    if (!std::is_sorted(v->begin(), v->end(), std::greater<>()))
      throw Error(Errc::NotSorted, "width multisets must be non-increasing");
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    const int x = i < a.size() ? a[i] : 0;
    const int y = i < b.size() ? b[i] : 0;
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

}  // namespace widthlab
