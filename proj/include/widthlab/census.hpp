#pragma once

#include <cstdint>
#include <vector>

#include "widthlab/handles.hpp"
#include "widthlab/triangulation.hpp"

namespace widthlab {

/// Largest census the enumerator accepts.
inline constexpr int kCensusMaxTets = 3;

/// Relabeling-invariant code: the lexicographically smallest breadth-first
/// gluing table over all starting tetrahedra and vertex labelings.
std::vector<std::uint8_t> canonical_code(const Triangulation& tri);

/// The relabeled triangulation whose gluing table realizes canonical_code.
Triangulation canonical_form(const Triangulation& tri);

/// One representative per isomorphism class of connected, closed, valid,
/// orientable triangulations with 1..max_tets tetrahedra, ordered by size
/// and then by canonical code. Throws TooLarge above kCensusMaxTets.
std::vector<Triangulation> enumerate_census(int max_tets);

struct CensusRecord {
  Triangulation tri{1};
  int cutwidth = 0;
  int congestion = 0;
  LinearCertificate linear;
  GraphSplittingCertificate graph;

  bool passed() const {
    return linear.all_checks_pass() && graph.all_checks_pass() && graph.single_tet_case == (tri.size() == 1);
  }
};

/// Both certificates along an optimal layout and an optimal host.
CensusRecord certify_entry(const Triangulation& tri, const SurfaceObserver& observer = {});

}  // namespace widthlab
