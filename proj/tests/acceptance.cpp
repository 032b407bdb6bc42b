// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "widthlab/bounds.hpp"
#include "widthlab/census.hpp"
#include "widthlab/handles.hpp"
#include "widthlab/inequalities.hpp"
#include "widthlab/parallel.hpp"
#include "widthlab/width.hpp"

using namespace widthlab;

namespace {

std::string read_data(const std::string& name) {
  const std::string path = std::string(WIDTHLAB_TEST_DATA) + "/" + name;
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw std::runtime_error("cannot open " + path);
  std::string text;
  char buffer[4096];
  for (std::size_t got; (got = std::fread(buffer, 1, sizeof buffer, f)) > 0;) text.append(buffer, got);
  std::fclose(f);
  return text;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome petersen_exactness() {
  Outcome out;
  const auto start = Clock::now();
  const auto g = parse_edge_list(read_data("petersen.txt"));
  const Param params[] = {Param::Treewidth, Param::Pathwidth, Param::Cutwidth, Param::Congestion};
  const int expected[] = {4, 5, 6, 5};
  for (int i = 0; i < 4; ++i) {
    const auto report = width_exact(g, params[i]);
    const std::string name(to_string(params[i]));
    out.require(report.exact && report.value == expected[i],
                name + " = " + std::to_string(report.value) + ", expected " + std::to_string(expected[i]));
    out.require(witness_value(g, report) == expected[i], name + " witness does not realize the value");
  }
  const double elapsed = seconds_since(start);
  out.require(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
  if (out.pass) out.detail = "tw=4 pw=5 cw=6 cng=5 with validating witnesses";
  return out;
}

Outcome k5_routing() {
  Outcome out;
  const auto k5 = parse_edge_list(read_data("k5.txt"));
  const auto host = parse_host(read_data("k5_host.txt"));
  validate_host(k5, host);
  const int value = congestion_of(k5, host);
  out.require(value == 6, "congestion " + std::to_string(value));
  out.require(oracle::congestion_by_cuts(k5, host) == 6, "cut oracle disagrees");
  if (out.pass) out.detail = "congestion 6 on the five-leaf host";
  return out;
}

Outcome inequality_chain() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937_64 rng(20240);
  std::vector<MultiGraph> graphs;
  for (int i = 0; i < 100; ++i) graphs.push_back(oracle::random_four_regular(3 + i % 8, rng));
  const auto reports = parallel_map(100, [&](int i) { return verify_chain(graphs[i]); });
  int violations = 0;
  for (int i = 0; i < 100; ++i) {
    const auto& r = reports[i];
    const bool ok = r.pw <= r.cw && r.cw <= 4 * r.pw && 2 * (r.tw + 1) <= 3 * r.cng && r.cng <= 4 * (r.tw + 1) &&
                    r.cng >= 4 && r.loops_stripped == 0 && r.max_degree == 4;
    if (!ok) {
      ++violations;
      out.require(false, "graph " + std::to_string(i) + " violates the chain");
    }
  }
  const double elapsed = seconds_since(start);
  out.require(elapsed < 600.0, "took " + std::to_string(elapsed) + " s");
  if (out.pass) out.detail = "100 graphs, 0 violations";
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  std::vector<MultiGraph> graphs;
  for (int n = 1; n <= 6; ++n)
    for (auto& g : oracle::connected_graphs(n)) graphs.push_back(std::move(g));
  const int simple = static_cast<int>(graphs.size());
  std::mt19937_64 rng(777);
  for (int i = 0; i < 50; ++i) graphs.push_back(oracle::random_multigraph(7, rng, 3 + i % 8, i % 3 == 0));
  const auto mismatches = parallel_map(static_cast<int>(graphs.size()), [&](int i) {
    const auto& g = graphs[i];
    int bad = 0;
    bad += treewidth_exact(g).value != oracle::treewidth(g);
    bad += pathwidth_exact(g).value != oracle::pathwidth(g);
    bad += cutwidth_exact(g).value != oracle::cutwidth(g);
    bad += congestion_exact(g).value != oracle::congestion(g);
    return bad;
  });
  int total = 0;
  for (int m : mismatches) total += m;
  out.require(total == 0, std::to_string(total) + " mismatches");
  if (out.pass)
    out.detail = std::to_string(simple) + " connected graphs (n <= 6) and 50 random multigraphs (n = 7), 0 mismatches";
  return out;
}

struct CensusRun {
  int entries = 0;
  int failures = 0;
  std::string first_failure;
  long surfaces = 0;
  long euler_mismatches = 0;
  int skeleton_failures = 0;
};

CensusRun run_census() {
  CensusRun run;
  const auto census = enumerate_census(kCensusMaxTets);
  run.entries = static_cast<int>(census.size());
  struct EntryResult {
    std::string failure;
    long surfaces = 0;
    long euler_mismatches = 0;
    bool skeleton_ok = true;
  };
  const auto results = parallel_map(run.entries, [&](int i) {
    const auto& tri = census[i];
    EntryResult res;
    const HandleDecomposition hd(tri);
    const auto record = certify_entry(tri, [&](const HandleSet& set, const SurfaceSummary& s) {
      ++res.surfaces;
      res.euler_mismatches += s.euler != hd.expected_euler(set);
    });
    res.skeleton_ok = skeleton(tri).euler == 0;
    auto fail = [&](const std::string& why) {
      if (res.failure.empty()) res.failure = "entry " + std::to_string(i) + ": " + why;
    };
    // Widths recomputed by brute force.
    const auto dual = build_dual(tri);
    const int cw = oracle::cutwidth(dual);
    const int cng = oracle::congestion(dual);
    if (record.cutwidth != cw || record.linear.k != cw) fail("cutwidth disagrees with brute force");
    if (record.congestion != cng) fail("congestion disagrees with brute force");
    // (a) handle counts and genus steps, from the recorded attachments.
    int max_sum = 0;
    for (const auto& step : record.linear.steps) {
      if (step.attachments.size() > 15) fail("step adds more than 15 handles");
      for (const auto& a : step.attachments) {
        if (a.surface.total_genus > step.genus_before + 4) fail("genus rises by more than 4 in a step");
        max_sum = std::max(max_sum, a.surface.total_genus);
      }
    }
    // (b) linear bounds.
    if (max_sum > 3 * cw + 4) fail("intermediate genus exceeds 3cw+4");
    if (record.linear.L_upper != 6 * cw + 7) fail("L_upper is not 6cw+7");
    if (!record.linear.all_checks_pass()) fail("linear certificate reports a failure");
    // (c) and (d) graph splitting.
    if (tri.size() == 1) {
      if (!record.graph.single_tet_case) fail("one tetrahedron not routed to the single-tetrahedron case");
    } else {
      if (record.graph.single_tet_case) fail("unexpected single-tetrahedron case");
      for (const auto& leaf : record.graph.leaves)
        if (leaf.genus > 1 || leaf.genus >= 6 * cng) fail("leaf genus too large");
      for (const auto& node : record.graph.internal_nodes)
        if (node.surface.total_genus >= 6 * cng) fail("internal top boundary genus >= 6cng");
      if (record.graph.root.surface.total_genus >= 6 * cng) fail("root genus >= 6cng");
      if (!record.graph.all_checks_pass()) fail("graph certificate reports a failure");
    }
    return res;
  });
  for (const auto& res : results) {
    if (!res.failure.empty()) {
      if (run.failures == 0) run.first_failure = res.failure;
      ++run.failures;
    }
    run.surfaces += res.surfaces;
    run.euler_mismatches += res.euler_mismatches;
    run.skeleton_failures += !res.skeleton_ok;
  }
  return run;
}

Outcome census_certificates(const CensusRun& run, double elapsed) {
  Outcome out;
  out.require(run.entries == 96, "census has " + std::to_string(run.entries) + " entries");
  out.require(run.failures == 0, std::to_string(run.failures) + " failing entries; " + run.first_failure);
  out.require(elapsed < 1800.0, "took " + std::to_string(elapsed) + " s");
  if (out.pass)
    out.detail = std::to_string(run.entries) + " triangulations with at most 3 tetrahedra, 0 failures, census run " +
                 std::to_string(static_cast<int>(elapsed)) + " s";
  return out;
}

Outcome surface_invariants(const CensusRun& run) {
  Outcome out;
  out.require(run.surfaces > 0, "no surfaces observed");
  out.require(run.euler_mismatches == 0, std::to_string(run.euler_mismatches) + " Euler mismatches");
  out.require(run.skeleton_failures == 0, std::to_string(run.skeleton_failures) + " skeletons with nonzero Euler");
  if (out.pass) out.detail = std::to_string(run.surfaces) + " handle sets measured, 0 Euler mismatches";
  return out;
}

Outcome bounds_arithmetic() {
  Outcome out;
  const ManifoldFlags flags{true, true, true, true};
  for (int k = 0; k <= 10; ++k) {
    WidthSet w;
    w.pw = WidthValue{k, true};
    w.tw = WidthValue{k, true};
    const auto r = genus_bounds(w, flags);
    out.require(r.genus_from_pw == 4 * (3 * k + 1), "pw bound wrong at k=" + std::to_string(k));
    out.require(r.genus_from_tw_strict == 24 * (k + 1), "tw bound wrong at k=" + std::to_string(k));
    bool strict = false;
    for (const auto& line : r.lines)
      if (line.width == "tw") strict = line.relation == Relation::LessThan;
    out.require(strict, "tw bound is not strict at k=" + std::to_string(k));
  }
  if (out.pass) out.detail = "k = 0..10 match 4(3k+1) and 24(k+1)";
  return out;
}

Outcome nice_decompositions() {
  Outcome out;
  const auto g = parse_edge_list(read_data("petersen.txt"));
  const auto td = std::get<TreeDecomposition>(treewidth_exact(g).witness);
  const auto nice = make_nice(td);
  const auto report = validate_decomposition(g, nice.as_tree());
  out.require(report.valid(), "nice decomposition does not validate");
  out.require(nice.width() == 4, "width " + std::to_string(nice.width()));
  out.require(nice_tags_consistent(nice), "bag tags inconsistent");
  const int limit = 8 * g.node_count();
  out.require(static_cast<int>(nice.bags.size()) <= limit, std::to_string(nice.bags.size()) + " bags");
  const auto pd = std::get<PathDecomposition>(pathwidth_exact(g).witness);
  const auto from_path = make_nice(pd.as_tree());
  const bool no_join = std::none_of(from_path.bags.begin(), from_path.bags.end(),
                                    [](const NiceBag& b) { return b.kind == NiceKind::Join; });
  out.require(no_join, "path input produced a join bag");
  out.require(validate_decomposition(g, from_path.as_tree()).valid(), "path-based nice decomposition invalid");
  if (out.pass)
    out.detail = "width 4, " + std::to_string(nice.bags.size()) + " bags (limit " + std::to_string(limit) +
                 "), path input has no join";
  return out;
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int number, const char* name, const std::function<Outcome()>& fn) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    failed += !out.pass;
    std::printf("%s criterion %d (%s): %s [%.2f s]\n", out.pass ? "PASS" : "FAIL", number, name, out.detail.c_str(),
                seconds_since(start));
    std::fflush(stdout);
  };
  report(1, "Petersen exactness", petersen_exactness);
  report(2, "K5 routing", k5_routing);
  report(3, "inequality chain", inequality_chain);
  report(4, "oracle equivalence", oracle_equivalence);

  CensusRun run;
  double census_seconds = 0;
  std::string census_error;
  {
    const auto start = Clock::now();
    try {
      run = run_census();
    } catch (const std::exception& e) {
      census_error = e.what();
    }
    census_seconds = seconds_since(start);
  }
  auto census_outcome = [&](const std::function<Outcome()>& fn) {
    return [&, fn] {
      if (!census_error.empty()) return Outcome{false, "census run failed: " + census_error};
      return fn();
    };
  };
  report(5, "census certificates", census_outcome([&] { return census_certificates(run, census_seconds); }));
  report(6, "surface invariants", census_outcome([&] { return surface_invariants(run); }));
  report(7, "bounds arithmetic", bounds_arithmetic);
  report(8, "nice decompositions", nice_decompositions);
  std::printf("%d of 8 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
