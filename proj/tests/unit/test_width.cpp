#include <doctest.h>

#include <algorithm>

#include "../oracles.hpp"
#include "support.hpp"
#include "widthlab/error.hpp"
#include "widthlab/width.hpp"

using namespace widthlab;

namespace {

constexpr Param kParams[] = {Param::Treewidth, Param::Pathwidth, Param::Cutwidth, Param::Congestion};

MultiGraph complete(int n) {
  MultiGraph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_arc(a, b);
  return g;
}

MultiGraph path(int n) {
  MultiGraph g(n);
  for (int a = 0; a + 1 < n; ++a) g.add_arc(a, a + 1);
  return g;
}

bool has_problem(const DecompositionReport& report, DecompositionViolation kind) {
  return std::any_of(report.problems.begin(), report.problems.end(),
                     [&](const DecompositionProblem& p) { return p.kind == kind; });
}

int count_kind(const NiceTreeDecomposition& d, NiceKind kind) {
  return static_cast<int>(
      std::count_if(d.bags.begin(), d.bags.end(), [&](const NiceBag& b) { return b.kind == kind; }));
}

}  // namespace

TEST_CASE("parameter names") {
  for (Param p : kParams) CHECK(parse_param(to_string(p)) == p);
  CHECK_THROWS_AS(parse_param("bw"), Error);
}

TEST_CASE("Petersen graph exact widths") {
  const auto g = test::petersen();
  const int expected[] = {4, 5, 6, 5};
  for (int i = 0; i < 4; ++i) {
    const auto report = width_exact(g, kParams[i]);
    CHECK(report.exact);
    CHECK(report.value == expected[i]);
    CHECK(witness_value(g, report) == report.value);
  }
  // The relabeled Petersen file is laid out optimally by the identity.
  const auto cw = cutwidth_exact(g);
  CHECK(std::get<LinearLayout>(cw.witness).ordering == oracle::identity(10));
}

TEST_CASE("small families") {
  const auto c5 = parse_edge_list(test::read_data("cycle5.txt"));
  CHECK(treewidth_exact(c5).value == 2);
  CHECK(pathwidth_exact(c5).value == 2);
  CHECK(cutwidth_exact(c5).value == 2);
  CHECK(congestion_exact(c5).value == 2);
  const auto p6 = path(6);
  CHECK(treewidth_exact(p6).value == 1);
  CHECK(pathwidth_exact(p6).value == 1);
  CHECK(cutwidth_exact(p6).value == 1);
  MultiGraph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(treewidth_exact(star).value == 1);
  CHECK(pathwidth_exact(star).value == 1);
  CHECK(cutwidth_exact(star).value == 2);
  CHECK(congestion_exact(star).value == 4);
  const auto k5 = complete(5);
  CHECK(treewidth_exact(k5).value == 4);
  CHECK(pathwidth_exact(k5).value == 4);
  CHECK(cutwidth_exact(k5).value == 6);
  CHECK(congestion_exact(k5).value == 6);
  const MultiGraph single(1, {{0, 0}});
  for (Param p : kParams) CHECK(width_exact(single, p).value == 0);
}

TEST_CASE("parallel arcs and loops") {
  const MultiGraph four(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
  CHECK(treewidth_exact(four).value == 1);
  CHECK(pathwidth_exact(four).value == 1);
  CHECK(cutwidth_exact(four).value == 4);
  CHECK(congestion_exact(four).value == 4);
  const MultiGraph looped(2, {{0, 0}, {0, 1}, {1, 1}});
  CHECK(cutwidth_exact(looped).value == 1);
  CHECK(congestion_exact(looped).value == 1);
  CHECK(treewidth_exact(looped).value == 1);
}

TEST_CASE("exact solvers agree with brute force on all small connected graphs") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : oracle::connected_graphs(n)) {
      CHECK(treewidth_exact(g).value == oracle::treewidth(g));
      CHECK(pathwidth_exact(g).value == oracle::pathwidth(g));
      CHECK(cutwidth_exact(g).value == oracle::cutwidth(g));
      CHECK(congestion_exact(g).value == oracle::congestion(g));
    }
  }
}

TEST_CASE("exact solvers agree with brute force on random multigraphs") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 25; ++i) {
    const int n = 3 + i % 4;
    const auto g = oracle::random_multigraph(n, rng, 2 + i % 5, i % 2 == 0);
    CHECK(treewidth_exact(g).value == oracle::treewidth(g));
    CHECK(pathwidth_exact(g).value == oracle::pathwidth(g));
    CHECK(cutwidth_exact(g).value == oracle::cutwidth(g));
    CHECK(congestion_exact(g).value == oracle::congestion(g));
  }
}

TEST_CASE("lexicographically smallest optimal layouts") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 15; ++i) {
    const auto g = oracle::random_multigraph(6, rng, 4, false);
    const auto report = cutwidth_exact(g);
    std::vector<int> first;
    oracle::for_each_ordering(6, [&](const std::vector<int>& order) {
      if (first.empty() && oracle::cut_width_of(g, order) == report.value) first = order;
    });
    CHECK(std::get<LinearLayout>(report.witness).ordering == first);
  }
}

TEST_CASE("heuristics bound the exact values and are deterministic") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 12; ++i) {
    const auto g = oracle::random_four_regular(8 + i % 3, rng);
    for (Param p : kParams) {
      const auto exact = width_exact(g, p);
      const auto h1 = heuristic_upper(g, p, 42);
      const auto h2 = heuristic_upper(g, p, 42);
      CHECK_FALSE(h1.exact);
      CHECK(h1.value >= exact.value);
      CHECK(h1.value == h2.value);
      CHECK(witness_value(g, h1) == h1.value);
    }
  }
}

TEST_CASE("heuristics on a 30-node 4-regular graph") {
  std::mt19937_64 rng(30);
  const auto g = oracle::random_four_regular(30, rng);
  for (Param p : kParams) {
    const auto h = heuristic_upper(g, p, 7);
    CHECK(witness_value(g, h) == h.value);
    if (p == Param::Congestion) CHECK(h.value >= 4);
    if (p == Param::Cutwidth) CHECK(h.value >= 4);
  }
  CHECK_THROWS_AS(cutwidth_exact(g), Error);
}

TEST_CASE("exact limits") {
  const auto g = test::petersen();
  ExactLimits limits;
  limits.congestion = 9;
  try {
    congestion_exact(g, limits);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
  CHECK(limits.for_param(Param::Congestion) == 9);
}

TEST_CASE("decomposition validation") {
  const auto g = test::petersen();
  auto td = std::get<TreeDecomposition>(treewidth_exact(g).witness);
  REQUIRE(validate_decomposition(g, td).valid());
  CHECK(validate_decomposition(g, td).width == 4);

  auto missing = td;
  missing.bags[0].clear();
  CHECK_FALSE(validate_decomposition(g, missing).valid());

  auto no_arc = td;
  for (auto& bag : no_arc.bags) std::erase(bag, 9);
  for (auto& bag : no_arc.bags)
    if (bag.empty()) bag.push_back(0);
  const auto report = validate_decomposition(g, no_arc);
  CHECK(has_problem(report, DecompositionViolation::NodeUncovered));
  CHECK(has_problem(report, DecompositionViolation::ArcUncovered));

  auto cyclic = td;
  if (cyclic.bags.size() >= 3) {
    cyclic.arcs.emplace_back(0, static_cast<int>(cyclic.bags.size()) - 1);
    CHECK(has_problem(validate_decomposition(g, cyclic), DecompositionViolation::NotATree));
  }

  const MultiGraph p3 = path(3);
  const TreeDecomposition split{{{0, 1}, {2}, {1, 2}}, {{0, 1}, {1, 2}}};
  CHECK(has_problem(validate_decomposition(p3, split), DecompositionViolation::BagsDisconnected));
  const TreeDecomposition bad_entry{{{0, 5}}, {}};
  CHECK(has_problem(validate_decomposition(p3, bad_entry), DecompositionViolation::BadBagEntry));

  const auto pd = std::get<PathDecomposition>(pathwidth_exact(g).witness);
  CHECK(validate_decomposition(g, pd).valid());
  CHECK(validate_decomposition(g, pd).width == 5);
}

TEST_CASE("elimination orderings give valid decompositions") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 30; ++i) {
    const auto g = oracle::random_multigraph(7, rng, 5, true);
    std::vector<int> order = oracle::identity(7);
    std::shuffle(order.begin(), order.end(), rng);
    const auto td = decomposition_from_elimination(g, order);
    const auto report = validate_decomposition(g, td);
    CHECK(report.valid());
    CHECK(report.width == oracle::elimination_width(g, order));
  }
}

TEST_CASE("nice decompositions") {
  SUBCASE("paths give no join bags") {
    const auto g = test::petersen();
    const auto pd = std::get<PathDecomposition>(pathwidth_exact(g).witness);
    const auto nice = make_nice(pd.as_tree());
    CHECK(count_kind(nice, NiceKind::Join) == 0);
    CHECK(count_kind(nice, NiceKind::Leaf) == 1);
    CHECK(nice_tags_consistent(nice));
    CHECK(validate_decomposition(g, nice.as_tree()).valid());
    CHECK(nice.width() == pd.width());
  }
  SUBCASE("a single bag becomes an introduce chain") {
    const auto k4 = complete(4);
    const TreeDecomposition one{{{0, 1, 2, 3}}, {}};
    const auto nice = make_nice(one);
    CHECK(nice.bags.size() == 5);
    CHECK(count_kind(nice, NiceKind::Introduce) == 4);
    CHECK(nice.bags[nice.root].bag == std::vector<int>{0, 1, 2, 3});
    CHECK(nice_tags_consistent(nice));
    CHECK(validate_decomposition(k4, nice.as_tree()).valid());
  }
  SUBCASE("Petersen tree decomposition") {
    const auto g = test::petersen();
    const auto td = std::get<TreeDecomposition>(treewidth_exact(g).witness);
    const auto nice = make_nice(td);
    CHECK(nice.width() == 4);
    CHECK(nice.bags.size() <= 80);
    CHECK(nice_tags_consistent(nice));
    CHECK(validate_decomposition(g, nice.as_tree()).valid());
    for (const auto& bag : nice.bags)
      if (bag.kind == NiceKind::Join) {
        CHECK(bag.children.size() == 2);
        for (int c : bag.children) CHECK(nice.bags[c].bag == bag.bag);
      }
  }
  SUBCASE("tampered tags are caught") {
    const TreeDecomposition one{{{0, 1, 2}}, {}};
    auto nice = make_nice(one);
    for (auto& bag : nice.bags)
      if (bag.kind == NiceKind::Introduce) {
        bag.vertex = 7;
        break;
      }
    CHECK_FALSE(nice_tags_consistent(nice));
  }
}

TEST_CASE("decomposition text round trip") {
  const auto g = test::petersen();
  const auto td = std::get<TreeDecomposition>(treewidth_exact(g).witness);
  const auto back = parse_tree_decomposition(format_decomposition(td));
  CHECK(back.bags == td.bags);
  CHECK(back.arcs == td.arcs);
  const auto pd = std::get<PathDecomposition>(pathwidth_exact(g).witness);
  const auto as_tree = parse_tree_decomposition(format_decomposition(pd));
  CHECK(as_tree.bags == pd.bags);
  CHECK(validate_decomposition(g, as_tree).valid());
  CHECK_THROWS_AS(parse_tree_decomposition("decomposition tree 2\nbag 0 : 1\n"), Error);
}
