#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "../oracles.hpp"
#include "support.hpp"
#include "widthlab/error.hpp"
#include "widthlab/inequalities.hpp"

using namespace widthlab;

TEST_CASE("Petersen satisfies the whole chain") {
  const auto r = verify_chain(test::petersen(), "petersen");
  CHECK(r.graph_id == "petersen");
  CHECK(r.max_degree == 3);
  CHECK(r.tw == 4);
  CHECK(r.pw == 5);
  CHECK(r.cw == 6);
  CHECK(r.cng == 5);
  CHECK(r.all_hold());
}

TEST_CASE("a single arc breaks the lower congestion bound") {
  // tw = cng = 1, so 2 (tw + 1) = 4 exceeds 3 cng = 3.
  const auto r = verify_chain(MultiGraph(2, {{0, 1}}));
  CHECK(r.tw == 1);
  CHECK(r.cng == 1);
  CHECK(r.bodlaender_lhs);
  CHECK(r.bodlaender_rhs);
  CHECK_FALSE(r.bienstock_lhs);
  CHECK(r.bienstock_rhs);
}

TEST_CASE("loops are stripped before solving") {
  const MultiGraph g(3, {{0, 0}, {0, 1}, {1, 2}, {2, 2}, {2, 2}});
  const auto r = verify_chain(g);
  CHECK(r.loops_stripped == 3);
  CHECK(r.max_degree == 2);
  CHECK(r.cw == 1);
  CHECK(r.cng == 2);
}

TEST_CASE("disconnected input is rejected") {
  try {
    verify_chain(MultiGraph(4, {{0, 1}, {2, 3}}));
    FAIL("expected Disconnected");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Disconnected);
  }
}

TEST_CASE("random 4-regular graphs satisfy the chain") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 20; ++i) {
    const auto g = oracle::random_four_regular(4 + i % 5, rng);
    const auto r = verify_chain(g);
    CHECK(r.all_hold());
    CHECK(r.cng >= 4);
    CHECK(r.tw == oracle::treewidth(g));
  }
}

TEST_CASE("directory batches") {
  const auto dir = std::filesystem::temp_directory_path() / "widthlab_ineq_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "b_petersen.txt") << test::read_data("petersen.txt");
  std::ofstream(dir / "a_cycle.txt") << test::read_data("cycle5.txt");
  std::ofstream(dir / "c_broken.txt") << "3 1\n0 9\n";
  const auto rows = verify_directory(dir);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].file == "a_cycle.txt");
  REQUIRE(rows[0].report);
  CHECK(rows[0].report->cw == 2);
  REQUIRE(rows[1].report);
  CHECK(rows[1].report->all_hold());
  CHECK_FALSE(rows[2].report);
  CHECK_FALSE(rows[2].error.empty());
  std::filesystem::remove_all(dir);
  try {
    verify_directory(dir);
    FAIL("expected Io");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Io);
  }
}
