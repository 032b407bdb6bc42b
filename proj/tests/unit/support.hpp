#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "widthlab/graph.hpp"
#include "widthlab/triangulation.hpp"

namespace test {

inline std::string data_path(const std::string& name) { return std::string(WIDTHLAB_TEST_DATA) + "/" + name; }

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name));
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline widthlab::Triangulation double_tri() { return widthlab::parse_triangulation(read_data("double.tri")); }

inline widthlab::MultiGraph petersen() { return widthlab::parse_edge_list(read_data("petersen.txt")); }

/// Random closed gluing table: a random face matching and, for each pair,
/// a random corner map sending the faces onto each other.
inline widthlab::Triangulation random_closed(int n, std::mt19937_64& rng, bool odd_only) {
  using widthlab::Perm4;
  std::vector<int> slots(4 * n);
  for (int i = 0; i < 4 * n; ++i) slots[i] = i;
  std::shuffle(slots.begin(), slots.end(), rng);
  widthlab::Triangulation tri(n);
  for (int i = 0; i < 4 * n; i += 2) {
    const int a = slots[i], b = slots[i + 1];
    std::vector<Perm4> maps;
    for (const auto& p : Perm4::all())
      if (p[a % 4] == b % 4 && (!odd_only || p.sign() < 0)) maps.push_back(p);
    const auto& p = maps[std::uniform_int_distribution<std::size_t>(0, maps.size() - 1)(rng)];
    tri.glue(a / 4, a % 4, b / 4, b % 4, p);
  }
  return tri;
}

}  // namespace test

#include "widthlab/census.hpp"

namespace test {

/// The full census up to three tetrahedra, enumerated once per process.
inline const std::vector<widthlab::Triangulation>& census3() {
  static const auto census = widthlab::enumerate_census(3);
  return census;
}

}  // namespace test
