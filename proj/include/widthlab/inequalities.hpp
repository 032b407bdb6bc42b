#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "widthlab/graph.hpp"
#include "widthlab/width.hpp"

namespace widthlab {

struct InequalityReport {
  std::string graph_id;
  int loops_stripped = 0;
  int max_degree = 0;
  int tw = 0;
  int pw = 0;
  int cw = 0;
  int cng = 0;
  bool bodlaender_lhs = false;  // pw <= cw
  bool bodlaender_rhs = false;  // cw <= max_degree * pw
  bool bienstock_lhs = false;   // 2 (tw + 1) <= 3 cng and max_degree <= cng
  bool bienstock_rhs = false;   // cng <= max_degree * (tw + 1)

  bool all_hold() const { return bodlaender_lhs && bodlaender_rhs && bienstock_lhs && bienstock_rhs; }
};

/// Exact values of all four parameters on `g` with its loops removed, and
/// the four comparisons. Throws Disconnected or TooLarge.
InequalityReport verify_chain(const MultiGraph& g, std::string graph_id = {}, const ExactLimits& limits = {});

struct BatchRow {
  std::string file;
  std::optional<InequalityReport> report;
  std::string error;  // set when the file could not be read or evaluated
};

/// One row per regular file in `dir`, sorted by file name. Per-file
/// failures become error rows; an unreadable directory throws Io.
std::vector<BatchRow> verify_directory(const std::filesystem::path& dir, const ExactLimits& limits = {});

}  // namespace widthlab
