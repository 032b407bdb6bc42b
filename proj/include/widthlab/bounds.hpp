#pragma once

#include <optional>
#include <string>
#include <vector>

namespace widthlab {

struct ManifoldFlags {
  bool closed = false;       // computed
  bool orientable = false;   // computed
  bool irreducible = false;  // asserted by the caller
  bool non_haken = false;    // asserted by the caller
};

struct WidthValue {
  int value = 0;
  bool exact = false;
};

struct WidthSet {
  std::optional<WidthValue> tw;
  std::optional<WidthValue> pw;
  std::optional<WidthValue> cw;
  std::optional<WidthValue> cng;
};

enum class Relation { AtMost, LessThan };

struct BoundLine {
  std::string quantity;  // "L(M)", "graph(M)" or "g(M)"
  Relation relation = Relation::AtMost;
  int value = 0;
  std::string width;    // parameter the bound is computed from
  std::string formula;  // e.g. "6*cw+7"
  std::string hypothesis;
  bool conditional = false;
  bool from_exact = false;
};

struct BoundsReport {
  WidthSet widths;
  ManifoldFlags flags;
  std::optional<int> L_upper;                // L(M) <= 6 cw + 7
  std::optional<int> graphwidth_upper;       // graph width < 6 cng
  std::optional<int> genus_from_pw;          // g(M) <= 4 (3 pw + 1)
  std::optional<int> genus_from_tw_strict;   // g(M) < 24 (tw + 1)
  std::optional<int> genus_from_cw;          // g(M) <= 3 cw + 4
  std::optional<int> genus_from_cng_strict;  // g(M) < 6 cng
  std::vector<BoundLine> lines;
};

/// Throws MissingWidths when no width is given. Bounds on g(M) appear only
/// when both irreducible and non_haken are asserted.
BoundsReport genus_bounds(const WidthSet& widths, const ManifoldFlags& flags);

std::string_view to_string(Relation r) noexcept;  // "<=" or "<"

/// Fixed-width table, one row per bound line.
std::string format_bounds_table(const BoundsReport& report);

}  // namespace widthlab
