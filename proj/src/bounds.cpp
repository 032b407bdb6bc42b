#include "widthlab/bounds.hpp"

#include <sstream>

#include "widthlab/error.hpp"

namespace widthlab {

namespace {

constexpr const char* kUnconditionalLinear = "closed orientable M with triangulation T";
constexpr const char* kUnconditionalGraph = "closed orientable M with triangulation T of at least two tetrahedra";
constexpr const char* kConditional = "closed orientable irreducible non-Haken M (irreducible, non-Haken asserted)";

}  // namespace

std::string_view to_string(Relation r) noexcept { return r == Relation::AtMost ? "<=" : "<"; }

BoundsReport genus_bounds(const WidthSet& widths, const ManifoldFlags& flags) {
  if (!widths.tw && !widths.pw && !widths.cw && !widths.cng)
    throw Error(Errc::MissingWidths, "at least one of tw, pw, cw, cng is required");
  BoundsReport r;
  r.widths = widths;
  r.flags = flags;
  const bool conditional = flags.irreducible && flags.non_haken;
  auto add = [&](std::string quantity, Relation rel, int value, const char* width, const char* formula,
                 const char* hypothesis, bool cond, const WidthValue& from) {
    r.lines.push_back({std::move(quantity), rel, value, width, formula, hypothesis, cond, from.exact});
    return value;
  };
  if (widths.cw) {
    const int k = widths.cw->value;
    r.L_upper = add("L(M)", Relation::AtMost, 6 * k + 7, "cw", "6*cw+7", kUnconditionalLinear, false, *widths.cw);
  }
  if (widths.cng) {
    const int k = widths.cng->value;
    r.graphwidth_upper =
        add("graph(M)", Relation::LessThan, 6 * k, "cng", "6*cng", kUnconditionalGraph, false, *widths.cng);
  }
  if (!conditional) return r;
  if (widths.pw) {
    const int k = widths.pw->value;
    r.genus_from_pw = add("g(M)", Relation::AtMost, 4 * (3 * k + 1), "pw", "4*(3*pw+1)", kConditional, true, *widths.pw);
  }
  if (widths.tw) {
    const int k = widths.tw->value;
    r.genus_from_tw_strict =
        add("g(M)", Relation::LessThan, 24 * (k + 1), "tw", "24*(tw+1)", kConditional, true, *widths.tw);
  }
  if (widths.cw) {
    const int k = widths.cw->value;
    r.genus_from_cw = add("g(M)", Relation::AtMost, 3 * k + 4, "cw", "3*cw+4", kConditional, true, *widths.cw);
  }
  if (widths.cng) {
    const int k = widths.cng->value;
    r.genus_from_cng_strict =
        add("g(M)", Relation::LessThan, 6 * k, "cng", "6*cng", kConditional, true, *widths.cng);
  }
  return r;
}

std::string format_bounds_table(const BoundsReport& report) {
  std::ostringstream out;
  out << "quantity  bound       from  exact  hypothesis\n";
  for (const auto& line : report.lines) {
    std::ostringstream bound;
    bound << to_string(line.relation) << ' ' << line.value;
    out << line.quantity << std::string(10 - std::min<std::size_t>(line.quantity.size(), 9), ' ') << bound.str()
        << std::string(12 - std::min<std::size_t>(bound.str().size(), 11), ' ') << line.width
        << std::string(6 - std::min<std::size_t>(line.width.size(), 5), ' ') << (line.from_exact ? "yes" : "no ")
        << "    " << line.hypothesis << '\n';
  }
  return out.str();
}

}  // namespace widthlab
