#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "widthlab/graph.hpp"

namespace widthlab {

enum class Param { Treewidth, Pathwidth, Cutwidth, Congestion };

std::string_view to_string(Param p) noexcept;  // "tw", "pw", "cw", "cng"
Param parse_param(std::string_view name);

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;  // sorted guest nodes
  std::vector<Arc> arcs;               // tree arcs between bag indices

  int width() const;
};

/// A path decomposition; bag i is adjacent to bag i+1.
struct PathDecomposition {
  std::vector<std::vector<int>> bags;

  int width() const;
  TreeDecomposition as_tree() const;
};

enum class NiceKind { Leaf, Introduce, Forget, Join };

std::string_view to_string(NiceKind k) noexcept;

struct NiceBag {
  NiceKind kind = NiceKind::Leaf;
  std::vector<int> bag;
  std::vector<int> children;
  int vertex = -1;  // introduced or forgotten node
};

struct NiceTreeDecomposition {
  std::vector<NiceBag> bags;
  int root = 0;

  int width() const;
  TreeDecomposition as_tree() const;
};

using Witness = std::variant<TreeDecomposition, PathDecomposition, LinearLayout, HostTree>;

struct WidthReport {
  Param kind = Param::Treewidth;
  int value = 0;
  bool exact = false;
  Witness witness;
};

/// Largest graphs handed to the exponential solvers.
struct ExactLimits {
  int treewidth = 16;
  int pathwidth = 16;
  int cutwidth = 20;
  int congestion = 12;

  int for_param(Param p) const;
};

WidthReport treewidth_exact(const MultiGraph& g, const ExactLimits& limits = {});
WidthReport pathwidth_exact(const MultiGraph& g, const ExactLimits& limits = {});
WidthReport cutwidth_exact(const MultiGraph& g, const ExactLimits& limits = {});
WidthReport congestion_exact(const MultiGraph& g, const ExactLimits& limits = {});
WidthReport width_exact(const MultiGraph& g, Param kind, const ExactLimits& limits = {});

/// Tree decomposition from an elimination ordering: each node's bag is the
/// node plus its neighbourhood at elimination time, hung below the bag of
/// the earliest-eliminated member of that neighbourhood.
TreeDecomposition decomposition_from_elimination(const MultiGraph& g, const std::vector<int>& order);

/// Deterministic for a given seed; the witness always validates.
WidthReport heuristic_upper(const MultiGraph& g, Param kind, std::uint64_t seed);

/// Recomputes the width a witness realizes on `g`; throws when it is not a
/// valid witness of the report's kind.
int witness_value(const MultiGraph& g, const WidthReport& report);

enum class DecompositionViolation { NotATree, BadBagEntry, NodeUncovered, BagsDisconnected, ArcUncovered };

std::string_view to_string(DecompositionViolation v) noexcept;

struct DecompositionProblem {
  DecompositionViolation kind;
  int node = -1;  // offending guest node, if any
  Arc arc{-1, -1};
};

struct DecompositionReport {
  int width = -1;
  std::vector<DecompositionProblem> problems;

  bool valid() const { return problems.empty(); }
};

DecompositionReport validate_decomposition(const MultiGraph& g, const TreeDecomposition& d);
DecompositionReport validate_decomposition(const MultiGraph& g, const PathDecomposition& d);

/// Nice decomposition with empty leaf bags, rooted at a bag of degree <= 1
/// of the reduced input, so path inputs give no join bags.
NiceTreeDecomposition make_nice(const TreeDecomposition& d);

/// Checks the introduce/forget/join tags against the bags.
bool nice_tags_consistent(const NiceTreeDecomposition& d);

/// Text formats: `decomposition tree|path B` header, `bag i : nodes` lines,
/// `arc a b` lines; nice decompositions use `nice B root R` and
/// `bag i kind [vertex] : nodes`.
std::string format_decomposition(const TreeDecomposition& d);
std::string format_decomposition(const PathDecomposition& d);
std::string format_decomposition(const NiceTreeDecomposition& d);
TreeDecomposition parse_tree_decomposition(std::string_view text);

}  // namespace widthlab
