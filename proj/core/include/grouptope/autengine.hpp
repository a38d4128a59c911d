#pragma once

#include <optional>
#include <vector>

#include "grouptope/graph.hpp"
#include "grouptope/permutation.hpp"
#include "grouptope/rational.hpp"

namespace grouptope {

/// Node coloring: a partition of the nodes into numbered classes. Class ids
/// are canonical (derived from refinement signatures only), so compatible
/// graphs produce matching ids.
struct Coloring {
  std::vector<int> color;
  int classes = 0;

  static Coloring uniform(int n) { return {std::vector<int>(n, 0), n > 0 ? 1 : 0}; }
};

/// 1-dimensional Weisfeiler-Leman: refine until any two same-colored nodes
/// have identical multisets of neighbor colors. Never merges classes.
Coloring wl_refine(const Graph& g, const Coloring& initial);

struct AutGroup {
  std::vector<Permutation> generators;
  BigInt order;
};

/// Full automorphism group via individualization-refinement backtracking
/// with orbit pruning. Deterministic: target cell is the smallest
/// non-singleton class (lowest id on ties), branch vertices ascending.
AutGroup automorphism_group(const Graph& g);

/// Adjacency-preserving bijection between two graphs, if any.
std::optional<std::vector<int>> are_isomorphic(const Graph& a, const Graph& b);

}  // namespace grouptope
