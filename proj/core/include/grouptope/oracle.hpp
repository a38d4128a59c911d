#pragma once

#include <iosfwd>
#include <vector>

#include "grouptope/graph.hpp"
#include "grouptope/permutation.hpp"
#include "grouptope/polytope.hpp"
#include "grouptope/rational.hpp"

namespace grouptope {

/// Feasibility-only equality system A x = b, x >= 0, in exact rationals.
struct LpProblem {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
};

/// Phase-1 simplex with Bland's anti-cycling rule. Optional debug stream
/// dumps each tableau as exact fractions.
bool phase1_feasible(const LpProblem& lp, std::ostream* debug = nullptr);

/// Geometric ground truth for vertex adjacency: vertices i, j are adjacent
/// iff their midpoint is not a convex combination of the remaining
/// vertices. The system is scaled by 2 to keep the right-hand side
/// integral.
bool lp_adjacent(const BinaryPolytope& p, int i, int j);

/// Condition [*] by full bipartition enumeration; |V| <= 12.
ConditionStarResult brute_condition_star(const Graph& g);

/// All adjacency-preserving node permutations; |V| <= 8.
std::vector<Permutation> brute_automorphisms(const Graph& g);

}  // namespace grouptope
