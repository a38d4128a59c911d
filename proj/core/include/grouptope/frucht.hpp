#pragma once

#include <vector>

#include "grouptope/graph.hpp"
#include "grouptope/permgroup.hpp"
#include "grouptope/permutation.hpp"

namespace grouptope {

/// Cayley color digraph of a group: one node per element, one colored arc
/// x -> x*s per element x and generator s.
struct CayleyColorDigraph {
  std::vector<Permutation> elements;  // breadth-first enumeration, identity first
  struct Arc {
    int source;
    int target;
    int color;
  };
  std::vector<Arc> arcs;
  std::vector<bool> involution;  // per color: s == s^-1

  int color_count() const { return static_cast<int>(involution.size()); }
};

CayleyColorDigraph cayley_color_digraph(const PermutationGroup& g);

/// A simple graph with Aut isomorphic to G, plus the explicit injective
/// homomorphism phi: G -> Aut(graph) extending left multiplication to the
/// gadget nodes.
struct FruchtResult {
  Graph graph;
  std::vector<int> node_map;          // element index -> original-node index
  std::vector<Permutation> phi;       // element index -> graph-node permutation
  std::vector<Permutation> elements;  // same order as phi
};

/// Replace each color-c arc by an asymmetric path gadget: a-x-y-b with
/// pendant paths of length 2c+1 at x and 2c+2 at y; involution arc pairs
/// collapse to a single symmetric gadget a-z-b with one pendant of length
/// 2c+1 at z. Construction is self-certifying: |Aut| is recomputed and must
/// equal |G|, and phi must be an injective homomorphism of automorphisms.
/// Requires |G| >= 3 (smaller groups take the segment/point polytope path).
FruchtResult frucht_graph(const PermutationGroup& g);

/// True iff phi(s) is a graph automorphism for every generator s, phi
/// respects 20 random product pairs, and phi is identity-free off the
/// identity element.
bool verify_action(const FruchtResult& r, const PermutationGroup& g);

}  // namespace grouptope
