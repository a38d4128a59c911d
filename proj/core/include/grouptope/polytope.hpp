#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grouptope/graph.hpp"
#include "grouptope/permgroup.hpp"
#include "grouptope/permutation.hpp"
#include "grouptope/rational.hpp"

namespace grouptope {

struct VertexTag {
  enum class Kind { Empty, Singleton, Link };
  Kind kind = Kind::Empty;
  int u = -1, v = -1;  // node for Singleton; link endpoints (u < v) for Link

  friend bool operator==(const VertexTag&, const VertexTag&) = default;
};

struct PolytopeVertex {
  std::vector<uint8_t> coords;  // characteristic vector of the tag's set
  VertexTag tag;
};

/// Convex hull of the characteristic vectors of the empty set, the
/// singletons, and the links of a graph. Vertex order is fixed: Empty,
/// Singletons by node index, Links lexicographically.
class BinaryPolytope {
 public:
  static BinaryPolytope from_graph(Graph g);
  /// One vertex at the origin of R^1 (the trivial-group polytope).
  static BinaryPolytope point();

  int ambient_dimension() const { return dim_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<PolytopeVertex>& vertices() const { return vertices_; }
  const PolytopeVertex& vertex(int i) const { return vertices_[i]; }
  bool has_source_graph() const { return source_.has_value(); }
  const Graph& source_graph() const;

  /// Index of the vertex with a given tag.
  int index_of(const VertexTag& tag) const;

 private:
  int dim_ = 0;
  std::optional<Graph> source_;
  std::vector<PolytopeVertex> vertices_;
};

using SkeletonGraph = Graph;

/// Skeleton from the combinatorial adjacency rules, no geometry:
/// Empty ~ every Singleton; Singletons ~ iff unlinked nodes; Singleton ~
/// Link iff endpoint or non-neighbor of both endpoints; Links ~ iff they
/// share a node or are disjoint and span no four-cycle.
SkeletonGraph skeleton(const BinaryPolytope& p);

/// Some vertex pair {k,l} != {i,j} with the same coordinate sum, if any.
std::optional<std::pair<int, int>> midpoint_witness(const BinaryPolytope& p, int i, int j);

struct CombinatorialReport {
  bool pass = true;
  std::vector<std::pair<int, int>> failures;  // nonadjacent pairs with no witness
};

/// Checks the Naddef-Pulleyblank property: every nonadjacent vertex pair
/// has a midpoint witness.
CombinatorialReport verify_combinatorial(const BinaryPolytope& p, const SkeletonGraph& s);

/// Exact diameter by all-pairs BFS.
int diameter(const SkeletonGraph& s);

/// True iff u -> Singleton(u) is an isomorphism from the complement of the
/// source graph onto the skeleton-induced graph on the Empty vertex's
/// neighborhood.
bool neighborhood_complement_iso(const BinaryPolytope& p, const SkeletonGraph& s);

/// The vertex permutation F(alpha): Empty fixed, Singleton(u) ->
/// Singleton(alpha(u)), Link({v,w}) -> Link({alpha(v),alpha(w)}). Throws if
/// alpha is not an automorphism of the source graph.
Permutation lift_automorphism(const BinaryPolytope& p, const Permutation& alpha);

/// Vertex permutation induced by the affine map T of a Condition [*]
/// violation witness (x'_{v0} = 1 - sum over C, identity elsewhere). Always
/// moves the Empty vertex.
Permutation condition_star_T_map(const BinaryPolytope& p, const ConditionStarResult& star);

enum class FaceKind { Edge, Mixed, TwoFace, EdgePolytope };

struct FaceCertificate {
  std::vector<Rational> coefficients;
  Rational rhs;
  std::vector<int> tight_vertex_indices;
};

/// Face-defining inequalities from the adjacency proofs, validated in exact
/// rational arithmetic against every polytope vertex:
///   Edge {u,v} (unlinked):  x_u + x_v - 2*sum(rest) <= 1
///   Mixed v,{u,w}:          x_v + x_u/2 + x_w/2 - 2*sum(rest) <= 1
///   TwoFace {v,w} in E:     -sum over V\{v,w} <= 0
///   EdgePolytope:           sum over V <= 2
/// `params` holds the nodes the kind needs (none for EdgePolytope).
FaceCertificate face_certificate(const BinaryPolytope& p, FaceKind kind,
                                 const std::vector<int>& params = {});

/// Point polytope for the trivial group, segment [0,1] for order 2.
BinaryPolytope special_case_polytope(const PermutationGroup& g);

/// Polytope vertex file: "d k" header then k rows of d 0/1 digits.
std::string polytope_vertices_encode(const BinaryPolytope& p);
/// Sidecar tag lines: "E", "S <u>" or "L <u> <v>" per vertex.
std::string polytope_tags_encode(const BinaryPolytope& p);

}  // namespace grouptope
