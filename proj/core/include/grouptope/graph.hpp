#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace grouptope {

enum class NodeLabel : uint8_t { Original, Gadget, Pendant };

using NodePair = std::pair<int, int>;  // stored with first < second

/// Simple undirected graph with per-node provenance labels.
class Graph {
 public:
  Graph() = default;
  Graph(int node_count, std::vector<NodePair> edges,
        std::vector<NodeLabel> labels = {});

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v] != 0; }
  const std::vector<int>& neighbors(int u) const { return nbrs_[u]; }
  int degree(int u) const { return static_cast<int>(nbrs_[u].size()); }
  /// Lexicographically sorted, u < v in each pair.
  const std::vector<NodePair>& edges() const { return edges_; }
  const std::vector<NodeLabel>& labels() const { return labels_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }

 private:
  int n_ = 0;
  std::vector<NodePair> edges_;
  std::vector<uint8_t> adj_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<NodeLabel> labels_;
};

Graph complement(const Graph& g);

bool is_stable_set(const Graph& g, const std::vector<int>& s);

struct ConditionStarResult {
  enum class Status { Holds, NoLinks, Violated };
  Status status;
  // Present when violated: bipartition C, D into stable sets with v0 in C
  // adjacent to all of D.
  int v0 = -1;
  std::vector<int> c_side;
  std::vector<int> d_side;
};

/// Polynomial check: a violating bipartition exists iff for some v0 both
/// N(v0) and V \ N(v0) are stable, in which case D = N(v0) exactly.
ConditionStarResult check_condition_star(const Graph& g);

/// Nodes outside e adjacent to at least one endpoint of e.
std::vector<int> link_neighborhood(const Graph& g, NodePair e);

struct LinkPair {
  NodePair e;
  NodePair f;
  friend bool operator==(const LinkPair&, const LinkPair&) = default;
};

/// All unordered pairs of disjoint links with no link between them and
/// identical link neighborhoods; the source of skeleton automorphisms that
/// are not combinatorial.
std::vector<LinkPair> exceptional_link_pairs(const Graph& g);

enum class AugmentVariant { TwoNode, OneNode };

/// Attach a pendant path (length 2 or 1) to every node. New nodes carry the
/// Pendant label. The one-node variant requires that no linked pair of nodes
/// has identical closed neighborhoods.
Graph augment(const Graph& g, AugmentVariant variant = AugmentVariant::TwoNode);

/// Adjacency-list text format: "n m" header then one "u v" line per link.
std::string adjacency_list_encode(const Graph& g);
Graph adjacency_list_decode(const std::string& text);

}  // namespace grouptope
