#include "grouptope/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grouptope {

Graph::Graph(int node_count, std::vector<NodePair> edges, std::vector<NodeLabel> labels)
    : n_(node_count), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n_ < 0) throw std::invalid_argument("negative node count");
  if (labels_.empty()) labels_.assign(n_, NodeLabel::Original);
  if (static_cast<int>(labels_.size()) != n_)
    throw std::invalid_argument("label count does not match node count");
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("loop edge");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adj_.assign(static_cast<size_t>(n_) * n_, 0);
  nbrs_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[static_cast<size_t>(u) * n_ + v] = adj_[static_cast<size_t>(v) * n_ + u] = 1;
    nbrs_[u].push_back(v);
    nbrs_[v].push_back(u);
  }
  for (auto& nb : nbrs_) std::sort(nb.begin(), nb.end());
}

Graph complement(const Graph& g) {
  int n = g.node_count();
  std::vector<NodePair> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges), g.labels());
}

bool is_stable_set(const Graph& g, const std::vector<int>& s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

ConditionStarResult check_condition_star(const Graph& g) {
  if (g.edge_count() == 0) return {ConditionStarResult::Status::NoLinks};
  int n = g.node_count();
  for (int v0 = 0; v0 < n; ++v0) {
    // D must equal N(v0): C stable forces N(v0) into D, and "v0 linked to
    // all of D" forces D into N(v0).
    const auto& d = g.neighbors(v0);
    if (d.empty()) continue;
    if (!is_stable_set(g, d)) continue;
    std::vector<int> c;
    c.reserve(n - d.size());
    for (int u = 0; u < n; ++u)
      if (!g.adjacent(v0, u)) c.push_back(u);  // includes v0
    if (!is_stable_set(g, c)) continue;
    ConditionStarResult r{ConditionStarResult::Status::Violated};
    r.v0 = v0;
    r.c_side = std::move(c);
    r.d_side = d;
    return r;
  }
  return {ConditionStarResult::Status::Holds};
}

std::vector<int> link_neighborhood(const Graph& g, NodePair e) {
  auto [u, w] = e;
  if (u > w) std::swap(u, w);
  if (!g.adjacent(u, w)) throw std::invalid_argument("link_neighborhood: not a link");
  std::vector<int> out;
  for (int v = 0; v < g.node_count(); ++v) {
    if (v == u || v == w) continue;
    if (g.adjacent(v, u) || g.adjacent(v, w)) out.push_back(v);
  }
  return out;
}

std::vector<LinkPair> exceptional_link_pairs(const Graph& g) {
  const auto& edges = g.edges();
  std::vector<std::vector<int>> nbhd(edges.size());
  for (size_t i = 0; i < edges.size(); ++i) nbhd[i] = link_neighborhood(g, edges[i]);
  std::vector<LinkPair> out;
  for (size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    for (size_t j = i + 1; j < edges.size(); ++j) {
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, c) || g.adjacent(b, d))
        continue;
      if (nbhd[i] == nbhd[j]) out.push_back({edges[i], edges[j]});
    }
  }
  return out;
}

Graph augment(const Graph& g, AugmentVariant variant) {
  int n = g.node_count();
  if (variant == AugmentVariant::OneNode) {
    // Reject linked true twins: one pendant node per twin would leave an
    // automorphism-relevant symmetry the construction cannot break.
    for (auto [u, v] : g.edges()) {
      std::vector<int> nu, nv;
      for (int x : g.neighbors(u))
        if (x != v) nu.push_back(x);
      for (int x : g.neighbors(v))
        if (x != u) nv.push_back(x);
      if (nu == nv)
        throw std::invalid_argument(
            "one_node augmentation requires every pair of nodes with identical "
            "neighborhoods to be unlinked");
    }
  }
  int per_node = variant == AugmentVariant::TwoNode ? 2 : 1;
  std::vector<NodePair> edges = g.edges();
  std::vector<NodeLabel> labels = g.labels();
  labels.resize(n + per_node * n, NodeLabel::Pendant);
  for (int v = 0; v < n; ++v) {
    int v1 = n + per_node * v;
    edges.emplace_back(v, v1);
    if (per_node == 2) edges.emplace_back(v1, v1 + 1);
  }
  return Graph(n + per_node * n, std::move(edges), std::move(labels));
}

std::string adjacency_list_encode(const Graph& g) {
  std::ostringstream out;
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph adjacency_list_decode(const std::string& text) {
  std::istringstream in(text);
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("bad adjacency-list header");
  std::vector<NodePair> edges;
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("truncated adjacency list");
    edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

}  // namespace grouptope
