#include "grouptope/sweep.hpp"

#include <random>

#include "grouptope/autengine.hpp"
#include "grouptope/graph6.hpp"
#include "grouptope/oracle.hpp"
#include "grouptope/polytope.hpp"

namespace grouptope {

Graph labeled_graph_from_mask(int n, uint64_t mask) {
  std::vector<NodePair> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

uint64_t labeled_graph_count(int n) { return uint64_t(1) << (n * (n - 1) / 2); }

Graph random_graph(int n, uint64_t seed, uint64_t index) {
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)) ^ (uint64_t(n) << 32));
  uint64_t bits = n * (n - 1) / 2;
  uint64_t mask = 0;
  for (uint64_t b = 0; b < bits; ++b)
    if (rng() & 1) mask |= uint64_t(1) << b;
  return labeled_graph_from_mask(n, mask);
}

nlohmann::ordered_json SweepResult::to_json() const {
  nlohmann::ordered_json j;
  j["ok"] = ok;
  nlohmann::ordered_json counts;
  for (const auto& [k, v] : checked) counts[k] = v;
  j["checked"] = counts;
  if (!ok) {
    j["failed_invariant"] = failed_invariant;
    j["counterexample_g6"] = counterexample_g6;
  }
  return j;
}

namespace {

struct Runner {
  SweepResult& result;
  const Graph& g;

  bool run(const std::string& name, bool condition, bool (*check)(const Graph&)) {
    if (!condition || !result.ok) return result.ok;
    if (!check(g)) {
      result.ok = false;
      result.failed_invariant = name;
      result.counterexample_g6 = graph6_encode(g);
      return false;
    }
    ++result.checked[name];
    return true;
  }
};

bool check_condition_star_agrees(const Graph& g) {
  auto fast = check_condition_star(g);
  auto brute = brute_condition_star(g);
  if (fast.status != brute.status) return false;
  if (fast.status == ConditionStarResult::Status::Violated) {
    // witness must be valid: stable bipartition with D = N(v0)
    if (!is_stable_set(g, fast.c_side) || !is_stable_set(g, fast.d_side)) return false;
    if (fast.d_side != g.neighbors(fast.v0)) return false;
  }
  return true;
}

bool check_skeleton_vs_lp(const Graph& g) {
  auto p = BinaryPolytope::from_graph(g);
  auto s = skeleton(p);
  for (int i = 0; i < p.vertex_count(); ++i)
    for (int j = i + 1; j < p.vertex_count(); ++j)
      if (s.adjacent(i, j) != lp_adjacent(p, i, j)) return false;
  return true;
}

bool check_skeleton_properties(const Graph& g) {
  auto p = BinaryPolytope::from_graph(g);
  auto s = skeleton(p);
  if (diameter(s) > 2) return false;
  if (!neighborhood_complement_iso(p, s)) return false;
  return verify_combinatorial(p, s).pass;
}

bool check_aut_vs_brute(const Graph& g) {
  return automorphism_group(g).order == BigInt(brute_automorphisms(g).size());
}

bool check_complement_aut(const Graph& g) {
  return automorphism_group(g).order == automorphism_group(complement(g)).order;
}

// The augmentation claims hold for graphs with no isolated node: a pendant
// 2-path on an isolated node is a bare P3, which both violates the stability
// condition and gains a flip automorphism.
bool has_isolated_node(const Graph& g) {
  for (int v = 0; v < g.node_count(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

bool check_augment_invariants(const Graph& g) {
  auto a = augment(g, AugmentVariant::TwoNode);
  if (check_condition_star(a).status != ConditionStarResult::Status::Holds) return false;
  return exceptional_link_pairs(a).empty();
}

bool check_augment_preserves_aut(const Graph& g) {
  auto a = augment(g, AugmentVariant::TwoNode);
  return automorphism_group(a).order == automorphism_group(g).order;
}

bool check_star_empty_vertex(const Graph& g) {
  auto star = check_condition_star(g);
  auto p = BinaryPolytope::from_graph(g);
  auto s = skeleton(p);
  if (star.status == ConditionStarResult::Status::Violated) {
    // constructive (a)-failure: T moves the Empty vertex
    auto t = condition_star_T_map(p, star);
    return t(0) != 0;
  }
  if (star.status == ConditionStarResult::Status::Holds) {
    for (const auto& beta : automorphism_group(s).generators)
      if (beta(0) != 0) return false;
  }
  return true;
}

}  // namespace

SweepResult sweep_graphs(int max_nodes, int samples, uint64_t seed) {
  SweepResult result;
  auto visit = [&](const Graph& g, bool sampled) {
    int n = g.node_count();
    Runner r{result, g};
    r.run("condition_star_vs_brute", n <= 12, check_condition_star_agrees);
    r.run("skeleton_vs_lp", n <= 5 || sampled, check_skeleton_vs_lp);
    r.run("diameter_neighborhood_combinatorial", true, check_skeleton_properties);
    r.run("aut_engine_vs_brute", n <= 7, check_aut_vs_brute);
    r.run("complement_preserves_aut", n <= 6, check_complement_aut);
    bool isolated = has_isolated_node(g);
    r.run("augment_star_and_exceptional", n <= 6 && !isolated, check_augment_invariants);
    r.run("augment_preserves_aut", n <= 5 && !isolated, check_augment_preserves_aut);
    r.run("condition_star_empty_vertex", n <= 7, check_star_empty_vertex);
    return result.ok;
  };

  for (int n = 1; n <= std::min(max_nodes, 6); ++n)
    for (uint64_t mask = 0; mask < labeled_graph_count(n); ++mask)
      if (!visit(labeled_graph_from_mask(n, mask), false)) return result;
  for (int n = 7; n <= max_nodes; ++n)
    for (int i = 0; i < samples; ++i)
      if (!visit(random_graph(n, seed, i), true)) return result;
  return result;
}

}  // namespace grouptope
