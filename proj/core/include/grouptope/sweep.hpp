#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "grouptope/graph.hpp"

namespace grouptope {

/// All labeled graphs on n nodes are indexed by edge-mask over the
/// lexicographic node pairs.
Graph labeled_graph_from_mask(int n, uint64_t mask);
uint64_t labeled_graph_count(int n);  // 2^C(n,2)

/// Seeded Erdos-Renyi(1/2) graph; deterministic in (n, seed, index).
Graph random_graph(int n, uint64_t seed, uint64_t index);

struct SweepResult {
  std::map<std::string, long long> checked;  // per-invariant counters
  bool ok = true;
  std::string failed_invariant;
  std::string counterexample_g6;

  nlohmann::ordered_json to_json() const;
};

/// Cross-oracle invariant sweep: exhaustive over all labeled graphs on
/// 1..min(max_nodes,6) nodes, `samples` seeded random graphs per size
/// above. Stops at the first disagreement and reports the graph6
/// counterexample. Invariants with exponential oracles apply their own
/// size guards.
SweepResult sweep_graphs(int max_nodes, int samples, uint64_t seed);

}  // namespace grouptope
