#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "grouptope/frucht.hpp"
#include "grouptope/graph.hpp"
#include "grouptope/permgroup.hpp"
#include "grouptope/polytope.hpp"

namespace grouptope {

using Json = nlohmann::ordered_json;

struct PipelineOptions {
  enum class Mode { Basic, Full };
  Mode mode = Mode::Full;
  AugmentVariant augment_variant = AugmentVariant::TwoNode;
  uint64_t seed = 0;
  bool emit_certificates = false;
};

/// Construction-stage failure (as opposed to a property check failing,
/// which is reported in the result).
struct PipelineError : std::runtime_error {
  explicit PipelineError(const std::string& what) : std::runtime_error(what) {}
};

struct PipelineResult {
  Json report;
  bool all_pass = false;
  // Artifacts for file emission; absent on the small-group path.
  std::optional<FruchtResult> frucht;
  std::optional<Graph> working_graph;
  BinaryPolytope polytope;
  SkeletonGraph skel;
  std::vector<Permutation> aut_skeleton_generators;
  std::vector<Permutation> aut_graph_generators;
};

/// Group in, certified polytope plus verification report for the five
/// properties out. |G| <= 2 takes the point/segment path. Basic mode swaps
/// in the complement when Condition [*] fails (error if both sides fail);
/// full mode augments and asserts [*] plus the absence of exceptional link
/// pairs before checking.
PipelineResult run_pipeline(const GroupSpec& spec, const PipelineOptions& opts);

/// Writes report.json, graph6 files, the polytope vertex/tag files, phi and
/// F generators, and (optionally) face certificates under out_dir.
void write_pipeline_outputs(const PipelineResult& result, const std::string& out_dir,
                            const PipelineOptions& opts);

/// Embeds the graph into the skeleton of P(complement): the induced graph
/// on the Empty vertex's neighborhood is the input graph itself.
Json demo_induced_subgraph(const std::string& g6);

}  // namespace grouptope
