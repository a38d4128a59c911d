#include "grouptope/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "grouptope/autengine.hpp"
#include "grouptope/graph6.hpp"

namespace grouptope {

namespace {

std::string star_status_name(ConditionStarResult::Status s) {
  switch (s) {
    case ConditionStarResult::Status::Holds: return "holds";
    case ConditionStarResult::Status::NoLinks: return "no_links";
    case ConditionStarResult::Status::Violated: return "violated";
  }
  return "?";
}

Json group_section(const GroupSpec& spec, const PermutationGroup& g, const BigInt& order) {
  Json j;
  j["name"] = spec.name();
  j["order"] = order.str();
  j["degree"] = g.degree();
  j["generator_count"] = static_cast<int>(g.generators().size());
  if (auto m = minimum_generator_count(g)) j["min_generators"] = *m;
  return j;
}

Json pass() { return Json{{"status", "pass"}}; }

Json fail(Json witness) {
  Json j{{"status", "fail"}};
  j["witness"] = std::move(witness);
  return j;
}

bool is_pass(const Json& j) { return j.at("status") == "pass"; }

// Small-group path: the point for |G| = 1, the segment [0,1] for |G| = 2.
PipelineResult small_group_result(const GroupSpec& spec, const PermutationGroup& g,
                                  const BigInt& order, const PipelineOptions& opts) {
  PipelineResult r;
  r.polytope = special_case_polytope(g);
  r.skel = skeleton(r.polytope);
  auto aut = automorphism_group(r.skel);
  r.aut_skeleton_generators = aut.generators;

  Json checks;
  // Every vertex permutation of a point or segment maps faces to faces and
  // extends to an isometry (identity or the reflection x -> 1-x).
  checks["property_i"] = aut.order == order
                             ? pass()
                             : fail({{"aut_skeleton", aut.order.str()}, {"group_order", order.str()}});
  checks["property_ii"] = pass();
  checks["property_iii"] = pass();
  int diam = diameter(r.skel);
  checks["property_iv"] = diam <= 2 ? pass() : fail({{"diameter", diam}});
  checks["property_v"] = pass();

  r.report["spec"] = serialize_group_spec(spec);
  r.report["mode"] = opts.mode == PipelineOptions::Mode::Full ? "full" : "basic";
  r.report["seed"] = opts.seed;
  r.report["group"] = group_section(spec, g, order);
  r.report["graph"] = Json();
  r.report["polytope"] = {{"vertex_count", r.polytope.vertex_count()},
                          {"ambient_dimension", r.polytope.ambient_dimension()},
                          {"diameter", diam}};
  r.report["aut_orders"] = {{"aut_graph", order.str()},
                            {"aut_skeleton", aut.order.str()},
                            {"image_F", order.str()}};
  r.report["checks"] = checks;
  r.all_pass = true;
  for (const auto& [k, v] : checks.items())
    if (!is_pass(v)) r.all_pass = false;
  r.report["all_pass"] = r.all_pass;
  return r;
}

}  // namespace

PipelineResult run_pipeline(const GroupSpec& spec, const PipelineOptions& opts) {
  PermutationGroup g = realize_group(spec);
  BigInt order = order_of(g);
  if (order <= 2) return small_group_result(spec, g, order, opts);

  PipelineResult r;
  r.frucht = frucht_graph(g);  // self-certifying; throws on gadget collision
  int group_order = static_cast<int>(order);

  bool complemented = false, augmented = false;
  Graph working = r.frucht->graph;
  if (opts.mode == PipelineOptions::Mode::Full) {
    working = augment(working, opts.augment_variant);
    augmented = true;
  }
  ConditionStarResult star = check_condition_star(working);
  if (opts.mode == PipelineOptions::Mode::Basic &&
      star.status != ConditionStarResult::Status::Holds) {
    working = complement(working);
    complemented = true;
    star = check_condition_star(working);
    if (star.status != ConditionStarResult::Status::Holds)
      throw PipelineError(
          "both the constructed graph and its complement fail Condition [*]; "
          "rerun with --mode full");
  }
  auto exceptional = exceptional_link_pairs(working);
  if (opts.mode == PipelineOptions::Mode::Full) {
    if (star.status != ConditionStarResult::Status::Holds)
      throw PipelineError("augmented graph unexpectedly fails Condition [*]");
    if (!exceptional.empty())
      throw PipelineError("augmented graph unexpectedly has exceptional link pairs");
  }
  r.working_graph = working;

  auto aut_graph = automorphism_group(working);
  r.aut_graph_generators = aut_graph.generators;
  r.polytope = BinaryPolytope::from_graph(working);
  r.skel = skeleton(r.polytope);
  auto aut_skel = automorphism_group(r.skel);
  r.aut_skeleton_generators = aut_skel.generators;

  // Image of F over the whole automorphism group of the working graph.
  PermutationGroup aut_as_group(working.node_count(), aut_graph.generators);
  auto aut_elements = enumerate_elements(aut_as_group);
  std::set<Permutation> image_f;
  std::vector<Permutation> lifted;
  for (const auto& alpha : aut_elements) {
    lifted.push_back(lift_automorphism(r.polytope, alpha));
    image_f.insert(lifted.back());
  }
  BigInt image_f_order(image_f.size());

  Json checks;

  // (i) combinatorial automorphism group isomorphic to G: with no
  // exceptional pairs and [*] holding, that group is Aut(skeleton) = image F.
  {
    bool ok = aut_skel.order == BigInt(group_order) &&
              aut_graph.order == BigInt(group_order) && image_f_order == BigInt(group_order);
    checks["property_i"] =
        ok ? pass()
           : fail({{"group_order", group_order},
                   {"aut_graph", aut_graph.order.str()},
                   {"aut_skeleton", aut_skel.order.str()},
                   {"image_F", image_f_order.str()}});
  }

  // (ii) every combinatorial automorphism is the restriction of an isometry:
  // each F(alpha) acts as the coordinate permutation alpha. Structural check
  // plus a seeded homomorphism spot-check.
  {
    Json witness;
    bool ok = true;
    for (size_t a = 0; a < aut_elements.size() && ok; ++a) {
      const auto& alpha = aut_elements[a];
      const auto& f = lifted[a];
      if (f(0) != 0) {
        ok = false;
        witness = {{"alpha", alpha.to_cycles()}, {"reason", "does not fix the Empty vertex"}};
        break;
      }
      for (int t = 0; t < r.polytope.vertex_count(); ++t) {
        const auto& src = r.polytope.vertex(t);
        const auto& dst = r.polytope.vertex(f(t));
        if (dst.tag.kind != src.tag.kind) {
          ok = false;
          witness = {{"alpha", alpha.to_cycles()}, {"vertex", t}, {"reason", "tag not preserved"}};
          break;
        }
        for (int u = 0; u < working.node_count(); ++u)
          if (dst.coords[alpha(u)] != src.coords[u]) {
            ok = false;
            witness = {{"alpha", alpha.to_cycles()},
                       {"vertex", t},
                       {"reason", "not a coordinate permutation"}};
            break;
          }
        if (!ok) break;
      }
    }
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<size_t> pick(0, aut_elements.size() - 1);
    for (int t = 0; t < 50 && ok; ++t) {
      size_t a = pick(rng), b = pick(rng);
      auto composed = lift_automorphism(r.polytope, aut_elements[a] * aut_elements[b]);
      if (!(composed == lifted[a] * lifted[b])) {
        ok = false;
        witness = {{"alpha", aut_elements[a].to_cycles()},
                   {"beta", aut_elements[b].to_cycles()},
                   {"reason", "F not homomorphic"}};
      }
    }
    checks["property_ii"] = ok ? pass() : fail(witness);
  }

  // (iii) binary and combinatorial.
  auto comb = verify_combinatorial(r.polytope, r.skel);
  {
    Json witness = Json::array();
    for (auto [a, b] : comb.failures) witness.push_back({{"i", a}, {"j", b}});
    checks["property_iii"] = comb.pass ? pass() : fail({{"pairs_without_witness", witness}});
  }

  // (iv) skeleton diameter at most 2.
  int diam = diameter(r.skel);
  checks["property_iv"] = diam <= 2 ? pass() : fail({{"diameter", diam}});

  // (v) every skeleton automorphism is combinatorial: each generator fixes
  // Empty and equals F(alpha) for the alpha read off its action on the
  // Empty-neighborhood.
  if (opts.mode == PipelineOptions::Mode::Basic && !exceptional.empty()) {
    checks["property_v"] = {{"status", "not-applicable"},
                            {"reason", "exceptional link pairs present without augmentation"},
                            {"exceptional_pairs", static_cast<int>(exceptional.size())}};
  } else {
    Json witness;
    bool ok = true;
    int n = working.node_count();
    for (const auto& beta : aut_skel.generators) {
      if (beta(0) != 0) {
        ok = false;
        witness = {{"beta", beta.to_cycles()}, {"reason", "moves the Empty vertex"}};
        break;
      }
      std::vector<int> alpha_im(n, -1);
      bool block_ok = true;
      for (int u = 0; u < n && block_ok; ++u) {
        int t = beta(1 + u);
        if (t < 1 || t > n) block_ok = false;
        else alpha_im[u] = t - 1;
      }
      if (!block_ok) {
        ok = false;
        witness = {{"beta", beta.to_cycles()}, {"reason", "does not stabilize the Singleton block"}};
        break;
      }
      Permutation alpha(alpha_im);
      bool is_aut = true;
      for (auto [u, v] : working.edges())
        if (!working.adjacent(alpha(u), alpha(v))) {
          is_aut = false;
          break;
        }
      if (!is_aut) {
        ok = false;
        witness = {{"beta", beta.to_cycles()},
                   {"reason", "recovered node map is not a graph automorphism"}};
        break;
      }
      if (!(beta == lift_automorphism(r.polytope, alpha))) {
        ok = false;
        witness = {{"beta", beta.to_cycles()},
                   {"alpha", alpha.to_cycles()},
                   {"reason", "skeleton automorphism differs from F(alpha)"}};
        break;
      }
    }
    checks["property_v"] = ok ? pass() : fail(witness);
  }

  r.report["spec"] = serialize_group_spec(spec);
  r.report["mode"] = opts.mode == PipelineOptions::Mode::Full ? "full" : "basic";
  if (augmented)
    r.report["augment_variant"] =
        opts.augment_variant == AugmentVariant::TwoNode ? "two_node" : "one_node";
  r.report["seed"] = opts.seed;
  r.report["group"] = group_section(spec, g, order);
  r.report["graph"] = {{"nodes", working.node_count()},
                       {"links", working.edge_count()},
                       {"frucht_nodes", r.frucht->graph.node_count()},
                       {"frucht_links", r.frucht->graph.edge_count()},
                       {"condition_star", star_status_name(star.status)},
                       {"exceptional_pairs", static_cast<int>(exceptional.size())},
                       {"complemented", complemented},
                       {"augmented", augmented}};
  r.report["polytope"] = {{"vertex_count", r.polytope.vertex_count()},
                          {"ambient_dimension", r.polytope.ambient_dimension()},
                          {"diameter", diam}};
  r.report["aut_orders"] = {{"aut_graph", aut_graph.order.str()},
                            {"aut_skeleton", aut_skel.order.str()},
                            {"image_F", image_f_order.str()}};
  r.report["checks"] = checks;
  r.all_pass = true;
  for (const auto& [k, v] : checks.items())
    if (!is_pass(v)) r.all_pass = false;
  r.report["all_pass"] = r.all_pass;
  return r;
}

void write_pipeline_outputs(const PipelineResult& result, const std::string& out_dir,
                            const PipelineOptions& opts) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  auto write = [&](const std::string& name, const std::string& content) {
    std::ofstream f(fs::path(out_dir) / name, std::ios::binary);
    f << content;
  };

  write("report.json", result.report.dump(2) + "\n");
  if (result.frucht) {
    write("gamma.g6", graph6_encode(result.frucht->graph) + "\n");
    std::string map_text, phi_text;
    for (size_t i = 0; i < result.frucht->node_map.size(); ++i)
      map_text += std::to_string(i) + " " + std::to_string(result.frucht->node_map[i]) + "\n";
    write("node_map.txt", map_text);
    for (const auto& p : result.frucht->phi) phi_text += p.to_cycles() + "\n";
    write("phi_generators.txt", phi_text);
  }
  if (result.working_graph)
    write("gamma_prime.g6", graph6_encode(*result.working_graph) + "\n");
  write("skeleton.g6", graph6_encode(result.skel) + "\n");
  write("polytope_vertices.txt", polytope_vertices_encode(result.polytope));
  write("polytope_tags.txt", polytope_tags_encode(result.polytope));
  std::string f_text;
  for (const auto& gen : result.aut_graph_generators)
    f_text += lift_automorphism(result.polytope, gen).to_cycles() + "\n";
  write("f_generators.txt", f_text);

  if (opts.emit_certificates && result.polytope.has_source_graph()) {
    const Graph& gr = result.polytope.source_graph();
    std::string text;
    auto emit = [&](const char* kind, const FaceCertificate& c) {
      text += kind;
      for (const auto& coef : c.coefficients) {
        text += " ";
        text += coef.str();
      }
      text += " <= " + c.rhs.str() + " tight:";
      for (int t : c.tight_vertex_indices) text += " " + std::to_string(t);
      text += "\n";
    };
    if (gr.edge_count() > 0)
      emit("edge_polytope", face_certificate(result.polytope, FaceKind::EdgePolytope));
    for (auto [u, v] : gr.edges())
      emit("two_face", face_certificate(result.polytope, FaceKind::TwoFace, {u, v}));
    write("certificates.txt", text);
  }
}

Json demo_induced_subgraph(const std::string& g6) {
  Graph g = graph6_decode(g6);
  auto p = BinaryPolytope::from_graph(complement(g));
  auto s = skeleton(p);
  bool ok = neighborhood_complement_iso(p, s);
  Json j;
  j["input_g6"] = g6;
  j["input_nodes"] = g.node_count();
  j["polytope_dimension"] = p.ambient_dimension();
  j["polytope_vertices"] = p.vertex_count();
  j["isomorphic"] = ok;
  Json embedding = Json::array();
  for (int u = 0; u < g.node_count(); ++u)
    embedding.push_back({{"node", u}, {"skeleton_vertex", 1 + u}});
  j["embedding"] = embedding;
  if (!ok) throw PipelineError("induced-neighborhood isomorphism check failed");
  return j;
}

}  // namespace grouptope
