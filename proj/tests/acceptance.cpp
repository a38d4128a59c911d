// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "grouptope/autengine.hpp"
#include "grouptope/graph6.hpp"
#include "grouptope/oracle.hpp"
#include "grouptope/pipeline.hpp"
#include "grouptope/polytope.hpp"
#include "grouptope/sweep.hpp"

using namespace grouptope;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << "criterion " << number << " [" << name << "]: " << (ok ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
}

template <typename Fn>
void criterion(int number, const std::string& name, Fn fn) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1fs", secs);
  detail = detail.empty() ? std::string(buf) : detail + ", " + buf;
  report(number, name, ok, detail);
}

const std::vector<std::string> kFixtureGroups = {
    "cyclic 3",  "cyclic 4",   "cyclic 5", "symmetric 3",
    "dihedral 4", "quaternion8", "klein4",  "product cyclic 2 ; cyclic 4"};

// Criterion-1 artifacts, reused by criteria 7 and 8.
std::map<std::string, PipelineResult> pipeline_runs;

Graph cycle6() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}

// The shared sweep for criteria 2-4: all 1024 labeled 5-node graphs plus 200
// seeded random graphs on 6-7 nodes.
template <typename Fn>
bool for_each_sweep_graph(Fn fn, std::string& detail) {
  for (uint64_t mask = 0; mask < labeled_graph_count(5); ++mask) {
    auto g = labeled_graph_from_mask(5, mask);
    if (!fn(g)) {
      detail = "counterexample " + graph6_encode(g);
      return false;
    }
  }
  for (int n = 6; n <= 7; ++n)
    for (uint64_t t = 0; t < 100; ++t) {
      auto g = random_graph(n, 2024, t);
      if (!fn(g)) {
        detail = "counterexample " + graph6_encode(g);
        return false;
      }
    }
  return true;
}

bool run_fixtures(std::map<std::string, PipelineResult>& out, std::string& detail) {
  for (const auto& text : kFixtureGroups) {
    PipelineOptions opts;
    opts.mode = PipelineOptions::Mode::Full;
    auto r = run_pipeline(parse_group_spec(text), opts);
    if (!r.all_pass) {
      detail = text + ": " + r.report.at("checks").dump();
      return false;
    }
    auto order = r.report.at("group").at("order").get<std::string>();
    if (r.report.at("aut_orders").at("aut_skeleton").get<std::string>() != order) {
      detail = text + ": |Aut(skeleton)| != |G|";
      return false;
    }
    out.emplace(text, std::move(r));
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "full pipeline on the fixture groups", [](std::string& detail) {
    return run_fixtures(pipeline_runs, detail);
  });

  criterion(2, "combinatorial skeleton equals exact-LP adjacency", [](std::string& detail) {
    return for_each_sweep_graph(
        [](const Graph& g) {
          auto p = BinaryPolytope::from_graph(g);
          auto s = skeleton(p);
          for (int i = 0; i < p.vertex_count(); ++i)
            for (int j = i + 1; j < p.vertex_count(); ++j)
              if (s.adjacent(i, j) != lp_adjacent(p, i, j)) return false;
          return true;
        },
        detail);
  });

  criterion(3, "diameter <= 2 and Empty-neighborhood complement isomorphism",
            [](std::string& detail) {
              return for_each_sweep_graph(
                  [](const Graph& g) {
                    auto p = BinaryPolytope::from_graph(g);
                    auto s = skeleton(p);
                    return diameter(s) <= 2 && neighborhood_complement_iso(p, s);
                  },
                  detail);
            });

  criterion(4, "midpoint witness for every nonadjacent vertex pair", [](std::string& detail) {
    return for_each_sweep_graph(
        [](const Graph& g) {
          auto p = BinaryPolytope::from_graph(g);
          return verify_combinatorial(p, skeleton(p)).pass;
        },
        detail);
  });

  criterion(5, "condition-star equivalences on all 6-node graphs", [](std::string& detail) {
    for (uint64_t mask = 0; mask < labeled_graph_count(6); ++mask) {
      auto g = labeled_graph_from_mask(6, mask);
      auto fast = check_condition_star(g);
      auto brute = brute_condition_star(g);
      if (fast.status != brute.status) {
        detail = "status mismatch at " + graph6_encode(g);
        return false;
      }
      auto p = BinaryPolytope::from_graph(g);
      if (fast.status == ConditionStarResult::Status::Violated && g.edge_count() > 0) {
        if (condition_star_T_map(p, fast)(0) == 0) {
          detail = "T fixes Empty at " + graph6_encode(g);
          return false;
        }
      } else if (fast.status == ConditionStarResult::Status::Holds) {
        for (const auto& beta : automorphism_group(skeleton(p)).generators)
          if (beta(0) != 0) {
            detail = "skeleton generator moves Empty at " + graph6_encode(g);
            return false;
          }
      }
    }
    return true;
  });

  criterion(6, "six-cycle exceptional automorphisms and their removal", [](std::string& detail) {
    auto g = cycle6();
    if (automorphism_group(g).order != 12) {
      detail = "|Aut(C6)| != 12";
      return false;
    }
    auto p = BinaryPolytope::from_graph(g);
    auto s = skeleton(p);
    auto aut = automorphism_group(s);
    if (aut.order <= 12) {
      detail = "skeleton group not larger than 12";
      return false;
    }
    auto is_skel_aut = [&](const Permutation& perm) {
      for (int i = 0; i < s.node_count(); ++i)
        for (int j = i + 1; j < s.node_count(); ++j)
          if (s.adjacent(i, j) != s.adjacent(perm(i), perm(j))) return false;
      return true;
    };
    // the three opposite-link transpositions, and the map fixing Empty and
    // every Singleton while sending each link vertex to its opposite
    auto pairs = exceptional_link_pairs(g);
    if (pairs.size() != 3) {
      detail = "expected 3 exceptional pairs";
      return false;
    }
    std::vector<int> rho_im(s.node_count());
    for (int i = 0; i < s.node_count(); ++i) rho_im[i] = i;
    for (const auto& lp : pairs) {
      int a = p.index_of({VertexTag::Kind::Link, lp.e.first, lp.e.second});
      int b = p.index_of({VertexTag::Kind::Link, lp.f.first, lp.f.second});
      std::vector<int> swap_im = rho_im;
      std::swap(swap_im[a], swap_im[b]);
      if (!is_skel_aut(Permutation(swap_im))) {
        detail = "opposite-link swap is not a skeleton automorphism";
        return false;
      }
    }
    for (const auto& lp : pairs) {
      int a = p.index_of({VertexTag::Kind::Link, lp.e.first, lp.e.second});
      int b = p.index_of({VertexTag::Kind::Link, lp.f.first, lp.f.second});
      std::swap(rho_im[a], rho_im[b]);
    }
    Permutation rho(rho_im);
    if (!is_skel_aut(rho)) {
      detail = "rho is not a skeleton automorphism";
      return false;
    }
    for (const auto& alpha : brute_automorphisms(g))
      if (lift_automorphism(p, alpha) == rho) {
        detail = "rho is a lifted graph automorphism";
        return false;
      }
    auto aug = augment(g);
    if (!exceptional_link_pairs(aug).empty()) {
      detail = "augmented six-cycle still has exceptional pairs";
      return false;
    }
    if (automorphism_group(skeleton(BinaryPolytope::from_graph(aug))).order != 12) {
      detail = "augmented skeleton group != 12";
      return false;
    }
    return true;
  });

  criterion(7, "lifted automorphisms are injective coordinate permutations",
            [](std::string& detail) {
              if (pipeline_runs.size() != kFixtureGroups.size()) {
                detail = "criterion 1 did not complete";
                return false;
              }
              for (const auto& [name, r] : pipeline_runs) {
                const auto& checks = r.report.at("checks");
                const auto& orders = r.report.at("aut_orders");
                if (checks.at("property_i").at("status") != "pass" ||
                    checks.at("property_ii").at("status") != "pass" ||
                    orders.at("image_F") != orders.at("aut_graph")) {
                  detail = name;
                  return false;
                }
              }
              return true;
            });

  criterion(8, "byte-identical reports across consecutive runs", [](std::string& detail) {
    if (pipeline_runs.size() != kFixtureGroups.size()) {
      detail = "criterion 1 did not complete";
      return false;
    }
    std::map<std::string, PipelineResult> rerun;
    if (!run_fixtures(rerun, detail)) return false;
    for (const auto& text : kFixtureGroups) {
      PipelineOptions opts;
      namespace fs = std::filesystem;
      auto base = fs::temp_directory_path() / "grouptope_acceptance";
      write_pipeline_outputs(pipeline_runs.at(text), (base / "a").string(), opts);
      write_pipeline_outputs(rerun.at(text), (base / "b").string(), opts);
      std::ifstream fa(base / "a" / "report.json", std::ios::binary);
      std::ifstream fb(base / "b" / "report.json", std::ios::binary);
      std::ostringstream sa, sb;
      sa << fa.rdbuf();
      sb << fb.rdbuf();
      fs::remove_all(base);
      if (sa.str().empty() || sa.str() != sb.str()) {
        detail = text + ": reports differ";
        return false;
      }
    }
    return true;
  });

  if (failures > 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all acceptance criteria passed" << std::endl;
  return 0;
}
