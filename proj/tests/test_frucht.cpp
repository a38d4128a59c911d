#include <doctest.h>

#include <set>

#include "grouptope/autengine.hpp"
#include "grouptope/frucht.hpp"
#include "grouptope/oracle.hpp"

using namespace grouptope;

TEST_CASE("cayley_color_digraph") {
  auto trivial = cayley_color_digraph(PermutationGroup(1, {}));
  CHECK(trivial.elements.size() == 1);
  CHECK(trivial.arcs.empty());

  auto c3 = cayley_color_digraph(realize_group(parse_group_spec("cyclic 3")));
  CHECK(c3.elements.size() == 3);
  CHECK(c3.color_count() == 1);
  CHECK_FALSE(c3.involution[0]);
  REQUIRE(c3.arcs.size() == 3);  // a directed triangle
  std::set<int> sources, targets;
  for (const auto& a : c3.arcs) {
    sources.insert(a.source);
    targets.insert(a.target);
    CHECK(a.source != a.target);
  }
  CHECK(sources.size() == 3);
  CHECK(targets.size() == 3);

  auto k4 = cayley_color_digraph(realize_group(parse_group_spec("klein4")));
  CHECK(k4.elements.size() == 4);
  CHECK(k4.color_count() == 2);
  CHECK(k4.involution[0]);
  CHECK(k4.involution[1]);
  CHECK(k4.arcs.size() == 8);  // two perfect matchings, both arcs kept per pair
}

TEST_CASE("frucht_graph realizes the group as the full automorphism group") {
  for (const char* spec : {"cyclic 3", "cyclic 4", "cyclic 5", "symmetric 3", "dihedral 4",
                           "klein4", "quaternion8"}) {
    CAPTURE(spec);
    auto g = realize_group(parse_group_spec(spec));
    auto r = frucht_graph(g);
    CHECK(automorphism_group(r.graph).order == order_of(g));
    CHECK(verify_action(r, g));
    CHECK(r.phi.size() == r.elements.size());
    // node_map is injective into the original nodes
    std::set<int> mapped(r.node_map.begin(), r.node_map.end());
    CHECK(mapped.size() == r.node_map.size());
    for (int v : r.node_map) CHECK(r.graph.labels()[v] == NodeLabel::Original);
  }
}

TEST_CASE("phi matches the left multiplication action on element nodes") {
  auto g = realize_group(parse_group_spec("symmetric 3"));
  auto r = frucht_graph(g);
  for (size_t i = 0; i < r.elements.size(); ++i)
    for (size_t j = 0; j < r.elements.size(); ++j) {
      auto product = r.elements[i] * r.elements[j];
      size_t k = 0;
      while (!(r.elements[k] == product)) ++k;
      CHECK(r.phi[i](r.node_map[j]) == r.node_map[k]);
    }
}

TEST_CASE("verify_action rejects a corrupted phi") {
  auto g = realize_group(parse_group_spec("cyclic 3"));
  auto r = frucht_graph(g);
  auto bad = r;
  bad.phi[1] = Permutation::identity(r.graph.node_count());
  CHECK_FALSE(verify_action(bad, g));
}

TEST_CASE("small groups are rejected") {
  CHECK_THROWS_AS(frucht_graph(PermutationGroup(1, {})), std::invalid_argument);
  CHECK_THROWS_AS(frucht_graph(realize_group(parse_group_spec("cyclic 2"))),
                  std::invalid_argument);
}
