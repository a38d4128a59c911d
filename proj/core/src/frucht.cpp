#include "grouptope/frucht.hpp"

#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "grouptope/autengine.hpp"

namespace grouptope {

CayleyColorDigraph cayley_color_digraph(const PermutationGroup& g) {
  CayleyColorDigraph d;
  d.elements = enumerate_elements(g);
  if (d.elements.size() > 1 && g.generators().empty())
    throw std::logic_error("non-trivial group with no generators");
  std::map<Permutation, int> index;
  for (size_t i = 0; i < d.elements.size(); ++i) index.emplace(d.elements[i], static_cast<int>(i));
  for (size_t c = 0; c < g.generators().size(); ++c) {
    const auto& s = g.generators()[c];
    d.involution.push_back(!s.is_identity() && (s * s).is_identity());
    for (size_t x = 0; x < d.elements.size(); ++x)
      d.arcs.push_back({static_cast<int>(x), index.at(d.elements[x] * s), static_cast<int>(c)});
  }
  return d;
}

namespace {

struct GadgetKey {
  int color;
  int anchor;  // source element for directed arcs, min element for involution pairs
  auto operator<=>(const GadgetKey&) const = default;
};

struct Builder {
  int next_node;
  std::vector<NodePair> edges;
  std::vector<NodeLabel> labels;

  int fresh(NodeLabel label) {
    labels.push_back(label);
    return next_node++;
  }

  // Chain of `length` edges hanging off `at`; returns the new nodes in order.
  std::vector<int> pendant(int at, int length) {
    std::vector<int> nodes;
    int prev = at;
    for (int i = 0; i < length; ++i) {
      int p = fresh(NodeLabel::Pendant);
      edges.emplace_back(prev, p);
      nodes.push_back(p);
      prev = p;
    }
    return nodes;
  }
};

}  // namespace

FruchtResult frucht_graph(const PermutationGroup& g) {
  auto elements = enumerate_elements(g);
  int n = static_cast<int>(elements.size());
  if (n < 3)
    throw std::invalid_argument("frucht_graph needs |G| >= 3; smaller groups use the special-case polytope");

  std::map<Permutation, int> index;
  for (int i = 0; i < n; ++i) index.emplace(elements[i], i);

  // Identity generators carry no structure; skip them.
  std::vector<Permutation> gens;
  for (const auto& s : g.generators())
    if (!s.is_identity()) gens.push_back(s);

  Builder b{n, {}, std::vector<NodeLabel>(n, NodeLabel::Original)};
  std::map<GadgetKey, std::vector<int>> gadget;

  // Pendant-path lengths must be pairwise distinct per (color, role): the
  // x/y roles of color c use 2c+1 and 2c+2, odd and even respectively, and
  // both are injective in c. Asserted below anyway.
  std::set<int> nondirected_lengths, directed_x, directed_y;
  for (int c = 0; c < static_cast<int>(gens.size()); ++c) {
    const auto& s = gens[c];
    bool inv = (s * s).is_identity();
    int len_x = 2 * c + 1, len_y = 2 * c + 2;
    if (inv) {
      if (!nondirected_lengths.insert(len_x).second || directed_x.count(len_x))
        throw std::logic_error("pendant length collision");
      for (int a = 0; a < n; ++a) {
        int t = index.at(elements[a] * s);
        if (a >= t) continue;
        int z = b.fresh(NodeLabel::Gadget);
        b.edges.emplace_back(a, z);
        b.edges.emplace_back(z, t);
        auto chain = b.pendant(z, len_x);
        std::vector<int> nodes{z};
        nodes.insert(nodes.end(), chain.begin(), chain.end());
        gadget.emplace(GadgetKey{c, a}, std::move(nodes));
      }
    } else {
      if (!directed_x.insert(len_x).second || !directed_y.insert(len_y).second ||
          nondirected_lengths.count(len_x))
        throw std::logic_error("pendant length collision");
      for (int a = 0; a < n; ++a) {
        int t = index.at(elements[a] * s);
        int x = b.fresh(NodeLabel::Gadget);
        int y = b.fresh(NodeLabel::Gadget);
        b.edges.emplace_back(a, x);
        b.edges.emplace_back(x, y);
        b.edges.emplace_back(y, t);
        auto px = b.pendant(x, len_x);
        auto py = b.pendant(y, len_y);
        std::vector<int> nodes{x, y};
        nodes.insert(nodes.end(), px.begin(), px.end());
        nodes.insert(nodes.end(), py.begin(), py.end());
        gadget.emplace(GadgetKey{c, a}, std::move(nodes));
      }
    }
  }

  FruchtResult result{Graph(b.next_node, std::move(b.edges), std::move(b.labels)), {}, {}, elements};
  result.node_map.resize(n);
  for (int i = 0; i < n; ++i) result.node_map[i] = i;

  // phi(g): left multiplication on element nodes, transported role-wise
  // along the arc image on gadget nodes.
  for (int gi = 0; gi < n; ++gi) {
    std::vector<int> im(b.next_node);
    for (int x = 0; x < n; ++x) im[x] = index.at(elements[gi] * elements[x]);
    for (int c = 0; c < static_cast<int>(gens.size()); ++c) {
      bool inv = (gens[c] * gens[c]).is_identity();
      for (const auto& [key, nodes] : gadget) {
        if (key.color != c) continue;
        int src_image = im[key.anchor];
        GadgetKey target_key{c, src_image};
        if (inv) {
          int partner = index.at(elements[key.anchor] * gens[c]);
          target_key.anchor = std::min(src_image, im[partner]);
        }
        const auto& tnodes = gadget.at(target_key);
        for (size_t k = 0; k < nodes.size(); ++k) im[nodes[k]] = tnodes[k];
      }
    }
    result.phi.emplace_back(std::move(im));
  }

  auto aut = automorphism_group(result.graph);
  if (aut.order != BigInt(n)) {
    std::ostringstream msg;
    msg << "frucht_graph self-check failed: |Aut| = " << aut.order << " but |G| = " << n
        << " (gadget collision)";
    throw std::runtime_error(msg.str());
  }
  if (!verify_action(result, g))
    throw std::runtime_error("frucht_graph self-check failed: phi is not a faithful action");
  return result;
}

bool verify_action(const FruchtResult& r, const PermutationGroup& g) {
  int n = static_cast<int>(r.elements.size());
  std::map<Permutation, int> index;
  for (int i = 0; i < n; ++i) index.emplace(r.elements[i], i);

  auto is_automorphism = [&](const Permutation& p) {
    for (auto [u, v] : r.graph.edges())
      if (!r.graph.adjacent(p(u), p(v))) return false;
    return true;
  };

  for (const auto& s : g.generators()) {
    auto it = index.find(s);
    if (it == index.end()) return false;
    if (!is_automorphism(r.phi[it->second])) return false;
  }
  for (int i = 0; i < n; ++i) {
    bool ident = r.elements[i].is_identity();
    if (r.phi[i].is_identity() != ident) return false;
  }
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int t = 0; t < 20; ++t) {
    int i = pick(rng), j = pick(rng);
    int ij = index.at(r.elements[i] * r.elements[j]);
    if (!(r.phi[i] * r.phi[j] == r.phi[ij])) return false;
  }
  return true;
}

}  // namespace grouptope
