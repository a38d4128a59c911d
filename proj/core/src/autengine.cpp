#include "grouptope/autengine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace grouptope {

namespace {

// Signature-sorted refinement step; returns false once stable.
bool refine_round(const Graph& g, Coloring& c) {
  int n = g.node_count();
  std::vector<std::vector<int>> sig(n);
  std::vector<int> bucket(c.classes, 0);
  for (int v = 0; v < n; ++v) {
    for (int u : g.neighbors(v)) ++bucket[c.color[u]];
    auto& s = sig[v];
    s.push_back(c.color[v]);
    for (int u : g.neighbors(v)) {
      int col = c.color[u];
      if (bucket[col] > 0) {
        s.push_back(col);
        s.push_back(bucket[col]);
        bucket[col] = 0;
      }
    }
    // neighbor entries must be in deterministic order
    // (pairs were appended in first-seen order; sort them)
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 1; i + 1 < s.size(); i += 2) pairs.emplace_back(s[i], s[i + 1]);
    std::sort(pairs.begin(), pairs.end());
    s.resize(1);
    for (auto [col, cnt] : pairs) {
      s.push_back(col);
      s.push_back(cnt);
    }
  }
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return sig[a] < sig[b]; });
  Coloring next;
  next.color.assign(n, 0);
  int cls = -1;
  const std::vector<int>* prev = nullptr;
  for (int v : order) {
    if (!prev || sig[v] != *prev) {
      ++cls;
      prev = &sig[v];
    }
    next.color[v] = cls;
  }
  next.classes = cls + 1;
  bool changed = next.classes != c.classes;
  c = std::move(next);
  return changed;
}

Coloring individualize(const Coloring& c, int v) {
  Coloring out = c;
  out.color[v] = out.classes++;
  return out;
}

std::vector<int> class_sizes(const Coloring& c) {
  std::vector<int> sizes(c.classes, 0);
  for (int col : c.color) ++sizes[col];
  return sizes;
}

// Smallest non-singleton class, lowest id on ties; -1 if discrete.
int target_cell(const Coloring& c, const std::vector<int>& sizes) {
  int best = -1;
  for (int i = 0; i < c.classes; ++i)
    if (sizes[i] > 1 && (best < 0 || sizes[i] < sizes[best])) best = i;
  return best;
}

std::vector<int> cell_members(const Coloring& c, int cls) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(c.color.size()); ++v)
    if (c.color[v] == cls) out.push_back(v);
  return out;
}

bool preserves_adjacency(const Graph& a, const Graph& b, const std::vector<int>& map) {
  if (a.edge_count() != b.edge_count()) return false;
  for (auto [u, v] : a.edges())
    if (!b.adjacent(map[u], map[v])) return false;
  return true;
}

// Complete backtracking search for a color-respecting bijection a -> b
// extending the individualizations already baked into the colorings.
std::optional<std::vector<int>> find_iso(const Graph& a, const Graph& b,
                                         Coloring ca, Coloring cb) {
  ca = wl_refine(a, ca);
  cb = wl_refine(b, cb);
  auto sa = class_sizes(ca), sb = class_sizes(cb);
  if (sa != sb) return std::nullopt;
  int cell = target_cell(ca, sa);
  if (cell < 0) {
    // discrete: the color classes define the unique candidate
    std::vector<int> map(a.node_count());
    std::vector<int> by_color(cb.classes);
    for (int v = 0; v < b.node_count(); ++v) by_color[cb.color[v]] = v;
    for (int v = 0; v < a.node_count(); ++v) map[v] = by_color[ca.color[v]];
    if (preserves_adjacency(a, b, map)) return map;
    return std::nullopt;
  }
  int av = cell_members(ca, cell).front();
  for (int bv : cell_members(cb, cell)) {
    auto r = find_iso(a, b, individualize(ca, av), individualize(cb, bv));
    if (r) return r;
  }
  return std::nullopt;
}

std::set<int> orbit_closure(int b, const std::vector<Permutation>& gens) {
  std::set<int> orbit{b};
  std::vector<int> queue{b};
  while (!queue.empty()) {
    int p = queue.back();
    queue.pop_back();
    for (const auto& g : gens)
      for (int q : {g(p), g.inverse()(p)})
        if (orbit.insert(q).second) queue.push_back(q);
  }
  return orbit;
}

// Generators and order of the subgroup of Aut(g) fixing the individualized
// base prefix encoded in `colors` (already refined).
std::pair<std::vector<Permutation>, BigInt> aut_level(const Graph& g, const Coloring& colors) {
  auto sizes = class_sizes(colors);
  int cell = target_cell(colors, sizes);
  if (cell < 0) return {{}, 1};
  auto members = cell_members(colors, cell);
  int b = members.front();
  Coloring fixed = wl_refine(g, individualize(colors, b));
  auto [gens, suborder] = aut_level(g, fixed);
  auto orbit = orbit_closure(b, gens);
  for (int u : members) {
    if (orbit.count(u)) continue;
    auto m = find_iso(g, g, individualize(colors, b), individualize(colors, u));
    if (m) {
      gens.emplace_back(*m);
      orbit = orbit_closure(b, gens);
    }
  }
  return {std::move(gens), suborder * BigInt(orbit.size())};
}

}  // namespace

Coloring wl_refine(const Graph& g, const Coloring& initial) {
  if (static_cast<int>(initial.color.size()) != g.node_count())
    throw std::invalid_argument("coloring size mismatch");
  Coloring c = initial;
  if (g.node_count() == 0) return c;
  while (refine_round(g, c)) {
  }
  return c;
}

AutGroup automorphism_group(const Graph& g) {
  if (g.node_count() == 0) return {{}, 1};
  Coloring base = wl_refine(g, Coloring::uniform(g.node_count()));
  auto [gens, order] = aut_level(g, base);
  for (const auto& p : gens)
    if (!preserves_adjacency(g, g, p.images()))
      throw std::logic_error("automorphism engine emitted a non-automorphism");
  return {std::move(gens), order};
}

std::optional<std::vector<int>> are_isomorphic(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  if (a.node_count() == 0) return std::vector<int>{};
  return find_iso(a, b, Coloring::uniform(a.node_count()), Coloring::uniform(b.node_count()));
}

}  // namespace grouptope
