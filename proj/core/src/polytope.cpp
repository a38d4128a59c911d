#include "grouptope/polytope.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace grouptope {

BinaryPolytope BinaryPolytope::from_graph(Graph g) {
  BinaryPolytope p;
  int n = g.node_count();
  if (n < 1) throw std::invalid_argument("polytope needs at least one graph node");
  p.dim_ = n;
  p.vertices_.reserve(1 + n + g.edge_count());
  p.vertices_.push_back({std::vector<uint8_t>(n, 0), {VertexTag::Kind::Empty}});
  for (int u = 0; u < n; ++u) {
    std::vector<uint8_t> c(n, 0);
    c[u] = 1;
    p.vertices_.push_back({std::move(c), {VertexTag::Kind::Singleton, u}});
  }
  for (auto [u, v] : g.edges()) {
    std::vector<uint8_t> c(n, 0);
    c[u] = c[v] = 1;
    p.vertices_.push_back({std::move(c), {VertexTag::Kind::Link, u, v}});
  }
  p.source_ = std::move(g);
  return p;
}

BinaryPolytope BinaryPolytope::point() {
  BinaryPolytope p;
  p.dim_ = 1;
  p.vertices_.push_back({{0}, {VertexTag::Kind::Empty}});
  return p;
}

const Graph& BinaryPolytope::source_graph() const {
  if (!source_) throw std::logic_error("polytope has no source graph");
  return *source_;
}

int BinaryPolytope::index_of(const VertexTag& tag) const {
  switch (tag.kind) {
    case VertexTag::Kind::Empty:
      return 0;
    case VertexTag::Kind::Singleton:
      if (!source_ || tag.u < 0 || tag.u >= source_->node_count())
        throw std::invalid_argument("no such singleton vertex");
      return 1 + tag.u;
    case VertexTag::Kind::Link: {
      int u = std::min(tag.u, tag.v), v = std::max(tag.u, tag.v);
      const auto& edges = source_graph().edges();
      auto it = std::lower_bound(edges.begin(), edges.end(), NodePair{u, v});
      if (it == edges.end() || *it != NodePair{u, v})
        throw std::invalid_argument("no such link vertex");
      return 1 + source_->node_count() + static_cast<int>(it - edges.begin());
    }
  }
  throw std::logic_error("unreachable");
}

SkeletonGraph skeleton(const BinaryPolytope& p) {
  if (!p.has_source_graph()) return Graph(p.vertex_count(), {});
  const Graph& g = p.source_graph();
  int n = g.node_count();
  int k = p.vertex_count();
  std::vector<NodePair> edges;
  auto tag = [&](int i) -> const VertexTag& { return p.vertex(i).tag; };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const auto &a = tag(i), &b = tag(j);
      bool adj = false;
      if (a.kind == VertexTag::Kind::Empty) {
        adj = b.kind == VertexTag::Kind::Singleton;
      } else if (a.kind == VertexTag::Kind::Singleton && b.kind == VertexTag::Kind::Singleton) {
        adj = !g.adjacent(a.u, b.u);
      } else if (a.kind == VertexTag::Kind::Singleton && b.kind == VertexTag::Kind::Link) {
        int v = a.u;
        adj = v == b.u || v == b.v || (!g.adjacent(v, b.u) && !g.adjacent(v, b.v));
      } else {  // Link vs Link
        bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
        if (share) {
          adj = true;
        } else {
          bool four_cycle = (g.adjacent(a.u, b.u) && g.adjacent(a.v, b.v)) ||
                            (g.adjacent(a.u, b.v) && g.adjacent(a.v, b.u));
          adj = !four_cycle;
        }
      }
      if (adj) edges.emplace_back(i, j);
    }
  (void)n;
  return Graph(k, std::move(edges));
}

namespace {

// Coordinate sums of two 0/1 vertices have at most four nonzero entries;
// keys pack (coordinate, value) pairs of the merged supports.
using SumKey = std::vector<uint32_t>;

struct SumKeyHash {
  size_t operator()(const SumKey& k) const {
    size_t h = 1469598103934665603ull;
    for (uint32_t x : k) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<int> support_of(const PolytopeVertex& v) {
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(v.coords.size()); ++i)
    if (v.coords[i]) s.push_back(i);
  return s;
}

SumKey sum_key(const std::vector<int>& a, const std::vector<int>& b) {
  SumKey key;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      key.push_back(static_cast<uint32_t>(a[i++]) << 2 | 1);
    } else if (i == a.size() || b[j] < a[i]) {
      key.push_back(static_cast<uint32_t>(b[j++]) << 2 | 1);
    } else {
      key.push_back(static_cast<uint32_t>(a[i]) << 2 | 2);
      ++i, ++j;
    }
  }
  return key;
}

// Up to two distinct pairs per sum; enough to answer any witness query.
class MidpointIndex {
 public:
  explicit MidpointIndex(const BinaryPolytope& p) {
    int k = p.vertex_count();
    supports_.reserve(k);
    for (int i = 0; i < k; ++i) supports_.push_back(support_of(p.vertex(i)));
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        auto& slot = map_[sum_key(supports_[i], supports_[j])];
        if (slot.size() < 2) slot.push_back({i, j});
      }
  }

  std::optional<std::pair<int, int>> witness(int i, int j) const {
    auto lo = std::min(i, j), hi = std::max(i, j);
    auto it = map_.find(sum_key(supports_[lo], supports_[hi]));
    if (it == map_.end()) return std::nullopt;
    for (auto pr : it->second)
      if (pr != std::pair<int, int>{lo, hi}) return pr;
    return std::nullopt;
  }

 private:
  std::vector<std::vector<int>> supports_;
  std::unordered_map<SumKey, std::vector<std::pair<int, int>>, SumKeyHash> map_;
};

}  // namespace

std::optional<std::pair<int, int>> midpoint_witness(const BinaryPolytope& p, int i, int j) {
  if (i == j) throw std::invalid_argument("midpoint_witness needs distinct vertices");
  return MidpointIndex(p).witness(i, j);
}

CombinatorialReport verify_combinatorial(const BinaryPolytope& p, const SkeletonGraph& s) {
  MidpointIndex index(p);
  CombinatorialReport report;
  int k = p.vertex_count();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (s.adjacent(i, j)) continue;
      if (!index.witness(i, j)) {
        report.pass = false;
        report.failures.emplace_back(i, j);
      }
    }
  return report;
}

int diameter(const SkeletonGraph& s) {
  int k = s.node_count();
  int diam = 0;
  std::vector<int> dist(k);
  for (int src = 0; src < k; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : s.neighbors(v))
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          q.push(u);
        }
    }
    for (int v = 0; v < k; ++v) {
      if (dist[v] < 0) throw std::runtime_error("skeleton is disconnected");
      diam = std::max(diam, dist[v]);
    }
  }
  return diam;
}

bool neighborhood_complement_iso(const BinaryPolytope& p, const SkeletonGraph& s) {
  if (!p.has_source_graph()) return true;
  const Graph& g = p.source_graph();
  int n = g.node_count();
  // Empty's neighbors must be exactly the Singleton vertices 1..n.
  if (s.degree(0) != n) return false;
  for (int u = 0; u < n; ++u)
    if (!s.adjacent(0, 1 + u)) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (s.adjacent(1 + u, 1 + v) == g.adjacent(u, v)) return false;
  return true;
}

Permutation lift_automorphism(const BinaryPolytope& p, const Permutation& alpha) {
  const Graph& g = p.source_graph();
  if (alpha.degree() != g.node_count())
    throw std::invalid_argument("automorphism degree mismatch");
  for (auto [u, v] : g.edges())
    if (!g.adjacent(alpha(u), alpha(v)))
      throw std::invalid_argument("not an automorphism of the source graph");
  std::vector<int> im(p.vertex_count());
  im[0] = 0;
  for (int u = 0; u < g.node_count(); ++u)
    im[1 + u] = p.index_of({VertexTag::Kind::Singleton, alpha(u)});
  int base = 1 + g.node_count();
  const auto& edges = g.edges();
  for (size_t e = 0; e < edges.size(); ++e)
    im[base + e] = p.index_of({VertexTag::Kind::Link, alpha(edges[e].first), alpha(edges[e].second)});
  return Permutation(std::move(im));
}

Permutation condition_star_T_map(const BinaryPolytope& p, const ConditionStarResult& star) {
  if (star.status != ConditionStarResult::Status::Violated)
    throw std::invalid_argument("condition_star_T_map needs a Condition [*] violation witness");
  int n = p.source_graph().node_count();
  std::vector<char> in_c(n, 0);
  for (int a : star.c_side) in_c[a] = 1;
  std::map<std::vector<uint8_t>, int> by_coords;
  for (int i = 0; i < p.vertex_count(); ++i) by_coords.emplace(p.vertex(i).coords, i);
  std::vector<int> im(p.vertex_count());
  for (int i = 0; i < p.vertex_count(); ++i) {
    auto coords = p.vertex(i).coords;
    int sum_c = 0;
    for (int a = 0; a < n; ++a)
      if (in_c[a]) sum_c += coords[a];
    int val = 1 - sum_c;
    if (val < 0 || val > 1)
      throw std::runtime_error("T image leaves the 0/1 cube; invalid witness");
    coords[star.v0] = static_cast<uint8_t>(val);
    auto it = by_coords.find(coords);
    if (it == by_coords.end())
      throw std::runtime_error("T does not stabilize the vertex set; invalid witness");
    im[i] = it->second;
  }
  Permutation perm(std::move(im));
  if (perm(0) == 0) throw std::logic_error("T must move the Empty vertex");
  return perm;
}

FaceCertificate face_certificate(const BinaryPolytope& p, FaceKind kind,
                                 const std::vector<int>& params) {
  const Graph& g = p.source_graph();
  int n = g.node_count();
  FaceCertificate cert;
  cert.coefficients.assign(n, Rational(0));
  std::vector<int> expected;

  switch (kind) {
    case FaceKind::Edge: {
      if (params.size() != 2) throw std::invalid_argument("Edge certificate needs two nodes");
      int u = params[0], v = params[1];
      if (u == v || g.adjacent(u, v))
        throw std::invalid_argument("Edge certificate needs an unlinked node pair");
      for (int i = 0; i < n; ++i) cert.coefficients[i] = Rational(-2);
      cert.coefficients[u] = cert.coefficients[v] = Rational(1);
      cert.rhs = Rational(1);
      expected = {p.index_of({VertexTag::Kind::Singleton, u}),
                  p.index_of({VertexTag::Kind::Singleton, v})};
      break;
    }
    case FaceKind::Mixed: {
      if (params.size() != 3) throw std::invalid_argument("Mixed certificate needs v, u, w");
      int v = params[0], u = params[1], w = params[2];
      if (!g.adjacent(u, w)) throw std::invalid_argument("Mixed certificate needs a link {u,w}");
      if (v == u || v == w || g.adjacent(v, u) || g.adjacent(v, w))
        throw std::invalid_argument("Mixed certificate needs v off and unlinked to {u,w}");
      for (int i = 0; i < n; ++i) cert.coefficients[i] = Rational(-2);
      cert.coefficients[v] = Rational(1);
      cert.coefficients[u] = cert.coefficients[w] = Rational(1, 2);
      cert.rhs = Rational(1);
      expected = {p.index_of({VertexTag::Kind::Singleton, v}),
                  p.index_of({VertexTag::Kind::Link, u, w})};
      break;
    }
    case FaceKind::TwoFace: {
      if (params.size() != 2) throw std::invalid_argument("TwoFace certificate needs a link");
      int v = params[0], w = params[1];
      if (!g.adjacent(v, w)) throw std::invalid_argument("TwoFace certificate needs a link");
      for (int i = 0; i < n; ++i) cert.coefficients[i] = Rational(-1);
      cert.coefficients[v] = cert.coefficients[w] = Rational(0);
      cert.rhs = Rational(0);
      expected = {0, p.index_of({VertexTag::Kind::Singleton, v}),
                  p.index_of({VertexTag::Kind::Singleton, w}),
                  p.index_of({VertexTag::Kind::Link, v, w})};
      break;
    }
    case FaceKind::EdgePolytope: {
      if (!params.empty()) throw std::invalid_argument("EdgePolytope certificate takes no nodes");
      for (int i = 0; i < n; ++i) cert.coefficients[i] = Rational(1);
      cert.rhs = Rational(2);
      for (int i = 0; i < p.vertex_count(); ++i)
        if (p.vertex(i).tag.kind == VertexTag::Kind::Link) expected.push_back(i);
      break;
    }
  }

  for (int i = 0; i < p.vertex_count(); ++i) {
    Rational lhs(0);
    const auto& c = p.vertex(i).coords;
    for (int j = 0; j < n; ++j)
      if (c[j]) lhs += cert.coefficients[j];
    if (lhs > cert.rhs)
      throw std::runtime_error("face inequality violated at vertex " + std::to_string(i));
    if (lhs == cert.rhs) cert.tight_vertex_indices.push_back(i);
  }
  std::sort(expected.begin(), expected.end());
  if (cert.tight_vertex_indices != expected)
    throw std::runtime_error("face certificate tight set does not match the claimed face");
  return cert;
}

BinaryPolytope special_case_polytope(const PermutationGroup& g) {
  BigInt order = order_of(g);
  if (order == 1) return BinaryPolytope::point();
  if (order == 2) return BinaryPolytope::from_graph(Graph(1, {}));
  throw std::invalid_argument("special_case_polytope only covers |G| <= 2");
}

std::string polytope_vertices_encode(const BinaryPolytope& p) {
  std::ostringstream out;
  out << p.ambient_dimension() << ' ' << p.vertex_count() << '\n';
  for (const auto& v : p.vertices()) {
    for (int j = 0; j < p.ambient_dimension(); ++j) {
      if (j) out << ' ';
      out << int(v.coords[j]);
    }
    out << '\n';
  }
  return out.str();
}

std::string polytope_tags_encode(const BinaryPolytope& p) {
  std::ostringstream out;
  for (const auto& v : p.vertices()) {
    switch (v.tag.kind) {
      case VertexTag::Kind::Empty: out << "E\n"; break;
      case VertexTag::Kind::Singleton: out << "S " << v.tag.u << '\n'; break;
      case VertexTag::Kind::Link: out << "L " << v.tag.u << ' ' << v.tag.v << '\n'; break;
    }
  }
  return out.str();
}

}  // namespace grouptope
