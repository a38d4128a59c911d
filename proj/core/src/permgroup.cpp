#include "grouptope/permgroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grouptope {

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ < 1) throw std::invalid_argument("group degree must be positive");
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree mismatch");
}

std::string GroupSpec::name() const {
  switch (kind) {
    case Kind::Cyclic: return "cyclic " + std::to_string(param);
    case Kind::Dihedral: return "dihedral " + std::to_string(param);
    case Kind::Symmetric: return "symmetric " + std::to_string(param);
    case Kind::Klein4: return "klein4";
    case Kind::Quaternion8: return "quaternion8";
    case Kind::Product: return factors[0].name() + " x " + factors[1].name();
    case Kind::Explicit: return "explicit";
  }
  return "?";
}

namespace {

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

int parse_positive(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size() || v <= 0) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("expected a positive integer for " + what + ", got '" + s + "'");
  }
}

// Split "gens ..." payload into permutation tokens: whitespace outside
// parentheses separates permutations.
std::vector<std::string> split_cycle_tokens(const std::string& s) {
  std::vector<std::string> tokens;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') {
      --depth;
      if (depth < 0) throw std::invalid_argument("unbalanced ')' in cycle notation");
    }
    if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
      if (!cur.empty()) tokens.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced cycle in: " + s);
  if (!cur.empty()) tokens.push_back(cur);
  return tokens;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  std::string s = trim(text);
  auto space = s.find_first_of(" \t");
  std::string head = space == std::string::npos ? s : s.substr(0, space);
  std::string rest = space == std::string::npos ? "" : trim(s.substr(space + 1));

  GroupSpec spec;
  if (head == "cyclic") {
    spec.kind = GroupSpec::Kind::Cyclic;
    spec.param = parse_positive(rest, "cyclic");
  } else if (head == "dihedral") {
    spec.kind = GroupSpec::Kind::Dihedral;
    spec.param = parse_positive(rest, "dihedral");
  } else if (head == "symmetric") {
    spec.kind = GroupSpec::Kind::Symmetric;
    spec.param = parse_positive(rest, "symmetric");
  } else if (head == "klein4") {
    spec.kind = GroupSpec::Kind::Klein4;
    if (!rest.empty()) throw std::invalid_argument("klein4 takes no parameter");
  } else if (head == "quaternion8") {
    spec.kind = GroupSpec::Kind::Quaternion8;
    if (!rest.empty()) throw std::invalid_argument("quaternion8 takes no parameter");
  } else if (head == "product") {
    auto semi = rest.find(';');
    if (semi == std::string::npos)
      throw std::invalid_argument("product needs '<spec> ; <spec>'");
    spec.kind = GroupSpec::Kind::Product;
    spec.factors.push_back(parse_group_spec(rest.substr(0, semi)));
    spec.factors.push_back(parse_group_spec(rest.substr(semi + 1)));
  } else if (head == "gens") {
    spec.kind = GroupSpec::Kind::Explicit;
    auto tokens = split_cycle_tokens(rest);
    if (tokens.empty()) throw std::invalid_argument("gens needs at least one permutation");
    int degree = 0;
    for (const auto& t : tokens) {
      auto p = Permutation::from_cycles(t);
      degree = std::max(degree, p.degree());
      spec.generators.push_back(std::move(p));
    }
    for (auto& p : spec.generators) p = p.extended(degree);
  } else {
    throw std::invalid_argument("unknown group family '" + head + "'");
  }
  return spec;
}

std::string serialize_group_spec(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: return "cyclic " + std::to_string(spec.param);
    case GroupSpec::Kind::Dihedral: return "dihedral " + std::to_string(spec.param);
    case GroupSpec::Kind::Symmetric: return "symmetric " + std::to_string(spec.param);
    case GroupSpec::Kind::Klein4: return "klein4";
    case GroupSpec::Kind::Quaternion8: return "quaternion8";
    case GroupSpec::Kind::Product:
      return "product " + serialize_group_spec(spec.factors[0]) + " ; " +
             serialize_group_spec(spec.factors[1]);
    case GroupSpec::Kind::Explicit: {
      std::string out = "gens";
      for (const auto& p : spec.generators) out += " " + p.to_cycles();
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

PermutationGroup realize_klein4() {
  return PermutationGroup(4, {Permutation::from_cycles("(0 1)(2 3)"),
                              Permutation::from_cycles("(0 2)(1 3)")});
}

// Regular representation of Q8. Elements indexed s*4+b with sign s in {+,-}
// and basis b in {1,i,j,k}; generators are left multiplication by i and j.
PermutationGroup realize_quaternion8() {
  // mult[a][b] = (sign, basis) of basis-a times basis-b
  static const int basis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // sign[a][b]=1 means negative: i*i=-1, i*k=-j, j*i=-k, j*j=-1, k*j=-i, k*k=-1
  auto left_mult = [&](int g) {
    std::vector<int> im(8);
    int gs = g / 4, gb = g % 4;
    for (int x = 0; x < 8; ++x) {
      int xs = x / 4, xb = x % 4;
      int rb = basis[gb][xb];
      int rs = (gs + xs + sign[gb][xb]) % 2;
      im[x] = rs * 4 + rb;
    }
    return Permutation(im);
  };
  return PermutationGroup(8, {left_mult(1) /* i */, left_mult(2) /* j */});
}

}  // namespace

PermutationGroup realize_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: {
      int k = spec.param;
      if (k == 1) return PermutationGroup(1, {});
      std::vector<int> im(k);
      for (int i = 0; i < k; ++i) im[i] = (i + 1) % k;
      return PermutationGroup(k, {Permutation(im)});
    }
    case GroupSpec::Kind::Dihedral: {
      int k = spec.param;
      if (k == 1) return PermutationGroup(2, {Permutation::from_cycles("(0 1)")});
      if (k == 2) return realize_klein4();
      std::vector<int> rot(k), refl(k);
      for (int i = 0; i < k; ++i) {
        rot[i] = (i + 1) % k;
        refl[i] = (k - i) % k;
      }
      return PermutationGroup(k, {Permutation(rot), Permutation(refl)});
    }
    case GroupSpec::Kind::Symmetric: {
      int k = spec.param;
      if (k == 1) return PermutationGroup(1, {});
      if (k == 2) return PermutationGroup(2, {Permutation::from_cycles("(0 1)")});
      std::vector<int> cyc(k);
      for (int i = 0; i < k; ++i) cyc[i] = (i + 1) % k;
      return PermutationGroup(k, {Permutation::from_cycles("(0 1)", k), Permutation(cyc)});
    }
    case GroupSpec::Kind::Klein4:
      return realize_klein4();
    case GroupSpec::Kind::Quaternion8:
      return realize_quaternion8();
    case GroupSpec::Kind::Product: {
      auto a = realize_group(spec.factors[0]);
      auto b = realize_group(spec.factors[1]);
      int d = a.degree() + b.degree();
      std::vector<Permutation> gens;
      for (const auto& g : a.generators()) gens.push_back(g.extended(d));
      for (const auto& g : b.generators()) {
        std::vector<int> im(d);
        for (int i = 0; i < a.degree(); ++i) im[i] = i;
        for (int i = 0; i < b.degree(); ++i) im[a.degree() + i] = a.degree() + g(i);
        gens.push_back(Permutation(im));
      }
      return PermutationGroup(d, std::move(gens));
    }
    case GroupSpec::Kind::Explicit:
      return PermutationGroup(spec.generators.front().degree(), spec.generators);
  }
  throw std::logic_error("unreachable");
}

namespace {

// BFS closure; empty result means the cap was exceeded.
std::vector<Permutation> closure(const PermutationGroup& g, std::size_t cap) {
  std::vector<Permutation> elements{Permutation::identity(g.degree())};
  std::set<Permutation> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : g.generators()) {
      auto next = elements[head] * s;
      if (seen.insert(next).second) {
        if (elements.size() + 1 > cap) return {};
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

}  // namespace

std::vector<Permutation> enumerate_elements(const PermutationGroup& g) {
  auto elements = closure(g, kEnumerationGuard);
  if (elements.empty())
    throw std::runtime_error(
        "group order exceeds the enumeration guard of " +
        std::to_string(kEnumerationGuard) + " elements; use order_of instead");
  return elements;
}

BigInt schreier_sims_order(int degree, const std::vector<Permutation>& generators) {
  std::vector<Permutation> gens;
  for (const auto& g : generators)
    if (!g.is_identity()) gens.push_back(g);
  if (gens.empty()) return 1;

  int b = -1;
  for (int i = 0; i < degree && b < 0; ++i)
    for (const auto& g : gens)
      if (g(i) != i) { b = i; break; }

  // Orbit of b with transversal representatives u[p] (u[p](b) = p).
  std::map<int, Permutation> u;
  u.emplace(b, Permutation::identity(degree));
  std::vector<int> queue{b};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int p = queue[head];
    for (const auto& s : gens) {
      int q = s(p);
      if (!u.count(q)) {
        u.emplace(q, s * u.at(p));
        queue.push_back(q);
      }
    }
  }

  std::set<Permutation> stab_gens;
  for (const auto& [p, up] : u)
    for (const auto& s : gens) {
      auto schreier = u.at(s(p)).inverse() * s * up;
      if (!schreier.is_identity()) stab_gens.insert(std::move(schreier));
    }

  return BigInt(u.size()) *
         schreier_sims_order(degree, {stab_gens.begin(), stab_gens.end()});
}

BigInt order_of(const PermutationGroup& g) {
  auto elements = closure(g, kEnumerationGuard);
  if (!elements.empty()) return BigInt(elements.size());
  return schreier_sims_order(g.degree(), g.generators());
}

std::optional<int> minimum_generator_count(const PermutationGroup& g) {
  auto elements = closure(g, 1000);
  if (elements.empty()) return std::nullopt;
  std::size_t n = elements.size();
  if (n == 1) return 0;

  auto generates = [&](const std::vector<Permutation>& gens) {
    std::set<Permutation> seen{Permutation::identity(g.degree())};
    std::vector<Permutation> work{Permutation::identity(g.degree())};
    for (std::size_t head = 0; head < work.size(); ++head) {
      for (const auto& s : gens) {
        auto next = work[head] * s;
        if (seen.insert(next).second) work.push_back(std::move(next));
      }
    }
    return work.size() == n;
  };

  // Brute force over subsets of increasing size, skipping the identity.
  std::vector<const Permutation*> pool;
  for (const auto& e : elements)
    if (!e.is_identity()) pool.push_back(&e);

  for (std::size_t k = 1; k <= pool.size(); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      std::vector<Permutation> gens;
      for (auto i : idx) gens.push_back(*pool[i]);
      if (generates(gens)) return static_cast<int>(k);
      // next combination
      int pos = static_cast<int>(k) - 1;
      while (pos >= 0 && idx[pos] == pool.size() - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (std::size_t i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  throw std::logic_error("full element set must generate the group");
}

}  // namespace grouptope
