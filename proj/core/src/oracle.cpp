#include "grouptope/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace grouptope {

namespace {

void dump_tableau(std::ostream& out, const std::vector<std::vector<Rational>>& t,
                  const std::vector<int>& basis) {
  for (size_t i = 0; i < t.size(); ++i) {
    out << (i < basis.size() ? "x" + std::to_string(basis[i]) : std::string("z")) << " |";
    for (const auto& v : t[i]) out << ' ' << v;
    out << '\n';
  }
  out << '\n';
}

}  // namespace

bool phase1_feasible(const LpProblem& lp, std::ostream* debug) {
  size_t m = lp.rows.size();
  if (lp.rhs.size() != m) throw std::invalid_argument("rhs size mismatch");
  size_t k = m ? lp.rows[0].size() : 0;
  for (const auto& r : lp.rows)
    if (r.size() != k) throw std::invalid_argument("ragged LP rows");
  if (m == 0) return true;

  size_t ncols = k + m;  // structural then artificial
  // tableau rows: [structural | artificial | rhs]; last row: reduced costs | -objective
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(ncols + 1, Rational(0)));
  std::vector<int> basis(m);
  for (size_t i = 0; i < m; ++i) {
    bool flip = lp.rhs[i] < 0;
    for (size_t j = 0; j < k; ++j) t[i][j] = flip ? -lp.rows[i][j] : lp.rows[i][j];
    t[i][k + i] = Rational(1);
    t[i][ncols] = flip ? -lp.rhs[i] : lp.rhs[i];
    basis[i] = static_cast<int>(k + i);
  }
  // minimize sum of artificials: c_j = [0...0, 1...1]; reduced costs after
  // pricing out the artificial basis
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < m; ++i) t[m][j] -= t[i][j];
  for (size_t i = 0; i < m; ++i) t[m][ncols] -= t[i][ncols];

  long long pivots = 0;
  const long long pivot_cap = 10000000;
  for (;;) {
    if (debug) dump_tableau(*debug, t, basis);
    // Bland: entering = lowest-index column with negative reduced cost
    int enter = -1;
    for (size_t j = 0; j < ncols; ++j)
      if (t[m][j] < 0) {
        enter = static_cast<int>(j);
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best_ratio;
    for (size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][ncols] / t[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave]))
        leave = static_cast<int>(i), best_ratio = ratio;
    }
    if (leave < 0) throw std::logic_error("phase-1 objective unbounded");
    // pivot on (leave, enter)
    Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (size_t i = 0; i <= m; ++i) {
      if (static_cast<int>(i) == leave) continue;
      Rational f = t[i][enter];
      if (f == 0) continue;
      for (size_t j = 0; j <= ncols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
    if (++pivots > pivot_cap) throw std::logic_error("phase-1 pivot cap exceeded");
  }
  // objective value is -t[m][ncols]; feasible iff it is zero
  return t[m][ncols] == 0;
}

bool lp_adjacent(const BinaryPolytope& p, int i, int j) {
  if (i == j) throw std::invalid_argument("lp_adjacent needs distinct vertices");
  int d = p.ambient_dimension();
  int k = p.vertex_count();
  LpProblem lp;
  lp.rows.assign(d + 1, {});
  // columns: scaled multipliers (2*lambda) for every vertex other than i, j
  for (int row = 0; row < d; ++row) {
    auto& r = lp.rows[row];
    for (int v = 0; v < k; ++v) {
      if (v == i || v == j) continue;
      r.emplace_back(int(p.vertex(v).coords[row]));
    }
    lp.rhs.emplace_back(int(p.vertex(i).coords[row]) + int(p.vertex(j).coords[row]));
  }
  lp.rows[d].assign(k - 2, Rational(1));
  lp.rhs.emplace_back(2);
  return !phase1_feasible(lp);
}

ConditionStarResult brute_condition_star(const Graph& g) {
  int n = g.node_count();
  if (n > 12) throw std::invalid_argument("brute_condition_star guard: |V| <= 12");
  if (g.edge_count() == 0) return {ConditionStarResult::Status::NoLinks};
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> c, d;
    for (int v = 0; v < n; ++v) ((mask >> v) & 1 ? c : d).push_back(v);
    if (!is_stable_set(g, c) || !is_stable_set(g, d)) continue;
    for (int v0 : c) {
      bool all = true;
      for (int b : d)
        if (!g.adjacent(v0, b)) {
          all = false;
          break;
        }
      if (all) {
        ConditionStarResult r{ConditionStarResult::Status::Violated};
        r.v0 = v0;
        r.c_side = c;
        r.d_side = d;
        return r;
      }
    }
  }
  return {ConditionStarResult::Status::Holds};
}

std::vector<Permutation> brute_automorphisms(const Graph& g) {
  int n = g.node_count();
  if (n > 8) throw std::invalid_argument("brute_automorphisms guard: |V| <= 8");
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (!g.adjacent(im[u], im[v])) {
        ok = false;
        break;
      }
    if (ok) out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace grouptope
