#include "grouptope/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace grouptope {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[x])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::extended(int degree) const {
  if (degree < this->degree())
    throw std::invalid_argument("cannot shrink a permutation");
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  std::copy(images_.begin(), images_.end(), im.begin());
  return Permutation(std::move(im));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  std::vector<int> im(p.degree());
  for (int i = 0; i < p.degree(); ++i) im[i] = p(q(i));
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(const std::string& text, int degree_hint) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("empty cycle notation");
  int max_point = -1;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i == text.size()) throw std::invalid_argument("unbalanced cycle: " + text);
      if (text[i] == ')') { ++i; break; }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("bad character in cycle notation: " + text);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      cycle.push_back(v);
      max_point = std::max(max_point, v);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  int degree = std::max(degree_hint, max_point + 1);
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  std::vector<char> moved(degree, 0);
  for (const auto& c : cycles) {
    for (size_t k = 0; k < c.size(); ++k) {
      int from = c[k], to = c[(k + 1) % c.size()];
      if (moved[from]) throw std::invalid_argument("point repeated in cycles: " + text);
      moved[from] = 1;
      im[from] = to;
    }
  }
  return Permutation(std::move(im));
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    out << '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out << ' ';
      out << j;
      first = false;
      j = images_[j];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace grouptope
