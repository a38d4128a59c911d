#include "grouptope/graph6.hpp"

#include <stdexcept>

namespace grouptope {

std::string graph6_encode(const Graph& g) {
  long long n = g.node_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw std::invalid_argument("graph too large for supported graph6 forms");
  }
  int bits = 0, acc = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = 0;
        acc = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph graph6_decode(const std::string& text) {
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw std::invalid_argument("truncated graph6 string");
    int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("invalid graph6 character");
    return c - 63;
  };
  long long n;
  if (!text.empty() && text[0] == '~') {
    ++pos;
    if (pos < text.size() && text[pos] == '~')
      throw std::invalid_argument("graph6 strings above 258047 nodes unsupported");
    n = next();
    n = (n << 6) | next();
    n = (n << 6) | next();
  } else {
    n = next();
  }
  std::vector<NodePair> edges;
  int bits = 0, acc = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (bits == 0) {
        acc = next();
        bits = 6;
      }
      if (acc & (1 << (bits - 1))) edges.emplace_back(i, j);
      --bits;
    }
  if (pos != text.size()) throw std::invalid_argument("trailing bytes in graph6 string");
  return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace grouptope
