#include "lnf/graph6.hpp"

#include <sstream>
#include <stdexcept>

namespace lnf {

namespace {

constexpr int k_offset = 63;

int decode_char(char c) {
  if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad character");
  return c - k_offset;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty string");
  std::size_t pos = 0;
  long long n;
  if (text[0] != '~') {
    n = decode_char(text[0]);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~')
      throw std::invalid_argument("graph6: order above supported range");
    if (text.size() < 4) throw std::invalid_argument("graph6: truncated header");
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i)
      n = n << 6 | decode_char(text[i]);
    pos = 4;
  }
  if (n > Graph::max_order)
    throw std::invalid_argument("graph6: order above supported range");

  long long bits = n * (n - 1) / 2;
  std::size_t want = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != want)
    throw std::invalid_argument("graph6: body length mismatch");

  Graph g(static_cast<int>(n));
  long long bit = 0;
  int row = 0, col = 1;  // column-major walk of the upper triangle
  for (std::size_t i = pos; i < text.size(); ++i) {
    int group = decode_char(text[i]);
    for (int b = 5; b >= 0; --b, ++bit) {
      bool set = group >> b & 1;
      if (bit >= bits) {
        if (set) throw std::invalid_argument("graph6: nonzero padding");
        continue;
      }
      if (set) g.add_edge(row, col);
      if (++row == col) {
        ++col;
        row = 0;
      }
    }
  }
  return g;
}

std::string serialize_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + k_offset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>((n >> 12 & 63) + k_offset));
    out.push_back(static_cast<char>((n >> 6 & 63) + k_offset));
    out.push_back(static_cast<char>((n & 63) + k_offset));
  }
  int group = 0, filled = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      group = group << 1 | (g.adjacent(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + k_offset));
        group = filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>((group << (6 - filled)) + k_offset));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n, m;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: bad header");
  if (n < 0 || n > Graph::max_order)
    throw std::invalid_argument("edge list: order out of range");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
    g.add_edge(u, v);
  }
  if (g.size() != m) throw std::invalid_argument("edge list: duplicate edge");
  return g;
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace lnf
