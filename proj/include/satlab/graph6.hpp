#ifndef SATLAB_GRAPH6_HPP
#define SATLAB_GRAPH6_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace satlab {

namespace detail {

inline constexpr int kGraph6Offset = 63;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline void append_graph6_size(std::string &out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Offset));
    return;
  }
  out.push_back(static_cast<char>(126));
  for (int shift = 12; shift >= 0; shift -= 6)
    out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kGraph6Offset));
}

} // namespace detail

/// graph6 encoding: size header, then the upper triangle in column-major
/// order (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...) packed six bits per byte,
/// most significant bit first, each byte offset by 63.
inline std::string to_graph6(const Graph &g) {
  const int n = g.order();
  std::string out;
  detail::append_graph6_size(out, n);
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    const VertexSet &col = g.neighbors(j);
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (col.test(i) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + detail::kGraph6Offset));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0)
    out.push_back(static_cast<char>((acc << (6 - nbits)) + detail::kGraph6Offset));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  auto chunk = [&](std::size_t pos) {
    if (pos >= text.size())
      throw ParseError("graph6 input truncated", pos);
    int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
      throw ParseError("byte " + std::to_string(c) + " outside graph6 range 63..126", pos);
    return c - detail::kGraph6Offset;
  };

  if (text.empty())
    throw ParseError("empty graph6 string", 0);

  std::size_t pos = 0;
  std::int64_t n = chunk(0);
  if (n < 63) {
    pos = 1;
  } else if (text.size() > 1 && text[1] == static_cast<char>(126)) {
    n = 0;
    for (std::size_t i = 2; i < 8; ++i)
      n = (n << 6) | chunk(i);
    pos = 8;
  } else {
    n = 0;
    for (std::size_t i = 1; i < 4; ++i)
      n = (n << 6) | chunk(i);
    pos = 4;
  }
  if (n > kMaxVertices)
    throw ParseError("graph6 vertex count " + std::to_string(n) + " exceeds " +
                     std::to_string(kMaxVertices),
                     0);

  for (std::size_t i = pos; i < text.size(); ++i)
    chunk(i);

  const std::int64_t bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != pos + body)
    throw ParseError("graph6 length mismatch: expected " + std::to_string(pos + body) +
                         " bytes for n = " + std::to_string(n) + ", got " +
                         std::to_string(text.size()),
                     std::min(text.size(), pos + body));

  Graph g(static_cast<int>(n));
  std::int64_t k = 0;
  int i = 0, j = 1; // current upper-triangle position, column-major
  for (std::size_t b = 0; b < body; ++b) {
    const int word = chunk(pos + b);
    for (int bit = 5; bit >= 0; --bit, ++k) {
      const bool on = (word >> bit) & 1;
      if (k >= bits) {
        if (on)
          throw ParseError("nonzero padding bits in graph6 input", pos + b);
        continue;
      }
      if (on)
        g.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

/// Reads one graph6 string per line. Blank lines are skipped and a leading
/// ">>graph6<<" header on any line is stripped.
inline std::vector<Graph> read_graph6_lines(std::istream &in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view v = line;
    while (!v.empty() && (v.back() == '\r' || v.back() == '\n' || v.back() == ' '))
      v.remove_suffix(1);
    if (v.starts_with(detail::kGraph6Header))
      v.remove_prefix(detail::kGraph6Header.size());
    if (v.empty())
      continue;
    out.push_back(from_graph6(v));
  }
  return out;
}

} // namespace satlab

#endif
