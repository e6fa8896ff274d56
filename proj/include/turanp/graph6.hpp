#pragma once

#include <turanp/error.hpp>
#include <turanp/graph.hpp>

#include <string>
#include <string_view>

namespace turanp {

// graph6: N(n) header, then the upper triangle x(0,1) x(0,2) x(1,2) x(0,3)...
// (column-major) packed six bits per byte, each byte offset by 63.

inline std::string g6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int value = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + value));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (value << (6 - filled))));
  return out;
}

inline Graph g6_decode(std::string_view s) {
  auto sextet = [&](std::size_t pos) {
    const auto c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw Error("graph6: byte out of range at offset " + std::to_string(pos));
    return static_cast<int>(c) - 63;
  };
  if (s.empty()) throw Error("graph6: empty input");
  std::size_t pos = 0;
  int n = 0;
  if (static_cast<unsigned char>(s[0]) == 126) {
    if (s.size() < 4) throw Error("graph6: truncated header");
    if (static_cast<unsigned char>(s[1]) == 126) throw Error("graph6: orders above 258047 are not supported");
    n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
    if (n <= 62) throw Error("graph6: non-canonical long header");
    pos = 4;
  } else {
    n = sextet(0);
    pos = 1;
  }
  if (n > kMaxVertices) {
    throw CapacityError("graph6: order " + std::to_string(n) + " exceeds the vertex cap of " +
                        std::to_string(kMaxVertices));
  }
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t payload = (bits + 5) / 6;
  if (s.size() < pos + payload) throw Error("graph6: payload shorter than the header implies");
  if (s.size() > pos + payload) throw Error("graph6: trailing bytes after payload");

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(pos + k / 6);
      if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  if (payload > 0) {
    const int last = sextet(pos + payload - 1);
    const int used = static_cast<int>(bits - (payload - 1) * 6);
    if ((last & ((1 << (6 - used)) - 1)) != 0) throw Error("graph6: nonzero padding bits");
  }
  return g;
}

}  // namespace turanp
