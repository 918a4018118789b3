#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace mbdom {

/// Malformed graph6 input; `offset` is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error("graph6 parse error at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// graph6: size header N(n) then the upper triangle x(0,1) x(0,2) x(1,2)
// x(0,3) ... packed big-endian into 6-bit groups, each offset by 63.

inline std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(63 + ((n >> 12) & 63));
    out += static_cast<char>(63 + ((n >> 6) & 63));
    out += static_cast<char>(63 + (n & 63));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    const VertexSet nb = g.neighbors(v);
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (nb.contains(u) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(63 + (acc << (6 - filled)));
  return out;
}

inline Graph graph6_decode(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::size_t pos = 0;
  if (text.starts_with(">>graph6<<")) pos = 10;
  auto next = [&](const char* what) -> int {
    if (pos >= text.size()) throw ParseError(std::string("unexpected end of input reading ") + what, pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("character " + std::to_string(c) + " out of range [63,126]", pos);
    ++pos;
    return c - 63;
  };
  int n = next("size header");
  if (n == 63) {
    if (pos < text.size() && text[pos] == '~') throw ParseError("orders above 258047 are not supported", pos);
    const int a = next("size header");
    const int b = next("size header");
    const int c = next("size header");
    n = (a << 12) | (b << 6) | c;
    if (n <= 62) throw ParseError("non-minimal size header", 0);
  }
  if (n > kMaxVertices) throw ParseError("order " + std::to_string(n) + " exceeds 64 vertices", 0);

  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  const std::size_t body = pos;
  if (text.size() - body != byte_count)
    throw ParseError("expected " + std::to_string(byte_count) + " data bytes, found " +
                         std::to_string(text.size() - body),
                     text.size() < body + byte_count ? text.size() : body + byte_count);

  std::vector<int> groups(byte_count);
  for (std::size_t i = 0; i < byte_count; ++i) groups[i] = next("adjacency data");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if ((groups[k / 6] >> (5 - k % 6)) & 1) edges.push_back({u, v});
  if (byte_count > 0) {
    const std::size_t pad = byte_count * 6 - bit_count;
    if (pad > 0 && (groups.back() & ((1 << pad) - 1)) != 0)
      throw ParseError("nonzero padding bits", body + byte_count - 1);
  }
  return Graph::from_edges(n, edges);
}

/// One entry of a graph6 stream: either a graph or the error for that line.
struct Graph6Line {
  std::size_t line_number = 0;
  std::string text;
  std::optional<Graph> graph;
  std::string error;
};

/// Reads every non-blank line; ">>" header lines are skipped. Decode
/// failures are returned in place rather than thrown.
inline std::vector<Graph6Line> read_graph6_stream(std::istream& in) {
  std::vector<Graph6Line> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    // A bare ">>graph6<<" or any other ">>" line is a header, not a graph.
    if (line.starts_with(">>") && (!line.starts_with(">>graph6<<") || line.size() == 10)) continue;
    Graph6Line entry;
    entry.line_number = number;
    entry.text = line;
    try {
      entry.graph = graph6_decode(line);
    } catch (const Error& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace mbdom
