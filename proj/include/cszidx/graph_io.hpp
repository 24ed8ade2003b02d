#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cszidx/graph.hpp"

namespace cszidx {

// graph6: N(n) followed by the upper triangle of the adjacency matrix taken
// column by column, packed into 6-bit groups offset by 63.

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + 63));
    }
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(">>graph6<<")) pos = 10;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", pos);
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6: invalid character '" + std::string(1, text[pos]) + "'",
                       pos);
    }
    ++pos;
    return c - 63;
  };

  std::size_t n = 0;
  if (pos < text.size() && text[pos] == '~') {
    ++pos;
    if (pos < text.size() && text[pos] == '~') {
      throw ParseError("graph6: orders above 258047 are not supported", pos);
    }
    for (int i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::size_t>(next());
  } else {
    n = static_cast<std::size_t>(next());
  }
  if (n > kMaxOrder) {
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds supported maximum",
                     pos);
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t groups = (bits + 5) / 6;
  std::vector<Edge> edges;
  std::size_t bit = 0;
  Vertex i = 0;
  Vertex j = 1;
  for (std::size_t g = 0; g < groups; ++g) {
    const int value = next();
    for (int b = 5; b >= 0; --b, ++bit) {
      const bool set = (value >> b) & 1;
      if (bit >= bits) {
        if (set) throw ParseError("graph6: nonzero padding bits", pos - 1);
        continue;
      }
      if (set) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  if (pos != text.size()) throw ParseError("graph6: trailing characters", pos);
  return Graph::from_edges(n, edges);
}

// Edge-list text: order on the first line, then one "u v" pair per line.

inline std::string to_edge_list_text(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline Graph parse_edge_list_text(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_number = [&](const char* what) -> std::size_t {
    skip_space();
    const std::size_t start = pos;
    std::size_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
      if (value > 0xFFFFFFFFu) throw ParseError(std::string("edge list: ") + what + " too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError(std::string("edge list: expected ") + what, start);
    return value;
  };

  const std::size_t n = read_number("vertex count");
  std::vector<Edge> edges;
  skip_space();
  while (pos < text.size()) {
    const std::size_t at = pos;
    const auto u = read_number("vertex");
    const auto v = read_number("vertex");
    if (u >= n || v >= n || u == v) {
      throw ParseError("edge list: invalid edge (" + std::to_string(u) + "," +
                           std::to_string(v) + ") for order " + std::to_string(n),
                       at);
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    skip_space();
  }
  return Graph::from_edges(n, edges);
}

/// Parses either format. A leading decimal token selects the edge-list format
/// (digits are never valid graph6); otherwise the text is read as one graph6
/// string per non-empty line. Error offsets are relative to the whole text.
inline std::vector<Graph> parse_graphs(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  std::size_t end = first;
  while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
  const std::string_view token = text.substr(first, end - first);
  const bool numeric =
      !token.empty() &&
      std::all_of(token.begin(), token.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (numeric) return {parse_edge_list_text(text)};

  std::vector<Graph> graphs;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
      line.remove_suffix(1);
    }
    if (!line.empty()) {
      try {
        graphs.push_back(from_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), line_start + e.offset());
      }
    }
    line_start = line_end + 1;
  }
  if (graphs.empty()) throw ParseError("no graph found in input", 0);
  return graphs;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<Graph> read_graph_file(const std::string& path) {
  return parse_graphs(read_text_file(path));
}

}  // namespace cszidx
