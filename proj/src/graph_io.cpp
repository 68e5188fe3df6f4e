#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>

#include "turan/graph.hpp"

namespace turan {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, std::int64_t p) {
  if (p <= 62) {
    out.push_back(static_cast<char>(kBias + p));
    return;
  }
  const int groups = p <= 258047 ? 3 : 6;
  out.push_back(static_cast<char>(126));
  if (groups == 6) out.push_back(static_cast<char>(126));
  for (int g = groups - 1; g >= 0; --g) {
    out.push_back(static_cast<char>(kBias + ((p >> (6 * g)) & 0x3F)));
  }
}

int sextet(std::string_view s, std::size_t pos) {
  const int c = static_cast<unsigned char>(s[pos]);
  if (c < kBias || c > 126) {
    throw std::runtime_error("graph6: byte " + std::to_string(c) +
                             " at offset " + std::to_string(pos) +
                             " outside [63, 126]");
  }
  return c - kBias;
}

}  // namespace

std::string to_graph6(const SimpleGraph& g) {
  std::string out;
  const int p = g.order();
  append_size(out, p);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < p; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
  return out;
}

SimpleGraph from_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw std::runtime_error("graph6: empty input");

  std::size_t pos = 0;
  std::int64_t p = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    p = sextet(text, 0);
    pos = 1;
  } else {
    int groups = 3;
    pos = 1;
    if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
      groups = 6;
      pos = 2;
    }
    if (text.size() < pos + groups) {
      throw std::runtime_error("graph6: truncated size header");
    }
    for (int g = 0; g < groups; ++g) p = (p << 6) | sextet(text, pos++);
    const bool canonical = groups == 3 ? p >= 63 : p > 258047;
    if (!canonical) throw std::runtime_error("graph6: non-canonical size header");
    if (p > (std::int64_t{1} << 20)) {
      throw std::runtime_error("graph6: order " + std::to_string(p) +
                               " exceeds supported maximum");
    }
  }

  const std::int64_t bits = p * (p - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() < pos + body) throw std::runtime_error("graph6: truncated body");
  if (text.size() > pos + body) throw std::runtime_error("graph6: trailing bytes");

  SimpleGraph g(static_cast<int>(p));
  std::size_t next = pos;
  int word = 0;
  int shift = -1;
  auto next_bit = [&] {
    if (shift < 0) {
      word = sextet(text, next++);
      shift = 5;
    }
    return (word >> shift--) & 1;
  };
  for (Vertex j = 1; j < p; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (next_bit()) g.add_edge(i, j);
    }
  }
  while (shift >= 0) {
    if ((word >> shift--) & 1) throw std::runtime_error("graph6: nonzero padding bits");
  }
  return g;
}

std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream out;
  out << "# vertices " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

SimpleGraph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int declared = -1;
  int max_index = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first.starts_with('#')) {
      std::string word;
      int p = 0;
      std::istringstream header(line.substr(line.find('#') + 1));
      if (header >> word && word == "vertices" && header >> p) declared = p;
      continue;
    }
    int u = 0;
    int v = 0;
    std::string rest;
    const auto [ptr, ec] = std::from_chars(first.data(), first.data() + first.size(), u);
    if (ec != std::errc{} || ptr != first.data() + first.size() || !(fields >> v) ||
        (fields >> rest)) {
      throw std::runtime_error("edge list: malformed line " + std::to_string(line_no));
    }
    if (u < 0 || v < 0) {
      throw std::runtime_error("edge list: negative vertex on line " +
                               std::to_string(line_no));
    }
    edges.emplace_back(u, v);
    max_index = std::max({max_index, u, v});
  }
  const int order = declared >= 0 ? declared : max_index + 1;
  if (max_index >= order) {
    throw std::runtime_error("edge list: vertex " + std::to_string(max_index) +
                             " exceeds declared order " + std::to_string(order));
  }
  try {
    return SimpleGraph::from_edges(order, edges);
  } catch (const DomainError& e) {
    throw std::runtime_error(std::string("edge list: ") + e.what());
  }
}

}  // namespace turan
