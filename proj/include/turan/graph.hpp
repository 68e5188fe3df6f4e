#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace turan {

/// Raised when an argument falls outside an operation's documented domain.
/// The message names the violated bound.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the dense vertex set [0, order).
///
/// Adjacency is a symmetric, irreflexive relation stored as one bit-packed row
/// per vertex (64 vertices per word). Rows are exposed as spans so search code
/// can intersect neighbourhoods word-by-word.
class SimpleGraph {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  SimpleGraph() = default;
  explicit SimpleGraph(int order);

  /// Builds a graph from an edge list; duplicate edges are merged.
  /// Throws DomainError on loops or endpoints outside [0, order).
  static SimpleGraph from_edges(int order, std::span<const Edge> edges);

  int order() const { return order_; }
  int words_per_row() const { return words_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (rows_[index(u, v)] >> (v % kWordBits)) & 1U;
  }

  /// Adds edge uv. Throws DomainError on a loop or out-of-range endpoint.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::span<const Word> row(Vertex v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  int degree(Vertex v) const;
  std::int64_t edge_count() const;
  int max_degree() const;
  /// Degrees sorted in descending order.
  std::vector<int> degree_sequence() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  /// Edges (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Component id per vertex; ids are assigned in order of the smallest vertex.
  std::vector<int> component_ids() const;
  bool is_connected() const;
  /// Connected and exactly order - 1 edges (order >= 1).
  bool is_tree() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * words_ + v / kWordBits;
  }
  void check_vertex(Vertex v) const;

  int order_ = 0;
  int words_ = 0;
  std::vector<Word> rows_;
};

SimpleGraph empty_graph(int order);
SimpleGraph complete_graph(int order);
/// Vertices of `b` are shifted to follow those of `a`.
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);
SimpleGraph complement(const SimpleGraph& g);
/// Vertex i is adjacent to (i +- d) mod m for every offset d.
/// Offsets must lie in [1, m/2]; duplicates are ignored.
SimpleGraph circulant(int m, std::span<const int> offsets);

/// Standard graph6 encoding (no ">>graph6<<" header, no newline).
std::string to_graph6(const SimpleGraph& g);
/// Decodes graph6. An optional ">>graph6<<" header is accepted.
/// Throws std::runtime_error on a malformed header, out-of-range byte,
/// truncated body, nonzero padding bits or trailing bytes.
SimpleGraph from_graph6(std::string_view text);

/// Plain edge list: "# vertices <p>" then one sorted "u v" pair per line.
std::string to_edge_list(const SimpleGraph& g);
/// Lines starting with '#' are comments, except the "# vertices <p>" header
/// which fixes the order. Without it the order is max index + 1.
SimpleGraph from_edge_list(std::string_view text);

}  // namespace turan
