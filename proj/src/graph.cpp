#include "turan/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <string>

namespace turan {

SimpleGraph::SimpleGraph(int order) {
  if (order < 0) throw DomainError("graph order must be non-negative");
  order_ = order;
  words_ = (order + kWordBits - 1) / kWordBits;
  rows_.assign(static_cast<std::size_t>(order) * words_, 0);
}

SimpleGraph SimpleGraph::from_edges(int order, std::span<const Edge> edges) {
  SimpleGraph g(order);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void SimpleGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order_) {
    throw DomainError("vertex " + std::to_string(v) + " outside [0, " +
                      std::to_string(order_) + ")");
  }
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
  rows_[index(u, v)] |= Word{1} << (v % kWordBits);
  rows_[index(v, u)] |= Word{1} << (u % kWordBits);
}

void SimpleGraph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_[index(u, v)] &= ~(Word{1} << (v % kWordBits));
  rows_[index(v, u)] &= ~(Word{1} << (u % kWordBits));
}

int SimpleGraph::degree(Vertex v) const {
  int d = 0;
  for (Word w : row(v)) d += std::popcount(w);
  return d;
}

std::int64_t SimpleGraph::edge_count() const {
  std::int64_t twice = 0;
  for (Word w : rows_) twice += std::popcount(w);
  return twice / 2;
}

int SimpleGraph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < order_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<int> SimpleGraph::degree_sequence() const {
  std::vector<int> seq(order_);
  for (Vertex v = 0; v < order_; ++v) seq[v] = degree(v);
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

std::vector<Vertex> SimpleGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    for (Word bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * kWordBits + std::countr_zero(bits));
    }
  }
  return out;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> SimpleGraph::component_ids() const {
  std::vector<int> comp(order_, -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex s = 0; s < order_; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : neighbors(u)) {
        if (comp[v] == -1) {
          comp[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool SimpleGraph::is_connected() const {
  auto comp = component_ids();
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

bool SimpleGraph::is_tree() const {
  return order_ >= 1 && edge_count() == order_ - 1 && is_connected();
}

SimpleGraph empty_graph(int order) { return SimpleGraph(order); }

SimpleGraph complete_graph(int order) {
  SimpleGraph g(order);
  for (Vertex u = 0; u < order; ++u) {
    for (Vertex v = u + 1; v < order; ++v) g.add_edge(u, v);
  }
  return g;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph g(a.order() + b.order());
  for (const auto& [u, v] : a.edges()) g.add_edge(u, v);
  const int shift = a.order();
  for (const auto& [u, v] : b.edges()) g.add_edge(u + shift, v + shift);
  return g;
}

SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph h(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

SimpleGraph circulant(int m, std::span<const int> offsets) {
  if (m < 1) throw DomainError("circulant requires m >= 1");
  SimpleGraph g(m);
  for (int d : offsets) {
    if (d < 1 || d > m / 2) {
      throw DomainError("circulant offset " + std::to_string(d) +
                        " outside [1, " + std::to_string(m / 2) + "]");
    }
    for (Vertex i = 0; i < m; ++i) g.add_edge(i, (i + d) % m);
  }
  return g;
}

}  // namespace turan
