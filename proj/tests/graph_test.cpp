#include <doctest.h>

#include <random>
#include <stdexcept>

#include "support/reference.hpp"
#include "turan/graph.hpp"

using namespace turan;

TEST_CASE("edges are symmetric and counted once") {
  SimpleGraph g(5);
  g.add_edge(0, 3);
  g.add_edge(3, 0);
  g.add_edge(1, 4);
  CHECK(g.adjacent(3, 0));
  CHECK(g.adjacent(0, 3));
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(3) == 1);
  g.remove_edge(0, 3);
  CHECK_FALSE(g.adjacent(0, 3));
  CHECK(g.edge_count() == 1);
}

TEST_CASE("loops and out-of-range endpoints are rejected") {
  SimpleGraph g(4);
  CHECK_THROWS_AS(g.add_edge(2, 2), DomainError);
  CHECK_THROWS_AS(g.add_edge(0, 4), DomainError);
  CHECK_THROWS_AS(g.add_edge(-1, 1), DomainError);
  CHECK_THROWS_AS(SimpleGraph::from_edges(3, std::vector<Edge>{{0, 3}}), DomainError);
}

TEST_CASE("rows span several words beyond 64 vertices") {
  SimpleGraph g(130);
  g.add_edge(0, 129);
  g.add_edge(64, 65);
  CHECK(g.words_per_row() == 3);
  CHECK(g.adjacent(129, 0));
  CHECK(g.neighbors(0) == std::vector<Vertex>{129});
  CHECK(g.edges() == std::vector<Edge>{{0, 129}, {64, 65}});
}

TEST_CASE("degree sequence, components and trees") {
  const auto g = disjoint_union(complete_graph(3), complete_graph(2));
  CHECK(g.order() == 5);
  CHECK(g.degree_sequence() == std::vector<int>{2, 2, 2, 1, 1});
  CHECK(g.component_ids() == std::vector<int>{0, 0, 0, 1, 1});
  CHECK_FALSE(g.is_connected());
  CHECK(g.max_degree() == 2);

  const auto path = SimpleGraph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(path.is_tree());
  CHECK_FALSE(complete_graph(3).is_tree());
  CHECK(SimpleGraph(1).is_tree());
  CHECK_FALSE(empty_graph(2).is_tree());
}

TEST_CASE("complement is an involution and C5 is self-complementary") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = reference::random_graph(1 + trial % 20, 0.4, rng);
    const auto c = complement(g);
    CHECK(complement(c) == g);
    CHECK(g.edge_count() + c.edge_count() == reference::choose2(g.order()));
  }
  const std::vector<int> one{1};
  const auto c5 = circulant(5, one);
  const std::vector<int> two{2};
  CHECK(complement(c5) == circulant(5, two));
  CHECK(reference::canonical_code(complement(c5)) == reference::canonical_code(c5));
}

TEST_CASE("circulant examples") {
  const std::vector<int> one{1};
  const auto c6 = circulant(6, one);
  CHECK(c6.edge_count() == 6);
  CHECK(c6.degree_sequence() == std::vector<int>(6, 2));

  const std::vector<int> antipodal{1, 3};
  const auto k33ish = circulant(6, antipodal);
  CHECK(k33ish.edge_count() == 9);
  CHECK(k33ish.degree_sequence() == std::vector<int>(6, 3));

  const std::vector<int> all{1, 2, 3};
  CHECK(circulant(7, all) == complete_graph(7));
  const std::vector<int> bad{4};
  CHECK_THROWS_AS(circulant(7, bad), DomainError);
}

TEST_CASE("graph6 known strings") {
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(to_graph6(empty_graph(1)) == "@");
  CHECK(to_graph6(empty_graph(0)) == "?");
  const std::vector<int> one{1};
  CHECK(to_graph6(circulant(5, one)) == "Dhc");
  CHECK(to_graph6(SimpleGraph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}})) == "Ch");
  CHECK(from_graph6("Bw") == complete_graph(3));
  CHECK(from_graph6(">>graph6<<Bw") == complete_graph(3));
}

TEST_CASE("graph6 long length prefix") {
  // Reference strings produced by an independent encoder.
  SimpleGraph g(63);
  g.add_edge(0, 62);
  g.add_edge(1, 2);
  g.add_edge(10, 40);
  const auto s = to_graph6(g);
  CHECK(s.substr(0, 12) == "~??~G???????");
  CHECK(s.size() == 330);
  CHECK(from_graph6(s) == g);

  const std::vector<int> offsets{1, 5};
  const auto c = circulant(70, offsets);
  const auto t = to_graph6(c);
  CHECK(t.substr(0, 10) == "~?@EhEIHCP");
  CHECK(t.size() == 407);
  CHECK(t.substr(t.size() - 5) == "???AG");
}

TEST_CASE("graph6 round trip across both length regimes") {
  std::mt19937_64 rng(2024);
  for (int p = 0; p <= 70; ++p) {
    const auto g = reference::random_graph(p, 0.3, rng);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  const auto big = reference::random_graph(300, 0.05, rng);
  CHECK(from_graph6(to_graph6(big)) == big);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(from_graph6(""), std::runtime_error);
  CHECK_THROWS_AS(from_graph6("B"), std::runtime_error);      // truncated body
  CHECK_THROWS_AS(from_graph6("Bww"), std::runtime_error);    // trailing byte
  CHECK_THROWS_AS(from_graph6("Bx"), std::runtime_error);     // padding bit set
  CHECK_THROWS_AS(from_graph6("B\x7f"), std::runtime_error);  // byte out of range
  CHECK_THROWS_AS(from_graph6("~??"), std::runtime_error);    // truncated size
}

TEST_CASE("edge list round trip and parsing") {
  std::mt19937_64 rng(11);
  for (int p = 1; p < 30; p += 3) {
    const auto g = reference::random_graph(p, 0.3, rng);
    CHECK(from_edge_list(to_edge_list(g)) == g);
  }
  const auto g = from_edge_list("# a comment\n0 2\n\n2 1\n");
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(from_edge_list("# vertices 6\n0 1\n").order() == 6);
  CHECK_THROWS_AS(from_edge_list("0 x\n"), std::runtime_error);
  CHECK_THROWS_AS(from_edge_list("1 1\n"), std::exception);
}
