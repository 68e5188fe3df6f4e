#include <doctest.h>

#include <chrono>

#include "support/reference.hpp"
#include "turan/constructions.hpp"
#include "turan/containment.hpp"

using namespace turan;

namespace {

std::vector<int> multiset(std::initializer_list<std::pair<int, int>> counts) {
  std::vector<int> out;
  for (auto [times, degree] : counts) out.insert(out.end(), times, degree);
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

TEST_CASE("clique union") {
  const auto g = clique_union(1, 15, 6);
  CHECK(g.order() == 20);
  CHECK(g.edge_count() == 91 + 15);
  CHECK_FALSE(contains_tree(g, TreeFamily::t3(15)));
  CHECK(clique_union(2, 10, 0).edge_count() == 72);
}

TEST_CASE("near regular degrees") {
  for (int m = 2; m <= 40; ++m) {
    for (int d = 0; d < m; ++d) {
      const auto g = near_regular(m, d);
      CAPTURE(m);
      CAPTURE(d);
      REQUIRE(g.edge_count() == static_cast<std::int64_t>(d) * m / 2);
      const auto seq = g.degree_sequence();
      REQUIRE(seq.front() == d);
      const int low = static_cast<int>(std::count(seq.begin(), seq.end(), d - 1));
      REQUIRE(low == (d * m) % 2);
    }
  }
}

TEST_CASE("near regular graph avoids a star of larger degree") {
  CHECK_FALSE(contains_tree(near_regular(20, 10), TreeFamily::star(11)));
}

TEST_CASE("cycle with chords") {
  const auto g = cycle_with_chords(8, 4, 2);
  CHECK(g.edge_count() == 10);
  CHECK(g.adjacent(0, 4));
  CHECK(g.adjacent(1, 5));
  CHECK_FALSE(g.adjacent(2, 6));
}

TEST_CASE("connected graph on 2n-9 vertices, even n") {
  const auto start = std::chrono::steady_clock::now();
  const auto g = spread_2n_minus_9_even(26);
  CHECK(g.order() == 43);
  CHECK(g.edge_count() == 453);
  CHECK(g.is_connected());
  CHECK(g.degree_sequence() == multiset({{3, 22}, {40, 21}}));
  CHECK_FALSE(contains_tree(g, TreeFamily::t3(26)));
  const auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(elapsed < std::chrono::seconds(10));
}

TEST_CASE("connected graph on 2n-9 vertices, odd n") {
  const auto g = spread_2n_minus_9_odd(27);
  CHECK(g.order() == 45);
  CHECK(g.edge_count() == 496);
  CHECK(g.is_connected());
  CHECK(g.degree_sequence() == multiset({{3, 23}, {41, 22}, {1, 21}}));
  CHECK_FALSE(contains_tree(g, TreeFamily::t3(27)));
  CHECK_THROWS_AS(spread_2n_minus_9_odd(26), DomainError);
}

TEST_CASE("connected graph on 2n-8 vertices") {
  for (int n = 37; n <= 44; ++n) {
    const auto g = spread_2n_minus_8(n);
    CAPTURE(n);
    const Count expected = static_cast<Count>(n) * n - 9 * n + 29 + std::max(0, (n - 37) / 4);
    CHECK(g.order() == 2 * n - 8);
    CHECK(g.edge_count() == expected);
    CHECK(g.is_connected());
    const int m = n % 4 == 1 ? (n - 5) / 2 : n % 4 == 2 ? (n - 4) / 2 : n % 4 == 3 ? (n - 3) / 2 : (n - 2) / 2;
    CHECK(g.degree_sequence() == multiset({{n - 3 - m, n - 4}, {m + n - 5, n - 5}}));
    CHECK_FALSE(contains_tree(g, TreeFamily::t3(n)));
  }
  CHECK(spread_2n_minus_8(37).edge_count() == 1065);
  CHECK(spread_2n_minus_8(38).edge_count() == 1131);
  CHECK(spread_2n_minus_8(40).edge_count() == 1269);
}

TEST_CASE("extremal graph examples") {
  const auto a = extremal_graph(FamilyKind::T3, 23, 15);
  CHECK(a.graph.edge_count() == 127);
  CHECK(a.recipe.base == BaseKind::CliqueUnion);

  const auto b = extremal_graph(FamilyKind::T3, 21, 15);
  CHECK(b.graph.edge_count() == 112);
  CHECK(b.graph.degree_sequence() == multiset({{14, 13}, {7, 6}}));

  const auto c = extremal_graph(FamilyKind::TDoublePrime, 42, 30);
  CHECK(c.graph.edge_count() == 525);
  CHECK(c.recipe.base == BaseKind::NearRegular);

  const auto d = extremal_graph(FamilyKind::T3, 48, 15);
  CHECK(d.graph.edge_count() == 288);
  CHECK(d.recipe.prepended_cliques == 2);

  const auto e = extremal_graph(FamilyKind::T3, 43, 26, true);
  CHECK(e.recipe.base == BaseKind::Spread2nMinus9Even);
  CHECK(e.graph.edge_count() == 453);
  CHECK(extremal_graph(FamilyKind::T3, 43, 26).recipe.base == BaseKind::CliqueUnion);
}

TEST_CASE("connected base selection by tie") {
  CHECK_FALSE(has_connected_base(FamilyKind::T3, 43, 26));
  CHECK_FALSE(has_connected_base(FamilyKind::T3, 45, 27));
  CHECK(has_connected_base(FamilyKind::T3, 47, 28));
  CHECK_FALSE(has_connected_base(FamilyKind::T3, 72, 40));
  CHECK(has_connected_base(FamilyKind::T3, 74, 41));
  CHECK(has_connected_base(FamilyKind::T3, 72, 40, true));
  CHECK_FALSE(has_connected_base(FamilyKind::TDoublePrime, 47, 28, true));
}

TEST_CASE("construction edge counts match the formulas") {
  for (auto family : {FamilyKind::T3, FamilyKind::TDoublePrime, FamilyKind::TTriplePrime}) {
    const Count n_min = family == FamilyKind::T3 ? 15 : 10;
    for (Count n = n_min; n <= 42; ++n) {
      for (Count p = n; p <= 3 * n; ++p) {
        const auto c = extremal_graph(family, p, n);
        CAPTURE(n);
        CAPTURE(p);
        REQUIRE(c.graph.order() == p);
        REQUIRE(c.graph.edge_count() == extremal_number(family, p, n).value);
        REQUIRE(c.graph.degree_sequence() == c.recipe.expected_degrees);
      }
    }
  }
}
