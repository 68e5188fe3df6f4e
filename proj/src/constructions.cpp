#include "turan/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace turan {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

void add_clique(SimpleGraph& g, Vertex first, int size) {
  for (Vertex a = first; a < first + size; ++a) {
    for (Vertex b = a + 1; b < first + size; ++b) g.add_edge(a, b);
  }
}

void copy_shifted(SimpleGraph& into, const SimpleGraph& from, Vertex shift) {
  for (const auto& [a, b] : from.edges()) into.add_edge(a + shift, b + shift);
}

// Common frame of the connected constructions:
//   v_0 (index 0) joined to every v_i;
//   low block v_1..v_m carrying `low` (indices 1..m);
//   top block v_{m+1}..v_{n-4}: a clique, complete to the low block;
//   u_1..u_t (indices n-3..) forming K_t;
//   `links` lists the (i, j) pairs with v_i ~ u_j, both 1-based.
using Links = std::vector<std::pair<int, int>>;

SimpleGraph assemble_spread(int n, const SimpleGraph& low, int u_count, const Links& links) {
  const int m = low.order();
  const int top_last = n - 4;
  const Vertex u_base = n - 3;  // u_j has index u_base + j - 1
  SimpleGraph g(n - 3 + u_count);

  for (Vertex v = 1; v <= top_last; ++v) g.add_edge(0, v);
  copy_shifted(g, low, 1);
  for (Vertex t = m + 1; t <= top_last; ++t) {
    for (Vertex v = 1; v < t; ++v) g.add_edge(t, v);
  }
  add_clique(g, u_base, u_count);
  for (auto [i, j] : links) g.add_edge(i, u_base + j - 1);
  return g;
}

// v_{2s-1} and v_{2s} both joined to u_{2s-1} and u_{2s} for s = 1..pairs,
// then v_i ~ u_i for the remaining i <= m.
Links shared_pairs(int pairs, int m) {
  Links out;
  for (int s = 1; s <= pairs; ++s) {
    for (int i : {2 * s - 1, 2 * s}) {
      for (int j : {2 * s - 1, 2 * s}) out.emplace_back(i, j);
    }
  }
  for (int i = 2 * pairs + 1; i <= m; ++i) out.emplace_back(i, i);
  return out;
}

// v_1..v_doubles take two fresh u's each, the rest of v_1..v_m one each.
Links private_runs(int doubles, int m) {
  Links out;
  int j = 1;
  for (int i = 1; i <= m; ++i) {
    out.emplace_back(i, j++);
    if (i <= doubles) out.emplace_back(i, j++);
  }
  return out;
}

std::vector<int> repeat(int count, int value) { return std::vector<int>(count, value); }

void append(std::vector<int>& into, int count, int value) {
  into.insert(into.end(), count, value);
}

// Size of the low block in the 2n-8 construction, by n mod 4.
int low_block_2n_minus_8(int n) {
  switch (n % 4) {
    case 1: return (n - 5) / 2;
    case 2: return (n - 4) / 2;
    case 3: return (n - 3) / 2;
    default: return (n - 2) / 2;
  }
}

}  // namespace

std::string to_string(BaseKind kind) {
  switch (kind) {
    case BaseKind::CliqueUnion: return "clique-union";
    case BaseKind::NearRegular: return "near-regular";
    case BaseKind::Spread2nMinus9Even: return "spread-2n-9-even";
    case BaseKind::Spread2nMinus9Odd: return "spread-2n-9-odd";
    case BaseKind::Spread2nMinus8: return "spread-2n-8";
  }
  return {};
}

SimpleGraph clique_union(int k, int n, int r) {
  require(k >= 0, "clique_union requires k >= 0");
  require(n >= 2, "clique_union requires n >= 2");
  require(r >= 0 && r <= n - 2, "clique_union requires 0 <= r <= n-2");
  SimpleGraph g(k * (n - 1) + r);
  for (int c = 0; c < k; ++c) add_clique(g, c * (n - 1), n - 1);
  add_clique(g, k * (n - 1), r);
  return g;
}

SimpleGraph near_regular(int m, int d) {
  require(m >= 1, "near_regular requires m >= 1");
  require(d >= 0 && d < m, "near_regular requires 0 <= d < m (got m = " +
                               std::to_string(m) + ", d = " + std::to_string(d) + ")");
  std::vector<int> offsets(d / 2);
  std::iota(offsets.begin(), offsets.end(), 1);
  if (d % 2 == 1 && m % 2 == 0) offsets.push_back(m / 2);
  SimpleGraph g = circulant(m, offsets);
  if (d % 2 == 1 && m % 2 == 1) {
    // Chords of length (m-1)/2 exceed every circulant offset since d <= m-2.
    for (Vertex i = 0; i <= (m - 3) / 2; ++i) g.add_edge(i, (i + (m + 1) / 2) % m);
  }
  return g;
}

SimpleGraph cycle_with_chords(int m, int offset, int chords) {
  require(m >= 3, "cycle_with_chords requires m >= 3");
  require(offset >= 2 && chords >= 0 && chords + offset <= m,
          "cycle_with_chords: chord range out of bounds");
  SimpleGraph g(m);
  for (Vertex i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
  for (Vertex i = 0; i < chords; ++i) g.add_edge(i, i + offset);
  return g;
}

SimpleGraph spread_2n_minus_9_even(int n) {
  require(n % 2 == 0 && n >= 26, "spread_2n_minus_9_even requires even n >= 26");
  return assemble_spread(n, near_regular(n - 6, n - 10), n - 6,
                         shared_pairs((n - 6) / 2, n - 6));
}

SimpleGraph spread_2n_minus_9_odd(int n) {
  require(n % 2 == 1 && n >= 27, "spread_2n_minus_9_odd requires odd n >= 27");
  const int half = (n - 7) / 2;
  const SimpleGraph sparse = cycle_with_chords(n - 6, half, half);
  return assemble_spread(n, complement(sparse), n - 6, shared_pairs((n - 7) / 2, n - 6));
}

SimpleGraph spread_2n_minus_9(int n) {
  return n % 2 == 0 ? spread_2n_minus_9_even(n) : spread_2n_minus_9_odd(n);
}

SimpleGraph spread_2n_minus_8(int n) {
  require(n >= 37, "spread_2n_minus_8 requires n >= 37");
  const int m = low_block_2n_minus_8(n);
  if (n % 4 == 1) {
    return assemble_spread(n, near_regular(m, (n - 13) / 2), n - 5, private_runs(m, m));
  }
  int offset = 0;
  switch (n % 4) {
    case 2: offset = (n - 6) / 4; break;
    case 3: offset = (n - 7) / 4; break;
    default: offset = (n - 8) / 4; break;
  }
  const SimpleGraph sparse = cycle_with_chords(m, offset, offset);
  return assemble_spread(n, complement(sparse), n - 5, private_runs(2 * offset, m));
}

bool has_connected_base(FamilyKind family, Count p, Count n, bool prefer_connected) {
  if (family != FamilyKind::T3 || n < 15 || p < n) return false;
  const Count r = decompose(p, n).r;
  if (r == n - 8) return n >= 26 && (n / 2 > 13 || prefer_connected);
  if (r == n - 7) return n >= 37 && ((n - 37) / 4 > 0 || prefer_connected);
  return false;
}

Construction extremal_graph(FamilyKind family, Count p, Count n, bool prefer_connected) {
  ExtremalValue target;
  switch (family) {
    case FamilyKind::T3: target = ex_t3(p, n); break;
    case FamilyKind::TDoublePrime: target = ex_tpp(p, n); break;
    case FamilyKind::TTriplePrime: target = ex_tppp(p, n); break;
    default: throw DomainError("extremal_graph supports t3/tpp/tppp only");
  }
  const auto [k, r] = decompose(p, n);
  const int ni = static_cast<int>(n);
  const int ri = static_cast<int>(r);
  const int base_order = ni - 1 + ri;

  ConstructionRecipe recipe;
  recipe.family = family;
  recipe.p = p;
  recipe.n = n;
  recipe.prepended_cliques = k - 1;
  recipe.base_order = base_order;
  recipe.expected_edges = target.value;

  SimpleGraph base;
  std::vector<int> degrees;
  const int t3_branch = family == FamilyKind::T3 ? t3_case(r, n) : 2;
  const bool connected = has_connected_base(family, p, n, prefer_connected);
  if (connected && t3_branch == 4) {
    recipe.base = n % 2 == 0 ? BaseKind::Spread2nMinus9Even : BaseKind::Spread2nMinus9Odd;
    base = spread_2n_minus_9(ni);
    degrees = repeat(3, ni - 4);
    if (n % 2 == 0) {
      append(degrees, 2 * ni - 12, ni - 5);
    } else {
      append(degrees, 2 * ni - 13, ni - 5);
      append(degrees, 1, ni - 6);
    }
  } else if (connected && t3_branch == 5) {
    recipe.base = BaseKind::Spread2nMinus8;
    base = spread_2n_minus_8(ni);
    const int m = low_block_2n_minus_8(ni);
    degrees = repeat(ni - 3 - m, ni - 4);
    append(degrees, m + ni - 5, ni - 5);
  } else {
    const bool regular_wins =
        t3_branch == 2 && (n - 5) * base_order / 2 > binomial2(n - 1) + binomial2(r);
    if (regular_wins) {
      recipe.base = BaseKind::NearRegular;
      base = near_regular(base_order, ni - 5);
      degrees = repeat(base_order, ni - 5);
      if ((ni - 5) * base_order % 2 == 1) degrees.back() = ni - 6;
    } else {
      recipe.base = BaseKind::CliqueUnion;
      base = clique_union(1, ni, ri);
      degrees = repeat(ni - 1, ni - 2);
      append(degrees, ri, ri - 1);
    }
  }

  SimpleGraph g(static_cast<int>(p));
  for (Count c = 0; c + 1 < k; ++c) add_clique(g, static_cast<Vertex>(c * (n - 1)), ni - 1);
  copy_shifted(g, base, static_cast<Vertex>((k - 1) * (n - 1)));

  append(degrees, static_cast<int>((k - 1) * (n - 1)), ni - 2);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  recipe.expected_degrees = std::move(degrees);
  return {std::move(g), std::move(recipe)};
}

}  // namespace turan
