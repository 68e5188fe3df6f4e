#pragma once

#include <string>
#include <vector>

#include "turan/formulas.hpp"
#include "turan/graph.hpp"
#include "turan/trees.hpp"

namespace turan {

/// Shape of the graph placed after the prepended K_{n-1} blocks.
enum class BaseKind {
  CliqueUnion,
  NearRegular,
  /// Connected T3-free graph on 2n-9 vertices, n even.
  Spread2nMinus9Even,
  /// Connected T3-free graph on 2n-9 vertices, n odd.
  Spread2nMinus9Odd,
  /// Connected T3-free graph on 2n-8 vertices (four variants by n mod 4).
  Spread2nMinus8,
};

std::string to_string(BaseKind kind);

struct ConstructionRecipe {
  FamilyKind family = FamilyKind::T3;
  Count p = 0;
  Count n = 0;
  BaseKind base = BaseKind::CliqueUnion;
  /// Copies of K_{n-1} occupying the lowest vertex indices.
  Count prepended_cliques = 0;
  /// Order of the base graph (n-1+r unless the residue is handled whole).
  Count base_order = 0;
  Count expected_edges = 0;
  /// Sorted descending, derived from the recipe rather than the graph.
  std::vector<int> expected_degrees;
};

struct Construction {
  SimpleGraph graph;
  ConstructionRecipe recipe;
};

/// k copies of K_{n-1} followed by K_r.
SimpleGraph clique_union(int k, int n, int r);

/// ⌊dm/2⌋ edges on m vertices, every degree d except one vertex of degree
/// d-1 when dm is odd. Circulant on offsets 1..⌊d/2⌋; odd d adds either the
/// antipodal offset (m even) or a near-perfect matching of long chords (m odd).
SimpleGraph near_regular(int m, int d);

/// Cycle v_1..v_m plus chords v_i v_{i+offset} for i = 1..chords.
/// Vertex v_i is index i-1. Used for the sparse graphs whose complements
/// feed the connected constructions.
SimpleGraph cycle_with_chords(int m, int offset, int chords);

/// Connected T3(n)-free graph on 2n-9 vertices with n^2 - 10n + 24 + ⌊n/2⌋
/// edges. Layout: v_0..v_{n-4} are indices 0..n-4, u_1..u_{n-6} follow.
SimpleGraph spread_2n_minus_9_even(int n);
SimpleGraph spread_2n_minus_9_odd(int n);
SimpleGraph spread_2n_minus_9(int n);

/// Connected T3(n)-free graph on 2n-8 vertices with
/// n^2 - 9n + 29 + ⌊(n-37)/4⌋ edges, n >= 37. Layout: v_0..v_{n-4}, then
/// u_1..u_{n-5}.
SimpleGraph spread_2n_minus_8(int n);

/// A graph on p vertices achieving the extremal number of the family.
///
/// When `prefer_connected` is set and a connected construction reaches the
/// formula value, that construction is used even when the clique union ties.
Construction extremal_graph(FamilyKind family, Count p, Count n,
                            bool prefer_connected = false);

/// Whether extremal_graph uses a connected base for these inputs. Without
/// `prefer_connected` that happens only where the connected graph has strictly
/// more edges than the clique union (n >= 28 at r = n-8, n >= 41 at r = n-7).
bool has_connected_base(FamilyKind family, Count p, Count n, bool prefer_connected = false);

}  // namespace turan
