#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

enum class FamilyKind { T3, TDoublePrime, TTriplePrime, Path, Star, Explicit };

/// A named forbidden tree.
///
/// The three spiders T3, T'' and T''' share vertex set v0..v_{n-1} with v0
/// joined to v1..v_{n-4}; they differ in how the last three vertices hang:
///   T3   : v1 v_{n-3}, v1 v_{n-2}, v1 v_{n-1}
///   T''  : v1 v_{n-3}, v1 v_{n-2}, v2 v_{n-1}
///   T''' : v1 v_{n-3}, v2 v_{n-2}, v3 v_{n-1}
/// Vertex vi is index i in the realized graph.
class TreeFamily {
 public:
  static TreeFamily t3(int n);
  static TreeFamily tpp(int n);
  static TreeFamily tppp(int n);
  static TreeFamily path(int n);
  /// The star K_{1,s}: s leaves, s + 1 vertices.
  static TreeFamily star(int s);
  /// Any tree; throws DomainError when `tree` is not one.
  static TreeFamily explicit_tree(SimpleGraph tree);

  FamilyKind kind() const { return kind_; }
  /// Number of tree vertices.
  int order() const;
  /// n for the parametric families, s for stars, order for explicit trees.
  int parameter() const { return param_; }
  bool is_spider() const {
    return kind_ == FamilyKind::T3 || kind_ == FamilyKind::TDoublePrime ||
           kind_ == FamilyKind::TTriplePrime;
  }
  /// Round-trippable spec string such as "t3:15" or "star:9".
  std::string name() const;

  const SimpleGraph* explicit_graph() const {
    return explicit_ ? &*explicit_ : nullptr;
  }

 private:
  TreeFamily(FamilyKind kind, int param) : kind_(kind), param_(param) {}

  FamilyKind kind_;
  int param_;
  std::optional<SimpleGraph> explicit_;
};

/// Internal (non-leaf) vertices of a spider tree, the tree edges among them,
/// and the leaves hanging off each one.
struct SkeletonDecomposition {
  std::vector<Vertex> internal;
  std::vector<Edge> edges;
  /// leaves[i] are the leaf vertices adjacent to internal[i].
  std::vector<std::vector<Vertex>> leaves;

  int leaf_demand(std::size_t i) const { return static_cast<int>(leaves[i].size()); }
};

SimpleGraph realize(const TreeFamily& f);
int max_degree_of(const TreeFamily& f);
/// Defined for T3 / T'' / T''' only; other kinds throw DomainError.
SkeletonDecomposition skeleton(const TreeFamily& f);

/// Parses "t3:15", "tpp:15", "tppp:15", "path:7", "star:9" or "file:<path>".
/// Throws DomainError for unknown kinds or out-of-range parameters and
/// std::runtime_error when a referenced file cannot be read.
TreeFamily parse_family_spec(std::string_view spec);

/// Parses a bare kind name ("t3", "tpp", ...) with a separate parameter.
TreeFamily make_family(std::string_view kind, int parameter);

}  // namespace turan
