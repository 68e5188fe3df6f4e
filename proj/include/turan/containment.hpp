#pragma once

#include <optional>
#include <vector>

#include "turan/graph.hpp"
#include "turan/trees.hpp"

namespace turan {

/// image[t] is the host vertex carrying tree vertex t.
struct EmbeddingWitness {
  std::vector<Vertex> image;
  friend bool operator==(const EmbeddingWitness&, const EmbeddingWitness&) = default;
};

/// Decides whether the family's tree is a (not necessarily induced) subgraph
/// of `host`. Spider families go through skeleton placement plus leaf
/// matching; everything else through generic_backtrack. Deterministic.
std::optional<EmbeddingWitness> contains_tree(const SimpleGraph& host, const TreeFamily& f);

/// Skeleton placement + bipartite leaf matching. Spider families only.
std::optional<EmbeddingWitness> skeleton_search(const SimpleGraph& host, const TreeFamily& f);

/// Exact backtracking embedder for an arbitrary tree. Throws DomainError when
/// `tree` is not a tree.
std::optional<EmbeddingWitness> generic_backtrack(const SimpleGraph& host, const SimpleGraph& tree);

/// Embeddings that map some tree edge onto the host edge {u, v}. Used for
/// incremental checks after an edge insertion: if the host minus uv was
/// tree-free, the host contains the tree iff this finds a witness.
std::optional<EmbeddingWitness> embed_through_edge(const SimpleGraph& host,
                                                   const SimpleGraph& tree, Vertex u, Vertex v);

/// Injective and edge-preserving. Independent of every search routine.
bool verify_witness(const SimpleGraph& host, const SimpleGraph& tree, const EmbeddingWitness& w);

}  // namespace turan
