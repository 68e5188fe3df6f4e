#include "turan/containment.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "turan/matching.hpp"

namespace turan {
namespace {

using Word = SimpleGraph::Word;
constexpr int kBits = SimpleGraph::kWordBits;

class VertexSet {
 public:
  explicit VertexSet(int order) : words_((order + kBits - 1) / kBits, 0) {}
  bool test(Vertex v) const { return (words_[v / kBits] >> (v % kBits)) & 1U; }
  void set(Vertex v) { words_[v / kBits] |= Word{1} << (v % kBits); }
  void reset(Vertex v) { words_[v / kBits] &= ~(Word{1} << (v % kBits)); }
  const std::vector<Word>& words() const { return words_; }

 private:
  std::vector<Word> words_;
};

/// Neighbours of `v` outside `used`, in increasing order.
std::vector<Vertex> free_neighbors(const SimpleGraph& g, Vertex v, const VertexSet& used) {
  std::vector<Vertex> out;
  const auto row = g.row(v);
  const auto& mask = used.words();
  for (std::size_t w = 0; w < row.size(); ++w) {
    for (Word bits = row[w] & ~mask[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<Vertex>(w * kBits + std::countr_zero(bits)));
    }
  }
  return out;
}

int free_degree(const SimpleGraph& g, Vertex v, const VertexSet& used) {
  const auto row = g.row(v);
  const auto& mask = used.words();
  int d = 0;
  for (std::size_t w = 0; w < row.size(); ++w) d += std::popcount(row[w] & ~mask[w]);
  return d;
}

/// Host vertices ordered by descending degree (ties by index).
std::vector<Vertex> by_degree(const SimpleGraph& g, int min_degree) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= min_degree) out.push_back(v);
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return out;
}

// ---------------------------------------------------------------------------
// Generic backtracking.

/// Placement order for a tree grown from one or two seed vertices: internal
/// vertices in BFS order, then leaves grouped by parent so that sibling
/// leaves can be assigned as combinations (increasing host index).
struct Plan {
  std::vector<Vertex> order;
  std::vector<Vertex> parent;      // by tree vertex; -1 for seeds
  std::vector<int> pending;        // by position: tree neighbours placed later
  std::vector<int> degree;         // by position
  std::vector<bool> after_sibling; // by position: leaf following a sibling leaf
};

Plan make_plan(const SimpleGraph& tree, std::span<const Vertex> seeds) {
  const int n = tree.order();
  Plan plan;
  plan.parent.assign(n, -1);
  std::vector<bool> seen(n, false);
  std::vector<Vertex> bfs;
  std::deque<Vertex> queue;
  for (Vertex s : seeds) {
    seen[s] = true;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    bfs.push_back(x);
    for (Vertex y : tree.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = true;
        plan.parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  const auto is_seed = [&](Vertex x) { return std::find(seeds.begin(), seeds.end(), x) != seeds.end(); };
  plan.order.assign(seeds.begin(), seeds.end());
  for (Vertex x : bfs) {
    if (!is_seed(x) && tree.degree(x) >= 2) plan.order.push_back(x);
  }
  std::vector<Vertex> leaves;
  for (Vertex x : bfs) {
    if (!is_seed(x) && tree.degree(x) < 2) leaves.push_back(x);
  }
  std::stable_sort(leaves.begin(), leaves.end(),
                   [&](Vertex a, Vertex b) { return plan.parent[a] < plan.parent[b]; });
  plan.order.insert(plan.order.end(), leaves.begin(), leaves.end());

  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[plan.order[i]] = i;
  plan.pending.assign(n, 0);
  plan.degree.assign(n, 0);
  plan.after_sibling.assign(n, false);
  for (int i = 0; i < n; ++i) {
    const Vertex x = plan.order[i];
    plan.degree[i] = tree.degree(x);
    // Seeds are pinned together, so a seed only waits on non-seed neighbours.
    const int after = i < static_cast<int>(seeds.size()) ? static_cast<int>(seeds.size()) - 1 : i;
    for (Vertex y : tree.neighbors(x)) plan.pending[i] += position[y] > after;
    if (i > 0 && tree.degree(x) < 2 && plan.parent[x] >= 0) {
      const Vertex prev = plan.order[i - 1];
      plan.after_sibling[i] = !is_seed(prev) && tree.degree(prev) < 2 &&
                              plan.parent[prev] == plan.parent[x];
    }
  }
  return plan;
}

class Backtracker {
 public:
  Backtracker(const SimpleGraph& host, const Plan& plan)
      : host_(host), plan_(plan), image_(plan.order.size(), -1), used_(host.order()) {}

  /// Pins the first `seeds.size()` positions; returns false if inconsistent.
  bool seed(std::span<const Vertex> hosts) {
    for (std::size_t i = 0; i < hosts.size(); ++i) {
      const Vertex c = hosts[i];
      if (used_.test(c) || host_.degree(c) < plan_.degree[i]) return false;
      image_[plan_.order[i]] = c;
      used_.set(c);
    }
    for (std::size_t i = 0; i < hosts.size(); ++i) {
      if (free_degree(host_, hosts[i], used_) < plan_.pending[i]) return false;
    }
    return true;
  }

  bool run(std::size_t from) { return extend(from); }

  EmbeddingWitness witness() const { return {image_}; }

 private:
  bool extend(std::size_t pos) {
    if (pos == plan_.order.size()) return true;
    const Vertex x = plan_.order[pos];
    const Vertex anchor = image_[plan_.parent[x]];
    const Vertex floor = plan_.after_sibling[pos] ? image_[plan_.order[pos - 1]] : -1;
    for (Vertex c : free_neighbors(host_, anchor, used_)) {
      if (c <= floor || host_.degree(c) < plan_.degree[pos]) continue;
      used_.set(c);
      image_[x] = c;
      if (free_degree(host_, c, used_) >= plan_.pending[pos] && extend(pos + 1)) return true;
      used_.reset(c);
    }
    image_[x] = -1;
    return false;
  }

  const SimpleGraph& host_;
  const Plan& plan_;
  std::vector<Vertex> image_;
  VertexSet used_;
};

void require_tree(const SimpleGraph& tree) {
  if (!tree.is_tree()) throw DomainError("pattern graph is not a tree");
}

// ---------------------------------------------------------------------------
// Skeleton search.

class SkeletonSearch {
 public:
  SkeletonSearch(const SimpleGraph& host, const SimpleGraph& tree, SkeletonDecomposition sk)
      : host_(host), tree_(tree), sk_(std::move(sk)), used_(host.order()) {
    // Root the skeleton at its first internal vertex (v_0) and order by BFS.
    const std::size_t m = sk_.internal.size();
    std::vector<std::vector<std::size_t>> adj(m);
    const auto slot = [&](Vertex v) {
      return static_cast<std::size_t>(
          std::find(sk_.internal.begin(), sk_.internal.end(), v) - sk_.internal.begin());
    };
    for (const auto& [a, b] : sk_.edges) {
      adj[slot(a)].push_back(slot(b));
      adj[slot(b)].push_back(slot(a));
    }
    parent_.assign(m, kNone);
    std::vector<bool> seen(m, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      order_.push_back(i);
      for (std::size_t j : adj[i]) {
        if (!seen[j]) {
          seen[j] = true;
          parent_[j] = i;
          queue.push_back(j);
        }
      }
    }
    // Skeleton leaves with the same parent and leaf demand are interchangeable.
    twin_of_previous_.assign(m, false);
    for (std::size_t k = 1; k < m; ++k) {
      const std::size_t a = order_[k - 1];
      const std::size_t b = order_[k];
      twin_of_previous_[k] = parent_[a] == parent_[b] && adj[a].size() == 1 &&
                             adj[b].size() == 1 && sk_.leaf_demand(a) == sk_.leaf_demand(b);
    }
    pending_.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      pending_[i] = sk_.leaf_demand(i) + static_cast<int>(adj[i].size()) - (i == 0 ? 0 : 1);
    }
    image_.assign(m, -1);
  }

  std::optional<EmbeddingWitness> run() {
    if (tree_.order() > host_.order()) return std::nullopt;
    const auto comp = host_.component_ids();
    std::vector<int> comp_size(host_.order(), 0);
    for (int c : comp) ++comp_size[c];
    const int root_degree = tree_.degree(sk_.internal[order_[0]]);
    for (Vertex c : by_degree(host_, root_degree)) {
      if (comp_size[comp[c]] < tree_.order()) continue;
      if (place(0, c)) return witness_;
    }
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool place(std::size_t k, Vertex c) {
    const std::size_t i = order_[k];
    image_[i] = c;
    used_.set(c);
    bool found = false;
    if (free_degree(host_, c, used_) >= pending_[i]) {
      if (k + 1 == order_.size()) {
        found = match_leaves();
      } else {
        const std::size_t next = order_[k + 1];
        const Vertex floor = twin_of_previous_[k + 1] ? image_[order_[k]] : -1;
        const int need = tree_.degree(sk_.internal[next]);
        for (Vertex d : free_neighbors(host_, image_[parent_[next]], used_)) {
          if (d <= floor || host_.degree(d) < need) continue;
          if (place(k + 1, d)) {
            found = true;
            break;
          }
        }
      }
    }
    used_.reset(c);
    image_[i] = -1;
    return found;
  }

  bool match_leaves() {
    std::vector<std::pair<std::size_t, Vertex>> slots;  // (internal index, tree leaf)
    for (std::size_t i = 0; i < sk_.internal.size(); ++i) {
      for (Vertex leaf : sk_.leaves[i]) slots.emplace_back(i, leaf);
    }
    BipartiteMatcher matcher(static_cast<int>(slots.size()), host_.order());
    for (std::size_t s = 0; s < slots.size(); ++s) {
      for (Vertex h : free_neighbors(host_, image_[slots[s].first], used_)) {
        matcher.add_edge(static_cast<int>(s), h);
      }
    }
    if (matcher.solve() != static_cast<int>(slots.size())) return false;
    EmbeddingWitness w{std::vector<Vertex>(tree_.order(), -1)};
    for (std::size_t i = 0; i < sk_.internal.size(); ++i) w.image[sk_.internal[i]] = image_[i];
    for (std::size_t s = 0; s < slots.size(); ++s) {
      w.image[slots[s].second] = matcher.mate_of_left(static_cast<int>(s));
    }
    witness_ = std::move(w);
    return true;
  }

  const SimpleGraph& host_;
  const SimpleGraph& tree_;
  SkeletonDecomposition sk_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> parent_;
  std::vector<bool> twin_of_previous_;
  std::vector<int> pending_;
  std::vector<Vertex> image_;
  VertexSet used_;
  EmbeddingWitness witness_;
};

}  // namespace

std::optional<EmbeddingWitness> generic_backtrack(const SimpleGraph& host, const SimpleGraph& tree) {
  require_tree(tree);
  if (tree.order() > host.order()) return std::nullopt;
  if (tree.max_degree() > host.max_degree()) return std::nullopt;
  Vertex root = 0;
  for (Vertex v = 1; v < tree.order(); ++v) {
    if (tree.degree(v) > tree.degree(root)) root = v;
  }
  const std::array<Vertex, 1> seeds{root};
  const Plan plan = make_plan(tree, seeds);
  for (Vertex c : by_degree(host, tree.degree(root))) {
    Backtracker bt(host, plan);
    const std::array<Vertex, 1> pin{c};
    if (bt.seed(pin) && bt.run(1)) return bt.witness();
  }
  return std::nullopt;
}

std::optional<EmbeddingWitness> embed_through_edge(const SimpleGraph& host, const SimpleGraph& tree,
                                                   Vertex u, Vertex v) {
  require_tree(tree);
  if (tree.order() > host.order() || !host.adjacent(u, v)) return std::nullopt;
  for (const auto& [a, b] : tree.edges()) {
    const std::array<Vertex, 2> seeds{a, b};
    const Plan plan = make_plan(tree, seeds);
    for (const auto& pin : {std::array<Vertex, 2>{u, v}, std::array<Vertex, 2>{v, u}}) {
      Backtracker bt(host, plan);
      if (bt.seed(pin) && bt.run(2)) return bt.witness();
    }
  }
  return std::nullopt;
}

std::optional<EmbeddingWitness> skeleton_search(const SimpleGraph& host, const TreeFamily& f) {
  const SimpleGraph tree = realize(f);
  return SkeletonSearch(host, tree, skeleton(f)).run();
}

std::optional<EmbeddingWitness> contains_tree(const SimpleGraph& host, const TreeFamily& f) {
  if (f.order() > host.order()) return std::nullopt;
  if (f.is_spider()) return skeleton_search(host, f);
  return generic_backtrack(host, realize(f));
}

bool verify_witness(const SimpleGraph& host, const SimpleGraph& tree, const EmbeddingWitness& w) {
  if (static_cast<int>(w.image.size()) != tree.order()) return false;
  std::vector<bool> hit(host.order(), false);
  for (Vertex h : w.image) {
    if (h < 0 || h >= host.order() || hit[h]) return false;
    hit[h] = true;
  }
  for (const auto& [a, b] : tree.edges()) {
    if (!host.adjacent(w.image[a], w.image[b])) return false;
  }
  return true;
}

}  // namespace turan
