#include "turan/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "turan/containment.hpp"

namespace turan {
namespace {

using Clock = std::chrono::steady_clock;

struct SharedState {
  explicit SharedState(int p) : witness(p) {}

  std::atomic<Count> best{0};
  std::mutex witness_mutex;
  SimpleGraph witness;
  std::atomic<std::int64_t> nodes{0};
  std::atomic<bool> exhausted{false};
  std::int64_t max_nodes = 0;
  Clock::time_point deadline;
};

class EdgeSearch {
 public:
  EdgeSearch(int p, const SimpleGraph& tree, SharedState& shared)
      : p_(p), tree_(tree), shared_(shared), graph_(p), degree_(p, 0) {
    for (Vertex a = 1; a < p; ++a) {
      for (Vertex b = a + 1; b < p; ++b) slots_.emplace_back(a, b);
    }
  }

  /// Branch where vertex 0 has neighbours exactly 1..cap and every other
  /// vertex has degree at most cap.
  void run_branch(int cap) {
    cap_ = cap;
    graph_ = SimpleGraph(p_);
    std::fill(degree_.begin(), degree_.end(), 0);
    edges_ = 0;
    if (static_cast<Count>(cap) * p_ / 2 <= shared_.best.load()) return;
    for (Vertex v = 1; v <= cap; ++v) add(0, v);
    if (generic_backtrack(graph_, tree_)) return;
    search(0);
  }

  std::int64_t local_nodes() const { return nodes_; }

 private:
  void add(Vertex a, Vertex b) {
    graph_.add_edge(a, b);
    ++degree_[a];
    ++degree_[b];
    ++edges_;
  }

  void remove(Vertex a, Vertex b) {
    graph_.remove_edge(a, b);
    --degree_[a];
    --degree_[b];
    --edges_;
  }

  bool out_of_budget() {
    ++nodes_;
    const auto total = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (total > shared_.max_nodes) shared_.exhausted = true;
    if ((nodes_ & 0x3FF) == 0 && Clock::now() > shared_.deadline) shared_.exhausted = true;
    return shared_.exhausted.load(std::memory_order_relaxed);
  }

  void record() {
    Count current = shared_.best.load();
    while (edges_ > current) {
      if (shared_.best.compare_exchange_weak(current, edges_)) {
        std::lock_guard lock(shared_.witness_mutex);
        // A concurrent worker may have raised the bound again meanwhile.
        if (shared_.witness.edge_count() < edges_) shared_.witness = graph_;
        return;
      }
    }
  }

  // Upper bound on edges still addable from slot `idx` on: each vertex can
  // gain at most min(cap - degree, undecided slots at it); halve the total.
  Count headroom(std::size_t idx) const {
    if (idx == slots_.size()) return 0;
    const auto [a, b] = slots_[idx];
    Count sum = 0;
    for (Vertex v = a; v < p_; ++v) {
      int open = 0;
      if (v == a) {
        open = p_ - b;
      } else {
        open = (v - a - 1) + (v >= b ? 1 : 0) + (p_ - 1 - v);
      }
      sum += std::min(open, cap_ - degree_[v]);
    }
    return std::min<Count>(sum / 2, static_cast<Count>(slots_.size() - idx));
  }

  void search(std::size_t idx) {
    if (out_of_budget()) return;
    if (edges_ > shared_.best.load(std::memory_order_relaxed)) record();
    if (idx == slots_.size()) return;
    if (edges_ + headroom(idx) <= shared_.best.load(std::memory_order_relaxed)) return;
    const auto [a, b] = slots_[idx];
    if (degree_[a] < cap_ && degree_[b] < cap_) {
      add(a, b);
      if (!embed_through_edge(graph_, tree_, a, b)) search(idx + 1);
      remove(a, b);
    }
    search(idx + 1);
  }

  int p_;
  const SimpleGraph& tree_;
  SharedState& shared_;
  SimpleGraph graph_;
  std::vector<int> degree_;
  std::vector<Edge> slots_;
  Count edges_ = 0;
  int cap_ = 0;
  std::int64_t nodes_ = 0;
};

}  // namespace

OracleResult ex_bruteforce(int p, const SimpleGraph& tree, const OracleBudget& budget, int threads) {
  if (p < 1) throw DomainError("oracle requires p >= 1");
  if (!tree.is_tree()) throw DomainError("oracle pattern is not a tree");
  if (tree.order() < 2) throw DomainError("oracle requires a tree with at least 2 vertices");
  if (tree.order() > p + 3) {
    throw DomainError("oracle requires tree order <= p+3 (tree has " +
                      std::to_string(tree.order()) + " vertices, p = " + std::to_string(p) + ")");
  }
  const auto start = Clock::now();
  SharedState shared(p);
  shared.max_nodes = budget.max_nodes;
  shared.deadline = start + budget.max_time;

  // Top-level branches: the degree of vertex 0, largest first.
  std::atomic<int> next_cap{p - 1};
  const auto worker = [&] {
    EdgeSearch search(p, tree, shared);
    for (int cap = next_cap--; cap >= 0 && !shared.exhausted; cap = next_cap--) {
      search.run_branch(cap);
    }
  };
  threads = std::max(1, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  OracleResult result;
  result.value = shared.best.load();
  result.witness = std::move(shared.witness);
  result.nodes_explored = std::min(shared.nodes.load(), shared.max_nodes);
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  result.exact = !shared.exhausted;
  return result;
}

OracleResult ex_bruteforce(int p, const TreeFamily& f, const OracleBudget& budget, int threads) {
  return ex_bruteforce(p, realize(f), budget, threads);
}

bool FormulaReport::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.matches(); });
}

FormulaReport verify_formula(int p_min, int p_max, const TreeFamily& f,
                             const std::function<Count(int)>& formula,
                             const OracleBudget& budget, int threads) {
  FormulaReport report;
  for (int p = p_min; p <= p_max; ++p) {
    const OracleResult r = ex_bruteforce(p, f, budget, threads);
    report.rows.push_back({p, r.value, formula(p), r.exact});
  }
  return report;
}

}  // namespace turan
