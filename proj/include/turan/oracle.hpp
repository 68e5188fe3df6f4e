#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "turan/formulas.hpp"
#include "turan/graph.hpp"
#include "turan/trees.hpp"

namespace turan {

struct OracleBudget {
  std::int64_t max_nodes = 100'000'000;
  std::chrono::milliseconds max_time{60'000};
};

struct OracleResult {
  Count value = 0;
  /// A tree-free graph on p vertices with `value` edges.
  SimpleGraph witness;
  std::int64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
  /// False when the budget ran out; `value` is then only a lower bound.
  bool exact = true;
};

/// Exact ex(p; tree) by include/exclude search over the C(p,2) edge slots.
///
/// Vertex 0 is taken to be a maximum-degree vertex whose neighbours are
/// 1..deg(0); each inclusion is checked only for embeddings through the new
/// edge. With threads > 1 the top-level branches (one per deg(0)) are shared
/// between workers through a common best-value register; the value does not
/// depend on the thread count, the witness and node count may.
OracleResult ex_bruteforce(int p, const SimpleGraph& tree, const OracleBudget& budget = {},
                           int threads = 1);
OracleResult ex_bruteforce(int p, const TreeFamily& f, const OracleBudget& budget = {},
                           int threads = 1);

struct FormulaComparison {
  int p = 0;
  Count oracle = 0;
  Count formula = 0;
  bool exact = true;
  bool matches() const { return exact && oracle == formula; }
};

struct FormulaReport {
  std::vector<FormulaComparison> rows;
  bool all_match() const;
};

/// Compares ex_bruteforce against `formula(p)` for each p in [p_min, p_max].
FormulaReport verify_formula(int p_min, int p_max, const TreeFamily& f,
                             const std::function<Count(int)>& formula,
                             const OracleBudget& budget = {}, int threads = 1);

}  // namespace turan
