#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "turan/formulas.hpp"
#include "turan/oracle.hpp"
#include "turan/trees.hpp"

namespace turan {

/// a*n + b.
struct LinearInN {
  Count a = 0;
  Count b = 0;
  Count at(Count n) const { return a * n + b; }
};

struct PRange {
  LinearInN lo;
  LinearInN hi;
};

/// Parses "n..4n", "2n-9", "4..8", "2n-6..6n": integers or a*n+b terms.
PRange parse_p_range(std::string_view text);
/// Parses "15..20" or "26".
std::pair<Count, Count> parse_int_range(std::string_view text);

struct SuiteOptions {
  Count n_min = 15;
  Count n_max = 15;
  PRange p{{1, 0}, {4, 0}};
  bool constructions = true;
  int threads = 1;
};

struct SuiteValue {
  FamilyKind family;
  Count n;
  Count p;
  Count value;
  std::string branch;
  friend bool operator==(const SuiteValue&, const SuiteValue&) = default;
};

struct SuiteFailure {
  std::string check;
  std::string family;
  Count p;
  Count n;
  std::string detail;
};

struct SuiteReport {
  std::vector<SuiteValue> values;
  std::vector<SuiteFailure> failures;
  std::int64_t checks = 0;
  /// Connected constructions built and checked.
  std::int64_t connected_checks = 0;
  bool passed() const { return failures.empty(); }
};

/// Runs the invariant checks over every (family, n, p) of the grid: T3 for
/// n >= 15, T'' and T''' for n >= 10. Checks: T''/T'''/generic identity,
/// p -> p-(n-1) recurrence (p >= 2n-6), reduction to n-1+r vertices (k >= 2),
/// lower/upper sandwich, special-residue collapse, T3 dominance over the
/// generic form, monotonicity in p, (n-2)p/2 ceiling and, when enabled,
/// construction edge counts, degree sequences and tree-freeness.
/// Work is split per (family, n); output order does not depend on threads.
SuiteReport run_invariant_suite(const SuiteOptions& options);

struct OracleSuiteOptions {
  int p_min = 4;
  int p_max = 8;
  OracleBudget budget;
  int threads = 1;
};

/// Oracle cross-checks: paths P_n (4 <= n <= p) against the clique-union
/// formula and stars K_{1,s}, s in {2,3}, against floor((s-1)p/2).
SuiteReport run_oracle_suite(const OracleSuiteOptions& options);

}  // namespace turan
