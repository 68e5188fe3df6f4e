// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cli.hpp"
#include "support/reference.hpp"
#include "turan/constructions.hpp"
#include "turan/containment.hpp"
#include "turan/formulas.hpp"
#include "turan/oracle.hpp"

using namespace turan;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

constexpr FamilyKind kSpiders[] = {FamilyKind::T3, FamilyKind::TDoublePrime,
                                   FamilyKind::TTriplePrime};

Count n_min_of(FamilyKind f) { return f == FamilyKind::T3 ? 15 : 10; }

std::string at(Count n, Count p) {
  return "n=" + std::to_string(n) + " p=" + std::to_string(p);
}

Verdict closed_form_cross_checks() {
  Verdict v;
  v.expect(ex_t3(23, 15).value == 127, "ex_t3(23,15)");
  v.expect(ex_t3(21, 15).value == 112, "ex_t3(21,15)");
  v.expect(ex_t3(22, 15).value == 119, "ex_t3(22,15)");
  for (Count n = 15; n <= 45; ++n) {
    v.expect(ex_t3(2 * n - 7, n).value == n * n - 8 * n + 22, "2n-7 " + at(n, 2 * n - 7));
    v.expect(ex_t3(2 * n - 9, n).value == n * n - 10 * n + 24 + std::max<Count>(n / 2, 13),
             "2n-9 " + at(n, 2 * n - 9));
    v.expect(ex_t3(2 * n - 8, n).value ==
                 n * n - 9 * n + 29 + std::max<Count>(0, (n - 37) / 4),
             "2n-8 " + at(n, 2 * n - 8));
  }
  return v;
}

Verdict identity_suite() {
  Verdict v;
  for (Count n = 10; n <= 40; ++n) {
    for (Count p = n; p <= 5 * n; ++p) {
      if (ex_tpp(p, n).value != ex_tppp(p, n).value) v.fail(at(n, p));
    }
  }
  return v;
}

void for_grid(const std::function<void(FamilyKind, Count, Count)>& body) {
  for (FamilyKind f : kSpiders) {
    for (Count n = n_min_of(f); n <= 30; ++n) {
      for (Count p = 2 * n - 6; p <= 6 * n; ++p) body(f, n, p);
    }
  }
}

Verdict recurrence() {
  Verdict v;
  for_grid([&](FamilyKind f, Count n, Count p) {
    const Count diff = extremal_number(f, p, n).value - extremal_number(f, p - (n - 1), n).value;
    if (diff != binomial2(n - 1)) v.fail(at(n, p));
  });
  return v;
}

Verdict sandwich() {
  Verdict v;
  for_grid([&](FamilyKind f, Count n, Count p) {
    const Count value = extremal_number(f, p, n).value;
    if (value < lower_bound(p, n) || value > upper_bound(p, n)) v.fail(at(n, p));
  });
  return v;
}

Verdict construction_achievability() {
  Verdict v;
  for (FamilyKind f : kSpiders) {
    for (Count n : {15, 16, 26, 27, 37, 38, 39, 40}) {
      const TreeFamily tree = make_family(f == FamilyKind::T3             ? "t3"
                                          : f == FamilyKind::TDoublePrime ? "tpp"
                                                                          : "tppp",
                                          static_cast<int>(n));
      for (Count r = 0; r <= n - 2; ++r) {
        const Count p = r == 0 ? 2 * (n - 1) : n - 1 + r;
        const Count target = extremal_number(f, p, n).value;
        for (bool connected : {false, true}) {
          if (connected && !has_connected_base(f, p, n, true)) continue;
          const Construction c = extremal_graph(f, p, n, connected);
          const std::string where = tree.name() + " " + at(n, p) + (connected ? " connected" : "");
          v.expect(c.graph.order() == p, "order " + where);
          v.expect(c.graph.edge_count() == target, "edges " + where);
          v.expect(!contains_tree(c.graph, tree), "freeness " + where);
        }
      }
    }
  }
  return v;
}

std::vector<int> multiset(std::initializer_list<std::pair<int, int>> counts) {
  std::vector<int> out;
  for (auto [times, degree] : counts) out.insert(out.end(), times, degree);
  std::sort(out.rbegin(), out.rend());
  return out;
}

Verdict degree_fidelity() {
  Verdict v;
  // Three vertices of degree n-4, the other 2n-12 of degree n-5.
  v.expect(spread_2n_minus_9_even(26).degree_sequence() == multiset({{3, 22}, {40, 21}}),
           "2n-9 even, n=26");
  // Three of degree n-4, 2n-13 of degree n-5, one of degree n-6.
  v.expect(spread_2n_minus_9_odd(27).degree_sequence() ==
               multiset({{3, 23}, {41, 22}, {1, 21}}),
           "2n-9 odd, n=27");
  // n-3-m vertices of degree n-4 and n-5+m of degree n-5, m the low block size.
  const std::pair<int, int> low_block[] = {{37, 16}, {38, 17}, {39, 18}, {40, 19}};
  for (auto [n, m] : low_block) {
    v.expect(spread_2n_minus_8(n).degree_sequence() ==
                 multiset({{n - 3 - m, n - 4}, {n - 5 + m, n - 5}}),
             "2n-8, n=" + std::to_string(n));
  }
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  for (int p = 4; p <= 8; ++p) {
    for (int n = 4; n <= p; ++n) {
      const OracleResult r = ex_bruteforce(p, TreeFamily::path(n), {}, 4);
      v.expect(r.exact && r.value == reference::ex_path(p, n),
               "path " + at(n, p) + " oracle " + std::to_string(r.value));
    }
  }
  for (int s : {2, 3}) {
    for (int p = s + 1; p <= 8; ++p) {
      const OracleResult r = ex_bruteforce(p, TreeFamily::star(s), {}, 4);
      v.expect(r.exact && r.value == (s - 1) * p / 2,
               "star s=" + std::to_string(s) + " p=" + std::to_string(p));
    }
  }
  return v;
}

Verdict containment_correctness() {
  Verdict v;
  std::vector<SimpleGraph> trees;
  for (int n = 1; n <= 5; ++n) {
    for (auto& t : reference::unlabeled_trees(n)) trees.push_back(std::move(t));
  }
  for (int p = 0; p <= 6; ++p) {
    std::vector<Edge> slots;
    for (int a = 0; a < p; ++a) {
      for (int b = a + 1; b < p; ++b) slots.emplace_back(a, b);
    }
    for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
      SimpleGraph host(p);
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if ((mask >> i) & 1U) host.add_edge(slots[i].first, slots[i].second);
      }
      for (const auto& t : trees) {
        const auto w = generic_backtrack(host, t);
        const bool ok = w.has_value() == reference::all_injections_contain(host, t) &&
                        (!w || verify_witness(host, t, *w));
        if (!ok) v.fail("host " + to_graph6(host) + " tree " + to_graph6(t));
      }
    }
  }
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 10000; ++trial) {
    const int p = 1 + static_cast<int>(rng() % 9);
    const int n = 1 + static_cast<int>(rng() % std::min(p + 1, 8));
    const double density = 0.15 + 0.1 * static_cast<double>(rng() % 8);
    const auto host = reference::random_graph(p, density, rng);
    const auto tree = reference::random_tree(n, rng);
    const auto w = generic_backtrack(host, tree);
    const bool ok = w.has_value() == reference::all_injections_contain(host, tree) &&
                    (!w || verify_witness(host, tree, *w));
    if (!ok) v.fail("random host " + to_graph6(host) + " tree " + to_graph6(tree));
  }
  return v;
}

Verdict graph6_round_trip() {
  Verdict v;
  std::mt19937_64 rng(66);
  int long_prefix = 0;
  for (int i = 0; i < 1000; ++i) {
    // Half below 63 vertices (one-byte length), half at or above.
    const int p = i % 2 == 0 ? static_cast<int>(rng() % 63) : 63 + static_cast<int>(rng() % 140);
    const double density = 0.05 + 0.1 * static_cast<double>(rng() % 9);
    const auto g = reference::random_graph(p, density, rng);
    const std::string s = to_graph6(g);
    long_prefix += s.front() == '~';
    if (from_graph6(s) != g) v.fail("p=" + std::to_string(p));
  }
  v.expect(long_prefix == 500, "length regimes");
  return v;
}

Verdict determinism() {
  Verdict v;
  const auto values = [](const std::string& threads) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"--quiet", "verify", "--n", "15..30", "--p", "n..6n", "--values",
                               "--threads", threads},
                              out, err);
    const auto report = nlohmann::json::parse(out.str());
    return std::pair{code, report["outputs"]["values"]};
  };
  const auto [code1, one] = values("1");
  const auto [code8, eight] = values("8");
  v.expect(code1 == 0 && code8 == 0, "verify exit codes");
  v.expect(!one.empty() && one == eight, "values differ between thread counts");
  return v;
}

struct Criterion {
  int id;
  const char* name;
  std::chrono::milliseconds limit;
  Verdict (*run)();
};

}  // namespace

int main() {
  using std::chrono::milliseconds;
  const Criterion criteria[] = {
      {1, "closed-form cross-checks", milliseconds(1000), closed_form_cross_checks},
      {2, "T''/T''' identity", milliseconds(1000), identity_suite},
      {3, "recurrence", milliseconds(0), recurrence},
      {4, "sandwich bounds", milliseconds(0), sandwich},
      {5, "construction achievability", milliseconds(300'000), construction_achievability},
      {6, "degree-sequence fidelity", milliseconds(0), degree_fidelity},
      {7, "oracle equivalence", milliseconds(120'000), oracle_equivalence},
      {8, "containment correctness", milliseconds(0), containment_correctness},
      {9, "graph6 round trip", milliseconds(0), graph6_round_trip},
      {10, "thread determinism", milliseconds(0), determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Verdict v = c.run();
    const auto elapsed = std::chrono::duration_cast<milliseconds>(Clock::now() - start);
    if (c.limit.count() > 0 && elapsed > c.limit) {
      v.expect(false, "took " + std::to_string(elapsed.count()) + " ms, limit " +
                          std::to_string(c.limit.count()) + " ms");
    }
    std::printf("[%s] criterion %d: %s (%lld ms)%s%s\n", v.ok ? "PASS" : "FAIL", c.id, c.name,
                static_cast<long long>(elapsed.count()), v.ok ? "" : ": ", v.detail.c_str());
    failed += !v.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
