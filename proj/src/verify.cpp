#include "turan/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <thread>

#include "turan/constructions.hpp"
#include "turan/containment.hpp"

namespace turan {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

Count parse_count(std::string_view s, std::string_view whole) {
  Count v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DomainError("cannot parse range '" + std::string(whole) + "'");
  }
  return v;
}

LinearInN parse_linear(std::string_view text, std::string_view whole) {
  text = trim(text);
  if (text.empty()) throw DomainError("empty bound in range '" + std::string(whole) + "'");
  const auto npos = text.find('n');
  if (npos == std::string_view::npos) return {0, parse_count(text, whole)};
  LinearInN out;
  const std::string_view coeff = text.substr(0, npos);
  out.a = coeff.empty() ? 1 : parse_count(coeff, whole);
  std::string_view rest = text.substr(npos + 1);
  if (!rest.empty()) {
    const bool negative = rest.front() == '-';
    if (!negative && rest.front() != '+') {
      throw DomainError("cannot parse range '" + std::string(whole) + "'");
    }
    out.b = parse_count(rest.substr(1), whole) * (negative ? -1 : 1);
  }
  return out;
}

std::string family_label(FamilyKind f, Count n) {
  switch (f) {
    case FamilyKind::T3: return "t3:" + std::to_string(n);
    case FamilyKind::TDoublePrime: return "tpp:" + std::to_string(n);
    case FamilyKind::TTriplePrime: return "tppp:" + std::to_string(n);
    case FamilyKind::Path: return "path:" + std::to_string(n);
    case FamilyKind::Star: return "star:" + std::to_string(n);
    default: return "explicit";
  }
}

struct Task {
  FamilyKind family;
  Count n;
};

class Checker {
 public:
  Checker(FamilyKind family, Count n, SuiteReport& out) : family_(family), n_(n), out_(out) {}

  void expect(bool ok, const char* check, Count p, const std::string& detail = {}) {
    ++out_.checks;
    if (!ok) out_.failures.push_back({check, family_label(family_, n_), p, n_, detail});
  }

 private:
  FamilyKind family_;
  Count n_;
  SuiteReport& out_;
};

void check_construction(const Construction& c, Count p, const TreeFamily& tree,
                        Checker& check) {
  const Count edges = c.graph.edge_count();
  check.expect(edges == c.recipe.expected_edges, "construction-edges", p,
               "built " + std::to_string(edges) + ", formula " +
                   std::to_string(c.recipe.expected_edges));
  check.expect(c.graph.order() == p, "construction-order", p);
  check.expect(c.graph.degree_sequence() == c.recipe.expected_degrees, "construction-degrees",
               p, to_string(c.recipe.base));
  Count degree_sum = 0;
  for (int d : c.recipe.expected_degrees) degree_sum += d;
  check.expect(degree_sum == 2 * c.recipe.expected_edges, "construction-handshake", p);
  const auto witness = contains_tree(c.graph, tree);
  check.expect(!witness.has_value(), "construction-freeness", p, to_string(c.recipe.base));
}

void run_task(const Task& task, const SuiteOptions& options, SuiteReport& out) {
  const FamilyKind family = task.family;
  const Count n = task.n;
  Checker check(family, n, out);
  const TreeFamily tree = family == FamilyKind::T3             ? TreeFamily::t3(static_cast<int>(n))
                          : family == FamilyKind::TDoublePrime ? TreeFamily::tpp(static_cast<int>(n))
                                                               : TreeFamily::tppp(static_cast<int>(n));
  const Count lo = std::max(options.p.lo.at(n), n);
  const Count hi = options.p.hi.at(n);
  const Count ceiling = binomial2(n - 1);

  for (Count p = lo; p <= hi; ++p) {
    const ExtremalValue ev = extremal_number(family, p, n);
    const Count value = ev.value;
    out.values.push_back({family, n, p, value, ev.branch});
    const auto [k, r] = decompose(p, n);

    check.expect(value >= 0 && value <= binomial2(p), "range", p);
    check.expect(2 * value <= (n - 2) * p, "erdos-sos-ceiling", p);

    const Count generic = generic_max_form(p, n).value;
    if (family != FamilyKind::T3) {
      check.expect(ex_tpp(p, n).value == ex_tppp(p, n).value && value == generic, "identity", p);
    } else {
      const bool corrected = r == n - 7 || r == n - 8;
      check.expect(value >= generic, "dominance", p);
      check.expect(value == generic || corrected, "dominance-strict-residues", p);
    }

    if (p >= 2 * n - 6) {
      const Count prev = extremal_number(family, p - (n - 1), n).value;
      check.expect(value - prev == ceiling, "recurrence", p,
                   std::to_string(value) + " - " + std::to_string(prev));
    }
    if (k >= 2) {
      const Count base = extremal_number(family, n - 1 + r, n).value;
      check.expect(value == (n - 2) * (p - (n - 1 + r)) / 2 + base, "reduction", p);
    }
    check.expect(lower_bound(p, n) <= value && value <= upper_bound(p, n), "sandwich", p);
    if (r <= 2 || r >= n - 5) check.expect(value == lower_bound(p, n), "special-residue", p);
    check.expect(extremal_number(family, p + 1, n).value >= value, "monotone", p);

    if (!options.constructions) continue;
    check_construction(extremal_graph(family, p, n), p, tree, check);
    if (has_connected_base(family, p, n, true) && !has_connected_base(family, p, n, false)) {
      check_construction(extremal_graph(family, p, n, true), p, tree, check);
      ++out.connected_checks;
    }
  }
}

void merge(SuiteReport& into, SuiteReport&& part) {
  into.values.insert(into.values.end(), part.values.begin(), part.values.end());
  into.failures.insert(into.failures.end(), part.failures.begin(), part.failures.end());
  into.checks += part.checks;
  into.connected_checks += part.connected_checks;
}

template <typename Fn>
SuiteReport run_parallel(std::size_t tasks, int threads, Fn&& body) {
  std::vector<SuiteReport> parts(tasks);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < tasks; i = next++) body(i, parts[i]);
  };
  const int count = std::clamp<int>(threads, 1, static_cast<int>(std::max<std::size_t>(tasks, 1)));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  }
  SuiteReport report;
  for (auto& part : parts) merge(report, std::move(part));
  return report;
}

}  // namespace

PRange parse_p_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const LinearInN single = parse_linear(text, text);
    return {single, single};
  }
  return {parse_linear(text.substr(0, dots), text), parse_linear(text.substr(dots + 2), text)};
}

std::pair<Count, Count> parse_int_range(std::string_view text) {
  const PRange r = parse_p_range(text);
  if (r.lo.a != 0 || r.hi.a != 0) throw DomainError("range '" + std::string(text) + "' must be numeric");
  return {r.lo.b, r.hi.b};
}

SuiteReport run_invariant_suite(const SuiteOptions& options) {
  std::vector<Task> tasks;
  for (FamilyKind f : {FamilyKind::T3, FamilyKind::TDoublePrime, FamilyKind::TTriplePrime}) {
    const Count min_n = f == FamilyKind::T3 ? 15 : 10;
    for (Count n = std::max(options.n_min, min_n); n <= options.n_max; ++n) tasks.push_back({f, n});
  }
  return run_parallel(tasks.size(), options.threads,
                      [&](std::size_t i, SuiteReport& out) { run_task(tasks[i], options, out); });
}

SuiteReport run_oracle_suite(const OracleSuiteOptions& options) {
  struct OracleTask {
    FamilyKind family;
    int param;
    int p;
  };
  std::vector<OracleTask> tasks;
  for (int p = options.p_min; p <= options.p_max; ++p) {
    for (int n = 4; n <= p; ++n) tasks.push_back({FamilyKind::Path, n, p});
    for (int s : {2, 3}) {
      if (p >= s + 1) tasks.push_back({FamilyKind::Star, s, p});
    }
  }
  // Each oracle call is itself parallel; tasks run in sequence.
  SuiteReport report;
  for (const auto& t : tasks) {
    const TreeFamily f = t.family == FamilyKind::Path ? TreeFamily::path(t.param)
                                                      : TreeFamily::star(t.param);
    const OracleResult r = ex_bruteforce(t.p, f, options.budget, options.threads);
    const Count expected = t.family == FamilyKind::Path ? ex_path(t.p, t.param).value
                                                        : ex_star(t.p, t.param).value;
    Checker check(t.family, t.param, report);
    report.values.push_back({t.family, t.param, t.p, r.value, r.exact ? "oracle" : "oracle/inexact"});
    check.expect(r.exact, "oracle-budget", t.p);
    check.expect(r.value == expected, "oracle-vs-formula", t.p,
                 "oracle " + std::to_string(r.value) + ", formula " + std::to_string(expected));
    check.expect(r.witness.edge_count() == r.value && !contains_tree(r.witness, f),
                 "oracle-witness", t.p);
  }
  return report;
}

}  // namespace turan
