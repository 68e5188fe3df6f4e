#include "turan/formulas.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace turan {
namespace {

std::string str(Count x) { return std::to_string(x); }

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

// Clique-union part ((n-2)p - r(n-1-r))/2. Always an integer: it equals
// k C(n-1,2) + C(r,2).
Count clique_part(Count p, Count n) {
  const auto [k, r] = decompose(p, n);
  return k * binomial2(n - 1) + binomial2(r);
}

// max{0, floor((r(n-4-r) - 3(n-1))/2)}, evaluated on non-negative operands.
Count regular_arm(Count r, Count n) {
  const Count gain = r * (n - 4 - r);
  const Count loss = 3 * (n - 1);
  return gain > loss ? (gain - loss) / 2 : 0;
}

ExtremalValue max_form(Count p, Count n, const std::string& label) {
  const Count r = decompose(p, n).r;
  const Count extra = regular_arm(r, n);
  return {clique_part(p, n) + extra, label + (extra > 0 ? "/regular-arm" : "/clique-arm")};
}

bool in_special_residues(Count r, Count n) {
  return r <= 2 || r >= n - 5;
}

}  // namespace

Count binomial2(Count m) { return m >= 2 ? m * (m - 1) / 2 : 0; }

ResidueDecomposition decompose(Count p, Count n) {
  require(n >= 3, "decompose requires n >= 3 (got n = " + str(n) + ")");
  require(p >= n - 1, "decompose requires p >= n-1 (got p = " + str(p) +
                          ", n = " + str(n) + ")");
  return {p / (n - 1), p % (n - 1)};
}

ExtremalValue ex_path(Count p, Count n) {
  require(n >= 2, "path requires n >= 2");
  require(p >= n - 1, "path formula requires p >= n-1");
  if (n == 2) return {0, "path"};
  return {clique_part(p, n), "path"};
}

ExtremalValue ex_star(Count p, Count s) {
  require(s >= 1, "star requires s >= 1");
  require(p >= s + 1, "star formula requires p >= s+1");
  return {(s - 1) * p / 2, "star"};
}

ExtremalValue generic_max_form(Count p, Count n) {
  require(n >= 10, "generic max form requires n >= 10 (got n = " + str(n) + ")");
  require(p >= n - 1, "generic max form requires p >= n-1");
  return max_form(p, n, "Lem2.10");
}

ExtremalValue ex_tpp(Count p, Count n) {
  require(n >= 10, "T'' requires n >= 10 (got n = " + str(n) + ")");
  require(p >= n, "T'' requires p >= n (got p = " + str(p) + ")");
  return max_form(p, n, "Thm3.1");
}

ExtremalValue ex_tppp(Count p, Count n) {
  require(n >= 10, "T''' requires n >= 10 (got n = " + str(n) + ")");
  require(p >= n, "T''' requires p >= n (got p = " + str(p) + ")");
  return max_form(p, n, "Thm5.1");
}

int t3_case(Count r, Count n) {
  const std::array<bool, 5> hits = {
      in_special_residues(r, n),
      r >= 3 && r <= n - 9,
      r == n - 6,
      r == n - 8,
      r == n - 7,
  };
  const auto count = std::count(hits.begin(), hits.end(), true);
  if (n >= 15 && count != 1) {
    throw std::logic_error("T3 cases do not partition residue " + str(r) +
                           " for n = " + str(n));
  }
  // For small n the sets overlap; the special residues win.
  return static_cast<int>(std::find(hits.begin(), hits.end(), true) - hits.begin()) + 1;
}

ExtremalValue ex_t3(Count p, Count n, T3Coverage coverage) {
  const Count min_n = coverage == T3Coverage::Full ? 15 : 10;
  require(n >= min_n, "T3 requires n >= " + str(min_n) + " (got n = " + str(n) + ")");
  require(p >= n, "T3 requires p >= n (got p = " + str(p) + ")");
  const Count r = decompose(p, n).r;
  const int which = t3_case(r, n);
  if (n < 15 && which != 1 && which != 3) {
    throw DomainError("T3 residue r = " + str(r) + " requires n >= 15 (got n = " +
                      str(n) + ")");
  }
  const Count np = (n - 2) * p;
  switch (which) {
    case 1:
      return {clique_part(p, n), "Thm4.1"};
    case 2:
      return max_form(p, n, "Thm4.2");
    case 3:
      return {(np - 5 * (n - 6)) / 2, "Thm4.3"};
    case 4:
      return {(np - 7 * n + 30) / 2 + std::max(n / 2, Count{13}), "Thm4.4"};
    default:
      return {(np - 6 * (n - 7)) / 2 + (n >= 37 ? (n - 37) / 4 : 0), "Thm4.5"};
  }
}

Count lower_bound(Count p, Count n) {
  require(n >= 10, "bounds require n >= 10");
  return clique_part(p, n);
}

Count upper_bound(Count p, Count n) {
  require(n >= 10, "bounds require n >= 10");
  const Count r = decompose(p, n).r;
  // Doubled: (n-2)p - min{2(n-1+r), r(n-1-r)}, then halve with floor.
  const Count twice_min = std::min(2 * (n - 1 + r), r * (n - 1 - r));
  return ((n - 2) * p - twice_min) / 2;
}

ExtremalValue extremal_number(FamilyKind family, Count p, Count n, T3Coverage coverage) {
  require(p >= 0, "p must be non-negative");
  require(family == FamilyKind::T3 || family == FamilyKind::TDoublePrime ||
              family == FamilyKind::TTriplePrime,
          "extremal_number supports t3/tpp/tppp only");
  if (family == FamilyKind::T3) {
    const Count min_n = coverage == T3Coverage::Full ? 15 : 10;
    require(n >= min_n, "T3 requires n >= " + str(min_n) + " (got n = " + str(n) + ")");
  } else {
    require(n >= 10, "T''/T''' require n >= 10 (got n = " + str(n) + ")");
  }
  if (p < n) return {binomial2(p), "trivial/p<n"};
  switch (family) {
    case FamilyKind::T3: return ex_t3(p, n, coverage);
    case FamilyKind::TDoublePrime: return ex_tpp(p, n);
    default: return ex_tppp(p, n);
  }
}

}  // namespace turan
