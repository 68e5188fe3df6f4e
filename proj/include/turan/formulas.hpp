#pragma once

#include <cstdint>
#include <string>

#include "turan/trees.hpp"

namespace turan {

using Count = std::int64_t;

/// p = k(n-1) + r with k >= 1 and 0 <= r <= n-2.
struct ResidueDecomposition {
  Count k = 0;
  Count r = 0;
  friend bool operator==(const ResidueDecomposition&, const ResidueDecomposition&) = default;
};

/// An exact extremal edge count and the formula branch that produced it.
/// Branch labels are stable identifiers, e.g. "Thm4.4" or "Thm3.1/clique-arm".
struct ExtremalValue {
  Count value = 0;
  std::string branch;
};

/// Which cases ex_t3 may answer.
enum class T3Coverage {
  /// n >= 15: every residue is covered.
  Full,
  /// n >= 10: only the residues whose closed form holds from n = 10
  /// (r in {0,1,2,n-5..n-2} and r = n-6); other residues throw.
  Partial,
};

Count binomial2(Count m);

ResidueDecomposition decompose(Count p, Count n);

/// Extremal number for the path on n vertices.
ExtremalValue ex_path(Count p, Count n);
/// Extremal number for the star K_{1,s}: floor((s-1)p/2).
ExtremalValue ex_star(Count p, Count s);
/// ((n-2)p - r(n-1-r))/2 + max{0, floor((r(n-4-r) - 3(n-1))/2)}.
/// The regular arm fires when a near-(n-5)-regular graph on n-1+r vertices
/// beats K_{n-1} u K_r.
ExtremalValue generic_max_form(Count p, Count n);
ExtremalValue ex_tpp(Count p, Count n);
ExtremalValue ex_tppp(Count p, Count n);
ExtremalValue ex_t3(Count p, Count n, T3Coverage coverage = T3Coverage::Full);

/// k C(n-1,2) + C(r,2), the clique-union edge count.
Count lower_bound(Count p, Count n);
/// floor((n-2)p/2 - min{n-1+r, r(n-1-r)/2}).
Count upper_bound(Count p, Count n);

/// ex(p; F) for a spider family, with graphs smaller than the tree handled
/// directly: when p < n every graph on p vertices is F-free and the value is
/// C(p,2) (branch "trivial/p<n").
ExtremalValue extremal_number(FamilyKind family, Count p, Count n,
                              T3Coverage coverage = T3Coverage::Full);

/// Index of the ex_t3 case for residue r: 1 for {0,1,2,n-5..n-2}, 2 for
/// [3, n-9], 3 for n-6, 4 for n-8, 5 for n-7. Throws std::logic_error when
/// n >= 15 and the cases fail to partition [0, n-2].
int t3_case(Count r, Count n);

}  // namespace turan
