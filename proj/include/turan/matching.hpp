#pragma once

#include <vector>

namespace turan {

/// Maximum-cardinality bipartite matching (Hopcroft-Karp).
///
/// Left vertices are [0, left_size), right vertices [0, right_size).
class BipartiteMatcher {
 public:
  static constexpr int kUnmatched = -1;

  BipartiteMatcher(int left_size, int right_size);

  void add_edge(int left, int right);
  /// Runs to completion and returns the matching size.
  int solve();

  /// Partner of a left vertex after solve(), or kUnmatched.
  int mate_of_left(int left) const { return mate_left_[left]; }
  int mate_of_right(int right) const { return mate_right_[right]; }

 private:
  bool layer();
  bool augment(int left);

  int left_size_;
  int right_size_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_left_;
  std::vector<int> mate_right_;
  std::vector<int> dist_;
};

}  // namespace turan
