#include "turan/matching.hpp"

#include <limits>
#include <queue>

namespace turan {
namespace {
constexpr int kInf = std::numeric_limits<int>::max();
}

BipartiteMatcher::BipartiteMatcher(int left_size, int right_size)
    : left_size_(left_size),
      right_size_(right_size),
      adj_(left_size),
      mate_left_(left_size, kUnmatched),
      mate_right_(right_size, kUnmatched),
      dist_(left_size, kInf) {}

void BipartiteMatcher::add_edge(int left, int right) { adj_[left].push_back(right); }

// BFS from free left vertices; dist_ holds alternating-path layers.
// Returns true when some free right vertex is reachable.
bool BipartiteMatcher::layer() {
  std::queue<int> queue;
  for (int u = 0; u < left_size_; ++u) {
    if (mate_left_[u] == kUnmatched) {
      dist_[u] = 0;
      queue.push(u);
    } else {
      dist_[u] = kInf;
    }
  }
  bool reachable = false;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int v : adj_[u]) {
      const int w = mate_right_[v];
      if (w == kUnmatched) {
        reachable = true;
      } else if (dist_[w] == kInf) {
        dist_[w] = dist_[u] + 1;
        queue.push(w);
      }
    }
  }
  return reachable;
}

bool BipartiteMatcher::augment(int u) {
  for (int v : adj_[u]) {
    const int w = mate_right_[v];
    if (w == kUnmatched || (dist_[w] == dist_[u] + 1 && augment(w))) {
      mate_left_[u] = v;
      mate_right_[v] = u;
      return true;
    }
  }
  dist_[u] = kInf;
  return false;
}

int BipartiteMatcher::solve() {
  int size = 0;
  for (int u = 0; u < left_size_; ++u) size += mate_left_[u] != kUnmatched;
  while (layer()) {
    for (int u = 0; u < left_size_; ++u) {
      if (mate_left_[u] == kUnmatched && augment(u)) ++size;
    }
  }
  return size;
}

}  // namespace turan
