#include "stw/enumeration.hpp"

#include <algorithm>
#include <string>

#include "stw/error.hpp"

namespace stw {

namespace {

// Successor of a rooted level sequence (Beyer-Hedetniemi), regenerating
// from position p; returns false when p reaches the root.
bool next_rooted(std::vector<int>& levels, int p) {
  if (p <= 0) return false;
  int q = p - 1;
  while (levels[q] != levels[p] - 1) --q;
  const int n = static_cast<int>(levels.size());
  for (int i = p; i < n; ++i) levels[i] = levels[i - p + q];
  return true;
}

int last_non_one(const std::vector<int>& levels) {
  int p = static_cast<int>(levels.size()) - 1;
  while (p > 0 && levels[p] == 1) --p;
  return p;
}

// Splits at the second depth-1 vertex: the first root subtree (depths shifted
// by -1) and the rest of the tree with that subtree removed.
void split(const std::vector<int>& levels, std::vector<int>& left, std::vector<int>& rest) {
  const int n = static_cast<int>(levels.size());
  int m = n;
  bool seen_one = false;
  for (int i = 0; i < n; ++i) {
    if (levels[i] == 1) {
      if (seen_one) {
        m = i;
        break;
      }
      seen_one = true;
    }
  }
  left.clear();
  rest.assign(1, 0);
  for (int i = 1; i < m; ++i) left.push_back(levels[i] - 1);
  for (int i = m; i < n; ++i) rest.push_back(levels[i]);
}

}  // namespace

Tree tree_from_levels(const std::vector<int>& levels) {
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  for (int i = 0; i < static_cast<int>(levels.size()); ++i) {
    while (!stack.empty() && levels[stack.back()] >= levels[i]) stack.pop_back();
    if (!stack.empty()) edges.push_back({stack.back(), i});
    stack.push_back(i);
  }
  return Tree(static_cast<int>(levels.size()), edges);
}

FreeTreeGenerator::FreeTreeGenerator(int n) : n_(n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw Error(ErrorKind::OutOfRange, "tree order " + std::to_string(n) + " outside 1.." +
                                           std::to_string(kMaxEnumerationOrder));
  }
  // The path rooted at its center: 0,1,..,n/2 followed by 1,..,(n+1)/2-1.
  for (int i = 0; i <= n / 2; ++i) levels_.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) levels_.push_back(i);
}

// Moves levels_ forward (if needed) to the next sequence that is the
// canonical center-rooted form of a free tree.
bool FreeTreeGenerator::advance_to_valid() {
  std::vector<int> left;
  std::vector<int> rest;
  while (true) {
    split(levels_, left, rest);
    const int left_height = *std::max_element(left.begin(), left.end());
    const int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
      if (left.size() > rest.size()) {
        valid = false;
      } else if (left.size() == rest.size() && left > rest) {
        valid = false;
      }
    }
    if (valid) return true;
    const int p = static_cast<int>(left.size());
    const bool deep = levels_[p] > 2;
    if (!next_rooted(levels_, p)) return false;
    if (deep) {
      split(levels_, left, rest);
      const int new_left_height = *std::max_element(left.begin(), left.end());
      const int tail = new_left_height + 1;
      const int size = static_cast<int>(levels_.size());
      for (int i = 0; i < tail; ++i) levels_[size - tail + i] = i + 1;
    }
  }
}

std::optional<Tree> FreeTreeGenerator::next() {
  if (done_) return std::nullopt;
  if (n_ <= 2) {
    done_ = true;
    return Tree::path(n_);
  }
  if (started_) {
    if (!next_rooted(levels_, last_non_one(levels_))) {
      done_ = true;
      return std::nullopt;
    }
  }
  started_ = true;
  if (!advance_to_valid()) {
    done_ = true;
    return std::nullopt;
  }
  return tree_from_levels(levels_);
}

TreeStream::TreeStream(int n, Predicate keep) : generator_(n), keep_(std::move(keep)) {}

std::optional<Tree> TreeStream::next() {
  while (auto t = generator_.next()) {
    if (!keep_ || keep_(*t)) return t;
  }
  return std::nullopt;
}

std::vector<Tree> TreeStream::collect() {
  std::vector<Tree> out;
  while (auto t = next()) out.push_back(std::move(*t));
  return out;
}

long long TreeStream::count() {
  long long c = 0;
  while (next()) ++c;
  return c;
}

TreeStream all_trees(int n) {
  return TreeStream(n);
}

TreeStream trees_with_segment_sequence(const SegmentSequence& lengths) {
  if (!lengths.realizable()) {
    throw Error(ErrorKind::Unrealizable, "segment sequence (" + lengths.to_string() +
                                             ") has no tree");
  }
  return TreeStream(lengths.order(),
                    [lengths](const Tree& t) { return segment_sequence(t) == lengths; });
}

TreeStream trees_with_segment_count(int n, int m) {
  return TreeStream(n, [m](const Tree& t) { return t.order() >= 2 && segment_count(t) == m; });
}

}  // namespace stw
