#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "stw/segments.hpp"
#include "stw/tree.hpp"

namespace stw {

// Largest order the enumerators accept.
inline constexpr int kMaxEnumerationOrder = 16;

// Successor-based generator of free trees (one per isomorphism class) using
// canonical level sequences rooted at a center. Emission order is fixed.
class FreeTreeGenerator {
 public:
  // Throws OutOfRange unless 1 <= n <= kMaxEnumerationOrder.
  explicit FreeTreeGenerator(int n);

  // Next tree, or nullopt once every class has been emitted.
  std::optional<Tree> next();

 private:
  bool advance_to_valid();

  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> levels_;
};

// Pull-based stream of trees with an optional filter.
class TreeStream {
 public:
  using Predicate = std::function<bool(const Tree&)>;

  explicit TreeStream(int n, Predicate keep = {});

  std::optional<Tree> next();
  // Drains the stream.
  std::vector<Tree> collect();
  // Drains the stream, counting without storing.
  long long count();

 private:
  FreeTreeGenerator generator_;
  Predicate keep_;
};

TreeStream all_trees(int n);
// Trees of order 1 + sum(lengths) whose segment sequence equals `lengths`.
// Throws Unrealizable for two segments.
TreeStream trees_with_segment_sequence(const SegmentSequence& lengths);
// Trees of order n with exactly m segments (empty when m = 2).
TreeStream trees_with_segment_count(int n, int m);

// Tree described by a level sequence (preorder depths, root at depth 0).
Tree tree_from_levels(const std::vector<int>& levels);

}  // namespace stw
