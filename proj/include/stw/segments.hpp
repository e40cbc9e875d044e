#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stw/tree.hpp"

namespace stw {

// Maximal path whose interior vertices have degree 2 and whose ends are
// leaves or branch vertices.
struct Segment {
  std::vector<Vertex> vertices;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
};

// Non-increasing list of positive segment lengths.
class SegmentSequence {
 public:
  SegmentSequence() = default;
  // Sorts into non-increasing order; throws OutOfRange on a non-positive entry.
  explicit SegmentSequence(std::vector<int> lengths);

  const std::vector<int>& lengths() const { return lengths_; }
  int count() const { return static_cast<int>(lengths_.size()); }
  // 1 + sum of lengths.
  int order() const;
  // A tree with this sequence exists iff there is one segment or at least three.
  bool realizable() const { return count() == 1 || count() >= 3; }

  // "3,2,2"
  std::string to_string() const;
  // Accepts comma-separated positive integers in any order.
  static SegmentSequence parse(std::string_view text);

  friend bool operator==(const SegmentSequence&, const SegmentSequence&) = default;
  friend auto operator<=>(const SegmentSequence&, const SegmentSequence&) = default;

 private:
  std::vector<int> lengths_;
};

// Throws EmptyDecomposition for the single-vertex tree.
std::vector<Segment> segment_decomposition(const Tree& t);
SegmentSequence segment_sequence(const Tree& t);
int segment_count(const Tree& t);

// At most one branch vertex; paths qualify.
bool is_starlike(const Tree& t);
// Deleting every pendant segment (except its branch end) leaves a path.
// Paths and starlike trees qualify.
bool is_quasi_caterpillar(const Tree& t);
// Quasi-caterpillar whose pendant segments all have length 1.
bool is_caterpillar(const Tree& t);

struct BackboneView {
  std::vector<Vertex> path;                     // v_0 .. leaf to leaf
  std::vector<int> branch_indices;              // positions in `path`
  std::vector<int> backbone_segment_lengths;    // r_1 .. r_k
  std::vector<std::vector<int>> pendant_groups; // per branch vertex, in backbone order
  std::vector<int> pendant_segment_lengths;     // s_1 .. s_k' flattened

  // Ordering key used to pick a representative among equal-length backbones.
  std::vector<int> encoding() const;
};

// Every longest path containing all branch vertices, in both orientations.
// Throws NotQuasiCaterpillar.
std::vector<BackboneView> all_backbones(const Tree& t);
// The candidate with the smallest encoding (ties: smallest vertex path).
BackboneView backbone(const Tree& t);

}  // namespace stw
