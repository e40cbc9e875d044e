#pragma once

#include <span>
#include <vector>

#include "stw/exact_count.hpp"
#include "stw/tree.hpp"

namespace stw {

// Largest order accepted by sw_k_bruteforce.
inline constexpr int kBruteForceMaxOrder = 20;

// Edge count of the smallest subtree containing every vertex of `set`.
// Throws EmptySet for an empty set and OutOfRange for a bad vertex id.
ExactCount steiner_distance(const Tree& t, std::span<const Vertex> set);

// Sum of distances over unordered vertex pairs.
ExactCount wiener(const Tree& t);

// Steiner k-Wiener index by summing steiner_distance over every k-subset.
// Requires 1 <= k <= n and n <= kBruteForceMaxOrder.
ExactCount sw_k_bruteforce(const Tree& t, int k);

// Steiner k-Wiener index by edge contributions: an edge with a vertices on
// one side lies in the Steiner tree of S iff S meets both sides, giving
// C(n,k) - C(a,k) - C(n-a,k) per edge.
ExactCount sw_k(const Tree& t, int k);

// values[k-1] = SW_k for k = 1..n.
struct SWProfile {
  std::vector<ExactCount> values;
  ExactCount at(int k) const { return values.at(k - 1); }
};
SWProfile sw_profile(const Tree& t);

// Vertex count of the side of each edge containing its larger endpoint id,
// one entry per edge in Tree::edges() order.
std::vector<int> edge_side_sizes(const Tree& t);

}  // namespace stw
