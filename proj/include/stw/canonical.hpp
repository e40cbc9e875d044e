#pragma once

#include <string>
#include <vector>

#include "stw/tree.hpp"

namespace stw {

// AHU parenthesis encoding rooted at the tree's center; for bicentral trees
// the lexicographically smaller of the two rooted encodings. Equal codes iff
// isomorphic trees.
struct CanonicalCode {
  std::string code;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

// One or two center vertices (minimum eccentricity).
std::vector<Vertex> centers(const Tree& t);

// AHU encoding of t rooted at `root`.
std::string rooted_code(const Tree& t, Vertex root);

CanonicalCode canonical_code(const Tree& t);
bool is_isomorphic(const Tree& a, const Tree& b);

// Inverse of rooted encoding: vertex 0 is the root, ids in preorder.
// Throws ParseError on unbalanced or empty input.
Tree tree_from_code(const std::string& code);

}  // namespace stw
