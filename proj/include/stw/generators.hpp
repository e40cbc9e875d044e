#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stw/segments.hpp"
#include "stw/tree.hpp"

namespace stw {

// Center vertex 0 with pendant paths of the given lengths; the path for a
// single segment. Throws Unrealizable for two segments.
Tree starlike(const SegmentSequence& lengths);

// Starlike tree with m legs whose lengths differ by at most one and sum to n-1.
Tree balanced_starlike(int n, int m);

struct PendantSpec {
  int joint = 0;   // backbone joint index, 1..k-1
  int length = 0;  // edges in the pendant path
};

// Backbone v_0..v_k with segment lengths r_1..r_k and the listed pendant
// paths hung at joints. Every joint needs at least one pendant.
Tree quasi_caterpillar(const std::vector<int>& backbone_lengths,
                       const std::vector<PendantSpec>& pendants);

enum class Family { I, II, III, IV };

const char* to_string(Family f);
// "i", "ii", "iii", "iv" (case-insensitive); throws ParseError.
Family parse_family(const std::string& text);

struct CaterpillarFamilyParams {
  int n = 0;
  int m = 0;
  Family which = Family::II;
};

// Intended degrees of the internal backbone vertices v_1..v_{t-1}.
// Throws ParityMismatch when m does not suit the family and
// InconsistentOrder when the degree blocks do not fit in t-1 vertices.
std::vector<int> family_degree_pattern(Family which, int m, int t);

// Backbone edge count given by the closed form, or nullopt when
// that expression is not an integer for this m.
std::optional<int> closed_form_backbone_length(Family which, int n, int m);

// Backbone edge count that makes a family member have order exactly n.
int order_consistent_backbone_length(Family which, int n, int m);

struct FamilyTree {
  Tree tree;
  int backbone_length = 0;                  // t actually used
  std::optional<int> closed_form_length;    // t from the closed form
  std::vector<int> degree_pattern;          // degrees of v_1..v_{t-1}
  std::string note;                         // non-empty when the two t differ
};

// Caterpillar with pendant edges placed per the family's degree pattern,
// order n and m segments.
FamilyTree family_T(const CaterpillarFamilyParams& params);

// The family member built on a backbone of exactly t edges; its order is
// t + 1 + (number of pendant edges), which need not equal any requested n.
Tree family_caterpillar(Family which, int m, int t);

}  // namespace stw
