#pragma once

#include <vector>

#include "stw/tree.hpp"

namespace fixture {

inline stw::Tree star(int leaves) {
  std::vector<stw::Edge> e;
  for (int v = 1; v <= leaves; ++v) e.push_back({0, v});
  return stw::Tree(leaves + 1, e);
}

// Starlike, segment sequence (3,2,2,2,1,1,1,1,1); center 0.
// Leg tips: 3 (length 3), 5, 7, 9 (length 2).
inline stw::Tree starlike15() {
  return stw::Tree(15, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {0, 6}, {6, 7}, {0, 8}, {8, 9},
                        {0, 10}, {0, 11}, {0, 12}, {0, 13}, {0, 14}});
}

// Backbone 0..6; pendants: 1-7; 3-8-9; 3-10-11-12; 4-13; 4-14.
inline stw::Tree quasi_cat15() {
  return stw::Tree(15, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 7}, {3, 8}, {8, 9},
                        {3, 10}, {10, 11}, {11, 12}, {4, 13}, {4, 14}});
}

// Two adjacent degree-3 vertices, 6 vertices.
inline stw::Tree h_tree() { return stw::Tree(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}); }

inline stw::Tree spider(const std::vector<int>& legs) {
  std::vector<stw::Edge> e;
  int next = 1;
  for (int len : legs) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      e.push_back({prev, next});
      prev = next++;
    }
  }
  return stw::Tree(next, e);
}

}  // namespace fixture
