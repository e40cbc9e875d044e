#pragma once

// Independent reference implementations. Nothing here calls into the library
// except the Tree container itself.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "stw/tree.hpp"

namespace oracle {

using Adj = std::vector<std::vector<int>>;

inline Adj adjacency(const stw::Tree& t) {
  Adj g(t.order());
  for (const auto& e : t.edges()) {
    g[e.u].push_back(e.v);
    g[e.v].push_back(e.u);
  }
  return g;
}

inline std::vector<int> bfs_dist(const Adj& g, int s) {
  std::vector<int> d(g.size(), -1);
  std::queue<int> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g[v]) {
      if (d[w] < 0) {
        d[w] = d[v] + 1;
        q.push(w);
      }
    }
  }
  return d;
}

inline long long wiener(const stw::Tree& t) {
  const Adj g = adjacency(t);
  long long total = 0;
  for (int u = 0; u < t.order(); ++u) {
    const auto d = bfs_dist(g, u);
    for (int v = u + 1; v < t.order(); ++v) total += d[v];
  }
  return total;
}

inline bool connected_mask(const Adj& g, std::uint32_t mask) {
  if (mask == 0) return false;
  int start = __builtin_ctz(mask);
  std::uint32_t seen = 1u << start;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g[v]) {
      if ((mask >> w & 1u) && !(seen >> w & 1u)) {
        seen |= 1u << w;
        stack.push_back(w);
      }
    }
  }
  return seen == mask;
}

// Smallest connected vertex set containing S, by scanning all supersets.
inline long long steiner_distance(const stw::Tree& t, const std::vector<int>& s) {
  const Adj g = adjacency(t);
  const int n = t.order();
  std::uint32_t need = 0;
  for (int v : s) need |= 1u << v;
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if ((mask & need) != need) continue;
    const int size = __builtin_popcount(mask);
    if (size < best && connected_mask(g, mask)) best = size;
  }
  return best - 1;
}

// Sum of d(S) over k-subsets, with d from the superset scan; n <= 12.
inline long long sw_k(const stw::Tree& t, int k) {
  const int n = t.order();
  const Adj g = adjacency(t);
  // min connected superset size for every mask, by dynamic programming over masks
  std::vector<int> conn(1u << n, 0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    conn[mask] = connected_mask(g, mask) ? __builtin_popcount(mask) : n + 1;
  }
  // best[m] = min over supersets of m of conn; propagate downward
  std::vector<int> best = conn;
  for (int bit = 0; bit < n; ++bit) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (!(mask >> bit & 1u)) best[mask] = std::min(best[mask], best[mask | (1u << bit)]);
    }
  }
  long long total = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) == k) total += best[mask] - 1;
  }
  return total;
}

// Rooted AHU string, children sorted.
inline std::string ahu(const Adj& g, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : g[v]) {
    if (w != parent) kids.push_back(ahu(g, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

// Minimum rooted code over every root: slow but obviously correct.
inline std::string canonical(const Adj& g) {
  std::string best;
  for (int r = 0; r < static_cast<int>(g.size()); ++r) {
    std::string c = ahu(g, r, -1);
    if (r == 0 || c < best) best = c;
  }
  return best;
}

inline Adj from_pruefer(const std::vector<int>& seq, int n) {
  Adj g(n);
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  for (int x : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        g[leaf].push_back(x);
        g[x].push_back(leaf);
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        g[u].push_back(v);
        g[v].push_back(u);
      }
    }
  }
  return g;
}

// Number of isomorphism classes among all n^(n-2) labelled trees.
inline long long free_tree_count(int n) {
  if (n <= 2) return 1;
  std::set<std::string> codes;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    codes.insert(canonical(from_pruefer(seq, n)));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return static_cast<long long>(codes.size());
}

inline std::string canonical(const stw::Tree& t) { return canonical(adjacency(t)); }

// Pendant segments removed literally; remainder must be a path (or one vertex).
inline bool is_quasi_caterpillar(const stw::Tree& t) {
  const Adj g = adjacency(t);
  const int n = t.order();
  if (n <= 2) return true;
  std::vector<bool> gone(n, false);
  for (int leaf = 0; leaf < n; ++leaf) {
    if (g[leaf].size() != 1) continue;
    int prev = leaf;
    int cur = g[leaf][0];
    std::vector<int> walk{leaf};
    while (g[cur].size() == 2) {
      walk.push_back(cur);
      int nxt = g[cur][0] == prev ? g[cur][1] : g[cur][0];
      prev = cur;
      cur = nxt;
    }
    if (g[cur].size() == 1) return true;  // the tree is a path
    for (int v : walk) gone[v] = true;
  }
  int edges = 0;
  int vertices = 0;
  for (int v = 0; v < n; ++v) {
    if (gone[v]) continue;
    ++vertices;
    int d = 0;
    for (int w : g[v]) d += gone[w] ? 0 : 1;
    if (d > 2) return false;
    edges += d;
  }
  return edges / 2 == vertices - 1;
}

// Does some ordering of each group's entries make the flattened list
// non-increasing then non-decreasing? Tries every permutation.
inline bool valley_by_permutation(std::vector<std::vector<int>> groups) {
  std::vector<std::vector<std::vector<int>>> options;
  for (auto& grp : groups) {
    std::sort(grp.begin(), grp.end());
    std::vector<std::vector<int>> perms;
    do perms.push_back(grp);
    while (std::next_permutation(grp.begin(), grp.end()));
    options.push_back(perms);
  }
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    std::vector<int> flat;
    for (std::size_t i = 0; i < options.size(); ++i) {
      flat.insert(flat.end(), options[i][pick[i]].begin(), options[i][pick[i]].end());
    }
    std::size_t i = 0;
    while (i + 1 < flat.size() && flat[i] >= flat[i + 1]) ++i;
    while (i + 1 < flat.size() && flat[i] <= flat[i + 1]) ++i;
    if (i + 1 >= flat.size()) return true;
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == options[j].size()) pick[j++] = 0;
    if (j == pick.size()) return false;
  }
}

inline stw::Tree random_tree(int n, std::mt19937_64& rng) {
  if (n == 1) return stw::Tree::single_vertex();
  std::vector<stw::Edge> edges;
  for (int v = 1; v < n; ++v) {
    edges.push_back({static_cast<int>(rng() % static_cast<unsigned>(v)), v});
  }
  return stw::Tree(n, edges);
}

inline stw::Tree relabel(const stw::Tree& t, std::mt19937_64& rng) {
  std::vector<int> perm(t.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<stw::Edge> edges;
  for (const auto& e : t.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return stw::Tree(t.order(), edges);
}

// Segment lengths by walking from every leaf and every branch vertex.
inline std::vector<int> segment_lengths(const stw::Tree& t) {
  const Adj g = adjacency(t);
  std::vector<int> out;
  for (int v = 0; v < t.order(); ++v) {
    if (g[v].size() == 2) continue;
    for (int first : g[v]) {
      int prev = v;
      int cur = first;
      int len = 1;
      while (g[cur].size() == 2) {
        int nxt = g[cur][0] == prev ? g[cur][1] : g[cur][0];
        prev = cur;
        cur = nxt;
        ++len;
      }
      if (v < cur) out.push_back(len);
    }
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace oracle
