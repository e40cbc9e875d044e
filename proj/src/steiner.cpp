#include "stw/steiner.hpp"

#include <string>

#include "stw/error.hpp"

namespace stw {

namespace {

void check_k(const Tree& t, int k) {
  if (k < 1 || k > t.order()) {
    throw Error(ErrorKind::OutOfRange, "k=" + std::to_string(k) + " outside 1.." +
                                           std::to_string(t.order()));
  }
}

}  // namespace

ExactCount steiner_distance(const Tree& t, std::span<const Vertex> set) {
  if (set.empty()) throw Error(ErrorKind::EmptySet, "Steiner distance of the empty set");
  const int n = t.order();
  std::vector<char> required(n, 0);
  for (Vertex v : set) {
    if (v < 0 || v >= n) throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v));
    required[v] = 1;
  }
  // Strip leaves outside the set until every remaining leaf is required.
  std::vector<int> degree(n);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1 && !required[v]) stack.push_back(v);
  }
  std::vector<char> removed(n, 0);
  int kept = n;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (removed[v]) continue;
    removed[v] = 1;
    --kept;
    for (Vertex w : t.neighbors(v)) {
      if (!removed[w] && --degree[w] == 1 && !required[w]) stack.push_back(w);
    }
  }
  return kept - 1;
}

std::vector<int> edge_side_sizes(const Tree& t) {
  const int n = t.order();
  // Sizes of subtrees when rooted at 0.
  std::vector<Vertex> order{0};
  std::vector<Vertex> parent(n, -1);
  parent[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : t.neighbors(order[head])) {
      if (parent[w] < 0) {
        parent[w] = order[head];
        order.push_back(w);
      }
    }
  }
  std::vector<int> subtree(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != 0) subtree[parent[*it]] += subtree[*it];
  }
  std::vector<int> sizes;
  for (const Edge& e : t.edges()) {
    const Vertex child = parent[e.v] == e.u ? e.v : e.u;
    const int below = subtree[child];
    sizes.push_back(child == e.v ? below : n - below);
  }
  return sizes;
}

ExactCount wiener(const Tree& t) {
  const long long n = t.order();
  ExactCount total = 0;
  for (int a : edge_side_sizes(t)) total += ExactCount(a) * ExactCount(n - a);
  return total;
}

ExactCount sw_k_bruteforce(const Tree& t, int k) {
  check_k(t, k);
  const int n = t.order();
  if (n > kBruteForceMaxOrder) {
    throw Error(ErrorKind::OutOfRange, "brute force limited to n <= " +
                                           std::to_string(kBruteForceMaxOrder));
  }
  std::vector<Vertex> subset(k);
  for (int i = 0; i < k; ++i) subset[i] = i;
  ExactCount total = 0;
  while (true) {
    total += steiner_distance(t, subset);
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return total;
}

ExactCount sw_k(const Tree& t, int k) {
  check_k(t, k);
  const long long n = t.order();
  const ExactCount all = binomial(n, k);
  ExactCount total = 0;
  for (int a : edge_side_sizes(t)) total += all - binomial(a, k) - binomial(n - a, k);
  return total;
}

SWProfile sw_profile(const Tree& t) {
  const int n = t.order();
  // multiplicity[a] = number of edges with a vertices on the counted side;
  // symmetric in a <-> n-a for the contribution, so one side suffices.
  std::vector<long long> multiplicity(n + 1, 0);
  for (int a : edge_side_sizes(t)) ++multiplicity[a];
  SWProfile profile;
  profile.values.reserve(n);
  for (int k = 1; k <= n; ++k) {
    const ExactCount all = binomial(n, k);
    ExactCount value = 0;
    for (int a = 1; a < n; ++a) {
      if (multiplicity[a] == 0) continue;
      value += ExactCount(multiplicity[a]) * (all - binomial(a, k) - binomial(n - a, k));
    }
    profile.values.push_back(value);
  }
  return profile;
}

}  // namespace stw
