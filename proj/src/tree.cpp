#include "stw/tree.hpp"

#include <algorithm>
#include <string>

#include "stw/error.hpp"

namespace stw {

Tree::Tree(int n, std::span<const Edge> edges) {
  if (n < 1) throw Error(ErrorKind::InvalidTree, "a tree needs at least one vertex");
  if (static_cast<long long>(edges.size()) != n - 1) {
    throw Error(ErrorKind::InvalidTree, "expected " + std::to_string(n - 1) + " edges, got " +
                                            std::to_string(edges.size()));
  }
  adjacency_.assign(n, {});
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorKind::InvalidTree, "vertex id out of range in edge " +
                                              std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    if (e.u == e.v) throw Error(ErrorKind::InvalidTree, "self-loop at " + std::to_string(e.u));
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw Error(ErrorKind::InvalidTree, "parallel edge");
    }
  }
  // n-1 edges plus connectivity implies acyclic.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw Error(ErrorKind::InvalidTree, "graph is disconnected");
}

Tree Tree::path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Tree(n, edges);
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> out;
  out.reserve(adjacency_.size());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<Vertex> Tree::branch_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order(); ++v) {
    if (is_branch(v)) out.push_back(v);
  }
  return out;
}

int Tree::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

std::vector<Vertex> path_between(const Tree& t, Vertex from, Vertex to) {
  std::vector<Vertex> parent(t.order(), -1);
  std::vector<Vertex> queue{from};
  parent[from] = from;
  for (std::size_t head = 0; head < queue.size() && parent[to] < 0; ++head) {
    const Vertex v = queue[head];
    for (Vertex w : t.neighbors(v)) {
      if (parent[w] < 0) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Vertex> component_without_edge(const Tree& t, Vertex root, Vertex cut) {
  std::vector<Vertex> out{root};
  std::vector<Vertex> parent(t.order(), -1);
  parent[root] = cut;
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Vertex v = out[head];
    for (Vertex w : t.neighbors(v)) {
      if (w != parent[v]) {
        parent[w] = v;
        out.push_back(w);
      }
    }
  }
  return out;
}

int side_size(const Tree& t, Vertex side, Vertex other) {
  return static_cast<int>(component_without_edge(t, side, other).size());
}

}  // namespace stw
