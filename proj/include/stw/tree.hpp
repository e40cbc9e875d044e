#pragma once

#include <span>
#include <utility>
#include <vector>

namespace stw {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable free tree on vertices 0..n-1. Construction validates that the
// edge set forms a tree; adjacency lists are kept sorted.
class Tree {
 public:
  // Throws Error(InvalidTree) unless `edges` has exactly n-1 entries, no
  // self-loops or duplicates, all ids in range, and connects all n vertices.
  Tree(int n, std::span<const Edge> edges);
  Tree(int n, std::initializer_list<Edge> edges)
      : Tree(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  static Tree single_vertex() { return Tree(1, std::span<const Edge>{}); }
  // Path 0-1-...-(n-1).
  static Tree path(int n);

  int order() const { return static_cast<int>(adjacency_.size()); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  bool is_leaf(Vertex v) const { return degree(v) == 1; }
  bool is_branch(Vertex v) const { return degree(v) >= 3; }

  // Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::vector<Vertex> branch_vertices() const;
  int max_degree() const;

  // Labelled equality (same vertex count and identical adjacency).
  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
};

// Vertices of the unique path from `from` to `to`, inclusive.
std::vector<Vertex> path_between(const Tree& t, Vertex from, Vertex to);

// Vertex count of the component containing `side` after deleting edge
// {side, other}. The two must be adjacent.
int side_size(const Tree& t, Vertex side, Vertex other);

// Vertices of the component containing `root` in t minus the edge
// {root, cut}, in BFS order starting at root.
std::vector<Vertex> component_without_edge(const Tree& t, Vertex root, Vertex cut);

}  // namespace stw
