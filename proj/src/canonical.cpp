#include "stw/canonical.hpp"

#include <algorithm>

#include "stw/error.hpp"

namespace stw {

std::vector<Vertex> centers(const Tree& t) {
  const int n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<int> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : t.neighbors(v)) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string rooted_code(const Tree& t, Vertex root) {
  const int n = t.order();
  std::vector<Vertex> order{root};
  std::vector<Vertex> parent(n, -1);
  parent[root] = root;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex v = order[head];
    for (Vertex w : t.neighbors(v)) {
      if (parent[w] < 0) {
        parent[w] = v;
        order.push_back(w);
      }
    }
  }
  std::vector<std::vector<std::string>> child_codes(n);
  std::vector<std::string> code(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    auto& kids = child_codes[v];
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    s += ')';
    kids.clear();
    if (v == root) return s;
    child_codes[parent[v]].push_back(std::move(s));
  }
  return {};
}

CanonicalCode canonical_code(const Tree& t) {
  const auto c = centers(t);
  std::string best = rooted_code(t, c[0]);
  if (c.size() == 2) best = std::min(best, rooted_code(t, c[1]));
  return CanonicalCode{std::move(best)};
}

bool is_isomorphic(const Tree& a, const Tree& b) {
  return a.order() == b.order() && canonical_code(a) == canonical_code(b);
}

Tree tree_from_code(const std::string& code) {
  if (code.empty() || code.front() != '(') throw Error(ErrorKind::ParseError, "empty tree code");
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  int next_id = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const char c = code[i];
    if (c == '(') {
      if (next_id > 0 && stack.empty()) {
        throw Error(ErrorKind::ParseError, "tree code has more than one root");
      }
      if (!stack.empty()) edges.push_back({stack.back(), next_id});
      stack.push_back(next_id++);
    } else if (c == ')') {
      if (stack.empty()) throw Error(ErrorKind::ParseError, "unbalanced tree code");
      stack.pop_back();
    } else {
      throw Error(ErrorKind::ParseError, std::string("unexpected character '") + c + "'");
    }
  }
  if (!stack.empty()) throw Error(ErrorKind::ParseError, "unbalanced tree code");
  return Tree(next_id, edges);
}

}  // namespace stw
