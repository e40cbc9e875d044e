#include "stw/segments.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "stw/error.hpp"

namespace stw {

SegmentSequence::SegmentSequence(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  for (int len : lengths_) {
    if (len <= 0) throw Error(ErrorKind::OutOfRange, "segment lengths must be positive");
  }
  std::sort(lengths_.begin(), lengths_.end(), std::greater<>());
}

int SegmentSequence::order() const {
  return 1 + std::accumulate(lengths_.begin(), lengths_.end(), 0);
}

std::string SegmentSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(lengths_[i]);
  }
  return out;
}

SegmentSequence SegmentSequence::parse(std::string_view text) {
  std::vector<int> lengths;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::ParseError, "bad segment length '" + std::string(token) + "'");
    }
    lengths.push_back(value);
    start = end + 1;
  }
  return SegmentSequence(std::move(lengths));
}

namespace {

// Follows degree-2 vertices from `start` (a key vertex) through `first`
// until the next vertex of degree != 2.
std::vector<Vertex> walk_segment(const Tree& t, Vertex start, Vertex first) {
  std::vector<Vertex> path{start, first};
  Vertex prev = start;
  Vertex cur = first;
  while (t.degree(cur) == 2) {
    const auto nb = t.neighbors(cur);
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    path.push_back(cur);
  }
  return path;
}

// Flags the vertices removed when all pendant segments are deleted. Only
// meaningful when the tree has at least two branch vertices.
std::vector<char> pendant_removal_mask(const Tree& t) {
  std::vector<char> removed(t.order(), 0);
  for (const Segment& seg : segment_decomposition(t)) {
    const bool front_leaf = t.is_leaf(seg.front());
    const bool back_leaf = t.is_leaf(seg.back());
    if (front_leaf == back_leaf) continue;
    for (Vertex v : seg.vertices) {
      if (v != (front_leaf ? seg.back() : seg.front())) removed[v] = 1;
    }
  }
  return removed;
}

BackboneView make_view(const Tree& t, std::vector<Vertex> path) {
  BackboneView view;
  view.path = std::move(path);
  const int len = static_cast<int>(view.path.size());
  int last_key = 0;
  for (int i = 1; i < len; ++i) {
    const Vertex v = view.path[i];
    if (i == len - 1 || t.is_branch(v)) {
      view.backbone_segment_lengths.push_back(i - last_key);
      last_key = i;
    }
    if (i < len - 1 && t.is_branch(v)) {
      view.branch_indices.push_back(i);
      std::vector<int> group;
      for (Vertex w : t.neighbors(v)) {
        if (w == view.path[i - 1] || w == view.path[i + 1]) continue;
        group.push_back(static_cast<int>(walk_segment(t, v, w).size()) - 1);
      }
      std::sort(group.begin(), group.end(), std::greater<>());
      view.pendant_segment_lengths.insert(view.pendant_segment_lengths.end(), group.begin(),
                                          group.end());
      view.pendant_groups.push_back(std::move(group));
    }
  }
  return view;
}

}  // namespace

std::vector<Segment> segment_decomposition(const Tree& t) {
  if (t.order() < 2) {
    throw Error(ErrorKind::EmptyDecomposition, "single-vertex tree has no segments");
  }
  std::vector<Segment> out;
  for (Vertex u = 0; u < t.order(); ++u) {
    if (t.degree(u) == 2) continue;
    for (Vertex w : t.neighbors(u)) {
      auto path = walk_segment(t, u, w);
      // Each segment is walked from both ends; keep the walk from the smaller end.
      if (u < path.back()) out.push_back(Segment{std::move(path)});
    }
  }
  return out;
}

SegmentSequence segment_sequence(const Tree& t) {
  std::vector<int> lengths;
  for (const Segment& seg : segment_decomposition(t)) lengths.push_back(seg.length());
  return SegmentSequence(std::move(lengths));
}

int segment_count(const Tree& t) {
  return static_cast<int>(segment_decomposition(t).size());
}

bool is_starlike(const Tree& t) {
  return t.branch_vertices().size() <= 1;
}

bool is_quasi_caterpillar(const Tree& t) {
  if (t.order() < 2 || is_starlike(t)) return true;
  const auto removed = pendant_removal_mask(t);
  for (Vertex v = 0; v < t.order(); ++v) {
    if (removed[v]) continue;
    int core_degree = 0;
    for (Vertex w : t.neighbors(v)) core_degree += removed[w] ? 0 : 1;
    if (core_degree > 2) return false;
  }
  return true;
}

bool is_caterpillar(const Tree& t) {
  // Deleting every leaf must leave a path.
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.is_leaf(v)) continue;
    int inner = 0;
    for (Vertex w : t.neighbors(v)) inner += t.is_leaf(w) ? 0 : 1;
    if (inner > 2) return false;
  }
  return true;
}

std::vector<int> BackboneView::encoding() const {
  std::vector<int> key = backbone_segment_lengths;
  key.push_back(-1);
  for (const auto& group : pendant_groups) {
    key.insert(key.end(), group.begin(), group.end());
    key.push_back(-2);
  }
  return key;
}

std::vector<BackboneView> all_backbones(const Tree& t) {
  if (t.order() < 2) throw Error(ErrorKind::NotQuasiCaterpillar, "single-vertex tree");
  if (!is_quasi_caterpillar(t)) {
    throw Error(ErrorKind::NotQuasiCaterpillar, "pendant removal does not leave a path");
  }
  std::vector<std::vector<Vertex>> paths;
  const auto branches = t.branch_vertices();
  if (branches.empty()) {
    std::vector<Vertex> leaves;
    for (Vertex v = 0; v < t.order(); ++v) {
      if (t.is_leaf(v)) leaves.push_back(v);
    }
    paths.push_back(path_between(t, leaves[0], leaves[1]));
  } else {
    // Ends of the branch-vertex core; equal when there is one branch vertex.
    Vertex first = branches.front();
    Vertex last = branches.front();
    if (branches.size() > 1) {
      const auto removed = pendant_removal_mask(t);
      std::vector<Vertex> ends;
      for (Vertex v = 0; v < t.order(); ++v) {
        if (removed[v]) continue;
        int core_degree = 0;
        for (Vertex w : t.neighbors(v)) core_degree += removed[w] ? 0 : 1;
        if (core_degree <= 1) ends.push_back(v);
      }
      first = ends.front();
      last = ends.back();
    }
    auto pendants_at = [&](Vertex b, Vertex avoid) {
      std::vector<std::vector<Vertex>> legs;
      for (Vertex w : t.neighbors(b)) {
        if (w == avoid) continue;
        legs.push_back(walk_segment(t, b, w));
      }
      return legs;
    };
    auto join = [](std::vector<Vertex> left_leg, const std::vector<Vertex>& middle,
                   const std::vector<Vertex>& right_leg) {
      std::reverse(left_leg.begin(), left_leg.end());
      std::vector<Vertex> path = left_leg;
      path.insert(path.end(), middle.begin() + 1, middle.end());
      path.insert(path.end(), right_leg.begin() + 1, right_leg.end());
      return path;
    };
    if (first == last) {
      const auto legs = pendants_at(first, -1);
      std::size_t best = 0;
      for (std::size_t i = 0; i < legs.size(); ++i) {
        for (std::size_t j = i + 1; j < legs.size(); ++j) {
          best = std::max(best, legs[i].size() + legs[j].size());
        }
      }
      for (std::size_t i = 0; i < legs.size(); ++i) {
        for (std::size_t j = i + 1; j < legs.size(); ++j) {
          if (legs[i].size() + legs[j].size() == best) {
            paths.push_back(join(legs[i], {first}, legs[j]));
          }
        }
      }
    } else {
      const auto core = path_between(t, first, last);
      const auto left = pendants_at(first, core[1]);
      const auto right = pendants_at(last, core[core.size() - 2]);
      std::size_t left_best = 0;
      std::size_t right_best = 0;
      for (const auto& leg : left) left_best = std::max(left_best, leg.size());
      for (const auto& leg : right) right_best = std::max(right_best, leg.size());
      for (const auto& l : left) {
        if (l.size() != left_best) continue;
        for (const auto& r : right) {
          if (r.size() == right_best) paths.push_back(join(l, core, r));
        }
      }
    }
  }
  std::vector<BackboneView> views;
  for (auto& p : paths) {
    views.push_back(make_view(t, p));
    std::reverse(p.begin(), p.end());
    views.push_back(make_view(t, p));
  }
  return views;
}

BackboneView backbone(const Tree& t) {
  auto views = all_backbones(t);
  return *std::min_element(views.begin(), views.end(),
                           [](const BackboneView& a, const BackboneView& b) {
                             const auto ka = a.encoding();
                             const auto kb = b.encoding();
                             return ka != kb ? ka < kb : a.path < b.path;
                           });
}

}  // namespace stw
