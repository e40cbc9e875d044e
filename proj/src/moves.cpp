#include "stw/moves.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "stw/canonical.hpp"
#include "stw/error.hpp"
#include "stw/steiner.hpp"

namespace stw {

namespace {

[[noreturn]] void invalid(const std::string& why) {
  throw Error(ErrorKind::InvalidDescriptor, why);
}

void check_vertex(const Tree& t, Vertex v) {
  if (v < 0 || v >= t.order()) invalid("vertex " + std::to_string(v) + " out of range");
}

bool adjacent(const Tree& t, Vertex u, Vertex v) {
  const auto nb = t.neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

// Path u..v must be a segment whose two ends are branch vertices.
std::vector<Vertex> internal_segment(const Tree& t, Vertex u, Vertex v) {
  check_vertex(t, u);
  check_vertex(t, v);
  if (u == v) invalid("segment ends coincide");
  if (!t.is_branch(u) || !t.is_branch(v)) invalid("segment ends must be branch vertices");
  auto path = path_between(t, u, v);
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    if (t.degree(path[i]) != 2) invalid("path between the ends is not a single segment");
  }
  return path;
}

// Follows degree-2 vertices from `start` via `first` to the next key vertex.
Vertex segment_end(const Tree& t, Vertex start, Vertex first) {
  Vertex prev = start;
  Vertex cur = first;
  while (t.degree(cur) == 2) {
    const auto nb = t.neighbors(cur);
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return cur;
}

struct SlideLayout {
  std::vector<Vertex> path;
  int first = 0;  // index of block_first
  int last = 0;   // index of block_last
};

SlideLayout slide_layout(const Tree& t, const SlideMove& m) {
  for (Vertex v : {m.anchor_from, m.anchor_to, m.block_first, m.block_last}) check_vertex(t, v);
  if (m.anchor_from == m.anchor_to) invalid("slide anchors coincide");
  SlideLayout layout;
  layout.path = path_between(t, m.anchor_from, m.anchor_to);
  const auto& path = layout.path;
  const auto pos = [&](Vertex v) {
    return static_cast<int>(std::find(path.begin(), path.end(), v) - path.begin());
  };
  const int len = static_cast<int>(path.size()) - 1;
  layout.first = pos(m.block_first);
  layout.last = pos(m.block_last);
  if (layout.first > len || layout.last > len) invalid("block is not on the anchor path");
  if (layout.first > layout.last) invalid("block_first must precede block_last");
  if (layout.first < 1 || layout.last > len - 1) invalid("block must avoid the anchors");
  if (!t.is_branch(m.block_first) || !t.is_branch(m.block_last)) {
    invalid("block ends must be branch vertices");
  }
  if (t.degree(m.anchor_from) == 2 || t.degree(m.anchor_to) == 2) {
    invalid("anchors must be leaves or branch vertices");
  }
  for (int i = 1; i < layout.first; ++i) {
    if (t.degree(path[i]) != 2) invalid("left flank is not a single segment");
  }
  for (int i = layout.last + 1; i < len; ++i) {
    if (t.degree(path[i]) != 2) invalid("right flank is not a single segment");
  }
  return layout;
}

std::vector<Edge> edges_without(const Tree& t, const std::set<std::pair<Vertex, Vertex>>& drop) {
  std::vector<Edge> out;
  for (const Edge& e : t.edges()) {
    if (!drop.count({e.u, e.v})) out.push_back(e);
  }
  return out;
}

std::pair<Vertex, Vertex> key(Vertex a, Vertex b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

Tree do_switch(const Tree& t, const SwitchMove& m) {
  const auto path = internal_segment(t, m.w0, m.ws);
  check_vertex(t, m.a_root);
  check_vertex(t, m.b_root);
  if (!adjacent(t, m.w0, m.a_root) || m.a_root == path[1]) {
    invalid("a_root must be a neighbor of w0 off the segment");
  }
  if (!adjacent(t, m.ws, m.b_root) || m.b_root == path[path.size() - 2]) {
    invalid("b_root must be a neighbor of ws off the segment");
  }
  auto edges = edges_without(t, {key(m.w0, m.a_root), key(m.ws, m.b_root)});
  edges.push_back({m.ws, m.a_root});
  edges.push_back({m.w0, m.b_root});
  return Tree(t.order(), edges);
}

Tree do_slide(const Tree& t, const SlideMove& m) {
  const SlideLayout layout = slide_layout(t, m);
  const auto& path = layout.path;
  const int len = static_cast<int>(path.size()) - 1;
  const int right = len - layout.last;  // p'
  std::set<std::pair<Vertex, Vertex>> drop;
  std::vector<Vertex> pool;
  for (int i = 0; i < layout.first; ++i) {
    drop.insert(key(path[i], path[i + 1]));
    if (i > 0) pool.push_back(path[i]);
  }
  for (int i = layout.last; i < len; ++i) {
    drop.insert(key(path[i], path[i + 1]));
    if (i > layout.last) pool.push_back(path[i]);
  }
  auto edges = edges_without(t, drop);
  // New left flank has p' edges, new right flank p edges.
  std::vector<Vertex> chain{m.anchor_from};
  chain.insert(chain.end(), pool.begin(), pool.begin() + (right - 1));
  chain.push_back(m.block_first);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) edges.push_back({chain[i], chain[i + 1]});
  chain.assign(1, m.block_last);
  chain.insert(chain.end(), pool.begin() + (right - 1), pool.end());
  chain.push_back(m.anchor_to);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) edges.push_back({chain[i], chain[i + 1]});
  return Tree(t.order(), edges);
}

Tree do_reattach(const Tree& t, const ReattachMove& m) {
  const auto path = internal_segment(t, m.u1, m.u2);
  const ReattachMove expected = reattach_for(t, m.u1, m.u2);
  auto moved = m.moved;
  std::sort(moved.begin(), moved.end());
  if (moved != expected.moved) {
    invalid("reattachment must move every neighbor of u1 off the segment");
  }
  std::set<std::pair<Vertex, Vertex>> drop;
  for (Vertex x : moved) drop.insert(key(m.u1, x));
  auto edges = edges_without(t, drop);
  for (Vertex x : moved) edges.push_back({m.u2, x});
  return Tree(t.order(), edges);
}

MoveOutcome outcome(const Tree& before, Tree after, int k) {
  const ExactCount delta = sw_k(after, k) - sw_k(before, k);
  return MoveOutcome{std::move(after), delta};
}

}  // namespace

MoveKind kind_of(const MoveDescriptor& move) {
  return static_cast<MoveKind>(move.index());
}

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Switch: return "switch";
    case MoveKind::Slide: return "slide";
    case MoveKind::Reattach: return "reattach";
  }
  return "?";
}

std::string describe(const MoveDescriptor& move) {
  struct Visitor {
    std::string operator()(const SwitchMove& m) const {
      return "switch w0=" + std::to_string(m.w0) + " ws=" + std::to_string(m.ws) +
             " A@" + std::to_string(m.a_root) + " B@" + std::to_string(m.b_root);
    }
    std::string operator()(const SlideMove& m) const {
      return "slide path " + std::to_string(m.anchor_from) + ".." + std::to_string(m.anchor_to) +
             " block " + std::to_string(m.block_first) + ".." + std::to_string(m.block_last);
    }
    std::string operator()(const ReattachMove& m) const {
      std::string s = "reattach u1=" + std::to_string(m.u1) + " u2=" + std::to_string(m.u2) +
                      " moved={";
      for (std::size_t i = 0; i < m.moved.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(m.moved[i]);
      }
      return s + "}";
    }
  };
  return std::visit(Visitor{}, move);
}

Tree apply_move(const Tree& t, const MoveDescriptor& move) {
  struct Visitor {
    const Tree& t;
    Tree operator()(const SwitchMove& m) const { return do_switch(t, m); }
    Tree operator()(const SlideMove& m) const { return do_slide(t, m); }
    Tree operator()(const ReattachMove& m) const { return do_reattach(t, m); }
  };
  return std::visit(Visitor{t}, move);
}

void validate_move(const Tree& t, const MoveDescriptor& move) {
  static_cast<void>(apply_move(t, move));
}

bool is_valid_move(const Tree& t, const MoveDescriptor& move) {
  try {
    validate_move(t, move);
    return true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidDescriptor) throw;
    return false;
  }
}

MoveOutcome apply_switch(const Tree& t, const MoveDescriptor& move, int k) {
  if (kind_of(move) != MoveKind::Switch) invalid("expected a switch descriptor");
  return outcome(t, apply_move(t, move), k);
}

MoveOutcome apply_slide(const Tree& t, const MoveDescriptor& move, int k) {
  if (kind_of(move) != MoveKind::Slide) invalid("expected a slide descriptor");
  return outcome(t, apply_move(t, move), k);
}

MoveOutcome apply_reattach(const Tree& t, const MoveDescriptor& move, int k) {
  if (kind_of(move) != MoveKind::Reattach) invalid("expected a reattach descriptor");
  return outcome(t, apply_move(t, move), k);
}

MoveOutcome apply_move(const Tree& t, const MoveDescriptor& move, int k) {
  return outcome(t, apply_move(t, move), k);
}

SwitchSizes switch_sizes(const Tree& t, const SwitchMove& m) {
  validate_move(t, m);
  const auto path = path_between(t, m.w0, m.ws);
  SwitchSizes s;
  s.a = side_size(t, m.a_root, m.w0);
  s.b = side_size(t, m.b_root, m.ws);
  s.x = side_size(t, m.w0, path[1]) - s.a;
  s.y = side_size(t, m.ws, path[path.size() - 2]) - s.b;
  return s;
}

ReattachMove reattach_for(const Tree& t, Vertex u1, Vertex u2) {
  const auto path = internal_segment(t, u1, u2);
  ReattachMove m{u1, u2, {}};
  for (Vertex w : t.neighbors(u1)) {
    if (w != path[1]) m.moved.push_back(w);
  }
  return m;
}

std::vector<MoveDescriptor> enumerate_moves(const Tree& t) {
  std::vector<MoveDescriptor> out;
  const auto branches = t.branch_vertices();
  if (branches.empty()) return out;

  // Switches and reattachments live on segments joining two branch vertices.
  for (Vertex w0 : branches) {
    for (Vertex first : t.neighbors(w0)) {
      const Vertex ws = segment_end(t, w0, first);
      if (!t.is_branch(ws) || ws < w0) continue;
      const auto path = path_between(t, w0, ws);
      const Vertex before_ws = path[path.size() - 2];
      for (Vertex a : t.neighbors(w0)) {
        if (a == first) continue;
        for (Vertex b : t.neighbors(ws)) {
          if (b != before_ws) out.emplace_back(SwitchMove{w0, ws, a, b});
        }
      }
      out.emplace_back(reattach_for(t, w0, ws));
      out.emplace_back(reattach_for(t, ws, w0));
    }
  }

  // Slides: a block between branch vertices bf..bl with one segment on each side.
  auto add_slide = [&](Vertex from, Vertex to, Vertex bf, Vertex bl) {
    if (from < to) {
      out.emplace_back(SlideMove{from, to, bf, bl});
    } else {
      out.emplace_back(SlideMove{to, from, bl, bf});
    }
  };
  for (Vertex bf : branches) {
    const auto nb = t.neighbors(bf);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        add_slide(segment_end(t, bf, nb[i]), segment_end(t, bf, nb[j]), bf, bf);
      }
    }
    for (Vertex bl : branches) {
      if (bl <= bf) continue;
      const auto core = path_between(t, bf, bl);
      for (Vertex x : t.neighbors(bf)) {
        if (x == core[1]) continue;
        for (Vertex y : t.neighbors(bl)) {
          if (y == core[core.size() - 2]) continue;
          add_slide(segment_end(t, bf, x), segment_end(t, bl, y), bf, bl);
        }
      }
    }
  }
  return out;
}

std::vector<Neighbor> neighbors(const Tree& t, int k) {
  std::vector<Neighbor> out;
  const ExactCount base = sw_k(t, k);
  const CanonicalCode code = canonical_code(t);
  for (auto& move : enumerate_moves(t)) {
    Tree after = apply_move(t, move);
    if (canonical_code(after) == code) continue;
    const ExactCount delta = sw_k(after, k) - base;
    out.push_back(Neighbor{std::move(move), MoveOutcome{std::move(after), delta}});
  }
  return out;
}

ClimbResult hill_climb(const Tree& t, int k, Direction direction) {
  ClimbResult result{t, sw_k(t, k), {}};
  const int sign = direction == Direction::Maximize ? 1 : -1;
  while (true) {
    auto options = neighbors(result.tree, k);
    const Neighbor* best = nullptr;
    CanonicalCode best_code;
    for (const Neighbor& nb : options) {
      const ExactCount gain = nb.outcome.delta * ExactCount(sign);
      if (gain <= ExactCount(0)) continue;
      if (best != nullptr) {
        const ExactCount best_gain = best->outcome.delta * ExactCount(sign);
        if (gain < best_gain) continue;
        if (gain == best_gain) {
          CanonicalCode code = canonical_code(nb.outcome.tree);
          if (!(code < best_code)) continue;
          best = &nb;
          best_code = std::move(code);
          continue;
        }
      }
      best = &nb;
      best_code = canonical_code(nb.outcome.tree);
    }
    if (best == nullptr) return result;
    result.value += best->outcome.delta;
    result.steps.push_back(ClimbStep{best->move, best->outcome.delta, result.value});
    result.tree = best->outcome.tree;
  }
}

}  // namespace stw
