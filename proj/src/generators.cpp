#include "stw/generators.hpp"

#include <algorithm>
#include <cctype>

#include "stw/error.hpp"

namespace stw {

Tree starlike(const SegmentSequence& lengths) {
  const int m = lengths.count();
  if (m == 0) throw Error(ErrorKind::Unrealizable, "empty segment sequence");
  if (m == 2) throw Error(ErrorKind::Unrealizable, "no tree has exactly two segments");
  if (m == 1) return Tree::path(lengths.lengths()[0] + 1);
  std::vector<Edge> edges;
  Vertex next = 1;
  for (int len : lengths.lengths()) {
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  return Tree(next, edges);
}

Tree balanced_starlike(int n, int m) {
  if (m < 1 || m == 2 || m > n - 1) {
    throw Error(ErrorKind::Unrealizable, "no tree of order " + std::to_string(n) + " has " +
                                             std::to_string(m) + " segments");
  }
  const int base = (n - 1) / m;
  const int longer = (n - 1) % m;
  std::vector<int> legs(m, base);
  for (int i = 0; i < longer; ++i) ++legs[i];
  return starlike(SegmentSequence(legs));
}

Tree quasi_caterpillar(const std::vector<int>& backbone_lengths,
                       const std::vector<PendantSpec>& pendants) {
  const int k = static_cast<int>(backbone_lengths.size());
  if (k == 0) throw Error(ErrorKind::InvalidIndex, "backbone needs at least one segment");
  for (int r : backbone_lengths) {
    if (r <= 0) throw Error(ErrorKind::OutOfRange, "backbone lengths must be positive");
  }
  std::vector<int> per_joint(k + 1, 0);
  for (const PendantSpec& p : pendants) {
    if (p.joint < 1 || p.joint > k - 1) {
      throw Error(ErrorKind::InvalidIndex, "pendant joint " + std::to_string(p.joint) +
                                               " outside 1.." + std::to_string(k - 1));
    }
    if (p.length <= 0) throw Error(ErrorKind::OutOfRange, "pendant lengths must be positive");
    ++per_joint[p.joint];
  }
  for (int j = 1; j < k; ++j) {
    if (per_joint[j] == 0) {
      throw Error(ErrorKind::JointWithoutPendant, "joint " + std::to_string(j) +
                                                      " would merge two backbone segments");
    }
  }
  std::vector<Edge> edges;
  std::vector<Vertex> joint_vertex(k + 1, 0);
  Vertex next = 1;
  for (int j = 0; j < k; ++j) {
    Vertex prev = joint_vertex[j];
    for (int i = 0; i < backbone_lengths[j]; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
    joint_vertex[j + 1] = prev;
  }
  for (const PendantSpec& p : pendants) {
    Vertex prev = joint_vertex[p.joint];
    for (int i = 0; i < p.length; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  Tree t(next, edges);

  std::vector<int> expected = backbone_lengths;
  for (const PendantSpec& p : pendants) expected.push_back(p.length);
  if (segment_sequence(t) != SegmentSequence(expected)) {
    throw Error(ErrorKind::InvalidTree, "constructed quasi-caterpillar re-decomposes differently");
  }
  return t;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::I: return "i";
    case Family::II: return "ii";
    case Family::III: return "iii";
    case Family::IV: return "iv";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "i") return Family::I;
  if (lower == "ii") return Family::II;
  if (lower == "iii") return Family::III;
  if (lower == "iv") return Family::IV;
  throw Error(ErrorKind::ParseError, "unknown family '" + text + "' (expected i|ii|iii|iv)");
}

namespace {

// Degree-4 flags at v_1 / v_{t-1} and the sizes of the degree-3 blocks that
// follow v_1 and precede v_{t-1}.
struct Blocks {
  bool four_first = false;
  bool four_last = false;
  int prefix = 0;
  int suffix = 0;

  int pendant_edges() const { return 2 * four_first + 2 * four_last + prefix + suffix; }
  int designated() const { return four_first + four_last + prefix + suffix; }
};

int floor_div4(int x) { return x >= 0 ? x / 4 : -((-x + 3) / 4); }
int ceil_div4(int x) { return -floor_div4(-x); }

Blocks family_blocks(Family which, int m) {
  auto parity = [&](bool ok, const char* rule) {
    if (!ok) {
      throw Error(ErrorKind::ParityMismatch, std::string("family ") + to_string(which) +
                                                 " requires " + rule + ", got m=" +
                                                 std::to_string(m));
    }
  };
  Blocks b;
  switch (which) {
    case Family::I:
      parity(m % 2 == 1 && m >= 7, "odd m >= 7");
      b.four_first = b.four_last = true;
      b.prefix = floor_div4(m - 7);
      b.suffix = ceil_div4(m - 7);
      break;
    case Family::II:
      parity(m % 2 == 1 && m >= 1, "odd m");
      b.prefix = floor_div4(m - 1);
      b.suffix = ceil_div4(m - 1);
      break;
    case Family::III:
      parity(m % 4 == 0 && m >= 4, "m = 0 mod 4");
      b.four_first = true;
      // v_2..v_{m/4-1} and v_{t-m/4}..v_{t-1}; at m = 4 the single degree-4
      // vertex already accounts for all four segments.
      b.prefix = m >= 8 ? m / 4 - 2 : 0;
      b.suffix = m >= 8 ? m / 4 : 0;
      break;
    case Family::IV:
      parity(m % 4 == 2 && m >= 6, "m = 2 mod 4");
      b.four_first = true;
      b.prefix = floor_div4(m - 4);
      b.suffix = ceil_div4(m - 4);
      break;
  }
  return b;
}

}  // namespace

std::vector<int> family_degree_pattern(Family which, int m, int t) {
  const Blocks b = family_blocks(which, m);
  if (t < 1 || b.designated() > t - 1) {
    throw Error(ErrorKind::InconsistentOrder,
                "backbone of " + std::to_string(t) + " edges cannot hold family " +
                    to_string(which) + " with m=" + std::to_string(m));
  }
  std::vector<int> degrees(t - 1, 2);  // degrees[i-1] is d(v_i)
  int lo = 0;
  int hi = t - 2;
  if (b.four_first) degrees[lo++] = 4;
  if (b.four_last) degrees[hi--] = 4;
  for (int i = 0; i < b.prefix; ++i) degrees[lo++] = 3;
  for (int i = 0; i < b.suffix; ++i) degrees[hi--] = 3;
  return degrees;
}

std::optional<int> closed_form_backbone_length(Family which, int n, int m) {
  int twice = 0;
  switch (which) {
    case Family::I: twice = 2 * n - m - 1; break;
    case Family::II: twice = 2 * n - m + 1; break;
    case Family::III:
    case Family::IV: twice = 2 * n - m; break;
  }
  if (twice % 2 != 0) return std::nullopt;
  return twice / 2;
}

int order_consistent_backbone_length(Family which, int n, int m) {
  return n - 1 - family_blocks(which, m).pendant_edges();
}

Tree family_caterpillar(Family which, int m, int t) {
  const auto degrees = family_degree_pattern(which, m, t);
  std::vector<Edge> edges;
  for (int i = 0; i < t; ++i) edges.push_back({i, i + 1});
  Vertex next = t + 1;
  for (int i = 1; i < t; ++i) {
    for (int extra = 0; extra < degrees[i - 1] - 2; ++extra) edges.push_back({i, next++});
  }
  Tree tree(next, edges);
  if (segment_count(tree) != m) {
    throw Error(ErrorKind::InconsistentOrder, "family construction produced " +
                                                  std::to_string(segment_count(tree)) +
                                                  " segments, wanted " + std::to_string(m));
  }
  return tree;
}

FamilyTree family_T(const CaterpillarFamilyParams& params) {
  const int t = order_consistent_backbone_length(params.which, params.n, params.m);
  FamilyTree out{family_caterpillar(params.which, params.m, t), t,
                 closed_form_backbone_length(params.which, params.n, params.m),
                 family_degree_pattern(params.which, params.m, t), {}};
  if (out.tree.order() != params.n) {
    throw Error(ErrorKind::InconsistentOrder, "family tree has order " +
                                                  std::to_string(out.tree.order()));
  }
  if (out.closed_form_length != t) {
    out.note = "closed-form t=" +
               (out.closed_form_length ? std::to_string(*out.closed_form_length) : "non-integral") +
               ", order-consistent t=" + std::to_string(t);
  }
  return out;
}

}  // namespace stw
