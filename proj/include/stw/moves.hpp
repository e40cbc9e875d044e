#pragma once

#include <string>
#include <variant>
#include <vector>

#include "stw/exact_count.hpp"
#include "stw/tree.hpp"

namespace stw {

// Exchange the component A hanging at w0 (rooted at a_root) with the
// component B hanging at ws (rooted at b_root), where w0..ws is a segment
// with two branch-vertex ends.
struct SwitchMove {
  Vertex w0 = 0;
  Vertex ws = 0;
  Vertex a_root = 0;
  Vertex b_root = 0;
};

// On the path anchor_from .. block_first .. block_last .. anchor_to, the
// flanks anchor_from..block_first (p edges) and block_last..anchor_to
// (p' edges) are whole segments. The block and everything hanging from it
// moves so that the flank lengths become p' and p.
struct SlideMove {
  Vertex anchor_from = 0;
  Vertex anchor_to = 0;
  Vertex block_first = 0;
  Vertex block_last = 0;
};

// u1..u2 is a segment between branch vertices; every neighbor of u1 off
// that segment (listed in `moved`, sorted) is re-hung at u2.
struct ReattachMove {
  Vertex u1 = 0;
  Vertex u2 = 0;
  std::vector<Vertex> moved;
};

using MoveDescriptor = std::variant<SwitchMove, SlideMove, ReattachMove>;

enum class MoveKind { Switch, Slide, Reattach };
MoveKind kind_of(const MoveDescriptor& move);
const char* to_string(MoveKind kind);
std::string describe(const MoveDescriptor& move);

struct MoveOutcome {
  Tree tree;
  ExactCount delta;  // SW_k(after) - SW_k(before), by full recomputation
};

// Throws InvalidDescriptor explaining the first violated condition.
void validate_move(const Tree& t, const MoveDescriptor& move);
bool is_valid_move(const Tree& t, const MoveDescriptor& move);

// Resulting tree only (validated); vertex ids are preserved.
Tree apply_move(const Tree& t, const MoveDescriptor& move);
// Result plus SW_k delta; throws InvalidDescriptor for the wrong kind.
MoveOutcome apply_switch(const Tree& t, const MoveDescriptor& move, int k);
MoveOutcome apply_slide(const Tree& t, const MoveDescriptor& move, int k);
MoveOutcome apply_reattach(const Tree& t, const MoveDescriptor& move, int k);
MoveOutcome apply_move(const Tree& t, const MoveDescriptor& move, int k);

// Vertex counts of X, Y, A, B for a switch: X and Y are the w0 and ws sides
// of the segment without A and B respectively.
struct SwitchSizes {
  int x = 0;
  int y = 0;
  int a = 0;
  int b = 0;
};
SwitchSizes switch_sizes(const Tree& t, const SwitchMove& move);

// The reattachment that collapses segment u1..u2 onto u2.
ReattachMove reattach_for(const Tree& t, Vertex u1, Vertex u2);

// Every valid descriptor on t, each move listed once, in a fixed order.
std::vector<MoveDescriptor> enumerate_moves(const Tree& t);

struct Neighbor {
  MoveDescriptor move;
  MoveOutcome outcome;
};

// All valid moves applied, excluding those whose result is isomorphic to t.
std::vector<Neighbor> neighbors(const Tree& t, int k);

enum class Direction { Maximize, Minimize };

struct ClimbStep {
  MoveDescriptor move;
  ExactCount delta;
  ExactCount value;  // SW_k after the step
};

struct ClimbResult {
  Tree tree;
  ExactCount value;
  std::vector<ClimbStep> steps;
};

// Steepest ascent (or descent) over neighbors(); ties go to the result with
// the smallest canonical code. Stops at a local optimum.
ClimbResult hill_climb(const Tree& t, int k, Direction direction);

}  // namespace stw
