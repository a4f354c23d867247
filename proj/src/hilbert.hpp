// Generalized Hilbert ordering for rectangular 3D volumes via recursive
// block subdivision with orientation frames. The subdivision scheme follows
// the generalized Hilbert ("gilbert") construction of Jakub Cerveny
// (https://github.com/jakubcerveny/gilbert). Volumes with every extent even
// (or 1) are traversed with unit steps only; odd extents are allowed behind
// a flag and may introduce longer steps.
#pragma once

#include <array>

#include "core.hpp"

namespace sfc3 {

// A sub-block under traversal: entry corner plus three axis-aligned vectors.
// `a` is the travel axis (|a| = width), `b` the height axis, `d` the depth
// axis. Their unit directions span three distinct volume axes, so they form
// a signed permutation matrix whose first column is the travel direction.
struct BlockFrame {
  Coord3 origin;
  Vec3 a;
  Vec3 b;
  Vec3 d;

  uint64_t width() const { return a.l1(); }
  uint64_t height() const { return b.l1(); }
  uint64_t depth() const { return d.l1(); }
};

enum class SplitKind {
  Straight,    // at least two extents are 1: emit a straight run
  WideSplit2,  // 2w > 3h and 2w > 3d: halve along the travel axis
  TallSplit3,  // 3h > 4d: split off the top, then the lower piece by width
  DeepSplit3,  // 3d > 4h: same with the roles of height and depth swapped
  FullSplit5,  // general case: five blocks
};

const char* to_string(SplitKind kind);

// Halve an axis-aligned span: magnitude floor(L/2), bumped to the next even
// length when that is odd and L > 2, keeping sub-block extents even wherever
// the parent allows it. Magnitude 1 halves to the zero vector.
Vec3 halve_even(const Vec3& axis);

// Decide how a w x h x d block is subdivided. Total and mutually exclusive,
// tested in priority order.
SplitKind classify_split(uint64_t w, uint64_t h, uint64_t d);

// One recursion level: the classification plus the ordered child frames the
// traversal recurses into. Children tile the parent exactly; consecutive
// children chain exit-to-entry at L1 distance 1.
struct BlockPlan {
  SplitKind kind = SplitKind::Straight;
  std::array<BlockFrame, 5> children{};
  int child_count = 0;
};

BlockPlan hilbert_block_plan(const BlockFrame& frame);

// Frame covering a whole volume: travel axis along the largest extent (ties
// broken slab, row, column), remaining axes in descending extent order with
// the same tie-break, all in the positive direction from (0,0,0).
BlockFrame hilbert_initial_frame(const Dims3& dims);

CurvePath hilbert_general(const Dims3& dims, bool allow_odd = false);

// Visit every cell of a frame in curve order.
template <typename Sink>
void hilbert_traverse(const BlockFrame& frame, Sink&& sink) {
  const BlockPlan plan = hilbert_block_plan(frame);
  if (plan.kind == SplitKind::Straight) {
    const uint64_t w = frame.width();
    const uint64_t h = frame.height();
    const uint64_t d = frame.depth();
    Vec3 step;
    uint64_t count;
    if (h == 1 && d == 1) {
      step = frame.a.unit();
      count = w;
    } else if (w == 1 && d == 1) {
      step = frame.b.unit();
      count = h;
    } else {  // w == 1 && h == 1
      step = frame.d.unit();
      count = d;
    }
    Coord3 pos = frame.origin;
    for (uint64_t i = 0; i < count; ++i) {
      sink(pos);
      if (i + 1 < count) pos = offset_by(pos, step);
    }
    return;
  }
  for (int i = 0; i < plan.child_count; ++i) {
    hilbert_traverse(plan.children[i], sink);
  }
}

}  // namespace sfc3
