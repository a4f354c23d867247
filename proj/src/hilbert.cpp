#include "hilbert.hpp"

#include <algorithm>

namespace sfc3 {

const char* to_string(SplitKind kind) {
  switch (kind) {
    case SplitKind::Straight: return "straight";
    case SplitKind::WideSplit2: return "wide-split-2";
    case SplitKind::TallSplit3: return "tall-split-3";
    case SplitKind::DeepSplit3: return "deep-split-3";
    case SplitKind::FullSplit5: return "full-split-5";
  }
  return "?";
}

Vec3 halve_even(const Vec3& axis) {
  if (axis == Vec3{}) {
    throw error(errc::invalid_frame, "halve_even: zero axis");
  }
  if (!axis.axis_aligned()) {
    throw error(errc::invalid_frame, "halve_even: axis not axis-aligned");
  }
  const uint64_t len = axis.l1();
  uint64_t half = len / 2;
  if (half % 2 == 1 && len > 2) half += 1;
  const Vec3 u = axis.unit();
  return Vec3{u.slab * int64_t(half), u.row * int64_t(half), u.col * int64_t(half)};
}

SplitKind classify_split(uint64_t w, uint64_t h, uint64_t d) {
  if (w == 0 || h == 0 || d == 0) {
    throw error(errc::invalid_frame, "classify_split: zero extent");
  }
  const int ones = (w == 1) + (h == 1) + (d == 1);
  if (ones >= 2) return SplitKind::Straight;
  if (2 * w > 3 * h && 2 * w > 3 * d) return SplitKind::WideSplit2;
  if (3 * h > 4 * d) return SplitKind::TallSplit3;
  if (3 * d > 4 * h) return SplitKind::DeepSplit3;
  return SplitKind::FullSplit5;
}

namespace {

void validate_frame(const BlockFrame& f) {
  if (!f.a.axis_aligned() || !f.b.axis_aligned() || !f.d.axis_aligned()) {
    throw error(errc::invalid_frame, "BlockFrame: axes must be axis-aligned and nonzero");
  }
  if (f.a.axis() == f.b.axis() || f.a.axis() == f.d.axis() || f.b.axis() == f.d.axis()) {
    throw error(errc::invalid_frame, "BlockFrame: axes must span three distinct axes");
  }
}

}  // namespace

BlockPlan hilbert_block_plan(const BlockFrame& f) {
  validate_frame(f);
  const uint64_t w = f.width();
  const uint64_t h = f.height();
  const uint64_t d = f.depth();

  BlockPlan plan;
  plan.kind = classify_split(w, h, d);

  const Coord3 o = f.origin;
  switch (plan.kind) {
    case SplitKind::Straight:
      break;

    case SplitKind::WideSplit2: {
      const Vec3 a2 = halve_even(f.a);
      plan.children[0] = BlockFrame{o, a2, f.b, f.d};
      plan.children[1] = BlockFrame{offset_by(o, a2), f.a - a2, f.b, f.d};
      plan.child_count = 2;
      break;
    }

    case SplitKind::TallSplit3: {
      const Vec3 a2 = halve_even(f.a);
      const Vec3 b2 = halve_even(f.b);
      const Vec3 ua = f.a.unit();
      const Vec3 ub = f.b.unit();
      plan.children[0] = BlockFrame{o, b2, f.d, a2};
      plan.children[1] = BlockFrame{offset_by(o, b2), f.a, f.b - b2, f.d};
      plan.children[2] =
          BlockFrame{offset_by(o, (f.a - ua) + (b2 - ub)), -b2, f.d, -(f.a - a2)};
      plan.child_count = 3;
      break;
    }

    case SplitKind::DeepSplit3: {
      const Vec3 a2 = halve_even(f.a);
      const Vec3 d2 = halve_even(f.d);
      const Vec3 ua = f.a.unit();
      const Vec3 ud = f.d.unit();
      plan.children[0] = BlockFrame{o, d2, a2, f.b};
      plan.children[1] = BlockFrame{offset_by(o, d2), f.a, f.b, f.d - d2};
      plan.children[2] =
          BlockFrame{offset_by(o, (f.a - ua) + (d2 - ud)), -d2, -(f.a - a2), f.b};
      plan.child_count = 3;
      break;
    }

    case SplitKind::FullSplit5: {
      const Vec3 a2 = halve_even(f.a);
      const Vec3 b2 = halve_even(f.b);
      const Vec3 d2 = halve_even(f.d);
      const Vec3 ua = f.a.unit();
      const Vec3 ub = f.b.unit();
      const Vec3 ud = f.d.unit();
      plan.children[0] = BlockFrame{o, b2, d2, a2};
      plan.children[1] = BlockFrame{offset_by(o, b2), f.d, a2, f.b - b2};
      plan.children[2] =
          BlockFrame{offset_by(o, (b2 - ub) + (f.d - ud)), f.a, -b2, -(f.d - d2)};
      plan.children[3] = BlockFrame{offset_by(o, (f.a - ua) + b2 + (f.d - ud)), -f.d,
                                    -(f.a - a2), f.b - b2};
      plan.children[4] =
          BlockFrame{offset_by(o, (f.a - ua) + (b2 - ub)), -b2, d2, -(f.a - a2)};
      plan.child_count = 5;
      break;
    }
  }
  return plan;
}

BlockFrame hilbert_initial_frame(const Dims3& dims) {
  struct AxisExtent {
    uint64_t extent;
    int axis;  // 0 slab, 1 row, 2 col; doubles as the tie-break priority
  };
  std::array<AxisExtent, 3> order{{{dims.slabs, 0}, {dims.rows, 1}, {dims.cols, 2}}};
  std::stable_sort(order.begin(), order.end(),
                   [](const AxisExtent& x, const AxisExtent& y) { return x.extent > y.extent; });

  auto axis_vec = [](const AxisExtent& ae) {
    Vec3 v;
    const auto len = int64_t(ae.extent);
    if (ae.axis == 0) v.slab = len;
    else if (ae.axis == 1) v.row = len;
    else v.col = len;
    return v;
  };
  return BlockFrame{Coord3{0, 0, 0}, axis_vec(order[0]), axis_vec(order[1]),
                    axis_vec(order[2])};
}

CurvePath hilbert_general(const Dims3& dims, bool allow_odd) {
  if (!allow_odd) {
    for (uint32_t extent : {dims.slabs, dims.rows, dims.cols}) {
      if (extent > 1 && extent % 2 != 0) {
        throw error(errc::odd_extent,
                    "hilbert_general: every extent greater than 1 must be even "
                    "(pass allow_odd to override)");
      }
    }
  }
  CurvePath path{dims, {}};
  path.cells.reserve(dims.total());
  hilbert_traverse(hilbert_initial_frame(dims),
                   [&path](const Coord3& c) { path.cells.push_back(c); });
  return path;
}

}  // namespace sfc3
