// Two-level orderings: an inter-block ordering over a grid of equal tiles
// and an intra-block ordering within each tile.
#pragma once

#include "core.hpp"
#include "ordering.hpp"

namespace sfc3 {

// Tile extents plus the orderings across and within tiles. Each block
// extent must divide the matching volume extent; inter and intra must not
// themselves be hybrid (one nesting level only).
struct HybridSpec {
  Dims3 block{};
  OrderingSpec inter{};
  OrderingSpec intra{};
};

CurvePath hybrid_order(const Dims3& dims, const HybridSpec& spec);

}  // namespace sfc3
