#include "hybrid.hpp"

#include <sstream>

namespace sfc3 {

CurvePath hybrid_order(const Dims3& dims, const HybridSpec& spec) {
  if (spec.inter.kind == OrderKind::Hybrid || spec.intra.kind == OrderKind::Hybrid) {
    throw error(errc::invalid_argument, "hybrid_order: hybrid may not nest hybrid");
  }
  const Dims3& block = spec.block;
  if (dims.slabs % block.slabs != 0 || dims.rows % block.rows != 0 ||
      dims.cols % block.cols != 0) {
    std::ostringstream msg;
    msg << "hybrid_order: block " << block << " does not divide volume " << dims;
    throw error(errc::divisibility, msg.str());
  }

  const Dims3 grid(dims.slabs / block.slabs, dims.rows / block.rows,
                   dims.cols / block.cols);
  const CurvePath inter = generate_path(grid, spec.inter);
  // Every tile shares the same extents, so one intra path serves all tiles.
  const CurvePath intra = generate_path(block, spec.intra);

  CurvePath path{dims, {}};
  path.cells.reserve(dims.total());
  for (const Coord3& tile : inter.cells) {
    const uint32_t s0 = tile.slab * block.slabs;
    const uint32_t r0 = tile.row * block.rows;
    const uint32_t c0 = tile.col * block.cols;
    for (const Coord3& cell : intra.cells) {
      path.cells.push_back(Coord3{s0 + cell.slab, r0 + cell.row, c0 + cell.col});
    }
  }
  return path;
}

}  // namespace sfc3
