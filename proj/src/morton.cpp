#include "morton.hpp"

#include <algorithm>
#include <bit>

namespace sfc3 {

Pow2Shape::Pow2Shape(uint32_t slab_bits_, uint32_t row_bits_, uint32_t col_bits_)
    : slab_bits(slab_bits_), row_bits(row_bits_), col_bits(col_bits_) {
  if (slab_bits > 32 || row_bits > 32 || col_bits > 32 ||
      slab_bits + row_bits + col_bits > 63) {
    throw error(errc::invalid_argument, "Pow2Shape: bit counts exceed 63-bit index space");
  }
}

uint64_t interleave_pow2(const Coord3& c, const Pow2Shape& shape) {
  if ((uint64_t(c.slab) >> shape.slab_bits) != 0 ||
      (uint64_t(c.row) >> shape.row_bits) != 0 ||
      (uint64_t(c.col) >> shape.col_bits) != 0) {
    throw error(errc::bounds, "interleave_pow2: coordinate out of shape bounds");
  }
  const uint32_t levels = std::max({shape.slab_bits, shape.row_bits, shape.col_bits});
  uint64_t index = 0;
  uint32_t pos = 0;
  for (uint32_t k = 0; k < levels; ++k) {
    if (k < shape.col_bits) index |= ((uint64_t(c.col) >> k) & 1u) << pos++;
    if (k < shape.row_bits) index |= ((uint64_t(c.row) >> k) & 1u) << pos++;
    if (k < shape.slab_bits) index |= ((uint64_t(c.slab) >> k) & 1u) << pos++;
  }
  return index;
}

Coord3 deinterleave_pow2(uint64_t index, const Pow2Shape& shape) {
  if (index >= shape.total()) {
    throw error(errc::bounds, "deinterleave_pow2: index out of shape bounds");
  }
  const uint32_t levels = std::max({shape.slab_bits, shape.row_bits, shape.col_bits});
  uint32_t slab = 0, row = 0, col = 0;
  uint32_t pos = 0;
  for (uint32_t k = 0; k < levels; ++k) {
    if (k < shape.col_bits) col |= uint32_t((index >> pos++) & 1u) << k;
    if (k < shape.row_bits) row |= uint32_t((index >> pos++) & 1u) << k;
    if (k < shape.slab_bits) slab |= uint32_t((index >> pos++) & 1u) << k;
  }
  return Coord3{slab, row, col};
}

OctantExtents octant0_extents(const Dims3& dims) {
  return OctantExtents{std::bit_floor(dims.slabs), std::bit_floor(dims.rows),
                       std::bit_floor(dims.cols)};
}

namespace {

// One call maps octant 0 of the (cols x rows x slabs) region at the given
// origin, then recurses over the seven remainder octants. Remainder octants
// may be empty, which ends the recursion.
void morton_recurse(uint64_t cols, uint64_t rows, uint64_t slabs, uint64_t col0,
                    uint64_t row0, uint64_t slab0, std::vector<Coord3>& out) {
  if (cols == 0 || rows == 0 || slabs == 0) return;

  const uint64_t C = std::bit_floor(cols);
  const uint64_t R = std::bit_floor(rows);
  const uint64_t S = std::bit_floor(slabs);
  const Pow2Shape shape(uint32_t(std::countr_zero(S)), uint32_t(std::countr_zero(R)),
                        uint32_t(std::countr_zero(C)));

  for (uint64_t index = 0; index < S * R * C; ++index) {
    const Coord3 d = deinterleave_pow2(index, shape);
    out.push_back(Coord3{uint32_t(slab0 + d.slab), uint32_t(row0 + d.row),
                         uint32_t(col0 + d.col)});
  }

  morton_recurse(cols - C, R, S, col0 + C, row0, slab0, out);
  morton_recurse(C, rows - R, S, col0, row0 + R, slab0, out);
  morton_recurse(cols - C, rows - R, S, col0 + C, row0 + R, slab0, out);
  morton_recurse(C, R, slabs - S, col0, row0, slab0 + S, out);
  morton_recurse(cols - C, R, slabs - S, col0 + C, row0, slab0 + S, out);
  morton_recurse(C, rows - R, slabs - S, col0, row0 + R, slab0 + S, out);
  morton_recurse(cols - C, rows - R, slabs - S, col0 + C, row0 + R, slab0 + S, out);
}

}  // namespace

CurvePath morton_general(const Dims3& dims) {
  CurvePath path{dims, {}};
  path.cells.reserve(dims.total());
  morton_recurse(dims.cols, dims.rows, dims.slabs, 0, 0, 0, path.cells);
  return path;
}

std::vector<uint64_t> morton_rank_table(const Dims3& dims) {
  return rank_table(morton_general(dims));
}

}  // namespace sfc3
