// Generalized Morton (Z-order) ordering: power-of-two bit interleaving plus
// a recursive octant decomposition that extends it to arbitrary extents.
#pragma once

#include "core.hpp"

namespace sfc3 {

// Bit counts of a 2^p x 2^n x 2^m volume (slab, row, column axes).
struct Pow2Shape {
  uint32_t slab_bits = 0;
  uint32_t row_bits = 0;
  uint32_t col_bits = 0;

  Pow2Shape() = default;
  Pow2Shape(uint32_t slab_bits_, uint32_t row_bits_, uint32_t col_bits_);

  uint64_t total() const noexcept {
    return uint64_t(1) << (slab_bits + row_bits + col_bits);
  }
  bool operator==(const Pow2Shape&) const = default;
};

// Componentwise largest power-of-two extents not exceeding the volume's:
// S = 2^floor(log2 P), R = 2^floor(log2 N), C = 2^floor(log2 M).
struct OctantExtents {
  uint32_t slabs = 1;
  uint32_t rows = 1;
  uint32_t cols = 1;

  bool operator==(const OctantExtents&) const = default;
};

// Morton index of a cell. At each bit level k (ascending), the level-k
// column bit is appended first (toward more significant positions), then the
// row bit, then the slab bit, skipping axes whose bit count is exhausted.
// For sorted shapes (m <= n <= p) this gives 3m interleaved low bits, then
// 2(n-m) row/slab bits, then the top p-n slab bits.
uint64_t interleave_pow2(const Coord3& c, const Pow2Shape& shape);

// Exact inverse of interleave_pow2.
Coord3 deinterleave_pow2(uint64_t index, const Pow2Shape& shape);

OctantExtents octant0_extents(const Dims3& dims);

// Generalized Morton ordering for arbitrary extents: octant 0 (the
// power-of-two corner block) is emitted in interleaved order, then the seven
// remainder octants are mapped recursively in a fixed order.
CurvePath morton_general(const Dims3& dims);

// Forward map: table[linear_index(cell)] = rank of cell in morton_general.
std::vector<uint64_t> morton_rank_table(const Dims3& dims);

}  // namespace sfc3
