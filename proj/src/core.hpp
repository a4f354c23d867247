// Core geometric types shared by every ordering: volume extents, cell
// coordinates, curve paths, and row-major indexing.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfc3 {

// Error category carried by sfc3::error.
enum class errc {
  invalid_argument,
  bounds,
  odd_extent,
  divisibility,
  io,
  parse,
  verification,
  invalid_frame,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

// Extents of a data volume: P slabs, N rows, M columns. Zero extents are
// rejected at construction; the cell count must fit in 64 bits.
struct Dims3 {
  uint32_t slabs = 1;
  uint32_t rows = 1;
  uint32_t cols = 1;

  Dims3() = default;
  Dims3(uint32_t slabs_, uint32_t rows_, uint32_t cols_);

  uint64_t total() const noexcept { return uint64_t(slabs) * rows * cols; }

  bool operator==(const Dims3&) const = default;
};

// One cell position inside a volume: slab s, row r, column c.
struct Coord3 {
  uint32_t slab = 0;
  uint32_t row = 0;
  uint32_t col = 0;

  bool operator==(const Coord3&) const = default;
};

// Signed integer 3-vector over the (slab, row, col) axes. Used for block
// frame axes and for steps between consecutive path cells.
struct Vec3 {
  int64_t slab = 0;
  int64_t row = 0;
  int64_t col = 0;

  constexpr Vec3 operator+(const Vec3& o) const {
    return {slab + o.slab, row + o.row, col + o.col};
  }
  constexpr Vec3 operator-(const Vec3& o) const {
    return {slab - o.slab, row - o.row, col - o.col};
  }
  constexpr Vec3 operator-() const { return {-slab, -row, -col}; }
  constexpr bool operator==(const Vec3&) const = default;

  // L1 norm; for an axis-aligned vector this is its extent.
  constexpr uint64_t l1() const {
    auto mag = [](int64_t v) { return uint64_t(v < 0 ? -v : v); };
    return mag(slab) + mag(row) + mag(col);
  }

  // Componentwise sign; the unit direction of an axis-aligned vector.
  constexpr Vec3 unit() const {
    auto sgn = [](int64_t v) -> int64_t { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
    return {sgn(slab), sgn(row), sgn(col)};
  }

  // Exactly one nonzero component.
  constexpr bool axis_aligned() const {
    return ((slab != 0) + (row != 0) + (col != 0)) == 1;
  }

  // One of the six vectors (+-1,0,0), (0,+-1,0), (0,0,+-1).
  constexpr bool is_unit_step() const { return axis_aligned() && l1() == 1; }

  // Index of the nonzero axis: 0 slab, 1 row, 2 col. Requires axis_aligned().
  constexpr int axis() const { return slab != 0 ? 0 : (row != 0 ? 1 : 2); }
};

// An ordering of a volume: cells listed in curve-rank order.
struct CurvePath {
  Dims3 dims;
  std::vector<Coord3> cells;
};

bool in_bounds(const Coord3& c, const Dims3& d) noexcept;

// Row-major rank of a cell: s*N*M + r*M + c.
uint64_t linear_index(const Coord3& c, const Dims3& d);

// Inverse of linear_index.
Coord3 coord_of(uint64_t rank, const Dims3& d);

// Baseline ordering: cells[k] = coord_of(k).
CurvePath row_major_path(const Dims3& d);

// Forward map of a complete path: table[linear_index(cell)] = rank.
// The path must be a permutation of its volume.
std::vector<uint64_t> rank_table(const CurvePath& path);

// Step vector from one cell to the next.
Vec3 step_between(const Coord3& from, const Coord3& to) noexcept;

// Displace a cell by a vector. Throws error{bounds} if a component would
// leave [0, 2^32).
Coord3 offset_by(const Coord3& base, const Vec3& delta);

std::ostream& operator<<(std::ostream&, const Dims3&);
std::ostream& operator<<(std::ostream&, const Coord3&);
std::ostream& operator<<(std::ostream&, const Vec3&);

}  // namespace sfc3
