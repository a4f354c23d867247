#include "core.hpp"

#include <limits>
#include <ostream>

namespace sfc3 {

Dims3::Dims3(uint32_t slabs_, uint32_t rows_, uint32_t cols_)
    : slabs(slabs_), rows(rows_), cols(cols_) {
  if (slabs == 0 || rows == 0 || cols == 0) {
    throw error(errc::invalid_argument, "Dims3: extents must be positive");
  }
  // slabs*rows fits 64 bits since both are 32-bit; check the final product.
  const uint64_t sr = uint64_t(slabs) * rows;
  if (sr > std::numeric_limits<uint64_t>::max() / cols) {
    throw error(errc::invalid_argument, "Dims3: cell count exceeds 64 bits");
  }
}

bool in_bounds(const Coord3& c, const Dims3& d) noexcept {
  return c.slab < d.slabs && c.row < d.rows && c.col < d.cols;
}

uint64_t linear_index(const Coord3& c, const Dims3& d) {
  if (!in_bounds(c, d)) {
    throw error(errc::bounds, "linear_index: coordinate out of bounds");
  }
  return (uint64_t(c.slab) * d.rows + c.row) * d.cols + c.col;
}

Coord3 coord_of(uint64_t rank, const Dims3& d) {
  if (rank >= d.total()) {
    throw error(errc::bounds, "coord_of: rank out of range");
  }
  const uint64_t per_slab = uint64_t(d.rows) * d.cols;
  return Coord3{uint32_t(rank / per_slab), uint32_t((rank / d.cols) % d.rows),
                uint32_t(rank % d.cols)};
}

CurvePath row_major_path(const Dims3& d) {
  CurvePath path{d, {}};
  path.cells.reserve(d.total());
  for (uint32_t s = 0; s < d.slabs; ++s) {
    for (uint32_t r = 0; r < d.rows; ++r) {
      for (uint32_t c = 0; c < d.cols; ++c) {
        path.cells.push_back(Coord3{s, r, c});
      }
    }
  }
  return path;
}

std::vector<uint64_t> rank_table(const CurvePath& path) {
  const uint64_t total = path.dims.total();
  constexpr uint64_t unset = std::numeric_limits<uint64_t>::max();
  std::vector<uint64_t> table(total, unset);
  if (path.cells.size() != total) {
    throw error(errc::verification, "rank_table: path does not cover the volume");
  }
  for (uint64_t rank = 0; rank < total; ++rank) {
    const uint64_t idx = linear_index(path.cells[rank], path.dims);
    if (table[idx] != unset) {
      throw error(errc::verification, "rank_table: duplicate cell in path");
    }
    table[idx] = rank;
  }
  return table;
}

Vec3 step_between(const Coord3& from, const Coord3& to) noexcept {
  return Vec3{int64_t(to.slab) - int64_t(from.slab), int64_t(to.row) - int64_t(from.row),
              int64_t(to.col) - int64_t(from.col)};
}

Coord3 offset_by(const Coord3& base, const Vec3& delta) {
  const int64_t s = int64_t(base.slab) + delta.slab;
  const int64_t r = int64_t(base.row) + delta.row;
  const int64_t c = int64_t(base.col) + delta.col;
  constexpr int64_t limit = int64_t(std::numeric_limits<uint32_t>::max());
  if (s < 0 || r < 0 || c < 0 || s > limit || r > limit || c > limit) {
    throw error(errc::bounds, "offset_by: displaced coordinate out of range");
  }
  return Coord3{uint32_t(s), uint32_t(r), uint32_t(c)};
}

std::ostream& operator<<(std::ostream& os, const Dims3& d) {
  return os << d.slabs << "x" << d.rows << "x" << d.cols;
}

std::ostream& operator<<(std::ostream& os, const Coord3& c) {
  return os << "(" << c.slab << "," << c.row << "," << c.col << ")";
}

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << "(" << v.slab << "," << v.row << "," << v.col << ")";
}

}  // namespace sfc3
