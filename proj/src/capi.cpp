// extern-C surface over the sfc3 core: opaque path handles, status codes.
#include "sfc3/sfc3.h"

#include <cstring>
#include <memory>
#include <mutex>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "core.hpp"
#include "morton.hpp"
#include "ordering.hpp"
#include "pathfile.hpp"

struct sfc3_path {
  sfc3::CurvePath path;
  std::string order_label;

  // rank lookup, built on first use
  mutable std::once_flag ranks_once;
  mutable std::vector<uint64_t> ranks;
  mutable bool ranks_ok = false;
};

namespace {

sfc3_status status_of(sfc3::errc code) {
  switch (code) {
    case sfc3::errc::invalid_argument: return SFC3_ERROR_INVALID_ARGUMENT;
    case sfc3::errc::bounds: return SFC3_ERROR_BOUNDS;
    case sfc3::errc::odd_extent: return SFC3_ERROR_ODD_EXTENT;
    case sfc3::errc::divisibility: return SFC3_ERROR_DIVISIBILITY;
    case sfc3::errc::io: return SFC3_ERROR_IO;
    case sfc3::errc::parse: return SFC3_ERROR_PARSE;
    case sfc3::errc::verification: return SFC3_ERROR_VERIFICATION;
    case sfc3::errc::invalid_frame: return SFC3_ERROR_INVALID_ARGUMENT;
  }
  return SFC3_ERROR_INVALID_ARGUMENT;
}

template <typename Fn>
sfc3_status guarded(Fn&& fn) {
  try {
    fn();
    return SFC3_OK;
  } catch (const sfc3::error& e) {
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    return SFC3_ERROR_NOMEM;
  } catch (...) {
    return SFC3_ERROR_INVALID_ARGUMENT;
  }
}

sfc3::Dims3 to_core(sfc3_dims d) { return sfc3::Dims3(d.slabs, d.rows, d.cols); }
sfc3::Coord3 to_core(sfc3_coord c) { return sfc3::Coord3{c.slab, c.row, c.col}; }
sfc3_coord from_core(sfc3::Coord3 c) { return sfc3_coord{c.slab, c.row, c.col}; }

sfc3::OrderKind to_core(sfc3_order_kind kind) {
  switch (kind) {
    case SFC3_ORDER_ROW_MAJOR: return sfc3::OrderKind::RowMajor;
    case SFC3_ORDER_MORTON: return sfc3::OrderKind::Morton;
    case SFC3_ORDER_HILBERT: return sfc3::OrderKind::Hilbert;
    case SFC3_ORDER_HYBRID: return sfc3::OrderKind::Hybrid;
  }
  throw sfc3::error(sfc3::errc::invalid_argument, "unknown ordering kind");
}

sfc3::OrderingSpec to_core(const sfc3_order_spec& spec) {
  sfc3::OrderingSpec out;
  out.kind = to_core(spec.kind);
  out.allow_odd = spec.allow_odd != 0;
  if (out.kind == sfc3::OrderKind::Hybrid) {
    out.block = to_core(spec.block);
    out.inter = to_core(spec.inter);
    out.intra = to_core(spec.intra);
  }
  return out;
}

sfc3::PathFormat to_core(sfc3_format fmt) {
  switch (fmt) {
    case SFC3_FORMAT_CSV: return sfc3::PathFormat::Csv;
    case SFC3_FORMAT_JSON: return sfc3::PathFormat::Json;
    case SFC3_FORMAT_BINARY: return sfc3::PathFormat::Binary;
  }
  throw sfc3::error(sfc3::errc::invalid_argument, "unknown path format");
}

}  // namespace

extern "C" {

const char* sfc3_status_message(sfc3_status status) {
  switch (status) {
    case SFC3_OK: return "ok";
    case SFC3_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case SFC3_ERROR_BOUNDS: return "coordinate or rank out of bounds";
    case SFC3_ERROR_ODD_EXTENT:
      return "hilbert ordering requires every extent greater than 1 to be even";
    case SFC3_ERROR_DIVISIBILITY: return "hybrid block extents must divide the volume";
    case SFC3_ERROR_IO: return "i/o failure";
    case SFC3_ERROR_PARSE: return "unrecognized or malformed path file";
    case SFC3_ERROR_VERIFICATION: return "path is not a permutation of its volume";
    case SFC3_ERROR_NOMEM: return "out of memory";
  }
  return "unknown status";
}

sfc3_order_spec sfc3_order_spec_init(sfc3_order_kind kind) {
  sfc3_order_spec spec;
  spec.kind = kind;
  spec.allow_odd = 0;
  spec.block = sfc3_dims{1, 1, 1};
  spec.inter = SFC3_ORDER_ROW_MAJOR;
  spec.intra = SFC3_ORDER_ROW_MAJOR;
  return spec;
}

sfc3_status sfc3_order_kind_parse(const char* name, sfc3_order_kind* out) {
  if (name == nullptr || out == nullptr) return SFC3_ERROR_INVALID_ARGUMENT;
  const auto kind = sfc3::order_kind_from_string(name);
  if (!kind) return SFC3_ERROR_INVALID_ARGUMENT;
  switch (*kind) {
    case sfc3::OrderKind::RowMajor: *out = SFC3_ORDER_ROW_MAJOR; break;
    case sfc3::OrderKind::Morton: *out = SFC3_ORDER_MORTON; break;
    case sfc3::OrderKind::Hilbert: *out = SFC3_ORDER_HILBERT; break;
    case sfc3::OrderKind::Hybrid: *out = SFC3_ORDER_HYBRID; break;
  }
  return SFC3_OK;
}

uint64_t sfc3_dims_total(sfc3_dims dims) {
  try {
    return to_core(dims).total();
  } catch (...) {
    return 0;
  }
}

sfc3_status sfc3_linear_index(sfc3_dims dims, sfc3_coord coord, uint64_t* out) {
  if (out == nullptr) return SFC3_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = sfc3::linear_index(to_core(coord), to_core(dims)); });
}

sfc3_status sfc3_coord_of(sfc3_dims dims, uint64_t rank, sfc3_coord* out) {
  if (out == nullptr) return SFC3_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = from_core(sfc3::coord_of(rank, to_core(dims))); });
}

sfc3_status sfc3_morton_encode(sfc3_coord coord, uint32_t slab_bits, uint32_t row_bits,
                               uint32_t col_bits, uint64_t* out) {
  if (out == nullptr) return SFC3_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = sfc3::interleave_pow2(to_core(coord),
                                 sfc3::Pow2Shape(slab_bits, row_bits, col_bits));
  });
}

sfc3_status sfc3_morton_decode(uint64_t index, uint32_t slab_bits, uint32_t row_bits,
                               uint32_t col_bits, sfc3_coord* out) {
  if (out == nullptr) return SFC3_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = from_core(
        sfc3::deinterleave_pow2(index, sfc3::Pow2Shape(slab_bits, row_bits, col_bits)));
  });
}

sfc3_status sfc3_path_generate(sfc3_dims dims, const sfc3_order_spec* spec,
                               sfc3_path** out) {
  if (spec == nullptr || out == nullptr) return SFC3_ERROR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    const sfc3::OrderingSpec core_spec = to_core(*spec);
    auto handle = std::make_unique<sfc3_path>();
    handle->path = sfc3::generate_path(to_core(dims), core_spec);
    handle->order_label = sfc3::to_string(core_spec);
    *out = handle.release();
  });
}

sfc3_status sfc3_path_load(const char* filename, const sfc3_dims* dims,
                           sfc3_path** out) {
  if (filename == nullptr || out == nullptr) return SFC3_ERROR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    std::optional<sfc3::Dims3> core_dims;
    if (dims != nullptr) core_dims = to_core(*dims);
    sfc3::LoadedPath loaded = sfc3::load_path_file(filename, core_dims);
    auto handle = std::make_unique<sfc3_path>();
    handle->path = std::move(loaded.path);
    handle->order_label = std::move(loaded.order_label);
    *out = handle.release();
  });
}

sfc3_status sfc3_path_save(const sfc3_path* path, sfc3_format format,
                           const char* filename) {
  if (path == nullptr || filename == nullptr) return SFC3_ERROR_INVALID_ARGUMENT;
  return guarded(
      [&] { sfc3::save_path_file(path->path, path->order_label, to_core(format), filename); });
}

void sfc3_path_free(sfc3_path* path) { delete path; }

sfc3_dims sfc3_path_dims(const sfc3_path* path) {
  if (path == nullptr) return sfc3_dims{0, 0, 0};
  return sfc3_dims{path->path.dims.slabs, path->path.dims.rows, path->path.dims.cols};
}

uint64_t sfc3_path_length(const sfc3_path* path) {
  return path == nullptr ? 0 : path->path.cells.size();
}

const char* sfc3_path_order_label(const sfc3_path* path) {
  return path == nullptr ? "" : path->order_label.c_str();
}

sfc3_status sfc3_path_cell(const sfc3_path* path, uint64_t rank, sfc3_coord* out) {
  if (path == nullptr || out == nullptr) return SFC3_ERROR_INVALID_ARGUMENT;
  if (rank >= path->path.cells.size()) return SFC3_ERROR_BOUNDS;
  *out = from_core(path->path.cells[size_t(rank)]);
  return SFC3_OK;
}

sfc3_status sfc3_path_cells(const sfc3_path* path, sfc3_coord* out, uint64_t count) {
  if (path == nullptr || (out == nullptr && count > 0)) return SFC3_ERROR_INVALID_ARGUMENT;
  if (count > path->path.cells.size()) return SFC3_ERROR_BOUNDS;
  for (uint64_t i = 0; i < count; ++i) {
    out[i] = from_core(path->path.cells[size_t(i)]);
  }
  return SFC3_OK;
}

sfc3_status sfc3_path_rank_of(const sfc3_path* path, sfc3_coord coord, uint64_t* out) {
  if (path == nullptr || out == nullptr) return SFC3_ERROR_INVALID_ARGUMENT;
  std::call_once(path->ranks_once, [&] {
    try {
      path->ranks = sfc3::rank_table(path->path);
      path->ranks_ok = true;
    } catch (...) {
      path->ranks_ok = false;
    }
  });
  if (!path->ranks_ok) return SFC3_ERROR_VERIFICATION;
  return guarded([&] { *out = path->ranks[sfc3::linear_index(to_core(coord), path->path.dims)]; });
}

sfc3_status sfc3_path_verify(const sfc3_path* path, sfc3_verify_report* out) {
  if (path == nullptr || out == nullptr) return SFC3_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const sfc3::VerifyReport report = sfc3::verify_path(path->path);
    out->complete = report.complete ? 1 : 0;
    out->in_bounds = report.in_bounds ? 1 : 0;
    out->duplicate_count = report.duplicate_count;
    out->missing_count = report.missing_count;
    out->is_permutation = report.is_permutation() ? 1 : 0;
  });
}

sfc3_status sfc3_path_step_histogram(const sfc3_path* path, uint64_t* counts,
                                     uint64_t counts_len) {
  if (path == nullptr || counts == nullptr || counts_len == 0) {
    return SFC3_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const auto histogram = sfc3::step_histogram(path->path);
    std::memset(counts, 0, size_t(counts_len) * sizeof(uint64_t));
    for (const auto& [length, count] : histogram) {
      if (length >= counts_len) {
        throw sfc3::error(sfc3::errc::invalid_argument,
                          "step histogram buffer too small");
      }
      counts[length] = count;
    }
  });
}

sfc3_status sfc3_path_locality(const sfc3_path* path, sfc3_locality_report* out) {
  if (path == nullptr || out == nullptr) return SFC3_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const sfc3::LocalityReport report = sfc3::adjacency_locality(path->path);
    out->mean_gap_num = report.mean_gap_num;
    out->mean_gap_den = report.mean_gap_den;
    out->max_gap = report.max_gap;
    out->edges_counted = report.edges_counted;
  });
}

}  // extern "C"
