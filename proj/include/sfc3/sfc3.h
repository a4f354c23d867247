/*
 * sfc3 — space-filling-curve orderings for 3D data volumes.
 *
 * C API over the sfc3 core. Paths are owned by the library and handed out
 * as opaque sfc3_path handles; every fallible call returns an sfc3_status.
 * Handles are immutable after creation and safe to share across threads.
 *
 * Volumes are described as P slabs x N rows x M columns; a cell is
 * (slab, row, col) with the column index varying fastest in row-major order.
 */
#ifndef SFC3_H
#define SFC3_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SFC3_API __declspec(dllexport)
#elif defined(__GNUC__)
#define SFC3_API __attribute__((visibility("default")))
#else
#define SFC3_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sfc3_status {
  SFC3_OK = 0,
  SFC3_ERROR_INVALID_ARGUMENT = 1,
  SFC3_ERROR_BOUNDS = 2,
  SFC3_ERROR_ODD_EXTENT = 3,    /* Hilbert requires even extents (or 1) */
  SFC3_ERROR_DIVISIBILITY = 4,  /* hybrid block does not divide the volume */
  SFC3_ERROR_IO = 5,
  SFC3_ERROR_PARSE = 6,
  SFC3_ERROR_VERIFICATION = 7,  /* path is not a permutation */
  SFC3_ERROR_NOMEM = 8
} sfc3_status;

/* Static description of a status code. */
SFC3_API const char* sfc3_status_message(sfc3_status status);

typedef struct sfc3_dims {
  uint32_t slabs; /* P */
  uint32_t rows;  /* N */
  uint32_t cols;  /* M */
} sfc3_dims;

typedef struct sfc3_coord {
  uint32_t slab;
  uint32_t row;
  uint32_t col;
} sfc3_coord;

typedef enum sfc3_order_kind {
  SFC3_ORDER_ROW_MAJOR = 0,
  SFC3_ORDER_MORTON = 1,
  SFC3_ORDER_HILBERT = 2,
  SFC3_ORDER_HYBRID = 3
} sfc3_order_kind;

/* Which ordering to build. block/inter/intra apply to hybrids only; inter
 * and intra must not themselves be hybrid. allow_odd lifts the Hilbert
 * even-extent requirement (steps longer than 1 may then appear). */
typedef struct sfc3_order_spec {
  sfc3_order_kind kind;
  int allow_odd;
  sfc3_dims block;
  sfc3_order_kind inter;
  sfc3_order_kind intra;
} sfc3_order_spec;

typedef enum sfc3_format {
  SFC3_FORMAT_CSV = 0,
  SFC3_FORMAT_JSON = 1,
  SFC3_FORMAT_BINARY = 2
} sfc3_format;

/* A ready-to-fill spec for the given kind (allow_odd off, 1x1x1 block,
 * row-major inter/intra). */
SFC3_API sfc3_order_spec sfc3_order_spec_init(sfc3_order_kind kind);

/* Parse an ordering name: "rowmajor", "morton", "hilbert" or "hybrid". */
SFC3_API sfc3_status sfc3_order_kind_parse(const char* name, sfc3_order_kind* out);

/* Total cell count, or 0 if an extent is zero / the product overflows. */
SFC3_API uint64_t sfc3_dims_total(sfc3_dims dims);

/* Row-major rank of a cell and its inverse. */
SFC3_API sfc3_status sfc3_linear_index(sfc3_dims dims, sfc3_coord coord, uint64_t* out);
SFC3_API sfc3_status sfc3_coord_of(sfc3_dims dims, uint64_t rank, sfc3_coord* out);

/* Morton index of a cell of a 2^slab_bits x 2^row_bits x 2^col_bits volume
 * (column bit first within each level), and its inverse. */
SFC3_API sfc3_status sfc3_morton_encode(sfc3_coord coord, uint32_t slab_bits,
                                        uint32_t row_bits, uint32_t col_bits,
                                        uint64_t* out);
SFC3_API sfc3_status sfc3_morton_decode(uint64_t index, uint32_t slab_bits,
                                        uint32_t row_bits, uint32_t col_bits,
                                        sfc3_coord* out);

/* ------------------------------------------------------------------ */
/* Paths                                                               */

typedef struct sfc3_path sfc3_path; /* opaque */

/* Build the ordering described by `spec` over `dims`. On success the caller
 * owns the handle and must release it with sfc3_path_free. */
SFC3_API sfc3_status sfc3_path_generate(sfc3_dims dims, const sfc3_order_spec* spec,
                                        sfc3_path** out);

/* Read a path file (format auto-detected); "-" reads standard input. CSV
 * files carry no extents, so `dims` is required for them; for JSON/binary a
 * non-NULL `dims` overrides the file header. Loaded paths may be incomplete
 * or invalid — use sfc3_path_verify to describe them. */
SFC3_API sfc3_status sfc3_path_load(const char* filename, const sfc3_dims* dims,
                                    sfc3_path** out);

/* Write a path file; "-" writes to standard output. */
SFC3_API sfc3_status sfc3_path_save(const sfc3_path* path, sfc3_format format,
                                    const char* filename);

SFC3_API void sfc3_path_free(sfc3_path* path);

SFC3_API sfc3_dims sfc3_path_dims(const sfc3_path* path);
SFC3_API uint64_t sfc3_path_length(const sfc3_path* path);

/* Label of the ordering that produced the path ("morton", ...); for loaded
 * files, the label recorded in the file or "" when absent. Owned by the
 * handle. */
SFC3_API const char* sfc3_path_order_label(const sfc3_path* path);

/* Cell at a rank. */
SFC3_API sfc3_status sfc3_path_cell(const sfc3_path* path, uint64_t rank,
                                    sfc3_coord* out);

/* Copy the first `count` cells into `out` (count must not exceed the path
 * length). */
SFC3_API sfc3_status sfc3_path_cells(const sfc3_path* path, sfc3_coord* out,
                                     uint64_t count);

/* Rank of a cell. The path must verify as a permutation; the lookup table
 * is built on first use and cached. */
SFC3_API sfc3_status sfc3_path_rank_of(const sfc3_path* path, sfc3_coord coord,
                                       uint64_t* out);

/* ------------------------------------------------------------------ */
/* Verification and locality                                           */

typedef struct sfc3_verify_report {
  int complete;  /* cell count equals the volume's */
  int in_bounds; /* no cell outside the volume */
  uint64_t duplicate_count;
  uint64_t missing_count;
  int is_permutation;
} sfc3_verify_report;

/* Describe a path. Always fills the report; bad paths are findings, not
 * errors. */
SFC3_API sfc3_status sfc3_path_verify(const sfc3_path* path, sfc3_verify_report* out);

/* counts[k] += number of consecutive-cell steps of L1 length k, for
 * k < counts_len. counts_len of slabs+rows+cols+1 always suffices for
 * in-bounds paths; a longer step fails with SFC3_ERROR_INVALID_ARGUMENT. */
SFC3_API sfc3_status sfc3_path_step_histogram(const sfc3_path* path, uint64_t* counts,
                                              uint64_t counts_len);

typedef struct sfc3_locality_report {
  uint64_t mean_gap_num; /* reduced rational mean of |rank(u)-rank(v)| */
  uint64_t mean_gap_den;
  uint64_t max_gap;
  uint64_t edges_counted; /* all 6-neighborhood grid edges */
} sfc3_locality_report;

/* Adjacent-cell rank distance over every grid edge. Fails with
 * SFC3_ERROR_VERIFICATION unless the path is a permutation. */
SFC3_API sfc3_status sfc3_path_locality(const sfc3_path* path,
                                        sfc3_locality_report* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SFC3_H */
