// Exercises the shared-library surface: handles, status codes, file I/O.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "sfc3/sfc3.h"

namespace {

struct PathHandle {
  sfc3_path* p = nullptr;
  ~PathHandle() { sfc3_path_free(p); }
};

std::string temp_file(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("basic generation and accessors") {
  const sfc3_dims dims{3, 2, 2};
  sfc3_order_spec spec = sfc3_order_spec_init(SFC3_ORDER_MORTON);
  PathHandle h;
  REQUIRE(sfc3_path_generate(dims, &spec, &h.p) == SFC3_OK);

  CHECK(sfc3_path_length(h.p) == 12);
  CHECK(sfc3_path_dims(h.p).slabs == 3);
  CHECK(std::string(sfc3_path_order_label(h.p)) == "morton");

  sfc3_coord cell;
  REQUIRE(sfc3_path_cell(h.p, 8, &cell) == SFC3_OK);
  CHECK(cell.slab == 2);
  CHECK(cell.row == 0);
  CHECK(cell.col == 0);
  CHECK(sfc3_path_cell(h.p, 12, &cell) == SFC3_ERROR_BOUNDS);

  std::vector<sfc3_coord> cells(12);
  REQUIRE(sfc3_path_cells(h.p, cells.data(), cells.size()) == SFC3_OK);
  CHECK(cells[8].slab == 2);
  CHECK(sfc3_path_cells(h.p, cells.data(), 13) == SFC3_ERROR_BOUNDS);

  uint64_t rank = 0;
  REQUIRE(sfc3_path_rank_of(h.p, sfc3_coord{2, 1, 1}, &rank) == SFC3_OK);
  CHECK(rank == 11);
  CHECK(sfc3_path_rank_of(h.p, sfc3_coord{3, 0, 0}, &rank) == SFC3_ERROR_BOUNDS);
}

TEST_CASE("morton codec entry points") {
  uint64_t index = 0;
  REQUIRE(sfc3_morton_encode(sfc3_coord{1, 2, 3}, 2, 2, 2, &index) == SFC3_OK);
  CHECK(index == 29);
  sfc3_coord cell;
  REQUIRE(sfc3_morton_decode(29, 2, 2, 2, &cell) == SFC3_OK);
  CHECK(cell.slab == 1);
  CHECK(cell.row == 2);
  CHECK(cell.col == 3);
  CHECK(sfc3_morton_encode(sfc3_coord{4, 0, 0}, 2, 2, 2, &index) == SFC3_ERROR_BOUNDS);
  CHECK(sfc3_morton_decode(64, 2, 2, 2, &cell) == SFC3_ERROR_BOUNDS);
  CHECK(sfc3_morton_encode(sfc3_coord{0, 0, 0}, 30, 30, 30, &index) ==
        SFC3_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("linear index helpers") {
  uint64_t rank = 0;
  REQUIRE(sfc3_linear_index(sfc3_dims{4, 3, 5}, sfc3_coord{1, 2, 3}, &rank) == SFC3_OK);
  CHECK(rank == 28);
  sfc3_coord cell;
  REQUIRE(sfc3_coord_of(sfc3_dims{4, 3, 5}, 28, &cell) == SFC3_OK);
  CHECK(cell.row == 2);
  CHECK(sfc3_coord_of(sfc3_dims{4, 3, 5}, 60, &cell) == SFC3_ERROR_BOUNDS);
  CHECK(sfc3_linear_index(sfc3_dims{0, 1, 1}, sfc3_coord{0, 0, 0}, &rank) ==
        SFC3_ERROR_INVALID_ARGUMENT);
  CHECK(sfc3_dims_total(sfc3_dims{4, 3, 5}) == 60);
  CHECK(sfc3_dims_total(sfc3_dims{0, 3, 5}) == 0);
}

TEST_CASE("ordering validation statuses") {
  PathHandle h;
  sfc3_order_spec hilbert = sfc3_order_spec_init(SFC3_ORDER_HILBERT);
  CHECK(sfc3_path_generate(sfc3_dims{3, 3, 3}, &hilbert, &h.p) == SFC3_ERROR_ODD_EXTENT);
  hilbert.allow_odd = 1;
  CHECK(sfc3_path_generate(sfc3_dims{3, 3, 3}, &hilbert, &h.p) == SFC3_OK);

  sfc3_order_spec hybrid = sfc3_order_spec_init(SFC3_ORDER_HYBRID);
  hybrid.block = sfc3_dims{3, 2, 2};
  hybrid.inter = SFC3_ORDER_MORTON;
  PathHandle h2;
  CHECK(sfc3_path_generate(sfc3_dims{4, 4, 4}, &hybrid, &h2.p) == SFC3_ERROR_DIVISIBILITY);
  hybrid.block = sfc3_dims{2, 2, 2};
  CHECK(sfc3_path_generate(sfc3_dims{4, 4, 4}, &hybrid, &h2.p) == SFC3_OK);
  CHECK(std::string(sfc3_path_order_label(h2.p)) ==
        "hybrid{block=2x2x2;inter=morton;intra=rowmajor}");

  CHECK(sfc3_path_generate(sfc3_dims{4, 4, 4}, nullptr, &h2.p) ==
        SFC3_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("verify, histogram and locality through the C API") {
  const sfc3_dims dims{2, 2, 2};
  sfc3_order_spec spec = sfc3_order_spec_init(SFC3_ORDER_ROW_MAJOR);
  PathHandle h;
  REQUIRE(sfc3_path_generate(dims, &spec, &h.p) == SFC3_OK);

  sfc3_verify_report report;
  REQUIRE(sfc3_path_verify(h.p, &report) == SFC3_OK);
  CHECK(report.is_permutation == 1);
  CHECK(report.complete == 1);

  uint64_t counts[8] = {0};
  REQUIRE(sfc3_path_step_histogram(h.p, counts, 8) == SFC3_OK);
  CHECK(counts[1] == 4);
  CHECK(counts[2] == 2);
  CHECK(counts[3] == 1);
  CHECK(sfc3_path_step_histogram(h.p, counts, 2) == SFC3_ERROR_INVALID_ARGUMENT);

  sfc3_locality_report locality;
  REQUIRE(sfc3_path_locality(h.p, &locality) == SFC3_OK);
  CHECK(locality.mean_gap_num == 7);
  CHECK(locality.mean_gap_den == 3);
  CHECK(locality.max_gap == 4);
  CHECK(locality.edges_counted == 12);
}

TEST_CASE("save, load and the verification of damaged files") {
  const sfc3_dims dims{3, 2, 2};
  sfc3_order_spec spec = sfc3_order_spec_init(SFC3_ORDER_MORTON);
  PathHandle h;
  REQUIRE(sfc3_path_generate(dims, &spec, &h.p) == SFC3_OK);

  const std::string csv = temp_file("sfc3_capi_test.csv");
  const std::string bin = temp_file("sfc3_capi_test.bin");
  const std::string json = temp_file("sfc3_capi_test.json");
  REQUIRE(sfc3_path_save(h.p, SFC3_FORMAT_CSV, csv.c_str()) == SFC3_OK);
  REQUIRE(sfc3_path_save(h.p, SFC3_FORMAT_BINARY, bin.c_str()) == SFC3_OK);
  REQUIRE(sfc3_path_save(h.p, SFC3_FORMAT_JSON, json.c_str()) == SFC3_OK);

  for (const std::string& file : {csv, bin, json}) {
    PathHandle reread;
    REQUIRE(sfc3_path_load(file.c_str(), &dims, &reread.p) == SFC3_OK);
    REQUIRE(sfc3_path_length(reread.p) == 12);
    sfc3_verify_report report;
    REQUIRE(sfc3_path_verify(reread.p, &report) == SFC3_OK);
    CHECK(report.is_permutation == 1);
    for (uint64_t k = 0; k < 12; ++k) {
      sfc3_coord a, b;
      sfc3_path_cell(h.p, k, &a);
      sfc3_path_cell(reread.p, k, &b);
      CHECK((a.slab == b.slab && a.row == b.row && a.col == b.col));
    }
  }

  // binary and json load without dims
  PathHandle no_dims;
  REQUIRE(sfc3_path_load(bin.c_str(), nullptr, &no_dims.p) == SFC3_OK);
  CHECK(sfc3_path_dims(no_dims.p).slabs == 3);
  PathHandle csv_needs_dims;
  CHECK(sfc3_path_load(csv.c_str(), nullptr, &csv_needs_dims.p) ==
        SFC3_ERROR_INVALID_ARGUMENT);

  // mismatched dims load fine but fail verification
  const sfc3_dims wrong{2, 2, 2};
  PathHandle mismatched;
  REQUIRE(sfc3_path_load(bin.c_str(), &wrong, &mismatched.p) == SFC3_OK);
  sfc3_verify_report report;
  REQUIRE(sfc3_path_verify(mismatched.p, &report) == SFC3_OK);
  CHECK(report.is_permutation == 0);
  CHECK(report.in_bounds == 0);

  // rank_of refuses non-permutations
  uint64_t rank = 0;
  CHECK(sfc3_path_rank_of(mismatched.p, sfc3_coord{0, 0, 0}, &rank) ==
        SFC3_ERROR_VERIFICATION);

  PathHandle missing;
  CHECK(sfc3_path_load("/nonexistent/sfc3.bin", nullptr, &missing.p) == SFC3_ERROR_IO);

  std::remove(csv.c_str());
  std::remove(bin.c_str());
  std::remove(json.c_str());
}

TEST_CASE("status messages and kind parsing") {
  CHECK(std::string(sfc3_status_message(SFC3_OK)) == "ok");
  CHECK(std::string(sfc3_status_message(SFC3_ERROR_ODD_EXTENT)).find("even") !=
        std::string::npos);
  sfc3_order_kind kind;
  CHECK(sfc3_order_kind_parse("hilbert", &kind) == SFC3_OK);
  CHECK(kind == SFC3_ORDER_HILBERT);
  CHECK(sfc3_order_kind_parse("bogus", &kind) == SFC3_ERROR_INVALID_ARGUMENT);
  CHECK(sfc3_order_kind_parse(nullptr, &kind) == SFC3_ERROR_INVALID_ARGUMENT);
}
