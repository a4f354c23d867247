#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hybrid.hpp"
#include "morton.hpp"

using namespace sfc3;

namespace {

HybridSpec make_spec(Dims3 block, OrderKind inter, OrderKind intra) {
  HybridSpec spec;
  spec.block = block;
  spec.inter = OrderingSpec{inter};
  spec.intra = OrderingSpec{intra};
  return spec;
}

bool is_permutation_of_volume(const CurvePath& path) {
  if (path.cells.size() != path.dims.total()) return false;
  std::set<uint64_t> seen;
  for (const Coord3& cell : path.cells) {
    if (!in_bounds(cell, path.dims)) return false;
    if (!seen.insert(linear_index(cell, path.dims)).second) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("identity decomposition reduces to the intra ordering") {
  const Dims3 dims(4, 4, 4);
  CHECK(hybrid_order(dims, make_spec(dims, OrderKind::RowMajor, OrderKind::RowMajor)).cells ==
        row_major_path(dims).cells);
  CHECK(hybrid_order(dims, make_spec(dims, OrderKind::RowMajor, OrderKind::Morton)).cells ==
        morton_general(dims).cells);
}

TEST_CASE("unit blocks reduce to the inter ordering") {
  const Dims3 dims(4, 4, 4);
  CHECK(hybrid_order(dims, make_spec(Dims3(1, 1, 1), OrderKind::Morton, OrderKind::RowMajor))
            .cells == morton_general(dims).cells);
  CHECK(hybrid_order(dims, make_spec(Dims3(1, 1, 1), OrderKind::RowMajor, OrderKind::Morton))
            .cells == row_major_path(dims).cells);
}

TEST_CASE("frozen example: 4x4x4 with 2x2x2 blocks, morton across, rowmajor within") {
  const CurvePath path =
      hybrid_order(Dims3(4, 4, 4), make_spec(Dims3(2, 2, 2), OrderKind::Morton, OrderKind::RowMajor));
  const std::vector<Coord3> first_block{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1},
                                        {1, 0, 0}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}};
  REQUIRE(path.cells.size() == 64);
  for (size_t i = 0; i < 8; ++i) CHECK(path.cells[i] == first_block[i]);
  CHECK(path.cells[8] == Coord3{0, 0, 2});
}

TEST_CASE("frozen example: rowmajor across, morton within coincides on the first block") {
  const CurvePath path =
      hybrid_order(Dims3(4, 4, 4), make_spec(Dims3(2, 2, 2), OrderKind::RowMajor, OrderKind::Morton));
  // A 2x2x2 morton block equals its row-major walk under the column-first
  // bit convention.
  const std::vector<Coord3> first_block{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1},
                                        {1, 0, 0}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}};
  for (size_t i = 0; i < 8; ++i) CHECK(path.cells[i] == first_block[i]);
  CHECK(path.cells[8] == Coord3{0, 0, 2});
}

TEST_CASE("block residency: each rank chunk stays inside its tile") {
  const Dims3 dims(6, 4, 4);
  const Dims3 block(3, 2, 2);
  const HybridSpec spec = make_spec(block, OrderKind::Morton, OrderKind::RowMajor);
  const CurvePath path = hybrid_order(dims, spec);
  const CurvePath inter = morton_general(Dims3(2, 2, 2));
  const uint64_t per_block = block.total();
  REQUIRE(path.cells.size() == dims.total());
  for (uint64_t k = 0; k < path.cells.size(); ++k) {
    const Coord3 tile = inter.cells[k / per_block];
    const Coord3& cell = path.cells[k];
    CHECK(cell.slab / block.slabs == tile.slab);
    CHECK(cell.row / block.rows == tile.row);
    CHECK(cell.col / block.cols == tile.col);
  }
}

TEST_CASE("all divisor decompositions of 4x4x4 and 6x4x4 are permutations") {
  auto divisors = [](uint32_t v) {
    std::vector<uint32_t> out;
    for (uint32_t d = 1; d <= v; ++d) {
      if (v % d == 0) out.push_back(d);
    }
    return out;
  };
  auto hilbert_legal = [](const Dims3& d) {
    for (uint32_t extent : {d.slabs, d.rows, d.cols}) {
      if (extent > 1 && extent % 2 != 0) return false;
    }
    return true;
  };
  for (const Dims3& dims : {Dims3(4, 4, 4), Dims3(6, 4, 4)}) {
    for (uint32_t bp : divisors(dims.slabs)) {
      for (uint32_t bn : divisors(dims.rows)) {
        for (uint32_t bm : divisors(dims.cols)) {
          const Dims3 block(bp, bn, bm);
          const Dims3 grid(dims.slabs / bp, dims.rows / bn, dims.cols / bm);
          std::vector<OrderKind> inters{OrderKind::RowMajor, OrderKind::Morton};
          std::vector<OrderKind> intras = inters;
          if (hilbert_legal(grid)) inters.push_back(OrderKind::Hilbert);
          if (hilbert_legal(block)) intras.push_back(OrderKind::Hilbert);
          for (OrderKind inter : inters) {
            for (OrderKind intra : intras) {
              CHECK(is_permutation_of_volume(hybrid_order(dims, make_spec(block, inter, intra))));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("hybrid validation errors") {
  const Dims3 dims(4, 4, 4);
  // non-divisor block
  CHECK_THROWS_AS(hybrid_order(dims, make_spec(Dims3(3, 2, 2), OrderKind::RowMajor,
                                               OrderKind::RowMajor)),
                  error);
  try {
    hybrid_order(dims, make_spec(Dims3(3, 2, 2), OrderKind::RowMajor, OrderKind::RowMajor));
  } catch (const error& e) {
    CHECK(e.code() == errc::divisibility);
  }

  // nested hybrid
  HybridSpec nested = make_spec(Dims3(2, 2, 2), OrderKind::Hybrid, OrderKind::RowMajor);
  CHECK_THROWS_AS(hybrid_order(dims, nested), error);

  // hilbert intra over an odd block
  const Dims3 odd_dims(6, 4, 4);
  HybridSpec odd_block = make_spec(Dims3(3, 2, 2), OrderKind::RowMajor, OrderKind::Hilbert);
  CHECK_THROWS_AS(hybrid_order(odd_dims, odd_block), error);
  // the same with allow_odd succeeds
  odd_block.intra.allow_odd = true;
  CHECK(is_permutation_of_volume(hybrid_order(odd_dims, odd_block)));

  // hilbert inter over an odd grid: 6/2 = 3 tiles along the slab axis
  HybridSpec odd_grid = make_spec(Dims3(2, 2, 2), OrderKind::Hilbert, OrderKind::RowMajor);
  CHECK_THROWS_AS(hybrid_order(odd_dims, odd_grid), error);
}

TEST_CASE("generate_path dispatches hybrids and rejects nested hybrid kinds") {
  OrderingSpec spec;
  spec.kind = OrderKind::Hybrid;
  spec.block = Dims3(2, 2, 2);
  spec.inter = OrderKind::Morton;
  spec.intra = OrderKind::RowMajor;
  const CurvePath direct = hybrid_order(
      Dims3(4, 4, 4), make_spec(Dims3(2, 2, 2), OrderKind::Morton, OrderKind::RowMajor));
  CHECK(generate_path(Dims3(4, 4, 4), spec).cells == direct.cells);

  spec.inter = OrderKind::Hybrid;
  CHECK_THROWS_AS(generate_path(Dims3(4, 4, 4), spec), error);
}

TEST_CASE("ordering spec labels") {
  CHECK(to_string(OrderingSpec{}) == "rowmajor");
  OrderingSpec spec;
  spec.kind = OrderKind::Hybrid;
  spec.block = Dims3(2, 2, 2);
  spec.inter = OrderKind::Morton;
  spec.intra = OrderKind::RowMajor;
  CHECK(to_string(spec) == "hybrid{block=2x2x2;inter=morton;intra=rowmajor}");
  CHECK(order_kind_from_string("hilbert") == OrderKind::Hilbert);
  CHECK_FALSE(order_kind_from_string("zorder").has_value());
}
