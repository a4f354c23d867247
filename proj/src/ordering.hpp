// Ordering selection: which curve to build over a volume, including the
// two-level hybrid parameters, plus the dispatching generator.
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "core.hpp"

namespace sfc3 {

enum class OrderKind { RowMajor, Morton, Hilbert, Hybrid };

const char* to_string(OrderKind kind);
std::optional<OrderKind> order_kind_from_string(std::string_view name);

// Which ordering to build. For hybrids, `block` gives the tile extents and
// `inter`/`intra` the (non-hybrid) orderings across and within tiles.
// `allow_odd` lifts the Hilbert even-extent requirement wherever a Hilbert
// component appears.
struct OrderingSpec {
  OrderKind kind = OrderKind::RowMajor;
  bool allow_odd = false;
  Dims3 block{};
  OrderKind inter = OrderKind::RowMajor;
  OrderKind intra = OrderKind::RowMajor;
};

// Canonical label, e.g. "morton" or "hybrid{block=2x2x2;inter=morton;intra=rowmajor}".
std::string to_string(const OrderingSpec& spec);

// Build the ordering described by `spec` over `dims`.
CurvePath generate_path(const Dims3& dims, const OrderingSpec& spec);

}  // namespace sfc3
