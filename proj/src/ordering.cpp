#include "ordering.hpp"

#include <sstream>

#include "hilbert.hpp"
#include "hybrid.hpp"
#include "morton.hpp"

namespace sfc3 {

const char* to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::RowMajor: return "rowmajor";
    case OrderKind::Morton: return "morton";
    case OrderKind::Hilbert: return "hilbert";
    case OrderKind::Hybrid: return "hybrid";
  }
  return "?";
}

std::optional<OrderKind> order_kind_from_string(std::string_view name) {
  if (name == "rowmajor") return OrderKind::RowMajor;
  if (name == "morton") return OrderKind::Morton;
  if (name == "hilbert") return OrderKind::Hilbert;
  if (name == "hybrid") return OrderKind::Hybrid;
  return std::nullopt;
}

std::string to_string(const OrderingSpec& spec) {
  if (spec.kind != OrderKind::Hybrid) return to_string(spec.kind);
  std::ostringstream out;
  out << "hybrid{block=" << spec.block << ";inter=" << to_string(spec.inter)
      << ";intra=" << to_string(spec.intra) << "}";
  return out.str();
}

CurvePath generate_path(const Dims3& dims, const OrderingSpec& spec) {
  switch (spec.kind) {
    case OrderKind::RowMajor:
      return row_major_path(dims);
    case OrderKind::Morton:
      return morton_general(dims);
    case OrderKind::Hilbert:
      return hilbert_general(dims, spec.allow_odd);
    case OrderKind::Hybrid: {
      HybridSpec hspec;
      hspec.block = spec.block;
      hspec.inter = OrderingSpec{spec.inter, spec.allow_odd};
      hspec.intra = OrderingSpec{spec.intra, spec.allow_odd};
      return hybrid_order(dims, hspec);
    }
  }
  throw error(errc::invalid_argument, "generate_path: unknown ordering kind");
}

}  // namespace sfc3
