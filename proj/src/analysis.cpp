#include "analysis.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace sfc3 {

VerifyReport verify_path(const CurvePath& path) {
  const uint64_t total = path.dims.total();
  VerifyReport report;
  report.complete = path.cells.size() == total;
  report.in_bounds = true;

  std::vector<uint32_t> seen(total, 0);
  for (const Coord3& cell : path.cells) {
    if (!in_bounds(cell, path.dims)) {
      report.in_bounds = false;
      continue;
    }
    const uint64_t idx = linear_index(cell, path.dims);
    if (seen[idx] > 0) report.duplicate_count += 1;
    seen[idx] += 1;
  }
  for (uint64_t idx = 0; idx < total; ++idx) {
    if (seen[idx] == 0) report.missing_count += 1;
  }
  return report;
}

std::map<uint64_t, uint64_t> step_histogram(const CurvePath& path) {
  if (path.cells.empty()) {
    throw error(errc::invalid_argument, "step_histogram: empty path");
  }
  std::map<uint64_t, uint64_t> histogram;
  for (size_t i = 0; i + 1 < path.cells.size(); ++i) {
    histogram[step_between(path.cells[i], path.cells[i + 1]).l1()] += 1;
  }
  return histogram;
}

std::string LocalityReport::mean_gap_decimal() const {
  const uint64_t whole = mean_gap_num / mean_gap_den;
  const uint64_t rem = mean_gap_num % mean_gap_den;
  // Scale the remainder exactly; 128-bit keeps 6-digit scaling overflow-free.
  const unsigned __int128 scaled =
      (unsigned __int128)(rem)*1000000u + mean_gap_den / 2;
  const uint64_t frac = uint64_t(scaled / mean_gap_den);
  std::ostringstream out;
  if (frac >= 1000000) {  // rounding carried into the integer part
    out << whole + 1 << ".000000";
    return out.str();
  }
  out << whole << ".";
  std::string digits = std::to_string(frac);
  out << std::string(6 - digits.size(), '0') << digits;
  return out.str();
}

LocalityReport adjacency_locality(const CurvePath& path) {
  if (!verify_path(path).is_permutation()) {
    throw error(errc::verification,
                "adjacency_locality: path must be a verified permutation");
  }
  const Dims3& dims = path.dims;
  const std::vector<uint64_t> ranks = rank_table(path);

  LocalityReport report;
  report.step_histogram = step_histogram(path);

  unsigned __int128 gap_sum = 0;
  auto edge = [&](uint64_t u, uint64_t v) {
    const uint64_t gap = ranks[u] > ranks[v] ? ranks[u] - ranks[v] : ranks[v] - ranks[u];
    gap_sum += gap;
    report.max_gap = std::max(report.max_gap, gap);
    report.edges_counted += 1;
  };

  const uint64_t row_stride = dims.cols;
  const uint64_t slab_stride = uint64_t(dims.rows) * dims.cols;
  for (uint32_t s = 0; s < dims.slabs; ++s) {
    for (uint32_t r = 0; r < dims.rows; ++r) {
      for (uint32_t c = 0; c < dims.cols; ++c) {
        const uint64_t idx = (uint64_t(s) * dims.rows + r) * dims.cols + c;
        if (c + 1 < dims.cols) edge(idx, idx + 1);
        if (r + 1 < dims.rows) edge(idx, idx + row_stride);
        if (s + 1 < dims.slabs) edge(idx, idx + slab_stride);
      }
    }
  }

  if (report.edges_counted == 0) {
    report.mean_gap_num = 0;
    report.mean_gap_den = 1;
    return report;
  }
  if (gap_sum > std::numeric_limits<uint64_t>::max()) {
    throw error(errc::invalid_argument, "adjacency_locality: gap sum exceeds 64 bits");
  }
  uint64_t num = uint64_t(gap_sum);
  uint64_t den = report.edges_counted;
  const uint64_t g = std::gcd(num, den);
  if (g > 0) {
    num /= g;
    den /= g;
  }
  report.mean_gap_num = num;
  report.mean_gap_den = den;
  return report;
}

std::vector<OrderingLocality> compare_orderings(const Dims3& dims,
                                                const std::vector<OrderingSpec>& specs) {
  std::vector<OrderingLocality> rows;
  rows.reserve(specs.size());
  for (const OrderingSpec& spec : specs) {
    rows.push_back(OrderingLocality{spec, adjacency_locality(generate_path(dims, spec))});
  }
  return rows;
}

}  // namespace sfc3
