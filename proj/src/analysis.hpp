// Verification and locality measurement for curve paths: permutation
// checks, step-length histograms, and adjacent-cell rank-gap statistics.
#pragma once

#include <map>
#include <vector>

#include "core.hpp"
#include "ordering.hpp"

namespace sfc3 {

struct VerifyReport {
  bool complete = false;
  bool in_bounds = false;
  uint64_t duplicate_count = 0;
  uint64_t missing_count = 0;

  bool is_permutation() const {
    return complete && in_bounds && duplicate_count == 0 && missing_count == 0;
  }
};

// Describe a path: length, bounds, repeated cells, uncovered cells. Never
// throws on bad paths; the report carries the findings.
VerifyReport verify_path(const CurvePath& path);

// Counts of L1 distances between consecutive path cells.
std::map<uint64_t, uint64_t> step_histogram(const CurvePath& path);

struct LocalityReport {
  std::map<uint64_t, uint64_t> step_histogram;
  uint64_t mean_gap_num = 0;  // reduced rational mean of |rank(u)-rank(v)|
  uint64_t mean_gap_den = 1;
  uint64_t max_gap = 0;
  uint64_t edges_counted = 0;

  // Decimal rendering of the mean to six places, rounded half up.
  std::string mean_gap_decimal() const;
};

// Rank distances across every 6-neighborhood grid edge. The path must
// verify as a permutation; otherwise throws error{verification}.
LocalityReport adjacency_locality(const CurvePath& path);

struct OrderingLocality {
  OrderingSpec spec;
  LocalityReport report;
};

// One LocalityReport per spec over the same volume (hence the same edge set).
std::vector<OrderingLocality> compare_orderings(const Dims3& dims,
                                                const std::vector<OrderingSpec>& specs);

}  // namespace sfc3
