#pragma once

#include <string>
#include <vector>

#include "core/dimensions.hpp"
#include "core/matrix.hpp"
#include "core/rng.hpp"

namespace pcc {

enum class SoaReason { LdMax, TieFavor0, Forced };

const char* soa_reason_name(SoaReason r);

struct SoaStep {
  std::size_t point = 0;   // 0-based point index that was assigned
  std::string prefix;      // 0/1 values at the already-processed points, in order
  int chosen = 0;
  SoaReason reason = SoaReason::TieFavor0;
};

struct SoaTrace {
  std::vector<std::size_t> order;  // processing order over points
  std::vector<SoaStep> steps;      // one per (prefix, point) group that had Stars
  TotalMatrix output;
};

// Fills every Star left to right (or along `order`). Within each group of
// concepts sharing an already-resolved prefix b, the Stars at the current
// point get the value c maximizing LD of the group's c-branch, ties to 0.
// The branch classes are taken over the progressively disambiguated rows:
// earlier cells are resolved, later cells keep their Stars.
//
// Throws CheckFailed if the one-branch-drops progress property
// min(LD(b0), LD(b1)) <= LD(b) - 1 ever fails for a nonempty group.
SoaTrace soa_disambiguate(const PartialMatrix& m, const std::vector<std::size_t>* order = nullptr);

struct MinVcResult {
  int vc_min = 0;
  TotalMatrix witness;
};

// Minimum VC dimension over all completions of the Stars, by exhaustive
// enumeration (Gray-code order, lexicographically least witness on ties).
// Guarded to 20 Stars unless force.
MinVcResult min_vc_disambiguation(const PartialMatrix& m, bool force = false);

struct GrowthPoint {
  std::size_t k = 0;
  std::size_t max_distinct = 0;
};

// For each k: max over k-point subsets of distinct_rows(soa(restrict(m, S))).
// All subsets when C(n,k) <= 2000, otherwise 200 seeded samples.
std::vector<GrowthPoint> growth_profile(const PartialMatrix& m,
                                        const std::vector<std::size_t>& sizes, Rng& rng);

}  // namespace pcc
