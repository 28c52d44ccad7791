#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace pcc {

struct ColoringResult {
  int chi = 0;
  std::vector<int> colors;  // proper coloring with values in [0, chi)
};

// Exact chromatic number, branch and bound seeded with a greedy clique lower
// bound and a DSATUR upper bound. Guarded to n <= 80 unless force.
ColoringResult chromatic_number(const LabeledGraph& g, bool force = false);

struct BpResult {
  int bp = 0;
  std::vector<OrientedBiclique> partition;
};

// Exact biclique partition number: depth-first search branching on the lowest
// uncovered edge over every biclique containing it, pruned with the spectral
// bound. Guarded to 40 edges unless force.
BpResult biclique_partition_number(const LabeledGraph& g, bool force = false);

// max(#positive, #negative adjacency eigenvalues); eigenvalues within 1e-9 of
// zero count as zero. Always a lower bound on bp.
int bp_spectral_lower_bound(const LabeledGraph& g);

enum class FamilyMode { Partition, Cover, CoverLe2 };

FamilyMode family_mode_from_string(const std::string& s);

struct FamilyCheck {
  bool ok = false;
  std::string reason;
  std::optional<std::pair<std::size_t, std::size_t>> edge;  // violating edge when relevant
};

// partition: every edge covered exactly once; cover: at least once;
// cover-le-2: once or twice. Also requires each left x right to be a set of
// edges of g with disjoint sides.
FamilyCheck validate_biclique_family(const LabeledGraph& g,
                                     const std::vector<OrientedBiclique>& family, FamilyMode mode);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a);

}  // namespace pcc
