#pragma once

#include "core/graph.hpp"
#include "core/matrix.hpp"

namespace pcc {

// Family over n = d*(2^r + r) points: concepts indexed by (i, j) with
// F_1, F_2, ... the d-subsets of [d*2^r] in lexicographic order and
// j in [d*r]. Concept (i, j) is 1 on F_i, 0 on the rest of the first block,
// carries at tail point j the j-th most significant bit of the (d*r)-bit
// binary representation of i-1 when i <= 2^(d*r), and is Star elsewhere.
// Guarded to 10^6 concepts.
PartialMatrix gen_hrd(unsigned r, unsigned d);

// One concept per oriented biclique: 0 on its left side, 1 on its right side,
// Star elsewhere. The family must partition the edges of g exactly.
PartialMatrix gen_biclique_class(const LabeledGraph& g,
                                 const std::vector<OrientedBiclique>& partition);

// Checks absence of the 2x2 submatrix with columns (1,1) and (0,0) and, when
// the class is within the tree-oracle guard, that no height-3 tree is
// shattered.
bool verify_ld_le_2(const PartialMatrix& m);

// The forbidden submatrix itself.
Pattern ld3_forbidden_pattern();

// Star partition of K_n: {i} x {i+1..n} for i in [n-1].
std::vector<OrientedBiclique> star_partition(std::size_t n);

}  // namespace pcc
