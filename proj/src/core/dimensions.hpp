#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/matrix.hpp"

namespace pcc {

// Point set shattered by the class: every 0/1 pattern over `points` is
// realized by some concept row with no Star on those cells. Pattern keys are
// strings whose j-th character is the value at points[j].
struct ShatteredSetWitness {
  std::vector<std::size_t> points;
  std::map<std::string, std::size_t> realizers;
};

struct VcResult {
  int dim = 0;
  ShatteredSetWitness witness;
};

// Exact VC dimension. Witness is the lexicographically least shattered set of
// maximum size, with minimal-index realizers. Throws InvalidArgument on an
// empty class.
VcResult vc_dim(const PartialMatrix& m);

bool validate_shattered_set(const PartialMatrix& m, const ShatteredSetWitness& w);

// Point-labelled full binary tree of height `depth` shattered by the class.
// Node keys are root-to-node 0/1 paths ("" is the root); leaf keys have
// length `depth`. leaf_realizers[y] takes value y_i at the point labelling
// node y[<i], for every i.
struct ShatteredTreeWitness {
  int depth = 0;
  std::map<std::string, std::size_t> node_labels;
  std::map<std::string, std::size_t> leaf_realizers;
};

// Shared memo table for ld_dim; content-addressed, safe to reuse across
// related classes.
class LdMemo {
 public:
  std::unordered_map<std::string, int> table;
};

// Exact Littlestone dimension; -1 for the empty class.
int ld_dim(const PartialMatrix& m);
int ld_dim(const PartialMatrix& m, LdMemo& memo);

struct LdOracleResult {
  bool shattered = false;
  std::optional<ShatteredTreeWitness> witness;
};

// Exhaustive search for a shattered height-d tree, straight from the
// definition; no canonicalization or memoization. Independent cross-check for
// ld_dim. Guarded to n_points <= 8 and 64 concepts unless force.
LdOracleResult ld_dim_tree_oracle(const PartialMatrix& m, int d, bool force = false);

bool validate_shattered_tree(const PartialMatrix& m, const ShatteredTreeWitness& w);

struct DualVcResult {
  int vc = 0;
  int dual_vc = 0;
  bool bound_holds = false;  // dual_vc <= 2^(vc+1) - 1
};

DualVcResult dual_vc_check(const PartialMatrix& m);

}  // namespace pcc
