#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "core/comm.hpp"
#include "core/graph.hpp"
#include "core/matrix.hpp"

namespace pcc {

struct Rectangle {
  std::vector<std::size_t> rows, cols;  // sorted, nonempty
};

struct CertResult {
  int cer = 0;
  std::optional<std::uint32_t> worst;  // empty when f^-1(b) is empty
};

// Worst-case minimum certificate size over f^-1(b): smallest-first subset
// enumeration per input. Guarded to n <= 16 unless force.
CertResult cert_complexity(const BoolFunction& f, int b, bool force = false);

// One certificate per b-input, coordinate j of the assignment matching input
// bit j (leftmost coordinate first).
struct CertificateFamily {
  int b = 0;
  std::vector<std::pair<std::uint32_t, std::vector<Cell>>> certs;
};

// Partition: the certificates' subcubes are pairwise disjoint, so every
// b-input is consistent with exactly one of them. Distinct: the paper-literal
// relaxation, assignments merely pairwise distinct.
enum class UcMode { Partition, Distinct };

UcMode uc_mode_from_string(const std::string& s);

struct FamilyValidation {
  bool ok = false;
  std::string reason;
};

FamilyValidation validate_certificate_family(const BoolFunction& f, const CertificateFamily& fam,
                                             UcMode mode);

struct UcResult {
  int uc = 0;
  CertificateFamily family;
};

// Smallest k admitting a valid family of size-<=k certificates under the
// given mode. Exact search; guarded to n <= 5 unless force.
UcResult uc_complexity(const BoolFunction& f, int b, UcMode mode = UcMode::Partition,
                       bool force = false);

enum class CoverMode { Cover, Partition };

CoverMode cover_mode_from_string(const std::string& s);

struct CoverResult {
  int count = 0;
  std::vector<Rectangle> rects;
};

// Minimum number of b-monochromatic rectangles covering (cover) or exactly
// partitioning (partition) the b-cells. Exact branch and bound; guarded to
// 256 cells unless force.
CoverResult cover_number(const CommMatrix& h, int b, CoverMode mode, bool force = false);

// Checks that rects are b-monochromatic and cover every b-cell (>=1 for
// Cover, exactly once for Partition) and nothing else.
FamilyValidation validate_rectangles(const CommMatrix& h, int b,
                                     const std::vector<Rectangle>& rects, CoverMode mode);

// Composition f(g(x_1,y_1), ..., g(x_n,y_n)) over blocks of k bits per side.
// The gadget must be square with power-of-two size; n*k <= 12 unless force.
CommMatrix lift(const BoolFunction& f, const CommMatrix& gadget, bool force = false);

// Crosses, per certificate, the gadget rectangles realizing each fixed bit
// (free blocks unconstrained) into a b-monochromatic rectangle partition of
// lift(f, gadget). The family must be valid under Partition mode and
// gadget_partitions[v] must exactly partition the gadget's v-cells.
// Validation of the result is a hard error on failure.
std::vector<Rectangle> certificates_to_partition(
    const BoolFunction& f, const CommMatrix& gadget, const CertificateFamily& fam,
    const std::array<std::vector<Rectangle>, 2>& gadget_partitions, bool force = false);

// Vertices are the 0-cells (x,y) of h, payload "x,y" (1-based or the labels);
// (x,y) and (x',y') are adjacent iff h(x,y')=1 or h(x',y)=1. Guarded to 200
// zero cells unless force.
LabeledGraph ass_conflict_graph(const CommMatrix& h, bool force = false);

struct AssReport {
  int c = 0;         // minimum 0-cover size
  int m = 0;         // minimum 1-partition size
  int chi_out = 0;   // chromatic number of the output graph
  std::size_t bp_size = 0;
  std::string branch;  // "H2" or "color-class"
};

struct AssPipelineResult {
  LabeledGraph graph;
  std::vector<OrientedBiclique> partition;
  AssReport report;
};

// Builds the conflict graph from h, derives the once-or-twice biclique family
// from a minimum 1-partition, and returns either the doubly-covered subgraph
// with its exact pair-partition or a color class of it with the restricted
// family, whichever has chromatic number >= ceil(sqrt(Cov_0)). Every step is
// asserted; violations raise CheckFailed naming the step.
AssPipelineResult ass_pipeline(const CommMatrix& h, bool force = false);

std::uint64_t isqrt_ceil(std::uint64_t v);

}  // namespace pcc
