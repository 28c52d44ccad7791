#pragma once

#include <string>
#include <vector>

#include "core/matrix.hpp"
#include "core/report.hpp"
#include "core/rng.hpp"

namespace pcc {

struct VerifyReport {
  std::string check_id;
  bool pass = false;
  ordered_json details;
  std::uint64_t runtime_ms = 0;

  ordered_json to_json() const;
};

// Known ids: fig1, hrd-ld, hrd-soa-vc, ssp-partial, vc-le-ld, biclique-ld2,
// chi-columns, lemma-ass, dual-vc, gp-bp. Unknown ids raise InvalidArgument.
// params may override per-check knobs (trials, n, ...). Counterexample
// artifacts are written under artifact_dir on failure; their paths appear in
// the report details.
VerifyReport run_check(const std::string& check_id, const ordered_json& params,
                       std::uint64_t seed, const std::string& artifact_dir);

const std::vector<std::string>& check_ids();

// Shared random-instance generators (deterministic in the Rng state).
PartialMatrix gen_random_partial(Rng& rng, std::size_t max_points, std::size_t max_concepts,
                                 double star_density);
LabeledGraph gen_random_graph(Rng& rng, std::size_t max_n, double edge_prob);

}  // namespace pcc
