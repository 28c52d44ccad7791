#pragma once

#include <json.hpp>

#include "core/commlift.hpp"
#include "core/dimensions.hpp"
#include "core/disambiguation.hpp"
#include "core/graphtools.hpp"

namespace pcc {

// JSON views of witnesses and traces. Indices are 1-based in all serialized
// output; key order is fixed so reports are byte-stable.
using ordered_json = nlohmann::ordered_json;

ordered_json shattered_set_json(const ShatteredSetWitness& w, int dim);
ordered_json shattered_tree_json(const ShatteredTreeWitness& w);
ordered_json soa_trace_json(const SoaTrace& t);
ordered_json pattern_witness_json(const PatternWitness& w);
ordered_json coloring_json(const ColoringResult& c);
ordered_json bicliques_json(const std::vector<OrientedBiclique>& bs);
ordered_json rectangles_json(const std::vector<Rectangle>& rs);
ordered_json ass_report_json(const AssReport& r);
ordered_json growth_json(const std::vector<GrowthPoint>& g);

}  // namespace pcc
