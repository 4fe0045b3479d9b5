#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "nilgood/classifier.hpp"
#include "nilgood/finite_action.hpp"
#include "nilgood/homology.hpp"
#include "nilgood/zlattice.hpp"

namespace nilgood {

using ordered_json = nlohmann::ordered_json;

// Group table file: first the order, then order^2 whitespace-separated
// element indices, row-major.
GroupPtr load_group_table(std::istream& in);
GroupPtr load_group_table_file(const std::string& path);

// A group source is either a finite group expression in the DSL
// ("C(6)", "prod(C(2),S(3))") or "@path" naming a table file.
GroupPtr group_from_source(const std::string& source);

// Action file (JSON): {"actor": <source>, "target": <source>,
// "generators": [indices...], "images": [[perm]...]}. Generator images
// are extended multiplicatively and validated.
FiniteAction load_action_file(const std::string& path);

// Representation file (text): rank, generator count, then rank^2
// whitespace-separated integers per generator.
IntegerRepresentation load_representation_file(const std::string& path);

// Ring flag grammar: "p:<prime>", "Z", "Zinv:2,3", "Zmod:<n>".
RingDescriptor parse_ring_flag(const std::string& flag);

ordered_json ring_json(const RingDescriptor& ring);
ordered_json judgment_json(const Judgment& j);
ordered_json graded_json(const GradedModule& m);
ordered_json series_json(const SeriesChain& chain);
ordered_json decision_json(const NilpotencyDecision& d);
ordered_json subspace_chain_json(const SubspaceChain& chain);
ordered_json sweep_json(const SweepReport& report);

}  // namespace nilgood
