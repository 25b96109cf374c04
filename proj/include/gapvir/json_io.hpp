#pragma once

#include <json.hpp>

#include "gapvir/cover.hpp"
#include "gapvir/mois.hpp"
#include "gapvir/report.hpp"
#include "gapvir/verma.hpp"

namespace gapvir {

using Json = nlohmann::ordered_json;

// Serialization uses deterministic key and element order throughout;
// identical values always produce identical bytes.

Json algebra_element_to_json(const AlgebraElement& e);
AlgebraElement algebra_element_from_json(const Json& j);

Json mois_spec_to_json(const MoisSpec& spec);
MoisSpec mois_spec_from_json(const Json& j);  // alpha and beta default to 0

Json highest_weight_to_json(const HighestWeight& hw);
HighestWeight highest_weight_from_json(const Json& j);

Json tensor_vector_to_json(const MoisSpec& spec, const TensorVector& t);
std::pair<MoisSpec, TensorVector> tensor_vector_from_json(const Json& j);

Json weight_vector_to_json(const WeightVector& v);
Json verma_vector_to_json(const VermaVector& v);

Json validation_report_to_json(const ValidationReport& r);
Json report_to_json(const Report& r);
Json linkage_graph_to_json(const LinkageGraph& g);
Json reducibility_to_json(const ReducibilityVerdict& v);
Json iso_witness_to_json(const IsoWitness& w);
Json verma_verdict_to_json(const VermaVerdict& v);

}  // namespace gapvir
