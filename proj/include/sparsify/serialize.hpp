#pragma once

#include <string>

#include "sparsify/ears.hpp"
#include "sparsify/graph_io.hpp"
#include "sparsify/hammock.hpp"
#include "sparsify/report.hpp"
#include "sparsify/scattering.hpp"
#include "sparsify/spr.hpp"

namespace sparsify {

// Rationals are written twice: a number for readers and an exact "p/q"
// string under <key>Exact, which wins when parsing.
void put_rational(Json& j, const std::string& key, Rational r);
Rational get_rational(const Json& j, const std::string& key);

// Parent edges are written as endpoint pairs, so parsing needs the graph.
Json decomposition_to_json(const WeightedGraph& g, const HammockDecomposition& hd);
HammockDecomposition decomposition_from_json(const WeightedGraph& g, const Json& j);
std::string decomposition_to_dot(const WeightedGraph& g, const HammockDecomposition& hd);

Json chop_to_json(const FuzzyChop& chop);
FuzzyChop chop_from_json(const Json& j);
Json scattering_chop_to_json(const ScatteringChop& sc);
ScatteringChop scattering_chop_from_json(const Json& j);

// Nested parts: every node carries its vertices, annulus and child parts.
Json hierarchy_to_json(const ChopHierarchy& h);
ChopHierarchy hierarchy_from_json(const Json& j);
Json partition_to_json(const ScatteringPartition& p);
ScatteringPartition partition_from_json(const Json& j);

Json spr_instance_to_json(const SprInstance& inst);
SprInstance spr_instance_from_json(const Json& j);
Json spr_result_to_json(const SprResult& r, const Distortion& d);
SprResult spr_result_from_json(const Json& j);

Json ears_to_json(const EarDecomposition& ed);
EarDecomposition ears_from_json(const Json& j);

Json report_to_json(const Report& report);

// Two-space indent, short arrays on one line, trailing newline.
std::string dump(const Json& j);

}  // namespace sparsify
