#pragma once

#include "regspec/weights.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace regspec {

/// Provenance header stored with serialized graphs.
struct GraphHeader {
    int n_vertices = 0;
    int degree = 0;
    std::uint64_t seed = 0;
    std::string weight_spec;

    bool operator==(const GraphHeader&) const = default;
};

/// JSON header line {"N", "d", "seed", "weight_spec"} followed by one
/// "u v weight" line per edge, 0-indexed.
std::string serialize_weighted_graph(const WeightedGraph& graph, const GraphHeader& header);

struct ParsedWeightedGraph {
    WeightedGraph graph;
    GraphHeader header;
};

ParsedWeightedGraph parse_weighted_graph(std::string_view text);

}  // namespace regspec
