#include "regspec/io.hpp"

#include <json.hpp>

#include <sstream>

namespace regspec {

std::string serialize_weighted_graph(const WeightedGraph& graph, const GraphHeader& header) {
    nlohmann::json meta = {{"N", header.n_vertices},
                           {"d", header.degree},
                           {"seed", header.seed},
                           {"weight_spec", header.weight_spec}};
    std::ostringstream out;
    out << meta.dump() << '\n' << graph.edge_list_text();
    return out.str();
}

ParsedWeightedGraph parse_weighted_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string header_line;
    if (!std::getline(in, header_line)) {
        throw std::invalid_argument("missing graph header line");
    }
    const nlohmann::json meta = nlohmann::json::parse(header_line);
    GraphHeader header;
    header.n_vertices = meta.at("N").get<int>();
    header.degree = meta.at("d").get<int>();
    header.seed = meta.at("seed").get<std::uint64_t>();
    header.weight_spec = meta.at("weight_spec").get<std::string>();

    std::vector<std::pair<int, int>> edges;
    std::vector<double> weights;
    int u = 0, v = 0;
    double w = 0.0;
    while (in >> u >> v >> w) {
        edges.emplace_back(u, v);
        weights.push_back(w);
    }
    if (!in.eof()) {
        throw std::invalid_argument("malformed edge line in graph text");
    }
    // re-sorting under the (u, v) key keeps weights aligned with edges
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto norm = [](std::pair<int, int> e) {
            return std::pair(std::min(e.first, e.second), std::max(e.first, e.second));
        };
        return norm(edges[a]) < norm(edges[b]);
    });
    std::vector<std::pair<int, int>> sorted_edges;
    std::vector<double> sorted_weights;
    for (std::size_t i : order) {
        sorted_edges.push_back(edges[i]);
        sorted_weights.push_back(weights[i]);
    }
    RegularGraph base(header.n_vertices, header.degree, std::move(sorted_edges));
    return ParsedWeightedGraph{WeightedGraph(std::move(base), std::move(sorted_weights)),
                               header};
}

}  // namespace regspec
