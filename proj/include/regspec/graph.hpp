#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace regspec {

struct SampleRetryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Simple d-regular graph: no loops, no multi-edges, every degree exactly d.
class RegularGraph {
public:
    /// Validates regularity and simplicity; edges are stored as (u, v) with
    /// u < v, sorted lexicographically.
    RegularGraph(int n_vertices, int degree, std::vector<std::pair<int, int>> edges);

    int n_vertices() const { return n_; }
    int degree() const { return d_; }
    std::span<const std::pair<int, int>> edges() const { return edges_; }
    std::span<const int> neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    std::size_t edge_count() const { return edges_.size(); }
    bool connected() const;

    /// One "u v" line per edge, 0-indexed.
    std::string edge_list_text() const;

private:
    int n_;
    int d_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

struct SampleOptions {
    std::uint64_t max_attempts = 1'000'000;
};

/// Uniform sample from the simple d-regular graphs on N vertices: pairing
/// (configuration) model with full restart whenever the matching produces a
/// loop or repeated edge. Deterministic given the seed.
RegularGraph sample_regular_graph(int n_vertices, int degree, std::uint64_t seed,
                                  const SampleOptions& opts = {});

struct CycleCensus {
    std::map<int, std::uint64_t> counts;  // cycle length (>= 3) -> count

    std::uint64_t count(int length) const {
        auto it = counts.find(length);
        return it == counts.end() ? 0 : it->second;
    }
};

struct CycleOptions {
    int max_supported_length = 10;
};

/// Exact counts of i-cycles for 3 <= i <= max_length, each cycle counted once
/// (anchored at its smallest vertex, direction fixed by the smaller of the two
/// anchor neighbors).
CycleCensus count_cycles(const RegularGraph& graph, int max_length,
                         const CycleOptions& opts = {});

}  // namespace regspec
