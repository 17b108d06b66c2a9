#pragma once

#include "regspec/graph.hpp"
#include "regspec/moments.hpp"
#include "regspec/rational.hpp"
#include "regspec/rng.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace regspec {

/// Edge-weight distribution. Every kind has finite moments of all orders with
/// closed-form rational values.
struct WeightSpec {
    enum class Kind { ConstantOne, Semicircle, Gaussian, Rademacher, Uniform };

    Kind kind = Kind::ConstantOne;
    Rational param = Rational(1, 4);  // variance (semicircle, gaussian); half-width (uniform)

    /// Accepts "constant", "rademacher", "semicircle:VAR", "gaussian:VAR",
    /// "uniform:HALFWIDTH"; numeric parts may be decimals or fractions.
    static WeightSpec parse(std::string_view text);
    std::string str() const;

    bool operator==(const WeightSpec&) const = default;
};

/// Exact k-th moment of the weight distribution.
Rational weight_moments(const WeightSpec& spec, int order);

MomentSequence weight_moment_sequence(const WeightSpec& spec, int max_order);

/// One draw; consumes randomness only from the given stream.
double sample_weight(const WeightSpec& spec, Rng& rng);

class WeightedGraph {
public:
    WeightedGraph(RegularGraph base, std::vector<double> edge_weights);

    const RegularGraph& base() const { return base_; }
    std::span<const double> weights() const { return weights_; }
    double weight(std::size_t edge_index) const { return weights_[edge_index]; }
    int n_vertices() const { return base_.n_vertices(); }

    /// One "u v w" line per edge, 0-indexed, 17 significant digits.
    std::string edge_list_text() const;

private:
    RegularGraph base_;
    std::vector<double> weights_;
};

/// One i.i.d. draw per undirected edge; deterministic given the seed. The
/// constant-one spec reproduces the unweighted graph.
WeightedGraph assign_weights(const RegularGraph& graph, const WeightSpec& spec,
                             std::uint64_t seed);

}  // namespace regspec
