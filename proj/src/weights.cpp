#include "regspec/weights.hpp"

#include <cmath>
#include <sstream>

namespace regspec {

WeightSpec WeightSpec::parse(std::string_view text) {
    const auto colon = text.find(':');
    const std::string name(text.substr(0, colon));
    WeightSpec spec;
    bool wants_param = false;
    if (name == "constant" || name == "constant-one" || name == "one") {
        spec.kind = Kind::ConstantOne;
    } else if (name == "rademacher") {
        spec.kind = Kind::Rademacher;
    } else if (name == "semicircle") {
        spec.kind = Kind::Semicircle;
        wants_param = true;
    } else if (name == "gaussian") {
        spec.kind = Kind::Gaussian;
        wants_param = true;
    } else if (name == "uniform") {
        spec.kind = Kind::Uniform;
        wants_param = true;
        spec.param = Rational(1);
    } else {
        throw std::invalid_argument("unknown weight spec '" + std::string(text) +
                                    "' (expected constant, rademacher, semicircle:VAR, "
                                    "gaussian:VAR, uniform:HALFWIDTH)");
    }
    if (colon != std::string_view::npos) {
        if (!wants_param) {
            throw std::invalid_argument("weight spec '" + name + "' takes no parameter");
        }
        spec.param = parse_rational(text.substr(colon + 1));
        if (spec.param <= 0) {
            throw std::invalid_argument("weight spec parameter must be positive");
        }
    }
    return spec;
}

std::string WeightSpec::str() const {
    switch (kind) {
        case Kind::ConstantOne:
            return "constant";
        case Kind::Rademacher:
            return "rademacher";
        case Kind::Semicircle:
            return "semicircle:" + rational_str(param);
        case Kind::Gaussian:
            return "gaussian:" + rational_str(param);
        case Kind::Uniform:
            return "uniform:" + rational_str(param);
    }
    return "?";
}

Rational weight_moments(const WeightSpec& spec, int order) {
    if (order < 0) {
        throw std::invalid_argument("moment order must be non-negative");
    }
    if (order == 0) {
        return Rational(1);
    }
    const bool odd = order % 2 != 0;
    const unsigned half = static_cast<unsigned>(order) / 2;
    switch (spec.kind) {
        case WeightSpec::Kind::ConstantOne:
            return Rational(1);
        case WeightSpec::Kind::Rademacher:
            return odd ? Rational(0) : Rational(1);
        case WeightSpec::Kind::Semicircle:
            // Catalan(k) * variance^k for order 2k
            return odd ? Rational(0)
                       : Rational(binomial(2 * half, half), half + 1) *
                             rational_pow(spec.param, half);
        case WeightSpec::Kind::Gaussian:
            // (2k-1)!! * variance^k
            return odd ? Rational(0)
                       : Rational(odd_double_factorial(static_cast<unsigned>(order))) *
                             rational_pow(spec.param, half);
        case WeightSpec::Kind::Uniform:
            // a^k / (k+1) for even k on [-a, a]
            return odd ? Rational(0)
                       : rational_pow(spec.param, static_cast<unsigned>(order)) /
                             (order + 1);
    }
    throw std::logic_error("unhandled weight kind");
}

MomentSequence weight_moment_sequence(const WeightSpec& spec, int max_order) {
    std::vector<Rational> mu;
    mu.reserve(static_cast<std::size_t>(max_order) + 1);
    for (int k = 0; k <= max_order; ++k) {
        mu.push_back(weight_moments(spec, k));
    }
    return MomentSequence(std::move(mu), spec.str());
}

double sample_weight(const WeightSpec& spec, Rng& rng) {
    switch (spec.kind) {
        case WeightSpec::Kind::ConstantOne:
            return 1.0;
        case WeightSpec::Kind::Rademacher:
            return rng.coin() ? 1.0 : -1.0;
        case WeightSpec::Kind::Semicircle: {
            // rejection from the uniform box over [-2s, 2s] x [0, f(0)];
            // acceptance probability is pi/4
            const double radius = 2.0 * std::sqrt(to_double(spec.param));
            while (true) {
                const double x = rng.uniform(-radius, radius);
                const double u = rng.next_unit();
                if (u * u * radius * radius <= radius * radius - x * x) {
                    return x;
                }
            }
        }
        case WeightSpec::Kind::Gaussian: {
            // Marsaglia polar; the spare deviate is discarded to keep the
            // draw-to-stream mapping stateless
            const double sigma = std::sqrt(to_double(spec.param));
            while (true) {
                const double a = rng.uniform(-1.0, 1.0);
                const double b = rng.uniform(-1.0, 1.0);
                const double s = a * a + b * b;
                if (s > 0.0 && s < 1.0) {
                    return sigma * a * std::sqrt(-2.0 * std::log(s) / s);
                }
            }
        }
        case WeightSpec::Kind::Uniform: {
            const double a = to_double(spec.param);
            return rng.uniform(-a, a);
        }
    }
    throw std::logic_error("unhandled weight kind");
}

WeightedGraph::WeightedGraph(RegularGraph base, std::vector<double> edge_weights)
    : base_(std::move(base)), weights_(std::move(edge_weights)) {
    if (weights_.size() != base_.edge_count()) {
        throw std::invalid_argument("need exactly one weight per edge");
    }
}

std::string WeightedGraph::edge_list_text() const {
    std::ostringstream out;
    out.precision(17);
    const auto edges = base_.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        out << edges[i].first << ' ' << edges[i].second << ' ' << weights_[i] << '\n';
    }
    return out.str();
}

WeightedGraph assign_weights(const RegularGraph& graph, const WeightSpec& spec,
                             std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> weights(graph.edge_count());
    for (double& w : weights) {
        w = sample_weight(spec, rng);
    }
    return WeightedGraph(graph, weights);
}

}  // namespace regspec
