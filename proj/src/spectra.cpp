#include "regspec/spectra.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

namespace regspec {

namespace {

Eigen::MatrixXd adjacency_matrix(const WeightedGraph& graph) {
    const int n = graph.n_vertices();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    const auto edges = graph.base().edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [u, v] = edges[i];
        a(u, v) = graph.weight(i);
        a(v, u) = graph.weight(i);
    }
    return a;
}

}  // namespace

std::vector<double> trace_moments(const WeightedGraph& graph, int max_order,
                                  const SpectraOptions& opts) {
    if (max_order < 1) {
        throw std::invalid_argument("max_order must be at least 1");
    }
    const double n = graph.n_vertices();
    if (n * n * n * max_order > opts.max_flop_budget) {
        throw std::runtime_error("trace moment budget exceeded (N^3 * K too large)");
    }
    const Eigen::MatrixXd a = adjacency_matrix(graph);
    std::vector<double> moments;
    moments.reserve(static_cast<std::size_t>(max_order));
    Eigen::MatrixXd power = a;
    for (int k = 1; k <= max_order; ++k) {
        moments.push_back(power.trace() / n);
        if (k < max_order) {
            power = power * a;
        }
    }
    return moments;
}

std::vector<double> eigen_spectrum(const WeightedGraph& graph) {
    const Eigen::MatrixXd a = adjacency_matrix(graph);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition did not converge");
    }
    const auto& values = solver.eigenvalues();
    return std::vector<double>(values.data(), values.data() + values.size());
}

double eigen_residual(const WeightedGraph& graph) {
    const Eigen::MatrixXd a = adjacency_matrix(graph);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition did not converge");
    }
    const Eigen::MatrixXd residual =
        a * solver.eigenvectors() - solver.eigenvectors() * solver.eigenvalues().asDiagonal();
    const double norm = a.norm();
    return norm == 0.0 ? residual.norm() : residual.colwise().norm().maxCoeff() / norm;
}

double kesten_radius(int d) {
    if (d < 2) {
        throw std::domain_error("Kesten's measure requires d >= 2");
    }
    return 2.0 * std::sqrt(static_cast<double>(d - 1));
}

double kesten_density(int d, double x) {
    const double radius = kesten_radius(d);
    if (std::abs(x) > radius) {
        return 0.0;
    }
    const double dd = static_cast<double>(d);
    const double denom = dd * dd - x * x;
    if (denom <= 0.0) {
        // only reachable at the exact endpoints for d = 2
        return std::numeric_limits<double>::infinity();
    }
    return dd / (2.0 * std::numbers::pi * denom) * std::sqrt(radius * radius - x * x);
}

namespace {

// integral of x^k f(x) over [a, b] via x = R sin(theta):
//   integrand(theta) = (R sin)^k * d R^2 cos^2 / (2 pi (d^2 - R^2 sin^2))
// smooth on [-pi/2, pi/2] for every d >= 2 (at d = 2 it reduces to the
// arcsine form (R sin)^k / pi).
double kesten_integral(int d, int order, double a, double b) {
    const double radius = kesten_radius(d);
    const double dd = static_cast<double>(d);
    auto integrand = [&](double theta) {
        const double s = std::sin(theta);
        const double c = std::cos(theta);
        // d^2 - R^2 sin^2 = (d-2)^2 + R^2 cos^2 exactly; this form stays
        // cancellation-free through the d = 2 arcsine case
        const double denom = (dd - 2.0) * (dd - 2.0) + radius * radius * c * c;
        return std::pow(radius * s, order) * dd * radius * radius * c * c /
               (2.0 * std::numbers::pi * denom);
    };
    const double lo = std::asin(std::clamp(a / radius, -1.0, 1.0));
    const double hi = std::asin(std::clamp(b / radius, -1.0, 1.0));
    if (lo >= hi) {
        return 0.0;
    }
    double error = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, lo, hi, 15, 1e-13, &error);
    if (error > 1e-9) {
        throw std::runtime_error("Kesten quadrature did not reach the error target");
    }
    return value;
}

}  // namespace

double kesten_moment_numeric(int d, int order) {
    if (order < 0 || order > 14) {
        throw std::invalid_argument("numeric Kesten moments supported for 0 <= k <= 14");
    }
    const double radius = kesten_radius(d);
    return kesten_integral(d, order, -radius, radius);
}

double kesten_mass(int d, double a, double b) { return kesten_integral(d, 0, a, b); }

SpectralSample sample_spectrum(int n_vertices, int degree, const WeightSpec& spec,
                               std::uint64_t trial_seed, int max_order, bool with_eigenvalues,
                               const SpectraOptions& opts) {
    const RegularGraph graph =
        sample_regular_graph(n_vertices, degree, derive_seed(trial_seed, 0));
    const WeightedGraph weighted = assign_weights(graph, spec, derive_seed(trial_seed, 1));
    SpectralSample sample;
    sample.trial_seed = trial_seed;
    sample.trace_moments = trace_moments(weighted, max_order, opts);
    if (with_eigenvalues) {
        sample.eigenvalues = eigen_spectrum(weighted);
    }
    return sample;
}

MonteCarloResult monte_carlo_moments(int n_vertices, int degree, const WeightSpec& spec,
                                     int trials, int max_order, std::uint64_t master_seed,
                                     const MonteCarloOptions& opts) {
    if (trials < 1) {
        throw std::invalid_argument("need at least one trial");
    }
    if (max_order < 1) {
        throw std::invalid_argument("max_order must be at least 1");
    }

    std::vector<SpectralSample> per_trial(static_cast<std::size_t>(trials));

    auto run_trial = [&](int t) {
        per_trial[static_cast<std::size_t>(t)] = sample_spectrum(
            n_vertices, degree, spec, derive_seed(master_seed, static_cast<std::uint64_t>(t)),
            max_order, opts.collect_eigenvalues, opts.spectra);
    };

    const int threads = std::max(1, opts.threads);
    if (threads == 1) {
        for (int t = 0; t < trials; ++t) {
            run_trial(t);
        }
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) {
                    run_trial(t);
                }
            });
        }
        for (auto& worker : pool) {
            worker.join();
        }
    }

    MonteCarloResult result;
    result.n_vertices = n_vertices;
    result.degree = degree;
    result.spec = spec;
    result.master_seed = master_seed;
    result.trials = trials;

    // deterministic fold in trial order
    for (int k = 1; k <= max_order; ++k) {
        double mean = 0.0;
        for (int t = 0; t < trials; ++t) {
            mean += per_trial[static_cast<std::size_t>(t)]
                        .trace_moments[static_cast<std::size_t>(k - 1)];
        }
        mean /= trials;
        double var = 0.0;
        for (int t = 0; t < trials; ++t) {
            const double diff = per_trial[static_cast<std::size_t>(t)]
                                    .trace_moments[static_cast<std::size_t>(k - 1)] -
                                mean;
            var += diff * diff;
        }
        const double se =
            trials >= 2 ? std::sqrt(var / (trials - 1) / trials) : 0.0;
        result.estimates.push_back(MomentEstimate{k, mean, se, trials});
    }
    if (opts.collect_eigenvalues) {
        for (const SpectralSample& trial : per_trial) {
            result.eigenvalues.insert(result.eigenvalues.end(), trial.eigenvalues.begin(),
                                      trial.eigenvalues.end());
        }
        std::sort(result.eigenvalues.begin(), result.eigenvalues.end());
    }
    return result;
}

Histogram empirical_density(std::span<const double> values, int bins, double lo, double hi) {
    if (values.empty()) {
        throw std::invalid_argument("cannot build a density from an empty sample");
    }
    if (bins < 1 || !(hi > lo)) {
        throw std::invalid_argument("need bins >= 1 and hi > lo");
    }
    Histogram hist;
    hist.lo = lo;
    hist.hi = hi;
    hist.total = values.size();
    hist.counts.assign(static_cast<std::size_t>(bins), 0);
    const double width = (hi - lo) / bins;
    for (double v : values) {
        if (v < lo || v > hi) {
            continue;
        }
        auto bin = static_cast<std::size_t>((v - lo) / width);
        bin = std::min(bin, static_cast<std::size_t>(bins - 1));
        ++hist.counts[bin];
        ++hist.total_in_range;
    }
    if (hist.total_in_range == 0) {
        throw std::invalid_argument("no samples fall inside the histogram range");
    }
    hist.centers.resize(static_cast<std::size_t>(bins));
    hist.density.resize(static_cast<std::size_t>(bins));
    for (int b = 0; b < bins; ++b) {
        hist.centers[static_cast<std::size_t>(b)] = lo + (b + 0.5) * width;
        hist.density[static_cast<std::size_t>(b)] =
            static_cast<double>(hist.counts[static_cast<std::size_t>(b)]) /
            (static_cast<double>(hist.total_in_range) * width);
    }
    return hist;
}

double binned_total_variation(const Histogram& hist, std::span<const double> reference_mass) {
    if (reference_mass.size() != hist.counts.size()) {
        throw std::invalid_argument("reference mass vector must match the bin count");
    }
    double ref_total = 0.0;
    for (double m : reference_mass) {
        ref_total += m;
    }
    if (ref_total <= 0.0) {
        throw std::invalid_argument("reference masses must have positive total");
    }
    double tv = 0.0;
    for (std::size_t b = 0; b < reference_mass.size(); ++b) {
        const double p = static_cast<double>(hist.counts[b]) /
                         static_cast<double>(hist.total_in_range);
        tv += std::abs(p - reference_mass[b] / ref_total);
    }
    return tv / 2.0;
}

}  // namespace regspec
