#pragma once

#include "regspec/weights.hpp"

#include <span>
#include <vector>

namespace regspec {

struct SpectraOptions {
    // guards against accidental huge dense computations
    double max_flop_budget = 5e11;
};

/// mu_k = Tr(A^k)/N for k = 1..max_order via iterated dense products.
/// mu_1 is exactly 0 up to representation (zero diagonal).
std::vector<double> trace_moments(const WeightedGraph& graph, int max_order,
                                  const SpectraOptions& opts = {});

/// All N eigenvalues of the weighted adjacency matrix, ascending.
std::vector<double> eigen_spectrum(const WeightedGraph& graph);

/// Max residual ||A v - lambda v|| / ||A|| over all eigenpairs; the solver
/// contract used by the tests.
double eigen_residual(const WeightedGraph& graph);

/// Kesten's density d*sqrt(4(d-1)-x^2) / (2*pi*(d^2-x^2)) on |x| <= 2*sqrt(d-1).
/// For d = 2 the support endpoints are integrable singularities and return
/// +infinity; outside the closed support the density is exactly 0.
double kesten_density(int d, double x);

/// Support radius 2*sqrt(d-1).
double kesten_radius(int d);

/// Integral of x^k against Kesten's density, by adaptive Gauss-Kronrod after
/// the substitution x = R sin(theta), which removes the edge singularities
/// (including the d = 2 arcsine case). Absolute error well below 1e-9.
double kesten_moment_numeric(int d, int order);

/// Kesten mass of the interval [a, b].
double kesten_mass(int d, double a, double b);

/// One ensemble trial: a sampled graph, weighted, measured.
struct SpectralSample {
    std::uint64_t trial_seed = 0;
    std::vector<double> trace_moments;  // index k-1 holds Tr(A^k)/N
    std::vector<double> eigenvalues;    // ascending; empty unless requested
};

/// Runs a single trial: graph seed derive_seed(trial_seed, 0), weight seed
/// derive_seed(trial_seed, 1).
SpectralSample sample_spectrum(int n_vertices, int degree, const WeightSpec& spec,
                               std::uint64_t trial_seed, int max_order,
                               bool with_eigenvalues = false, const SpectraOptions& opts = {});

struct MomentEstimate {
    int order = 0;
    double mean = 0.0;
    double std_error = 0.0;  // sample stddev / sqrt(trials); needs trials >= 2
    int trials = 0;
};

struct MonteCarloOptions {
    bool collect_eigenvalues = false;
    int threads = 1;
    SpectraOptions spectra;
};

struct MonteCarloResult {
    int n_vertices = 0;
    int degree = 0;
    WeightSpec spec;
    std::uint64_t master_seed = 0;
    int trials = 0;
    std::vector<MomentEstimate> estimates;  // orders 1..max_order
    std::vector<double> eigenvalues;        // pooled, ascending (if collected)
};

/// Independent trials: trial t uses graph seed derive_seed(trial_seed, 0) and
/// weight seed derive_seed(trial_seed, 1) with trial_seed = derive_seed(master, t).
/// Aggregation is a deterministic fold in trial order regardless of thread count.
MonteCarloResult monte_carlo_moments(int n_vertices, int degree, const WeightSpec& spec,
                                     int trials, int max_order, std::uint64_t master_seed,
                                     const MonteCarloOptions& opts = {});

struct Histogram {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> centers;
    std::vector<double> density;        // normalized over in-range samples
    std::vector<std::uint64_t> counts;
    std::uint64_t total_in_range = 0;
    std::uint64_t total = 0;

    double bin_width() const { return (hi - lo) / static_cast<double>(centers.size()); }
};

/// Normalized histogram (sum of density * bin_width == 1 over in-range mass).
Histogram empirical_density(std::span<const double> values, int bins, double lo, double hi);

/// Binned total-variation distance between the histogram and reference bin
/// masses (the reference is renormalized over the histogram range).
double binned_total_variation(const Histogram& hist, std::span<const double> reference_mass);

}  // namespace regspec
