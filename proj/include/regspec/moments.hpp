#pragma once

#include "regspec/capp.hpp"
#include "regspec/polynomial.hpp"
#include "regspec/rational.hpp"

#include <string>
#include <vector>

namespace regspec {

/// Exact moments mu(0..K) of a distribution; mu(0) = 1.
class MomentSequence {
public:
    MomentSequence() = default;
    MomentSequence(std::vector<Rational> mu_from_zero, std::string label);

    /// All moments equal to 1 (the unweighted case).
    static MomentSequence all_ones(int max_order);
    /// Semicircle moments for the given variance; variance 1/4 gives c_k.
    static MomentSequence semicircle(int max_order, const Rational& variance = Rational(1, 4));

    int max_order() const { return static_cast<int>(mu_.size()) - 1; }
    const Rational& moment(int k) const;
    const std::string& label() const { return label_; }

private:
    std::vector<Rational> mu_;
    std::string label_;
};

/// c_m: m-th moment of the semicircle distribution normalized to variance 1/4.
Rational semicircle_moment(int order);

/// Patterns of one length bucketed by partition (descending signature), with
/// the multiplicity polynomials summed per bucket. Groups are ordered by
/// descending lexicographic partition, e.g. (8), (6,2), (4,4), (4,2,2), ...
struct SignatureGroup {
    Signature partition;
    std::uint64_t pattern_count = 0;
    PolyInD multiplicity_sum;  // sum over the bucket of prod_j (d - alpha_j)
};

/// Memoized per-length expansion tables; safe for concurrent readers.
const std::vector<SignatureGroup>& signature_expansion(int length,
                                                       const EnumerationOptions& opts = {});

/// mu_{d,W}(k) = sum over patterns of m_pi(d) * prod_i mu_W(n_i). Exact; zero
/// for odd k. Requires weight moments up to order k and d >= 1.
Rational moment_expansion(int order, int d, const MomentSequence& weights,
                          const EnumerationOptions& opts = {});

/// Same sum with d left symbolic.
PolyInD moment_expansion_symbolic(int order, const MomentSequence& weights,
                                  const EnumerationOptions& opts = {});

/// Moments of the unique eigendistribution with second moment 1/4, computed by
/// the recursion mu(2k) = (d^k - d)^{-1} * sum over patterns with more than one
/// symbol of m_pi(d) * prod mu(n_i). Defined for d >= 2.
class EigenmomentTable {
public:
    EigenmomentTable(int d, std::vector<Rational> even_moments);

    int d() const { return d_; }
    int max_order() const { return 2 * static_cast<int>(even_.size()); }
    /// mu(k); odd orders are exactly zero, mu(0) = 1.
    const Rational& moment(int k) const;
    MomentSequence as_moment_sequence() const;

private:
    int d_;
    std::vector<Rational> even_;  // even_[i] = mu(2(i+1))
    static const Rational kZero;
    static const Rational kOne;
};

EigenmomentTable eigenmoments(int d, int max_order, const EnumerationOptions& opts = {});

/// mu_{W_d}(8) = 7/128 + 1/(128(d^2+d+1)), the first moment where the
/// eigendistribution departs from the semicircle.
Rational eighth_moment_closed_form(int d);

struct DeviationRow {
    int d = 0;
    int order = 0;
    Rational scaled_deviation;  // d^2 * (mu_{W_d}(order) - c_order)
};

std::vector<DeviationRow> deviation_table(int d_min, int d_max, const std::vector<int>& orders,
                                          const EnumerationOptions& opts = {});

/// Limiting spectral moment of the unweighted ensemble: sum of m_pi(d) over
/// patterns of the given length (Kesten's measure moments).
Rational kesten_moment_exact(int d, int order, const EnumerationOptions& opts = {});

}  // namespace regspec
