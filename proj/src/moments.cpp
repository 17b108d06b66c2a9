#include "regspec/moments.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace regspec {

MomentSequence::MomentSequence(std::vector<Rational> mu_from_zero, std::string label)
    : mu_(std::move(mu_from_zero)), label_(std::move(label)) {
    if (mu_.empty() || mu_.front() != 1) {
        throw std::invalid_argument("moment sequence must start with mu(0) = 1");
    }
}

MomentSequence MomentSequence::all_ones(int max_order) {
    return MomentSequence(std::vector<Rational>(static_cast<std::size_t>(max_order) + 1,
                                                Rational(1)),
                          "constant-one");
}

MomentSequence MomentSequence::semicircle(int max_order, const Rational& variance) {
    std::vector<Rational> mu;
    mu.reserve(static_cast<std::size_t>(max_order) + 1);
    for (int k = 0; k <= max_order; ++k) {
        if (k % 2 != 0) {
            mu.emplace_back(0);
        } else {
            // Catalan(k/2) * variance^(k/2)
            const unsigned half = static_cast<unsigned>(k) / 2;
            mu.push_back(Rational(binomial(2 * half, half), half + 1) *
                         rational_pow(variance, half));
        }
    }
    return MomentSequence(std::move(mu), "semicircle var " + rational_str(variance));
}

const Rational& MomentSequence::moment(int k) const {
    if (k < 0 || k > max_order()) {
        throw std::invalid_argument("weight moment of order " + std::to_string(k) +
                                    " not available (sequence holds 0.." +
                                    std::to_string(max_order()) + ")");
    }
    return mu_[static_cast<std::size_t>(k)];
}

Rational semicircle_moment(int order) {
    if (order < 0) {
        throw std::invalid_argument("moment order must be non-negative");
    }
    if (order % 2 != 0) {
        return Rational(0);
    }
    const unsigned k = static_cast<unsigned>(order) / 2;
    return Rational(binomial(2 * k, k), integer_pow(4, k) * (k + 1));
}

namespace {

std::vector<SignatureGroup> build_signature_expansion(int length,
                                                      const EnumerationOptions& opts) {
    // accumulate integer coefficient vectors per partition, then expand once
    std::map<Signature, std::pair<std::uint64_t, std::vector<BigInt>>, std::greater<Signature>>
        buckets;
    for_each_capp(
        length,
        [&](const CappView& view) {
            Signature partition = sorted_signature(
                Signature(view.symbol_counts.begin(), view.symbol_counts.end()));
            auto& [count, coeffs] = buckets[std::move(partition)];
            ++count;
            // multiply out prod_j (d - alpha_j) into integer coefficients
            std::vector<BigInt> poly{1};
            for (int alpha : view.multiplicity_roots) {
                poly.push_back(0);
                for (std::size_t i = poly.size(); i-- > 0;) {
                    BigInt v = (i > 0) ? poly[i - 1] : BigInt(0);
                    v -= alpha * poly[i];
                    poly[i] = std::move(v);
                }
            }
            if (coeffs.size() < poly.size()) {
                coeffs.resize(poly.size());
            }
            for (std::size_t i = 0; i < poly.size(); ++i) {
                coeffs[i] += poly[i];
            }
        },
        opts);

    std::vector<SignatureGroup> groups;
    groups.reserve(buckets.size());
    for (auto& [partition, data] : buckets) {
        std::vector<Rational> coeffs;
        coeffs.reserve(data.second.size());
        for (BigInt& c : data.second) {
            coeffs.emplace_back(std::move(c));
        }
        groups.push_back(SignatureGroup{partition, data.first, PolyInD(std::move(coeffs))});
    }
    return groups;
}

}  // namespace

const std::vector<SignatureGroup>& signature_expansion(int length,
                                                       const EnumerationOptions& opts) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const std::vector<SignatureGroup>>> cache;

    {
        std::scoped_lock lock(mutex);
        if (auto it = cache.find(length); it != cache.end()) {
            return *it->second;
        }
    }
    auto built = std::make_unique<const std::vector<SignatureGroup>>(
        build_signature_expansion(length, opts));
    std::scoped_lock lock(mutex);
    auto [it, inserted] = cache.try_emplace(length, std::move(built));
    return *it->second;  // on a lost race the first insert wins; results are identical
}

namespace {

Rational weight_product(const Signature& partition, const MomentSequence& weights) {
    Rational out(1);
    for (int n : partition) {
        out *= weights.moment(n);
    }
    return out;
}

}  // namespace

Rational moment_expansion(int order, int d, const MomentSequence& weights,
                          const EnumerationOptions& opts) {
    if (d < 1) {
        throw std::domain_error("moment expansion requires d >= 1");
    }
    if (order < 0) {
        throw std::invalid_argument("moment order must be non-negative");
    }
    if (order % 2 != 0) {
        return Rational(0);
    }
    if (order == 0) {
        return Rational(1);
    }
    Rational total(0);
    for (const SignatureGroup& group : signature_expansion(order, opts)) {
        total += group.multiplicity_sum.eval(Rational(d)) * weight_product(group.partition, weights);
    }
    return total;
}

PolyInD moment_expansion_symbolic(int order, const MomentSequence& weights,
                                  const EnumerationOptions& opts) {
    if (order < 0) {
        throw std::invalid_argument("moment order must be non-negative");
    }
    if (order % 2 != 0) {
        return PolyInD();
    }
    if (order == 0) {
        return PolyInD(Rational(1));
    }
    PolyInD total;
    for (const SignatureGroup& group : signature_expansion(order, opts)) {
        total += group.multiplicity_sum * weight_product(group.partition, weights);
    }
    return total;
}

const Rational EigenmomentTable::kZero(0);
const Rational EigenmomentTable::kOne(1);

EigenmomentTable::EigenmomentTable(int d, std::vector<Rational> even_moments)
    : d_(d), even_(std::move(even_moments)) {}

const Rational& EigenmomentTable::moment(int k) const {
    if (k < 0 || k > max_order()) {
        throw std::invalid_argument("eigenmoment of order " + std::to_string(k) +
                                    " not available (table holds up to " +
                                    std::to_string(max_order()) + ")");
    }
    if (k == 0) {
        return kOne;
    }
    if (k % 2 != 0) {
        return kZero;
    }
    return even_[static_cast<std::size_t>(k / 2) - 1];
}

MomentSequence EigenmomentTable::as_moment_sequence() const {
    std::vector<Rational> mu;
    mu.reserve(static_cast<std::size_t>(max_order()) + 1);
    for (int k = 0; k <= max_order(); ++k) {
        mu.push_back(moment(k));
    }
    return MomentSequence(std::move(mu), "eigendistribution d=" + std::to_string(d_));
}

EigenmomentTable eigenmoments(int d, int max_order, const EnumerationOptions& opts) {
    if (d < 2) {
        throw std::domain_error("eigenmoments require d >= 2 (d^k - d vanishes at d = 1)");
    }
    if (max_order < 2) {
        throw std::invalid_argument("max_order must be at least 2");
    }
    std::vector<Rational> even{Rational(1, 4)};  // mu(2), the chosen normalization
    auto moment_at = [&](int k) -> Rational {
        if (k % 2 != 0) {
            return Rational(0);
        }
        if (k == 0) {
            return Rational(1);
        }
        return even[static_cast<std::size_t>(k / 2) - 1];
    };
    for (int order = 4; order <= max_order; order += 2) {
        const int k = order / 2;
        Rational sum(0);
        for (const SignatureGroup& group : signature_expansion(order, opts)) {
            if (group.partition.size() == 1) {
                continue;  // P^o excludes the single-symbol pattern
            }
            Rational product(1);
            for (int n : group.partition) {
                product *= moment_at(n);  // every n < order here
            }
            sum += group.multiplicity_sum.eval(Rational(d)) * product;
        }
        even.push_back(sum / (Rational(integer_pow(d, static_cast<unsigned>(k))) - d));
    }
    return EigenmomentTable(d, std::move(even));
}

Rational eighth_moment_closed_form(int d) {
    if (d < 2) {
        throw std::domain_error("closed form requires d >= 2");
    }
    return Rational(7, 128) + Rational(1, 128 * (BigInt(d) * d + d + 1));
}

std::vector<DeviationRow> deviation_table(int d_min, int d_max, const std::vector<int>& orders,
                                          const EnumerationOptions& opts) {
    if (d_min < 2 || d_max < d_min) {
        throw std::domain_error("deviation table requires 2 <= d_min <= d_max");
    }
    const int max_order = orders.empty() ? 0 : *std::max_element(orders.begin(), orders.end());
    std::vector<DeviationRow> rows;
    for (int d = d_min; d <= d_max; ++d) {
        const EigenmomentTable table = eigenmoments(d, std::max(2, max_order), opts);
        for (int order : orders) {
            rows.push_back(DeviationRow{
                d, order,
                Rational(BigInt(d) * d) * (table.moment(order) - semicircle_moment(order))});
        }
    }
    return rows;
}

Rational kesten_moment_exact(int d, int order, const EnumerationOptions& opts) {
    if (d < 1) {
        throw std::domain_error("Kesten moments require d >= 1");
    }
    return moment_expansion(order, d, MomentSequence::all_ones(std::max(order, 0)), opts);
}

}  // namespace regspec
