#pragma once

#include "regspec/rational.hpp"

#include <span>
#include <vector>

namespace regspec {

/// Dense univariate polynomial in the regularity d, exact rational coefficients.
/// Coefficients are stored in ascending power order with no trailing zeros;
/// the zero polynomial has an empty coefficient vector.
class PolyInD {
public:
    PolyInD() = default;
    explicit PolyInD(Rational constant);
    explicit PolyInD(std::vector<Rational> ascending_coeffs);

    /// prod_j (d - roots[j]); the empty product is the constant 1.
    static PolyInD from_roots(std::span<const int> roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Rational& coeff(int power) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& d) const;

    PolyInD& operator+=(const PolyInD& other);
    PolyInD& operator-=(const PolyInD& other);
    PolyInD& operator*=(const PolyInD& other);
    PolyInD& operator*=(const Rational& scalar);
    friend PolyInD operator+(PolyInD a, const PolyInD& b) { return a += b; }
    friend PolyInD operator-(PolyInD a, const PolyInD& b) { return a -= b; }
    friend PolyInD operator*(PolyInD a, const PolyInD& b) { return a *= b; }
    friend PolyInD operator*(PolyInD a, const Rational& s) { return a *= s; }
    bool operator==(const PolyInD&) const = default;

    /// Human-readable form like "2*d^2 - d" (zero polynomial prints "0").
    std::string str(std::string_view var = "d") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
    static const Rational kZero;
};

}  // namespace regspec
