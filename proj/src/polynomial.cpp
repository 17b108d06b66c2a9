#include "regspec/polynomial.hpp"

#include <sstream>

namespace regspec {

const Rational PolyInD::kZero(0);

PolyInD::PolyInD(Rational constant) {
    if (constant != 0) {
        coeffs_.push_back(std::move(constant));
    }
}

PolyInD::PolyInD(std::vector<Rational> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    normalize();
}

PolyInD PolyInD::from_roots(std::span<const int> roots) {
    PolyInD out(Rational(1));
    for (int root : roots) {
        // multiply by (d - root) in place
        auto& c = out.coeffs_;
        c.push_back(0);
        for (std::size_t i = c.size(); i-- > 0;) {
            Rational v = (i > 0) ? c[i - 1] : Rational(0);
            v -= Rational(root) * c[i];
            c[i] = std::move(v);
        }
        out.normalize();
    }
    return out;
}

const Rational& PolyInD::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) {
        return kZero;
    }
    return coeffs_[static_cast<std::size_t>(power)];
}

Rational PolyInD::eval(const Rational& d) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * d + coeffs_[i];
    }
    return acc;
}

PolyInD& PolyInD::operator+=(const PolyInD& other) {
    if (coeffs_.size() < other.coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    normalize();
    return *this;
}

PolyInD& PolyInD::operator-=(const PolyInD& other) {
    if (coeffs_.size() < other.coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    normalize();
    return *this;
}

PolyInD& PolyInD::operator*=(const PolyInD& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

PolyInD& PolyInD::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

std::string PolyInD::str(std::string_view var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) {
                out << "-";
            }
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (i == 0 || mag != 1) {
            out << rational_str(mag);
            if (i > 0) {
                out << "*";
            }
        }
        if (i >= 1) {
            out << var;
            if (i >= 2) {
                out << "^" << i;
            }
        }
    }
    return out.str();
}

void PolyInD::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

}  // namespace regspec
