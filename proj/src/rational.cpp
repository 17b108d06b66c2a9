#include "regspec/rational.hpp"

#include <cctype>

namespace regspec {

namespace {

// decimal digit parser; avoids BigInt's string constructor, which reads a
// leading zero as an octal prefix
BigInt parse_signed_digits(std::string_view text, std::string_view whole) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
    }
    BigInt value = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
        }
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        const BigInt num = parse_signed_digits(text.substr(0, slash), text);
        const BigInt den = parse_signed_digits(text.substr(slash + 1), text);
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
        return Rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        return Rational(parse_signed_digits(text, text));
    }
    // decimal: sign, integer part, fractional part
    const std::string digits =
        std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
    const std::size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0) {
        throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    BigInt den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) {
        den *= 10;
    }
    return Rational(parse_signed_digits(digits, text), den);
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt out = 1;
    for (unsigned i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
    }
    return out;
}

BigInt odd_double_factorial(unsigned k) {
    if (k % 2 != 0) {
        throw std::invalid_argument("odd_double_factorial expects even k");
    }
    BigInt out = 1;
    for (unsigned i = 3; i < k; i += 2) {
        out *= i;
    }
    return out;
}

BigInt integer_pow(const BigInt& base, unsigned exponent) {
    BigInt out = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        out *= base;
    }
    return out;
}

}  // namespace regspec
