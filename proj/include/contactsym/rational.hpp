#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <string>

#include "contactsym/errors.hpp"

namespace contactsym {

/// Exact rational scalar over arbitrary-precision integers. Stored in
/// lowest terms with positive denominator; nothing is ever rounded.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rational(long long num, long long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p" or "p/q" with an optional leading sign. Rejects empty
/// numerators/denominators and q = 0.
inline Rational parse_rational(const std::string& text) {
    const auto bad = [&](const char* why) {
        throw DomainError(std::string("invalid rational '") + text + "': " + why);
    };
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) bad("missing numerator digits");
    BigInt num(text.substr(num_begin, i - num_begin));
    BigInt den(1);
    if (i < text.size()) {
        if (text[i] != '/') bad("unexpected character");
        ++i;
        std::size_t den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin) bad("missing denominator digits");
        if (i != text.size()) bad("trailing characters");
        den = BigInt(text.substr(den_begin, i - den_begin));
        if (den == 0) bad("zero denominator");
    }
    if (neg) num = -num;
    return Rational(num, den);
}

}  // namespace contactsym
