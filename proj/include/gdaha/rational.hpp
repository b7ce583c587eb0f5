#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace gdaha {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

/// Value of an integral rational as long long. Pre: is_integer(x) and in range.
inline long long to_integer(const Rational& x) {
    if (!is_integer(x)) throw std::domain_error("to_integer: value is not integral");
    return numerator(x).convert_to<long long>();
}

/// Parses "p" or "p/q" with an optional leading sign. Rejects anything else.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') { neg = (s[i] == '-'); ++i; }
    auto read_uint = [&](Integer& out) {
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("parse_rational: expected digits in '" + s + "'");
        out = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            out = out * 10 + (s[i] - '0');
            ++i;
        }
    };
    Integer num, den = 1;
    read_uint(num);
    if (i < s.size() && s[i] == '/') {
        ++i;
        read_uint(den);
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    }
    if (i != s.size()) throw std::invalid_argument("parse_rational: trailing junk in '" + s + "'");
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

inline std::string to_string(const Rational& x) { return x.str(); }

}  // namespace gdaha
