#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "errors.hpp"

namespace homvec {

/// Arbitrary-precision integer; all homomorphism counts use this.
using BigCount = boost::multiprecision::mpz_int;

/// Exact rational, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw ValidationError("zero denominator");
    return Rational(BigCount(num), BigCount(den));
}

/// "p/q" or an integer literal, optional leading '-'.
inline Rational parse_rational(std::string_view text) {
    auto digits_ok = [](std::string_view s, std::size_t& bad) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start) {
            bad = start;
            return false;
        }
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                bad = i;
                return false;
            }
        }
        return true;
    };
    std::size_t bad = 0;
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!digits_ok(num, bad)) throw ParseError("malformed rational '" + std::string(text) + "'", bad);
    BigCount n{std::string(num[0] == '+' ? num.substr(1) : num)};
    if (slash == std::string_view::npos) return Rational(n);
    std::string_view den = text.substr(slash + 1);
    if (!digits_ok(den, bad) || den[0] == '-' || den[0] == '+')
        throw ParseError("malformed rational '" + std::string(text) + "'", slash + 1 + bad);
    BigCount d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
    return Rational(n, d);
}

/// "p/q", or the bare integer when the denominator is 1.
inline std::string format_rational(const Rational& r) {
    return r.str();
}

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

}  // namespace homvec
