#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "pcoact/errors.hpp"

namespace pcoact {

// Exact rational arithmetic; cpp_rational keeps gcd-reduced canonical form
// with a positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p" or "p/q" with optional leading minus. Throws ParseError.
inline Rational parse_rational(const std::string& s) {
    auto bad = [&]() -> ParseError { return ParseError("bad rational literal: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    auto digits_ok = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t k = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) k = 1;
        if (k >= t.size()) return false;
        for (; k < t.size(); ++k)
            if (t[k] < '0' || t[k] > '9') return false;
        return true;
    };
    if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
    Integer n(num), d(den);
    if (d == 0) throw bad();
    return Rational(n, d);
}

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
inline std::string rational_str(const Rational& r) {
    Integer n = boost::multiprecision::numerator(r);
    Integer d = boost::multiprecision::denominator(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

} // namespace pcoact
