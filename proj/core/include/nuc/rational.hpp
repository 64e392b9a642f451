#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace nuc {

// All verdict-relevant arithmetic is exact. mpq_rational keeps values
// canonical (gcd-reduced, positive denominator) after every operation.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Canonical text form: "p/q" with q > 0 and gcd(p,q) = 1, or "p" when q == 1.
inline std::string to_canonical(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input or q == 0.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
}

}  // namespace nuc
