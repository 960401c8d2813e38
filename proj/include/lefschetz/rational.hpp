#ifndef LEFSCHETZ_RATIONAL_HPP
#define LEFSCHETZ_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "lefschetz/errors.hpp"

namespace lefschetz {

// Exact scalars. cpp_rational keeps values in lowest terms with positive
// denominator, which is exactly the normal form the rest of the code assumes.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& r) { return numerator(r) == 0; }

inline std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// Accepts "p", "-p" or "p/q" with q > 0 after normalization.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw UsageError("empty rational literal");
    auto slash = text.find('/');
    Int num, den = 1;
    try {
        if (slash == std::string::npos) {
            num = Int(text);
        } else {
            num = Int(text.substr(0, slash));
            den = Int(text.substr(slash + 1));
        }
    } catch (const std::exception&) {
        throw UsageError("malformed rational '" + text + "'");
    }
    if (den == 0) throw UsageError("zero denominator in '" + text + "'");
    return Rational(num, den);
}

}  // namespace lefschetz

#endif
