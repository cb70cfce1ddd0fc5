#pragma once

// Exact arithmetic used everywhere: arbitrary-precision integers for the
// counting sequences and rationals for all geometry. No floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace ck {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) {
    return v.str();
}

// "p/q" with the slash omitted for integers; cpp_rational keeps values
// normalized (gcd 1, positive denominator), so the output is canonical.
inline std::string to_string(const Rat& v) {
    std::ostringstream os;
    os << numerator(v);
    if (denominator(v) != 1) os << '/' << denominator(v);
    return os.str();
}

inline Int int_from_string(const std::string& s) {
    return Int(s);
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rat(num, den);
}

}  // namespace ck
