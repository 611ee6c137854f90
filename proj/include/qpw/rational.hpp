#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace qpw {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// "p" or "p/q", q > 0, reduced.
inline std::string to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_string(const std::string& s);

} // namespace qpw
