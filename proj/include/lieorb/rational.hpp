#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace lieorb {

using Rational = boost::rational<std::int64_t>;

// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

}  // namespace lieorb
