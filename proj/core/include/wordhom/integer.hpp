#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace wordhom {

/// Arbitrary-precision integer used for every coefficient and matrix entry.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& value) { return value.str(); }

inline Integer abs_value(const Integer& value) { return value < 0 ? Integer(-value) : value; }

inline bool is_unit(const Integer& value) { return value == 1 || value == -1; }

}  // namespace wordhom
