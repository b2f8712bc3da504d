#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace adnil {

/// Signed arbitrary-precision integer. Every count in the library is carried
/// in this type, so nothing overflows regardless of rank.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace adnil
