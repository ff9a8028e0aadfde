#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace maxmatch {

// Exact nonnegative count. Matching counts grow exponentially in the order
// of the graph, so nothing here ever goes through floating point.
using big_count = boost::multiprecision::cpp_int;

inline std::string to_decimal(const big_count& value) { return value.str(); }

}  // namespace maxmatch
