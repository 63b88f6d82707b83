#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace arrowperm {

// Exact arbitrary-precision integer. Counts and sequence terms flow through
// this type at module boundaries; Bell/Schroeder-sized terms overflow 64 bits
// around n = 25, so fixed-width integers are only used inside hot loops where
// a bound is known.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace arrowperm
