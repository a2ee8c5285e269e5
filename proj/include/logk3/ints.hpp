#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace logk3 {

// Every quantity in the calculator is an exact integer or exact rational.
// Definiteness, rank and kernel answers are certificates, so there is no
// floating-point mode anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;

inline std::string to_string(const Int& x) { return x.str(); }

} // namespace logk3
