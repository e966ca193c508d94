#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kodag {

// All scalar arithmetic is exact: unbounded integers and reduced rationals.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

} // namespace kodag
