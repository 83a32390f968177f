#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace totalmatch {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace totalmatch
