#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace gradedk {

// Exact signed integer of unbounded magnitude.
using Integer = boost::multiprecision::cpp_int;

std::string to_string(const Integer& value);

// Parses an optionally signed decimal literal. Throws std::invalid_argument.
Integer parse_integer(std::string_view text);

Integer abs(const Integer& value);

// Nonnegative gcd; gcd(0, 0) == 0.
Integer gcd(const Integer& a, const Integer& b);

}  // namespace gradedk
