#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rscrit {

using Int = std::int64_t;
using IntVec = std::vector<Int>;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms, or "p" when q == 1.
std::string toString(const Rational& q);

// Accepts "p", "-p", "p/q". Throws Error(InvalidArgument) on anything else.
Rational parseRational(std::string_view s);

bool isInteger(const Rational& q);

// Only valid when isInteger(q) and the value fits.
Int toInt(const Rational& q);

// Half-integers are carried as twice their value.
Rational fromDoubled(Int doubled);
std::string doubledToString(Int doubled);

// Floor and ceiling of a/b for b > 0.
Int floorDiv(Int a, Int b);
Int ceilDiv(Int a, Int b);

}  // namespace rscrit
