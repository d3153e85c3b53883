#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace utcochar
{

// Exact signed integer used for every coefficient and multiplicity.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k); zero when k < 0 or k > n, and for n < 0.
Integer binomial(long n, long k);

Integer factorial(long n);

// Value as int64 when it fits.
std::optional<std::int64_t> to_int64(const Integer &value);

} // namespace utcochar
