#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace hgar {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// C(n, k) in 64-bit arithmetic. Throws std::overflow_error when the value does not fit.
std::uint64_t binom(std::uint64_t n, std::uint64_t k);

/// C(n, k) for arbitrary integers; zero when k < 0, n < 0 or k > n.
BigInt binom_big(long long n, long long k);

} // namespace hgar
