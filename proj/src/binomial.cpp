#include "hgar/binomial.hpp"

#include <stdexcept>

namespace hgar {

std::uint64_t binom(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // acc * (n - k + i) is divisible by i at every step
        acc = acc * (n - k + i) / i;
        if (acc > UINT64_MAX)
            throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

BigInt binom_big(long long n, long long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt acc = 1;
    for (long long i = 1; i <= k; ++i)
        acc = acc * (n - k + i) / i;
    return acc;
}

} // namespace hgar
