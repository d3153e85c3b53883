#include <utcochar/integer.hpp>

#include <limits>

namespace utcochar
{

Integer binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    Integer result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Integer factorial(long n)
{
    Integer result = 1;
    for (long i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

std::optional<std::int64_t> to_int64(const Integer &value)
{
    if (value < std::numeric_limits<std::int64_t>::min() || value > std::numeric_limits<std::int64_t>::max()) {
        return std::nullopt;
    }
    return static_cast<std::int64_t>(value);
}

} // namespace utcochar
