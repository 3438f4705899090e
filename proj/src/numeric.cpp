#include "twopoint/numeric.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace twopoint {

namespace {
__extension__ typedef unsigned __int128 u128;
}

double choose(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0.0;
    if (k > n - k)
        k = n - k;
    u128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n - k + i) must stay below 2^128
        if (r > u128(1) << 62)
            return std::exp(log_choose(double(n), double(k)));
        r = r * (n - k + i) / i;
    }
    return double(r);
}

std::string format_number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_number(std::string_view text)
{
    const std::string s(text);
    if (s.empty())
        throw std::invalid_argument("empty number");
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || (errno == ERANGE && std::isinf(v)))
        throw std::invalid_argument("not a number: '" + s + "'");
    return v;
}

}  // namespace twopoint
