#include "twopoint/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "twopoint/numeric.hpp"

namespace twopoint {

namespace {

void check_probability(double p)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("probability must lie in [0, 1]");
}

double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

constexpr double kTinyTerm = 1e-300;

}  // namespace

double two_point_entropy(double p)
{
    check_probability(p);
    return -plogp(p) - plogp(1.0 - p);
}

double schema_entropy(std::span<const double> probabilities)
{
    NeumaierSum h, total;
    for (double p : probabilities) {
        check_probability(p);
        h.add(-plogp(p));
        total.add(p);
    }
    if (std::fabs(total.value() - 1.0) > 1e-9)
        throw std::invalid_argument("probabilities must sum to 1");
    return h.value();
}

double binomial_entropy_exact(double p, std::uint64_t n)
{
    check_probability(p);
    if (n == 0)
        throw std::invalid_argument("number of trials must be at least 1");
    if (p == 0.0 || p == 1.0)
        return 0.0;
    // The pmf is unimodal: walk outward from the mode until terms vanish.
    const std::uint64_t mode = std::min<std::uint64_t>(n, std::uint64_t(double(n + 1) * p));
    NeumaierSum h;
    auto term = [&](std::uint64_t k) {
        const double lp = binomial_log_pmf(n, k, p);
        const double pk = std::exp(lp);
        if (pk < kTinyTerm)
            return false;
        h.add(-pk * lp);
        return true;
    };
    for (std::uint64_t k = mode + 1; k <= n && term(k); ++k) {
    }
    for (std::uint64_t k = mode + 1; k-- > 0 && term(k);) {
    }
    return h.value() / std::numbers::ln2;
}

double binomial_entropy_stirling(double p, std::uint64_t n)
{
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("Stirling entropy needs 0 < p < 1");
    if (n < 4)
        throw std::invalid_argument("Stirling entropy needs n >= 4");
    const double dn = double(n);
    auto prob = [&](std::uint64_t k) { return std::exp(binomial_log_pmf(n, k, p)); };

    const double p0 = prob(0), p1 = prob(1), pn1 = prob(n - 1), pn = prob(n);
    const double log2n = std::log2(dn);
    const double rest = 1.0 - p0 - p1 - pn1 - pn;

    NeumaierSum inner;
    for (std::uint64_t k = 2; k + 2 <= n; ++k) {
        const double pk = prob(k);
        if (pk < kTinyTerm)
            continue;
        const double dk = double(k);
        inner.add(pk * ((dk + 0.5) * std::log2(dk) + (dn - dk + 0.5) * std::log2(dn - dk)));
    }
    return dn * two_point_entropy(p) - (p1 + pn1) * log2n -
           ((dn + 0.5) * log2n - 0.5 * std::log2(2.0 * std::numbers::pi)) * rest + inner.value();
}

double normal_differential_entropy(double variance)
{
    if (!(variance > 0.0) || !std::isfinite(variance))
        throw std::invalid_argument("variance must be positive and finite");
    return 0.5 * std::log2(2.0 * std::numbers::pi * std::numbers::e * variance);
}

}  // namespace twopoint
