#pragma once

// Slow, independent reference computations used only by tests.

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

struct Moments {
    long double mean = 0, variance = 0, mu3 = 0, mu4 = 0, entropy_bits = 0;
};

// Enumerates all 2^n outcome sequences of a two-point prospect and returns the
// moments and entropy of the distribution of their mean.
inline Moments enumerate_sample_mean(double ap, double aq, double p, int n)
{
    std::map<long double, long double> dist;
    const long double lp = p, lq = 1.0L - p;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        long double sum = 0, prob = 1;
        for (int i = 0; i < n; ++i) {
            const bool hit = (mask >> i) & 1u;
            sum += hit ? ap : aq;
            prob *= hit ? lp : lq;
        }
        dist[sum / n] += prob;
    }
    Moments m;
    for (auto [x, w] : dist)
        m.mean += w * x;
    for (auto [x, w] : dist) {
        const long double d = x - m.mean;
        m.variance += w * d * d;
        m.mu3 += w * d * d * d;
        m.mu4 += w * d * d * d * d;
        if (w > 0)
            m.entropy_bits -= w * std::log2(w);
    }
    return m;
}

inline long double binomial_pmf(std::uint64_t n, std::uint64_t k, long double p)
{
    const long double lc = std::lgamma((long double)n + 1) - std::lgamma((long double)k + 1) -
                           std::lgamma((long double)(n - k) + 1);
    return std::exp(lc + k * std::log(p) + (n - k) * std::log1p(-p));
}

inline long double binomial_entropy(long double p, std::uint64_t n)
{
    long double h = 0;
    for (std::uint64_t k = 0; k <= n; ++k) {
        const long double w = binomial_pmf(n, k, p);
        if (w > 0)
            h -= w * std::log2(w);
    }
    return h;
}

// P(|K/n - p| <= eps) for K ~ Binomial(n, p).
inline long double binomial_coverage(std::uint64_t n, long double p, long double eps)
{
    long double s = 0;
    for (std::uint64_t k = 0; k <= n; ++k)
        // Same double-precision test as the simulation, so boundary counts agree.
        if (std::fabs(double(k) / double(n) - double(p)) <= double(eps))
            s += binomial_pmf(n, k, p);
    return s;
}

// Exact binomial coefficient for small arguments.
inline unsigned long long choose(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    unsigned long long r = 1;
    for (unsigned i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Probability that `picked` chosen numbers match exactly `matched` of `drawn`
// balls out of `total`, by enumerating every draw as a bitmask (total <= 20).
inline double brute_force_match(unsigned total, unsigned picked, unsigned matched)
{
    const std::uint32_t mine = (1u << picked) - 1;  // the ticket is {0..picked-1}
    unsigned long long hits = 0, draws = 0;
    for (std::uint32_t d = 0; d < (1u << total); ++d) {
        if ((unsigned)__builtin_popcount(d) != picked)
            continue;
        ++draws;
        hits += (unsigned)__builtin_popcount(d & mine) == matched;
    }
    return double(hits) / double(draws);
}

// sum_{K>=1} P(K)/K / P(K>=1) for K ~ Binomial(m, p), summed directly.
inline long double split_direct(std::uint64_t m, long double p)
{
    long double num = 0, den = 0;
    for (std::uint64_t k = 1; k <= m; ++k) {
        const long double w = binomial_pmf(m, k, p);
        num += w / k;
        den += w;
        if (k > 50 && w < 1e-30L)
            break;
    }
    return num / den;
}

// Same for K ~ Poisson(lambda), by the plain series.
inline long double split_poisson(long double lambda)
{
    long double term = std::exp(-lambda), num = 0, den = 0;
    for (int k = 1; k < 2000; ++k) {
        term *= lambda / k;
        num += term / k;
        den += term;
        if (k > lambda + 50 && term < 1e-30L)
            break;
    }
    return num / den;
}

// Maximiser of f on [a, b] by golden-section search.
template <class F>
double golden_max(F f, double a, double b)
{
    const double r = (std::sqrt(5.0) - 1) / 2;
    for (int i = 0; i < 200; ++i) {
        const double c = b - r * (b - a), d = a + r * (b - a);
        if (f(c) > f(d))
            b = d;
        else
            a = c;
    }
    return (a + b) / 2;
}

}  // namespace oracle
