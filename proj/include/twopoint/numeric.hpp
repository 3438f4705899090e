#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace twopoint {

struct Tolerance {
    double rel = 1e-9;
    double abs = 1e-12;
};

inline bool nearly_equal(double a, double b, Tolerance tol = {})
{
    const double diff = std::fabs(a - b);
    if (diff <= tol.abs)
        return true;
    return diff <= tol.rel * std::fmax(std::fabs(a), std::fabs(b));
}

// Compensated (Neumaier) summation. Result depends only on the order of add()
// calls, never on thread scheduling.
class NeumaierSum {
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs)
{
    NeumaierSum s;
    for (double x : xs)
        s.add(x);
    return s.value();
}

// ln C(n, k) via log-gamma; exact enough for probabilities, not for odds.
inline double log_choose(double n, double k)
{
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// C(n, k) by the multiplicative recurrence; exact while the result fits in 2^53.
double choose(std::uint64_t n, std::uint64_t k);

// log P(K = k) for K ~ Binomial(n, p), 0 < p < 1.
inline double binomial_log_pmf(std::uint64_t n, std::uint64_t k, double p)
{
    return log_choose(double(n), double(k)) + double(k) * std::log(p) +
           double(n - k) * std::log1p(-p);
}

enum class Exec { Serial, Parallel };

// "%.17g": round-trips every finite double.
std::string format_number(double x);
// Whole-string parse; throws std::invalid_argument on trailing junk or empty input.
double parse_number(std::string_view text);

}  // namespace twopoint
