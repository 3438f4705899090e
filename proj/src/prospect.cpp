#include "twopoint/prospect.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "twopoint/entropy.hpp"
#include "twopoint/errors.hpp"

namespace twopoint {

Prospect::Prospect(double a_p, double a_q, double p) : a_p_(a_p), a_q_(a_q), p_(p)
{
    if (!std::isfinite(a_p) || !std::isfinite(a_q))
        throw std::invalid_argument("prospect outcomes must be finite");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("probability must lie in [0, 1]");
    if (a_q_ > a_p_) {
        std::swap(a_p_, a_q_);
        p_ = 1.0 - p_;
    }
}

bool Prospect::is_constant(Tolerance tol) const
{
    return p_ <= tol.abs || p_ >= 1.0 - tol.abs || nearly_equal(a_p_, a_q_, tol);
}

double Prospect::constant_value(Tolerance tol) const
{
    if (p_ <= tol.abs)
        return a_q_;
    return a_p_;
}

double MomentSet::stdev() const { return std::sqrt(variance); }

MomentSet two_point_moments(const Prospect& x)
{
    const double d = x.spread();
    const double p = x.p();
    const double q = x.q();
    const double pq = p * q;
    const double d2 = d * d;

    MomentSet m;
    m.mean = x.a_p() * p + x.a_q() * q;
    m.variance = d2 * pq;
    m.mu3 = d2 * d * pq * (q - p);
    m.mu4 = d2 * d2 * pq * (1.0 - 3.0 * pq);
    if (m.variance > 0.0) {
        m.skewness = (q - p) / std::sqrt(pq);
        m.excess_kurtosis = (1.0 - 6.0 * pq) / pq;
    }
    m.entropy_bits = two_point_entropy(p);
    return m;
}

MomentSet sample_mean_moments(const Prospect& x, std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("number of trials must be at least 1");
    const double dn = double(n);
    const double d = x.spread();
    const double p = x.p();
    const double pq = p * x.q();
    const double d2 = d * d;

    MomentSet single = two_point_moments(x);
    MomentSet m;
    m.mean = single.mean;
    m.variance = single.variance / dn;
    m.mu3 = single.mu3 / (dn * dn);
    m.mu4 = d2 * d2 * pq * (1.0 + 3.0 * (dn - 2.0) * pq) / (dn * dn * dn);
    if (single.skewness)
        m.skewness = *single.skewness / std::sqrt(dn);
    if (single.excess_kurtosis)
        m.excess_kurtosis = *single.excess_kurtosis / dn;
    m.entropy_bits = binomial_entropy_exact(p, n);
    return m;
}

std::uint64_t trials_from_time(double frequency, double duration)
{
    if (!(frequency >= 0.0) || !(duration >= 0.0) || !std::isfinite(frequency * duration))
        throw std::invalid_argument("frequency and duration must be finite and non-negative");
    const double n = std::floor(frequency * duration);
    if (n < 1.0)
        throw ZeroTrials();
    return static_cast<std::uint64_t>(n);
}

RawMoments raw_moments(const Prospect& x)
{
    RawMoments r;
    double ap = 1.0, aq = 1.0;
    for (int k = 1; k <= 4; ++k) {
        ap *= x.a_p();
        aq *= x.a_q();
        r.alpha[k] = ap * x.p() + aq * x.q();
    }
    return r;
}

std::array<double, 5> central_from_raw(const RawMoments& raw)
{
    const auto& a = raw.alpha;
    if (a[0] != 1.0)
        throw std::invalid_argument("alpha_0 must equal 1");
    const double a1 = a[1], a1_2 = a1 * a1;
    return {
        1.0,
        0.0,
        a[2] - a1_2,
        a[3] - 3.0 * a1 * a[2] + 2.0 * a1_2 * a1,
        a[4] - 4.0 * a1 * a[3] + 6.0 * a1_2 * a[2] - 3.0 * a1_2 * a1_2,
    };
}

}  // namespace twopoint
