#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "twopoint/numeric.hpp"

namespace twopoint {

// Two-point random payoff: a_p with probability p, a_q with probability 1 - p.
// Stored with a_q <= a_p; the constructor swaps outcomes (and p -> 1 - p) otherwise.
class Prospect {
public:
    Prospect(double a_p, double a_q, double p);

    double a_p() const { return a_p_; }
    double a_q() const { return a_q_; }
    double p() const { return p_; }
    double q() const { return 1.0 - p_; }
    double spread() const { return a_p_ - a_q_; }

    // Deterministic because of equal outcomes or a degenerate probability.
    bool is_constant(Tolerance tol = {}) const;
    // Only meaningful when is_constant().
    double constant_value(Tolerance tol = {}) const;

    // -xi: outcomes negated and swapped, p -> 1 - p.
    Prospect reflected() const { return Prospect(-a_q_, -a_p_, 1.0 - p_); }

    friend bool operator==(const Prospect&, const Prospect&) = default;

private:
    double a_p_;
    double a_q_;
    double p_;
};

struct MomentSet {
    double mean = 0.0;
    double variance = 0.0;
    double mu3 = 0.0;
    double mu4 = 0.0;
    std::optional<double> skewness;
    std::optional<double> excess_kurtosis;
    double entropy_bits = 0.0;

    double stdev() const;
};

struct RawMoments {
    std::array<double, 5> alpha{1.0, 0.0, 0.0, 0.0, 0.0};
};

MomentSet two_point_moments(const Prospect& prospect);

// Moments of the mean of n independent copies. Throws std::invalid_argument for n == 0.
MomentSet sample_mean_moments(const Prospect& prospect, std::uint64_t n);

// floor(frequency * duration); throws ZeroTrials when that is 0.
std::uint64_t trials_from_time(double frequency, double duration);

RawMoments raw_moments(const Prospect& prospect);

// mu_0..mu_4 from alpha_0..alpha_4.
std::array<double, 5> central_from_raw(const RawMoments& raw);

}  // namespace twopoint
