#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "twopoint/numeric.hpp"
#include "twopoint/prospect.hpp"

namespace twopoint {

inline constexpr std::uint64_t kMaxSimulatedTrials = 1'000'000'000;

// Standard errors of the empirical moments (delta method for the ratios).
struct MomentErrors {
    double mean = 0.0;
    double variance = 0.0;
    double mu3 = 0.0;
    double mu4 = 0.0;
    double skewness = 0.0;
    double excess_kurtosis = 0.0;
};

struct Simulation {
    MomentSet moments;  // entropy_bits: plug-in entropy of the observed means
    MomentErrors errors;
    std::vector<double> means;  // one per replication, in replication order
};

// Replication r draws from Philox stream r under `seed`; results do not depend on exec.
Simulation simulate_sample_means(const Prospect& prospect, std::uint64_t n,
                                 std::uint64_t replications, std::uint64_t seed,
                                 Exec exec = Exec::Parallel);

// Empirical moments of arbitrary samples (plug-in, divisor R).
Simulation summarize_samples(std::vector<double> samples);

// Fraction of replications with |successes / n - p| <= epsilon.
double empirical_coverage(const Prospect& prospect, std::uint64_t n, double epsilon,
                          std::uint64_t replications, std::uint64_t seed,
                          Exec exec = Exec::Parallel);

// One value per line, "%.17g".
void write_samples(std::ostream& out, const std::vector<double>& samples);

}  // namespace twopoint
