#pragma once

#include <cstdint>
#include <span>

namespace twopoint {

// All entropies in bits. 0 * log2(0) is taken as 0.

double two_point_entropy(double p);

// Entropy of an arbitrary finite schema; probabilities must sum to 1.
double schema_entropy(std::span<const double> probabilities);

// Exact entropy of Binomial(n, p) (shared by the sample sum and sample mean).
double binomial_entropy_exact(double p, std::uint64_t n);

// Stirling-based approximation without large factorials. Needs 0 < p < 1, n >= 4.
double binomial_entropy_stirling(double p, std::uint64_t n);

// 0.5 * log2(2 pi e variance); negative for small variances.
double normal_differential_entropy(double variance);

}  // namespace twopoint
