#pragma once

#include <cstdint>

#include "twopoint/prospect.hpp"

namespace twopoint {

// (1 + eps) / eps^2 * ln(1 / eta) + 1 / eps.
double prokhorov_bound(double epsilon, double confidence_complement);

// Smallest integer strictly above prokhorov_bound.
std::uint64_t prokhorov_min_trials(double epsilon, double confidence_complement);

// |sure / a_p - p| for a prospect with a_q = 0 and a_p > sure > 0.
double comparison_threshold_epsilon(const Prospect& random, double sure_amount);

}  // namespace twopoint
