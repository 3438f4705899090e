#include "twopoint/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace twopoint {

double prokhorov_bound(double epsilon, double confidence_complement)
{
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw std::invalid_argument("epsilon must be positive and finite");
    if (!(confidence_complement > 0.0 && confidence_complement < 1.0))
        throw std::invalid_argument("confidence complement must lie in (0, 1)");
    return (1.0 + epsilon) / (epsilon * epsilon) * -std::log(confidence_complement) +
           1.0 / epsilon;
}

std::uint64_t prokhorov_min_trials(double epsilon, double confidence_complement)
{
    const double b = prokhorov_bound(epsilon, confidence_complement);
    if (b >= 0x1p63)
        throw std::invalid_argument("trial count out of range");
    return std::uint64_t(std::floor(b)) + 1;
}

double comparison_threshold_epsilon(const Prospect& random, double sure_amount)
{
    if (random.a_q() != 0.0)
        throw std::invalid_argument("the random prospect must have a zero lower outcome");
    if (!(sure_amount > 0.0 && sure_amount < random.a_p()))
        throw std::invalid_argument("sure amount must lie strictly between 0 and a_p");
    return std::fabs(sure_amount / random.a_p() - random.p());
}

}  // namespace twopoint
