#pragma once

#include <functional>
#include <vector>

#include "twopoint/prospect.hpp"

namespace twopoint {

struct GeometricLadder {
    double ratio;
    std::vector<double> values;  // descending, strictly inside (low, high)
};

// values[i-1] = high * ratio^-i, ratio = (high/low)^(1/(count+1)).
// Both endpoints must be non-zero with the same sign (NonPositiveEndpoint otherwise).
GeometricLadder geometric_ladder(double high, double low, int interior_count = 7);

struct LinearLadder {
    double lower;
    double upper;
    std::vector<double> values;  // descending, equally spaced strictly inside (lower, upper)
};

// Bracket widened by 25% on both sides of (highest_rejected, lowest_accepted).
LinearLadder refine_linear_ladder(double lowest_accepted, double highest_rejected,
                                  int interior_count = 7);

// true: the respondent takes the sure amount instead of the prospect.
using Respondent = std::function<bool(double sure_amount)>;

struct Answer {
    double amount;
    bool accepted;
};

struct Elicitation {
    GeometricLadder first;
    LinearLadder second;
    std::vector<Answer> answers;
    double lowest_accepted;
    double highest_rejected;
    double certainty_equivalent;
};

// Two-stage ladder; throws InconsistentResponses when some accepted amount is
// not above every rejected one.
Elicitation elicit(const Prospect& prospect, const Respondent& respondent);

inline double certainty_equivalent(const Prospect& prospect, const Respondent& respondent)
{
    return elicit(prospect, respondent).certainty_equivalent;
}

}  // namespace twopoint
