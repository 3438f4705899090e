#include "twopoint/elicitation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "twopoint/errors.hpp"

namespace twopoint {

namespace {

constexpr double kWiden = 1.25;

void check_count(int n)
{
    if (n < 1)
        throw std::invalid_argument("interior count must be at least 1");
}

}  // namespace

GeometricLadder geometric_ladder(double high, double low, int interior_count)
{
    check_count(interior_count);
    if (!std::isfinite(high) || !std::isfinite(low))
        throw std::invalid_argument("ladder endpoints must be finite");
    if (high == 0.0 || low == 0.0 || std::signbit(high) != std::signbit(low))
        throw NonPositiveEndpoint("ladder endpoints must be non-zero and share a sign");
    if (high < low)
        throw std::invalid_argument("high endpoint below low endpoint");

    GeometricLadder g;
    g.ratio = std::pow(high / low, 1.0 / (interior_count + 1));
    g.values.reserve(interior_count);
    for (int i = 1; i <= interior_count; ++i)
        g.values.push_back(high * std::pow(g.ratio, -i));
    return g;
}

LinearLadder refine_linear_ladder(double lowest_accepted, double highest_rejected,
                                  int interior_count)
{
    check_count(interior_count);
    if (!std::isfinite(lowest_accepted) || !std::isfinite(highest_rejected))
        throw std::invalid_argument("ladder endpoints must be finite");
    if (!(lowest_accepted > highest_rejected))
        throw std::invalid_argument("lowest accepted amount must exceed highest rejected");

    auto raise = [](double x) { return x >= 0.0 ? x * kWiden : x / kWiden; };
    auto lower = [](double x) { return x >= 0.0 ? x / kWiden : x * kWiden; };

    LinearLadder l;
    l.upper = raise(lowest_accepted);
    l.lower = lower(highest_rejected);
    const double step = (l.upper - l.lower) / (interior_count + 1);
    l.values.reserve(interior_count);
    for (int i = 1; i <= interior_count; ++i)
        l.values.push_back(l.upper - i * step);
    return l;
}

Elicitation elicit(const Prospect& prospect, const Respondent& respondent)
{
    Elicitation e{};
    e.first = geometric_ladder(prospect.a_p(), prospect.a_q());

    const double inf = std::numeric_limits<double>::infinity();
    double acc = inf, rej = -inf;  // over every answer, for the consistency check
    double acc2 = inf, rej2 = -inf;  // second stage only
    auto ask = [&](double amount, bool second) {
        const bool yes = respondent(amount);
        e.answers.push_back({amount, yes});
        if (yes) {
            acc = std::min(acc, amount);
            if (second)
                acc2 = std::min(acc2, amount);
        } else {
            rej = std::max(rej, amount);
            if (second)
                rej2 = std::max(rej2, amount);
        }
        if (!(acc > rej))
            throw InconsistentResponses("an accepted amount lies at or below a rejected one");
    };
    for (double v : e.first.values)
        ask(v, false);

    e.second = refine_linear_ladder(acc == inf ? prospect.a_p() : acc,
                                    rej == -inf ? prospect.a_q() : rej);
    for (double v : e.second.values)
        ask(v, true);

    e.lowest_accepted = acc2 == inf ? e.second.upper : acc2;
    e.highest_rejected = rej2 == -inf ? e.second.lower : rej2;
    e.certainty_equivalent = 0.5 * (e.lowest_accepted + e.highest_rejected);
    return e;
}

}  // namespace twopoint
