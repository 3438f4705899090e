#include "twopoint/choice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "twopoint/entropy.hpp"
#include "twopoint/errors.hpp"

namespace twopoint {

double DifferenceStats::stdev() const { return std::sqrt(variance); }

namespace {

struct Central {
    double mean, variance, mu3, mu4;
};

Central mean_central_moments(const Prospect& x, std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("number of trials must be at least 1");
    const double dn = double(n);
    const double d = x.spread();
    const double pq = x.p() * x.q();
    const double d2 = d * d;
    return {
        x.a_p() * x.p() + x.a_q() * x.q(),
        d2 * pq / dn,
        d2 * d * pq * (x.q() - x.p()) / (dn * dn),
        d2 * d2 * pq * (1.0 + 3.0 * (dn - 2.0) * pq) / (dn * dn * dn),
    };
}

double pair_entropy(const Prospect& p1, std::uint64_t n1, const Prospect& p2, std::uint64_t n2)
{
    if (n1 == 1 && n2 == 1) {
        const auto support = eta_support_single_trial(p1, p2);
        const std::array<double, 4> probs{support[0].probability, support[1].probability,
                                          support[2].probability, support[3].probability};
        return schema_entropy(probs);
    }
    return binomial_entropy_exact(p1.p(), n1) + binomial_entropy_exact(p2.p(), n2);
}

bool same_prospect(const Prospect& a, const Prospect& b, Tolerance tol)
{
    return nearly_equal(a.a_p(), b.a_p(), tol) && nearly_equal(a.a_q(), b.a_q(), tol) &&
           nearly_equal(a.p(), b.p(), tol);
}

FractionPrediction compare_constants(double c1, double c2, Tolerance tol)
{
    if (nearly_equal(c1, c2, tol))
        return FractionPrediction::undefined();
    return FractionPrediction::determined(c1 > c2 ? 1.0 : 0.0);
}

void set_from_prediction(Classification& c, const FractionPrediction& f)
{
    c.verdict = f.is_determined() ? Verdict::Determined : Verdict::Undefined;
    c.f1 = f.value();
}

void set_from_cell(Classification& c, CellVerdict cell, bool mirror)
{
    switch (cell) {
    case CellVerdict::Zero:
        c.verdict = Verdict::Determined;
        c.f1 = mirror ? 1.0 : 0.0;
        break;
    case CellVerdict::One:
        c.verdict = Verdict::Determined;
        c.f1 = mirror ? 0.0 : 1.0;
        break;
    case CellVerdict::Undefined:
        c.verdict = Verdict::Undefined;
        break;
    case CellVerdict::Open:
        c.verdict = Verdict::RequiresModel;
        break;
    }
}

bool tabulated_overlap(int row)
{
    return row == 5 || row == 6 || row == 7 || row == 8 || row == 13 || row == 14;
}

}  // namespace

DifferenceStats difference_stats(const Prospect& p1, std::uint64_t n1, const Prospect& p2,
                                 std::uint64_t n2)
{
    const Central m1 = mean_central_moments(p1, n1);
    const Central m2 = mean_central_moments(p2, n2);

    DifferenceStats s;
    s.e = m1.mean - m2.mean;
    s.variance = m1.variance + m2.variance;
    s.mu3 = m1.mu3 - m2.mu3;
    s.mu4 = m1.mu4 + 6.0 * m1.variance * m2.variance + m2.mu4;
    if (s.variance > 0.0) {
        s.skewness = s.mu3 / std::pow(s.variance, 1.5);
        s.excess_kurtosis = s.mu4 / (s.variance * s.variance) - 3.0;
    }
    s.eta_min = p1.a_q() - p2.a_p();
    s.eta_max = p1.a_p() - p2.a_q();
    s.entropy_bits = pair_entropy(p1, n1, p2, n2);
    return s;
}

std::array<EtaPoint, 4> eta_support_single_trial(const Prospect& p1, const Prospect& p2)
{
    return {{
        {p1.a_p() - p2.a_p(), p1.p() * p2.p()},
        {p1.a_p() - p2.a_q(), p1.p() * p2.q()},
        {p1.a_q() - p2.a_p(), p1.q() * p2.p()},
        {p1.a_q() - p2.a_q(), p1.q() * p2.q()},
    }};
}

FractionPrediction FractionPrediction::determined(double f1)
{
    if (!(f1 >= 0.0 && f1 <= 1.0))
        throw std::invalid_argument("fraction must lie in [0, 1]");
    FractionPrediction f;
    f.f1_ = f1;
    return f;
}

double FractionPrediction::f1() const
{
    if (!f1_)
        throw std::logic_error("fraction is undefined");
    return *f1_;
}

FractionPrediction limit_fraction(const Prospect& p1, const Prospect& p2, Tolerance tol)
{
    const double e1 = p1.a_p() * p1.p() + p1.a_q() * p1.q();
    const double e2 = p2.a_p() * p2.p() + p2.a_q() * p2.q();
    return compare_constants(e1, e2, tol);
}

DeviationBounds deviation_bounds(const Prospect& p1, std::uint64_t n1, const Prospect& p2,
                                 std::uint64_t n2)
{
    const DifferenceStats s = difference_stats(p1, n1, p2, n2);
    if (!(s.variance > 0.0))
        throw ZeroVariance();
    const double sigma = s.stdev();
    return {
        (p1.spread() * p1.q() + p2.spread() * p2.p()) / sigma,
        (p1.spread() * p1.p() + p2.spread() * p2.q()) / sigma,
    };
}

FractionPrediction predict_from_stats(const DifferenceStats& s, DeviationParams params)
{
    const double sigma = s.stdev();
    const double up = std::max(s.e + params.a * sigma, 0.0);
    const double down = std::max(-s.e + params.b * sigma, 0.0);
    if (up + down == 0.0)
        return FractionPrediction::undefined();
    return FractionPrediction::determined(up / (down + up));
}

FractionPrediction predict_fractions(const Prospect& p1, std::uint64_t n1, const Prospect& p2,
                                     std::uint64_t n2, DeviationParams params, Tolerance tol)
{
    if (!std::isfinite(params.a) || !std::isfinite(params.b))
        throw std::invalid_argument("deviation parameters must be finite");
    const DifferenceStats s = difference_stats(p1, n1, p2, n2);
    if (!(s.variance > 0.0))
        return limit_fraction(p1, p2, tol);
    if (n1 == n2 && same_prospect(p1, p2, tol))
        return FractionPrediction::undefined();

    const DeviationBounds bounds = deviation_bounds(p1, n1, p2, n2);
    auto within = [&](double v, double hi) {
        return v >= 0.0 && v <= hi + tol.rel * std::fabs(hi) + tol.abs;
    };
    if (!within(params.a, bounds.a_max) || !within(params.b, bounds.b_max))
        throw std::invalid_argument("deviation parameters outside [0, a_max] x [0, b_max]");
    return predict_from_stats(s, params);
}

double b_from_a(const DifferenceStats& s, double f1, double a)
{
    if (!(f1 > 0.0 && f1 < 1.0))
        throw std::invalid_argument("f1 must lie strictly between 0 and 1");
    if (!(s.variance > 0.0))
        throw ZeroVariance();
    if (!(a >= 0.0))
        throw std::invalid_argument("a must be non-negative");
    const double r = f1 / (1.0 - f1);
    return a / r + (s.e / s.stdev()) / f1;
}

int probability_row_of(double p1, double p2, Tolerance tol)
{
    enum Kind { Zero, Mid, One };
    auto kind = [&](double p) { return p <= tol.abs ? Zero : (p >= 1.0 - tol.abs ? One : Mid); };
    const Kind k1 = kind(p1), k2 = kind(p2);
    if (k1 == Zero)
        return k2 == Zero ? 1 : (k2 == Mid ? 2 : 3);
    if (k1 == One)
        return k2 == Zero ? 7 : (k2 == Mid ? 8 : 9);
    if (k2 == Zero)
        return 4;
    if (k2 == One)
        return 6;
    if (nearly_equal(p1, p2, tol))
        return 5;
    return p1 < p2 ? 10 : 11;
}

CanonicalCombination combination_of(const Prospect& p1, const Prospect& p2, Tolerance tol)
{
    struct Endpoint {
        double value;
        Symbol symbol;
    };
    std::array<Endpoint, 4> e{{
        {p1.a_q(), Symbol::Min1},
        {p1.a_p(), Symbol::Max1},
        {p2.a_q(), Symbol::Min2},
        {p2.a_p(), Symbol::Max2},
    }};
    std::sort(e.begin(), e.end(), [](const Endpoint& a, const Endpoint& b) {
        return a.value < b.value || (a.value == b.value && a.symbol < b.symbol);
    });
    std::array<Symbol, 4> ordering{};
    std::array<Relation, 3> relations{};
    for (int i = 0; i < 4; ++i)
        ordering[i] = e[i].symbol;
    for (int i = 0; i < 3; ++i)
        relations[i] = nearly_equal(e[i].value, e[i + 1].value, tol) ? Relation::Equal : Relation::Less;
    return canonicalize(ordering, relations);
}

Classification classify_pair(const Prospect& p1, const Prospect& p2, Tolerance tol)
{
    Classification c;
    c.combination = combination_of(p1, p2, tol);
    const auto row = interval_row_of(c.combination);
    if (!row)
        throw std::logic_error("endpoint pattern missing from the interval table");
    c.interval_row = *row;
    c.probability_row = probability_row_of(p1.p(), p2.p(), tol);
    const IntervalRow& info = interval_table()[c.interval_row - 1];

    const bool both_constant = p1.is_constant(tol) && p2.is_constant(tol);
    auto constants = [&] {
        return compare_constants(p1.constant_value(tol), p2.constant_value(tol), tol);
    };

    switch (info.cls) {
    case IntervalClass::Point:
        c.verdict = Verdict::Undefined;
        return c;
    case IntervalClass::Disjoint:
        set_from_prediction(c, FractionPrediction::determined(info.f1 == IntervalVerdict::One ? 1.0 : 0.0));
        return c;
    case IntervalClass::Adjacent:
        if (both_constant && !constants().is_determined()) {
            c.verdict = Verdict::Undefined;
            return c;
        }
        set_from_prediction(
            c, FractionPrediction::determined(info.f1 == IntervalVerdict::OneOrUndefined ? 1.0 : 0.0));
        return c;
    case IntervalClass::Overlapping:
        break;
    }

    if (tabulated_overlap(c.interval_row)) {
        c.decision_row = decision_row_of(c.interval_row, c.probability_row);
        if (c.decision_row)
            set_from_cell(c, decision_table()[*c.decision_row - 1].f1, false);
        else
            set_from_prediction(c, constants());
        return c;
    }

    const int mirrored_prob = probability_table()[c.probability_row - 1].swap_partner;
    const auto mirrored = decision_row_of(info.swap_partner, mirrored_prob);
    if (mirrored) {
        c.swapped = true;
        c.decision_row = mirrored;
        set_from_cell(c, decision_table()[*mirrored - 1].f1, true);
    } else {
        set_from_prediction(c, constants());
    }
    return c;
}

DesignedPair design_pair_with_skewness(double target_e, double target_d, double gamma1,
                                       std::uint64_t n, double anchor, Anchor side)
{
    if (!(target_d > 0.0) || !std::isfinite(target_d))
        throw std::invalid_argument("target variance must be positive");
    if (n == 0)
        throw std::invalid_argument("number of trials must be at least 1");
    if (!std::isfinite(target_e) || !std::isfinite(gamma1) || !std::isfinite(anchor))
        throw std::invalid_argument("design inputs must be finite");
    const double dn = double(n);
    const double w = 4.0 + dn * gamma1 * gamma1;
    const double p = 0.5 - 0.5 * gamma1 * std::sqrt(dn / w);
    const double spread = std::sqrt(target_d * dn * w);
    const double a_q = side == Anchor::Lower ? anchor : anchor - spread;
    const double a_p = a_q + spread;
    const double mean1 = a_q + spread * p;
    const double c = mean1 - target_e;
    return {Prospect(a_p, a_q, p), Prospect(c, c, 1.0)};
}

DeviationBounds designed_bounds(double gamma1, std::uint64_t n)
{
    const double dn = double(n);
    const double s = std::sqrt(4.0 + dn * gamma1 * gamma1);
    const double g = gamma1 * std::sqrt(dn);
    const double half = 0.5 * std::sqrt(dn);
    // Evaluate the non-cancelling factor and get the other from a_max * b_max = n.
    if (g >= 0.0) {
        const double a = half * (s + g);
        return {a, dn / a};
    }
    const double b = half * (s - g);
    return {dn / b, b};
}

std::vector<GammaPoint> f1_of_gamma(double target_e, double target_d, std::uint64_t n,
                                    double const_a, double const_b,
                                    std::span<const double> gamma_grid)
{
    if (!(const_a >= 1.0) || !(const_b >= 1.0))
        throw std::invalid_argument("const_a and const_b must be at least 1");
    std::vector<GammaPoint> out;
    out.reserve(gamma_grid.size());
    for (double g : gamma_grid) {
        const DesignedPair pair = design_pair_with_skewness(target_e, target_d, g, n, 0.0);
        const DifferenceStats s = difference_stats(pair.random, n, pair.constant, n);
        const DeviationBounds b = designed_bounds(g, n);
        out.push_back({g, b.a_max, b.b_max,
                       predict_from_stats(s, {b.a_max / const_a, b.b_max / const_b})});
    }
    return out;
}

}  // namespace twopoint
