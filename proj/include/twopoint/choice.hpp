#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "twopoint/combinations.hpp"
#include "twopoint/numeric.hpp"
#include "twopoint/prospect.hpp"

namespace twopoint {

// Moments and support of eta = mean1 - mean2 for independent sample means.
struct DifferenceStats {
    double e = 0.0;
    double variance = 0.0;
    double mu3 = 0.0;
    double mu4 = 0.0;
    std::optional<double> skewness;
    std::optional<double> excess_kurtosis;
    double eta_min = 0.0;
    double eta_max = 0.0;
    double entropy_bits = 0.0;

    double stdev() const;
};

DifferenceStats difference_stats(const Prospect& p1, std::uint64_t n1, const Prospect& p2,
                                 std::uint64_t n2);

struct EtaPoint {
    double value;
    double probability;
};

// (ap1-ap2, p1 p2), (ap1-aq2, p1 q2), (aq1-ap2, q1 p2), (aq1-aq2, q1 q2).
std::array<EtaPoint, 4> eta_support_single_trial(const Prospect& p1, const Prospect& p2);

// f1 in [0, 1], or no rational answer.
class FractionPrediction {
public:
    static FractionPrediction determined(double f1);
    static FractionPrediction undefined() { return FractionPrediction(); }

    bool is_determined() const { return f1_.has_value(); }
    double f1() const;
    double f2() const { return 1.0 - f1(); }
    const std::optional<double>& value() const { return f1_; }

    friend bool operator==(const FractionPrediction&, const FractionPrediction&) = default;

private:
    std::optional<double> f1_;
};

struct DeviationParams {
    double a = 0.0;
    double b = 0.0;
};

struct DeviationBounds {
    double a_max;
    double b_max;
};

// 1 if E1 > E2, 0 if E1 < E2, undefined when the means coincide.
FractionPrediction limit_fraction(const Prospect& p1, const Prospect& p2, Tolerance tol = {});

// Throws ZeroVariance when D(eta) == 0.
DeviationBounds deviation_bounds(const Prospect& p1, std::uint64_t n1, const Prospect& p2,
                                 std::uint64_t n2);

// Ratio hypothesis: f1 = max(E + a s, 0) / (max(-E + b s, 0) + max(E + a s, 0)).
// (a, b) must respect deviation_bounds when D(eta) > 0; they are ignored when D(eta) == 0.
FractionPrediction predict_fractions(const Prospect& p1, std::uint64_t n1, const Prospect& p2,
                                     std::uint64_t n2, DeviationParams params, Tolerance tol = {});

// Same formula on precomputed statistics, without the bound checks.
FractionPrediction predict_from_stats(const DifferenceStats& stats, DeviationParams params);

// b making predict_from_stats(stats, {a, b}) equal to f1.
double b_from_a(const DifferenceStats& stats, double f1, double a);

enum class Verdict { Determined, Undefined, RequiresModel };

struct Classification {
    CanonicalCombination combination;
    int interval_row = 0;
    int probability_row = 0;
    std::optional<int> decision_row;
    // The pattern is the mirror image of a tabulated one; decision_row then
    // refers to the swapped pair and f1 = 1 - tabulated value.
    bool swapped = false;
    Verdict verdict = Verdict::RequiresModel;
    std::optional<double> f1;
};

int probability_row_of(double p1, double p2, Tolerance tol = {});
CanonicalCombination combination_of(const Prospect& p1, const Prospect& p2, Tolerance tol = {});
Classification classify_pair(const Prospect& p1, const Prospect& p2, Tolerance tol = {});

enum class Anchor { Lower, Upper };

struct DesignedPair {
    Prospect random;
    Prospect constant;
};

// Random prospect (n trials) against a constant whose difference has mean target_e,
// variance target_d and skewness gamma1. `anchor` fixes a_q of the random prospect
// (Anchor::Lower) or its a_p (Anchor::Upper).
DesignedPair design_pair_with_skewness(double target_e, double target_d, double gamma1,
                                       std::uint64_t n, double anchor,
                                       Anchor side = Anchor::Lower);

// Closed-form bounds of the designed family; a_max * b_max == n.
DeviationBounds designed_bounds(double gamma1, std::uint64_t n);

struct GammaPoint {
    double gamma1;
    double a_max;
    double b_max;
    FractionPrediction f1;
};

// a = a_max / const_a, b = b_max / const_b along a skewness grid.
std::vector<GammaPoint> f1_of_gamma(double target_e, double target_d, std::uint64_t n,
                                    double const_a, double const_b,
                                    std::span<const double> gamma_grid);

}  // namespace twopoint
