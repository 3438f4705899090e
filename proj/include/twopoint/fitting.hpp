#pragma once

#include <optional>
#include <span>
#include <vector>

#include "twopoint/lottery.hpp"
#include "twopoint/numeric.hpp"

namespace twopoint {

struct FixedParams {
    std::optional<double> j0;
    std::optional<double> j_max;  // ignored for the exponential family
};

struct JackpotFit {
    JackpotModel model;
    double sse;
    std::vector<double> residuals;  // observed - fitted
};

double jackpot_sse(const JackpotModel& model, std::span<const JackpotPoint> points);

// Least squares over k (and j0 / j_max when not fixed), t0 = 0. Deterministic:
// a fixed log-spaced grid, then coordinate-wise golden-section refinement.
JackpotFit fit_jackpot_curve(std::span<const JackpotPoint> points, GrowthFamily family,
                             const FixedParams& fixed = {}, Exec exec = Exec::Parallel);

// The grid stage alone; exposed for the benchmark and the serial/parallel comparison.
struct GridResult {
    std::vector<double> sse;  // one entry per candidate, row-major over (k, j0, j_max)
    std::size_t best;
    JackpotModel best_model;
};
GridResult jackpot_grid(std::span<const JackpotPoint> points, GrowthFamily family,
                        const FixedParams& fixed, Exec exec);

enum class Orientation { Profit, Loss };

struct FractionPoint {
    double sigma;
    double f;
};

// Profit: F = K / (K + sigma^k). Loss: F = sigma^m / (M + sigma^m).
struct PowerLawFit {
    Orientation orientation;
    double scale;     // K or M
    double exponent;  // k or m
};

// Exact through two points, least squares in log-log space for more.
PowerLawFit fit_fraction_power_law(std::span<const FractionPoint> points, Orientation orientation);
double power_law_fraction(const PowerLawFit& fit, double sigma);

}  // namespace twopoint
