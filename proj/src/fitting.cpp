#include "twopoint/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace twopoint {

namespace {

constexpr int kKGrid = 241;  // 1e-2 .. 1e3 per year
constexpr int kJGrid = 41;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> log_space(double lo, double hi, int n)
{
    std::vector<double> v(n);
    const double a = std::log(lo), b = std::log(hi);
    for (int i = 0; i < n; ++i)
        v[i] = std::exp(a + (b - a) * i / (n - 1));
    return v;
}

struct Axes {
    std::vector<double> k, j0, j_max;
};

Axes make_axes(std::span<const JackpotPoint> points, GrowthFamily family, const FixedParams& fixed)
{
    double lo = kInf, hi = 0.0;
    for (const auto& p : points) {
        lo = std::min(lo, p.j);
        hi = std::max(hi, p.j);
    }
    Axes ax;
    ax.k = log_space(1e-2, 1e3, kKGrid);
    ax.j0 = fixed.j0 ? std::vector<double>{*fixed.j0} : log_space(lo * 1e-2, hi, kJGrid);
    if (family == GrowthFamily::Exponential)
        ax.j_max = {0.0};
    else
        ax.j_max = fixed.j_max ? std::vector<double>{*fixed.j_max} : log_space(hi * 1.01, hi * 100.0, kJGrid);
    return ax;
}

double safe_sse(const JackpotModel& m, std::span<const JackpotPoint> points)
{
    if (m.family == GrowthFamily::Logistic && !(m.j_max > m.j0))
        return kInf;
    const double s = jackpot_sse(m, points);
    return std::isfinite(s) ? s : kInf;
}

void check_points(std::span<const JackpotPoint> points, std::size_t free_params)
{
    if (points.size() < std::max<std::size_t>(2, free_params + 1))
        throw std::invalid_argument("too few points for the number of free parameters");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i].t) || !(points[i].j > 0.0) || !std::isfinite(points[i].j))
            throw std::invalid_argument("points need finite t and positive jackpot");
        if (i && !(points[i].t > points[i - 1].t))
            throw std::invalid_argument("t must be strictly increasing");
    }
}

// Minimises f over [a, b]; returns the abscissa.
template <class F>
double golden(F f, double a, double b, double tol)
{
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - r * (b - a), d = a + r * (b - a);
    double fc = f(c), fd = f(d);
    while (std::fabs(b - a) > tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    return fc <= fd ? c : d;
}

}  // namespace

double jackpot_sse(const JackpotModel& model, std::span<const JackpotPoint> points)
{
    NeumaierSum s;
    for (const auto& p : points) {
        const double r = p.j - jackpot_value(model, p.t);
        s.add(r * r);
    }
    return s.value();
}

GridResult jackpot_grid(std::span<const JackpotPoint> points, GrowthFamily family,
                        const FixedParams& fixed, Exec exec)
{
    const Axes ax = make_axes(points, family, fixed);
    const std::size_t nk = ax.k.size(), n0 = ax.j0.size(), nm = ax.j_max.size();
    auto model_at = [&](std::size_t idx) {
        return JackpotModel{family, ax.j0[(idx / nm) % n0], ax.j_max[idx % nm], ax.k[idx / (nm * n0)], 0.0};
    };

    GridResult g;
    g.sse.resize(nk * n0 * nm);
    const auto n = static_cast<std::ptrdiff_t>(g.sse.size());
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i)
            g.sse[i] = safe_sse(model_at(std::size_t(i)), points);
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i)
            g.sse[i] = safe_sse(model_at(std::size_t(i)), points);
    }
    g.best = std::size_t(std::min_element(g.sse.begin(), g.sse.end()) - g.sse.begin());
    if (!std::isfinite(g.sse[g.best]))
        throw std::invalid_argument("no grid candidate gives a finite fit");
    g.best_model = model_at(g.best);
    return g;
}

JackpotFit fit_jackpot_curve(std::span<const JackpotPoint> points, GrowthFamily family,
                             const FixedParams& fixed, Exec exec)
{
    const bool free_j0 = !fixed.j0;
    const bool free_jmax = family == GrowthFamily::Logistic && !fixed.j_max;
    if (fixed.j0 && !(*fixed.j0 > 0.0))
        throw std::invalid_argument("fixed j0 must be positive");
    if (family == GrowthFamily::Logistic && fixed.j_max && fixed.j0 && !(*fixed.j_max > *fixed.j0))
        throw std::invalid_argument("fixed j_max must exceed j0");
    check_points(points, 1 + free_j0 + free_jmax);

    const GridResult grid = jackpot_grid(points, family, fixed, exec);
    JackpotModel m = grid.best_model;
    double best = grid.sse[grid.best];

    // Log-space half-widths of one grid step.
    const double k_step = std::log(1e3 / 1e-2) / (kKGrid - 1);
    const double j_step = std::log(1e2) / (kJGrid - 1);

    std::vector<std::pair<double JackpotModel::*, double>> coords{{&JackpotModel::k, k_step}};
    if (free_j0)
        coords.push_back({&JackpotModel::j0, j_step});
    if (free_jmax)
        coords.push_back({&JackpotModel::j_max, j_step});

    for (int cycle = 0; cycle < 500; ++cycle) {
        double moved = 0.0;
        for (auto [field, step] : coords) {
            const double before = m.*field;
            auto f = [&](double u) {
                JackpotModel trial = m;
                trial.*field = std::exp(u);
                return safe_sse(trial, points);
            };
            const double u0 = std::log(before);
            const double u = golden(f, u0 - step, u0 + step, 1e-13);
            const double s = f(u);
            if (s < best) {
                best = s;
                m.*field = std::exp(u);
                moved = std::max(moved, std::fabs(m.*field - before) / before);
            }
        }
        if (moved < 1e-10)
            break;
    }

    JackpotFit fit{m, best, {}};
    fit.residuals.reserve(points.size());
    for (const auto& p : points)
        fit.residuals.push_back(p.j - jackpot_value(m, p.t));
    return fit;
}

PowerLawFit fit_fraction_power_law(std::span<const FractionPoint> points, Orientation orientation)
{
    if (points.size() < 2)
        throw std::invalid_argument("power-law fit needs at least two points");
    std::vector<double> xs, ys;
    for (const auto& p : points) {
        if (!(p.sigma > 0.0) || !std::isfinite(p.sigma))
            throw std::invalid_argument("sigma must be positive");
        if (!(p.f > 0.0 && p.f < 1.0))
            throw std::invalid_argument("fraction must lie strictly inside (0, 1)");
        if (std::find(xs.begin(), xs.end(), std::log(p.sigma)) != xs.end())
            throw std::invalid_argument("duplicate sigma");
        xs.push_back(std::log(p.sigma));
        ys.push_back(std::log(p.f / (1.0 - p.f)));
    }

    double slope, intercept;
    if (points.size() == 2) {
        slope = (ys[1] - ys[0]) / (xs[1] - xs[0]);
        intercept = ys[0] - slope * xs[0];
    } else {
        const double n = double(xs.size());
        const double mx = compensated_sum(xs) / n, my = compensated_sum(ys) / n;
        NeumaierSum sxy, sxx;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxy.add((xs[i] - mx) * (ys[i] - my));
            sxx.add((xs[i] - mx) * (xs[i] - mx));
        }
        slope = sxy.value() / sxx.value();
        intercept = my - slope * mx;
    }
    if (orientation == Orientation::Profit)
        return {orientation, std::exp(intercept), -slope};
    return {orientation, std::exp(-intercept), slope};
}

double power_law_fraction(const PowerLawFit& fit, double sigma)
{
    if (!(sigma >= 0.0))
        throw std::invalid_argument("sigma must be non-negative");
    const double s = std::pow(sigma, fit.exponent);
    if (fit.orientation == Orientation::Profit)
        return fit.scale / (fit.scale + s);
    return s / (fit.scale + s);
}

}  // namespace twopoint
