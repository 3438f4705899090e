#include <doctest.h>

#include <random>
#include <stdexcept>

#include "twopoint/choice.hpp"
#include "twopoint/entropy.hpp"
#include "twopoint/errors.hpp"

using namespace twopoint;
using doctest::Approx;

namespace {
const Prospect kRisky(4000, 0, 0.8), kSure(3000, 3000, 1);
const Prospect kRiskyLoss(0, -4000, 0.2), kSureLoss(-3000, -3000, 1);
const Prospect kLottery(232999999, -1, 1.0 / 258890850), kNothing(0, 0, 1);
}  // namespace

TEST_CASE("difference statistics of the certainty-effect pair")
{
    const auto s = difference_stats(kRisky, 1, kSure, 1);
    CHECK(s.e == Approx(200));
    CHECK(s.stdev() == Approx(1600));
    CHECK(s.eta_min == -3000);
    CHECK(s.eta_max == 1000);
    CHECK(*s.skewness == Approx(-1.5));
    CHECK(s.entropy_bits == Approx(two_point_entropy(0.8)));
}

TEST_CASE("difference statistics, symmetric equal-mean pair")
{
    const auto s = difference_stats(Prospect(6000, 0, 0.45), 1, Prospect(3000, 0, 0.9), 1);
    CHECK(std::fabs(s.e) < 1e-9);
    CHECK(std::round(s.stdev()) == 3118);
    CHECK(std::round(*s.skewness * 100) / 100 == Approx(0.24));
    CHECK(std::round(*s.excess_kurtosis * 100) / 100 == Approx(-1.61));
}

TEST_CASE("difference statistics, lottery ticket against nothing")
{
    const auto s = difference_stats(kLottery, 1, kNothing, 1);
    CHECK(std::round(s.e * 100) / 100 == Approx(-0.10));
    CHECK(std::round(s.stdev() * 100) / 100 == Approx(14480.97));
    CHECK(std::round(*s.skewness * 100) / 100 == Approx(16090.09));
    CHECK(s.entropy_bits == Approx(1.1352e-7).epsilon(1e-3));
}

TEST_CASE("eta support")
{
    const auto coins = eta_support_single_trial(Prospect(1, 0, 0.5), Prospect(1, 0, 0.5));
    const std::array<double, 4> v{0, 1, -1, 0};
    for (int i = 0; i < 4; ++i) {
        CHECK(coins[i].value == v[i]);
        CHECK(coins[i].probability == 0.25);
    }
    const auto s = eta_support_single_trial(kRisky, kSure);
    CHECK(s[0].probability == Approx(0.8));
    CHECK(s[1].probability == 0.0);
    CHECK(s[2].probability == Approx(0.2));
    CHECK(s[3].probability == 0.0);
}

TEST_CASE("property: eta support normalises and averages to E(eta)")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> amount(-100, 100), prob(0, 1);
    for (int i = 0; i < 1000; ++i) {
        const Prospect a(amount(rng), amount(rng), prob(rng)), b(amount(rng), amount(rng), prob(rng));
        const auto sup = eta_support_single_trial(a, b);
        double total = 0, mean = 0;
        for (auto [x, w] : sup) {
            total += w;
            mean += x * w;
        }
        CHECK(total == Approx(1.0).epsilon(1e-15));
        CHECK(std::fabs(mean - difference_stats(a, 1, b, 1).e) < 1e-12 * 200);
        const auto s = difference_stats(a, 3, b, 5);
        CHECK(s.eta_min <= s.e + 1e-12);
        CHECK(s.e <= s.eta_max + 1e-12);
        CHECK(s.eta_max - s.eta_min == Approx(a.spread() + b.spread()).epsilon(1e-12));
    }
}

TEST_CASE("classification examples")
{
    const auto c = classify_pair(kRisky, kSure);
    CHECK(c.interval_row == 8);
    CHECK(c.probability_row == 6);
    CHECK(c.decision_row == 25);
    CHECK(c.verdict == Verdict::RequiresModel);
    CHECK_FALSE(c.f1);

    const auto d = classify_pair(Prospect(1, 1, 1), Prospect(2, 2, 1));
    CHECK(d.interval_row == 10);
    CHECK(d.verdict == Verdict::Determined);
    CHECK(d.f1 == 0.0);

    const auto e = classify_pair(Prospect(5, 5, 1), Prospect(5, 5, 1));
    CHECK(e.interval_row == 12);
    CHECK(e.combination.interval_class() == IntervalClass::Point);
    CHECK(e.verdict == Verdict::Undefined);

    const auto m = classify_pair(Prospect(2, 2, 1), Prospect(1, 1, 1));
    CHECK(m.interval_row == 26);
    CHECK(m.f1 == 1.0);
}

TEST_CASE("limit fraction")
{
    CHECK(limit_fraction(kRisky, kSure) == FractionPrediction::determined(1));
    CHECK(limit_fraction(Prospect(100, 0, 0.5), Prospect(50, 50, 1)) == FractionPrediction::undefined());
    CHECK(limit_fraction(kLottery, kNothing) == FractionPrediction::determined(0));
}

TEST_CASE("deviation bounds")
{
    const auto a = deviation_bounds(kRisky, 1, kSure, 1);
    CHECK(a.a_max == Approx(0.5));
    CHECK(a.b_max == Approx(2));
    const auto b = deviation_bounds(kRiskyLoss, 1, kSureLoss, 1);
    CHECK(b.a_max == Approx(2));
    CHECK(b.b_max == Approx(0.5));
    const auto c = deviation_bounds(kLottery, 1, kNothing, 1);
    CHECK(std::round(c.a_max * 100) / 100 == Approx(16090.09));
    CHECK(c.a_max * c.b_max == Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(deviation_bounds(kSure, 1, kSureLoss, 1), ZeroVariance);
}

TEST_CASE("ratio hypothesis examples")
{
    CHECK(predict_fractions(kRisky, 1, kSure, 1, {0, 5.0 / 8}).f1() == Approx(0.2).epsilon(1e-12));
    CHECK(predict_fractions(kRiskyLoss, 1, kSureLoss, 1, {25.0 / 16, 0}).f1() == Approx(0.92).epsilon(1e-12));
    const auto f = predict_fractions(Prospect(3000, 3000, 1), 1, Prospect(2000, 2000, 1), 1, {7, 9});
    CHECK(f.f1() == 1.0);
    CHECK(f.f2() == 0.0);
    CHECK_THROWS_AS(predict_fractions(kRisky, 1, kSure, 1, {0.6, 0}), std::invalid_argument);
    CHECK_THROWS_AS(predict_fractions(kRisky, 1, kSure, 1, {0, -0.1}), std::invalid_argument);
}

TEST_CASE("iid operands give an undefined fraction")
{
    const Prospect x(10, 0, 0.3);
    CHECK_FALSE(predict_fractions(x, 4, x, 4, {0, 0}).is_determined());
    CHECK_FALSE(predict_fractions(kSure, 1, kSure, 1, {1, 1}).is_determined());
}

TEST_CASE("b from a")
{
    const auto s = difference_stats(kRisky, 1, kSure, 1);
    for (double a : {0.0, 0.1, 0.3})
        CHECK(b_from_a(s, 0.2, a) == Approx(4 * a + 5.0 / 8).epsilon(1e-12));
    const auto r = difference_stats(kRiskyLoss, 1, kSureLoss, 1);
    for (double a : {1.6, 1.8, 2.0})
        CHECK(b_from_a(r, 0.92, a) == Approx(2.0 / 23 * a - 25.0 / 184).epsilon(1e-12));
    CHECK_THROWS_AS(b_from_a(s, 0.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(b_from_a(s, 1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(b_from_a(difference_stats(kSure, 1, kSureLoss, 1), 0.5, 0.1), ZeroVariance);
}

TEST_CASE("property: b_from_a round trip on random admissible instances")
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> amount(-1000, 1000), prob(0.02, 0.98), unit(0, 1);
    int checked = 0;
    while (checked < 1000) {
        const Prospect x(amount(rng), amount(rng), prob(rng)), y(amount(rng), amount(rng), prob(rng));
        const auto s = difference_stats(x, 1, y, 1);
        const auto bounds = deviation_bounds(x, 1, y, 1);
        const double f1 = 0.02 + 0.96 * unit(rng);
        const double a = bounds.a_max * unit(rng);
        const double b = b_from_a(s, f1, a);
        // Admissible: b inside its bound and both numerator terms positive.
        if (b < 0 || b > bounds.b_max || s.e + a * s.stdev() <= 0 || -s.e + b * s.stdev() <= 0)
            continue;
        const auto f = predict_fractions(x, 1, y, 1, {a, b});
        REQUIRE(f.is_determined());
        CHECK(f.f1() == Approx(f1).epsilon(1e-9));
        ++checked;
    }
}

TEST_CASE("property: swapping the operands complements the fraction")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> amount(-50, 50), prob(0.05, 0.95), unit(0, 1);
    for (int i = 0; i < 500; ++i) {
        const Prospect x(amount(rng), amount(rng), prob(rng)), y(amount(rng), amount(rng), prob(rng));
        const auto bxy = deviation_bounds(x, 2, y, 3);
        const DeviationParams pxy{bxy.a_max * unit(rng), bxy.b_max * unit(rng)};
        const auto f = predict_fractions(x, 2, y, 3, pxy);
        const auto g = predict_fractions(y, 3, x, 2, {pxy.b, pxy.a});
        REQUIRE(f.is_determined() == g.is_determined());
        if (f.is_determined())
            CHECK(f.f1() + g.f1() == Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("property: disjoint intervals ignore probabilities and trial counts")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> prob(0.01, 0.99), unit(0, 1);
    for (int i = 0; i < 200; ++i) {
        const Prospect hi(20, 10, prob(rng)), lo(5, -5, prob(rng));
        const std::uint64_t n1 = 1 + i % 7, n2 = 1 + i % 5;
        const auto b = deviation_bounds(hi, n1, lo, n2);
        const DeviationParams d{b.a_max * unit(rng), b.b_max * unit(rng)};
        const auto f = predict_fractions(hi, n1, lo, n2, d);
        if (f.is_determined())
            CHECK(f.f1() == 1.0);
        else
            CHECK(d.a == 0.0);  // 0/0 only when the a-term vanishes as well
        CHECK(classify_pair(hi, lo).f1 == 1.0);
    }
}

TEST_CASE("property: zero mean difference gives a / (a + b)")
{
    const Prospect x(1000, 0, 0.5), y(500, 500, 1);
    for (double a : {0.1, 0.5, 1.0})
        for (double b : {0.2, 0.7, 1.0})
            CHECK(predict_fractions(x, 1, y, 1, {a, b}).f1() == Approx(a / (a + b)).epsilon(1e-12));
}

TEST_CASE("property: prediction converges to the limit fraction")
{
    // Fixed (a, b), admissible at n = 1; the bounds only widen with n.
    double prev = 0.0;
    for (std::uint64_t n : {1u, 10u, 100u, 10000u, 1000000u}) {
        const auto b = deviation_bounds(kRisky, n, kSure, n);
        CHECK(b.a_max >= 0.25);
        CHECK(b.b_max >= 1.5);
        const double f = predict_fractions(kRisky, n, kSure, n, {0.25, 1.5}).f1();
        CHECK(f >= prev);
        prev = f;
    }
    CHECK(prev == 1.0);
}

TEST_CASE("designed pairs reproduce the targets")
{
    const auto d = design_pair_with_skewness(200, 1600.0 * 1600, -1.5, 1, 0);
    CHECK(d.random.p() == Approx(0.8).epsilon(1e-12));
    CHECK(d.random.a_p() == Approx(4000).epsilon(1e-12));
    CHECK(d.random.a_q() == 0.0);
    CHECK(d.constant.a_p() == Approx(3000).epsilon(1e-12));

    const auto z = design_pair_with_skewness(50, 40, 0, 1, 3);
    CHECK(z.random.p() == Approx(0.5).epsilon(1e-12));

    const auto r = design_pair_with_skewness(-200, 1600.0 * 1600, 1.5, 1, 0, Anchor::Upper);
    CHECK(r.random.a_p() == 0.0);
    CHECK(r.random.a_q() == Approx(-4000).epsilon(1e-12));
    CHECK(r.random.p() == Approx(0.2).epsilon(1e-12));
    CHECK(r.constant.a_p() == Approx(-3000).epsilon(1e-12));
}

TEST_CASE("property: designed pairs hit (E, D, gamma1) for any skewness and n")
{
    for (double g : {-3.0, -1.5, -0.2, 0.0, 0.4, 2.5})
        for (std::uint64_t n : {1u, 4u, 25u}) {
            const auto d = design_pair_with_skewness(120, 900, g, n, -10);
            const auto s = difference_stats(d.random, n, d.constant, 1);
            CHECK(s.e == Approx(120).epsilon(1e-9));
            CHECK(s.variance == Approx(900).epsilon(1e-9));
            CHECK(std::fabs(*s.skewness - g) < 1e-9 * std::max(1.0, std::fabs(g)));
            const auto b = designed_bounds(g, n);
            CHECK(b.a_max * b.b_max == Approx(double(n)).epsilon(1e-12));
            const auto direct = deviation_bounds(d.random, n, d.constant, 1);
            CHECK(direct.a_max == Approx(b.a_max).epsilon(1e-9));
            CHECK(direct.b_max == Approx(b.b_max).epsilon(1e-9));
        }
}

TEST_CASE("fraction along a skewness sweep")
{
    const std::array<double, 1> g1{-1.5};
    const auto a = f1_of_gamma(200, 1600.0 * 1600, 1, 2, 2 / 1.625, g1);
    REQUIRE(a.size() == 1);
    CHECK(a[0].f1.f1() == Approx(0.2).epsilon(1e-12));
    const std::array<double, 1> g2{1.5};
    const auto b = f1_of_gamma(-200, 1600.0 * 1600, 1, 1.25, 153.333, g2);
    CHECK(b[0].f1.f1() == Approx(0.92).epsilon(1e-4));

    std::vector<double> grid;
    for (double g = -4; g <= 4; g += 0.25)
        grid.push_back(g);
    for (const auto& pt : f1_of_gamma(200, 1600.0 * 1600, 3, 2, 2, grid))
        CHECK(pt.a_max * pt.b_max == Approx(3.0).epsilon(1e-12));
}
