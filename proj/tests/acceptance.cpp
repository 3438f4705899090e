// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "twopoint/bounds.hpp"
#include "twopoint/choice.hpp"
#include "twopoint/combinations.hpp"
#include "twopoint/datasets.hpp"
#include "twopoint/elicitation.hpp"
#include "twopoint/fitting.hpp"
#include "twopoint/lottery.hpp"
#include "twopoint/montecarlo.hpp"
#include "twopoint/prospect.hpp"

using namespace twopoint;

namespace {

class Checks {
public:
    void near(const std::string& what, double got, double want, double tol)
    {
        if (!(std::fabs(got - want) <= tol))
            fail(what, got, want, tol);
    }
    void rel(const std::string& what, double got, double want, double tol)
    {
        if (!(std::fabs(got - want) <= tol * std::fabs(want)))
            fail(what, got, want, tol);
    }
    // Equal to `printed` at the number of decimals it is printed with.
    void printed(const std::string& what, double got, const std::string& printed)
    {
        const auto dot = printed.find('.');
        const int decimals = dot == std::string::npos ? 0 : int(printed.size() - dot - 1);
        const double want = std::stod(printed);
        near(what, got, want, 0.5 * std::pow(10.0, -decimals) * (1 + 1e-9) + 1e-12 * std::fabs(want));
    }
    void truth(const std::string& what, bool ok)
    {
        if (!ok)
            failures_.push_back(what);
    }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    void fail(const std::string& what, double got, double want, double tol)
    {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s: got %.17g, want %.17g (tol %.3g)", what.c_str(), got, want, tol);
        failures_.push_back(buf);
    }
    std::vector<std::string> failures_;
};

void c1(Checks& c)
{
    const auto a = two_point_moments(Prospect(4000, 0, 0.8));
    const auto r = two_point_moments(Prospect(0, -4000, 0.2));
    c.near("mean", a.mean, 3200, 0);
    c.near("reflected mean", r.mean, -3200, 0);
    for (const auto* m : {&a, &r}) {
        c.near("stdev", m->stdev(), 1600, 1e-9);
        c.near("gamma2", m->excess_kurtosis.value_or(NAN), 0.25, 1e-12);
        c.near("entropy", m->entropy_bits, 0.721928, 1e-6);
    }
    c.near("gamma1", a.skewness.value_or(NAN), -1.5, 1e-12);
    c.near("reflected gamma1", r.skewness.value_or(NAN), 1.5, 1e-12);
}

void c2(Checks& c)
{
    const auto mm = builtin_config("megamillions-2013");
    const auto pb = builtin_config("powerball");
    c.near("Q(5,1)", reciprocal_odds(mm, {5, 1}), 258890850, 0);
    const std::vector<std::pair<MatchVector, double>> printed{
        {{5, 0}, 18492203.571}, {{4, 1}, 739688.143}, {{4, 0}, 52834.867}, {{3, 1}, 10720.118},
        {{3, 0}, 765.723},      {{2, 1}, 472.946},    {{1, 1}, 56.471},    {{0, 1}, 21.391}};
    for (const auto& [m, q] : printed)
        c.near("Q(" + std::to_string(m[0]) + "," + std::to_string(m[1]) + ")", reciprocal_odds(mm, m), q, 0.001);
    c.near("any prize", any_prize_probability(mm).probability, 0.0679916034, 1e-9);
    c.near("Powerball Q(5,1)", reciprocal_odds(pb, {5, 1}), 175223510, 0);
}

void c3(Checks& c)
{
    const auto mm = builtin_config("megamillions-2013");
    const auto pb = builtin_config("powerball");
    c.near("MM untaxed", expected_pnl_simple(mm, 0, 0.0), -0.82576841166846955, 1e-11);
    c.near("MM taxed", expected_pnl_simple(mm, 0, 0.4), -0.85010299127991584, 1e-11);
    c.near("PB untaxed", expected_pnl_simple(pb, 0, 0.0), -1.6395111592046067, 1e-11);
    c.near("PB taxed", expected_pnl_simple(pb, 0, 0.4), -1.7232898713192083, 1e-11);
    c.near("MM break-even", effective_breakeven(mm, 0.4), 220083886, 2);
    c.near("PB break-even", effective_breakeven(pb, 0.4), 301960900, 2);
}

void c4(Checks& c)
{
    c.near("annuity 2%", annuity_cash_factor({30, 0.02}), 0.7395, 5e-5);
    c.near("annuity 3%", annuity_cash_factor({30, 0.03}), 0.6306, 5e-5);
    c.near("annuity 5%", annuity_cash_factor({30, 0.05}), 0.4515, 5e-5);
    c.near("win 1e7", jackpot_split(10'000'000, 258890850).win_probability, 0.03788983372734210, 1e-12);
    c.near("win 1e8", jackpot_split(100'000'000, 258890850).win_probability, 0.3204083454349182, 1e-12);
}

void c5(Checks& c)
{
    c.truth("n0(0.05, 0.01) == 1955", prokhorov_min_trials(0.05, 0.01) == 1955);
    c.truth("n0(0.05, 0.001) == 2922", prokhorov_min_trials(0.05, 0.001) == 2922);
    const auto start = std::chrono::steady_clock::now();
    const double cov = empirical_coverage(Prospect(4000, 0, 0.8), 1955, 0.05, 100000, 20240611);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.truth("coverage >= 0.99 (got " + std::to_string(cov) + ")", cov >= 0.99);
    c.truth("coverage run under 30 s (took " + std::to_string(secs) + " s)", secs < 30);
}

void c6(Checks& c)
{
    const auto e = enumerate_canonical_combinations();
    c.truth("192 raw", e.raw_count == 192);
    c.truth("75 canonical", e.canonical.size() == 75);
    c.truth("26 admissible", e.admissible.size() == 26);
    // The reference table, one row per line: condition, class, forced fraction.
    const std::vector<std::tuple<std::string, std::string, std::string>> reference{
        {"min1<max1<min2<max2", "disjoint", "0"},     {"min1<max1<min2=max2", "disjoint", "0"},
        {"min1<max1=min2<max2", "adjacent", "0|undefined"}, {"min1<max1=min2=max2", "adjacent", "0|undefined"},
        {"min1<min2<max1<max2", "overlapping", "model"}, {"min1<min2<max1=max2", "overlapping", "model"},
        {"min1<min2<max2<max1", "overlapping", "model"}, {"min1<min2=max2<max1", "overlapping", "model"},
        {"min1=max1<min2<max2", "disjoint", "0"},     {"min1=max1<min2=max2", "disjoint", "0"},
        {"min1=max1=min2<max2", "adjacent", "0|undefined"}, {"min1=max1=min2=max2", "point", "undefined"},
        {"min1=min2<max1<max2", "overlapping", "model"}, {"min1=min2<max1=max2", "overlapping", "model"},
        {"min1=min2<max2<max1", "overlapping", "model"}, {"min1=min2=max2<max1", "adjacent", "1|undefined"},
        {"min2<max2<min1<max1", "disjoint", "1"},     {"min2<max2<min1=max1", "disjoint", "1"},
        {"min2<min1<max1<max2", "overlapping", "model"}, {"min2<min1<max1=max2", "overlapping", "model"},
        {"min2<min1<max2<max1", "overlapping", "model"}, {"min2<min1=max1<max2", "overlapping", "model"},
        {"min2<min1=max1=max2", "adjacent", "1|undefined"}, {"min2<min1=max2<max1", "adjacent", "1|undefined"},
        {"min2=max2<min1<max1", "disjoint", "1"},     {"min2=max2<min1=max1", "disjoint", "1"}};
    const auto& table = interval_table();
    for (std::size_t i = 0; i < reference.size() && i < e.admissible.size(); ++i) {
        const auto& [cond, cls, f1] = reference[i];
        const auto row = "row " + std::to_string(i + 1);
        c.truth(row + " condition", e.admissible[i].to_string() == cond);
        c.truth(row + " class", to_string(e.admissible[i].interval_class()) == cls);
        c.truth(row + " table condition", table[i].condition == cond);
        c.truth(row + " table verdict", to_string(table[i].f1) == f1);
    }
    const std::map<int, int> pairing{{1, 17}, {2, 18}, {3, 24}, {4, 23}, {5, 21}, {6, 20}, {7, 19},
                                     {8, 22}, {9, 25}, {10, 26}, {11, 16}, {13, 15}, {12, 12}, {14, 14}};
    for (auto [a, b] : pairing) {
        const auto fwd = interval_row_of(swap_indices(e.admissible[a - 1]));
        const auto back = interval_row_of(swap_indices(e.admissible[b - 1]));
        c.truth("swap " + std::to_string(a) + "<->" + std::to_string(b), fwd == b && back == a);
    }
}

void c7(Checks& c)
{
    const Prospect risky(4000, 0, 0.8), sure(3000, 3000, 1), risky_loss(0, -4000, 0.2), sure_loss(-3000, -3000, 1);
    c.near("f1 problem 3", predict_fractions(risky, 1, sure, 1, {0, 5.0 / 8}).value().value_or(NAN), 0.20, 1e-9);
    c.near("f1 problem 3'", predict_fractions(risky_loss, 1, sure_loss, 1, {25.0 / 16, 0}).value().value_or(NAN),
           0.92, 1e-9);
    const auto b3 = deviation_bounds(risky, 1, sure, 1);
    const auto b3r = deviation_bounds(risky_loss, 1, sure_loss, 1);
    c.near("a_max", b3.a_max, 0.5, 1e-12);
    c.near("b_max", b3.b_max, 2, 1e-12);
    c.near("a_max'", b3r.a_max, 2, 1e-12);
    c.near("b_max'", b3r.b_max, 0.5, 1e-12);

    std::mt19937_64 rng(1000);
    std::uniform_real_distribution<double> amount(-1000, 1000), prob(0.02, 0.98), unit(0, 1);
    int done = 0, bad = 0;
    while (done < 1000) {
        const Prospect x(amount(rng), amount(rng), prob(rng)), y(amount(rng), amount(rng), prob(rng));
        const auto s = difference_stats(x, 1, y, 1);
        const auto bd = deviation_bounds(x, 1, y, 1);
        const double f1 = 0.02 + 0.96 * unit(rng), a = bd.a_max * unit(rng);
        const double b = b_from_a(s, f1, a);
        if (b < 0 || b > bd.b_max || s.e + a * s.stdev() <= 0 || -s.e + b * s.stdev() <= 0)
            continue;
        const auto f = predict_fractions(x, 1, y, 1, {a, b});
        bad += !(f.is_determined() && std::fabs(f.f1() - f1) <= 1e-9);
        ++done;
    }
    c.truth("b_from_a round trip (" + std::to_string(bad) + " of 1000 failed)", bad == 0);
}

struct Printed {
    const char* e;
    const char* sd;
    const char* g1;  // nullptr: absent (constant prospect)
    const char* g2;
    const char* h;
};

void check_block(Checks& c, const std::string& label, const MomentSet& m, const Printed& p)
{
    c.printed(label + " E", m.mean, p.e);
    c.printed(label + " sd", m.stdev(), p.sd);
    if (p.g1) {
        c.printed(label + " g1", m.skewness.value_or(NAN), p.g1);
        c.printed(label + " g2", m.excess_kurtosis.value_or(NAN), p.g2);
    } else {
        c.truth(label + " g1/g2 absent", !m.skewness && !m.excess_kurtosis);
    }
    c.printed(label + " H", m.entropy_bits, p.h);
}

void c8(Checks& c)
{
    struct Block {
        Prospect x1, x2;
        Printed p1, p2, eta;
    };
    const std::vector<Block> blocks{
        {{6000, 0, 0.45}, {3000, 0, 0.9},
         {"2700", "2985", "0.201", "-1.96", "0.993"}, {"2700", "900", "-2.67", "5.11", "0.469"},
         {"0", "3118", "0.24", "-1.61", "1.46"}},
        {{6000, 0, 0.001}, {3000, 0, 0.002},
         {"6", "190", "31.6", "995", "0.011"}, {"6", "134", "22.3", "495", "0.021"},
         {"0", "232", "12.9", "497", "0.032"}},
        {{0, -6000, 0.55}, {0, -3000, 0.1},
         {"-2700", "2985", "-0.201", "-1.96", "0.993"}, {"-2700", "900", "2.67", "5.11", "0.469"},
         {"0", "3118", "-0.24", "-1.61", "1.46"}},
        {{0, -6000, 0.999}, {0, -3000, 0.998},
         {"-6", "190", "-31.6", "995", "0.011"}, {"-6", "134", "-22.3", "495", "0.021"},
         {"0", "232", "-12.9", "497", "0.032"}},
        {{1000, 0, 0.5}, {500, 500, 1},
         {"500", "500", "0", "-2", "1"}, {"500", "0", nullptr, nullptr, "0"},
         {"0", "500", "0", "-2", "1"}},
        {{0, -1000, 0.5}, {-500, -500, 1},
         {"-500", "500", "0", "-2", "1"}, {"-500", "0", nullptr, nullptr, "0"},
         {"0", "500", "0", "-2", "1"}},
        {{5000, 0, 0.001}, {5, 5, 1},
         {"5", "158", "31.6", "995", "0.011"}, {"5", "0", nullptr, nullptr, "0"},
         {"0", "158", "31.6", "995", "0.011"}},
        {{0, -5000, 0.999}, {-5, -5, 1},
         {"-5", "158", "-31.6", "995", "0.011"}, {"-5", "0", nullptr, nullptr, "0"},
         {"0", "158", "-31.6", "995", "0.011"}},
        {{25, 25, 1}, {100, 0, 0.25},
         {"25", "0", nullptr, nullptr, "0"}, {"25", "43", "1.15", "-0.667", "0.81"},
         {"0", "43", "-1.15", "-0.667", "0.81"}},
        {{20, 20, 1}, {200, 0, 0.1},
         {"20", "0", nullptr, nullptr, "0"}, {"20", "60", "2.67", "5.11", "0.469"},
         {"0", "60", "-2.67", "5.11", "0.469"}},
    };
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& b = blocks[i];
        const auto label = "block " + std::to_string(i + 1);
        check_block(c, label + " a1", two_point_moments(b.x1), b.p1);
        check_block(c, label + " a2", two_point_moments(b.x2), b.p2);
        const auto s = difference_stats(b.x1, 1, b.x2, 1);
        MomentSet eta;
        eta.mean = s.e;
        eta.variance = s.variance;
        eta.skewness = s.skewness;
        eta.excess_kurtosis = s.excess_kurtosis;
        eta.entropy_bits = s.entropy_bits;
        check_block(c, label + " eta", eta, b.eta);
    }
    const auto lot = difference_stats(Prospect(232999999, -1, 1.0 / 258890850), 1, Prospect(0, 0, 1), 1);
    c.printed("lottery E", lot.e, "-0.10");
    c.printed("lottery sd", lot.stdev(), "14480.97");
    c.printed("lottery g1", lot.skewness.value_or(NAN), "16090.09");
    c.rel("lottery g2", lot.excess_kurtosis.value_or(NAN), 258890848, 2e-8);
}

void c9(Checks& c)
{
    const std::vector<FractionPoint> profit{{158, 0.72}, {500, 0.16}};
    const std::vector<FractionPoint> loss{{158, 0.17}, {500, 0.69}};
    const auto p = fit_fraction_power_law(profit, Orientation::Profit);
    const auto l = fit_fraction_power_law(loss, Orientation::Loss);
    c.rel("K", p.scale, 238505.5242, 1e-3);
    c.rel("k", p.exponent, 2.259253618, 1e-3);
    c.rel("M", l.scale, 174976.0287, 1e-3);
    c.rel("m", l.exponent, 2.071333117, 1e-3);
}

void c10(Checks& c)
{
    const auto e = elicit(Prospect(150, 50, 0.25), [](double s) { return s >= 77.0; });
    c.near("ratio", e.first.ratio, 1.147, 5e-4);
    const std::vector<double> first{130.75, 113.98, 99.35, 86.60, 75.49, 65.80, 57.36};
    const std::vector<double> second{102.27, 96.29, 90.30, 84.32, 78.34, 72.36, 66.37};
    c.truth("seven values per ladder", e.first.values.size() == 7 && e.second.values.size() == 7);
    for (std::size_t i = 0; i < 7 && i < e.first.values.size(); ++i)
        c.near("first ladder " + std::to_string(i), e.first.values[i], first[i], 0.01);
    for (std::size_t i = 0; i < 7 && i < e.second.values.size(); ++i)
        c.near("second ladder " + std::to_string(i), e.second.values[i], second[i], 0.01);
    c.near("certainty equivalent", e.certainty_equivalent, 75.35, 0.01);
}

double two_significant(double x)
{
    const double scale = std::pow(10.0, std::floor(std::log10(std::fabs(x))) - 1);
    return std::round(x / scale) * scale;
}

void c11(Checks& c)
{
    const auto pts = load_jackpot_growth();
    const auto lf = fit_jackpot_curve(pts, GrowthFamily::Logistic, {15e6, 5e8});
    const auto ef = fit_jackpot_curve(pts, GrowthFamily::Exponential, {15e6, {}});
    c.truth("logistic SSE " + format_number(lf.sse) + " <= 1.3e15", lf.sse <= 1.3e15);
    // The reference SSE is stated to two significant figures.
    c.truth("exponential SSE " + format_number(ef.sse) + " <= 7.2e15 at two significant figures",
            two_significant(ef.sse) <= 7.2e15);
    const auto part = participation_over_time(1.5e7, 5e8, 19.748, 1.3e-9, 0.011);
    c.near("f_max", part.f_max, 0.035, 0.002);
    const double h = 1e-6;
    const double slope = (part.f1(part.t_max + h) - part.f1(part.t_max - h)) / (2 * h);
    c.near("df1/dt at t_max", slope, 0, 1e-6 * part.f_max);
}

void c12(Checks& c)
{
    int bad = 0;
    for (int i = 1; i <= 9; ++i) {
        const double p = i / 10.0;
        for (int n = 1; n <= 12; ++n) {
            const auto m = sample_mean_moments(Prospect(10, -5, p), n);
            const auto o = oracle::enumerate_sample_mean(10, -5, p, n);
            const auto close = [](double a, long double b) {
                return std::fabs(a - double(b)) <= 1e-9 * std::fabs(double(b)) + 1e-12;
            };
            bad += !(close(m.mean, o.mean) && close(m.variance, o.variance) && close(m.mu3, o.mu3) &&
                     close(m.mu4, o.mu4) && close(m.entropy_bits, o.entropy_bits));
        }
    }
    c.truth("enumeration matches analytic moments (" + std::to_string(bad) + " mismatches)", bad == 0);

    std::uint64_t seed = 12;
    for (std::uint64_t n : {10u, 100u})
        for (double p : {0.1, 0.5, 0.9}) {
            const Prospect x(10, -5, p);
            const auto exact = sample_mean_moments(x, n);
            const auto sim = simulate_sample_means(x, n, 100000, seed++);
            const auto label = "n=" + std::to_string(n) + " p=" + format_number(p);
            c.near(label + " mean", sim.moments.mean, exact.mean, 4 * sim.errors.mean);
            c.near(label + " variance", sim.moments.variance, exact.variance, 4 * sim.errors.variance);
            c.near(label + " mu3", sim.moments.mu3, exact.mu3, 4 * sim.errors.mu3);
            c.near(label + " mu4", sim.moments.mu4, exact.mu4, 4 * sim.errors.mu4);
        }
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Checks&)>>> criteria{
        {"two-point statistics of the certainty and reflection problems", c1},
        {"lottery reciprocal odds and any-prize probability", c2},
        {"expected-value constants and break-even jackpots", c3},
        {"annuity factors and jackpot win probabilities", c4},
        {"minimum trial counts and simulated coverage", c5},
        {"canonical combination enumeration and reference table", c6},
        {"ratio hypothesis, deviation bounds, b(a) round trip", c7},
        {"moment table of the equal-mean pairs", c8},
        {"power-law fits of fraction against dispersion", c9},
        {"certainty-equivalent ladder end to end", c10},
        {"jackpot growth fits and participation peak", c11},
        {"enumeration and simulation oracles", c12},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Checks checks;
        try {
            criteria[i].second(checks);
        } catch (const std::exception& e) {
            checks.truth(std::string("exception: ") + e.what(), false);
        }
        const bool ok = checks.failures().empty();
        failed += !ok;
        std::printf("C%-2zu %s  %s\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].first.c_str());
        for (const auto& f : checks.failures())
            std::printf("      %s\n", f.c_str());
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
