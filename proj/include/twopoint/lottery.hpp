#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twopoint/numeric.hpp"

namespace twopoint {

struct FieldSpec {
    int total;   // balls in the field
    int picked;  // numbers chosen, equal to numbers drawn

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

using MatchVector = std::vector<int>;

struct Prize {
    MatchVector match;
    double amount = 0.0;  // ignored for the jackpot tier
    bool jackpot = false;
    bool taxable = false;

    friend bool operator==(const Prize&, const Prize&) = default;
};

struct LotteryConfig {
    std::string name;
    double price = 1.0;
    std::vector<FieldSpec> fields;
    std::vector<Prize> prizes;

    // Throws std::invalid_argument on any broken invariant.
    void validate() const;
    const Prize& jackpot() const;

    friend bool operator==(const LotteryConfig&, const LotteryConfig&) = default;
};

// Embedded games: megamillions-2013, megamillions-2002, megamillions-2005, powerball.
std::vector<std::string> builtin_config_names();
LotteryConfig builtin_config(const std::string& name);

// Plain-text "lottery-config/1" format.
std::string format_config(const LotteryConfig& config);
LotteryConfig parse_config(const std::string& text);
LotteryConfig load_config_file(const std::string& path);

// P(matched of picked) when `drawn` of `total` are drawn.
double hypergeometric_pmf(int total, int drawn, int picked, int matched);

// Probability of exactly this match vector; 0 for impossible vectors.
double match_probability(const LotteryConfig& config, const MatchVector& match);
// 1 / match_probability, computed as a single division of exact products.
double reciprocal_odds(const LotteryConfig& config, const MatchVector& match);

struct AnyPrize {
    double probability;
    double one_in;
};
AnyPrize any_prize_probability(const LotteryConfig& config);

// Total tickets implied by a winner count and the any-prize odds.
double tickets_from_winners(double winners, const LotteryConfig& config);

struct AnnuityTerms {
    int years = 30;
    double rate = 0.0;
};
double annuity_cash_factor(AnnuityTerms terms);

struct JackpotSplit {
    double win_probability;
    std::optional<double> split_coefficient;  // absent when no tickets were sold
};
JackpotSplit jackpot_split(std::uint64_t m_tickets, double q_jackpot);

// Same quantity from the Poisson limit with lambda = M / Q; slower, used as a cross-check.
double split_coefficient_poisson(double lambda);

// Non-jackpot expectation per ticket after tax on flagged tiers.
double secondary_prize_value(const LotteryConfig& config, double tax);

double expected_pnl(const LotteryConfig& config, double announced_jackpot,
                    std::uint64_t m_tickets, AnnuityTerms terms, double tax);
// Effective jackpot j_star already reflects annuity, split and tax.
double expected_pnl_simple(const LotteryConfig& config, double j_star, double tax);
// j_star at which expected_pnl_simple is zero.
double effective_breakeven(const LotteryConfig& config, double tax);

// EV = slope * coeff * J + intercept.
struct EvLine {
    double slope;
    double intercept;
};
EvLine ev_line(const LotteryConfig& config, AnnuityTerms terms, double tax);
// Printed lines for the 2002, 2005 and 2013 Mega Millions eras.
EvLine era_line(int year);
double breakeven_jackpot(EvLine line, double split_coeff);

struct EvPoint {
    double jackpot;
    std::uint64_t tickets;
    double ev;
};
// Row-major over (jackpots x tickets).
std::vector<EvPoint> ev_surface(const LotteryConfig& config, std::span<const double> jackpots,
                                std::span<const std::uint64_t> tickets, AnnuityTerms terms,
                                double tax, Exec exec = Exec::Parallel);

inline constexpr double kTicketsPerRevenueShare = 3.0;
std::uint64_t estimate_tickets(double jackpot_delta, double annuity_to_cash = 0.5);
double participation_fraction(double tickets, double adult_population, double n_mean);

enum class GrowthFamily { Logistic, Exponential };

struct JackpotModel {
    GrowthFamily family = GrowthFamily::Logistic;
    double j0 = 0.0;
    double j_max = 0.0;  // logistic only
    double k = 0.0;      // per year
    double t0 = 0.0;     // years

    void validate() const;
};

struct JackpotPoint {
    double t;
    double j;
};

double jackpot_value(const JackpotModel& model, double t);

struct Participation {
    std::function<double(double)> f1;
    double t_max;
    double f_max;
};
// Fraction buying tickets over [t, t + dt] for a logistic jackpot with t0 = 0.
Participation participation_over_time(double j0, double j_max, double k, double c_scale,
                                      double dt);
// Algebraic form of the same f1, kept for cross-checking.
double participation_closed_form(double j0, double j_max, double k, double c_scale, double dt,
                                 double t);

}  // namespace twopoint
