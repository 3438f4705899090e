#include "twopoint/lottery.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace twopoint {

namespace {

struct OddsParts {
    double total = 1.0;      // product of C(F, f)
    double favorable = 1.0;  // product of C(f, r) C(F - f, f - r)
};

OddsParts odds_parts(const LotteryConfig& config, const MatchVector& match)
{
    if (match.size() != config.fields.size())
        throw std::invalid_argument("match vector length differs from field count");
    OddsParts parts;
    for (std::size_t i = 0; i < match.size(); ++i) {
        const auto& f = config.fields[i];
        if (match[i] < 0 || match[i] > f.picked)
            throw std::invalid_argument("match count out of range");
        parts.total *= choose(f.total, f.picked);
        parts.favorable *= choose(f.picked, match[i]) * choose(f.total - f.picked, f.picked - match[i]);
    }
    return parts;
}

void check_tax(double tax)
{
    if (!(tax >= 0.0 && tax < 1.0))
        throw std::invalid_argument("tax must lie in [0, 1)");
}

// Walks outward from the mode of a distribution given by successive weight
// ratios and returns (sum_{K>=1} w/K, sum_{K>=1} w) for unnormalised weights.
template <class Up, class Down>
std::pair<double, double> harmonic_tail(std::uint64_t mode, std::uint64_t upper, Up up, Down down)
{
    constexpr double kCut = 1e-18;
    NeumaierSum num, den;
    auto take = [&](std::uint64_t k, double w) {
        if (k == 0)
            return;
        num.add(w / double(k));
        den.add(w);
    };
    take(mode, 1.0);
    double w = 1.0;
    for (std::uint64_t k = mode; k < upper;) {
        w *= up(k);
        ++k;
        if (w < kCut * den.value())
            break;
        take(k, w);
    }
    w = 1.0;
    for (std::uint64_t k = mode; k > 1;) {
        w *= down(k);
        --k;
        if (w < kCut * den.value())
            break;
        take(k, w);
    }
    return {num.value(), den.value()};
}

}  // namespace

double hypergeometric_pmf(int total, int drawn, int picked, int matched)
{
    if (total < 0 || drawn < 0 || picked < 0 || drawn > total || picked > total)
        throw std::invalid_argument("invalid hypergeometric parameters");
    if (matched < 0 || matched > drawn || matched > picked || picked - matched > total - drawn)
        return 0.0;
    return choose(drawn, matched) * choose(total - drawn, picked - matched) / choose(total, picked);
}

double match_probability(const LotteryConfig& config, const MatchVector& match)
{
    const auto parts = odds_parts(config, match);
    return parts.favorable / parts.total;
}

double reciprocal_odds(const LotteryConfig& config, const MatchVector& match)
{
    const auto parts = odds_parts(config, match);
    if (parts.favorable == 0.0)
        return std::numeric_limits<double>::infinity();
    return parts.total / parts.favorable;
}

AnyPrize any_prize_probability(const LotteryConfig& config)
{
    NeumaierSum s;
    for (const auto& p : config.prizes)
        s.add(match_probability(config, p.match));
    const double prob = s.value();
    return {prob, prob > 0.0 ? 1.0 / prob : std::numeric_limits<double>::infinity()};
}

double tickets_from_winners(double winners, const LotteryConfig& config)
{
    if (!(winners >= 0.0))
        throw std::invalid_argument("winner count must be non-negative");
    return winners * any_prize_probability(config).one_in;
}

double annuity_cash_factor(AnnuityTerms terms)
{
    if (terms.years < 1)
        throw std::invalid_argument("annuity needs at least one year");
    if (!(terms.rate >= 0.0) || !std::isfinite(terms.rate))
        throw std::invalid_argument("annuity rate must be finite and non-negative");
    if (terms.rate == 0.0)
        return 1.0;
    return terms.years * terms.rate / std::expm1(terms.years * std::log1p(terms.rate));
}

JackpotSplit jackpot_split(std::uint64_t m_tickets, double q_jackpot)
{
    if (!(q_jackpot > 1.0))
        throw std::invalid_argument("jackpot odds must exceed 1");
    if (m_tickets == 0)
        return {0.0, std::nullopt};
    const double p = 1.0 / q_jackpot;
    const double odds = p / (1.0 - p);
    const double m = double(m_tickets);
    const double win = -std::expm1(m * std::log1p(-p));
    const auto mode = std::min<std::uint64_t>(m_tickets, std::uint64_t((m + 1.0) * p));
    const auto [num, den] = harmonic_tail(
        mode, m_tickets, [&](std::uint64_t k) { return (m - double(k)) / double(k + 1) * odds; },
        [&](std::uint64_t k) { return double(k) / (m - double(k) + 1.0) / odds; });
    return {win, num / den};
}

double split_coefficient_poisson(double lambda)
{
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("lambda must be positive");
    const auto mode = std::uint64_t(lambda);
    const auto [num, den] = harmonic_tail(
        mode, std::numeric_limits<std::uint64_t>::max(),
        [&](std::uint64_t k) { return lambda / double(k + 1); },
        [&](std::uint64_t k) { return double(k) / lambda; });
    return num / den;
}

double secondary_prize_value(const LotteryConfig& config, double tax)
{
    check_tax(tax);
    NeumaierSum s;
    for (const auto& p : config.prizes) {
        if (p.jackpot)
            continue;
        const double amount = p.taxable ? p.amount * (1.0 - tax) : p.amount;
        s.add(amount / reciprocal_odds(config, p.match));
    }
    return s.value();
}

double expected_pnl(const LotteryConfig& config, double announced_jackpot,
                    std::uint64_t m_tickets, AnnuityTerms terms, double tax)
{
    check_tax(tax);
    if (m_tickets == 0)
        throw std::invalid_argument("at least one ticket (the buyer's) must be sold");
    const double q = reciprocal_odds(config, config.jackpot().match);
    const double coeff = *jackpot_split(m_tickets, q).split_coefficient;
    const double j_star = (1.0 - tax) * annuity_cash_factor(terms) * coeff * announced_jackpot;
    return j_star / q + secondary_prize_value(config, tax) - config.price;
}

double expected_pnl_simple(const LotteryConfig& config, double j_star, double tax)
{
    const double q = reciprocal_odds(config, config.jackpot().match);
    return j_star / q + secondary_prize_value(config, tax) - config.price;
}

double effective_breakeven(const LotteryConfig& config, double tax)
{
    const double q = reciprocal_odds(config, config.jackpot().match);
    return -(secondary_prize_value(config, tax) - config.price) * q;
}

EvLine ev_line(const LotteryConfig& config, AnnuityTerms terms, double tax)
{
    const double q = reciprocal_odds(config, config.jackpot().match);
    return {(1.0 - tax) * annuity_cash_factor(terms) / q,
            secondary_prize_value(config, tax) - config.price};
}

EvLine era_line(int year)
{
    switch (year) {
    case 2002: return {3.28e-9, -0.82};
    case 2005: return {2.53e-9, -0.85};
    case 2013: return {1.71e-9, -0.85};
    default: throw std::invalid_argument("no printed EV line for era " + std::to_string(year));
    }
}

double breakeven_jackpot(EvLine line, double split_coeff)
{
    if (!(line.slope > 0.0))
        throw std::invalid_argument("EV slope must be positive");
    if (!(split_coeff > 0.0 && split_coeff <= 1.0))
        throw std::invalid_argument("split coefficient must lie in (0, 1]");
    return -line.intercept / (line.slope * split_coeff);
}

std::vector<EvPoint> ev_surface(const LotteryConfig& config, std::span<const double> jackpots,
                                std::span<const std::uint64_t> tickets, AnnuityTerms terms,
                                double tax, Exec exec)
{
    check_tax(tax);
    for (auto m : tickets)
        if (m == 0)
            throw std::invalid_argument("ticket counts must be positive");
    const double q = reciprocal_odds(config, config.jackpot().match);
    const double annuity = annuity_cash_factor(terms);
    const double secondary = secondary_prize_value(config, tax) - config.price;

    const std::size_t nj = jackpots.size(), nm = tickets.size();
    std::vector<EvPoint> out(nj * nm);
    auto cell = [&](std::size_t idx) {
        const double j = jackpots[idx / nm];
        const std::uint64_t m = tickets[idx % nm];
        const double coeff = *jackpot_split(m, q).split_coefficient;
        out[idx] = {j, m, (1.0 - tax) * annuity * coeff * j / q + secondary};
    };
    const auto n = static_cast<std::ptrdiff_t>(out.size());
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::ptrdiff_t i = 0; i < n; ++i)
            cell(std::size_t(i));
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i)
            cell(std::size_t(i));
    }
    return out;
}

std::uint64_t estimate_tickets(double jackpot_delta, double annuity_to_cash)
{
    if (!(jackpot_delta >= 0.0) || !std::isfinite(jackpot_delta))
        throw std::invalid_argument("jackpot increase must be finite and non-negative");
    if (!(annuity_to_cash > 0.0 && annuity_to_cash <= 1.0))
        throw std::invalid_argument("annuity-to-cash factor must lie in (0, 1]");
    return std::uint64_t(std::llround(kTicketsPerRevenueShare * jackpot_delta * annuity_to_cash));
}

double participation_fraction(double tickets, double adult_population, double n_mean)
{
    if (!(tickets >= 0.0))
        throw std::invalid_argument("ticket count must be non-negative");
    if (!(adult_population > 0.0))
        throw std::invalid_argument("population must be positive");
    if (!(n_mean > 0.0))
        throw std::invalid_argument("mean tickets per buyer must be positive");
    return tickets / (n_mean * adult_population);
}

void JackpotModel::validate() const
{
    if (!(j0 > 0.0) || !std::isfinite(j0))
        throw std::invalid_argument("initial jackpot must be positive");
    if (!std::isfinite(k) || !std::isfinite(t0))
        throw std::invalid_argument("growth rate and origin must be finite");
    if (family == GrowthFamily::Logistic && !(j_max > j0 && std::isfinite(j_max)))
        throw std::invalid_argument("logistic ceiling must exceed the initial jackpot");
}

double jackpot_value(const JackpotModel& model, double t)
{
    model.validate();
    const double x = model.k * (t - model.t0);
    if (model.family == GrowthFamily::Exponential)
        return model.j0 * std::exp(x);
    return model.j_max * model.j0 / (model.j0 + (model.j_max - model.j0) * std::exp(-x));
}

Participation participation_over_time(double j0, double j_max, double k, double c_scale,
                                      double dt)
{
    const JackpotModel model{GrowthFamily::Logistic, j0, j_max, k, 0.0};
    model.validate();
    if (!(k > 0.0))
        throw std::invalid_argument("growth rate must be positive");
    if (!(dt > 0.0))
        throw std::invalid_argument("interval must be positive");
    const double h = std::exp(k * dt / 2.0);
    Participation r;
    r.f1 = [model, c_scale, dt](double t) {
        return c_scale * (jackpot_value(model, t + dt) - jackpot_value(model, t));
    };
    r.t_max = std::log((j_max - j0) / (j0 * h)) / k;
    r.f_max = c_scale * j_max * (h - 1.0) / (h + 1.0);
    return r;
}

double participation_closed_form(double j0, double j_max, double k, double c_scale, double dt,
                                 double t)
{
    const double g = j_max - j0;
    const double e = std::exp(k * t);
    const double ed = std::exp(k * dt);
    const double num = g * j_max * j0 * e * (ed - 1.0) * c_scale;
    const double den = g * g + g * j0 * e * (ed + 1.0) + (j0 * e) * (j0 * e) * ed;
    return num / den;
}

}  // namespace twopoint
