#include "twopoint/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "twopoint/bounds.hpp"
#include "twopoint/choice.hpp"
#include "twopoint/combinations.hpp"
#include "twopoint/datasets.hpp"
#include "twopoint/elicitation.hpp"
#include "twopoint/entropy.hpp"
#include "twopoint/errors.hpp"
#include "twopoint/fitting.hpp"
#include "twopoint/lottery.hpp"
#include "twopoint/montecarlo.hpp"
#include "twopoint/prospect.hpp"
#include "twopoint/report.hpp"

namespace twopoint {

namespace {

constexpr const char* kDataDirEnv = "TWOPOINT_DATA_DIR";

struct ProspectArgs {
    double ap = 0.0, aq = 0.0, p = 1.0;
    Prospect get() const { return Prospect(ap, aq, p); }
};

struct GameArgs {
    std::string game;
    std::string config;

    LotteryConfig get() const
    {
        if (!config.empty())
            return load_config_file(config);
        return builtin_config(game.empty() ? "megamillions-2013" : game);
    }
};

std::int64_t as_int(std::uint64_t v)
{
    return static_cast<std::int64_t>(v);
}

std::string join_match(const MatchVector& m)
{
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i)
        s += (i ? "," : "") + std::to_string(m[i]);
    return s;
}

MatchVector parse_match(const std::string& text)
{
    MatchVector m;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (part.empty() || used != part.size())
            throw std::invalid_argument("bad match vector '" + text + "'");
        m.push_back(v);
    }
    return m;
}

std::string verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Determined: return "determined";
    case Verdict::Undefined: return "undefined";
    case Verdict::RequiresModel: return "requires-model";
    }
    return "?";
}

std::vector<Cell> moment_cells(const MomentSet& m)
{
    return {m.mean, m.variance, m.stdev(), m.mu3, m.mu4,
            cell(m.skewness), cell(m.excess_kurtosis), m.entropy_bits};
}

const std::vector<std::string> kMomentColumns{"mean", "variance", "stdev", "mu3", "mu4",
                                              "skewness", "excess_kurtosis", "entropy_bits"};

std::vector<double> linspace(double lo, double hi, int n)
{
    if (n < 1)
        throw std::invalid_argument("step count must be at least 1");
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    return v;
}

std::vector<std::uint64_t> logspace_counts(double lo, double hi, int n)
{
    if (!(lo >= 1.0 && hi >= lo))
        throw std::invalid_argument("ticket range must satisfy 1 <= min <= max");
    std::vector<std::uint64_t> v;
    for (double x : linspace(std::log(lo), std::log(hi), n))
        v.push_back(std::uint64_t(std::llround(std::exp(x))));
    return v;
}

using Action = std::function<Report()>;

class Cli {
public:
    Cli() : app_("Two-point prospects, choice fractions and lottery economics", "twopoint")
    {
        app_.require_subcommand(1);
        build_prospect();
        build_entropy();
        build_choice();
        build_elicit();
        build_lottery();
        build_bounds();
        build_sim();
        build_data();
    }

    int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
    {
        std::reverse(args.begin(), args.end());
        try {
            app_.parse(args);
        } catch (const CLI::CallForHelp&) {
            out << help_for_deepest();
            return 0;
        } catch (const CLI::ParseError& e) {
            err << "error: " << e.what() << "\n\n" << help_for_deepest();
            return 2;
        }

        CLI::App* group = app_.get_subcommands().front();
        if (group->get_subcommands().empty()) {
            err << "error: a subcommand is required\n\n" << group->help();
            return 2;
        }
        CLI::App* leaf = group->get_subcommands().front();
        const std::string key = group->get_name() + " " + leaf->get_name();
        try {
            const Report report = actions_.at(key)();
            const Format format = format_name_ == "json"      ? Format::Json
                                  : format_name_ == "columns" ? Format::Columns
                                                              : Format::Text;
            write_report(out, report, format);
        } catch (const DomainError& e) {
            err << "error: " << e.what() << '\n';
            return 1;
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << '\n';
            return 1;
        } catch (const std::out_of_range& e) {
            err << "error: " << e.what() << '\n';
            return 1;
        }
        return 0;
    }

private:
    CLI::App app_;
    std::map<std::string, Action> actions_;
    std::string format_name_ = "text";

    // Shared option storage; only one leaf is parsed per run.
    ProspectArgs x_, x1_, x2_;
    GameArgs game_;
    std::uint64_t n_ = 1, n1_ = 1, n2_ = 1, reps_ = 100000, seed_ = 1;
    double freq_ = 0.0, duration_ = 0.0;
    double a_ = 0.0, b_ = 0.0, e_ = 0.0, d_ = 1.0, gamma_ = 0.0, anchor_ = 0.0;
    double const_a_ = 1.0, const_b_ = 1.0, gamma_min_ = -2.0, gamma_max_ = 2.0;
    int steps_ = 101, curve_steps_ = 0, count_ = 7, years_ = 30, era_ = 0;
    std::string side_ = "lower", family_ = "logistic", match_, path_, dir_;
    double high_ = 0.0, low_ = 0.0, accepted_ = 0.0, rejected_ = 0.0, threshold_ = 0.0;
    double jackpot_ = 0.0, j_star_ = 0.0, rate_ = 0.0, tax_ = 0.0, q_ = 0.0;
    double slope_ = 0.0, intercept_ = 0.0, coeff_ = 1.0, delta_ = 0.0, factor_ = 0.5;
    double j_min_ = 1e6, j_hi_ = 1e9, m_min_ = 1e6, m_max_ = 1e8, winners_ = 0.0;
    int j_steps_ = 50, m_steps_ = 20;
    double j0_ = 15e6, jmax_ = 5e8, k_ = 19.748, c_ = 1.3e-9, dt_ = 0.011, t_end_ = 0.3;
    double epsilon_ = 0.05, eta_ = 0.01, sure_ = 0.0, population_ = 0.0, n_mean_ = 5.0;
    double tickets_ = 0.0, variance_ = 1.0;
    bool serial_ = false, residuals_ = false, use_j_star_ = false, have_jmax_ = false;
    bool has_n_ = false, free_j0_ = false;

    std::string help_for_deepest() const
    {
        const CLI::App* cur = &app_;
        while (!cur->get_subcommands().empty())
            cur = cur->get_subcommands().front();
        return cur->help();
    }

    CLI::App* group(const std::string& name, const std::string& desc)
    {
        auto* g = app_.add_subcommand(name, desc);
        g->require_subcommand(1);
        return g;
    }

    CLI::App* leaf(CLI::App* g, const std::string& name, const std::string& desc, Action action)
    {
        auto* s = g->add_subcommand(name, desc);
        s->add_option("--format", format_name_, "Output format")
            ->check(CLI::IsMember({"text", "columns", "json"}))
            ->capture_default_str();
        actions_[g->get_name() + " " + name] = std::move(action);
        return s;
    }

    static void prospect_opts(CLI::App* s, ProspectArgs& x, const std::string& suffix)
    {
        s->add_option("--ap" + suffix, x.ap, "Outcome with probability p")->required();
        s->add_option("--aq" + suffix, x.aq, "Outcome with probability 1 - p")->required();
        s->add_option("--p" + suffix, x.p, "Probability of ap")->required();
    }

    void pair_opts(CLI::App* s, bool trials)
    {
        prospect_opts(s, x1_, "1");
        prospect_opts(s, x2_, "2");
        if (trials) {
            s->add_option("--n1", n1_, "Trials of prospect 1")->capture_default_str();
            s->add_option("--n2", n2_, "Trials of prospect 2")->capture_default_str();
        }
    }

    void game_opts(CLI::App* s)
    {
        auto* g = s->add_option("--game", game_.game, "Built-in game")
                      ->check(CLI::IsMember(builtin_config_names()));
        s->add_option("--config", game_.config, "Lottery config file")->excludes(g);
    }

    void build_prospect()
    {
        auto* g = group("prospect", "Moments of a two-point prospect");
        auto* m = leaf(g, "moments", "Mean, variance, skewness, kurtosis and entropy", [this] {
            Report r{"prospect moments", kMomentColumns, {}};
            r.add(moment_cells(two_point_moments(x_.get())));
            return r;
        });
        prospect_opts(m, x_, "");

        auto* s = leaf(g, "sample-mean", "Moments of the mean of n trials", [this] {
            const std::uint64_t n = has_n_ ? n_ : trials_from_time(freq_, duration_);
            auto cols = kMomentColumns;
            cols.insert(cols.begin(), "n");
            Report r{"prospect sample-mean", cols, {}};
            auto cells = moment_cells(sample_mean_moments(x_.get(), n));
            cells.insert(cells.begin(), as_int(n));
            r.add(cells);
            return r;
        });
        prospect_opts(s, x_, "");
        auto* n = s->add_option("--n", n_, "Number of trials");
        auto* f = s->add_option("--frequency", freq_, "Trials per unit time")->excludes(n);
        s->add_option("--duration", duration_, "Elapsed time")->needs(f);
        f->needs("--duration");
        s->callback([this, n] { has_n_ = n->count() > 0; });
    }

    void build_entropy()
    {
        auto* g = group("entropy", "Shannon entropy in bits");
        auto* t = leaf(g, "two-point", "Entropy of one trial", [this] {
            Report r{"entropy two-point", {"p", "entropy_bits"}, {}};
            r.add({x_.p, two_point_entropy(x_.p)});
            return r;
        });
        t->add_option("--p", x_.p, "Probability")->required();

        auto* b = leaf(g, "binomial", "Exact entropy of n trials", [this] {
            Report r{"entropy binomial", {"p", "n", "entropy_bits"}, {}};
            r.add({x_.p, as_int(n_), binomial_entropy_exact(x_.p, n_)});
            return r;
        });
        b->add_option("--p", x_.p, "Probability")->required();
        b->add_option("--n", n_, "Trials")->required();

        auto* s = leaf(g, "stirling", "Stirling approximation of the binomial entropy", [this] {
            Report r{"entropy stirling", {"p", "n", "stirling_bits", "exact_bits", "error"}, {}};
            const double st = binomial_entropy_stirling(x_.p, n_);
            const double ex = binomial_entropy_exact(x_.p, n_);
            r.add({x_.p, as_int(n_), st, ex, st - ex});
            return r;
        });
        s->add_option("--p", x_.p, "Probability")->required();
        s->add_option("--n", n_, "Trials (at least 4)")->required();

        auto* nrm = leaf(g, "normal", "Differential entropy of a normal variable", [this] {
            Report r{"entropy normal", {"variance", "entropy_bits"}, {}};
            r.add({variance_, normal_differential_entropy(variance_)});
            return r;
        });
        nrm->add_option("--variance", variance_, "Variance")->required();
    }

    void build_choice()
    {
        auto* g = group("choice", "Fractions of respondents choosing between two prospects");

        auto* c = leaf(g, "classify", "Locate a pair in the combination and decision tables", [this] {
            const Classification k = classify_pair(x1_.get(), x2_.get());
            Report r{"choice classify",
                     {"combination", "interval_row", "probability_row", "decision_row", "swapped",
                      "verdict", "f1"},
                     {}};
            r.add({k.combination.to_string(), std::int64_t(k.interval_row),
                   std::int64_t(k.probability_row),
                   k.decision_row ? Cell(std::int64_t(*k.decision_row)) : Cell(Undefined{}),
                   k.swapped, verdict_name(k.verdict), cell(k.f1)});
            return r;
        });
        pair_opts(c, false);

        auto* p = leaf(g, "predict", "Ratio-hypothesis prediction of f1 and f2", [this] {
            const auto s = difference_stats(x1_.get(), n1_, x2_.get(), n2_);
            const auto f = predict_fractions(x1_.get(), n1_, x2_.get(), n2_, {a_, b_});
            Report r{"choice predict", {"e", "stdev", "a", "b", "f1", "f2"}, {}};
            r.add({s.e, s.stdev(), a_, b_, cell(f.value()),
                   f.is_determined() ? Cell(f.f2()) : Cell(Undefined{})});
            return r;
        });
        pair_opts(p, true);
        p->add_option("--a", a_, "Deviation multiplier for the gain side")->required();
        p->add_option("--b", b_, "Deviation multiplier for the loss side")->required();

        auto* l = leaf(g, "limit", "f1 as the number of trials grows without bound", [this] {
            const auto m1 = two_point_moments(x1_.get()), m2 = two_point_moments(x2_.get());
            const auto f = limit_fraction(x1_.get(), x2_.get());
            Report r{"choice limit", {"e1", "e2", "f1"}, {}};
            r.add({m1.mean, m2.mean, cell(f.value())});
            return r;
        });
        pair_opts(l, false);

        auto* bd = leaf(g, "bounds", "Largest admissible deviation multipliers", [this] {
            const auto s = difference_stats(x1_.get(), n1_, x2_.get(), n2_);
            const auto bb = deviation_bounds(x1_.get(), n1_, x2_.get(), n2_);
            Report r{"choice bounds", {"e", "stdev", "eta_min", "eta_max", "a_max", "b_max"}, {}};
            r.add({s.e, s.stdev(), s.eta_min, s.eta_max, bb.a_max, bb.b_max});
            return r;
        });
        pair_opts(bd, true);

        leaf(g, "enumerate", "Canonical combinations of four interval endpoints", [] {
            Report r{"choice enumerate", {"row", "combination", "class", "f1"}, {}};
            for (const auto& c : enumerate_canonical_combinations().admissible) {
                const int row = interval_row_of(c).value();
                const auto& entry = interval_table()[row - 1];
                r.add({std::int64_t(row), c.to_string(), std::string(to_string(entry.cls)),
                       std::string(to_string(entry.f1))});
            }
            return r;
        });

        auto* de = leaf(g, "design", "Random prospect against a constant with given skewness", [this] {
            const auto side = side_ == "upper" ? Anchor::Upper : Anchor::Lower;
            const auto pair = design_pair_with_skewness(e_, d_, gamma_, n_, anchor_, side);
            const auto bb = designed_bounds(gamma_, n_);
            Report r{"choice design", {"ap", "aq", "p", "constant", "a_max", "b_max"}, {}};
            r.add({pair.random.a_p(), pair.random.a_q(), pair.random.p(),
                   pair.constant.a_p(), bb.a_max, bb.b_max});
            return r;
        });
        de->add_option("--e", e_, "Mean of the difference")->required();
        de->add_option("--d", d_, "Variance of the difference")->required();
        de->add_option("--gamma", gamma_, "Skewness of one trial")->required();
        de->add_option("--n", n_, "Trials")->capture_default_str();
        de->add_option("--anchor", anchor_, "Fixed outcome of the random prospect")->capture_default_str();
        de->add_option("--side", side_, "Which outcome is anchored")->check(CLI::IsMember({"lower", "upper"}));

        auto* gs = leaf(g, "gamma-sweep", "f1 along a skewness grid", [this] {
            const auto grid = linspace(gamma_min_, gamma_max_, steps_);
            Report r{"choice gamma-sweep", {"gamma1", "a_max", "b_max", "f1"}, {}};
            for (const auto& pt : f1_of_gamma(e_, d_, n_, const_a_, const_b_, grid))
                r.add({pt.gamma1, pt.a_max, pt.b_max, cell(pt.f1.value())});
            return r;
        });
        gs->add_option("--e", e_, "Mean of the difference")->required();
        gs->add_option("--d", d_, "Variance of the difference")->required();
        gs->add_option("--n", n_, "Trials")->capture_default_str();
        gs->add_option("--const-a", const_a_, "a = a_max / const_a")->capture_default_str();
        gs->add_option("--const-b", const_b_, "b = b_max / const_b")->capture_default_str();
        gs->add_option("--gamma-min", gamma_min_)->capture_default_str();
        gs->add_option("--gamma-max", gamma_max_)->capture_default_str();
        gs->add_option("--steps", steps_)->capture_default_str();
    }

    void build_elicit()
    {
        auto* g = group("elicit", "Certainty-equivalent ladders");
        auto* l = leaf(g, "ladder", "Geometric ladder between two outcomes", [this] {
            const auto lad = geometric_ladder(high_, low_, count_);
            Report r{"elicit ladder", {"i", "value", "ratio"}, {}};
            for (std::size_t i = 0; i < lad.values.size(); ++i)
                r.add({std::int64_t(i + 1), lad.values[i], lad.ratio});
            return r;
        });
        l->add_option("--high", high_)->required();
        l->add_option("--low", low_)->required();
        l->add_option("--count", count_, "Interior values")->capture_default_str();

        auto* rf = leaf(g, "refine", "Linear ladder around the first-stage bracket", [this] {
            const auto lad = refine_linear_ladder(accepted_, rejected_, count_);
            Report r{"elicit refine", {"i", "value", "lower", "upper"}, {}};
            for (std::size_t i = 0; i < lad.values.size(); ++i)
                r.add({std::int64_t(i + 1), lad.values[i], lad.lower, lad.upper});
            return r;
        });
        rf->add_option("--accepted", accepted_, "Lowest accepted sure amount")->required();
        rf->add_option("--rejected", rejected_, "Highest rejected sure amount")->required();
        rf->add_option("--count", count_, "Interior values")->capture_default_str();

        auto* ce = leaf(g, "ce", "Two-stage elicitation against a threshold respondent", [this] {
            const double th = threshold_;
            const auto el = elicit(x_.get(), [th](double s) { return s >= th; });
            Report r{"elicit ce", {"certainty_equivalent", "lowest_accepted", "highest_rejected"}, {}};
            r.add({el.certainty_equivalent, el.lowest_accepted, el.highest_rejected});
            return r;
        });
        prospect_opts(ce, x_, "");
        ce->add_option("--threshold", threshold_, "Respondent takes sure amounts at or above this")
            ->required();
    }

    void build_lottery()
    {
        auto* g = group("lottery", "Lottery odds, expectations and participation");

        auto* o = leaf(g, "odds", "Reciprocal odds of prize tiers", [this] {
            const auto cfg = game_.get();
            if (!match_.empty()) {
                const auto m = parse_match(match_);
                Report r{"lottery odds", {"match", "Q", "probability"}, {}};
                r.add({join_match(m), reciprocal_odds(cfg, m), match_probability(cfg, m)});
                return r;
            }
            Report r{"lottery odds", {"match", "prize", "Q", "probability"}, {}};
            for (const auto& p : cfg.prizes)
                r.add({join_match(p.match), p.jackpot ? Cell(std::string("jackpot")) : Cell(p.amount),
                       reciprocal_odds(cfg, p.match), match_probability(cfg, p.match)});
            const auto any = any_prize_probability(cfg);
            r.add({std::string("any"), std::string("any"), any.one_in, any.probability});
            return r;
        });
        game_opts(o);
        o->add_option("--match", match_, "Match vector such as 5,1");

        auto* ev = leaf(g, "ev", "Expected profit of one ticket", [this] {
            const auto cfg = game_.get();
            Report r{"lottery ev", {"ev"}, {}};
            if (use_j_star_)
                r.add({expected_pnl_simple(cfg, j_star_, tax_)});
            else
                r.add({expected_pnl(cfg, jackpot_, n_, {years_, rate_}, tax_)});
            return r;
        });
        game_opts(ev);
        auto* js = ev->add_option("--j-star", j_star_, "Effective jackpot (annuity, split, tax applied)");
        auto* jp = ev->add_option("--jackpot", jackpot_, "Announced jackpot")->excludes(js);
        ev->add_option("--tickets", n_, "Tickets sold")->needs(jp);
        ev->add_option("--years", years_)->capture_default_str();
        ev->add_option("--rate", rate_)->capture_default_str();
        ev->add_option("--tax", tax_)->capture_default_str();
        ev->callback([this, js, jp] {
            use_j_star_ = js->count() > 0;
            if (!use_j_star_ && jp->count() == 0)
                throw CLI::RequiredError("--j-star or --jackpot");
        });

        auto* sf = leaf(g, "ev-surface", "EV over a grid of jackpots and ticket counts", [this] {
            const auto cfg = game_.get();
            const auto js = linspace(j_min_, j_hi_, j_steps_);
            const auto ms = logspace_counts(m_min_, m_max_, m_steps_);
            Report r{"lottery ev-surface", {"J", "M", "EV"}, {}};
            for (const auto& pt : ev_surface(cfg, js, ms, {years_, rate_}, tax_,
                                             serial_ ? Exec::Serial : Exec::Parallel))
                r.add({pt.jackpot, as_int(pt.tickets), pt.ev});
            return r;
        });
        game_opts(sf);
        sf->add_option("--j-min", j_min_)->capture_default_str();
        sf->add_option("--j-max", j_hi_)->capture_default_str();
        sf->add_option("--j-steps", j_steps_)->capture_default_str();
        sf->add_option("--m-min", m_min_)->capture_default_str();
        sf->add_option("--m-max", m_max_)->capture_default_str();
        sf->add_option("--m-steps", m_steps_)->capture_default_str();
        sf->add_option("--years", years_)->capture_default_str();
        sf->add_option("--rate", rate_)->capture_default_str();
        sf->add_option("--tax", tax_)->capture_default_str();
        sf->add_flag("--serial", serial_, "Use the single-threaded reference kernel");

        auto* be = leaf(g, "breakeven", "Jackpot at which the expectation turns positive", [this] {
            Report r{"lottery breakeven", {"slope", "intercept", "coeff", "breakeven"}, {}};
            EvLine line{slope_, intercept_};
            if (era_)
                line = era_line(era_);
            else if (!game_.game.empty() || !game_.config.empty())
                line = ev_line(game_.get(), {years_, rate_}, tax_);
            r.add({line.slope, line.intercept, coeff_, breakeven_jackpot(line, coeff_)});
            return r;
        });
        game_opts(be);
        auto* era = be->add_option("--era", era_, "Printed Mega Millions era line")
                        ->check(CLI::IsMember({2002, 2005, 2013}));
        be->add_option("--slope", slope_)->excludes(era);
        be->add_option("--intercept", intercept_)->excludes(era);
        be->add_option("--coeff", coeff_, "Split coefficient")->capture_default_str();
        be->add_option("--years", years_)->capture_default_str();
        be->add_option("--rate", rate_)->capture_default_str();
        be->add_option("--tax", tax_)->capture_default_str();

        auto* sp = leaf(g, "split", "Jackpot win probability and split coefficient", [this] {
            const double q = q_ > 0.0 ? q_ : reciprocal_odds(game_.get(), game_.get().jackpot().match);
            const auto s = jackpot_split(n_, q);
            Report r{"lottery split", {"tickets", "Q", "win_probability", "split_coefficient"}, {}};
            r.add({as_int(n_), q, s.win_probability, cell(s.split_coefficient)});
            return r;
        });
        game_opts(sp);
        sp->add_option("--tickets", n_, "Tickets sold")->required();
        sp->add_option("--q", q_, "Reciprocal jackpot odds (default: from the game)");

        auto* fj = leaf(g, "fit-jackpot", "Least-squares jackpot growth curve", [this] {
            std::vector<JackpotPoint> pts;
            if (path_.empty()) {
                pts = load_jackpot_growth();
            } else {
                std::ifstream in(path_);
                if (!in)
                    throw std::invalid_argument("cannot open '" + path_ + "'");
                for (const auto& row : import_growth_csv(in))
                    pts.push_back({row.t_years, row.jackpot});
            }
            const auto fam = family_ == "exponential" ? GrowthFamily::Exponential : GrowthFamily::Logistic;
            FixedParams fixed;
            if (have_jmax_)
                fixed.j_max = jmax_;
            if (!free_j0_)
                fixed.j0 = j0_;
            const auto fit = fit_jackpot_curve(pts, fam, fixed);
            if (residuals_) {
                Report r{"lottery fit-jackpot", {"t", "jackpot", "fitted", "residual"}, {}};
                for (std::size_t i = 0; i < pts.size(); ++i)
                    r.add({pts[i].t, pts[i].j, pts[i].j - fit.residuals[i], fit.residuals[i]});
                return r;
            }
            Report r{"lottery fit-jackpot", {"family", "k", "j0", "j_max", "sse"}, {}};
            r.add({family_, fit.model.k, fit.model.j0,
                   fam == GrowthFamily::Logistic ? Cell(fit.model.j_max) : Cell(Undefined{}), fit.sse});
            return r;
        });
        fj->add_option("--family", family_)->check(CLI::IsMember({"logistic", "exponential"}));
        fj->add_option("--j0", j0_, "Fixed initial jackpot")->capture_default_str();
        fj->add_flag("--free-j0", free_j0_, "Fit j0 instead of fixing it");
        auto* jm = fj->add_option("--j-max", jmax_, "Fixed logistic ceiling (fitted when omitted)");
        fj->add_option("--data", path_, "Growth CSV (date,t_years,jackpot); default: embedded series");
        fj->add_flag("--residuals", residuals_, "Print per-point residuals");
        fj->callback([this, jm] { have_jmax_ = jm->count() > 0; });

        auto* pa = leaf(g, "participation", "Fraction of buyers over time under logistic growth", [this] {
            const auto part = participation_over_time(j0_, jmax_, k_, c_, dt_);
            if (curve_steps_ <= 0) {
                Report r{"lottery participation", {"t_max", "f_max"}, {}};
                r.add({part.t_max, part.f_max});
                return r;
            }
            Report r{"lottery participation", {"t", "f1"}, {}};
            for (double t : linspace(0.0, t_end_, curve_steps_))
                r.add({t, part.f1(t)});
            return r;
        });
        pa->add_option("--j0", j0_)->capture_default_str();
        pa->add_option("--j-max", jmax_)->capture_default_str();
        pa->add_option("--k", k_, "Growth rate per year")->capture_default_str();
        pa->add_option("--c", c_, "Tickets-to-fraction scale")->capture_default_str();
        pa->add_option("--dt", dt_, "Interval between drawings in years")->capture_default_str();
        pa->add_option("--t-end", t_end_)->capture_default_str();
        pa->add_option("--steps", curve_steps_, "Curve points; 0 prints only the peak");

        auto* an = leaf(g, "annuity", "Cash value of one unit of annuity", [this] {
            Report r{"lottery annuity", {"years", "rate", "factor"}, {}};
            r.add({std::int64_t(years_), rate_, annuity_cash_factor({years_, rate_})});
            return r;
        });
        an->add_option("--years", years_)->capture_default_str();
        an->add_option("--rate", rate_)->required();

        auto* tk = leaf(g, "tickets", "Ticket counts from jackpot growth or winner counts", [this] {
            if (winners_ > 0.0) {
                Report r{"lottery tickets", {"winners", "tickets"}, {}};
                r.add({winners_, tickets_from_winners(winners_, game_.get())});
                return r;
            }
            Report r{"lottery tickets", {"delta", "factor", "tickets"}, {}};
            r.add({delta_, factor_, as_int(estimate_tickets(delta_, factor_))});
            return r;
        });
        game_opts(tk);
        auto* w = tk->add_option("--winners", winners_, "Total prize winners of a drawing");
        tk->add_option("--delta", delta_, "Jackpot increase")->excludes(w);
        tk->add_option("--factor", factor_, "Annuity-to-cash factor")->capture_default_str();

        auto* fr = leaf(g, "fraction", "Participation fraction", [this] {
            const double pop = population_ > 0.0 ? population_ : double(adult_population());
            Report r{"lottery fraction", {"tickets", "population", "n_mean", "f1"}, {}};
            r.add({tickets_, pop, n_mean_, participation_fraction(tickets_, pop, n_mean_)});
            return r;
        });
        fr->add_option("--tickets", tickets_)->required();
        fr->add_option("--population", population_, "Adult population (default: embedded census)");
        fr->add_option("--n-mean", n_mean_, "Mean tickets per buyer")->capture_default_str();
    }

    void build_bounds()
    {
        auto* g = group("bounds", "Law-of-large-numbers sample sizes");
        auto* p = leaf(g, "prokhorov", "Minimum trials for a frequency margin", [this] {
            double eps = epsilon_;
            if (sure_ > 0.0)
                eps = comparison_threshold_epsilon(x_.get(), sure_);
            Report r{"bounds prokhorov", {"epsilon", "eta", "bound", "n0"}, {}};
            r.add({eps, eta_, prokhorov_bound(eps, eta_), as_int(prokhorov_min_trials(eps, eta_))});
            return r;
        });
        auto* e = p->add_option("--epsilon", epsilon_)->capture_default_str();
        p->add_option("--eta", eta_, "Confidence complement")->capture_default_str();
        auto* s = p->add_option("--sure", sure_, "Derive epsilon from a sure amount")->excludes(e);
        p->add_option("--ap", x_.ap)->needs(s);
        p->add_option("--p", x_.p)->needs(s);
        x_.aq = 0.0;
    }

    void build_sim()
    {
        auto* g = group("sim", "Monte Carlo checks");
        auto* m = leaf(g, "means", "Empirical moments of simulated sample means", [this] {
            const auto sim = simulate_sample_means(x_.get(), n_, reps_, seed_,
                                                   serial_ ? Exec::Serial : Exec::Parallel);
            if (!path_.empty()) {
                std::ofstream out(path_);
                if (!out)
                    throw std::invalid_argument("cannot write '" + path_ + "'");
                write_samples(out, sim.means);
            }
            auto cols = kMomentColumns;
            for (auto c : {"se_mean", "se_variance", "se_mu3", "se_mu4", "se_skewness", "se_excess_kurtosis"})
                cols.push_back(c);
            Report r{"sim means", cols, {}};
            auto cells = moment_cells(sim.moments);
            const auto& e = sim.errors;
            for (double v : {e.mean, e.variance, e.mu3, e.mu4})
                cells.push_back(v);
            cells.push_back(sim.moments.skewness ? Cell(e.skewness) : Cell(Undefined{}));
            cells.push_back(sim.moments.excess_kurtosis ? Cell(e.excess_kurtosis) : Cell(Undefined{}));
            r.add(cells);
            return r;
        });
        prospect_opts(m, x_, "");
        m->add_option("--n", n_)->capture_default_str();
        m->add_option("--reps", reps_)->capture_default_str();
        m->add_option("--seed", seed_)->capture_default_str();
        m->add_option("--dump", path_, "Write one mean per line to this file");
        m->add_flag("--serial", serial_, "Use the single-threaded reference kernel");

        auto* c = leaf(g, "coverage", "Frequency of |k/n - p| <= epsilon", [this] {
            const double f = empirical_coverage(x_.get(), n_, epsilon_, reps_, seed_,
                                                serial_ ? Exec::Serial : Exec::Parallel);
            Report r{"sim coverage", {"n", "epsilon", "replications", "coverage"}, {}};
            r.add({as_int(n_), epsilon_, as_int(reps_), f});
            return r;
        });
        prospect_opts(c, x_, "");
        c->add_option("--n", n_)->required();
        c->add_option("--epsilon", epsilon_)->required();
        c->add_option("--reps", reps_)->capture_default_str();
        c->add_option("--seed", seed_)->capture_default_str();
        c->add_flag("--serial", serial_, "Use the single-threaded reference kernel");
    }

    void build_data()
    {
        auto* g = group("data", "Embedded datasets");
        auto* e = leaf(g, "export", "Write the embedded datasets as CSV and config files", [this] {
            std::string dir = dir_;
            if (dir.empty()) {
                const char* env = std::getenv(kDataDirEnv);
                dir = env && *env ? env : "data";
            }
            Report r{"data export", {"path"}, {}};
            for (const auto& p : export_all(dir))
                r.add({p});
            return r;
        });
        e->add_option("--dir", dir_, std::string("Output directory (default: $") + kDataDirEnv + " or ./data)");
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Cli cli;
    return cli.run(args, out, err);
}

}  // namespace twopoint
