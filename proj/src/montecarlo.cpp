#include "twopoint/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "twopoint/philox.hpp"

namespace twopoint {

namespace {

void check_budget(std::uint64_t n, std::uint64_t replications)
{
    if (n == 0)
        throw std::invalid_argument("trial count must be positive");
    if (replications == 0)
        throw std::invalid_argument("replication count must be positive");
    if (n > kMaxSimulatedTrials / replications)
        throw std::invalid_argument("n * replications exceeds 1e9");
}

std::uint64_t successes(double p, std::uint64_t n, std::uint64_t seed, std::uint64_t stream)
{
    UniformStream u(seed, stream);
    std::uint64_t k = 0;
    for (std::uint64_t i = 0; i < n; ++i)
        k += u.next() < p;
    return k;
}

template <class Body>
void for_each_replication(std::uint64_t replications, Exec exec, Body body)
{
    const auto r = static_cast<std::int64_t>(replications);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < r; ++i)
            body(std::uint64_t(i));
    } else {
        for (std::int64_t i = 0; i < r; ++i)
            body(std::uint64_t(i));
    }
}

}  // namespace

Simulation summarize_samples(std::vector<double> samples)
{
    if (samples.empty())
        throw std::invalid_argument("no samples");
    const double r = double(samples.size());
    const double mu = compensated_sum(samples) / r;

    NeumaierSum s2, s3, s4;
    for (double x : samples) {
        const double d = x - mu;
        s2.add(d * d);
        s3.add(d * d * d);
        s4.add(d * d * d * d);
    }
    Simulation sim;
    MomentSet& m = sim.moments;
    m.mean = mu;
    m.variance = s2.value() / r;
    m.mu3 = s3.value() / r;
    m.mu4 = s4.value() / r;

    // Influence functions of the plug-in moments; SE = sqrt(mean(IF^2) / R).
    const double v = m.variance;
    const double sd = std::sqrt(v);
    NeumaierSum e2, e3, e4, eg1, eg2;
    for (double x : samples) {
        const double d = x - mu;
        const double i2 = d * d - v;
        const double i3 = d * d * d - m.mu3 - 3.0 * v * d;
        const double i4 = d * d * d * d - m.mu4 - 4.0 * m.mu3 * d;
        e2.add(i2 * i2);
        e3.add(i3 * i3);
        e4.add(i4 * i4);
        if (v > 0.0) {
            const double g1 = i3 / (v * sd) - 1.5 * m.mu3 * i2 / (v * v * sd);
            const double g2 = i4 / (v * v) - 2.0 * m.mu4 * i2 / (v * v * v);
            eg1.add(g1 * g1);
            eg2.add(g2 * g2);
        }
    }
    sim.errors.mean = std::sqrt(v / r);
    sim.errors.variance = std::sqrt(e2.value() / r / r);
    sim.errors.mu3 = std::sqrt(e3.value() / r / r);
    sim.errors.mu4 = std::sqrt(e4.value() / r / r);
    if (v > 0.0) {
        m.skewness = m.mu3 / (v * sd);
        m.excess_kurtosis = m.mu4 / (v * v) - 3.0;
        sim.errors.skewness = std::sqrt(eg1.value() / r / r);
        sim.errors.excess_kurtosis = std::sqrt(eg2.value() / r / r);
    }

    std::vector<double> sorted = samples;
    std::sort(sorted.begin(), sorted.end());
    NeumaierSum h;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i])
            ++j;
        const double f = double(j - i) / r;
        h.add(-f * std::log2(f));
        i = j;
    }
    m.entropy_bits = h.value();
    sim.means = std::move(samples);
    return sim;
}

Simulation simulate_sample_means(const Prospect& prospect, std::uint64_t n,
                                 std::uint64_t replications, std::uint64_t seed, Exec exec)
{
    check_budget(n, replications);
    std::vector<double> means(replications);
    const double p = prospect.p(), lo = prospect.a_q(), hi = prospect.a_p();
    const double spread = prospect.spread(), dn = double(n);
    for_each_replication(replications, exec, [&](std::uint64_t r) {
        const std::uint64_t k = successes(p, n, seed, r);
        means[r] = k == n ? hi : k == 0 ? lo : lo + spread * (double(k) / dn);
    });
    return summarize_samples(std::move(means));
}

double empirical_coverage(const Prospect& prospect, std::uint64_t n, double epsilon,
                          std::uint64_t replications, std::uint64_t seed, Exec exec)
{
    check_budget(n, replications);
    if (!(epsilon >= 0.0))
        throw std::invalid_argument("epsilon must be non-negative");
    std::vector<unsigned char> hit(replications);
    const double p = prospect.p(), dn = double(n);
    for_each_replication(replications, exec, [&](std::uint64_t r) {
        hit[r] = std::fabs(double(successes(p, n, seed, r)) / dn - p) <= epsilon;
    });
    std::uint64_t count = 0;
    for (auto h : hit)
        count += h;
    return double(count) / double(replications);
}

void write_samples(std::ostream& out, const std::vector<double>& samples)
{
    for (double x : samples)
        out << format_number(x) << '\n';
}

}  // namespace twopoint
