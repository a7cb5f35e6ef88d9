#include "gammanoise/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gammanoise/gamma_model.hpp"
#include "gammanoise/quadrature.hpp"
#include "gammanoise/stats.hpp"

namespace gammanoise {

namespace {

constexpr std::size_t kTableKnots = 4096;
constexpr double kTableCutoff = 40.0;

}  // namespace

IncrementPath sample_increments(const Partition& partition, std::uint64_t seed,
                                std::uint64_t path_index) {
    Philox rng(seed, path_index);
    std::vector<double> inc(partition.size());
    for (std::size_t k = 0; k < partition.size(); ++k)
        inc[k] = sample_gamma(rng, partition.length(k));
    return {partition, std::move(inc)};
}

IncrementBatch sample_increment_batch(const Partition& partition, std::size_t n_paths,
                                      std::uint64_t seed) {
    const std::size_t d = partition.size();
    IncrementBatch batch{partition, n_paths, std::vector<double>(n_paths * d)};
    for (std::size_t i = 0; i < n_paths; ++i) {
        Philox rng(seed, i);
        for (std::size_t k = 0; k < d; ++k)
            batch.increments[i * d + k] = sample_gamma(rng, partition.length(k));
    }
    return batch;
}

JumpSizeSampler::JumpSizeSampler(double threshold) : threshold_(threshold) {
    if (!(threshold > 0.0))
        throw std::domain_error("jump sampler: threshold must be positive (infinite activity)");
    table_hi_ = std::max(threshold, kTableCutoff);
    table_mass_ = 0.0;
    if (threshold < table_hi_) {
        knots_.resize(kTableKnots);
        cdf_.resize(kTableKnots);
        const double lo = std::log(threshold), hi = std::log(table_hi_);
        for (std::size_t j = 0; j < kTableKnots; ++j)
            knots_[j] = std::exp(lo + (hi - lo) * static_cast<double>(j) /
                                          static_cast<double>(kTableKnots - 1));
        knots_.front() = threshold;
        knots_.back() = table_hi_;
        cdf_[0] = 0.0;
        for (std::size_t j = 1; j < kTableKnots; ++j)
            cdf_[j] = cdf_[j - 1] + integrate([](double u) { return std::exp(-u) / u; },
                                              knots_[j - 1], knots_[j], 1e-14);
        table_mass_ = cdf_.back();
    }
    // Tail mass integral_b^inf e^(-u)/u du, bounded by e^(-b)/b.
    const double b = table_hi_;
    const double tail = integrate([](double u) { return std::exp(-u) / u; }, b, b + 45.0,
                                  std::max(1e-14, 1e-16 * std::exp(-b)));
    rate_ = table_mass_ + tail;
}

double JumpSizeSampler::sample(Philox& rng) const {
    const double target = rng.next_double() * rate_;
    if (target < table_mass_) {
        const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), target);
        const std::size_t j = static_cast<std::size_t>(it - cdf_.begin());  // in [1, knots)
        const double f0 = cdf_[j - 1], f1 = cdf_[j];
        const double w = (target - f0) / (f1 - f0);
        return knots_[j - 1] + w * (knots_[j] - knots_[j - 1]);
    }
    // Tail: proposal b + Exp(1), density e^-(u-b); acceptance ratio
    // (e^(-u)/u) / e^-(u-b) peaks at u = b, giving acceptance b/u.
    const double b = table_hi_;
    for (;;) {
        const double u = b - std::log(rng.next_open());
        if (rng.next_double() * u <= b) return u;
    }
}

JumpPath sample_jumps(const JumpSizeSampler& sizes, double horizon, std::uint64_t seed,
                      std::uint64_t path_index) {
    if (!(horizon > 0.0)) throw std::domain_error("sample_jumps: horizon must be positive");
    Philox rng(seed, path_index);
    const std::uint64_t n = sample_poisson(rng, horizon * sizes.rate());
    std::vector<Jump> jumps(n);
    for (auto& j : jumps) {
        j.time = horizon * rng.next_double();
        j.size = sizes.sample(rng);
    }
    std::sort(jumps.begin(), jumps.end(),
              [](const Jump& a, const Jump& b) { return a.time < b.time; });
    return {horizon, sizes.threshold(), std::move(jumps)};
}

JumpPath sample_jumps(double horizon, double threshold, std::uint64_t seed,
                      std::uint64_t path_index) {
    return sample_jumps(JumpSizeSampler(threshold), horizon, seed, path_index);
}

JumpBatch sample_jump_batch(const JumpSizeSampler& sizes, double horizon,
                            std::size_t n_paths, std::uint64_t seed) {
    JumpBatch batch;
    batch.horizon = horizon;
    batch.threshold = sizes.threshold();
    batch.n_paths = n_paths;
    batch.offsets.reserve(n_paths + 1);
    batch.offsets.push_back(0);
    for (std::size_t i = 0; i < n_paths; ++i) {
        JumpPath p = sample_jumps(sizes, horizon, seed, i);
        batch.jumps.insert(batch.jumps.end(), p.jumps.begin(), p.jumps.end());
        batch.offsets.push_back(batch.jumps.size());
    }
    return batch;
}

double pair_with(const IncrementPath& path, const StepFunction& theta) {
    if (path.partition != theta.partition())
        throw std::invalid_argument("pair_with: path partition does not match theta");
    double acc = 0.0;
    for (std::size_t k = 0; k < path.increments.size(); ++k)
        acc += theta.value(k) * path.increments[k];
    return acc;
}

double pair_with(std::span<const Jump> jumps, const StepFunction& theta) {
    double acc = 0.0;
    for (const Jump& j : jumps) {
        const auto cell = theta.partition().cell_containing(j.time);
        if (cell) acc += theta.value(*cell) * j.size;
    }
    return acc;
}

namespace {

McEstimate cf_from_pairings(std::span<const double> pairings) {
    std::vector<std::complex<double>> values(pairings.size());
    for (std::size_t i = 0; i < pairings.size(); ++i) {
        values[i] = {std::cos(pairings[i]), std::sin(pairings[i])};
    }
    const ComplexMeanStderr m = mean_stderr(std::span<const std::complex<double>>(values));
    return {m.mean, m.stderr_of_mean, m.n};
}

}  // namespace

McEstimate empirical_cf(const IncrementBatch& batch, const StepFunction& theta) {
    if (batch.partition != theta.partition())
        throw std::invalid_argument("empirical_cf: batch partition does not match theta");
    const std::size_t d = batch.partition.size();
    std::vector<double> pairings(batch.n_paths);
    for (std::size_t i = 0; i < batch.n_paths; ++i) {
        const auto g = batch.path(i);
        double acc = 0.0;
        for (std::size_t k = 0; k < d; ++k) acc += theta.value(k) * g[k];
        pairings[i] = acc;
    }
    return cf_from_pairings(pairings);
}

McEstimate empirical_cf(const JumpBatch& batch, const StepFunction& theta) {
    if (batch.horizon < theta.partition().total_length())
        throw std::invalid_argument("empirical_cf: jump horizon does not cover theta");
    std::vector<double> pairings(batch.n_paths);
    for (std::size_t i = 0; i < batch.n_paths; ++i)
        pairings[i] = pair_with(batch.path(i), theta);
    return cf_from_pairings(pairings);
}

double lln_statistic(double tau, std::size_t n_paths, double band, std::uint64_t seed) {
    if (!(tau > 0.0)) throw std::domain_error("lln_statistic: tau must be positive");
    if (n_paths == 0) throw std::invalid_argument("lln_statistic: need at least one path");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n_paths; ++i) {
        Philox rng(seed, i);
        const double y = sample_gamma(rng, tau);
        if (std::abs(y / tau - 1.0) <= band) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(n_paths);
}

std::vector<std::vector<double>> boundedness_probe(std::span<const double> tau_grid,
                                                   std::size_t n_paths, std::uint64_t seed) {
    for (std::size_t j = 0; j + 1 < tau_grid.size(); ++j)
        if (!(tau_grid[j] < tau_grid[j + 1]))
            throw std::invalid_argument("boundedness_probe: grid must be increasing");
    if (!tau_grid.empty() && !(tau_grid.front() > 0.0))
        throw std::invalid_argument("boundedness_probe: grid must start above 0");

    std::vector<std::vector<double>> running_max(n_paths);
    for (std::size_t i = 0; i < n_paths; ++i) {
        Philox rng(seed, i);
        double y = 0.0, prev = 0.0, peak = 0.0;
        auto& row = running_max[i];
        row.reserve(tau_grid.size());
        for (double tau : tau_grid) {
            y += sample_gamma(rng, tau - prev);
            prev = tau;
            peak = std::max(peak, std::abs(y - tau));
            row.push_back(peak);
        }
    }
    return running_max;
}

}  // namespace gammanoise
