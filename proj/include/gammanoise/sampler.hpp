#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "gammanoise/partition.hpp"
#include "gammanoise/rng.hpp"

namespace gammanoise {

/// Gamma-process path in increment form: one independent Gamma(t_k, 1)
/// increment per partition cell. Increments are nonnegative; the process is
/// a nondecreasing subordinator.
struct IncrementPath {
    Partition partition;
    std::vector<double> increments;
};

/// Batch of increment paths, row-major (path-major) storage.
struct IncrementBatch {
    Partition partition;
    std::size_t n_paths = 0;
    std::vector<double> increments;  // n_paths * partition.size()

    std::span<const double> path(std::size_t i) const {
        const std::size_t d = partition.size();
        return {increments.data() + i * d, d};
    }
};

struct Jump {
    double time;
    double size;
};

/// Gamma-process path in truncated compound-Poisson form: jumps of size
/// above `threshold` on [0, horizon], sorted by time. Truncation drops the
/// expected mass (1 - e^(-threshold)) per unit time; callers quote that
/// bias with jump-based results.
struct JumpPath {
    double horizon;
    double threshold;
    std::vector<Jump> jumps;
};

struct JumpBatch {
    double horizon;
    double threshold;
    std::size_t n_paths = 0;
    std::vector<Jump> jumps;             // concatenated
    std::vector<std::size_t> offsets;    // n_paths + 1 entries

    std::span<const Jump> path(std::size_t i) const {
        return {jumps.data() + offsets[i], offsets[i + 1] - offsets[i]};
    }
};

/// Monte Carlo estimate with combined scalar standard error.
struct McEstimate {
    std::complex<double> value;
    double stderr_of_mean;
    std::size_t n_samples;
};

/// Independent draws G_k ~ Gamma(t_k, 1), one per cell; deterministic in
/// (seed, path_index).
IncrementPath sample_increments(const Partition& partition, std::uint64_t seed,
                                std::uint64_t path_index = 0);

IncrementBatch sample_increment_batch(const Partition& partition, std::size_t n_paths,
                                      std::uint64_t seed);

/// Sampler for jump sizes with density proportional to e^(-u)/u on
/// (threshold, inf). Inverse CDF on a 4096-knot log-spaced table over
/// (threshold, 40], with a shifted-exponential rejection sampler for the
/// tail beyond the table (proposal e^-(u-b), acceptance b/u).
class JumpSizeSampler {
public:
    explicit JumpSizeSampler(double threshold);

    double threshold() const { return threshold_; }

    /// Total jump intensity per unit time; equals levy_tail_mass(threshold)
    /// up to quadrature tolerance.
    double rate() const { return rate_; }

    double sample(Philox& rng) const;

private:
    double threshold_;
    double table_hi_;      // upper end of the tabulated region
    double table_mass_;    // integral of the density over (threshold, table_hi]
    double rate_;          // table_mass_ + tail mass
    std::vector<double> knots_;
    std::vector<double> cdf_;  // unnormalized, cdf_[0] = 0
};

/// Truncated compound-Poisson path on [0, horizon]: jump count
/// N ~ Poisson(horizon * rate), times uniform, sizes from `sizes`.
JumpPath sample_jumps(const JumpSizeSampler& sizes, double horizon, std::uint64_t seed,
                      std::uint64_t path_index = 0);

/// Convenience overload constructing the size table internally.
JumpPath sample_jumps(double horizon, double threshold, std::uint64_t seed,
                      std::uint64_t path_index = 0);

JumpBatch sample_jump_batch(const JumpSizeSampler& sizes, double horizon,
                            std::size_t n_paths, std::uint64_t seed);

/// Pairing <x, theta> of a path against a real step function.
double pair_with(const IncrementPath& path, const StepFunction& theta);
double pair_with(std::span<const Jump> jumps, const StepFunction& theta);

/// Monte Carlo estimate of the characteristic functional
/// E exp(i <x, theta>) from a batch of paths. Increment paths must live on
/// theta's partition; jump paths must cover its span.
McEstimate empirical_cf(const IncrementBatch& batch, const StepFunction& theta);
McEstimate empirical_cf(const JumpBatch& batch, const StepFunction& theta);

/// Fraction of n_paths with |y(tau)/tau - 1| <= band, where y(tau) is the
/// gamma process at time tau. Tends to 1 as tau grows (law of large
/// numbers for the unit-mean subordinator).
double lln_statistic(double tau, std::size_t n_paths, double band, std::uint64_t seed);

/// Running maxima of |y(tau) - tau| along an increasing time grid, one row
/// per path. The running max grows without bound (fluctuations scale like
/// sqrt(tau)); rows are nondecreasing by construction.
std::vector<std::vector<double>> boundedness_probe(std::span<const double> tau_grid,
                                                   std::size_t n_paths, std::uint64_t seed);

}  // namespace gammanoise
