#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gammanoise {

/// Pairwise (tree) summation: deterministic for a fixed length and much
/// better conditioned than sequential accumulation.
double pairwise_sum(std::span<const double> xs);

/// Streaming accumulator with a fixed block size; block partials are
/// combined by pairwise summation, so the result depends only on the
/// sequence of added values, never on flush timing.
class BlockSum {
public:
    void add(double x) {
        block_ += x;
        if (++fill_ == kBlock) {
            partials_.push_back(block_);
            block_ = 0.0;
            fill_ = 0;
        }
    }
    double total() const;

private:
    static constexpr std::size_t kBlock = 4096;
    std::vector<double> partials_;
    double block_ = 0.0;
    std::size_t fill_ = 0;
};

struct MeanStderr {
    double mean;
    double stderr_of_mean;
    std::size_t n;
};

MeanStderr mean_stderr(std::span<const double> xs);

/// Mean of complex samples with a combined scalar standard error
/// sqrt((Var Re + Var Im) / n), suitable for modulus-distance checks.
struct ComplexMeanStderr {
    std::complex<double> mean;
    double stderr_of_mean;
    std::size_t n;
};

ComplexMeanStderr mean_stderr(std::span<const std::complex<double>> xs);

/// Complement of the asymptotic Kolmogorov distribution,
///   Q(x) = 2 sum_{k>=1} (-1)^(k-1) exp(-2 k^2 x^2).
double kolmogorov_q(double x);

struct KsResult {
    double statistic;  // sup |F_n - F|
    double p_value;    // asymptotic, with Stephens' finite-n correction
};

/// One-sample Kolmogorov-Smirnov test of `samples` against the continuous
/// CDF `cdf`. The sample vector is sorted internally.
KsResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Regularized lower incomplete gamma P(shape, s): the Gamma(shape, 1) CDF.
double gamma_cdf(double shape, double s);

/// Standard normal CDF.
double normal_cdf(double z);

}  // namespace gammanoise
