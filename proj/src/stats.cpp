#include "gammanoise/stats.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gammanoise {

namespace {

double pairwise_sum_rec(std::span<const double> xs) {
    if (xs.size() <= 8) {
        double acc = 0.0;
        for (double x : xs) acc += x;
        return acc;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum_rec(xs.first(half)) + pairwise_sum_rec(xs.subspan(half));
}

}  // namespace

double pairwise_sum(std::span<const double> xs) { return pairwise_sum_rec(xs); }

double BlockSum::total() const {
    std::vector<double> parts = partials_;
    parts.push_back(block_);
    return pairwise_sum(parts);
}

MeanStderr mean_stderr(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n == 0) throw std::invalid_argument("mean_stderr: empty sample");
    const double mean = pairwise_sum(xs) / static_cast<double>(n);
    if (n == 1) return {mean, 0.0, 1};
    BlockSum sq;
    for (double x : xs) {
        const double d = x - mean;
        sq.add(d * d);
    }
    const double var = sq.total() / static_cast<double>(n - 1);
    return {mean, std::sqrt(var / static_cast<double>(n)), n};
}

ComplexMeanStderr mean_stderr(std::span<const std::complex<double>> xs) {
    const std::size_t n = xs.size();
    if (n == 0) throw std::invalid_argument("mean_stderr: empty sample");
    BlockSum re, im;
    for (const auto& z : xs) {
        re.add(z.real());
        im.add(z.imag());
    }
    const std::complex<double> mean(re.total() / static_cast<double>(n),
                                    im.total() / static_cast<double>(n));
    if (n == 1) return {mean, 0.0, 1};
    BlockSum sq;
    for (const auto& z : xs) {
        const double dr = z.real() - mean.real();
        const double di = z.imag() - mean.imag();
        sq.add(dr * dr + di * di);
    }
    const double var = sq.total() / static_cast<double>(n - 1);
    return {mean, std::sqrt(var / static_cast<double>(n)), n};
}

double kolmogorov_q(double x) {
    if (x <= 0.0) return 1.0;
    const double e = -2.0 * x * x;
    double acc = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = 2.0 * std::exp(e * k * k);
        acc += (k % 2 == 1) ? term : -term;
        if (term < 1e-16) break;
    }
    return std::clamp(acc, 0.0, 1.0);
}

KsResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf) {
    const std::size_t n = samples.size();
    if (n == 0) throw std::invalid_argument("ks_test: empty sample");
    std::sort(samples.begin(), samples.end());
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, f - static_cast<double>(i) / static_cast<double>(n));
        d = std::max(d, static_cast<double>(i + 1) / static_cast<double>(n) - f);
    }
    const double sn = std::sqrt(static_cast<double>(n));
    const double p = kolmogorov_q((sn + 0.12 + 0.11 / sn) * d);
    return {d, p};
}

double gamma_cdf(double shape, double s) {
    if (!(shape > 0.0)) throw std::domain_error("gamma_cdf: shape must be positive");
    if (s <= 0.0) return 0.0;
    return boost::math::gamma_p(shape, s);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace gammanoise
