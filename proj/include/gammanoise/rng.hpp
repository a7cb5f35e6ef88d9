#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace gammanoise {

/// Philox4x32-10 counter-based generator (Salmon et al., "Parallel random
/// numbers: as easy as 1, 2, 3", SC 2011). Keyed by (seed, stream): every
/// (seed, path index) pair owns an independent counter space, so paths can
/// be generated in any order, or in parallel, without changing results.
class Philox {
public:
    Philox(std::uint64_t seed, std::uint64_t stream) : buffered_(0) {
        key_[0] = static_cast<std::uint32_t>(seed);
        key_[1] = static_cast<std::uint32_t>(seed >> 32);
        counter_[0] = 0;
        counter_[1] = 0;
        counter_[2] = static_cast<std::uint32_t>(stream);
        counter_[3] = static_cast<std::uint32_t>(stream >> 32);
    }

    std::uint64_t next_u64() {
        if (buffered_ == 0) refill();
        --buffered_;
        return block_[buffered_];
    }

    /// Uniform on [0, 1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform on the open interval (0, 1); safe as a log() argument.
    double next_open() {
        return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
    }

    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()() { return next_u64(); }

private:
    void refill() {
        std::uint32_t c0 = counter_[0], c1 = counter_[1], c2 = counter_[2], c3 = counter_[3];
        std::uint32_t k0 = key_[0], k1 = key_[1];
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * c0;
            const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * c2;
            const std::uint32_t n0 =
                static_cast<std::uint32_t>(p1 >> 32) ^ c1 ^ k0;
            const std::uint32_t n1 = static_cast<std::uint32_t>(p1);
            const std::uint32_t n2 =
                static_cast<std::uint32_t>(p0 >> 32) ^ c3 ^ k1;
            const std::uint32_t n3 = static_cast<std::uint32_t>(p0);
            c0 = n0;
            c1 = n1;
            c2 = n2;
            c3 = n3;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        block_[0] = (std::uint64_t{c0} << 32) | c1;
        block_[1] = (std::uint64_t{c2} << 32) | c3;
        buffered_ = 2;
        // 64-bit block counter in words 0..1; words 2..3 hold the stream id.
        if (++counter_[0] == 0) ++counter_[1];
    }

    std::uint32_t key_[2];
    std::uint32_t counter_[4];
    std::uint64_t block_[2];
    int buffered_;
};

/// Standard normal via the Marsaglia polar method.
inline double sample_normal(Philox& rng) {
    for (;;) {
        const double u = 2.0 * rng.next_double() - 1.0;
        const double v = 2.0 * rng.next_double() - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
    }
}

/// Gamma(shape, 1) via the Marsaglia-Tsang squeeze/acceptance method
/// (ACM TOMS 2000), valid for shape >= 1; shapes below 1 use the boosting
/// identity Gamma(t) = Gamma(t+1) * U^(1/t).
inline double sample_gamma(Philox& rng, double shape) {
    if (!(shape > 0.0)) throw std::domain_error("sample_gamma: shape must be positive");
    if (shape < 1.0) {
        const double boosted = sample_gamma(rng, shape + 1.0);
        return boosted * std::exp(std::log(rng.next_open()) / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = sample_normal(rng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.next_open();
        if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

/// Poisson(mean) by counting unit-rate exponential arrivals; exact for any
/// mean, O(mean) draws.
inline std::uint64_t sample_poisson(Philox& rng, double mean) {
    if (mean < 0.0) throw std::domain_error("sample_poisson: mean must be >= 0");
    double acc = 0.0;
    std::uint64_t n = 0;
    for (;;) {
        acc += -std::log(rng.next_open());
        if (acc > mean) return n;
        ++n;
    }
}

}  // namespace gammanoise
