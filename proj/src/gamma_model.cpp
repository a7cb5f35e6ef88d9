#include "gammanoise/gamma_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gammanoise/quadrature.hpp"

namespace gammanoise {

namespace {

// Beyond this point the remaining tail of e^(-u)/u is below 1e-21 of the
// head, under any tolerance used here.
constexpr double kTailCutoff = 45.0;

}  // namespace

std::complex<double> log_cf(const ComplexStepFunction& theta) {
    const std::complex<double> i(0.0, 1.0);
    std::complex<double> acc = 0.0;
    for (std::size_t k = 0; k < theta.size(); ++k) {
        const std::complex<double> z = 1.0 - i * theta.value(k);
        if (z.imag() == 0.0 && z.real() <= 0.0)
            throw std::domain_error("log_cf: 1 - i*theta lies on the branch cut at cell " +
                                    std::to_string(k));
        acc -= theta.partition().length(k) * std::log(z);
    }
    return acc;
}

std::complex<double> log_cf(const StepFunction& theta) { return log_cf(complexify(theta)); }

std::complex<double> cf(const ComplexStepFunction& theta) { return std::exp(log_cf(theta)); }

std::complex<double> cf(const StepFunction& theta) { return std::exp(log_cf(theta)); }

double gamma_density(double shape, double s) {
    if (!(shape > 0.0)) throw std::domain_error("gamma_density: shape must be positive");
    if (s <= 0.0) return 0.0;
    return std::exp((shape - 1.0) * std::log(s) - s - std::lgamma(shape));
}

double levy_density(double u) {
    if (!(u > 0.0)) throw std::domain_error("levy_density: support is (0, inf)");
    return std::exp(-u) / u;
}

double levy_tail_mass(double delta) {
    if (!(delta > 0.0))
        throw std::domain_error("levy_tail_mass: delta must be positive (infinite mass at 0)");
    const double split = std::max(delta, 1.0);
    double head = 0.0;
    if (delta < split) {
        // integral_delta^1 e^(-u)/u du under u = e^v becomes
        // integral_{log delta}^0 exp(-e^v) dv, with a smooth bounded integrand.
        head = integrate([](double v) { return std::exp(-std::exp(v)); },
                         std::log(delta), 0.0, 0.5e-12);
    }
    const double tail = integrate([](double u) { return std::exp(-u) / u; },
                                  split, split + kTailCutoff, 0.5e-12);
    return head + tail;
}

double levy_small_jump_mean(double delta) {
    if (!(delta > 0.0)) throw std::domain_error("levy_small_jump_mean: delta must be positive");
    return -std::expm1(-delta);
}

std::vector<double> alpha_mu_series(int n_max) {
    if (n_max < 0) throw std::invalid_argument("alpha_mu_series: n_max must be >= 0");
    std::vector<double> coeffs(static_cast<std::size_t>(n_max) + 1, -1.0);
    coeffs[0] = 0.0;
    return coeffs;
}

const LevyTriple& LevyTriple::gamma_noise() {
    static const LevyTriple triple{
        integrate([](double u) { return std::exp(-u) / (1.0 + u * u); }, 0.0, kTailCutoff,
                  1e-13),
        0.0};
    return triple;
}

}  // namespace gammanoise
