#pragma once

#include <complex>
#include <vector>

#include "gammanoise/partition.hpp"

namespace gammanoise {

/// Log characteristic functional of the gamma noise measure evaluated at a
/// step function theta:
///
///   log C(theta) = -sum_k t_k log(1 - i lambda_k)     (principal branch)
///
/// Real-valued theta never reaches the branch cut; complex values with
/// 1 - i*lambda on the cut (Re <= 0, Im == 0) are rejected with the
/// offending cell named.
std::complex<double> log_cf(const ComplexStepFunction& theta);
std::complex<double> log_cf(const StepFunction& theta);

/// exp(log_cf(theta)); for a single cell of length t and real value lambda
/// this is (1 - i lambda)^(-t), the Gamma(t) characteristic function.
std::complex<double> cf(const ComplexStepFunction& theta);
std::complex<double> cf(const StepFunction& theta);

/// Gamma(shape, 1) density s^(shape-1) e^(-s) / Gamma(shape) for s > 0,
/// zero otherwise. shape must be positive.
double gamma_density(double shape, double s);

/// Levy density of the gamma subordinator, e^(-u)/u on (0, inf).
double levy_density(double u);

/// Mass of jumps above delta per unit time:
///   integral_delta^inf e^(-u)/u du
/// (the exponential integral E1(delta)), evaluated by adaptive quadrature
/// to absolute tolerance 1e-12. The log-singular head is integrated under
/// the substitution u = e^v. delta must be positive: the Levy measure is
/// infinite at 0.
double levy_tail_mass(double delta);

/// Expected jump mass per unit time lost by truncating jumps below delta:
///   integral_0^delta u e^(-u)/u du = 1 - e^(-delta),
/// which tends to the full first moment m1 = 1 as delta grows.
double levy_small_jump_mean(double delta);

/// Power-series coefficients of alpha(z) = z / (z - 1) at 0 up to degree
/// n_max: [0, -1, -1, ...]. alpha is an involution: alpha(alpha(z)) = z.
std::vector<double> alpha_mu_series(int n_max);

/// Levy-Khinchine data of the gamma subordinator: drift constant
/// a = integral_0^inf e^(-u)/(1+u^2) du, no Gaussian part, and the jump
/// density e^(-u)/u. The drift is evaluated once by quadrature and exposed
/// read-only.
struct LevyTriple {
    double drift;
    double gaussian_variance;  // identically 0 for this process

    double density(double u) const { return levy_density(u); }

    static const LevyTriple& gamma_noise();
};

}  // namespace gammanoise
