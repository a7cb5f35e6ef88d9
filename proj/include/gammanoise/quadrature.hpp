#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace gammanoise {

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b] to the
/// requested absolute tolerance. Throws std::runtime_error if the bisection
/// depth limit is reached before the local error estimate drops below the
/// local tolerance share.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12);

/// Fixed quadrature rule: sum_i weights[i] * f(nodes[i]).
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    double apply(const std::function<double(double)>& f) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

/// n-point generalized Gauss-Laguerre rule for the normalized gamma weight
/// s^(shape-1) e^(-s) / Gamma(shape) on (0, inf); weights sum to 1, so the
/// rule computes expectations under Gamma(shape, 1) exactly for polynomials
/// of degree <= 2n-1. Nodes and weights come from the Golub-Welsch
/// eigendecomposition of the Jacobi matrix.
QuadratureRule gauss_laguerre(std::size_t n, double shape);

/// n-point Gauss-Legendre rule on [a, b], same Golub-Welsch construction.
QuadratureRule gauss_legendre(std::size_t n, double a, double b);

}  // namespace gammanoise
