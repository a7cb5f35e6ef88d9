#include "gammanoise/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace gammanoise {

namespace {

// Kronrod 15-point abscissae on [0, 1] side (symmetric rule); the odd
// entries are the embedded Gauss-7 abscissae. Constants as in QUADPACK dqk15.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
    double kronrod;
    double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const double fc = f(c);
    double gauss = kWg[3] * fc;
    double kronrod = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double fsum = f(c - dx) + f(c + dx);
        kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
    }
    kronrod *= h;
    gauss *= h;
    return {kronrod, std::abs(kronrod - gauss)};
}

double integrate_rec(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int depth) {
    const PanelResult r = gk15(f, a, b);
    if (r.error <= abs_tol) return r.kronrod;
    if (depth >= 60)
        throw std::runtime_error("integrate: failed to reach requested tolerance");
    const double c = 0.5 * (a + b);
    return integrate_rec(f, a, c, 0.5 * abs_tol, depth + 1) +
           integrate_rec(f, c, b, 0.5 * abs_tol, depth + 1);
}

// Nodes are the eigenvalues of the symmetric tridiagonal Jacobi matrix;
// weights are weight_integral times the squared first components of the
// normalized eigenvectors (Golub & Welsch 1969).
QuadratureRule golub_welsch(const std::vector<double>& diag,
                            const std::vector<double>& offdiag,
                            double weight_integral) {
    const auto n = static_cast<Eigen::Index>(diag.size());
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        jacobi(i, i) = diag[static_cast<std::size_t>(i)];
        if (i > 0) {
            const double b = offdiag[static_cast<std::size_t>(i) - 1];
            jacobi(i, i - 1) = b;
            jacobi(i - 1, i) = b;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi);
    if (eig.info() != Eigen::Success)
        throw std::runtime_error("golub_welsch: eigendecomposition failed");

    QuadratureRule rule;
    rule.nodes.resize(diag.size());
    rule.weights.resize(diag.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        rule.nodes[static_cast<std::size_t>(i)] = eig.eigenvalues()(i);
        const double v0 = eig.eigenvectors()(0, i);
        rule.weights[static_cast<std::size_t>(i)] = weight_integral * v0 * v0;
    }
    return rule;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate: tolerance must be positive");
    if (a == b) return 0.0;
    return integrate_rec(f, a, b, abs_tol, 0);
}

QuadratureRule gauss_laguerre(std::size_t n, double shape) {
    if (n == 0 || !(shape > 0.0))
        throw std::invalid_argument("gauss_laguerre: need n >= 1 and shape > 0");
    // Monic recurrence for Laguerre with parameter alpha = shape - 1:
    //   a_k = 2k + alpha + 1,  b_k = k (k + alpha).
    std::vector<double> diag(n), offdiag(n > 1 ? n - 1 : 0);
    for (std::size_t k = 0; k < n; ++k) diag[k] = 2.0 * static_cast<double>(k) + shape;
    for (std::size_t k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        offdiag[k - 1] = std::sqrt(kk * (kk + shape - 1.0));
    }
    // Probability normalization: the weight integrates to 1.
    return golub_welsch(diag, offdiag, 1.0);
}

QuadratureRule gauss_legendre(std::size_t n, double a, double b) {
    if (n == 0) throw std::invalid_argument("gauss_legendre: need n >= 1");
    std::vector<double> diag(n, 0.0), offdiag(n > 1 ? n - 1 : 0);
    for (std::size_t k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        offdiag[k - 1] = std::sqrt(kk * kk / (4.0 * kk * kk - 1.0));
    }
    QuadratureRule rule = golub_welsch(diag, offdiag, 2.0);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t i = 0; i < n; ++i) {
        rule.nodes[i] = mid + half * rule.nodes[i];
        rule.weights[i] *= half;
    }
    return rule;
}

}  // namespace gammanoise
