#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "gammanoise/partition.hpp"
#include "gammanoise/series.hpp"

namespace gammanoise {

// ---------------------------------------------------------------------------
// Univariate polynomial systems
// ---------------------------------------------------------------------------

/// Value of the degree-n orthogonal polynomial for the Gamma(shape, 1) weight,
/// normalised so the constant term is Gamma(n + shape) / (n! Gamma(shape)).
/// Evaluated by the three-term recurrence
///   (n+1) L_{n+1}(s) = (2n + shape - s) L_n(s) - (n + shape - 1) L_{n-1}(s).
double laguerre_eval(int n, double shape, double s);

/// Monomial coefficients of the same polynomial (size n + 1), built by running
/// the recurrence on coefficient vectors.
PolySeries laguerre_coeffs(int n, double shape);

/// Coefficient vectors for degrees 0..n_max.
std::vector<PolySeries> laguerre_family(int n_max, double shape);

/// |sum_{n<=n_max} L_n(s) lambda^n  -  (1-lambda)^{-shape} exp(s lambda/(lambda-1))|.
/// Requires |lambda| < 1; the gap shrinks geometrically in n_max.
double generating_function_check(double shape, double s, double lambda, int n_max);

/// Monomial coefficients of the degree-n Appell polynomial generated by
/// exp(s lambda) (1 - lambda)^shape:  coefficient of s^{n-j} is
/// (-1)^j binom(shape, j) / (n-j)!.
PolySeries appell_coeffs(int n, double shape);

/// Coefficient vectors for degrees 0..n_max.
std::vector<PolySeries> appell_family(int n_max, double shape);

/// Coefficients of the series substitution lambda -> lambda/(lambda - 1),
/// truncated at degree n_max: [0, -1, -1, ..., -1]. The substitution is an
/// involution of the unit disc.
PolySeries alpha_substitution_series(int n_max);

/// Re-expands a graded polynomial family after substituting `inner` for the
/// generating parameter: given A_m with sum_m A_m(s) lambda^m, returns B_n with
/// sum_n B_n(s) lambda^n = sum_m A_m(s) inner(lambda)^m, degrees 0..size-1.
/// `inner` must have zero constant term.
std::vector<PolySeries> compose_family(const std::vector<PolySeries>& family,
                                       const PolySeries& inner);

/// compose_family with the lambda/(lambda-1) substitution. Applied to the
/// Appell family it reproduces the Laguerre family.
std::vector<PolySeries> compose_with_alpha(const std::vector<PolySeries>& family);

// ---------------------------------------------------------------------------
// Multi-index chaos space
// ---------------------------------------------------------------------------

/// Occupation numbers per partition cell; entry k is the polynomial degree in
/// the k-th renormalised increment.
using MultiIndex = std::vector<int>;

int total_degree(const MultiIndex& n);

/// Squared norm of the chaos basis vector J_n over the given partition:
///   prod_k Gamma(n_k + t_k) / (n_k! Gamma(t_k)),  t_k = cell length.
double chaos_norm(const MultiIndex& n, const Partition& partition);

/// Value of the basis vector J_n at a realised increment vector:
///   prod_k L_{n_k}^{(t_k)}(G_k).
double basis_eval(const MultiIndex& n, const Partition& partition,
                  std::span<const double> increments);

/// Enumeration of all multi-indices with total degree <= max_degree over a
/// fixed partition, in graded lexicographic order (degree ascending, then
/// lexicographic with the first cell most significant). Holds the norm table
/// and the combinatorial tables used by the convolution product.
class ChaosSpace {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  ChaosSpace(Partition partition, int max_degree);

  const Partition& partition() const { return partition_; }
  int max_degree() const { return max_degree_; }
  std::size_t dimension() const { return indices_.size(); }

  const MultiIndex& index(std::size_t pos) const { return indices_[pos]; }
  const std::vector<MultiIndex>& indices() const { return indices_; }

  /// Position of a multi-index in the graded-lex enumeration; npos when the
  /// index lies outside the truncation.
  std::size_t position(const MultiIndex& n) const;

  /// Squared norm of the basis vector at the given position.
  double norm(std::size_t pos) const { return norms_[pos]; }
  std::span<const double> norms() const { return norms_; }

  int degree_of(std::size_t pos) const { return degrees_[pos]; }

  /// First position of each total degree; entry max_degree+1 is dimension().
  std::span<const std::size_t> degree_offsets() const { return degree_offsets_; }

  /// Position of index(pos) + e_cell, or npos if that leaves the truncation.
  std::size_t raised(std::size_t pos, std::size_t cell) const {
    return raised_[pos * partition_.size() + cell];
  }

  /// Coefficient-wise convolution out_p = sum_{i+j=p} a_i b_j over multi-index
  /// sums inside the truncation. Symmetric pairs are accumulated together so
  /// the result is bitwise identical under swapping a and b. `out` must not
  /// alias the inputs.
  void convolve(std::span<const double> a, std::span<const double> b,
                std::span<double> out) const;

  /// l1 upper bound for the convolution mass falling beyond max_degree:
  /// sum over degree pairs (g, h) with g + h > max_degree of |a|_g |b|_h.
  double convolution_overflow(std::span<const double> a,
                              std::span<const double> b) const;

  /// out_{n + e_cell} = x_n; top-degree terms leave the truncation and are
  /// dropped. `out` must not alias `x`.
  void raise_into(std::span<const double> x, std::size_t cell,
                  std::span<double> out) const;

  /// l1 mass dropped by raise_into (the top-degree slice of x).
  double raise_overflow(std::span<const double> x) const;

  friend bool operator==(const ChaosSpace& a, const ChaosSpace& b) {
    return a.max_degree_ == b.max_degree_ && a.partition_ == b.partition_;
  }

 private:
  Partition partition_;
  int max_degree_;
  std::vector<MultiIndex> indices_;
  std::vector<int> degrees_;
  std::vector<double> norms_;
  std::vector<std::size_t> degree_offsets_;
  std::vector<std::size_t> raised_;
  // Per output position, the list of canonical pairs (i <= j) with
  // index(i) + index(j) = index(out), flattened with offsets.
  std::vector<std::size_t> pair_offsets_;
  std::vector<std::uint32_t> pair_lo_;
  std::vector<std::uint32_t> pair_hi_;
};

// ---------------------------------------------------------------------------
// Chaos expansions
// ---------------------------------------------------------------------------

/// A truncated chaos expansion phi = sum_n c_n J_n, stored through its
/// shifted coefficients s_n = nu_n c_n (the coefficients of the expansion's
/// polynomial transform). Carries an l1 ledger of mass dropped beyond the
/// truncation by the operations that produced it.
class ChaosElement {
 public:
  explicit ChaosElement(std::shared_ptr<const ChaosSpace> space);

  static ChaosElement zero(std::shared_ptr<const ChaosSpace> space);
  static ChaosElement constant(std::shared_ptr<const ChaosSpace> space, double c);
  /// The basis vector J_n (transform coefficient nu_n at n, zero elsewhere).
  static ChaosElement basis(std::shared_ptr<const ChaosSpace> space,
                            const MultiIndex& n);

  const std::shared_ptr<const ChaosSpace>& space_ptr() const { return space_; }
  const ChaosSpace& space() const { return *space_; }

  std::span<const double> s_coeffs() const { return s_; }
  std::span<double> s_coeffs() { return s_; }
  double s_coeff(std::size_t pos) const { return s_[pos]; }
  void set_s_coeff(std::size_t pos, double v) { s_[pos] = v; }

  /// Expansion coefficient c_n = s_n / nu_n.
  double coeff(std::size_t pos) const { return s_[pos] / space_->norm(pos); }

  double expectation() const { return s_[0]; }
  /// sum_{n != 0} c_n^2 nu_n = sum_{n != 0} s_n^2 / nu_n.
  double variance() const;

  double truncation_loss() const { return loss_; }
  void set_truncation_loss(double v) { loss_ = v; }
  void add_truncation_loss(double v) { loss_ += v; }

  ChaosElement& operator+=(const ChaosElement& other);
  ChaosElement& operator-=(const ChaosElement& other);
  ChaosElement& operator*=(double c);

  friend ChaosElement operator+(ChaosElement a, const ChaosElement& b) {
    a += b;
    return a;
  }
  friend ChaosElement operator-(ChaosElement a, const ChaosElement& b) {
    a -= b;
    return a;
  }
  friend ChaosElement operator*(ChaosElement a, double c) {
    a *= c;
    return a;
  }
  friend ChaosElement operator*(double c, ChaosElement a) {
    a *= c;
    return a;
  }
  friend ChaosElement operator-(ChaosElement a) {
    a *= -1.0;
    return a;
  }

 private:
  std::shared_ptr<const ChaosSpace> space_;
  std::vector<double> s_;
  double loss_ = 0.0;
};

/// Largest |s_a - s_b| over positions; spaces must match.
double max_coeff_distance(const ChaosElement& a, const ChaosElement& b);

/// First-order chaos expansion of the smoothed noise <f, noise>:
/// c_0 = sum_k t_k f_k and c_{e_k} = -f_k.
ChaosElement expand_linear(std::shared_ptr<const ChaosSpace> space,
                           const StepFunction& f);

/// Pathwise evaluation sum_n c_n prod_k L_{n_k}^{(t_k)}(G_k) at a realised
/// increment vector.
double evaluate(const ChaosElement& phi, std::span<const double> increments);

}  // namespace gammanoise
