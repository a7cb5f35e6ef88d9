#pragma once

#include <cstddef>
#include <vector>

namespace gammanoise {

/// Coefficients of a univariate polynomial / truncated power series in the
/// monomial basis, ascending powers.
using PolySeries = std::vector<double>;

/// Horner evaluation.
double poly_eval(const PolySeries& p, double x);

/// Product truncated at degree n_max.
PolySeries series_mul(const PolySeries& a, const PolySeries& b, std::size_t n_max);

/// Composition outer(inner(x)) truncated at degree n_max. The inner series
/// must have zero constant term, otherwise the formal composition is not
/// defined degree-by-degree and the call is rejected.
PolySeries series_compose(const PolySeries& outer, const PolySeries& inner,
                          std::size_t n_max);

}  // namespace gammanoise
