#include "gammanoise/series.hpp"

#include <stdexcept>

namespace gammanoise {

double poly_eval(const PolySeries& p, double x) {
  double acc = 0.0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

PolySeries series_mul(const PolySeries& a, const PolySeries& b, std::size_t n_max) {
  PolySeries out(n_max + 1, 0.0);
  const std::size_t na = std::min(a.size(), n_max + 1);
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i] == 0.0) continue;
    const std::size_t nb = std::min(b.size(), n_max + 1 - i);
    for (std::size_t j = 0; j < nb; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

PolySeries series_compose(const PolySeries& outer, const PolySeries& inner,
                          std::size_t n_max) {
  if (!inner.empty() && inner[0] != 0.0) {
    throw std::invalid_argument(
        "series_compose: inner series must have zero constant term");
  }
  PolySeries acc(n_max + 1, 0.0);
  for (std::size_t i = outer.size(); i-- > 0;) {
    acc = series_mul(acc, inner, n_max);
    acc[0] += outer[i];
  }
  return acc;
}

}  // namespace gammanoise
