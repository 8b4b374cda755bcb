#include "climakg/analytics/quantiles.hpp"

#include <algorithm>
#include <cmath>

#include "climakg/errors.hpp"

namespace climakg::analytics {

double SortedQuantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw EmptyInput("quantile of an empty sample");
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

Quartiles ComputeQuartiles(std::vector<double> values) {
  if (values.empty()) throw EmptyInput("quartiles of an empty sample");
  std::sort(values.begin(), values.end());
  return Quartiles{SortedQuantile(values, 0.25), SortedQuantile(values, 0.5),
                   SortedQuantile(values, 0.75)};
}

}  // namespace climakg::analytics
