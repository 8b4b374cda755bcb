#pragma once

#include <span>
#include <vector>

namespace climakg::analytics {

struct Quartiles {
  double q1 = 0;
  double median = 0;
  double q3 = 0;
};

// Linear-interpolation quantile of already sorted values: h = (n-1)p,
// v[floor h] + (h - floor h)(v[floor h + 1] - v[floor h]).
// Throws EmptyInput for an empty span.
double SortedQuantile(std::span<const double> sorted, double p);

// Quartiles of arbitrary-order values. Throws EmptyInput.
Quartiles ComputeQuartiles(std::vector<double> values);

}  // namespace climakg::analytics
