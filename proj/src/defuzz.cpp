#include "ffmea/defuzz.hpp"

#include <algorithm>

#include "ffmea/errors.hpp"

namespace ffmea {

DefuzzResult centroid_defuzzify(const SampledFuzzySet& set, const DefuzzConfig& config) {
  const std::size_t n = set.size();
  if (n < 2) {
    throw ParameterError("centroid needs at least 2 samples");
  }
  // The uniform step cancels between numerator and denominator; offsets are
  // measured from lo so a shifted universe shifts the result by exactly lo.
  const double step = (set.universe.hi - set.universe.lo) / static_cast<double>(n - 1);
  double moment = 0.0;
  double area = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = (i == 0 || i + 1 == n) ? 0.5 * set.degrees[i] : set.degrees[i];
    moment += static_cast<double>(i) * w;
    area += w;
  }
  if (!(area > 0.0)) {
    if (config.zero_area == ZeroAreaPolicy::kMidpoint) {
      return {set.universe.midpoint(), true};
    }
    throw DegenerateOutputError("aggregated output set has zero area");
  }
  const double value = set.universe.lo + step * (moment / area);
  return {std::clamp(value, set.universe.lo, set.universe.hi), false};
}

}  // namespace ffmea
