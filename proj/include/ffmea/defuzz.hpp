#pragma once

#include "ffmea/inference.hpp"

namespace ffmea {

enum class ZeroAreaPolicy { kError, kMidpoint };

/// Centroid is the only defuzzifier.
struct DefuzzConfig {
  ZeroAreaPolicy zero_area = ZeroAreaPolicy::kError;

  friend bool operator==(const DefuzzConfig&, const DefuzzConfig&) = default;
};

struct DefuzzResult {
  double value;
  /// Set when the aggregated set had zero area and the midpoint was used.
  bool degenerate = false;
};

/// Centre of gravity of the sampled set, integrated with the trapezoidal rule.
DefuzzResult centroid_defuzzify(const SampledFuzzySet& set, const DefuzzConfig& config = {});

}  // namespace ffmea
