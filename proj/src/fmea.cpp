#include "ffmea/fmea.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "ffmea/errors.hpp"

namespace ffmea {

namespace {

constexpr double kWeightSumTolerance = 1e-9;

std::string describe_row(const FailureModeRecord& record, std::size_t index) {
  const std::size_t row = record.source_row != 0 ? record.source_row : index + 1;
  return "row " + std::to_string(row);
}

void check_rating(int value, const char* field, const std::string& where) {
  if (value < kMinRating || value > kMaxRating) {
    throw ValidationError(where + ": " + field + " rating " + std::to_string(value) + " outside [1, 10]");
  }
}

}  // namespace

void check_weights(const FactorWeights& w) {
  for (double v : {w.severity, w.occurrence, w.detection}) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw ConfigError("factor weights must be positive");
    }
  }
  const double sum = w.severity + w.occurrence + w.detection;
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    std::ostringstream os;
    os << "factor weights must sum to 1 (got " << sum << ")";
    throw ConfigError(os.str());
  }
}

std::size_t generated_consequent(std::size_t s_index, std::size_t o_index, std::size_t d_index,
                                 std::size_t output_sets, const FactorWeights& w) {
  const double mix = w.severity * static_cast<double>(s_index) + w.occurrence * static_cast<double>(o_index) +
                     w.detection * static_cast<double>(d_index);
  // Half-way values such as 2.5 come out as 2.4999999999999996; the slack
  // keeps them rounding up.
  const double rounded = std::floor(mix + 0.5 + kWeightSumTolerance);
  const double clamped = std::clamp(rounded, 1.0, static_cast<double>(output_sets));
  return static_cast<std::size_t>(clamped);
}

std::vector<Rule> generate_rules(const LinguisticVariable& severity, const LinguisticVariable& occurrence,
                                 const LinguisticVariable& detection, const LinguisticVariable& output,
                                 const FactorWeights& weights) {
  check_weights(weights);
  const std::size_t k = output.size();
  if (severity.size() != k || occurrence.size() != k || detection.size() != k) {
    throw ConfigError("rule generation needs the same number of sets on every variable");
  }
  std::vector<Rule> rules;
  rules.reserve(k * k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        const std::size_t c = generated_consequent(i + 1, j + 1, l + 1, k, weights);
        rules.push_back({severity.set(i).label, occurrence.set(j).label, detection.set(l).label,
                         output.set(c - 1).label, 1.0});
      }
    }
  }
  return rules;
}

LinguisticVariable default_severity(const PartitionConfig& config) {
  return make_ruspini_variable("S", config.input_universe, labels::kInput);
}

LinguisticVariable default_occurrence(const PartitionConfig& config) {
  return make_ruspini_variable("O", config.input_universe, labels::kInput);
}

LinguisticVariable default_detection(const PartitionConfig& config) {
  return make_ruspini_variable("D", config.input_universe, labels::kDetection);
}

LinguisticVariable default_output(const PartitionConfig& config) {
  return make_gaussian_output("RPN", config.output_universe, labels::kOutput, config.output_sigma);
}

Fis build_default_fis(const FactorWeights& weights, const PartitionConfig& partitions) {
  auto s = default_severity(partitions);
  auto o = default_occurrence(partitions);
  auto d = default_detection(partitions);
  auto out = default_output(partitions);
  auto rules = generate_rules(s, o, d, out, weights);
  return Fis{RuleBase(std::move(s), std::move(o), std::move(d), std::move(out), std::move(rules)), DefuzzConfig{},
             false};
}

int traditional_rpn(int s, int o, int d) {
  check_rating(s, "severity", "traditional RPN");
  check_rating(o, "occurrence", "traditional RPN");
  check_rating(d, "detection", "traditional RPN");
  return s * o * d;
}

double fuzzy_rpn(const Fis& fis, double s, double o, double d, const OutputSampling& sampling) {
  if (!std::isfinite(s) || !std::isfinite(o) || !std::isfinite(d)) {
    throw ValidationError("fuzzy RPN needs finite ratings");
  }
  const auto aggregated = infer(fis.rule_base, s, o, d, sampling, fis.allow_incomplete);
  try {
    return centroid_defuzzify(aggregated, fis.defuzz).value;
  } catch (const DegenerateOutputError& e) {
    std::ostringstream os;
    os << e.what() << " for input (S=" << s << ", O=" << o << ", D=" << d << ")";
    throw DegenerateOutputError(os.str());
  }
}

double fuzzy_rpn(const Fis& fis, double s, double o, double d, std::size_t samples) {
  return fuzzy_rpn(fis, s, o, d, OutputSampling(fis.rule_base.output(), samples));
}

std::vector<RiskAssessment> assess_register(const std::vector<FailureModeRecord>& records, const Fis& fis,
                                            std::size_t samples) {
  if (records.empty()) {
    throw ValidationError("empty register");
  }
  const OutputSampling sampling(fis.rule_base.output(), samples);
  std::vector<RiskAssessment> out;
  out.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    const std::string where = describe_row(r, i);
    check_rating(r.s, "severity", where);
    check_rating(r.o, "occurrence", where);
    check_rating(r.d, "detection", where);
    out.push_back({r, r.s * r.o * r.d, fuzzy_rpn(fis, r.s, r.o, r.d, sampling), 0, 0});
  }

  std::vector<std::size_t> order(out.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto by_factors = [&](std::size_t a, std::size_t b) {
    const auto& ra = out[a].record;
    const auto& rb = out[b].record;
    if (ra.s != rb.s) return ra.s > rb.s;
    if (ra.o != rb.o) return ra.o > rb.o;
    if (ra.d != rb.d) return ra.d > rb.d;
    return a < b;
  };

  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (out[a].t_rpn != out[b].t_rpn) return out[a].t_rpn > out[b].t_rpn;
    if (out[a].f_rpn != out[b].f_rpn) return out[a].f_rpn > out[b].f_rpn;
    return by_factors(a, b);
  });
  for (std::size_t rank = 0; rank < order.size(); ++rank) out[order[rank]].t_rank = static_cast<int>(rank + 1);

  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (out[a].f_rpn != out[b].f_rpn) return out[a].f_rpn > out[b].f_rpn;
    if (out[a].t_rpn != out[b].t_rpn) return out[a].t_rpn > out[b].t_rpn;
    return by_factors(a, b);
  });
  for (std::size_t rank = 0; rank < order.size(); ++rank) out[order[rank]].f_rank = static_cast<int>(rank + 1);

  return out;
}

std::vector<double> average_ranks(std::span<const double> values, bool descending) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return descending ? values[a] > values[b] : values[a] < values[b];
  });
  std::vector<double> ranks(n);
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start + 1;
    while (end < n && values[order[end]] == values[order[start]]) ++end;
    // Positions start..end-1 share the mean of ranks start+1..end.
    const double mean = 0.5 * static_cast<double>(start + 1 + end);
    for (std::size_t k = start; k < end; ++k) ranks[order[k]] = mean;
    start = end;
  }
  return ranks;
}

double spearman_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw ParameterError("spearman needs equally sized samples");
  }
  const std::size_t n = x.size();
  if (n < 2) {
    throw ValidationError("spearman needs at least 2 observations");
  }
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);

  auto tie_term = [](const std::vector<double>& ranks) {
    std::map<double, std::size_t> counts;
    for (double r : ranks) ++counts[r];
    double t = 0.0;
    for (const auto& [rank, c] : counts) {
      const double tc = static_cast<double>(c);
      t += (tc * tc * tc - tc) / 12.0;
    }
    return t;
  };

  const double nn = static_cast<double>(n);
  const double base = (nn * nn * nn - nn) / 12.0;
  const double sx = base - tie_term(rx);
  const double sy = base - tie_term(ry);
  if (sx <= 0.0 || sy <= 0.0) return 0.0;
  double d2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = rx[i] - ry[i];
    d2 += d * d;
  }
  const double rho = (sx + sy - d2) / (2.0 * std::sqrt(sx * sy));
  return std::clamp(rho, -1.0, 1.0);
}

RankingComparison compare_rankings(const std::vector<RiskAssessment>& assessments) {
  if (assessments.size() < 2) {
    throw ValidationError("ranking comparison needs at least 2 records");
  }
  std::vector<double> t(assessments.size());
  std::vector<double> f(assessments.size());
  for (std::size_t i = 0; i < assessments.size(); ++i) {
    t[i] = static_cast<double>(assessments[i].t_rpn);
    f[i] = assessments[i].f_rpn;
  }

  RankingComparison cmp;
  cmp.spearman = spearman_correlation(t, f);
  cmp.displaced.reserve(assessments.size());
  for (std::size_t i = 0; i < assessments.size(); ++i) {
    const auto& a = assessments[i];
    cmp.displaced.push_back({i, a.t_rank, a.f_rank, a.f_rank - a.t_rank});
  }

  std::map<int, std::vector<std::size_t>, std::greater<>> groups;
  for (std::size_t i = 0; i < assessments.size(); ++i) groups[assessments[i].t_rpn].push_back(i);
  for (auto& [rpn, members] : groups) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end(),
              [&](std::size_t a, std::size_t b) { return assessments[a].t_rank < assessments[b].t_rank; });
    EqualRpnGroup g{rpn, members, {}};
    for (auto m : members) g.f_rpns.push_back(assessments[m].f_rpn);
    cmp.equal_trpn_groups.push_back(std::move(g));
  }
  return cmp;
}

}  // namespace ffmea
