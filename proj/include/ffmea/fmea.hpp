#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ffmea/defuzz.hpp"
#include "ffmea/inference.hpp"
#include "ffmea/membership.hpp"

namespace ffmea {

inline constexpr int kMinRating = 1;
inline constexpr int kMaxRating = 10;

/// Assembled fuzzy inference system: variables and rules plus the defuzzifier.
struct Fis {
  RuleBase rule_base;
  DefuzzConfig defuzz;
  bool allow_incomplete = false;

  friend bool operator==(const Fis&, const Fis&) = default;
};

/// Relative importance of severity, occurrence and detection in the
/// generated rule base. Must be positive and sum to 1.
struct FactorWeights {
  double severity = 0.4;
  double occurrence = 0.3;
  double detection = 0.3;
};

void check_weights(const FactorWeights& weights);

/// Complete rule base whose consequent index is round(wS·iS + wO·iO + wD·iD)
/// over 1-based risk indices, ties rounding up, clamped to the output range.
/// All four variables must carry the same number of sets.
std::vector<Rule> generate_rules(const LinguisticVariable& severity, const LinguisticVariable& occurrence,
                                 const LinguisticVariable& detection, const LinguisticVariable& output,
                                 const FactorWeights& weights);

/// The 1-based consequent index the generator assigns to an antecedent.
std::size_t generated_consequent(std::size_t s_index, std::size_t o_index, std::size_t d_index,
                                 std::size_t output_sets, const FactorWeights& weights);

LinguisticVariable default_severity(const PartitionConfig& config = {});
LinguisticVariable default_occurrence(const PartitionConfig& config = {});
LinguisticVariable default_detection(const PartitionConfig& config = {});
LinguisticVariable default_output(const PartitionConfig& config = {});

Fis build_default_fis(const FactorWeights& weights = {}, const PartitionConfig& partitions = {});

int traditional_rpn(int s, int o, int d);

/// fuzzify -> infer -> centroid. Ratings may be real-valued.
double fuzzy_rpn(const Fis& fis, double s, double o, double d, std::size_t samples = kDefaultSamples);
double fuzzy_rpn(const Fis& fis, double s, double o, double d, const OutputSampling& sampling);

struct FailureModeRecord {
  std::string component;
  std::string failure_mode;
  int s = kMinRating;
  int o = kMinRating;
  int d = kMinRating;
  /// Line in the source file, 0 when not loaded from a file.
  std::size_t source_row = 0;

  friend bool operator==(const FailureModeRecord&, const FailureModeRecord&) = default;
};

struct RiskAssessment {
  FailureModeRecord record;
  int t_rpn = 0;
  double f_rpn = 0.0;
  int t_rank = 0;
  int f_rank = 0;

  friend bool operator==(const RiskAssessment&, const RiskAssessment&) = default;
};

/// Scores every record under both schemes and ranks them (1 = riskiest).
///
/// T-RPN ties are broken by higher F-RPN, then higher S, O, D, then input
/// order. F-RPN ties are broken by higher T-RPN, then S, O, D, then input
/// order. Output order matches input order.
std::vector<RiskAssessment> assess_register(const std::vector<FailureModeRecord>& records, const Fis& fis,
                                            std::size_t samples = kDefaultSamples);

struct RankDisplacement {
  std::size_t index;
  int t_rank;
  int f_rank;
  /// f_rank - t_rank; positive means the fuzzy scheme ranks it lower.
  int delta;
};

struct EqualRpnGroup {
  int t_rpn;
  std::vector<std::size_t> members;
  std::vector<double> f_rpns;
};

struct RankingComparison {
  double spearman = 0.0;
  std::vector<RankDisplacement> displaced;
  std::vector<EqualRpnGroup> equal_trpn_groups;
};

/// Spearman correlation of raw T-RPN against raw F-RPN (average ranks for
/// ties), per-record rank displacement, and groups sharing one T-RPN.
RankingComparison compare_rankings(const std::vector<RiskAssessment>& assessments);

/// 1-based average ranks; the largest value gets rank 1 when descending.
std::vector<double> average_ranks(std::span<const double> values, bool descending = true);

/// Tie-corrected Spearman rho. Returns 0 when either side has no spread.
double spearman_correlation(std::span<const double> x, std::span<const double> y);

}  // namespace ffmea
