#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ffmea/membership.hpp"

namespace ffmea {

inline constexpr std::size_t kDefaultSamples = 1001;

/// IF S=s AND O=o AND D=d THEN RPN=consequent, scaled by weight.
struct Rule {
  std::string s;
  std::string o;
  std::string d;
  std::string consequent;
  double weight = 1.0;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Three input variables (severity, occurrence, detection), one output
/// variable and the rules over them. Rules may reference labels that do not
/// exist or repeat an antecedent; validate_rulebase() reports both and
/// infer() refuses a base with unknown labels.
class RuleBase {
 public:
  RuleBase(LinguisticVariable severity, LinguisticVariable occurrence, LinguisticVariable detection,
           LinguisticVariable output, std::vector<Rule> rules);

  const LinguisticVariable& severity() const noexcept { return inputs_[0]; }
  const LinguisticVariable& occurrence() const noexcept { return inputs_[1]; }
  const LinguisticVariable& detection() const noexcept { return inputs_[2]; }
  const std::array<LinguisticVariable, 3>& inputs() const noexcept { return inputs_; }
  const LinguisticVariable& output() const noexcept { return output_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }

  /// Number of antecedent label combinations (125 for five sets per input).
  std::size_t combination_count() const noexcept;
  /// One rule per combination, every label known.
  bool is_complete() const noexcept { return complete_; }
  bool has_unknown_labels() const noexcept { return unknown_labels_; }

  friend bool operator==(const RuleBase&, const RuleBase&) = default;

 private:
  friend std::vector<double> consequent_heights(const RuleBase& rb, double s, double o, double d);

  struct Compiled {
    std::size_t s, o, d, out;
    double weight;
    friend bool operator==(const Compiled&, const Compiled&) = default;
  };

  std::array<LinguisticVariable, 3> inputs_;
  LinguisticVariable output_;
  std::vector<Rule> rules_;
  std::vector<Compiled> compiled_;
  bool complete_ = false;
  bool unknown_labels_ = false;
};

/// Degrees of a fuzzy set sampled at n evenly spaced abscissae of a universe.
struct SampledFuzzySet {
  Universe universe;
  std::vector<double> degrees;

  std::size_t size() const noexcept { return degrees.size(); }
  double abscissa(std::size_t i) const {
    return universe.lo + static_cast<double>(i) * (universe.hi - universe.lo) / static_cast<double>(degrees.size() - 1);
  }

  friend bool operator==(const SampledFuzzySet&, const SampledFuzzySet&) = default;
};

/// Every output set sampled once at n points, so repeated inference calls
/// do not re-evaluate the consequent curves.
class OutputSampling {
 public:
  OutputSampling(const LinguisticVariable& output, std::size_t samples);

  std::size_t samples() const noexcept { return samples_; }
  const Universe& universe() const noexcept { return universe_; }
  const std::vector<double>& set_degrees(std::size_t set) const { return table_.at(set); }
  std::size_t set_count() const noexcept { return table_.size(); }

 private:
  Universe universe_;
  std::size_t samples_;
  std::vector<std::vector<double>> table_;
};

struct InferOptions {
  std::size_t samples = kDefaultSamples;
  bool allow_incomplete = false;
};

double fire_rule(const Rule& rule, const FuzzifiedValue& severity, const FuzzifiedValue& occurrence,
                 const FuzzifiedValue& detection);

/// Clipping height per output set: the largest rule activation among rules
/// with that consequent.
std::vector<double> consequent_heights(const RuleBase& rb, double s, double o, double d);

/// Mamdani inference: min conjunction, min implication, max aggregation.
SampledFuzzySet infer(const RuleBase& rb, double s, double o, double d, const InferOptions& options = {});
SampledFuzzySet infer(const RuleBase& rb, double s, double o, double d, const OutputSampling& sampling,
                      bool allow_incomplete = false);

struct LabelTriple {
  std::string s;
  std::string o;
  std::string d;

  std::string to_string() const;
  friend bool operator==(const LabelTriple&, const LabelTriple&) = default;
};

struct DuplicateAntecedent {
  LabelTriple antecedent;
  std::vector<std::size_t> rule_indices;
  std::vector<std::string> consequents;
};

struct UnknownLabel {
  std::size_t rule_index;
  std::string variable;
  std::string label;
};

/// A rule whose antecedent is one step riskier than another rule's but whose
/// consequent is less risky.
struct MonotonicityViolation {
  LabelTriple lower;
  LabelTriple higher;
  std::string lower_consequent;
  std::string higher_consequent;
};

struct ValidationReport {
  std::size_t rule_count = 0;
  std::size_t combination_count = 0;
  std::vector<DuplicateAntecedent> duplicates;
  std::vector<UnknownLabel> unknown_labels;
  std::vector<LabelTriple> missing;
  std::vector<MonotonicityViolation> monotonicity;

  std::size_t findings() const noexcept {
    return duplicates.size() + unknown_labels.size() + missing.size() + monotonicity.size();
  }
  bool complete() const noexcept { return missing.empty() && duplicates.empty() && unknown_labels.empty(); }
};

ValidationReport validate_rulebase(const RuleBase& rb);

}  // namespace ffmea
