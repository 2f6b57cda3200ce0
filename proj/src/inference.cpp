#include "ffmea/inference.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include "ffmea/errors.hpp"

namespace ffmea {

namespace {

std::string format_triple(double s, double o, double d) {
  std::ostringstream os;
  os.precision(17);
  os << "(S=" << s << ", O=" << o << ", D=" << d << ")";
  return os.str();
}

double label_degree(const FuzzifiedValue& fv, const std::string& label, const char* variable) {
  const auto degree = fv.degree(label);
  if (!degree) {
    throw ConfigError(std::string("rule references unknown ") + variable + " label " + label);
  }
  return *degree;
}

}  // namespace

RuleBase::RuleBase(LinguisticVariable severity, LinguisticVariable occurrence, LinguisticVariable detection,
                   LinguisticVariable output, std::vector<Rule> rules)
    : inputs_{std::move(severity), std::move(occurrence), std::move(detection)},
      output_(std::move(output)),
      rules_(std::move(rules)) {
  compiled_.reserve(rules_.size());
  std::vector<char> covered(combination_count(), 0);
  bool duplicate = false;
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    const Rule& rule = rules_[r];
    if (!(rule.weight > 0.0 && rule.weight <= 1.0)) {
      throw ConfigError("rule " + std::to_string(r + 1) + ": weight must lie in (0, 1]");
    }
    const auto s = inputs_[0].index_of(rule.s);
    const auto o = inputs_[1].index_of(rule.o);
    const auto d = inputs_[2].index_of(rule.d);
    const auto out = output_.index_of(rule.consequent);
    if (!s || !o || !d || !out) {
      unknown_labels_ = true;
      continue;
    }
    compiled_.push_back({*s, *o, *d, *out, rule.weight});
    const std::size_t key = (*s * inputs_[1].size() + *o) * inputs_[2].size() + *d;
    if (covered[key]) duplicate = true;
    covered[key] = 1;
  }
  complete_ = !unknown_labels_ && !duplicate && std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

std::size_t RuleBase::combination_count() const noexcept {
  return inputs_[0].size() * inputs_[1].size() * inputs_[2].size();
}

OutputSampling::OutputSampling(const LinguisticVariable& output, std::size_t samples)
    : universe_(output.universe()), samples_(samples) {
  if (samples < 2) {
    throw ParameterError("output sampling needs at least 2 samples");
  }
  const double step = (universe_.hi - universe_.lo) / static_cast<double>(samples - 1);
  table_.reserve(output.size());
  for (const auto& set : output.sets()) {
    std::vector<double> degrees(samples);
    for (std::size_t i = 0; i < samples; ++i) {
      degrees[i] = set.mf(universe_.lo + static_cast<double>(i) * step);
    }
    table_.push_back(std::move(degrees));
  }
}

double fire_rule(const Rule& rule, const FuzzifiedValue& severity, const FuzzifiedValue& occurrence,
                 const FuzzifiedValue& detection) {
  if (!(rule.weight > 0.0 && rule.weight <= 1.0)) {
    throw ConfigError("rule weight must lie in (0, 1]");
  }
  const double conj = std::min({label_degree(severity, rule.s, "S"), label_degree(occurrence, rule.o, "O"),
                                label_degree(detection, rule.d, "D")});
  return rule.weight * conj;
}

std::vector<double> consequent_heights(const RuleBase& rb, double s, double o, double d) {
  if (rb.has_unknown_labels()) {
    throw ConfigError("rule base references unknown labels; run validation");
  }
  thread_local std::vector<double> ds, dos, dd;
  fuzzify_degrees(rb.severity(), s, ds);
  fuzzify_degrees(rb.occurrence(), o, dos);
  fuzzify_degrees(rb.detection(), d, dd);

  std::vector<double> heights(rb.output().size(), 0.0);
  for (const auto& r : rb.compiled_) {
    const double activation = r.weight * std::min({ds[r.s], dos[r.o], dd[r.d]});
    heights[r.out] = std::max(heights[r.out], activation);
  }
  return heights;
}

SampledFuzzySet infer(const RuleBase& rb, double s, double o, double d, const OutputSampling& sampling,
                      bool allow_incomplete) {
  if (!allow_incomplete && !rb.is_complete()) {
    throw ConfigError("rule base is incomplete (" + std::to_string(rb.rules().size()) + " of " +
                      std::to_string(rb.combination_count()) + " combinations)");
  }
  if (sampling.set_count() != rb.output().size()) {
    throw ConfigError("output sampling does not match the rule base output variable");
  }
  const auto heights = consequent_heights(rb, s, o, d);
  if (std::all_of(heights.begin(), heights.end(), [](double h) { return h <= 0.0; })) {
    throw NoRuleFiredError("no rule fired for input " + format_triple(s, o, d));
  }

  SampledFuzzySet result{sampling.universe(), std::vector<double>(sampling.samples(), 0.0)};
  auto& out = result.degrees;
  for (std::size_t c = 0; c < heights.size(); ++c) {
    const double h = heights[c];
    if (h <= 0.0) continue;
    const auto& curve = sampling.set_degrees(c);
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = std::max(out[i], std::min(h, curve[i]));
    }
  }
  return result;
}

SampledFuzzySet infer(const RuleBase& rb, double s, double o, double d, const InferOptions& options) {
  return infer(rb, s, o, d, OutputSampling(rb.output(), options.samples), options.allow_incomplete);
}

std::string LabelTriple::to_string() const { return "S=" + s + " O=" + o + " D=" + d; }

ValidationReport validate_rulebase(const RuleBase& rb) {
  ValidationReport report;
  report.rule_count = rb.rules().size();
  report.combination_count = rb.combination_count();

  const auto& in = rb.inputs();
  const char* names[3] = {"S", "O", "D"};

  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::map<Key, std::vector<std::size_t>> by_antecedent;
  for (std::size_t r = 0; r < rb.rules().size(); ++r) {
    const Rule& rule = rb.rules()[r];
    const std::string* labels[3] = {&rule.s, &rule.o, &rule.d};
    std::optional<std::size_t> idx[3];
    bool known = true;
    for (int v = 0; v < 3; ++v) {
      idx[v] = in[v].index_of(*labels[v]);
      if (!idx[v]) {
        report.unknown_labels.push_back({r, names[v], *labels[v]});
        known = false;
      }
    }
    if (!rb.output().index_of(rule.consequent)) {
      report.unknown_labels.push_back({r, rb.output().name(), rule.consequent});
      known = false;
    }
    if (known) by_antecedent[{*idx[0], *idx[1], *idx[2]}].push_back(r);
  }

  for (const auto& [key, indices] : by_antecedent) {
    if (indices.size() < 2) continue;
    DuplicateAntecedent dup;
    const Rule& first = rb.rules()[indices.front()];
    dup.antecedent = {first.s, first.o, first.d};
    dup.rule_indices = indices;
    for (auto r : indices) dup.consequents.push_back(rb.rules()[r].consequent);
    report.duplicates.push_back(std::move(dup));
  }

  for (std::size_t i = 0; i < in[0].size(); ++i) {
    for (std::size_t j = 0; j < in[1].size(); ++j) {
      for (std::size_t k = 0; k < in[2].size(); ++k) {
        if (!by_antecedent.count({i, j, k})) {
          report.missing.push_back({in[0].set(i).label, in[1].set(j).label, in[2].set(k).label});
        }
      }
    }
  }

  // Compare each uniquely defined rule against its one-step-riskier neighbours.
  auto consequent_of = [&](const Key& key) -> std::optional<std::size_t> {
    const auto it = by_antecedent.find(key);
    if (it == by_antecedent.end() || it->second.size() != 1) return std::nullopt;
    return rb.output().index_of(rb.rules()[it->second.front()].consequent);
  };
  for (const auto& [key, indices] : by_antecedent) {
    const auto low = consequent_of(key);
    if (!low) continue;
    for (int v = 0; v < 3; ++v) {
      Key next = key;
      std::size_t* slot = v == 0 ? &std::get<0>(next) : (v == 1 ? &std::get<1>(next) : &std::get<2>(next));
      if (*slot + 1 >= in[v].size()) continue;
      ++*slot;
      const auto high = consequent_of(next);
      if (high && *high < *low) {
        const Rule& lo_rule = rb.rules()[indices.front()];
        const Rule& hi_rule = rb.rules()[by_antecedent.at(next).front()];
        report.monotonicity.push_back(
            {{lo_rule.s, lo_rule.o, lo_rule.d}, {hi_rule.s, hi_rule.o, hi_rule.d}, lo_rule.consequent, hi_rule.consequent});
      }
    }
  }
  return report;
}

}  // namespace ffmea
