#include <doctest.h>

#include <algorithm>
#include <random>

#include "ffmea/errors.hpp"
#include "ffmea/fmea.hpp"
#include "ffmea/inference.hpp"

using namespace ffmea;

namespace {

FuzzifiedValue fv3(const std::vector<std::string>& labels, std::vector<double> degrees) {
  FuzzifiedValue fv;
  for (std::size_t i = 0; i < labels.size(); ++i) fv.degrees.push_back({labels[i], degrees[i]});
  return fv;
}

// Rule-by-rule Mamdani evaluation straight from the labels.
SampledFuzzySet per_rule_reference(const RuleBase& rb, double s, double o, double d, std::size_t n) {
  const auto fs = fuzzify(rb.severity(), s);
  const auto fo = fuzzify(rb.occurrence(), o);
  const auto fd = fuzzify(rb.detection(), d);
  SampledFuzzySet out{rb.output().universe(), std::vector<double>(n, 0.0)};
  for (const auto& rule : rb.rules()) {
    const double a = fire_rule(rule, fs, fo, fd);
    const auto& mf = rb.output().set(*rb.output().index_of(rule.consequent)).mf;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = out.universe.lo + static_cast<double>(i) * (out.universe.hi - out.universe.lo) / static_cast<double>(n - 1);
      out.degrees[i] = std::max(out.degrees[i], std::min(a, mf(x)));
    }
  }
  return out;
}

RuleBase with_rules(const RuleBase& base, std::vector<Rule> rules) {
  return RuleBase(base.severity(), base.occurrence(), base.detection(), base.output(), std::move(rules));
}

}  // namespace

TEST_SUITE("inference") {

TEST_CASE("fire_rule takes the weighted minimum") {
  const Rule r{"VeryLow", "Low", "High", "Medium", 1.0};
  const std::vector<std::string> in = labels::kInput;
  auto degrees = [&](double a, double b, double c) {
    // put a/b/c on the rule's labels, zeros elsewhere
    return std::tuple{fv3(in, {a, 0, 0, 0, 0}), fv3(in, {0, b, 0, 0, 0}), fv3(in, {0, 0, 0, c, 0})};
  };
  auto [s1, o1, d1] = degrees(1.0, 1.0, 1.0);
  CHECK(fire_rule(r, s1, o1, d1) == 1.0);
  auto [s2, o2, d2] = degrees(0.5, 0.5, 0.0);
  CHECK(fire_rule(r, s2, o2, d2) == 0.0);
  auto [s3, o3, d3] = degrees(0.6, 0.4, 0.9);
  CHECK(fire_rule(r, s3, o3, d3) == 0.4);
  CHECK(fire_rule({"VeryLow", "Low", "High", "Medium", 0.5}, s3, o3, d3) == doctest::Approx(0.2));
  CHECK_THROWS_AS(fire_rule({"Nope", "Low", "High", "Medium", 1.0}, s3, o3, d3), ConfigError);
  CHECK_THROWS_AS(fire_rule({"VeryLow", "Low", "High", "Medium", 0.0}, s3, o3, d3), ConfigError);
}

TEST_CASE("activation is monotone in each conjunct") {
  const Rule r{"VeryLow", "VeryLow", "VeryLow", "Low", 0.8};
  const std::vector<std::string> one = {"VeryLow"};
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = u(rng), b = u(rng), c = u(rng), bump = u(rng) * (1.0 - a);
    const double before = fire_rule(r, fv3(one, {a}), fv3(one, {b}), fv3(one, {c}));
    const double after = fire_rule(r, fv3(one, {a + bump}), fv3(one, {b}), fv3(one, {c}));
    CHECK(after >= before);
    CHECK(before >= 0.0);
    CHECK(before <= 1.0);
  }
}

TEST_CASE("a single fully fired rule reproduces its consequent") {
  const auto fis = build_default_fis();
  const auto& rb = fis.rule_base;
  // S=Moderate(3) O=VeryHigh(5) D=VeryHigh detection(1): 0.4*3 + 0.3*5 + 0.3*1 = 3.0 -> Medium
  const auto out = infer(rb, 5.5, 10.0, 1.0);
  const auto& medium = rb.output().set(*rb.output().index_of("Medium")).mf;
  REQUIRE(out.size() == kDefaultSamples);
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out.degrees[i] == medium(out.abscissa(i)));
}

TEST_CASE("two rules fire midway between severity centres") {
  const auto fis = build_default_fis();
  const auto& rb = fis.rule_base;
  // S=8.875 is half High, half VeryHigh; O and D sit on Moderate.
  // (High, Moderate, Moderate): 1.6 + 0.9 + 0.9 = 3.4 -> Medium
  // (VeryHigh, Moderate, Moderate): 2.0 + 0.9 + 0.9 = 3.8 -> High
  const auto out = infer(rb, 8.875, 5.5, 5.5);
  const auto& medium = rb.output().set(2).mf;
  const auto& high = rb.output().set(3).mf;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = out.abscissa(i);
    const double expected = std::max(std::min(0.5, medium(x)), std::min(0.5, high(x)));
    CHECK(out.degrees[i] == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("sampled inference equals rule-by-rule evaluation") {
  const auto fis = build_default_fis();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(1.0, 10.0);
  for (int i = 0; i < 40; ++i) {
    const double s = u(rng), o = u(rng), d = u(rng);
    const auto fast = infer(fis.rule_base, s, o, d, InferOptions{201, false});
    const auto ref = per_rule_reference(fis.rule_base, s, o, d, 201);
    for (std::size_t k = 0; k < fast.size(); ++k) CHECK(fast.degrees[k] == doctest::Approx(ref.degrees[k]).epsilon(1e-14));
  }
}

TEST_CASE("default base always fires with a peak of at least one half") {
  const auto fis = build_default_fis();
  const OutputSampling sampling(fis.rule_base.output(), 201);
  for (int i = 0; i < 25; ++i) {
    for (int j = 0; j < 25; ++j) {
      for (int k = 0; k < 25; ++k) {
        const double s = 1.0 + 9.0 * i / 24.0, o = 1.0 + 9.0 * j / 24.0, d = 1.0 + 9.0 * k / 24.0;
        const auto out = infer(fis.rule_base, s, o, d, sampling);
        REQUIRE(*std::max_element(out.degrees.begin(), out.degrees.end()) >= 0.5);
      }
    }
  }
}

TEST_CASE("aggregate bounded by activations and consequent curves") {
  const auto fis = build_default_fis();
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(1.0, 10.0);
  for (int t = 0; t < 50; ++t) {
    const double s = u(rng), o = u(rng), d = u(rng);
    const auto heights = consequent_heights(fis.rule_base, s, o, d);
    const double max_act = *std::max_element(heights.begin(), heights.end());
    const auto out = infer(fis.rule_base, s, o, d);
    for (std::size_t i = 0; i < out.size(); ++i) {
      double max_curve = 0.0;
      for (const auto& set : fis.rule_base.output().sets()) max_curve = std::max(max_curve, set.mf(out.abscissa(i)));
      CHECK(out.degrees[i] <= max_act);
      CHECK(out.degrees[i] <= max_curve);
      CHECK(out.degrees[i] >= 0.0);
    }
  }
}

TEST_CASE("duplicates and permutations leave the aggregate unchanged") {
  const auto fis = build_default_fis();
  auto rules = fis.rule_base.rules();
  const auto base = infer(fis.rule_base, 6.3, 2.2, 8.9);

  auto doubled = rules;
  doubled.push_back(rules[57]);
  CHECK(infer(with_rules(fis.rule_base, doubled), 6.3, 2.2, 8.9, InferOptions{kDefaultSamples, true}) == base);

  std::mt19937_64 rng(1);
  std::shuffle(rules.begin(), rules.end(), rng);
  CHECK(infer(with_rules(fis.rule_base, rules), 6.3, 2.2, 8.9) == base);
}

TEST_CASE("incomplete bases") {
  const auto fis = build_default_fis();
  const auto partial = with_rules(fis.rule_base, {{"VeryLow", "VeryLow", "VeryHigh", "VeryLow", 1.0}});
  CHECK_FALSE(partial.is_complete());
  CHECK_THROWS_AS(infer(partial, 1.0, 1.0, 1.0), ConfigError);
  CHECK_NOTHROW(infer(partial, 1.0, 1.0, 1.0, InferOptions{101, true}));
  try {
    infer(partial, 10.0, 10.0, 10.0, InferOptions{101, true});
    FAIL("expected NoRuleFiredError");
  } catch (const NoRuleFiredError& e) {
    const std::string what = e.what();
    CHECK(what.find("S=10") != std::string::npos);
    CHECK(what.find("D=10") != std::string::npos);
  }
  CHECK_THROWS_AS(infer(fis.rule_base, 5.0, 5.0, 5.0, InferOptions{1, false}), ParameterError);
}

TEST_CASE("validate_rulebase findings") {
  const auto fis = build_default_fis();
  auto report = validate_rulebase(fis.rule_base);
  CHECK(report.rule_count == 125);
  CHECK(report.findings() == 0);
  CHECK(report.complete());

  auto rules = fis.rule_base.rules();
  const Rule removed = rules[42];
  rules.erase(rules.begin() + 42);
  report = validate_rulebase(with_rules(fis.rule_base, rules));
  REQUIRE(report.missing.size() == 1);
  CHECK(report.missing[0] == LabelTriple{removed.s, removed.o, removed.d});
  CHECK(report.duplicates.empty());

  rules = fis.rule_base.rules();
  Rule clash = rules[10];
  clash.consequent = clash.consequent == "VeryHigh" ? "VeryLow" : "VeryHigh";
  rules.push_back(clash);
  report = validate_rulebase(with_rules(fis.rule_base, rules));
  REQUIRE(report.duplicates.size() == 1);
  CHECK(report.duplicates[0].consequents.size() == 2);
  CHECK(report.duplicates[0].consequents[0] == rules[10].consequent);
  CHECK(report.duplicates[0].consequents[1] == clash.consequent);
  CHECK(report.missing.empty());

  rules = fis.rule_base.rules();
  rules[0].o = "Sometimes";
  const auto bad = with_rules(fis.rule_base, rules);
  CHECK(bad.has_unknown_labels());
  report = validate_rulebase(bad);
  REQUIRE(report.unknown_labels.size() == 1);
  CHECK(report.unknown_labels[0].variable == "O");
  CHECK(report.unknown_labels[0].label == "Sometimes");
  CHECK(report.missing.size() == 1);
  CHECK_THROWS_AS(infer(bad, 5.0, 5.0, 5.0, InferOptions{101, true}), ConfigError);
}

TEST_CASE("validate_rulebase flags non-monotone consequents") {
  const auto fis = build_default_fis();
  auto rules = fis.rule_base.rules();
  for (auto& r : rules) {
    if (r.s == "VeryHigh" && r.o == "VeryHigh" && r.d == "VeryLow") r.consequent = "VeryLow";
  }
  const auto report = validate_rulebase(with_rules(fis.rule_base, rules));
  CHECK(report.complete());
  CHECK(report.monotonicity.size() == 3);
  for (const auto& m : report.monotonicity) CHECK(m.higher_consequent == "VeryLow");
}

TEST_CASE("rule weights must lie in (0,1]") {
  const auto fis = build_default_fis();
  auto rules = fis.rule_base.rules();
  rules[3].weight = 1.5;
  CHECK_THROWS_AS(with_rules(fis.rule_base, rules), ConfigError);
}

}  // TEST_SUITE
