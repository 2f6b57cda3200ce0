#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ffmea {

/// Triangular curve with feet at a and c and peak at b. a == b or b == c
/// turns the corresponding side into a shoulder (degree 1 toward the bound).
struct Triangular {
  double a;
  double b;
  double c;
};

struct Gaussian {
  double center;
  double sigma;
};

double triangular_membership(double x, double a, double b, double c);
double gaussian_membership(double x, double center, double sigma);

class MembershipFunction {
 public:
  using Shape = std::variant<Triangular, Gaussian>;

  static MembershipFunction triangular(double a, double b, double c);
  static MembershipFunction gaussian(double center, double sigma);

  double operator()(double x) const;

  const Shape& shape() const noexcept { return shape_; }
  bool is_triangular() const noexcept { return std::holds_alternative<Triangular>(shape_); }

  /// Closed interval outside of which the degree is zero. Gaussians report
  /// the whole real line.
  double support_lo() const;
  double support_hi() const;

  friend bool operator==(const MembershipFunction& lhs, const MembershipFunction& rhs);

 private:
  explicit MembershipFunction(Shape shape) : shape_(shape) {}
  Shape shape_;
};

struct FuzzySet {
  std::string label;
  MembershipFunction mf;

  friend bool operator==(const FuzzySet&, const FuzzySet&) = default;
};

struct Universe {
  double lo;
  double hi;

  double clamp(double x) const { return x < lo ? lo : (x > hi ? hi : x); }
  bool contains(double x) const { return x >= lo && x <= hi; }
  double midpoint() const { return lo + 0.5 * (hi - lo); }

  friend bool operator==(const Universe&, const Universe&) = default;
};

/// A named universe partitioned into labelled fuzzy sets. Set order is the
/// risk order: index 0 is the least risky term.
class LinguisticVariable {
 public:
  LinguisticVariable(std::string name, Universe universe, std::vector<FuzzySet> sets);

  const std::string& name() const noexcept { return name_; }
  const Universe& universe() const noexcept { return universe_; }
  const std::vector<FuzzySet>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }

  std::optional<std::size_t> index_of(const std::string& label) const;
  const FuzzySet& set(std::size_t index) const { return sets_.at(index); }

  friend bool operator==(const LinguisticVariable&, const LinguisticVariable&) = default;

 private:
  std::string name_;
  Universe universe_;
  std::vector<FuzzySet> sets_;
};

struct LabelDegree {
  std::string label;
  double degree;
};

/// Degrees of one crisp input across all sets of a variable, in set order.
struct FuzzifiedValue {
  std::vector<LabelDegree> degrees;
  double input = 0.0;
  double used = 0.0;
  bool clamped = false;

  /// Degree of the labelled set, or nullopt when the label is unknown.
  std::optional<double> degree(const std::string& label) const;
};

/// Evaluates every set at x. Inputs outside the universe are clamped to the
/// nearest bound and flagged.
FuzzifiedValue fuzzify(const LinguisticVariable& var, double x);

/// Degrees only, in set order; used on hot paths.
void fuzzify_degrees(const LinguisticVariable& var, double x, std::vector<double>& out);

namespace labels {
inline const std::vector<std::string> kInput = {"VeryLow", "Low", "Moderate", "High", "VeryHigh"};
// Detection terms describe detection likelihood, so the riskiest set (numeric
// rating 10) is "VeryLow".
inline const std::vector<std::string> kDetection = {"VeryHigh", "High", "Moderate", "Low", "VeryLow"};
inline const std::vector<std::string> kOutput = {"VeryLow", "Low", "Medium", "High", "VeryHigh"};
}  // namespace labels

struct PartitionConfig {
  Universe input_universe{1.0, 10.0};
  Universe output_universe{0.0, 1000.0};
  /// Width of the Gaussian output sets.
  double output_sigma = 30.0;
};

/// Evenly spaced Ruspini triangles over the universe with shoulders at both ends.
LinguisticVariable make_ruspini_variable(std::string name, Universe universe,
                                         const std::vector<std::string>& labels);

/// Gaussian output sets centred at lo + (2k+1)·width/(2K).
LinguisticVariable make_gaussian_output(std::string name, Universe universe,
                                        const std::vector<std::string>& labels, double sigma);

}  // namespace ffmea
