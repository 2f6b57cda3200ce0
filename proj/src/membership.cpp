#include "ffmea/membership.hpp"

#include <cmath>
#include <limits>
#include <set>

#include "ffmea/errors.hpp"

namespace ffmea {

double triangular_membership(double x, double a, double b, double c) {
  if (!(a <= b) || !(b <= c)) {
    throw ParameterError("triangular membership requires a <= b <= c");
  }
  if (x <= b) {
    if (a == b) return 1.0;
    if (x <= a) return 0.0;
    return (x - a) / (b - a);
  }
  if (b == c) return 1.0;
  if (x >= c) return 0.0;
  return (c - x) / (c - b);
}

double gaussian_membership(double x, double center, double sigma) {
  if (!(sigma > 0.0)) {
    throw ParameterError("gaussian membership requires sigma > 0");
  }
  const double z = (x - center) / sigma;
  return std::exp(-0.5 * z * z);
}

MembershipFunction MembershipFunction::triangular(double a, double b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || a > b || b > c) {
    throw ParameterError("triangular membership requires finite a <= b <= c");
  }
  if (a == c) {
    throw ParameterError("triangular membership requires a < c");
  }
  return MembershipFunction(Triangular{a, b, c});
}

MembershipFunction MembershipFunction::gaussian(double center, double sigma) {
  if (!std::isfinite(center) || !std::isfinite(sigma) || sigma <= 0.0) {
    throw ParameterError("gaussian membership requires finite center and sigma > 0");
  }
  return MembershipFunction(Gaussian{center, sigma});
}

double MembershipFunction::operator()(double x) const {
  if (const auto* t = std::get_if<Triangular>(&shape_)) {
    return triangular_membership(x, t->a, t->b, t->c);
  }
  const auto& g = std::get<Gaussian>(shape_);
  return gaussian_membership(x, g.center, g.sigma);
}

double MembershipFunction::support_lo() const {
  if (const auto* t = std::get_if<Triangular>(&shape_)) {
    return t->a == t->b ? -std::numeric_limits<double>::infinity() : t->a;
  }
  return -std::numeric_limits<double>::infinity();
}

double MembershipFunction::support_hi() const {
  if (const auto* t = std::get_if<Triangular>(&shape_)) {
    return t->b == t->c ? std::numeric_limits<double>::infinity() : t->c;
  }
  return std::numeric_limits<double>::infinity();
}

bool operator==(const MembershipFunction& lhs, const MembershipFunction& rhs) {
  if (lhs.shape_.index() != rhs.shape_.index()) return false;
  if (const auto* t = std::get_if<Triangular>(&lhs.shape_)) {
    const auto& u = std::get<Triangular>(rhs.shape_);
    return t->a == u.a && t->b == u.b && t->c == u.c;
  }
  const auto& g = std::get<Gaussian>(lhs.shape_);
  const auto& h = std::get<Gaussian>(rhs.shape_);
  return g.center == h.center && g.sigma == h.sigma;
}

LinguisticVariable::LinguisticVariable(std::string name, Universe universe, std::vector<FuzzySet> sets)
    : name_(std::move(name)), universe_(universe), sets_(std::move(sets)) {
  if (name_.empty()) {
    throw ParameterError("linguistic variable needs a name");
  }
  if (!std::isfinite(universe_.lo) || !std::isfinite(universe_.hi) || !(universe_.lo < universe_.hi)) {
    throw ParameterError("variable " + name_ + ": universe requires lo < hi");
  }
  if (sets_.empty()) {
    throw ParameterError("variable " + name_ + " has no fuzzy sets");
  }
  std::set<std::string> seen;
  for (const auto& s : sets_) {
    if (s.label.empty()) {
      throw ParameterError("variable " + name_ + " has a set with an empty label");
    }
    if (!seen.insert(s.label).second) {
      throw ParameterError("variable " + name_ + ": duplicate label " + s.label);
    }
    if (s.mf.support_hi() < universe_.lo || s.mf.support_lo() > universe_.hi) {
      throw ParameterError("variable " + name_ + ": set " + s.label + " lies outside the universe");
    }
  }
}

std::optional<std::size_t> LinguisticVariable::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (sets_[i].label == label) return i;
  }
  return std::nullopt;
}

std::optional<double> FuzzifiedValue::degree(const std::string& label) const {
  for (const auto& d : degrees) {
    if (d.label == label) return d.degree;
  }
  return std::nullopt;
}

FuzzifiedValue fuzzify(const LinguisticVariable& var, double x) {
  FuzzifiedValue out;
  out.input = x;
  out.used = var.universe().clamp(x);
  out.clamped = out.used != x;
  out.degrees.reserve(var.size());
  for (const auto& s : var.sets()) {
    out.degrees.push_back({s.label, s.mf(out.used)});
  }
  return out;
}

void fuzzify_degrees(const LinguisticVariable& var, double x, std::vector<double>& out) {
  const double used = var.universe().clamp(x);
  out.resize(var.size());
  for (std::size_t i = 0; i < var.size(); ++i) {
    out[i] = var.sets()[i].mf(used);
  }
}

LinguisticVariable make_ruspini_variable(std::string name, Universe universe,
                                         const std::vector<std::string>& labels) {
  if (labels.size() < 2) {
    throw ParameterError("a Ruspini partition needs at least two sets");
  }
  const std::size_t k = labels.size();
  std::vector<double> centers(k);
  for (std::size_t i = 0; i < k; ++i) {
    centers[i] = universe.lo + (universe.hi - universe.lo) * static_cast<double>(i) / static_cast<double>(k - 1);
  }
  centers.back() = universe.hi;
  std::vector<FuzzySet> sets;
  sets.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double left = i == 0 ? centers[i] : centers[i - 1];
    const double right = i + 1 == k ? centers[i] : centers[i + 1];
    sets.push_back({labels[i], MembershipFunction::triangular(left, centers[i], right)});
  }
  return LinguisticVariable(std::move(name), universe, std::move(sets));
}

LinguisticVariable make_gaussian_output(std::string name, Universe universe,
                                        const std::vector<std::string>& labels, double sigma) {
  const std::size_t k = labels.size();
  if (k == 0) {
    throw ParameterError("output variable needs at least one set");
  }
  const double width = universe.hi - universe.lo;
  std::vector<FuzzySet> sets;
  sets.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double center = universe.lo + width * static_cast<double>(2 * i + 1) / static_cast<double>(2 * k);
    sets.push_back({labels[i], MembershipFunction::gaussian(center, sigma)});
  }
  return LinguisticVariable(std::move(name), universe, std::move(sets));
}

}  // namespace ffmea
