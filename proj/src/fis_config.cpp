#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "ffmea/errors.hpp"
#include "ffmea/io.hpp"
#include "text_util.hpp"

namespace ffmea {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

struct VariableDecl {
  std::string name;
  Universe universe;
  std::vector<FuzzySet> sets;
  std::size_t line;
};

struct RuleLine {
  Rule rule;
  std::size_t line;
};

class FisParser {
 public:
  explicit FisParser(std::string source) : source_(std::move(source)) {}

  Fis parse(std::string_view text) {
    const auto lines = detail::split_lines(text);
    for (std::size_t n = 0; n < lines.size(); ++n) {
      line_ = n + 1;
      auto content = lines[n];
      if (const auto hash = content.find('#'); hash != std::string_view::npos) content = content.substr(0, hash);
      const auto toks = tokens(content);
      if (toks.empty()) continue;
      statement(toks);
    }
    last_line_ = lines.empty() ? 1 : lines.size();
    return finish();
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, line_, what); }

  double number(std::string_view tok, const char* what) const {
    const auto v = detail::parse_double(tok);
    if (!v) fail(std::string("expected a number for ") + what + ", got '" + std::string(tok) + "'");
    return *v;
  }

  void statement(const std::vector<std::string_view>& t) {
    const auto keyword = detail::lower(t[0]);
    if (keyword == "variable") {
      variable(t);
    } else if (keyword == "set") {
      set(t);
    } else if (keyword == "defuzz") {
      defuzz(t);
    } else if (keyword == "allow") {
      if (t.size() != 2 || detail::lower(t[1]) != "incomplete") fail("expected ALLOW INCOMPLETE");
      allow_incomplete_ = true;
    } else if (keyword == "generate") {
      generate(t);
    } else if (keyword == "if") {
      rule(t);
    } else {
      fail("unknown statement '" + std::string(t[0]) + "'");
    }
  }

  void variable(const std::vector<std::string_view>& t) {
    if (rules_started_) fail("variables must be declared before rules");
    if (t.size() != 4) fail("expected VARIABLE <name> <lo> <hi>");
    const std::string name(t[1]);
    if (name != "S" && name != "O" && name != "D" && name != "RPN") {
      fail("variable name must be S, O, D or RPN, got '" + name + "'");
    }
    if (variables_.count(name)) fail("variable " + name + " declared twice");
    const double lo = number(t[2], "universe lower bound");
    const double hi = number(t[3], "universe upper bound");
    if (!(lo < hi)) fail("variable " + name + ": universe requires lo < hi");
    variables_[name] = VariableDecl{name, {lo, hi}, {}, line_};
    current_ = name;
  }

  void set(const std::vector<std::string_view>& t) {
    if (rules_started_) fail("fuzzy sets must be declared before rules");
    if (current_.empty()) fail("SET outside of a VARIABLE block");
    if (t.size() < 3) fail("expected SET <label> <TRIANGLE|GAUSSIAN> <params...>");
    const std::string label(t[1]);
    const auto shape = detail::lower(t[2]);
    try {
      if (shape == "triangle") {
        if (t.size() != 6) fail("TRIANGLE takes 3 parameters");
        variables_[current_].sets.push_back(
            {label, MembershipFunction::triangular(number(t[3], "a"), number(t[4], "b"), number(t[5], "c"))});
      } else if (shape == "gaussian") {
        if (t.size() != 5) fail("GAUSSIAN takes 2 parameters");
        variables_[current_].sets.push_back(
            {label, MembershipFunction::gaussian(number(t[3], "center"), number(t[4], "sigma"))});
      } else {
        fail("unknown membership shape '" + std::string(t[2]) + "'");
      }
    } catch (const ParameterError& e) {
      fail(e.what());
    }
  }

  void defuzz(const std::vector<std::string_view>& t) {
    if (t.size() < 2 || detail::lower(t[1]) != "centroid") fail("only DEFUZZ CENTROID is supported");
    if (t.size() == 2) return;
    if (t.size() != 4 || detail::lower(t[2]) != "zero_area") fail("expected DEFUZZ CENTROID [ZERO_AREA ERROR|MIDPOINT]");
    const auto policy = detail::lower(t[3]);
    if (policy == "error") {
      defuzz_.zero_area = ZeroAreaPolicy::kError;
    } else if (policy == "midpoint") {
      defuzz_.zero_area = ZeroAreaPolicy::kMidpoint;
    } else {
      fail("zero-area policy must be ERROR or MIDPOINT");
    }
  }

  void generate(const std::vector<std::string_view>& t) {
    if (t.size() != 5 || detail::lower(t[1]) != "weights") fail("expected GENERATE WEIGHTS <wS> <wO> <wD>");
    if (generate_) fail("duplicate GENERATE line");
    if (!rules_.empty()) fail("GENERATE cannot be combined with explicit rules");
    FactorWeights w{number(t[2], "wS"), number(t[3], "wO"), number(t[4], "wD")};
    try {
      check_weights(w);
    } catch (const ConfigError& e) {
      fail(std::string("configuration error: ") + e.what());
    }
    generate_ = w;
    generate_line_ = line_;
    begin_rules();
  }

  void begin_rules() {
    if (rules_started_) return;
    rules_started_ = true;
    vars_ = {resolve("S"), resolve("O"), resolve("D"), resolve("RPN")};
  }

  LinguisticVariable resolve(const std::string& name) {
    const auto it = variables_.find(name);
    if (it == variables_.end()) {
      if (name == "S") return default_severity();
      if (name == "O") return default_occurrence();
      if (name == "D") return default_detection();
      return default_output();
    }
    try {
      return LinguisticVariable(it->second.name, it->second.universe, it->second.sets);
    } catch (const ParameterError& e) {
      throw ParseError(source_, it->second.line, e.what());
    }
  }

  // IF S=<l> AND O=<l> AND D=<l> THEN RPN=<l> [WEIGHT=<w>]
  void rule(const std::vector<std::string_view>& t) {
    if (generate_) fail("explicit rules cannot be combined with GENERATE");
    begin_rules();
    if (t.size() != 8 && t.size() != 9) fail("malformed rule; expected IF S=.. AND O=.. AND D=.. THEN RPN=.. [WEIGHT=..]");
    if (detail::lower(t[2]) != "and" || detail::lower(t[4]) != "and" || detail::lower(t[6]) != "then") {
      fail("malformed rule; expected IF S=.. AND O=.. AND D=.. THEN RPN=..");
    }
    auto clause = [&](std::string_view tok, std::string_view var) -> std::string {
      const auto eq = tok.find('=');
      if (eq == std::string_view::npos || tok.substr(0, eq) != var || eq + 1 == tok.size()) {
        fail("expected " + std::string(var) + "=<label>, got '" + std::string(tok) + "'");
      }
      return std::string(tok.substr(eq + 1));
    };
    Rule r{clause(t[1], "S"), clause(t[3], "O"), clause(t[5], "D"), clause(t[7], "RPN"), 1.0};
    if (t.size() == 9) {
      const auto eq = t[8].find('=');
      if (eq == std::string_view::npos || detail::lower(t[8].substr(0, eq)) != "weight") fail("expected WEIGHT=<w>");
      r.weight = number(t[8].substr(eq + 1), "rule weight");
      if (!(r.weight > 0.0 && r.weight <= 1.0)) fail("rule weight must lie in (0, 1]");
    }

    const std::pair<const std::string*, std::size_t> checks[4] = {{&r.s, 0}, {&r.o, 1}, {&r.d, 2}, {&r.consequent, 3}};
    std::size_t idx[4] = {};
    for (const auto& [label, v] : checks) {
      const auto found = vars_[v].index_of(*label);
      if (!found) fail("unknown " + vars_[v].name() + " label '" + *label + "'");
      idx[v] = *found;
    }
    const auto key = std::make_tuple(idx[0], idx[1], idx[2]);
    if (const auto it = seen_.find(key); it != seen_.end()) {
      fail("duplicate antecedent " + LabelTriple{r.s, r.o, r.d}.to_string() + " (first defined on line " +
           std::to_string(it->second) + ")");
    }
    seen_[key] = line_;
    rules_.push_back({std::move(r), line_});
  }

  Fis finish() {
    if (!rules_started_) {
      line_ = last_line_;
      fail("no rules: add IF rules or a GENERATE WEIGHTS line");
    }
    std::vector<Rule> rules;
    if (generate_) {
      try {
        rules = generate_rules(vars_[0], vars_[1], vars_[2], vars_[3], *generate_);
      } catch (const ConfigError& e) {
        throw ParseError(source_, generate_line_, std::string("configuration error: ") + e.what());
      }
    } else {
      rules.reserve(rules_.size());
      for (auto& r : rules_) rules.push_back(r.rule);
    }
    RuleBase rb(vars_[0], vars_[1], vars_[2], vars_[3], std::move(rules));
    if (!allow_incomplete_) {
      const auto report = validate_rulebase(rb);
      if (!report.missing.empty()) {
        std::string listed;
        const std::size_t show = std::min<std::size_t>(report.missing.size(), 5);
        for (std::size_t i = 0; i < show; ++i) listed += (i ? "; " : "") + report.missing[i].to_string();
        if (report.missing.size() > show) listed += "; ...";
        line_ = last_line_;
        fail("incomplete rule base: " + std::to_string(report.missing.size()) + " missing combination(s): " + listed +
             " (add ALLOW INCOMPLETE to accept)");
      }
    }
    return Fis{std::move(rb), defuzz_, allow_incomplete_};
  }

  std::string source_;
  std::size_t line_ = 0;
  std::size_t last_line_ = 1;
  std::map<std::string, VariableDecl> variables_;
  std::string current_;
  bool rules_started_ = false;
  std::vector<LinguisticVariable> vars_;
  std::vector<RuleLine> rules_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> seen_;
  std::optional<FactorWeights> generate_;
  std::size_t generate_line_ = 0;
  bool allow_incomplete_ = false;
  DefuzzConfig defuzz_;
};

void write_variable(std::string& out, const LinguisticVariable& v) {
  out += fmt::format("VARIABLE {} {} {}\n", v.name(), v.universe().lo, v.universe().hi);
  for (const auto& s : v.sets()) {
    if (const auto* t = std::get_if<Triangular>(&s.mf.shape())) {
      out += fmt::format("  SET {} TRIANGLE {} {} {}\n", s.label, t->a, t->b, t->c);
    } else {
      const auto& g = std::get<Gaussian>(s.mf.shape());
      out += fmt::format("  SET {} GAUSSIAN {} {}\n", s.label, g.center, g.sigma);
    }
  }
}

}  // namespace

Fis parse_fis(std::string_view text, const std::string& source) { return FisParser(source).parse(text); }

Fis load_fis(const std::filesystem::path& path) { return parse_fis(read_text_file(path), path.string()); }

std::string write_fis(const Fis& fis) {
  const auto& rb = fis.rule_base;
  const char* expected[4] = {"S", "O", "D", "RPN"};
  const LinguisticVariable* vars[4] = {&rb.severity(), &rb.occurrence(), &rb.detection(), &rb.output()};
  for (int i = 0; i < 4; ++i) {
    if (vars[i]->name() != expected[i]) {
      throw ConfigError("cannot write variable '" + vars[i]->name() + "' as " + expected[i]);
    }
  }
  std::string out = "# fuzzy FMEA inference system\n";
  for (const auto* v : vars) write_variable(out, *v);
  out += fis.defuzz.zero_area == ZeroAreaPolicy::kMidpoint ? "DEFUZZ CENTROID ZERO_AREA MIDPOINT\n"
                                                           : "DEFUZZ CENTROID ZERO_AREA ERROR\n";
  if (fis.allow_incomplete) out += "ALLOW INCOMPLETE\n";
  for (const auto& r : rb.rules()) {
    out += fmt::format("IF S={} AND O={} AND D={} THEN RPN={}", r.s, r.o, r.d, r.consequent);
    if (r.weight != 1.0) out += fmt::format(" WEIGHT={}", r.weight);
    out += "\n";
  }
  return out;
}

std::string render_validation(const ValidationReport& report) {
  std::string out;
  out += fmt::format("rules: {} of {} combinations\n", report.rule_count, report.combination_count);
  out += fmt::format("missing combinations: {}\n", report.missing.size());
  for (const auto& m : report.missing) out += "  " + m.to_string() + "\n";
  out += fmt::format("duplicate antecedents: {}\n", report.duplicates.size());
  for (const auto& d : report.duplicates) {
    out += "  " + d.antecedent.to_string() + " ->";
    for (const auto& c : d.consequents) out += " " + c;
    out += "\n";
  }
  out += fmt::format("unknown labels: {}\n", report.unknown_labels.size());
  for (const auto& u : report.unknown_labels) {
    out += fmt::format("  rule {}: {}={}\n", u.rule_index + 1, u.variable, u.label);
  }
  out += fmt::format("monotonicity violations: {}\n", report.monotonicity.size());
  for (const auto& m : report.monotonicity) {
    out += "  " + m.lower.to_string() + " -> " + m.lower_consequent + " but " + m.higher.to_string() + " -> " +
           m.higher_consequent + "\n";
  }
  out += report.complete() ? "status: complete\n" : "status: incomplete\n";
  return out;
}

}  // namespace ffmea
