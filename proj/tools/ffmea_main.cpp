// ffmea: traditional vs fuzzy FMEA risk analysis from the command line.
//
// Exit codes: 0 success, 1 validation or parse error, 2 inference error.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <iostream>
#include <optional>
#include <string>

#include "ffmea/errors.hpp"
#include "ffmea/fmea.hpp"
#include "ffmea/io.hpp"

namespace {

struct FisOptions {
  std::string fis_path;
  std::string weights;
  std::size_t samples = ffmea::kDefaultSamples;
};

void add_fis_options(CLI::App& cmd, FisOptions& opts) {
  auto* fis = cmd.add_option("--fis", opts.fis_path, "FIS configuration file")->check(CLI::ExistingFile);
  cmd.add_option("--weights", opts.weights, "Generate the rule base from wS,wO,wD (e.g. 0.4,0.3,0.3)")->excludes(fis);
  cmd.add_option("--samples", opts.samples, "Output samples for centroid defuzzification")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
}

ffmea::FactorWeights parse_weights(const std::string& text) {
  double w[3];
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const auto comma = text.find(',', start);
    if ((i < 2) != (comma != std::string::npos)) {
      throw ffmea::ValidationError("--weights expects three comma-separated numbers");
    }
    const auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      w[i] = std::stod(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::logic_error&) {
      throw ffmea::ValidationError("--weights: '" + piece + "' is not a number");
    }
    start = comma + 1;
  }
  return {w[0], w[1], w[2]};
}

ffmea::Fis resolve_fis(const FisOptions& opts) {
  if (!opts.fis_path.empty()) return ffmea::load_fis(opts.fis_path);
  if (!opts.weights.empty()) return ffmea::build_default_fis(parse_weights(opts.weights));
  return ffmea::build_default_fis();
}

void emit(const std::string& content, const std::string& output) {
  if (output.empty()) {
    std::cout << content;
  } else {
    ffmea::write_text_file(output, content);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Traditional and fuzzy FMEA risk priority analysis"};
  app.require_subcommand(1);

  FisOptions fis_opts;
  std::string output;
  std::string format = "text";

  std::string register_path;
  auto* analyze = app.add_subcommand("analyze", "Score and rank a failure-mode register");
  analyze->add_option("register", register_path, "Register CSV file")->required()->check(CLI::ExistingFile);
  add_fis_options(*analyze, fis_opts);
  analyze->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  analyze->add_option("--output", output, "Write to this file instead of stdout");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Load a FIS configuration and report rule-base findings");
  validate->add_option("fis", validate_path, "FIS configuration file")->required()->check(CLI::ExistingFile);

  std::string axes = "S,O";
  double fixed = 10.0;
  std::size_t resolution = 25;
  auto* surface = app.add_subcommand("surface", "Export a fuzzy RPN response surface grid");
  add_fis_options(*surface, fis_opts);
  surface->add_option("--axes", axes, "Two distinct axes, e.g. S,O");
  surface->add_option("--fixed", fixed, "Value of the remaining input");
  surface->add_option("--resolution", resolution, "Grid points per axis")->check(CLI::Range(std::size_t{2}, std::size_t{10000}));
  surface->add_option("--output", output, "Write to this file instead of stdout");

  std::string before_path;
  std::string after_path;
  auto* compare = app.add_subcommand("compare", "Rank-displacement diff between two CSV reports");
  compare->add_option("before", before_path, "First report (csv)")->required()->check(CLI::ExistingFile);
  compare->add_option("after", after_path, "Second report (csv)")->required()->check(CLI::ExistingFile);
  compare->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  compare->add_option("--output", output, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze) {
      const auto fis = resolve_fis(fis_opts);
      const auto records = ffmea::load_register(register_path);
      const auto assessments = ffmea::assess_register(records, fis, fis_opts.samples);
      ffmea::RankingComparison cmp;
      if (assessments.size() >= 2) cmp = ffmea::compare_rankings(assessments);
      emit(ffmea::render_report(assessments, cmp, ffmea::parse_report_format(format)), output);
    } else if (*validate) {
      const auto fis = ffmea::load_fis(validate_path);
      std::cout << ffmea::render_validation(ffmea::validate_rulebase(fis.rule_base));
    } else if (*surface) {
      const auto comma = axes.find_first_of(",x");
      if (comma == std::string::npos) throw ffmea::ValidationError("--axes expects two axes such as S,O");
      const auto x = ffmea::parse_axis(axes.substr(0, comma));
      const auto y = ffmea::parse_axis(axes.substr(comma + 1));
      const auto fis = resolve_fis(fis_opts);
      emit(ffmea::render_surface(ffmea::export_surface(fis, x, y, fixed, resolution, fis_opts.samples)), output);
    } else if (*compare) {
      const auto before = ffmea::parse_report_csv(ffmea::read_text_file(before_path), before_path);
      const auto after = ffmea::parse_report_csv(ffmea::read_text_file(after_path), after_path);
      emit(ffmea::render_report_diff(ffmea::diff_reports(before, after), ffmea::parse_report_format(format)), output);
    }
  } catch (const ffmea::InferenceError& e) {
    std::cerr << "ffmea: inference error: " << e.what() << "\n";
    return 2;
  } catch (const ffmea::Error& e) {
    std::cerr << "ffmea: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
