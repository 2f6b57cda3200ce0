#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ffmea/fmea.hpp"

namespace ffmea {

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

// ---------------------------------------------------------------------------
// Failure-mode registers

/// Parses a register: header `component,failure_mode,severity,occurrence,detection`
/// (case-insensitive), one record per row. Blank lines and lines starting
/// with '#' are skipped. Rows keep their 1-based line number.
std::vector<FailureModeRecord> parse_register(std::string_view text, const std::string& source = "<register>");
std::vector<FailureModeRecord> load_register(const std::filesystem::path& path);
std::string write_register(const std::vector<FailureModeRecord>& records);

// ---------------------------------------------------------------------------
// FIS configuration files
//
//   VARIABLE <S|O|D|RPN> <lo> <hi>
//   SET <label> TRIANGLE <a> <b> <c>
//   SET <label> GAUSSIAN <center> <sigma>
//   DEFUZZ CENTROID [ZERO_AREA ERROR|MIDPOINT]
//   ALLOW INCOMPLETE
//   GENERATE WEIGHTS <wS> <wO> <wD>
//   IF S=<label> AND O=<label> AND D=<label> THEN RPN=<label> [WEIGHT=<w>]
//
// Undeclared variables take the default partitions. Either IF rules or one
// GENERATE line must be present, not both.

Fis parse_fis(std::string_view text, const std::string& source = "<fis>");
Fis load_fis(const std::filesystem::path& path);
/// Writes every variable and rule explicitly; parse_fis(write_fis(f)) == f.
std::string write_fis(const Fis& fis);

std::string render_validation(const ValidationReport& report);

// ---------------------------------------------------------------------------
// Reports

enum class ReportFormat { kText, kCsv };

ReportFormat parse_report_format(std::string_view name);

/// Table sorted by T-Rank followed by the comparison summary.
std::string render_report(const std::vector<RiskAssessment>& assessments, const RankingComparison& comparison,
                          ReportFormat format);

struct ReportRow {
  std::string component;
  std::string failure_mode;
  int t_rpn = 0;
  double f_rpn = 0.0;
  int t_rank = 0;
  int f_rank = 0;
  int rank_delta = 0;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ParsedReport {
  std::vector<ReportRow> rows;
  std::optional<double> spearman;
};

/// Reads back the CSV form of render_report.
ParsedReport parse_report_csv(std::string_view text, const std::string& source = "<report>");

struct ReportDiffRow {
  std::string component;
  std::string failure_mode;
  int f_rank_before = 0;
  int f_rank_after = 0;
  double f_rpn_before = 0.0;
  double f_rpn_after = 0.0;
  int delta = 0;
};

struct ReportDiff {
  std::vector<ReportDiffRow> rows;
  std::vector<std::string> only_before;
  std::vector<std::string> only_after;
  double spearman = 0.0;
};

/// Matches rows by (component, failure mode) and reports how each moved in
/// the fuzzy ranking between two reports.
ReportDiff diff_reports(const ParsedReport& before, const ParsedReport& after);
std::string render_report_diff(const ReportDiff& diff, ReportFormat format);

// ---------------------------------------------------------------------------
// Response surfaces

enum class Axis { kSeverity, kOccurrence, kDetection };

Axis parse_axis(std::string_view name);
std::string_view axis_name(Axis axis);

struct SurfaceGrid {
  Axis x_axis;
  Axis y_axis;
  Axis fixed_axis;
  double fixed_value;
  std::vector<double> xs;
  std::vector<double> ys;
  /// Row-major: value(i, j) at xs[i], ys[j] is f_rpn[i * ys.size() + j].
  std::vector<double> f_rpn;

  double value(std::size_t i, std::size_t j) const { return f_rpn.at(i * ys.size() + j); }
};

SurfaceGrid export_surface(const Fis& fis, Axis x_axis, Axis y_axis, double fixed_value, std::size_t resolution,
                           std::size_t samples = kDefaultSamples);
std::string render_surface(const SurfaceGrid& grid);

}  // namespace ffmea
