#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "ffmea/errors.hpp"
#include "ffmea/io.hpp"
#include "text_util.hpp"

namespace ffmea {

namespace {

constexpr std::string_view kReportHeader = "component,failure_mode,t_rpn,f_rpn,t_rank,f_rank,rank_delta";

std::vector<std::size_t> by_t_rank(const std::vector<RiskAssessment>& assessments) {
  std::vector<std::size_t> order(assessments.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return assessments[a].t_rank < assessments[b].t_rank; });
  return order;
}

std::string signed_int(int v) { return v > 0 ? fmt::format("+{}", v) : fmt::format("{}", v); }

std::string render_text(const std::vector<RiskAssessment>& assessments, const RankingComparison& cmp) {
  std::size_t wc = std::string_view("Component").size();
  std::size_t wf = std::string_view("Failure mode").size();
  for (const auto& a : assessments) {
    wc = std::max(wc, a.record.component.size());
    wf = std::max(wf, a.record.failure_mode.size());
  }
  std::string out;
  out += fmt::format("{:<{}}  {:<{}}  {:>5}  {:>7}  {:>6}  {:>6}  {:>5}\n", "Component", wc, "Failure mode", wf, "T-RPN",
                     "F-RPN", "T-Rank", "F-Rank", "Delta");
  out += std::string(wc + wf + 2 + 2 + 5 + 2 + 7 + 2 + 6 + 2 + 6 + 2 + 5, '-') + "\n";
  for (auto i : by_t_rank(assessments)) {
    const auto& a = assessments[i];
    out += fmt::format("{:<{}}  {:<{}}  {:>5}  {:>7.1f}  {:>6}  {:>6}  {:>5}\n", a.record.component, wc,
                       a.record.failure_mode, wf, a.t_rpn, a.f_rpn, a.t_rank, a.f_rank, signed_int(a.f_rank - a.t_rank));
  }
  out += "\n";
  out += fmt::format("Records: {}\n", assessments.size());
  if (assessments.size() < 2) {
    out += "Spearman rank correlation (T-RPN vs F-RPN): n/a\n";
  } else {
    out += fmt::format("Spearman rank correlation (T-RPN vs F-RPN): {:.4f}\n", cmp.spearman);
  }
  if (cmp.equal_trpn_groups.empty()) {
    out += "Equal T-RPN groups: none\n";
  } else {
    out += "Equal T-RPN groups:\n";
    for (const auto& g : cmp.equal_trpn_groups) {
      out += fmt::format("  T-RPN {}:\n", g.t_rpn);
      for (std::size_t k = 0; k < g.members.size(); ++k) {
        const auto& a = assessments[g.members[k]];
        out += fmt::format("    {} / {} (S={} O={} D={}): F-RPN {:.1f}\n", a.record.component, a.record.failure_mode,
                           a.record.s, a.record.o, a.record.d, g.f_rpns[k]);
      }
    }
  }
  return out;
}

std::string render_csv(const std::vector<RiskAssessment>& assessments, const RankingComparison& cmp) {
  std::string out(kReportHeader);
  out += "\n";
  for (auto i : by_t_rank(assessments)) {
    const auto& a = assessments[i];
    out += fmt::format("{},{},{},{},{},{},{}\n", detail::csv_field(a.record.component),
                       detail::csv_field(a.record.failure_mode), a.t_rpn, a.f_rpn, a.t_rank, a.f_rank,
                       a.f_rank - a.t_rank);
  }
  if (assessments.size() >= 2) out += fmt::format("# spearman,{}\n", cmp.spearman);
  for (const auto& g : cmp.equal_trpn_groups) {
    out += fmt::format("# equal_t_rpn,{}", g.t_rpn);
    for (double f : g.f_rpns) out += fmt::format(",{}", f);
    out += "\n";
  }
  return out;
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  const auto n = detail::lower(name);
  if (n == "text") return ReportFormat::kText;
  if (n == "csv") return ReportFormat::kCsv;
  throw ValidationError("unknown format '" + std::string(name) + "' (expected text or csv)");
}

std::string render_report(const std::vector<RiskAssessment>& assessments, const RankingComparison& comparison,
                          ReportFormat format) {
  if (assessments.empty()) {
    throw ValidationError("cannot render an empty assessment");
  }
  return format == ReportFormat::kText ? render_text(assessments, comparison) : render_csv(assessments, comparison);
}

ParsedReport parse_report_csv(std::string_view text, const std::string& source) {
  const auto lines = detail::split_lines(text);
  ParsedReport report;
  bool header_seen = false;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t row = n + 1;
    const auto content = detail::trim(lines[n]);
    if (content.empty()) continue;
    if (content.front() == '#') {
      constexpr std::string_view kSpearman = "# spearman,";
      if (content.substr(0, kSpearman.size()) == kSpearman) {
        const auto v = detail::parse_double(content.substr(kSpearman.size()));
        if (!v) throw ParseError(source, row, "malformed spearman line");
        report.spearman = *v;
      }
      continue;
    }
    if (!header_seen) {
      if (detail::lower(content) != kReportHeader) {
        throw ParseError(source, row, "not a CSV report (expected header " + std::string(kReportHeader) + ")");
      }
      header_seen = true;
      continue;
    }
    const auto fields = detail::split_csv_line(lines[n]);
    if (!fields || fields->size() != 7) {
      throw ParseError(source, row, "expected 7 columns");
    }
    ReportRow r;
    r.component = (*fields)[0];
    r.failure_mode = (*fields)[1];
    const auto t_rpn = detail::parse_int((*fields)[2]);
    const auto f_rpn = detail::parse_double((*fields)[3]);
    const auto t_rank = detail::parse_int((*fields)[4]);
    const auto f_rank = detail::parse_int((*fields)[5]);
    const auto delta = detail::parse_int((*fields)[6]);
    if (!t_rpn || !f_rpn || !t_rank || !f_rank || !delta) {
      throw ParseError(source, row, "malformed numeric field");
    }
    r.t_rpn = *t_rpn;
    r.f_rpn = *f_rpn;
    r.t_rank = *t_rank;
    r.f_rank = *f_rank;
    r.rank_delta = *delta;
    report.rows.push_back(std::move(r));
  }
  if (!header_seen) {
    throw ParseError(source, 1, "empty report");
  }
  return report;
}

ReportDiff diff_reports(const ParsedReport& before, const ParsedReport& after) {
  using Key = std::pair<std::string, std::string>;
  std::map<Key, std::vector<std::size_t>> pending;
  for (std::size_t i = 0; i < after.rows.size(); ++i) {
    pending[{after.rows[i].component, after.rows[i].failure_mode}].push_back(i);
  }
  ReportDiff diff;
  std::vector<double> fb;
  std::vector<double> fa;
  for (const auto& b : before.rows) {
    auto it = pending.find({b.component, b.failure_mode});
    if (it == pending.end() || it->second.empty()) {
      diff.only_before.push_back(b.component + " / " + b.failure_mode);
      continue;
    }
    const auto& a = after.rows[it->second.front()];
    it->second.erase(it->second.begin());
    diff.rows.push_back({b.component, b.failure_mode, b.f_rank, a.f_rank, b.f_rpn, a.f_rpn, a.f_rank - b.f_rank});
    fb.push_back(b.f_rpn);
    fa.push_back(a.f_rpn);
  }
  for (const auto& [key, rest] : pending) {
    for (auto i : rest) diff.only_after.push_back(after.rows[i].component + " / " + after.rows[i].failure_mode);
  }
  if (fb.size() >= 2) diff.spearman = spearman_correlation(fb, fa);
  return diff;
}

std::string render_report_diff(const ReportDiff& diff, ReportFormat format) {
  std::string out;
  if (format == ReportFormat::kCsv) {
    out += "component,failure_mode,f_rank_before,f_rank_after,f_rpn_before,f_rpn_after,delta\n";
    for (const auto& r : diff.rows) {
      out += fmt::format("{},{},{},{},{},{},{}\n", detail::csv_field(r.component), detail::csv_field(r.failure_mode),
                         r.f_rank_before, r.f_rank_after, r.f_rpn_before, r.f_rpn_after, r.delta);
    }
    out += fmt::format("# spearman,{}\n", diff.spearman);
    for (const auto& s : diff.only_before) out += "# only_before," + detail::csv_field(s) + "\n";
    for (const auto& s : diff.only_after) out += "# only_after," + detail::csv_field(s) + "\n";
    return out;
  }
  std::size_t wc = std::string_view("Failure mode").size();
  for (const auto& r : diff.rows) wc = std::max(wc, r.component.size() + 3 + r.failure_mode.size());
  out += fmt::format("{:<{}}  {:>8}  {:>8}  {:>5}  {:>9}  {:>9}\n", "Failure mode", wc, "F-Rank A", "F-Rank B", "Delta",
                     "F-RPN A", "F-RPN B");
  for (const auto& r : diff.rows) {
    out += fmt::format("{:<{}}  {:>8}  {:>8}  {:>5}  {:>9.1f}  {:>9.1f}\n", r.component + " / " + r.failure_mode, wc,
                       r.f_rank_before, r.f_rank_after, signed_int(r.delta), r.f_rpn_before, r.f_rpn_after);
  }
  out += fmt::format("\nMatched: {}\nSpearman rank correlation (F-RPN A vs B): {:.4f}\n", diff.rows.size(),
                     diff.spearman);
  for (const auto& s : diff.only_before) out += "Only in A: " + s + "\n";
  for (const auto& s : diff.only_after) out += "Only in B: " + s + "\n";
  return out;
}

}  // namespace ffmea
