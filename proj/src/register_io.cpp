#include <array>
#include <fstream>
#include <sstream>

#include "ffmea/errors.hpp"
#include "ffmea/io.hpp"
#include "text_util.hpp"

namespace ffmea {

namespace {

constexpr std::array<std::string_view, 5> kRegisterColumns = {"component", "failure_mode", "severity", "occurrence",
                                                              "detection"};

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ValidationError("cannot write " + path.string());
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

std::vector<FailureModeRecord> parse_register(std::string_view text, const std::string& source) {
  const auto lines = detail::split_lines(text);
  std::vector<FailureModeRecord> records;
  bool header_seen = false;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t row = n + 1;
    const auto content = detail::trim(lines[n]);
    if (content.empty() || content.front() == '#') continue;

    const auto fields = detail::split_csv_line(lines[n]);
    if (!fields) {
      throw ParseError(source, row, "unterminated quoted field");
    }
    if (!header_seen) {
      for (std::size_t c = 0; c < kRegisterColumns.size(); ++c) {
        if (c >= fields->size() || detail::lower(detail::trim((*fields)[c])) != kRegisterColumns[c]) {
          throw ParseError(source, row, "header must be component,failure_mode,severity,occurrence,detection "
                                        "(missing column " + std::string(kRegisterColumns[c]) + ")");
        }
      }
      if (fields->size() != kRegisterColumns.size()) {
        throw ParseError(source, row, "header has unexpected extra columns");
      }
      header_seen = true;
      continue;
    }
    if (fields->size() != kRegisterColumns.size()) {
      const std::string missing =
          fields->size() < kRegisterColumns.size() ? std::string(kRegisterColumns[fields->size()]) : "";
      throw ParseError(source, row,
                       "expected 5 columns, found " + std::to_string(fields->size()) +
                           (missing.empty() ? "" : " (missing column " + missing + ")"));
    }

    FailureModeRecord rec;
    rec.component = (*fields)[0];
    rec.failure_mode = (*fields)[1];
    rec.source_row = row;
    int* targets[3] = {&rec.s, &rec.o, &rec.d};
    for (std::size_t c = 0; c < 3; ++c) {
      const auto& raw = (*fields)[c + 2];
      const auto value = detail::parse_int(raw);
      const std::string column(kRegisterColumns[c + 2]);
      if (!value) {
        throw ParseError(source, row, "column " + column + ": rating '" + raw + "' is not an integer");
      }
      if (*value < kMinRating || *value > kMaxRating) {
        throw ParseError(source, row, "column " + column + ": rating " + std::to_string(*value) + " outside [1, 10]");
      }
      *targets[c] = *value;
    }
    records.push_back(std::move(rec));
  }
  if (!header_seen) {
    throw ParseError(source, 1, "empty register (no header)");
  }
  if (records.empty()) {
    throw ParseError(source, lines.size(), "empty register (header only)");
  }
  return records;
}

std::vector<FailureModeRecord> load_register(const std::filesystem::path& path) {
  return parse_register(read_text_file(path), path.string());
}

std::string write_register(const std::vector<FailureModeRecord>& records) {
  std::string out = "component,failure_mode,severity,occurrence,detection\n";
  for (const auto& r : records) {
    out += detail::csv_field(r.component) + "," + detail::csv_field(r.failure_mode) + "," + std::to_string(r.s) + "," +
           std::to_string(r.o) + "," + std::to_string(r.d) + "\n";
  }
  return out;
}

}  // namespace ffmea
