#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "ffmea/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + FFMEA_CLI_PATH + "\" " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch(const std::string& name, const std::string& content) {
  const auto dir = fs::temp_directory_path() / "ffmea_cli_tests";
  fs::create_directories(dir);
  const auto path = dir / name;
  ffmea::write_text_file(path, content);
  return path;
}

const std::string kRegister = std::string(FFMEA_DATA_DIR) + "/smart_grid_register.csv";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze matches the golden report") {
  const auto r = run("analyze \"" + kRegister + "\"");
  CHECK(r.code == 0);
  CHECK(r.out == ffmea::read_text_file(std::string(FFMEA_GOLDEN_DIR) + "/smart_grid_report.txt"));
}

TEST_CASE("analyze csv to file and compare") {
  const auto dir = fs::temp_directory_path() / "ffmea_cli_tests";
  fs::create_directories(dir);
  const auto a = dir / "a.csv", b = dir / "b.csv";
  CHECK(run("analyze \"" + kRegister + "\" --format csv --output \"" + a.string() + "\"").code == 0);
  CHECK(run("analyze \"" + kRegister + "\" --format csv --weights 0.2,0.3,0.5 --output \"" + b.string() + "\"").code == 0);
  const auto parsed = ffmea::parse_report_csv(ffmea::read_text_file(a));
  CHECK(parsed.rows.size() == 25);
  const auto same = run("compare \"" + a.string() + "\" \"" + a.string() + "\"");
  CHECK(same.code == 0);
  const auto diff = run("compare \"" + a.string() + "\" \"" + b.string() + "\" --format csv");
  CHECK(diff.code == 0);
  CHECK(diff.out.find("component,failure_mode") == 0);
}

TEST_CASE("single record register") {
  const auto reg = scratch("one.csv", "component,failure_mode,severity,occurrence,detection\nPump,Seal leak,4,5,6\n");
  const auto r = run("analyze \"" + reg.string() + "\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("Records: 1") != std::string::npos);
  CHECK(r.out.find("n/a") != std::string::npos);
}

TEST_CASE("bad register exits 1 with the row") {
  const auto reg = scratch("bad.csv", "component,failure_mode,severity,occurrence,detection\nA,b,1,2,3\nC,d,4,5,11\n");
  const auto r = run("analyze \"" + reg.string() + "\"");
  CHECK(r.code == 1);
  CHECK(r.out.find(":3:") != std::string::npos);
  CHECK(r.out.find("detection") != std::string::npos);
}

TEST_CASE("inference failure exits 2") {
  const auto fis = scratch("sparse.fis", "ALLOW INCOMPLETE\nIF S=VeryLow AND O=VeryLow AND D=VeryHigh THEN RPN=VeryLow\n");
  const auto reg = scratch("hi.csv", "component,failure_mode,severity,occurrence,detection\nA,b,10,10,10\n");
  const auto r = run("analyze \"" + reg.string() + "\" --fis \"" + fis.string() + "\"");
  CHECK(r.code == 2);
  CHECK(r.out.find("inference error") != std::string::npos);
}

TEST_CASE("validate") {
  const auto good = run("validate \"" + std::string(FFMEA_DATA_DIR) + "/default.fis\"");
  CHECK(good.code == 0);
  CHECK(good.out.find("status: complete") != std::string::npos);
  const auto bad = scratch("bad.fis", "GENERATE WEIGHTS 0.5 0.5 0.5\n");
  const auto r = run("validate \"" + bad.string() + "\"");
  CHECK(r.code == 1);
  CHECK(r.out.find(":1:") != std::string::npos);
}

TEST_CASE("surface") {
  const auto r = run("surface --axes S,D --fixed 5.5 --resolution 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("# fuzzy RPN surface: x=S y=D O=5.5") == 0);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 3 + 9);
  CHECK(run("surface --axes S,S").code == 1);
  CHECK(run("surface --fixed 0").code == 1);
  CHECK(run("surface --weights 0.4,0.3").code == 1);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("--help").code == 0);
  CHECK(run("analyze /nonexistent/register.csv").code == 1);
}

}  // TEST_SUITE
