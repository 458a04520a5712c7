// Command-line front end: single-algebra reports, corpus scans, and golden
// comparisons, with deterministic text/JSON/CSV output.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "artinder/errors.hpp"
#include "artinder/parser.hpp"
#include "artinder/report.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitNotLocal = 3;
constexpr int kExitInternal = 4;
constexpr int kExitUnwritable = 5;

int degree_cap_from_env() {
  const char* s = std::getenv("ARTINDER_DEGREE_CAP");
  if (!s || !*s) return 24;
  try {
    int cap = std::stoi(s);
    if (cap > 0) return cap;
  } catch (const std::exception&) {
  }
  std::cerr << "ignoring invalid ARTINDER_DEGREE_CAP value '" << s << "'\n";
  return 24;
}

// Atomic output: write to a sibling temp file, then rename over the target.
void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::ios_base::failure("cannot open " + tmp);
    out << content;
    if (!out.flush()) throw std::ios_base::failure("cannot write " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::ios_base::failure("cannot rename " + tmp + " to " + path);
  }
}

int cmd_report(const std::string& file, bool json, bool basis) {
  artinder::Presentation p =
      artinder::parse_presentation_file(file, degree_cap_from_env());
  artinder::AlgebraReport rep = artinder::analyze(p);
  if (json)
    std::cout << artinder::report_to_json(rep, basis).dump(2) << "\n";
  else
    std::cout << artinder::report_to_text(rep, basis);
  return 0;
}

int cmd_scan(std::size_t max_dim, std::size_t max_vars, const std::string& out,
             const std::string& format) {
  artinder::ScanResult res = artinder::run_scan(max_dim, max_vars);
  std::string content = format == "csv"
                            ? artinder::scan_to_csv(res)
                            : artinder::scan_to_json(res).dump(2) + "\n";
  try {
    write_file_atomic(out, content);
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnwritable;
  }
  std::cerr << "wrote " << res.rows.size() << " rows to " << out
            << " (min margin " << res.min_margin << ", "
            << res.equality_cases.size() << " equality cases)\n";
  return 0;
}

int cmd_check(const std::string& file, const std::string& expect) {
  artinder::Presentation p =
      artinder::parse_presentation_file(file, degree_cap_from_env());
  artinder::Json actual = artinder::report_to_json(artinder::analyze(p));
  std::ifstream in(expect);
  if (!in) {
    std::cerr << "error: cannot read " << expect << "\n";
    return kExitUnwritable;
  }
  artinder::Json expected;
  try {
    in >> expected;
  } catch (const std::exception& e) {
    std::cerr << "error: " << expect << " is not valid JSON: " << e.what()
              << "\n";
    return kExitParse;
  }
  if (actual == expected) {
    std::cout << "match: " << file << "\n";
    return 0;
  }
  std::cout << "MISMATCH: " << file << "\n";
  artinder::Json diff = artinder::Json::diff(expected, actual);
  std::cout << diff.dump(2) << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of finite-dimensional local algebras"};
  app.require_subcommand(1);

  std::string report_file;
  bool report_json = false, report_basis = false;
  CLI::App* report = app.add_subcommand("report", "analyze one presentation");
  report->add_option("file", report_file, "presentation file")->required();
  report->add_flag("--json", report_json, "emit stable-key JSON");
  report->add_flag("--basis", report_basis, "include the derivation basis");

  std::size_t max_dim = 0, max_vars = 0;
  std::string scan_out, scan_format = "json";
  CLI::App* scan = app.add_subcommand("scan", "scan the monomial corpus");
  scan->add_option("--max-dim", max_dim, "maximum algebra dimension")
      ->required()
      ->check(CLI::Range(std::size_t{2}, std::size_t{10}));
  scan->add_option("--max-vars", max_vars, "maximum variable count")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{3}));
  scan->add_option("--out", scan_out, "output path")->required();
  scan->add_option("--format", scan_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string check_file, check_expect;
  CLI::App* check = app.add_subcommand("check", "compare against a golden file");
  check->add_option("file", check_file, "presentation file")->required();
  check->add_option("--expect", check_expect, "golden JSON report")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*report) return cmd_report(report_file, report_json, report_basis);
    if (*scan) return cmd_scan(max_dim, max_vars, scan_out, scan_format);
    if (*check) return cmd_check(check_file, check_expect);
  } catch (const artinder::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const artinder::LocalityViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotLocal;
  } catch (const artinder::DegreeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotLocal;
  } catch (const artinder::NotLocal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotLocal;
  } catch (const artinder::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
