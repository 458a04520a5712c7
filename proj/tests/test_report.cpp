#include <doctest.h>

#include "artinder/parser.hpp"
#include "artinder/report.hpp"

using namespace artinder;

TEST_CASE("report fields for the t^3 = s^3 curve") {
  AlgebraReport rep =
      analyze(parse_presentation("vars t s\nrel t*s\nrel t^3 - s^3\n"));
  CHECK(rep.n == 6);
  CHECK(rep.gorenstein);
  CHECK(rep.index_poly == "x1^3 + x2^3");
  CHECK(rep.solvable);
  CHECK(rep.cartan_agrees);
  REQUIRE(rep.null_index.has_value());
  CHECK(rep.null_index->describe() == "Full(scalar-image)");
}

TEST_CASE("report fields for the five quadrics") {
  AlgebraReport rep = analyze(parse_presentation(
      "vars x1 x2 x3\nrel x1*x2\nrel x1*x3\nrel x2*x3\n"
      "rel x1^2 - x2^2\nrel x2^2 - x3^2\n"));
  CHECK_FALSE(rep.solvable);
  CHECK(rep.null_index->kind == NullIndexVerdict::Kind::NotFull);
  CHECK(rep.perepechko.lhs == 7);
  CHECK(rep.perepechko.rhs == 3);
}

TEST_CASE("json output is deterministic and stable-keyed") {
  Presentation p = parse_presentation("vars t s\nrel t*s\nrel t^3 - s^2\n");
  std::string a = report_to_json(analyze(p)).dump(2);
  std::string b = report_to_json(analyze(p)).dump(2);
  CHECK(a == b);
  Json j = report_to_json(analyze(p));
  CHECK(j.begin().key() == "vars");  // insertion order preserved
  CHECK(j["index_polynomial"] == "x1^3");
  CHECK(j["null_index"]["witness"]["eigenbasis"].size() == 1);
}

TEST_CASE("catalog holds the five named algebras") {
  auto cat = catalog();
  REQUIRE(cat.size() == 5);
  std::vector<std::size_t> dims;
  for (const auto& [name, pres] : cat) dims.push_back(analyze(pres).n);
  CHECK(dims == std::vector<std::size_t>{4, 4, 6, 5, 5});
}

TEST_CASE("scan of dim <= 4 in two variables") {
  ScanResult s = run_scan(4, 2, /*include_catalog=*/false);
  // Staircase sizes 2, 3, 4 after dedup: 1 + 2 + 3 rows.
  CHECK(s.rows.size() == 6);
  for (const ScanRow& r : s.rows) {
    CHECK(r.source == "staircase");
    CHECK(r.perepechko_lhs >= r.perepechko_rhs);  // theorem-backed
    if (r.yau_applicable) CHECK(r.yau_lhs >= r.yau_rhs);
  }
}

TEST_CASE("minimal scan: the dual numbers row") {
  ScanResult s = run_scan(2, 1, /*include_catalog=*/false);
  REQUIRE(s.rows.size() == 1);
  CHECK(s.rows[0].n == 2);
  CHECK(s.rows[0].dim_der == 1);
  CHECK(s.rows[0].christophersen_equality);
  CHECK(s.min_margin == 0);
  CHECK(s.equality_cases.size() == 1);
}

TEST_CASE("csv output shape") {
  ScanResult s = run_scan(3, 2, /*include_catalog=*/false);
  std::string csv = scan_to_csv(s);
  // Header plus one line per row plus two footer comments.
  std::size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 1 + s.rows.size() + 2);
  CHECK(csv.rfind("source,staircase,n,", 0) == 0);
}

TEST_CASE("scan json carries the summary footer") {
  ScanResult s = run_scan(4, 2, /*include_catalog=*/false);
  Json j = scan_to_json(s);
  CHECK(j["rows"].size() == s.rows.size());
  CHECK(j["summary"]["min_margin"] == s.min_margin);
}

TEST_CASE("scan rows are deterministically ordered") {
  ScanResult a = run_scan(4, 2, false);
  ScanResult b = run_scan(4, 2, false);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    CHECK(a.rows[i].staircase == b.rows[i].staircase);
}
