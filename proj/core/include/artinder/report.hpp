#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "artinder/bounds.hpp"
#include "artinder/lie.hpp"
#include "artinder/nullindex.hpp"
#include "artinder/staircase.hpp"

namespace artinder {

using Json = nlohmann::ordered_json;

// Everything the single-algebra pipeline produces, in one record.
struct AlgebraReport {
  std::vector<std::string> variables;
  std::vector<std::string> relation_texts;

  std::size_t n = 0;
  std::size_t q = 0;  // dim m/m^2
  std::size_t r = 0;  // nilpotency index
  bool graded = false;
  std::vector<std::size_t> hilbert_samuel;
  std::size_t dim_soc = 0;
  bool gorenstein = false;

  std::string index_poly;  // "x1^3 + x2^3"; empty unless Gorenstein

  std::size_t dim_der = 0;
  std::vector<QMatrix> der_basis;  // adapted-basis matrices on m

  std::vector<std::size_t> derived_dims;
  bool solvable = false;
  std::vector<std::size_t> lower_central_dims;
  bool nilpotent = false;
  bool cartan_agrees = false;  // Cartan criterion matches derived series

  std::optional<NullIndexVerdict> null_index;  // Gorenstein only

  BoundReport perepechko;
  BoundReport yau;
  BoundReport schulze;
  ChristophersenRecord christophersen;
};

// Runs construct -> invariants -> derivations -> lie analysis -> null-index
// -> bounds on a presentation.
AlgebraReport analyze(const Presentation& p);

// Stable-key JSON document; byte-deterministic for identical inputs.
Json report_to_json(const AlgebraReport& rep, bool include_basis = false);

// Human-readable rendering of the same data.
std::string report_to_text(const AlgebraReport& rep, bool include_basis = false);

// One scan-table row, flattened for CSV/JSON emission.
struct ScanRow {
  std::string source;     // "staircase" or "catalog"
  std::string staircase;  // staircase encoding, or catalog entry name
  std::size_t n = 0;
  std::vector<std::size_t> hilbert_samuel;
  std::size_t dim_soc = 0;
  bool gorenstein = false;
  std::size_t dim_der = 0;
  bool solvable = false;
  std::string null_index_verdict;  // "n/a" when not Gorenstein
  long perepechko_lhs = 0, perepechko_rhs = 0;
  bool yau_applicable = false;
  long yau_lhs = 0, yau_rhs = 0;
  bool christophersen_equality = false;
  long margin = 0;  // dim_der - (n - 1)
};

struct ScanResult {
  std::vector<ScanRow> rows;
  long min_margin = 0;
  std::vector<std::string> equality_cases;  // staircase keys with margin 0
};

// Named fixed presentations appended to every scan after the staircase rows.
std::vector<std::pair<std::string, Presentation>> catalog();

ScanRow scan_row(std::string source, std::string key, const AlgebraReport& rep);

// One row per canonical staircase of size 2..max_dim, then the catalog.
ScanResult run_scan(std::size_t max_dim, std::size_t max_vars,
                    bool include_catalog = true);

Json scan_to_json(const ScanResult& s);
std::string scan_to_csv(const ScanResult& s);

}  // namespace artinder
