#include "artinder/report.hpp"

#include <algorithm>
#include <sstream>

namespace artinder {

namespace {

std::vector<std::string> v_names(std::size_t q) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < q; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string verdict_string(const std::optional<NullIndexVerdict>& v) {
  if (!v) return "n/a(not-gorenstein)";
  return v->describe();
}

Json matrix_to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json bound_to_json(const BoundReport& b) {
  Json j;
  j["applicable"] = b.applicable;
  if (b.applicable) {
    j["lhs"] = b.lhs;
    j["rhs"] = b.rhs;
    j["holds"] = b.holds;
  }
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

std::string join_sizes(const std::vector<std::size_t>& v, const char* sep) {
  std::string s;
  for (std::size_t x : v) {
    if (!s.empty()) s += sep;
    s += std::to_string(x);
  }
  return s;
}

}  // namespace

AlgebraReport analyze(const Presentation& p) {
  AlgebraReport rep;
  rep.variables = p.variables;
  for (const MultiPoly& f : p.relations)
    rep.relation_texts.push_back(f.to_string(p.variables));

  GroebnerBasis g = buchberger(p);
  LocalAlgebra a = from_presentation(p);

  rep.n = a.dim();
  rep.graded = a.graded_flag();
  rep.hilbert_samuel = hilbert_samuel(a);
  rep.r = filtration(a).r;
  Subspace soc = socle(a);
  rep.dim_soc = soc.dim();
  rep.gorenstein = is_gorenstein(a);

  DerivationSpace d = derivation_space(a);
  rep.q = d.q;
  rep.dim_der = d.dim();
  rep.der_basis = d.basis;

  MatrixLieAlgebra lie = MatrixLieAlgebra::from_span(rep.n - 1, d.basis);
  SeriesResult ds = derived_series(lie);
  rep.derived_dims = ds.dims;
  rep.solvable = ds.reaches_zero;
  SeriesResult lcs = lower_central_series(lie);
  rep.lower_central_dims = lcs.dims;
  rep.nilpotent = lcs.reaches_zero;
  rep.cartan_agrees = cartan_solvable(lie) == rep.solvable;

  if (rep.gorenstein) {
    IndexPolynomial ip = index_polynomial(a, d.adapted);
    rep.index_poly = ip.poly.to_string(v_names(d.q));
    rep.null_index = check_full_null_index(a, d, ip);
  }

  rep.perepechko = check_perepechko(a, d);
  rep.yau = check_yau(a, d);
  rep.schulze = schulze_criterion(p, g);
  rep.christophersen = christophersen_check(a, d);
  return rep;
}

Json report_to_json(const AlgebraReport& rep, bool include_basis) {
  Json j;
  j["vars"] = rep.variables;
  j["relations"] = rep.relation_texts;
  j["n"] = rep.n;
  j["q"] = rep.q;
  j["nilpotency_index"] = rep.r;
  j["graded"] = rep.graded;
  j["hilbert_samuel"] = rep.hilbert_samuel;
  j["dim_soc"] = rep.dim_soc;
  j["gorenstein"] = rep.gorenstein;
  j["index_polynomial"] = rep.gorenstein ? Json(rep.index_poly) : Json(nullptr);
  j["dim_der"] = rep.dim_der;
  if (include_basis) {
    Json basis = Json::array();
    for (const QMatrix& m : rep.der_basis) basis.push_back(matrix_to_json(m));
    j["der_basis"] = std::move(basis);
  }
  j["derived_series_dims"] = rep.derived_dims;
  j["solvable"] = rep.solvable;
  j["lower_central_dims"] = rep.lower_central_dims;
  j["nilpotent"] = rep.nilpotent;
  j["cartan_agrees"] = rep.cartan_agrees;

  Json ni;
  ni["verdict"] = verdict_string(rep.null_index);
  if (rep.null_index && rep.null_index->witness) {
    const auto& w = *rep.null_index->witness;
    Json wj;
    Json coeffs = Json::array();
    for (const Rational& c : w.derivation_coeffs) coeffs.push_back(to_string(c));
    wj["derivation_coeffs"] = std::move(coeffs);
    wj["eigenvalue_min_poly"] = w.eigenvalue_min_poly.to_string("w");
    NumberField f(w.eigenvalue_min_poly);
    Json basis = Json::array();
    for (const auto& vec : w.eigenbasis) {
      Json row = Json::array();
      for (const auto& e : vec) row.push_back(f.to_string(e));
      basis.push_back(std::move(row));
    }
    wj["eigenbasis"] = std::move(basis);
    ni["witness"] = std::move(wj);
  }
  if (rep.null_index &&
      rep.null_index->kind == NullIndexVerdict::Kind::Unknown) {
    ni["samples_tried"] = rep.null_index->samples_tried;
    ni["unfactored_cases"] = rep.null_index->unfactored_cases;
  }
  j["null_index"] = std::move(ni);

  j["perepechko"] = bound_to_json(rep.perepechko);
  j["yau"] = bound_to_json(rep.yau);
  j["schulze"] = bound_to_json(rep.schulze);

  Json ch;
  ch["n"] = rep.christophersen.n;
  ch["dim_der"] = rep.christophersen.dim_der;
  ch["bound_holds"] = rep.christophersen.bound_holds;
  ch["equality"] = rep.christophersen.equality;
  ch["is_chain"] = rep.christophersen.is_chain;
  j["christophersen"] = std::move(ch);
  return j;
}

std::string report_to_text(const AlgebraReport& rep, bool include_basis) {
  std::ostringstream os;
  os << "vars:";
  for (const auto& v : rep.variables) os << " " << v;
  os << "\n";
  for (const auto& r : rep.relation_texts) os << "rel: " << r << "\n";
  os << "n: " << rep.n << "\n";
  os << "q (dim m/m^2): " << rep.q << "\n";
  os << "nilpotency index: " << rep.r << "\n";
  os << "graded: " << (rep.graded ? "yes" : "no") << "\n";
  os << "hilbert-samuel: " << join_sizes(rep.hilbert_samuel, " ") << "\n";
  os << "dim soc: " << rep.dim_soc << "\n";
  os << "gorenstein: " << (rep.gorenstein ? "yes" : "no") << "\n";
  if (rep.gorenstein) os << "index polynomial: " << rep.index_poly << "\n";
  os << "dim der: " << rep.dim_der << "\n";
  if (include_basis) {
    for (std::size_t k = 0; k < rep.der_basis.size(); ++k) {
      const QMatrix& m = rep.der_basis[k];
      os << "derivation " << (k + 1) << ":\n";
      for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (j) os << " ";
          os << to_string(m.at(i, j));
        }
        os << "]\n";
      }
    }
  }
  os << "derived series dims: " << join_sizes(rep.derived_dims, " ") << "\n";
  os << "solvable: " << (rep.solvable ? "yes" : "no") << "\n";
  os << "lower central dims: " << join_sizes(rep.lower_central_dims, " ")
     << "\n";
  os << "nilpotent: " << (rep.nilpotent ? "yes" : "no") << "\n";
  os << "null-index: " << verdict_string(rep.null_index) << "\n";
  auto bound_line = [&](const BoundReport& b) {
    os << b.name << ": ";
    if (!b.applicable)
      os << "not applicable";
    else
      os << b.lhs << (b.name == "schulze" ? " vs " : " >= ") << b.rhs << " ("
         << (b.holds ? "holds" : "fails") << ")";
    if (!b.note.empty()) os << " [" << b.note << "]";
    os << "\n";
  };
  bound_line(rep.perepechko);
  bound_line(rep.yau);
  bound_line(rep.schulze);
  os << "christophersen: dim der + 1 = " << (rep.christophersen.dim_der + 1)
     << " vs n = " << rep.christophersen.n << " ("
     << (rep.christophersen.bound_holds
             ? (rep.christophersen.equality ? "equality" : "strict")
             : "FAILS")
     << ")" << (rep.christophersen.is_chain ? ", chain" : "") << "\n";
  return os.str();
}

std::vector<std::pair<std::string, Presentation>> catalog() {
  auto mono = [](std::size_t k, std::initializer_list<int> exps) {
    return MultiPoly::term(k, Monomial(exps), 1);
  };
  std::vector<std::pair<std::string, Presentation>> out;
  // Square-zero: m^2 = 0 on three generators.
  out.emplace_back(
      "square-zero-3",
      Presentation({"x", "y", "z"},
                   {mono(3, {2, 0, 0}), mono(3, {1, 1, 0}), mono(3, {1, 0, 1}),
                    mono(3, {0, 2, 0}), mono(3, {0, 1, 1}),
                    mono(3, {0, 0, 2})}));
  // Chain algebra of dimension 4.
  out.emplace_back("chain-4", Presentation({"t"}, {mono(1, {4})}));
  // Two variables, t*s and t^3 - s^3.
  out.emplace_back(
      "curve-t3s3",
      Presentation({"t", "s"}, {mono(2, {1, 1}),
                                mono(2, {3, 0}) - mono(2, {0, 3})}));
  // Two variables, t*s and t^3 - s^2.
  out.emplace_back(
      "curve-t3s2",
      Presentation({"t", "s"}, {mono(2, {1, 1}),
                                mono(2, {3, 0}) - mono(2, {0, 2})}));
  // Three variables, five quadrics.
  out.emplace_back(
      "quadrics-3",
      Presentation({"x1", "x2", "x3"},
                   {mono(3, {1, 1, 0}), mono(3, {1, 0, 1}), mono(3, {0, 1, 1}),
                    mono(3, {2, 0, 0}) - mono(3, {0, 2, 0}),
                    mono(3, {0, 2, 0}) - mono(3, {0, 0, 2})}));
  return out;
}

ScanRow scan_row(std::string source, std::string key,
                 const AlgebraReport& rep) {
  ScanRow row;
  row.source = std::move(source);
  row.staircase = std::move(key);
  row.n = rep.n;
  row.hilbert_samuel = rep.hilbert_samuel;
  row.dim_soc = rep.dim_soc;
  row.gorenstein = rep.gorenstein;
  row.dim_der = rep.dim_der;
  row.solvable = rep.solvable;
  row.null_index_verdict = verdict_string(rep.null_index);
  row.perepechko_lhs = rep.perepechko.lhs;
  row.perepechko_rhs = rep.perepechko.rhs;
  row.yau_applicable = rep.yau.applicable;
  row.yau_lhs = rep.yau.lhs;
  row.yau_rhs = rep.yau.rhs;
  row.christophersen_equality = rep.christophersen.equality;
  row.margin = static_cast<long>(rep.dim_der) - (static_cast<long>(rep.n) - 1);
  return row;
}

ScanResult run_scan(std::size_t max_dim, std::size_t max_vars,
                    bool include_catalog) {
  ScanResult out;
  for (const Staircase& s : enumerate_staircases(max_dim, max_vars)) {
    if (s.size() < 2) continue;  // {1} is the field; m = 0
    out.rows.push_back(
        scan_row("staircase", s.encode(), analyze(s.to_presentation())));
  }
  if (include_catalog)
    for (const auto& [name, pres] : catalog())
      out.rows.push_back(scan_row("catalog", name, analyze(pres)));

  out.min_margin = 0;
  bool first = true;
  for (const ScanRow& r : out.rows) {
    if (first || r.margin < out.min_margin) out.min_margin = r.margin;
    first = false;
    if (r.margin == 0) out.equality_cases.push_back(r.staircase);
  }
  return out;
}

Json scan_to_json(const ScanResult& s) {
  Json j;
  Json rows = Json::array();
  for (const ScanRow& r : s.rows) {
    Json row;
    row["source"] = r.source;
    row["staircase"] = r.staircase;
    row["n"] = r.n;
    row["hilbert_samuel"] = r.hilbert_samuel;
    row["dim_soc"] = r.dim_soc;
    row["gorenstein"] = r.gorenstein;
    row["dim_der"] = r.dim_der;
    row["solvable"] = r.solvable;
    row["null_index_verdict"] = r.null_index_verdict;
    row["perepechko_lhs"] = r.perepechko_lhs;
    row["perepechko_rhs"] = r.perepechko_rhs;
    row["yau_applicable"] = r.yau_applicable;
    row["yau_lhs"] = r.yau_lhs;
    row["yau_rhs"] = r.yau_rhs;
    row["christophersen_equality"] = r.christophersen_equality;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  Json summary;
  summary["min_margin"] = s.min_margin;
  summary["equality_cases"] = s.equality_cases;
  j["summary"] = std::move(summary);
  return j;
}

std::string scan_to_csv(const ScanResult& s) {
  std::ostringstream os;
  os << "source,staircase,n,hilbert_samuel,dim_soc,gorenstein,dim_der,"
        "solvable,null_index_verdict,perepechko_lhs,perepechko_rhs,"
        "yau_applicable,yau_lhs,yau_rhs,christophersen_equality\n";
  for (const ScanRow& r : s.rows) {
    std::string verdict = r.null_index_verdict;
    std::replace(verdict.begin(), verdict.end(), ',', ';');
    os << r.source << "," << r.staircase << "," << r.n << ","
       << join_sizes(r.hilbert_samuel, ";") << "," << r.dim_soc << ","
       << (r.gorenstein ? "true" : "false") << "," << r.dim_der << ","
       << (r.solvable ? "true" : "false") << "," << verdict << ","
       << r.perepechko_lhs << "," << r.perepechko_rhs << ","
       << (r.yau_applicable ? "true" : "false") << "," << r.yau_lhs << ","
       << r.yau_rhs << "," << (r.christophersen_equality ? "true" : "false")
       << "\n";
  }
  os << "# min_margin=" << s.min_margin << "\n";
  os << "# equality_cases=";
  for (std::size_t i = 0; i < s.equality_cases.size(); ++i) {
    if (i) os << ";";
    os << s.equality_cases[i];
  }
  os << "\n";
  return os.str();
}

}  // namespace artinder
