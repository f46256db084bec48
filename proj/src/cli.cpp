#include "mperturb/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>

#include "mperturb/bounds.hpp"
#include "mperturb/buffoni.hpp"
#include "mperturb/classify.hpp"
#include "mperturb/error.hpp"
#include "mperturb/laplacian.hpp"
#include "mperturb/linalg.hpp"
#include "mperturb/matrix_io.hpp"

namespace mperturb::cli {
namespace {

using nlohmann::ordered_json;

constexpr const char* kFullPattern = "full";

struct GlobalOptions {
  double tol = kDefaultMonotoneTol;
  bool plain = false;
  std::string format;  // empty: auto-detect
};

// JSON has no infinity; +inf is written as the string "inf".
ordered_json real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return nullptr;
  return x;
}

ordered_json real_array(std::span<const double> v) {
  ordered_json a = ordered_json::array();
  for (double x : v) a.push_back(real(x));
  return a;
}

ordered_json bound_json(const BoundResult& b) {
  ordered_json terms = ordered_json::object();
  for (const auto& [k, v] : b.terms) terms[k] = real(v);
  return {{"method", to_string(b.method)},
          {"value", real(b.value)},
          {"bound_kind", to_string(b.kind)},
          {"preconditions_ok", b.preconditions_ok},
          {"precondition_detail", b.precondition_detail},
          {"terms", terms}};
}

ordered_json trace_json(const BuffoniTrace& t) {
  return {{"method", "buffoni"},
          {"vstar", real(t.vstar)},
          {"iterations", t.iterations()},
          {"status", to_string(t.status)},
          {"final_increment", t.iterates.empty() ? ordered_json(nullptr)
                                                 : real(t.iterates.back().increment)}};
}

ordered_json report_header(const char* command) {
  return {{"schema", kReportSchema}, {"command", command}};
}

void render_plain(std::ostream& out, const ordered_json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_plain(out, v, prefix.empty() ? k : prefix + "." + k);
    return;
  }
  if (j.is_array() && !j.empty() && j.front().is_structured()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      render_plain(out, j[i], prefix + "[" + std::to_string(i) + "]");
    return;
  }
  out << std::left << std::setw(40) << prefix << ' ';
  if (j.is_string())
    out << j.get<std::string>();
  else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) out << (i ? " " : "") << j[i].dump();
  } else
    out << j.dump();
  out << '\n';
}

void emit(std::ostream& out, const ordered_json& report, const GlobalOptions& g) {
  if (g.plain) {
    render_plain(out, report, "");
    if (report.contains("matrix")) out << '\n' << report["matrix"]["text"].get<std::string>();
  } else {
    out << report.dump(2) << '\n';
  }
}

std::optional<MatrixFormat> format_of(const GlobalOptions& g) {
  if (g.format.empty()) return std::nullopt;
  return parse_format_name(g.format);
}

Matrix load(const std::string& path, const GlobalOptions& g) {
  try {
    return read_matrix_file(path, format_of(g));
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

Matrix load_pattern(const std::string& source, std::size_t n, const GlobalOptions& g) {
  if (source == kFullPattern) return Matrix::ones(n);
  Matrix e = load(source, g);
  if (e.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "perturbation is " + std::to_string(e.size()) +
                                                  "x" + std::to_string(e.size()) + ", A is " +
                                                  std::to_string(n) + "x" + std::to_string(n));
  }
  return e;
}

ordered_json cmd_classify(const std::string& path, const GlobalOptions& g) {
  const Matrix a = load(path, g);
  const ClassificationReport r = classify(a, g.tol);
  ordered_json strict = ordered_json::array();
  for (std::size_t i : r.strict_set) strict.push_back(i + 1);
  ordered_json witness = r.monotone_witness.singular
                             ? ordered_json{{"singular", true}}
                             : ordered_json{{"singular", false},
                                            {"row", r.monotone_witness.row + 1},
                                            {"col", r.monotone_witness.col + 1},
                                            {"value", real(r.monotone_witness.value)}};
  ordered_json report = report_header("classify");
  report["n"] = a.size();
  report["classification"] = {{"is_z_matrix", r.is_z_matrix},
                              {"is_m_matrix", r.is_m_matrix},
                              {"is_monotone", r.is_monotone},
                              {"is_strictly_diag_dominant", r.is_strictly_diag_dominant},
                              {"is_irreducibly_diag_dominant", r.is_irreducibly_diag_dominant},
                              {"is_irreducible", r.is_irreducible},
                              {"is_quasi_doubly_stochastic", r.is_quasi_doubly_stochastic},
                              {"sigma", real_array(r.sigma)},
                              {"strict_set", strict},
                              {"min_inverse_entry", witness}};
  if (!r.monotone_witness.singular) {
    const Matrix inv = inverse(a);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < inv.size(); ++i) rows.push_back(real_array(inv.row(i)));
    report["inverse"] = rows;
  } else {
    report["inverse"] = nullptr;
  }
  return report;
}

ordered_json cmd_bounds(const std::string& path, const std::string& pattern,
                        const std::string& which, const GlobalOptions& g) {
  const Matrix a = load(path, g);
  const bool all = which == "all";
  std::optional<Matrix> e;
  if (all || which == "bouchon") e = load_pattern(pattern, a.size(), g);

  const InverseStats stats = inverse_stats(a);
  ordered_json report = report_header("bounds");
  report["n"] = a.size();
  report["pattern"] = pattern;
  report["stats"] = {{"sigma_total", real(stats.sigma_total)},
                     {"buffoni_number", real(stats.buffoni_number)},
                     {"buffoni_argmin", {stats.argmin_row + 1, stats.argmin_col + 1}},
                     {"row_sums", real_array(stats.r)},
                     {"col_sums", real_array(stats.c)}};
  ordered_json list = ordered_json::array();
  if (all || which == "main") list.push_back(bound_json(main_bound(a, stats, g.tol)));
  if (all || which == "corollary") list.push_back(bound_json(corollary_bound(a, g.tol)));
  if (e) list.push_back(bound_json(bouchon_bound(a, *e, g.tol)));
  report["bounds"] = list;
  return report;
}

ordered_json cmd_vstar(const std::string& path, const std::string& pert, const std::string& method,
                       double abs_tol, const GlobalOptions& g) {
  const Matrix a = load(path, g);
  const Matrix e = load_pattern(pert, a.size(), g);
  ordered_json report = report_header("vstar");
  report["n"] = a.size();
  report["method"] = method;

  std::optional<BuffoniTrace> trace;
  std::optional<double> bisect;
  if (method != "bisect") {
    BuffoniOptions opts;
    opts.monotone_tol = g.tol;
    trace = buffoni_vstar(a, e, opts);
    report["buffoni"] = trace_json(*trace);
  }
  if (method != "buffoni") {
    BisectionOptions opts;
    opts.abs_tol = abs_tol;
    opts.monotone_tol = g.tol;
    bisect = bisection_vstar(a, e, opts);
    report["bisection"] = {{"method", "bisect"}, {"vstar", real(*bisect)}, {"abs_tol", abs_tol}};
  }
  const double v = trace ? trace->vstar : *bisect;
  report["vstar"] = real(v);
  if (trace && bisect) {
    const double diff = std::isinf(trace->vstar) && std::isinf(*bisect)
                            ? 0.0
                            : std::abs(trace->vstar - *bisect);
    report["discrepancy"] = real(diff);
  }
  return report;
}

ordered_json cmd_tridiag(const std::string& path, std::size_t l, std::size_t k,
                         const GlobalOptions& g) {
  const Matrix a = load(path, g);
  if (l < 1 || k < 1) throw Error(ErrorKind::IndexOutOfRange, "indices are 1-based");
  const BoundResult b = tridiagonal_bound(a, l - 1, k - 1, g.tol);
  ordered_json report = report_header("tridiag");
  report["n"] = a.size();
  report["l"] = l;
  report["k"] = k;
  report["bound"] = bound_json(b);
  return report;
}

ordered_json cmd_laplacian(std::size_t s, std::size_t t, double d, bool emit_matrix) {
  const BlockLaplacianParams p{s, t, d};
  const BlockLaplacianBounds b = block_laplacian_bounds(p);
  ordered_json report = report_header("laplacian");
  report["params"] = {{"s", s}, {"t", t}, {"d", real(d)}};
  report["n"] = p.dimension();
  report["buffoni_number"] = real(block_laplacian_buffoni_number(p));
  report["sigma_total"] = real(block_laplacian_sigma(p));
  report["bounds"] = ordered_json::array({bound_json(b.main), bound_json(b.bouchon)});
  if (emit_matrix) {
    std::ostringstream text;
    write_dense(text, build_block_laplacian(p));
    report["matrix"] = {{"format", "dense-text"}, {"text", text.str()}};
  }
  return report;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monotonicity-preserving perturbation bounds for M-matrices", "mperturb"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--tol", g.tol, "Monotonicity tolerance, relative to max|A^{-1}|")
      ->capture_default_str();
  app.add_flag("--plain", g.plain, "Human-readable output instead of JSON");
  app.add_option("--format", g.format, "Input format override")
      ->check(CLI::IsMember({"dense", "coord"}));

  std::string matrix_path;
  std::string pattern = kFullPattern;
  std::string which = "all";
  std::string pert;
  std::string method = "buffoni";
  double abs_tol = BisectionOptions{}.abs_tol;
  std::size_t l = 0, k = 0, s = 0, t = 0;
  double d = 0.0;
  bool emit_matrix = false;

  auto* classify_cmd = app.add_subcommand("classify", "Structural classification of A");
  classify_cmd->add_option("matrix", matrix_path, "Matrix file")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form perturbation bounds");
  bounds_cmd->add_option("matrix", matrix_path, "Matrix file")->required();
  bounds_cmd->add_option("--pattern", pattern, "Perturbation pattern file or 'full'")
      ->capture_default_str();
  bounds_cmd->add_option("--which", which, "Which bound(s)")
      ->check(CLI::IsMember({"main", "corollary", "bouchon", "all"}))
      ->capture_default_str();

  auto* vstar_cmd = app.add_subcommand("vstar", "Exact threshold v* for A + vE");
  vstar_cmd->add_option("matrix", matrix_path, "Matrix file")->required();
  vstar_cmd->add_option("-E,--perturbation", pert, "Perturbation file or 'full'")->required();
  vstar_cmd->add_option("--method", method, "Algorithm")
      ->check(CLI::IsMember({"buffoni", "bisect", "both"}))
      ->capture_default_str();
  vstar_cmd->add_option("--abs-tol", abs_tol, "Bisection interval width")->capture_default_str();

  auto* tridiag_cmd = app.add_subcommand("tridiag", "Sharp bound on h for A + h E_lk");
  tridiag_cmd->add_option("matrix", matrix_path, "Tridiagonal matrix file")->required();
  tridiag_cmd->add_option("l", l, "Row of the perturbed entry (1-based)")->required();
  tridiag_cmd->add_option("k", k, "Column of the perturbed entry (1-based)")->required();

  auto* lap_cmd = app.add_subcommand("laplacian", "Two-block Laplacian-type family");
  lap_cmd->add_option("s", s, "First block size")->required();
  lap_cmd->add_option("t", t, "Second block size")->required();
  lap_cmd->add_option("d", d, "Diagonal shift")->required();
  lap_cmd->add_flag("--emit-matrix", emit_matrix, "Include the matrix in dense-text format");

  for (auto* sub : {classify_cmd, bounds_cmd, vstar_cmd, tridiag_cmd, lap_cmd}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    ordered_json report;
    if (*classify_cmd)
      report = cmd_classify(matrix_path, g);
    else if (*bounds_cmd)
      report = cmd_bounds(matrix_path, pattern, which, g);
    else if (*vstar_cmd)
      report = cmd_vstar(matrix_path, pert, method, abs_tol, g);
    else if (*tridiag_cmd)
      report = cmd_tridiag(matrix_path, l, k, g);
    else
      report = cmd_laplacian(s, t, d, emit_matrix);
    emit(out, report, g);
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitMath;
  }
}

}  // namespace mperturb::cli
