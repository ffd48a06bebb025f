#include "qcvx/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "parallel.hpp"
#include "qcvx/corpus.hpp"
#include "qcvx/report.hpp"

namespace qcvx::cli {

namespace {

using PairArgs = std::vector<std::pair<std::string, std::string>>;

struct Output {
  std::string path;
  bool no_timestamp = false;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

Json header(const std::string& command, const Output& o, Json config) {
  Json doc{{"tool", "qcvx"}, {"tool_version", kVersion}, {"command", command}};
  if (!o.no_timestamp) doc["timestamp"] = utc_timestamp();
  doc["config"] = std::move(config);
  return doc;
}

void emit(const Json& doc, const Output& o, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.path);
  if (!file) throw Error(Errc::parse, "cannot write '" + o.path + "'");
  file << text;
}

Json function_summary(const Function1D& f, const std::string& source) {
  Json s{{"source", source}, {"type", f.kind_name()}};
  s["domain"] = Json::array({to_string(f.lo()), to_string(f.hi())});
  s["breakpoint_count"] = f.breakpoints().size();
  return s;
}

std::vector<std::pair<Rational, Rational>> resolve_pairs(const Function1D& f, const PairArgs& args, bool all) {
  std::vector<std::pair<Rational, Rational>> pairs;
  if (all) {
    const auto b = f.breakpoints();
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) pairs.emplace_back(b[i], b[j]);
    }
  }
  for (const auto& [x, y] : args) pairs.emplace_back(parse_rational(x), parse_rational(y));
  if (pairs.empty()) pairs.emplace_back(f.lo(), f.hi());
  for (const auto& [x, y] : pairs) {
    if (!(x < y)) throw Error(Errc::ordering, "pair (" + to_string(x) + ", " + to_string(y) + ") needs x < y");
    if (x < f.lo() || y > f.hi()) {
      throw Error(Errc::domain, "pair (" + to_string(x) + ", " + to_string(y) + ") outside the domain");
    }
  }
  return pairs;
}

Json plot_columns(const Function1D& f, int points) {
  Json t = Json::array();
  Json v = Json::array();
  for (int i = 0; i < points; ++i) {
    const Rational x = f.lo() + (f.hi() - f.lo()) * ratio(i, points - 1);
    t.push_back(to_double(x));
    v.push_back(report::decimal(evaluate(f, x)));
  }
  return Json{{"t", std::move(t)}, {"f", std::move(v)}};
}

// Exit code for a library error raised while running an analysis.
int classify(const Error& e) {
  switch (e.code()) {
    case Errc::precondition:
    case Errc::inexact_model:
    case Errc::unsupported_chord:
      return kPrecondition;
    case Errc::consistency:
      return kInconsistent;
    default:
      return kUsage;
  }
}

void report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  if (!e.offending_points().empty()) {
    err << "offending points:";
    for (const auto& p : e.offending_points()) err << " " << to_string(p);
    err << "\n";
  }
}

// --- analyze -------------------------------------------------------------

struct AnalyzeArgs {
  std::string file;
  PairArgs pairs;
  bool all_pairs = false;
  int grid = 201;
  unsigned jobs = 1;
  bool with_oracle = false;
  bool fail_on_violation = false;
  int plot_points = 101;
  Output output;
};

int analyze(const AnalyzeArgs& a, std::ostream& out) {
  Function1D f = load_function_file(a.file);
  if (!f.is_exact()) throw Error(Errc::inexact_model, "analyze needs an exact model; use 'oracle' for " + f.kind_name());
  auto pairs = resolve_pairs(f, a.pairs, a.all_pairs);

  Json doc = header("analyze", a.output,
                    Json{{"pairs", pairs.size()},
                         {"all_breakpoint_pairs", a.all_pairs},
                         {"grid_points", a.grid},
                         {"oracle", a.with_oracle},
                         {"plot_points", a.plot_points},
                         {"fail_on_violation", a.fail_on_violation}});
  doc["function"] = function_summary(f, a.file);
  doc["semicontinuity"] = report::semicontinuity(check_semicontinuity(f));
  const auto verdict = is_quasiconvex(f);
  doc["verdict"] = report::verdict(verdict);
  doc["cor3"] = report::corollary3(corollary3_hypothesis(f));

  auto records = detail::parallel_map(pairs.size(), a.jobs, [&](std::size_t i) {
    const auto& [x, y] = pairs[i];
    Json rec = report::decomposition(violation_set(f, x, y));
    rec["witness_check"] = report::witness_check(witness_check_cor2(f, x, y));
    try {
      rec["tconv"] = report::convexity_violation(convexity_violation_set(f, x, y));
    } catch (const Error& e) {
      if (e.code() != Errc::unsupported_chord) throw;
      rec["tconv"] = Json{{"unsupported", e.what()}};
    }
    return rec;
  });
  doc["pairs"] = Json(std::move(records));

  if (a.with_oracle) {
    ToleranceConfig cfg;
    cfg.grid_points = a.grid;
    doc["oracle"] = report::oracle_verdict(oracle_quasiconvex(f, cfg, 20), 20);
  }
  if (a.plot_points >= 2) doc["plot"] = plot_columns(f, a.plot_points);
  emit(doc, a.output, out);
  return a.fail_on_violation && !verdict.is_quasiconvex ? kViolation : kOk;
}

// --- certify -------------------------------------------------------------

struct CertifyArgs {
  std::string file;
  std::vector<std::string> interval;
  int grid = 201;
  Output output;
};

int certify(const CertifyArgs& a, std::ostream& out) {
  Function1D f = load_function_file(a.file);
  Rational x0 = f.lo();
  Rational y0 = f.hi();
  if (!a.interval.empty()) {
    x0 = parse_rational(a.interval.at(0));
    y0 = parse_rational(a.interval.at(1));
  }
  auto cert = theorem2_certificate(f, x0, y0);

  Json doc = header("certify", a.output, Json{{"grid_points", a.grid}});
  doc["function"] = function_summary(f, a.file);
  Json interval;
  report::put(interval, "x0", x0);
  report::put(interval, "y0", y0);
  doc["interval"] = std::move(interval);
  doc["semicontinuity"] = report::semicontinuity(check_semicontinuity(f, x0, y0));
  Json certs = Json::array();
  if (cert) {
    certs.push_back(report::certificate(*cert, revalidate_certificate(f, *cert, a.grid)));
    doc["result"] = "certificate";
  } else {
    doc["result"] = "no-certificate";
    doc["reason"] = "no z in ]x0, y0[ with f(z) > max{f(x0), f(y0)}: f is quasiconvex on the interval";
  }
  doc["certificates"] = std::move(certs);
  emit(doc, a.output, out);
  return kOk;
}

// --- oracle --------------------------------------------------------------

struct OracleArgs {
  std::string file;
  int grid = 201;
  bool compare = false;
  std::string exact_report;
  PairArgs pairs;
  unsigned jobs = 1;
  std::size_t max_triples = 20;
  Output output;
};

Rational max_gap(const std::vector<Rational>& pts) {
  Rational gap = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Rational g = pts[i] - pts[i - 1];
    if (g > gap) gap = g;
  }
  return gap;
}

int oracle(const OracleArgs& a, std::ostream& out) {
  Function1D f = load_function_file(a.file);
  ToleranceConfig cfg;
  cfg.grid_points = a.grid;
  cfg.validate();
  const auto verdict = oracle_quasiconvex(f, cfg, a.max_triples);

  Json doc = header("oracle", a.output,
                    Json{{"grid_points", a.grid}, {"compare", a.compare}, {"exact_report", a.exact_report}});
  doc["function"] = function_summary(f, a.file);
  doc["oracle"] = report::oracle_verdict(verdict, a.max_triples);
  if (!a.compare) {
    emit(doc, a.output, out);
    return kOk;
  }

  bool exact_qc = false;
  std::vector<ViolationDecomposition> exact;
  if (!a.exact_report.empty()) {
    Json saved = load_json_file(a.exact_report);
    if (!saved.contains("verdict") || !saved["verdict"].contains("is_quasiconvex")) {
      throw Error(Errc::parse, "field 'verdict.is_quasiconvex': missing in " + a.exact_report);
    }
    exact_qc = saved["verdict"]["is_quasiconvex"].get<bool>();
    for (const auto& rec : saved.value("pairs", Json::array())) exact.push_back(report::decomposition_from_json(rec));
  } else {
    if (!f.is_exact()) throw Error(Errc::inexact_model, "--compare needs an exact model or --exact-report");
    exact_qc = is_quasiconvex(f).is_quasiconvex;
    for (const auto& [x, y] : resolve_pairs(f, a.pairs, false)) exact.push_back(violation_set(f, x, y));
  }

  auto diffs = detail::parallel_map(exact.size(), a.jobs, [&](std::size_t i) {
    const auto& d = exact[i];
    const auto approx = oracle_violation_set(f, d.x, d.y, cfg);
    const Rational slack = max_gap(oracle_grid(f, d.x, d.y, cfg).points);
    auto diff = diff_report(d, approx, slack);
    Json rec;
    Json pair;
    report::put(pair, "x", d.x);
    report::put(pair, "y", d.y);
    rec["pair"] = std::move(pair);
    rec["slack"] = report::rational(slack);
    rec["approx_components"] = report::intervals(approx);
    rec["diff"] = report::diff(diff);
    return std::make_pair(diff.consistent, rec);
  });

  bool consistent = exact_qc == verdict.is_quasiconvex_on_grid;
  Json pair_reports = Json::array();
  for (auto& [ok, rec] : diffs) {
    consistent = consistent && ok;
    pair_reports.push_back(std::move(rec));
  }
  doc["compare"] = Json{{"consistent", consistent},
                        {"exact_is_quasiconvex", exact_qc},
                        {"verdicts_agree", exact_qc == verdict.is_quasiconvex_on_grid},
                        {"pairs", std::move(pair_reports)}};
  emit(doc, a.output, out);
  return consistent ? kOk : kInconsistent;
}

// --- corpus --------------------------------------------------------------

struct CorpusArgs {
  std::string name;
  int depth = 6;
  std::string mode = "set";
  int knots = 8;
  std::uint64_t seed = 42;
  std::string value = "3";
  Output output;
};

int corpus_cmd(const CorpusArgs& a, std::ostream& out, std::ostream& err) {
  Json doc;
  if (a.name == "cantor") {
    doc = Json{{"type", "cantor"}, {"depth", a.depth}, {"mode", a.mode}};
  } else if (a.name == "tent") {
    doc = function_to_json(corpus::tent());
  } else if (a.name == "vee") {
    doc = function_to_json(corpus::vee());
  } else if (a.name == "ramp-plateau") {
    doc = function_to_json(corpus::ramp_plateau());
  } else if (a.name == "monotone") {
    doc = function_to_json(corpus::monotone());
  } else if (a.name == "monotone-concave") {
    doc = function_to_json(corpus::monotone_concave());
  } else if (a.name == "constant") {
    doc = function_to_json(corpus::constant(parse_rational(a.value)));
  } else if (a.name == "random-pl") {
    doc = function_to_json(corpus::random_piecewise_linear(a.knots, a.seed));
  } else {
    err << "error: unknown corpus name '" << a.name << "'; known:";
    for (const auto& n : corpus::names()) err << " " << n;
    err << "\n";
    return kUsage;
  }
  function_from_json(doc);  // validates
  emit(doc, a.output, out);
  return kOk;
}

void add_output(CLI::App* cmd, Output& o) {
  cmd->add_option("--out", o.path, "Write the document to PATH instead of standard output");
  cmd->add_flag("--no-timestamp", o.no_timestamp, "Omit the timestamp so reports are byte-identical");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quasiconvexity analysis of piecewise functions", "qcvx"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Decide quasiconvexity and decompose violation sets per pair");
  analyze_cmd->add_option("function_file", an.file, "Function document")->required();
  analyze_cmd->add_option("--pair", an.pairs, "Pair X Y to analyse (repeatable)")->expected(1, -1);
  analyze_cmd->add_flag("--all-breakpoint-pairs", an.all_pairs, "Analyse every pair of breakpoints");
  analyze_cmd->add_option("--grid", an.grid, "Oracle grid size")->check(CLI::Range(3, 100000));
  analyze_cmd->add_flag("--oracle", an.with_oracle, "Include a brute-force oracle verdict");
  analyze_cmd->add_option("--jobs", an.jobs, "Worker threads for per-pair analyses")->envname("QCVX_JOBS");
  analyze_cmd->add_flag("--fail-on-violation", an.fail_on_violation, "Exit with 2 when f is not quasiconvex");
  analyze_cmd->add_option("--plot-points", an.plot_points, "Resolution of the (t, f(t)) columns; 0 disables");
  add_output(analyze_cmd, an.output);

  CertifyArgs ce;
  auto* certify_cmd = app.add_subcommand("certify", "Extract a non-quasiconvexity certificate (p, q)");
  certify_cmd->add_option("function_file", ce.file, "Function document")->required();
  certify_cmd->add_option("--interval", ce.interval, "Interval X0 Y0 (default: the domain)")->expected(2);
  certify_cmd->add_option("--grid", ce.grid, "Revalidation grid size")->check(CLI::Range(3, 100000));
  add_output(certify_cmd, ce.output);

  OracleArgs oa;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force grid check, optionally compared with exact analysis");
  oracle_cmd->add_option("function_file", oa.file, "Function document")->required();
  oracle_cmd->add_option("--grid", oa.grid, "Uniform grid size")->check(CLI::Range(3, 100000));
  oracle_cmd->add_flag("--compare", oa.compare, "Diff against the exact analysis; exit 4 on disagreement");
  oracle_cmd->add_option("--exact-report", oa.exact_report, "Use the exact results stored in an analyze report");
  oracle_cmd->add_option("--pair", oa.pairs, "Pair X Y for the comparison (repeatable)")->expected(1, -1);
  oracle_cmd->add_option("--jobs", oa.jobs, "Worker threads")->envname("QCVX_JOBS");
  oracle_cmd->add_option("--max-triples", oa.max_triples, "Violating triples listed in the report");
  add_output(oracle_cmd, oa.output);

  CorpusArgs co;
  auto* corpus_cmd_app = app.add_subcommand("corpus", "Write a fixture function document");
  corpus_cmd_app->add_option("name", co.name, "tent | vee | ramp-plateau | monotone | monotone-concave | constant | "
                                              "cantor | random-pl")
      ->required();
  corpus_cmd_app->add_option("--depth", co.depth, "Cantor depth")->check(CLI::Range(1, 20));
  corpus_cmd_app->add_option("--mode", co.mode, "Cantor mode")->check(CLI::IsMember({"set", "complement"}));
  corpus_cmd_app->add_option("--knots", co.knots, "Maximum knot count for random-pl")->check(CLI::Range(2, 65));
  corpus_cmd_app->add_option("--seed", co.seed, "Seed for random-pl");
  corpus_cmd_app->add_option("--value", co.value, "Value of the constant fixture");
  corpus_cmd_app->add_option("--out", co.output.path, "Write the document to PATH instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (analyze_cmd->parsed()) return analyze(an, out);
    if (certify_cmd->parsed()) return certify(ce, out);
    if (oracle_cmd->parsed()) return oracle(oa, out);
    return corpus_cmd(co, out, err);
  } catch (const Error& e) {
    report_error(e, err);
    return classify(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace qcvx::cli
