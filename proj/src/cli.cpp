#include "torelli/cli.hpp"

#include "torelli/rep_theory.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <iomanip>
#include <thread>

namespace torelli::cli {

namespace {

using nlohmann::json;

/// Failure that maps directly onto an exit code.
struct CommandError {
  int exit_code;
  std::string message;
};

struct RunConfig {
  std::string case_selection = "both";
  int order = kDefaultOrder;
  std::string rep_path;
  std::vector<std::string> words;
  std::string catalog_path;
  std::string out_path;
  bool json_output = false;
  // search
  long max_a = 8;
  long max_m = 6;
  std::vector<int> etas{1, -1};
  // decompose
  bool chartable_only = false;
  bool perturb_chartable = false;
};

std::vector<CaseTag> selected_cases(const RunConfig& cfg) {
  if (cfg.case_selection == "plus") return {CaseTag::Plus};
  if (cfg.case_selection == "minus") return {CaseTag::Minus};
  return {CaseTag::Plus, CaseTag::Minus};
}

json normalization_json(const std::optional<Normalization>& n) {
  if (!n) return nullptr;
  return {{"eta", n->eta}, {"a", n->a}, {"m", n->m}};
}

json matrix_json(const SquareMatrix<Rational>& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json check_json(const std::string& name, const std::string& expected, const std::string& actual) {
  return {{"name", name}, {"expected", expected}, {"actual", actual}, {"passed", expected == actual}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError{kEnvironment, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CommandError{kEnvironment, "cannot write '" + path + "'"};
  out << contents;
  if (!out) throw CommandError{kEnvironment, "write to '" + path + "' failed"};
}

json parse_json_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw CommandError{kEnvironment, "SCHEMA_ERROR: '" + path + "' is not valid JSON: " + e.what()};
  }
}

RepDefinition default_search() { return search_valid_rep({1, -1}, {-8, 8}, {1, 6}); }

/// The representation named by --rep, or the built-in one (loaded from the
/// working-directory cache, or searched and then cached).
RepDefinition resolve_rep(const RunConfig& cfg, std::ostream& err) {
  if (!cfg.rep_path.empty()) {
    const json doc = parse_json_file(cfg.rep_path);
    try {
      return rep_from_document(doc);
    } catch (const Error& e) {
      const int code = e.code() == ErrorCode::SchemaError ? kEnvironment : kCheckFailed;
      throw CommandError{code, e.what()};
    }
  }
  if (std::filesystem::exists(kRepCacheFile)) {
    try {
      return rep_from_document(parse_json_file(kRepCacheFile));
    } catch (const Error& e) {
      err << "warning: ignoring invalid cache " << kRepCacheFile << " (" << e.what() << ")\n";
    } catch (const CommandError& e) {
      err << "warning: ignoring unreadable cache " << kRepCacheFile << " (" << e.message << ")\n";
    }
  }
  RepDefinition rep = default_search();
  try {
    write_file(kRepCacheFile, rep_to_document(rep).dump(2) + "\n");
  } catch (const CommandError& e) {
    err << "warning: " << e.message << "\n";
  }
  return rep;
}

std::string rep_source(const RunConfig& cfg) { return cfg.rep_path.empty() ? "built-in" : cfg.rep_path; }

void emit(const RunConfig& cfg, json doc, const std::string& summary, std::ostream& out) {
  if (!doc.contains("order")) doc["order"] = cfg.order;
  const std::string text = doc.dump(2) + "\n";
  if (!cfg.out_path.empty()) write_file(cfg.out_path, text);
  if (cfg.json_output)
    out << text;
  else
    out << summary;
}

// validate ------------------------------------------------------------------

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RepDefinition rep;
  if (cfg.rep_path.empty()) {
    rep = resolve_rep(cfg, err);
  } else {
    try {
      rep = parse_rep_document(parse_json_file(cfg.rep_path));
    } catch (const Error& e) {
      throw CommandError{kEnvironment, e.what()};
    }
  }

  json doc;
  doc["command"] = "validate";
  doc["representation"] = rep_source(cfg);
  doc["normalization"] = normalization_json(rep.normalization);

  const auto report = check_presentation(rep.generators);
  json relations = json::array();
  for (const auto& r : report.relations) {
    json entry{{"name", r.name}, {"passed", r.passed}};
    if (!r.passed) entry["difference"] = r.difference;
    relations.push_back(std::move(entry));
  }
  doc["relations"] = std::move(relations);

  json dets = json::array();
  for (std::size_t i = 0; i < rep.generators.size(); ++i)
    dets.push_back({{"generator", "c" + std::to_string(i + 1)}, {"det", determinant(rep.generators[i]).to_string()}});
  doc["determinants"] = std::move(dets);

  std::string failure;
  try {
    validate_rep(rep);
  } catch (const Error& e) {
    failure = e.what();
  }
  doc["checks"] = json::array({json{{"name", "det rho(c_i) in {+1,-1}, independent of i"},
                                    {"expected", "+1 or -1"},
                                    {"actual", doc["determinants"][0]["det"]},
                                    {"passed", failure.rfind("DET_NOT_PM1", 0) != 0}},
                               json{{"name", "all presentation relations"},
                                    {"expected", "pass"},
                                    {"actual", report.all_passed() ? "pass" : "fail"},
                                    {"passed", report.all_passed()}}});
  doc["first_failure"] = failure.empty() ? json(nullptr) : json(failure);
  doc["status"] = failure.empty() ? "ok" : "failed";

  std::ostringstream summary;
  summary << "representation: " << rep_source(cfg) << "\n";
  if (rep.normalization)
    summary << "normalization: eta=" << rep.normalization->eta << " a=" << rep.normalization->a
            << " m=" << rep.normalization->m << "\n";
  summary << "relations: " << std::count_if(report.relations.begin(), report.relations.end(),
                                            [](const RelationResult& r) { return r.passed; })
          << "/" << report.relations.size() << " pass\n";
  summary << "det rho(c1) = " << doc["determinants"][0]["det"].get<std::string>() << "\n";
  summary << (failure.empty() ? "valid\n" : "INVALID: " + failure + "\n");
  emit(cfg, doc, summary.str(), out);
  return failure.empty() ? kOk : kCheckFailed;
}

// analyze -------------------------------------------------------------------

struct AnalysisJob {
  std::string text;
  CaseTag eps;
};

json analyze_one(const RepDefinition& rep, const AnalysisJob& job, int order) {
  json doc;
  doc["word"] = job.text;
  doc["case"] = case_name(job.eps);
  doc["epsilon"] = sign_of(job.eps);
  doc["order"] = order;
  doc["normalization"] = normalization_json(rep.normalization);
  MCGWord w;
  try {
    w = parse_word(job.text);
  } catch (const Error& e) {
    doc["status"] = "error";
    doc["error"] = std::string(error_code_name(e.code()));
    doc["message"] = e.what();
    return doc;
  }
  doc["reduced_word"] = w.to_string();
  doc["exponent_sum"] = w.exponent_sum();
  doc["abelianization_class"] = abelianization_class(w);
  try {
    const auto r = analyze(rep, w, job.eps, order);
    doc["torelli"] = r.torelli;
    doc["degree0_trivial"] = r.degree0_trivial;
    doc["depth"] = r.depth;
    doc["delta"] = matrix_json(r.delta);
    doc["trace"] = r.trace.get_str();
    doc["det_lemma_ok"] = r.det_lemma_ok;
    doc["det_identically_one"] = r.det_identically_one;
    doc["trivial_projection"] = r.trivial_projection.get_str();
    json checks = json::array();
    checks.push_back(check_json("det = 1 + h^k trace(Delta_k) mod h^(k+1)", "true", r.det_lemma_ok ? "true" : "false"));
    checks.push_back(check_json("det of series = 1 through h^N", "true", r.det_identically_one ? "true" : "false"));
    checks.push_back(check_json("trace(Delta_k) = 0", "0", r.trace.get_str()));
    checks.push_back(check_json("trivial projection of Delta_k", "0", r.trivial_projection.get_str()));
    checks.push_back(check_json("exponent sum even", "0", std::to_string(((w.exponent_sum() % 2) + 2) % 2)));
    bool all = true;
    for (const auto& c : checks) all = all && c["passed"].get<bool>();
    doc["checks"] = std::move(checks);
    doc["status"] = all ? "ok" : "check_failed";
  } catch (const Error& e) {
    doc["torelli"] = e.code() != ErrorCode::NotTorelli;
    doc["status"] = "error";
    doc["error"] = std::string(error_code_name(e.code()));
    doc["message"] = e.what();
    if (e.code() == ErrorCode::ValuationExceedsOrder)
      doc["hint"] = "retry with --order " + std::to_string(order * 2);
  }
  return doc;
}

std::vector<std::string> collect_words(const RunConfig& cfg) {
  std::vector<std::string> words = cfg.words;
  if (!cfg.catalog_path.empty()) {
    for (auto& line : read_catalog_lines(read_file(cfg.catalog_path))) words.push_back(std::move(line));
  }
  if (words.empty()) throw CommandError{kEnvironment, "no words given (use --word or --catalog)"};
  return words;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto words = collect_words(cfg);
  const RepDefinition rep = resolve_rep(cfg, err);

  std::vector<AnalysisJob> jobs;
  for (const auto& w : words)
    for (CaseTag eps : selected_cases(cfg)) jobs.push_back({w, eps});

  // Results land in input order regardless of which worker finishes first.
  std::vector<json> results(jobs.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                            static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < jobs.size(); k = next++) results[k] = analyze_one(rep, jobs[k], cfg.order);
    });
  for (auto& th : pool) th.join();

  json reports = json::array();
  std::vector<std::string> failing;
  std::ostringstream summary;
  for (auto& r : results) {
    const bool ok = r["status"] == "ok";
    summary << (ok ? "ok    " : "FAIL  ") << r["case"].get<std::string>() << "  " << r["word"].get<std::string>();
    if (ok)
      summary << "  depth " << r["depth"].get<int>() << "  trace " << r["trace"].get<std::string>();
    else if (r.contains("error"))
      summary << "  " << r["error"].get<std::string>()
              << (r.contains("hint") ? " (" + r["hint"].get<std::string>() + ")" : "");
    summary << "\n";
    if (!ok) failing.push_back(r["word"].get<std::string>() + " [" + r["case"].get<std::string>() + "]");
    reports.push_back(std::move(r));
  }
  json doc;
  doc["command"] = "analyze";
  doc["representation"] = rep_source(cfg);
  doc["normalization"] = normalization_json(rep.normalization);
  doc["order"] = cfg.order;
  doc["reports"] = std::move(reports);
  doc["failing"] = failing;
  doc["status"] = failing.empty() ? "ok" : "failed";
  summary << (failing.empty() ? "all words pass\n" : std::to_string(failing.size()) + " failing\n");
  emit(cfg, doc, summary.str(), out);
  return failing.empty() ? kOk : kCheckFailed;
}

// decompose / chartable -----------------------------------------------------

const std::vector<std::pair<Partition, long>>& expected_multiplicities() {
  static const std::vector<std::pair<Partition, long>> v{
      {Partition({6}), 1}, {Partition({4, 2}), 1}, {Partition({2, 2, 2}), 1}, {Partition({3, 1, 1, 1}), 1}};
  return v;
}

CharacterTable table_for(const RunConfig& cfg) {
  CharacterTable t = character_table(6);
  if (cfg.perturb_chartable) {
    // Test hook: corrupt chi_[6] on the class of transpositions.
    t.values[static_cast<std::size_t>(t.index_of_irrep(Partition({6})))]
            [static_cast<std::size_t>(t.index_of_class(Partition({2, 1, 1, 1, 1})))] = -1;
  }
  return t;
}

json chartable_checks(const CharacterTable& table, std::vector<std::string>& diff) {
  json doc = character_table_document(table);
  const auto id_col = static_cast<std::size_t>(table.index_of_class(Partition({1, 1, 1, 1, 1, 1})));
  bool dims_ok = true;
  for (std::size_t a = 0; a < table.irreps.size(); ++a)
    if (table.values[a][id_col] != syt_count(table.irreps[a].parts())) dims_ok = false;
  doc["identity_column_matches_syt_counts"] = dims_ok;
  if (!table.rows_orthogonal()) diff.push_back("character table rows are not orthogonal");
  if (!table.columns_orthogonal()) diff.push_back("character table columns are not orthogonal");
  if (!dims_ok) diff.push_back("identity column differs from standard tableau counts");
  return doc;
}

int cmd_chartable(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> diff;
  const CharacterTable table = table_for(cfg);
  json doc = chartable_checks(table, diff);
  doc["command"] = "chartable";
  doc["normalization"] = nullptr;
  doc["diff"] = diff;
  doc["status"] = diff.empty() ? "ok" : "failed";
  std::ostringstream summary;
  summary << "S6 character table (rows: irreducibles, columns: cycle types)\n";
  summary << std::setw(14) << "";
  for (const auto& c : table.classes) summary << std::setw(14) << c.to_string();
  summary << "\n";
  for (std::size_t a = 0; a < table.irreps.size(); ++a) {
    summary << std::setw(14) << table.irreps[a].to_string();
    for (long v : table.values[a]) summary << std::setw(14) << v;
    summary << "\n";
  }
  summary << "orthogonality: rows " << (table.rows_orthogonal() ? "ok" : "FAIL") << ", columns "
          << (table.columns_orthogonal() ? "ok" : "FAIL") << "\n";
  emit(cfg, doc, summary.str(), out);
  return diff.empty() ? kOk : kCheckFailed;
}

json decompose_case(const RepDefinition& rep, CaseTag eps, const CharacterTable& table,
                    std::vector<std::string>& diff) {
  json doc;
  doc["case"] = case_name(eps);
  const std::string tag = "[" + case_name(eps) + "] ";
  const S6Module mod(rep, eps);
  doc["group_order"] = mod.generated_group_order();
  if (doc["group_order"] != 720) diff.push_back(tag + "degree-0 image has order " + doc["group_order"].dump() + ", expected 720");

  std::map<Partition, Integer> mult;
  try {
    mult = mod.decompose_conjugation_module(table);
  } catch (const std::logic_error& e) {
    diff.push_back(tag + e.what());
  }
  std::map<Partition, long> expected;
  for (const auto& [p, m] : expected_multiplicities()) expected[p] = m;

  json mult_doc = json::object();
  json expected_doc = json::object();
  json rank_doc = json::object();
  Integer dim_sum = 0;
  std::vector<RationalMatrix> projectors;
  const auto id25 = RationalMatrix::identity(25);
  RationalMatrix total = RationalMatrix::zero(25);
  for (const auto& lambda : table.irreps) {
    const long exp_m = expected.count(lambda) ? expected[lambda] : 0;
    expected_doc[lambda.to_string()] = std::to_string(exp_m);
    if (!mult.empty()) {
      mult_doc[lambda.to_string()] = mult[lambda].get_str();
      dim_sum += mult[lambda] * syt_count(lambda.parts());
      if (mult[lambda] != exp_m)
        diff.push_back(tag + "multiplicity of " + lambda.to_string() + ": expected " + std::to_string(exp_m) +
                       ", got " + mult[lambda].get_str());
    }
    auto proj = mod.isotypic_projector(lambda, table);
    const int rank = rank_exact(proj);
    rank_doc[lambda.to_string()] = rank;
    const long exp_rank = exp_m * syt_count(lambda.parts());
    if (rank != exp_rank)
      diff.push_back(tag + "rank of P_" + lambda.to_string() + ": expected " + std::to_string(exp_rank) + ", got " +
                     std::to_string(rank));
    if (proj * proj != proj) diff.push_back(tag + "P_" + lambda.to_string() + " is not idempotent");
    total += proj;
    projectors.push_back(std::move(proj));
  }
  doc["multiplicities"] = mult_doc;
  doc["expected_multiplicities"] = expected_doc;
  doc["projector_ranks"] = rank_doc;
  doc["dimension_sum"] = dim_sum.get_str();
  if (!mult.empty() && dim_sum != 25) diff.push_back(tag + "dimension sum " + dim_sum.get_str() + " != 25");

  bool orthogonal = true;
  for (std::size_t a = 0; a < projectors.size(); ++a)
    for (std::size_t b = a + 1; b < projectors.size(); ++b)
      if (!(projectors[a] * projectors[b]).is_zero()) orthogonal = false;
  doc["projectors_orthogonal"] = orthogonal;
  doc["projectors_complete"] = total == id25;
  if (!orthogonal) diff.push_back(tag + "isotypic projectors are not mutually orthogonal");
  if (total != id25) diff.push_back(tag + "isotypic projectors do not sum to the identity");

  // The trivial isotypic component is the center: P_[6](e) = (trace e / 5) I.
  const auto& trivial = projectors[static_cast<std::size_t>(table.index_of_irrep(Partition({6})))];
  bool center = true;
  for (int k = 0; k < 25; ++k) {
    std::vector<Rational> e(25, Rational(0));
    e[static_cast<std::size_t>(k)] = 1;
    const auto image = unflatten(torelli::apply(trivial, e), 5);
    if (image != RationalMatrix::identity(5) * project_trivial(unflatten(e, 5))) center = false;
  }
  doc["center_identified"] = center;
  if (!center) diff.push_back(tag + "trivial projection is not (trace/5) I");

  bool trace_free = true;
  for (std::size_t a = 0; a < projectors.size(); ++a) {
    if (table.irreps[a] == Partition({6})) continue;
    for (int col = 0; col < 25; ++col) {
      std::vector<Rational> v(25);
      for (int r = 0; r < 25; ++r) v[static_cast<std::size_t>(r)] = projectors[a](r, col);
      if (matrix_trace(unflatten(v, 5)) != 0) trace_free = false;
    }
  }
  doc["nontrivial_components_trace_free"] = trace_free;
  if (!trace_free) diff.push_back(tag + "a nontrivial isotypic component contains a matrix with nonzero trace");
  return doc;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.chartable_only) return cmd_chartable(cfg, out);
  const RepDefinition rep = resolve_rep(cfg, err);
  std::vector<std::string> diff;
  const CharacterTable table = table_for(cfg);

  json doc;
  doc["command"] = "decompose";
  doc["representation"] = rep_source(cfg);
  doc["normalization"] = normalization_json(rep.normalization);
  doc["character_table"] = chartable_checks(table, diff);
  json cases = json::array();
  for (CaseTag eps : selected_cases(cfg)) {
    try {
      cases.push_back(decompose_case(rep, eps, table, diff));
    } catch (const Error& e) {
      diff.push_back("[" + case_name(eps) + "] " + e.what());
    }
  }
  doc["s6"] = std::move(cases);

  json sp = json::object();
  const std::vector<std::tuple<int, int, long>> sp_expected{{0, 0, 1}, {2, 0, 10}, {0, 2, 14}};
  long sp_sum = 0;
  json dims = json::array();
  for (const auto& [a, b, want] : sp_expected) {
    const long d = weyl_dim_c2(a, b);
    sp_sum += d;
    dims.push_back({{"weight", {a, b}}, {"dim", d}, {"expected", want}});
    if (d != want)
      diff.push_back("dim Gamma_{" + std::to_string(a) + "," + std::to_string(b) + "} = " + std::to_string(d) +
                     ", expected " + std::to_string(want));
  }
  sp["summands"] = std::move(dims);
  sp["sum"] = sp_sum;
  sp["defining_dim_0_1"] = weyl_dim_c2(0, 1);
  if (sp_sum != 25) diff.push_back("Sp(4) dimension sum " + std::to_string(sp_sum) + " != 25");
  if (weyl_dim_c2(0, 1) != rep.dim) diff.push_back("dim Gamma_{0,1} differs from the representation dimension");
  doc["sp4"] = std::move(sp);
  doc["diff"] = diff;
  doc["status"] = diff.empty() ? "ok" : "failed";

  std::ostringstream summary;
  for (const auto& c : doc["s6"]) {
    summary << c["case"].get<std::string>() << ": ";
    for (const auto& [name, m] : c["multiplicities"].items())
      if (m != "0") summary << name << "x" << m.get<std::string>() << " ";
    summary << "(dim sum " << c["dimension_sum"].get<std::string>() << ", group order " << c["group_order"] << ")\n";
  }
  summary << "Sp(4): 1 + 10 + 14 = " << sp_sum << "\n";
  for (const auto& d : diff) summary << "DIFF: " << d << "\n";
  summary << (diff.empty() ? "decomposition matches\n" : "decomposition MISMATCH\n");
  emit(cfg, doc, summary.str(), out);
  return diff.empty() ? kOk : kCheckFailed;
}

// search --------------------------------------------------------------------

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  if (cfg.max_a < 0 || cfg.max_m < 0) throw CommandError{kEnvironment, "search bounds must be nonnegative"};
  try {
    const RepDefinition rep = search_valid_rep(cfg.etas, {-cfg.max_a, cfg.max_a}, {1, cfg.max_m});
    const json doc = rep_to_document(rep);
    std::ostringstream summary;
    summary << "found eta=" << rep.normalization->eta << " a=" << rep.normalization->a
            << " m=" << rep.normalization->m << "\n";
    if (!cfg.out_path.empty()) summary << "wrote " << cfg.out_path << "\n";
    emit(cfg, doc, summary.str(), out);
    return kOk;
  } catch (const SearchExhausted& e) {
    json failures = json::array();
    for (const auto& f : e.failures())
      failures.push_back({{"candidate", normalization_json(f.candidate)}, {"reason", f.reason}});
    json doc{{"command", "search"}, {"normalization", nullptr}, {"status", "failed"}, {"error", "SEARCH_EXHAUSTED"}, {"failures", failures}};
    std::ostringstream summary;
    summary << e.what() << "\nhint: widen --max-a/--max-m or load matrices with --rep\n";
    emit(cfg, doc, summary.str(), out);
    return kCheckFailed;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of determinant and trace properties of the genus-2 Jones representation"};
  app.name("torelli");
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--case", cfg.case_selection, "Substitution branch u = +e^h, -e^h, or both")
        ->check(CLI::IsMember({"plus", "minus", "both"}));
    sub->add_option("--order", cfg.order, "Truncation order N in h")->check(CLI::Range(2, 64));
    sub->add_option("--rep", cfg.rep_path, "Representation-definition document (default: built-in)");
    sub->add_option("--out", cfg.out_path, "Write the JSON document to this path");
    sub->add_flag("--json", cfg.json_output, "Print the JSON document instead of a summary");
  };

  auto* validate = app.add_subcommand("validate", "Check relations and the determinant of a representation");
  add_common(validate);
  auto* analyze_cmd = app.add_subcommand("analyze", "Filtration depth and leading term of Torelli words");
  add_common(analyze_cmd);
  analyze_cmd->add_option("--word", cfg.words, "Word expression (repeatable)")->allow_extra_args(false);
  analyze_cmd->add_option("--catalog", cfg.catalog_path, "File with one word per line, '#' comments");
  auto* decompose = app.add_subcommand("decompose", "S6 decomposition of M(5,Q) and Sp(4) dimension checks");
  add_common(decompose);
  decompose->add_flag("--chartable-only", cfg.chartable_only, "Only print the S6 character table");
  decompose->add_flag("--perturb-chartable", cfg.perturb_chartable)->group("");
  auto* search = app.add_subcommand("search", "Search the normalization (eta, a, m) of the representation");
  add_common(search);
  search->add_option("--max-a", cfg.max_a, "Search a in [-max_a, max_a]");
  search->add_option("--max-m", cfg.max_m, "Search m in [1, max_m]");
  search->add_option("--eta", cfg.etas, "Signs eta to try, in order")->check(CLI::IsMember({1, -1}));
  auto* chartable = app.add_subcommand("chartable", "Print the S6 character table");
  add_common(chartable);
  chartable->add_flag("--perturb-chartable", cfg.perturb_chartable)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kEnvironment;
  }

  try {
    if (validate->parsed()) return cmd_validate(cfg, out, err);
    if (analyze_cmd->parsed()) return cmd_analyze(cfg, out, err);
    if (decompose->parsed()) return cmd_decompose(cfg, out, err);
    if (search->parsed()) return cmd_search(cfg, out);
    if (chartable->parsed()) return cmd_chartable(cfg, out);
  } catch (const CommandError& e) {
    err << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::SchemaError ? kEnvironment : kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kEnvironment;
  }
  return kEnvironment;
}

}  // namespace torelli::cli
