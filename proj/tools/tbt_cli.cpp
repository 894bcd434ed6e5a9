// Command-line front end: code ingestion, trellis construction, dualization, suites and export.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tbt/build.hpp"
#include "tbt/char_duality.hpp"
#include "tbt/dual.hpp"
#include "tbt/errors.hpp"
#include "tbt/fixtures.hpp"
#include "tbt/io.hpp"
#include "tbt/suites.hpp"

namespace {

using namespace tbt;

enum Exit : int { kOk = 0, kCheckFailed = 1, kSupport = 2, kParse = 3, kOther = 4 };

struct Config {
  std::string input;
  std::string output;
  std::string format = "text";
  std::optional<std::uint32_t> modulus;
  std::optional<std::uint64_t> budget;
  std::string tie_break = "lex";
  bool verbose = false;

  std::string kind = "bcjr";
  std::string spans;
  std::string selection;
  std::string method = "both";
  std::string suite = "paper-examples";
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::size_t random_codes = 20;
  std::string order = "end";
  std::string emit = "report";
};

// Errors raised while reading input files map to the parse exit code.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void log(const Config& cfg, const std::string& msg) {
  if (cfg.verbose) std::cerr << "tbt: " << msg << '\n';
}

SearchBudget budget_of(const Config& cfg) {
  SearchBudget b = SearchBudget::from_environment();
  if (cfg.budget) b.max_candidates = b.max_enumeration = *cfg.budget;
  return b;
}

TieBreak tie_break_of(const Config& cfg) { return cfg.tie_break == "normalized" ? TieBreak::Normalized : TieBreak::LexFirst; }

Json load_document(const Config& cfg) {
  if (cfg.input.empty()) throw InputError("no input given");
  try {
    Json doc;
    if (cfg.input.rfind("fixture:", 0) == 0) {
      doc = fixture(cfg.input.substr(8)).document;
    } else if (cfg.input == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      doc = parse_json(ss.str());
    } else {
      doc = read_json_file(cfg.input);
    }
    if (cfg.modulus) doc["p"] = *cfg.modulus;
    return doc;
  } catch (const Error& e) {
    throw InputError(std::string(e.what()));
  }
}

CodeFile load_code(const Config& cfg) {
  const Json doc = load_document(cfg);
  if (is_trellis_json(doc)) throw InputError("expected a code file, got a trellis");
  std::optional<CodeFile> parsed;
  try {
    parsed = code_file_from_json(doc);
  } catch (const Error& e) {
    throw InputError(std::string(e.what()));
  }
  CodeFile& code = *parsed;
  // Given parity checks must describe the dual of the generated code.
  if (code.parity_checks) {
    const FieldMatrix& H = *code.parity_checks;
    if (!code.generators.multiply(H.transpose()).is_zero())
      throw Error(ErrorCode::NotOrthogonal, "parity checks are not orthogonal to the generators");
    const std::size_t expect = code.generators.cols() - rank(code.generators);
    if (rank(H) != expect)
      throw Error(ErrorCode::RankDeficient, "parity checks have rank " + std::to_string(rank(H)) + ", expected " +
                                                std::to_string(expect));
  }
  return std::move(code);
}

std::string matrix_text(const FieldMatrix& m) {
  const char* sep = m.field().modulus() > 10 ? "," : "";
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? sep : "") << m.at(r, c);
    out << '\n';
  }
  return out.str();
}

std::string list_text(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + cfg.output);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct Built {
  LinearTrellis base;
  FieldMatrix labels;
  std::vector<FieldMatrix> states;
  std::optional<BcjrTrellis> bcjr;
  std::string description;
};

SpanList spans_for(const Config& cfg, const CodeFile& code) {
  if (!cfg.spans.empty()) {
    try {
      return parse_span_list(cfg.spans, code.generators.cols());
    } catch (const Error& e) {
      throw InputError(std::string(e.what()));
    }
  }
  if (code.spans) return *code.spans;
  throw Error(ErrorCode::InvalidArgument, "this trellis kind needs --spans or a \"spans\" field");
}

FieldMatrix parity_for(const CodeFile& code) {
  return code.parity_checks ? *code.parity_checks : LinearCode::from_generator(code.generators).parity_check();
}

Built build(const Config& cfg, const CodeFile& code) {
  const FieldMatrix& G = code.generators;
  if (cfg.kind == "product") {
    ProductTrellis p = product_trellis(G, spans_for(cfg, code));
    return {p.base, G, p.M, std::nullopt, "product trellis with spans " + to_string(p.spans)};
  }
  if (cfg.kind == "bcjr") {
    BcjrTrellis t = bcjr_trellis_from_spans(G, parity_for(code), spans_for(cfg, code));
    std::string d = "BCJR trellis with spans " + to_string(*t.spans);
    return {t.base, t.G, t.N, t, d};
  }
  if (cfg.kind == "kv") {
    const LinearCode c = LinearCode::from_generator(G);
    const EndSorted x = sorted_by_end(characteristic_pair(c, tie_break_of(cfg)));
    if (cfg.selection.empty()) throw Error(ErrorCode::InvalidArgument, "kv trellises need --selection");
    std::vector<std::size_t> sel;
    try {
      sel = parse_index_list(cfg.selection);
    } catch (const Error& e) {
      throw InputError(std::string(e.what()));
    }
    BcjrTrellis t = kv_trellis(x.pair, parity_for(code), sel);
    std::string d = "KV trellis on characteristic rows " + list_text(sel) + " with spans " + to_string(*t.spans);
    return {t.base, t.G, t.N, t, d};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown trellis kind " + cfg.kind);
}

Json flags_json(const LinearTrellis& t) {
  return Json{{"reduced", is_reduced(t)}, {"biproper", is_biproper(t)}, {"one_to_one", is_one_to_one(t)}};
}

std::string trellis_text(const Built& b) {
  const ComplexityProfile p = complexity(b.base);
  std::ostringstream out;
  out << b.description << '\n' << staggered_display(b.states, b.labels);
  out << "SCP " << list_text(p.scp) << "\nECP " << list_text(p.ecp) << '\n';
  out << (is_reduced(b.base) ? "reduced" : "not reduced") << ", " << (is_biproper(b.base) ? "biproper" : "not biproper")
      << ", " << (is_one_to_one(b.base) ? "one-to-one" : "not one-to-one") << '\n';
  return out.str();
}

int cmd_charmat(const Config& cfg) {
  const CodeFile file = load_code(cfg);
  const LinearCode code = LinearCode::from_generator(file.generators);
  const CharacteristicPair start = characteristic_pair(code, tie_break_of(cfg));
  const CharacteristicPair x = cfg.order == "start" ? start : sorted_by_end(start).pair;
  if (cfg.format == "json") {
    emit(cfg, dump(Json{{"X", matrix_to_json(x.X)}, {"T", spans_to_json(x.T)}, {"tie_break", cfg.tie_break},
                        {"order", cfg.order}}));
  } else {
    emit(cfg, "X =\n" + matrix_text(x.X) + "T = " + to_string(x.T) + "\n");
  }
  return kOk;
}

int cmd_trellis(const Config& cfg) {
  const Built b = build(cfg, load_code(cfg));
  if (cfg.format == "json") {
    Json j = trellis_to_json(b.base);
    j["profile"] = profile_to_json(complexity(b.base));
    j["flags"] = flags_json(b.base);
    emit(cfg, dump(j));
  } else if (cfg.format == "dot") {
    emit(cfg, export_dot(b.base));
  } else {
    emit(cfg, trellis_text(b));
  }
  return kOk;
}

int cmd_export(const Config& cfg) {
  const Json doc = load_document(cfg);
  std::optional<LinearTrellis> t;
  if (is_trellis_json(doc)) {
    try {
      t = trellis_from_json(doc);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidTrellis) throw;
      throw InputError(std::string(e.what()));
    }
  } else {
    t = build(cfg, load_code(cfg)).base;
  }
  emit(cfg, cfg.format == "json" ? dump(trellis_to_json(*t)) : export_dot(*t));
  return kOk;
}

int cmd_dual(const Config& cfg) {
  const Json doc = load_document(cfg);
  const SearchBudget budget = budget_of(cfg);
  const bool want_local = cfg.method == "local" || cfg.method == "both";
  const bool want_bcjr = cfg.method == "bcjr" || cfg.method == "both";
  if (!want_local && !want_bcjr) throw Error(ErrorCode::InvalidArgument, "unknown method " + cfg.method);

  std::optional<LinearTrellis> primal;
  std::optional<BcjrTrellis> bcjr;
  if (is_trellis_json(doc)) {
    try {
      primal = trellis_from_json(doc);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidTrellis) throw;
      throw InputError(std::string(e.what()));
    }
  } else {
    Built b = build(cfg, load_code(cfg));
    primal = b.base;
    bcjr = b.bcjr;
  }
  if (want_bcjr && !bcjr) throw Error(ErrorCode::InvalidArgument, "the BCJR dual needs a BCJR or KV construction");

  Json report{{"method", cfg.method}, {"primal", profile_to_json(complexity(*primal))}};
  Json trellises = Json::object();
  std::optional<LinearTrellis> local;
  std::optional<BcjrTrellis> perp;
  // With BCJR data the transpose pairing makes the BCJR dual a literal subtrellis of the local dual.
  if (want_local) local = bcjr ? local_dual(*primal, bcjr_transpose_pairing(*bcjr)) : local_dual(*primal);
  if (want_bcjr) perp = bcjr_dual(*bcjr);
  if (local) {
    report["local"] = profile_to_json(complexity(*local));
    report["local"]["reduced"] = is_reduced(*local);
    trellises["local"] = trellis_to_json(*local);
  }
  if (perp) {
    report["bcjr"] = profile_to_json(complexity(perp->base));
    trellises["bcjr"] = trellis_to_json(perp->base);
  }
  if (local && perp) {
    log(cfg, "comparing the two duals");
    const SubtrellisReport sub = check_subtrellis_dual(*bcjr);
    const bool iso = find_isomorphism(perp->base, *local, budget).has_value();
    std::vector<std::size_t> gap_at;
    for (std::size_t j = 0; j < sub.gap.size(); ++j)
      if (sub.gap[j] != 0) gap_at.push_back(j);
    report["states_equal"] = sub.states_equal;
    report["contained"] = sub.contained;
    report["gap"] = sub.gap;
    report["gap_sections"] = gap_at;
    report["isomorphic"] = iso;
    report["relation"] = iso ? "isomorphic" : (sub.ok() ? "proper subtrellis" : "unrelated");
  }
  if (cfg.format == "json") {
    report["trellises"] = std::move(trellises);
    emit(cfg, dump(report));
    return kOk;
  }
  std::ostringstream out;
  const auto line = [&](const char* label, const Json& prof) {
    out << label << " SCP " << list_text(prof.at("scp").get<std::vector<std::size_t>>()) << " ECP "
        << list_text(prof.at("ecp").get<std::vector<std::size_t>>()) << '\n';
  };
  line("primal", report.at("primal"));
  if (local) line("local dual", report.at("local"));
  if (perp) line("BCJR dual", report.at("bcjr"));
  if (local && perp) {
    out << "relation: " << report.at("relation").get<std::string>() << '\n';
    const auto gaps = report.at("gap_sections").get<std::vector<std::size_t>>();
    if (!gaps.empty()) out << "local dual has extra edges at sections " << list_text(gaps) << '\n';
  }
  emit(cfg, out.str());
  return kOk;
}

int cmd_verify(const Config& cfg) {
  SuiteOptions opts;
  opts.seed = cfg.seed;
  opts.jobs = cfg.jobs;
  opts.random_codes = cfg.random_codes;
  opts.budget = budget_of(cfg);
  log(cfg, "running suite " + cfg.suite);
  SuiteResult res = [&] {
    if (cfg.suite == "kv-conjecture" && !cfg.input.empty())
      return run_kv_conjecture(opts, LinearCode::from_generator(load_code(cfg).generators));
    return run_suite(cfg.suite, opts);
  }();
  emit(cfg, dump(res.report));
  return res.ok ? kOk : kCheckFailed;
}

int cmd_kv_dual(const Config& cfg) {
  const LinearCode code = LinearCode::from_generator(load_code(cfg).generators);
  const TieBreak tb = tie_break_of(cfg);
  const KvConjectureReport rep = kv_conjecture_suite(code, tb, cfg.jobs, budget_of(cfg));
  const DualCharResult& res = rep.construction;
  if (cfg.emit == "Y") {
    std::ostringstream out;
    out << "Y =\n" << matrix_text(res.y.X) << "T = " << to_string(res.y.T) << "\nv =\n";
    out << matrix_text(FieldMatrix::from_vectors(res.H.field(), res.v, res.H.rows()));
    emit(cfg, out.str());
  } else if (cfg.emit == "report") {
    Json j = kv_report_to_json(rep);
    j["tie_break"] = tie_break_name(tb);
    j["Y"] = matrix_to_json(res.y.X);
    j["hatT"] = spans_to_json(res.y.T);
    emit(cfg, dump(j));
  } else if (cfg.emit == "trellises") {
    Json arr = Json::array();
    for (const auto& s : rep.selections) {
      const DualKvPair pair = dual_kv_pair(res, dual_selection(res, s.K), budget_of(cfg));
      arr.push_back(Json{{"K", s.K},
                         {"ok", s.ok()},
                         {"primal", trellis_to_json(pair.primal.base)},
                         {"dual", trellis_to_json(pair.dual)}});
    }
    emit(cfg, dump(arr));
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown --emit value " + cfg.emit);
  }
  return rep.ok() ? kOk : kCheckFailed;
}

int run(int argc, char** argv) {
  CLI::App app{"Tail-biting trellis construction and duality checks over prime fields"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("-o,--output", cfg.output, "Write the result to this file");
  app.add_option("--field-modulus", cfg.modulus, "Override the field size of the input");
  app.add_option("--budget", cfg.budget, "Search and enumeration budget (overrides TRELLIS_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_flag("-v,--verbose", cfg.verbose, "Log progress to stderr");

  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "Code or trellis JSON file, '-' for stdin, or fixture:NAME");
  };
  const auto add_tie_break = [&](CLI::App* sub) {
    sub->add_option("--tie-break", cfg.tie_break, "Generator choice per characteristic span")
        ->check(CLI::IsMember({"lex", "normalized"}));
  };
  const auto add_construction = [&](CLI::App* sub) {
    sub->add_option("--kind", cfg.kind, "Trellis construction")->check(CLI::IsMember({"product", "bcjr", "kv"}));
    sub->add_option("--spans", cfg.spans, "Span list \"a,b;a,b;...\" for product and BCJR trellises");
    sub->add_option("--selection", cfg.selection, "Rows of the end-sorted characteristic matrix, e.g. \"0,1\"");
    add_tie_break(sub);
  };

  CLI::App* charmat = app.add_subcommand("charmat", "Characteristic matrix and span list of a code");
  add_input(charmat);
  add_tie_break(charmat);
  charmat->add_option("--order", cfg.order, "Row order")->check(CLI::IsMember({"start", "end"}));
  charmat->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* trellis = app.add_subcommand("trellis", "Build a trellis and print its profile and properties");
  add_input(trellis);
  add_construction(trellis);
  trellis->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json", "dot"}));

  CLI::App* dual = app.add_subcommand("dual", "Local and BCJR duals of a trellis");
  add_input(dual);
  add_construction(dual);
  dual->add_option("--method", cfg.method)->check(CLI::IsMember({"local", "bcjr", "both"}));
  dual->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  add_input(verify);
  verify->add_option("--suite", cfg.suite)->check(CLI::IsMember({"paper-examples", "examples", "kv-conjecture", "properties"}));
  verify->add_option("--seed", cfg.seed, "Seed for the random code sample");
  verify->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--random-codes", cfg.random_codes, "Number of random codes");

  CLI::App* exp = app.add_subcommand("export", "Write a trellis as DOT or JSON");
  add_input(exp);
  add_construction(exp);
  exp->add_option("--format", cfg.format, "Defaults to dot")->check(CLI::IsMember({"dot", "json"}));

  CLI::App* kv = app.add_subcommand("kv-dual", "Dual characteristic matrix and the duality checks on every selection");
  add_input(kv);
  add_tie_break(kv);
  kv->add_option("--emit", cfg.emit)->check(CLI::IsMember({"Y", "report", "trellises"}));
  kv->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kOther;
  }

  try {
    if (charmat->parsed()) return cmd_charmat(cfg);
    if (trellis->parsed()) return cmd_trellis(cfg);
    if (dual->parsed()) return cmd_dual(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (exp->parsed()) return cmd_export(cfg);
    if (kv->parsed()) return cmd_kv_dual(cfg);
  } catch (const InputError& e) {
    std::cerr << "tbt: " << e.what() << '\n';
    return kParse;
  } catch (const Error& e) {
    std::cerr << "tbt: " << e.what() << '\n';
    return e.code() == ErrorCode::SupportError ? kSupport : kOther;
  } catch (const std::exception& e) {
    std::cerr << "tbt: " << e.what() << '\n';
    return kOther;
  }
  return kOther;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
