#include "fourier/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "fourier/analysis.hpp"
#include "fourier/cli/report.hpp"
#include "fourier/cli/text.hpp"
#include "fourier/error.hpp"
#include "fourier/genlib.hpp"

namespace fourier::cli {
namespace {

struct Options {
  std::string form_name = "S";
  bool json = false;
  unsigned max_precision_bits = kDefaultMaxPrecisionBits;
  bool strict_nonnegative = false;

  FusionOptions fusion() const { return {strict_nonnegative, max_precision_bits}; }
  Form form() const {
    auto f = parse_form(form_name);
    if (!f) throw Error(ErrorCode::InvalidArgument, "unknown form '" + form_name + "'");
    return *f;
  }
};

struct Input {
  std::string source;
  std::string bytes;
  MatrixDocument doc;
};

Input load(const std::string& path, Form fallback, std::istream& in) {
  Input input;
  if (path.empty() || path == "-") {
    input.source = "<stdin>";
    input.bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    input.source = path;
    input.bytes.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  input.doc = parse_matrix(input.bytes, fallback, input.source);
  return input;
}

bool is_matrix_form(Form f) { return f == Form::S || f == Form::s || f == Form::P; }

void require_matrix(const MatrixDocument& doc) {
  if (!is_matrix_form(doc.form)) {
    throw Error(ErrorCode::InvalidArgument,
                "this command needs an S, s or P matrix, got form " + std::string(to_string(doc.form)));
  }
}

FourierTriple triple_of(const MatrixDocument& doc, const Options& opt) {
  require_matrix(doc);
  switch (doc.form) {
    case Form::S: return from_S(doc.matrix(), opt.max_precision_bits);
    case Form::s: return from_s(doc.matrix());
    default: return from_P(doc.matrix());
  }
}

/// The S-matrix to test: the input itself in S form, the rescaled one otherwise.
ExactMatrix fourier_candidate(const MatrixDocument& doc, const Options& opt) {
  require_matrix(doc);
  if (doc.form == Form::S) return doc.matrix();
  return triple_of(doc, opt).S;
}

Json strings(const std::vector<Cyclotomic>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(to_string(v));
  return a;
}

Json integers(const std::vector<std::int64_t>& values) {
  Json a = Json::array();
  for (auto v : values) a.push_back(v);
  return a;
}

Json verdict_details(const CheckResult& r) {
  Json d = {{"verdict", to_string(r.verdict)}};
  if (!r.witness.empty()) d["witness"] = to_json(r.witness);
  return d;
}

// Statements recorded in the ledger, keyed by section name.
std::string statement_for(std::string_view section) {
  static const std::pair<std::string_view, std::string_view> kStatements[] = {
      {"fourier-axioms", "S satisfies the Fourier matrix axioms"},
      {"modular-axioms", "(S, T) satisfies the modular datum axioms"},
      {"calgebra-axioms", "the rescaled table defines a C-algebra"},
      {"duality", "the C-algebra of a Fourier matrix is self-dual with multiplicities equal to degrees"},
      {"integrality", "the C-algebra of a Fourier matrix meets the integrality condition"},
      {"reconstruct", "a self-dual C-algebra meeting the integrality condition comes from a Fourier matrix"},
      {"square-order", "odd rank and det(P) in Z force a square order"},
      {"screen", "no nontrivial degree divides every other nontrivial degree"},
      {"degree-one", "homogeneous or prime-order Fourier matrices have unit degrees"},
      {"classification", "unit degrees force the character table of a finite abelian group"},
      {"perfect-square-degrees", "an integral s-matrix has square degrees and rational structure constants"},
      {"degree-divisibility", "rational degrees and norms are integers dividing the order"},
      {"norm-degree-identity", "the order equals d_j delta_j for every j"},
      {"rational-calgebra", "rational structure constants force integer degrees"},
  };
  for (const auto& [name, text] : kStatements) {
    if (name == section) return std::string(text);
  }
  return {};
}

/// Adds a section and, when the section checks a statement, its ledger line.
/// `premise` false downgrades the ledger line to not_applicable.
void record(Report& report, const std::string& name, Status status, Json details, bool premise = true,
            std::string ledger_detail = {}) {
  report.add_section(name, status, std::move(details));
  const std::string statement = statement_for(name);
  if (statement.empty()) return;
  if (!premise) {
    report.add_ledger(statement, Status::not_applicable,
                      ledger_detail.empty() ? "S is not a Fourier matrix" : ledger_detail);
  } else {
    report.add_ledger(statement, status, std::move(ledger_detail));
  }
}

void not_applicable(Report& report, const std::string& name, const std::string& reason, bool ledger = true) {
  report.add_section(name, Status::not_applicable, {{"detail", reason}});
  const std::string statement = statement_for(name);
  if (ledger && !statement.empty()) report.add_ledger(statement, Status::not_applicable, reason);
}

// ---- individual checks --------------------------------------------------

void fourier_section(Report& report, const ExactMatrix& S, const Options& opt, bool& passed) {
  const AxiomReport r = verify_fourier(S, opt.fusion());
  passed = r.all_passed();
  record(report, "fourier-axioms", status_of(r), to_json(r));
}

void calgebra_section(Report& report, const CAlgebra& alg, const Options& opt) {
  const AxiomReport r = verify_calgebra(alg, opt.max_precision_bits);
  record(report, "calgebra-axioms", status_of(r), to_json(r));
}

Json duality_json(const DualityReport& d) {
  Json j = {{"self_dual", d.is_self_dual},
            {"normalized", d.is_normalized},
            {"multiplicities", strings(d.multiplicities)},
            {"multiplicities_match_degrees", d.multiplicities_match_degrees}};
  if (d.mismatch) j["witness"] = Json::array({*d.mismatch});
  return j;
}

void duality_section(Report& report, const FourierTriple& t, bool premise) {
  const DualityReport d = duality_report(t);
  const bool ok = d.is_self_dual && d.multiplicities_match_degrees;
  record(report, "duality", ok ? Status::pass : Status::fail, duality_json(d), premise);
}

std::optional<bool> integrality_section(Report& report, const CAlgebra& alg, bool premise) {
  try {
    const IntegralityResult r = integrality_condition(alg);
    Json d = Json::object();
    if (!r.passed) {
      d["witness"] = to_json(r.witness);
      if (r.value) d["value"] = to_string(*r.value);
    }
    record(report, "integrality", r.passed ? Status::pass : Status::fail, std::move(d), premise);
    return r.passed;
  } catch (const Error& e) {
    not_applicable(report, "integrality", e.what());
    return std::nullopt;
  }
}

Json classification_json(const ClassificationReport& c) {
  Json j = {{"hypothesis", to_string(c.hypothesis)}};
  if (c.homogeneity_degree) j["homogeneity_degree"] = to_string(*c.homogeneity_degree);
  j["degrees_all_one"] = c.degrees_all_one;
  j["unimodular_entries"] = c.unimodular_entries;
  if (!c.unimodular_witness.empty()) j["witness"] = to_json(c.unimodular_witness);
  if (c.group_axioms) {
    const auto& g = *c.group_axioms;
    j["group"] = {{"closed", g.closed},
                  {"identity", g.identity},
                  {"inverses", g.inverses},
                  {"associative", g.associative},
                  {"commutative", g.commutative}};
  }
  if (c.element_orders) j["element_orders"] = integers(*c.element_orders);
  if (c.invariant_factors) j["invariant_factors"] = integers(*c.invariant_factors);
  if (c.is_elementary_abelian) j["elementary_abelian_2_group"] = *c.is_elementary_abelian;
  if (c.cuntz) {
    j["entries_plus_minus_one"] = c.cuntz->holds;
    if (!c.cuntz->holds) j["entry_witness"] = to_json(c.cuntz->witness);
  }
  return j;
}

bool classification_passed(const ClassificationReport& c) {
  if (!c.unimodular_entries || !c.group_axioms) return false;
  const auto& g = *c.group_axioms;
  if (!(g.closed && g.identity && g.inverses && g.associative && g.commutative)) return false;
  return !c.cuntz || c.cuntz->holds;
}

void degree_one_section(Report& report, const FourierTriple& t, const Options& opt) {
  try {
    const DegreeOneResult r = degree_one_check(t, opt.fusion());
    Json d = {{"hypothesis", to_string(r.hypothesis)},
              {"verdict", to_string(r.verdict)},
              {"unique_norm", r.unique_norm},
              {"unique_norm_agrees", r.unique_norm_agrees}};
    if (r.witness) d["witness"] = Json::array({*r.witness});
    const bool ok = r.verdict != Verdict::counterexample && r.unique_norm_agrees;
    record(report, "degree-one", ok ? Status::pass : Status::fail, std::move(d));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::HypothesisNotMet) throw;
    not_applicable(report, "degree-one", "neither homogeneous nor of prime order");
  }
}

void classification_section(Report& report, const FourierTriple& t, const Options& opt) {
  try {
    const ClassificationReport c = classify(t, opt.fusion());
    record(report, "classification", classification_passed(c) ? Status::pass : Status::fail,
           classification_json(c));
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::HypothesisNotMet:
        not_applicable(report, "classification", "neither homogeneous nor of prime order");
        break;
      case ErrorCode::DominanceFailed:
      case ErrorCode::NotClosed:
        record(report, "classification", Status::fail, {{"detail", e.what()}});
        break;
      default: throw;
    }
  }
}

void screen_section(Report& report, const std::vector<Cyclotomic>& degrees, bool premise) {
  const ScreenResult r = divisibility_screen(degrees);
  Json d = {{"degrees", strings(degrees)}, {"consistent", r.consistent}};
  if (r.witness) d["witness"] = Json::array({*r.witness});
  record(report, "screen", r.consistent ? Status::pass : Status::fail, std::move(d), premise);
}

void square_order_section(Report& report, const FourierTriple& t, bool premise) {
  const SquareOrderResult r = square_order_check(t);
  Json d = {{"verdict", to_string(r.verdict)}, {"order", to_string(t.order)}};
  if (r.determinant) d["determinant"] = to_string(*r.determinant);
  record(report, "square-order", status_of(r.verdict), std::move(d), premise,
         r.verdict == Verdict::vacuous ? "det(P) is not a rational integer" : "");
}

void homogeneity_section(Report& report, const FourierTriple& t) {
  const auto h = homogeneity(t);
  Json d = {{"homogeneous", h.has_value()}};
  if (h) d["t"] = to_string(*h);
  report.add_section("homogeneity", Status::pass, std::move(d));
}

void check_result_section(Report& report, const std::string& name, const CheckResult& r, bool premise) {
  record(report, name, status_of(r.verdict), verdict_details(r), premise);
}

void reconstruct_section(Report& report, const CAlgebra& alg, const ExactMatrix& P, const Options& opt,
                         bool premise, bool with_document) {
  try {
    const ExactMatrix S = reconstruct_fourier(alg, P, opt.fusion());
    record(report, "reconstruct", Status::pass, Json::object(), premise);
    if (with_document) report.set_document(print(matrix_document(Form::S, S)));
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::NotSelfDual:
      case ErrorCode::IntegralityFailed:
      case ErrorCode::FourierAxiomsFailed:
        record(report, "reconstruct", Status::fail, {{"detail", e.what()}}, premise,
               premise ? "" : "the algebra is not self-dual or fails the integrality condition");
        break;
      default: throw;
    }
  }
}

/// The C-algebra of a document: ingested directly from a lambda-table, or
/// assembled from the rescaled character table.
CAlgebra algebra_of(const MatrixDocument& doc, const Options& opt) {
  if (doc.form == Form::lambda_table) return calgebra_from_lambda(doc.lambda_tensor());
  return assemble_calgebra(triple_of(doc, opt));
}

// ---- commands -------------------------------------------------------------

void cmd_verify(Report& r, const Input& in, const Options& opt) {
  bool ok = false;
  fourier_section(r, fourier_candidate(in.doc, opt), opt, ok);
}

void cmd_modular(Report& r, const MatrixDocument& S, const MatrixDocument& T, const Options& opt) {
  const ExactMatrix s_matrix = fourier_candidate(S, opt);
  const AxiomReport rep = verify_modular_datum(s_matrix, T.matrix(), opt.fusion());
  record(r, "modular-axioms", status_of(rep), to_json(rep));
}

void cmd_rescale(Report& r, const Input& in, const Options& opt, const std::string& target) {
  const auto to = parse_form(target);
  if (!to || !is_matrix_form(*to)) throw Error(ErrorCode::InvalidArgument, "--to must be S, s or P");
  const FourierTriple t = triple_of(in.doc, opt);
  const ExactMatrix& m = *to == Form::S ? t.S : *to == Form::s ? t.s : t.P;
  r.add_section("rescale", Status::pass, {{"to", target}});
  r.set_document(print(matrix_document(*to, m)));
}

void cmd_calgebra(Report& r, const Input& in, const Options& opt) {
  calgebra_section(r, algebra_of(in.doc, opt), opt);
}

void cmd_duality(Report& r, const Input& in, const Options& opt) {
  duality_section(r, triple_of(in.doc, opt), true);
}

void cmd_integrality(Report& r, const Input& in, const Options& opt) {
  const IntegralityResult res = integrality_condition(algebra_of(in.doc, opt));
  Json d = Json::object();
  if (!res.passed) {
    d["witness"] = to_json(res.witness);
    if (res.value) d["value"] = to_string(*res.value);
  }
  record(r, "integrality", res.passed ? Status::pass : Status::fail, std::move(d));
}

void cmd_reconstruct(Report& r, const Input& in, const Options& opt) {
  const FourierTriple t = triple_of(in.doc, opt);
  reconstruct_section(r, assemble_calgebra(t), t.P, opt, true, true);
}

void cmd_screen(Report& r, const Input& in, const Options& opt) {
  if (in.doc.form == Form::degrees) {
    screen_section(r, in.doc.rows.at(0), true);
  } else {
    screen_section(r, triple_of(in.doc, opt).degrees, true);
  }
}

void cmd_classify(Report& r, const Input& in, const Options& opt) {
  const FourierTriple t = triple_of(in.doc, opt);
  bool fourier = false;
  fourier_section(r, in.doc.form == Form::S ? in.doc.matrix() : t.S, opt, fourier);
  integrality_section(r, assemble_calgebra(t), fourier);
  if (!fourier) return;
  homogeneity_section(r, t);
  degree_one_section(r, t, opt);
  classification_section(r, t, opt);
}

void cmd_check_all(Report& r, const Input& in, const Options& opt) {
  const MatrixDocument& doc = in.doc;
  if (doc.form == Form::degrees) {
    screen_section(r, doc.rows.at(0), true);
    return;
  }
  if (doc.form == Form::lambda_table) {
    const CAlgebra alg = calgebra_from_lambda(doc.lambda_tensor());
    calgebra_section(r, alg, opt);
    integrality_section(r, alg, true);
    check_result_section(r, "rational-calgebra", rational_calgebra_check(alg), true);
    return;
  }

  bool fourier = false;
  std::optional<FourierTriple> triple;
  if (doc.form == Form::S) {
    fourier_section(r, doc.matrix(), opt, fourier);
    try {
      triple = from_S(doc.matrix(), opt.max_precision_bits);
    } catch (const Error& e) {
      r.add_section("rescale", Status::not_applicable, {{"detail", e.what()}});
    }
  } else {
    triple = triple_of(doc, opt);
    fourier_section(r, triple->S, opt, fourier);
  }
  if (!triple) return;
  const FourierTriple& t = *triple;

  const CAlgebra alg = assemble_calgebra(t);
  calgebra_section(r, alg, opt);
  duality_section(r, t, fourier);
  const std::optional<bool> integral = integrality_section(r, alg, fourier);
  const DualityReport dual = duality_report(t);
  if (dual.is_self_dual && integral.value_or(false)) {
    reconstruct_section(r, alg, t.P, opt, true, false);
  } else {
    not_applicable(r, "reconstruct", "the algebra is not self-dual or fails the integrality condition");
  }

  if (!fourier) {
    for (const char* name : {"square-order", "screen", "degree-one", "classification", "perfect-square-degrees",
                             "degree-divisibility", "norm-degree-identity", "rational-calgebra"}) {
      not_applicable(r, name, "S is not a Fourier matrix");
    }
    return;
  }
  square_order_section(r, t, true);
  try {
    screen_section(r, t.degrees, true);
  } catch (const Error& e) {
    not_applicable(r, "screen", e.what());
  }
  homogeneity_section(r, t);
  degree_one_section(r, t, opt);
  classification_section(r, t, opt);
  check_result_section(r, "perfect-square-degrees", perfect_square_degrees_check(t), true);
  check_result_section(r, "degree-divisibility", degree_divisibility_check(t), true);
  check_result_section(r, "norm-degree-identity", norm_degree_identity(t), true);
  check_result_section(r, "rational-calgebra", rational_calgebra_check(alg), true);
}

std::string generate_document(const std::string& kind, const std::string& argument) {
  if (kind == "abelian") {
    AbelianGroupSpec spec;
    std::stringstream ss(argument);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        const long long v = std::stoll(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        spec.factors.push_back(v);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::InvalidArgument, "bad cyclic factor '" + item + "'");
      }
    }
    validate(spec);
    return print(matrix_document(Form::P, abelian_character_table(spec)));
  }
  if (kind == "rank2") {
    const auto n = parse_cyclotomic(argument, "<argument>").as_rational();
    if (!n) throw Error(ErrorCode::InvalidArgument, "rank2 needs a rational n");
    return print(matrix_document(Form::P, rank2_family(*n)));
  }
  throw Error(ErrorCode::InvalidArgument, "generate kind must be 'abelian' or 'rank2'");
}

void emit(const Report& report, const Options& opt, std::ostream& out) {
  if (opt.json) {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.to_text();
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for Fourier matrices, C-algebras and modular data", "fourier"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("fourier ") + FOURIER_VERSION);

  Options opt;
  const auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--form", opt.form_name, "Input form without a header: S, s, P, lambda-table, degrees");
    sub->add_flag("--json", opt.json, "Emit the JSON report");
    sub->add_option("--max-precision-bits", opt.max_precision_bits, "Cap for interval sign refinement")
        ->check(CLI::Range(64u, 1u << 20));
    sub->add_flag("--strict-nonnegative", opt.strict_nonnegative, "Also require N_ijk >= 0");
  };

  std::string file;
  std::string second_file;
  std::string target;
  std::string degrees;
  std::string kind;
  std::string argument;

  std::map<std::string, CLI::App*> subs;
  for (const char* name : {"verify", "rescale", "calgebra", "duality", "integrality", "reconstruct", "screen",
                           "classify", "check-all"}) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub);
    sub->add_option("file", file, "Input file; '-' or absent reads standard input");
    subs[name] = sub;
  }
  subs["verify"]->description("Check the Fourier matrix axioms");
  subs["rescale"]->description("Convert between the S, s and P forms");
  subs["rescale"]->add_option("--to", target, "Target form")->required();
  subs["calgebra"]->description("Build and check the C-algebra");
  subs["duality"]->description("Check self-duality and multiplicities");
  subs["integrality"]->description("Check the integrality condition");
  subs["reconstruct"]->description("Recover S from a self-dual integral C-algebra");
  subs["screen"]->description("Divisibility screen on a degree vector");
  subs["screen"]->add_option("--degrees", degrees, "Comma-separated degrees instead of a file");
  subs["classify"]->description("Run the classification checks");
  subs["check-all"]->description("Run every check and the full ledger");

  CLI::App* modular = app.add_subcommand("modular", "Check an (S, T) modular datum");
  add_common(modular);
  modular->add_option("S", file, "S-matrix file")->required();
  modular->add_option("T", second_file, "T-matrix file")->required();
  subs["modular"] = modular;

  CLI::App* generate = app.add_subcommand("generate", "Print a generated P-matrix");
  add_common(generate);
  generate->add_option("kind", kind, "abelian or rank2")->required();
  generate->add_option("argument", argument, "Cyclic factors like 2,2 or the rank-2 parameter n")->required();
  subs["generate"] = generate;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const Form fallback = opt.form();
    std::string name;
    for (const auto& [n, sub] : subs) {
      if (sub->parsed()) name = n;
    }

    if (name == "generate") {
      const std::string text = generate_document(kind, argument);
      Report report("generate", kind + " " + argument, text);
      report.add_section("generate", Status::pass, {{"kind", kind}, {"argument", argument}});
      report.set_document(text);
      emit(report, opt, out);
      return kExitPass;
    }

    if (name == "screen" && !degrees.empty()) {
      MatrixDocument doc = parse_matrix(degrees, Form::degrees, "<--degrees>");
      if (doc.form != Form::degrees) throw Error(ErrorCode::InvalidArgument, "--degrees takes a single row");
      Report report("screen", "<--degrees>", degrees);
      report.set_input_shape("degrees", doc.rows.at(0).size());
      screen_section(report, doc.rows.at(0), true);
      emit(report, opt, out);
      return report.passed() ? kExitPass : kExitCheckFailed;
    }

    const Input input = load(file, fallback, in);
    Report report(name, input.source, input.bytes);
    report.set_input_shape(std::string(to_string(input.doc.form)), input.doc.rank);

    if (name == "verify") cmd_verify(report, input, opt);
    else if (name == "rescale") cmd_rescale(report, input, opt, target);
    else if (name == "calgebra") cmd_calgebra(report, input, opt);
    else if (name == "duality") cmd_duality(report, input, opt);
    else if (name == "integrality") cmd_integrality(report, input, opt);
    else if (name == "reconstruct") cmd_reconstruct(report, input, opt);
    else if (name == "screen") cmd_screen(report, input, opt);
    else if (name == "classify") cmd_classify(report, input, opt);
    else if (name == "check-all") cmd_check_all(report, input, opt);
    else if (name == "modular") {
      std::ifstream t_file(second_file, std::ios::binary);
      if (!t_file) throw Error(ErrorCode::InvalidArgument, "cannot open '" + second_file + "'");
      const std::string t_bytes((std::istreambuf_iterator<char>(t_file)), std::istreambuf_iterator<char>());
      const MatrixDocument T = parse_matrix(t_bytes, Form::S, second_file);
      cmd_modular(report, input.doc, T, opt);
    }

    emit(report, opt, out);
    return report.passed() ? kExitPass : kExitCheckFailed;
  } catch (const Error& e) {
    err << "fourier: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "fourier: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace fourier::cli
