// Command-line front end: build representation tables, run the verification
// suites, and emit deterministic JSON/CSV reports.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "oscrep/analysis.hpp"
#include "oscrep/expr_parse.hpp"
#include "oscrep/json_io.hpp"
#include "oscrep/suite.hpp"

namespace {

using namespace oscrep;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct SpecFlags {
  std::string algebra = "sl";
  int n = 0;
  int m = 0;
  std::string c = "0";
  std::string swap;
  std::string freq;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& flags) {
  cmd->add_option("--algebra", flags.algebra, "Algebra family: sl or sp")
      ->check(CLI::IsMember({"sl", "sp"}));
  cmd->add_option("--n", flags.n, "Rank n for sl(n+1)");
  cmd->add_option("--m", flags.m, "Rank m for sp(2m+2)");
  cmd->add_option("--c", flags.c, "The parameter c, as an exact rational like 1/2 or -3");
  cmd->add_option("--swap", flags.swap,
                  "Swapped variables, comma-separated 1-based indices (sl: 1..n, sp: 1..2m+1)");
  cmd->add_option("--freq", flags.freq,
                  "Frequency vector, comma-separated rationals in variable order");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

RepSpec spec_from_flags(const SpecFlags& flags) {
  RepSpec spec;
  if (flags.algebra == "sl") {
    spec.algebra = AlgebraKind::SL;
    spec.rank = flags.n;
  } else {
    spec.algebra = AlgebraKind::SP;
    spec.rank = flags.m;
  }
  for (const std::string& s : split_list(flags.swap)) spec.swap_set.insert(std::stoi(s));
  spec.c = parse_rational(flags.c);
  for (const std::string& a : split_list(flags.freq)) spec.freq.push_back(parse_rational(a));
  spec.validate();
  return spec;
}

RepTable table_from_spec(const RepSpec& spec) {
  return spec.algebra == AlgebraKind::SL ? build_sl_swapped(spec) : build_sp(spec);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << content;
}

std::optional<ExplicitCase> explicit_counterpart(const RepSpec& spec) {
  if (spec.algebra == AlgebraKind::SL) {
    const int n1 = static_cast<int>(spec.swap_set.size());
    if (n1 < 1 || n1 >= spec.rank) return std::nullopt;
    for (int i = 1; i <= n1; ++i) {
      if (!spec.swap_set.count(i)) return std::nullopt;
    }
    return ExplicitCase::SlSwapped;
  }
  if (spec.swap_set.empty()) return ExplicitCase::SpPlain;
  if (sp_swap_shape(spec)) return ExplicitCase::SpSwapped;
  return std::nullopt;
}

int cmd_build(const SpecFlags& flags, const std::string& out_path) {
  const RepSpec spec = spec_from_flags(flags);
  const RepTable table = table_from_spec(spec);
  write_output(out_path, dump(rep_json(table)));
  return kExitPass;
}

int cmd_verify(const SpecFlags& flags, const std::string& in_path, int degree, int grade_range,
               const std::string& out_path) {
  RepTable table = [&] {
    if (!in_path.empty()) {
      std::ifstream in(in_path);
      if (!in) throw std::runtime_error("cannot open " + in_path);
      Json j = Json::parse(in);
      return rep_from_json(j);
    }
    return table_from_spec(spec_from_flags(flags));
  }();
  const RepSpec& spec = table.spec();

  Json report;
  report["spec"] = spec_json(spec);
  bool ok = true;

  const StructureTable oracle(table.basis());
  Window w;
  w.degree = degree;
  const HomReport hom = verify_homomorphism(table, oracle, w);
  report["bracket"] = hom_json(hom, table);
  ok = ok && hom.ok();

  if (const auto which = explicit_counterpart(spec)) {
    const RepTable transcribed = explicit_table(*which, spec);
    Json mismatches = Json::array();
    for (std::size_t i = 0; i < table.dim(); ++i) {
      if (table.op(i) != transcribed.op(i)) mismatches.push_back(table.basis()[i].label);
    }
    Json cross;
    cross["table"] = *which == ExplicitCase::SlSwapped
                         ? "sl-swapped"
                         : (*which == ExplicitCase::SpPlain ? "sp-plain" : "sp-swapped");
    cross["ok"] = mismatches.empty();
    cross["mismatched_labels"] = std::move(mismatches);
    if (*which == ExplicitCase::SpSwapped) {
      cross["note"] =
          "the transcribed raising entry E(m+1,2m+2) is taken as x0*(graded Euler + shifted "
          "constant), the swap image of the plain x0*(Euler + c)";
    }
    ok = ok && cross["ok"].get<bool>();
    report["cross_check"] = std::move(cross);
  }

  if (spec.algebra == AlgebraKind::SP && spec.swap_set.empty() && spec.freq_is_zero()) {
    const PowerReport power = power_identities(table, 4);
    report["power_identities"] = power_json(power);
    ok = ok && power.ok();
  }
  if (spec.algebra == AlgebraKind::SL && spec.freq_is_zero() &&
      explicit_counterpart(spec) == ExplicitCase::SlSwapped) {
    const GradingReport grading = check_grading(table, grade_range, degree);
    report["grading"] = grading_json(grading);
    ok = ok && grading.ok();
  }

  report["ok"] = ok;
  write_output(out_path, dump(report));
  return ok ? kExitPass : kExitViolation;
}

int cmd_closure(const SpecFlags& flags, const std::string& seed_text, std::optional<int> degree,
                int word_len, const std::string& out_path) {
  const RepSpec spec = spec_from_flags(flags);
  const RepTable table = table_from_spec(spec);
  const auto names = variable_names(spec);
  const Polynomial seed_poly = parse_polynomial(seed_text, names);
  const ExpPoly seed(seed_poly, spec.freq_or_zero());
  Window target;
  // default saturation target: everything reachable from the seed
  target.degree = degree ? *degree : std::max(seed_poly.degree(), 0) + word_len;
  const ClosureReport report = submodule_closure(table, seed, word_len, target);
  Json j = closure_json(report, true);
  j["spec"] = spec_json(spec);
  write_output(out_path, dump(j));
  return kExitPass;
}

int cmd_series(int m, int ell, int quotient_degrees, const std::string& out_path) {
  const SeriesReport report = composition_series(m, ell, quotient_degrees);
  write_output(out_path, dump(series_json(report)));
  return report.ok() ? kExitPass : kExitViolation;
}

int cmd_singular(const SpecFlags& flags, int degree, const std::string& out_path) {
  const RepSpec spec = spec_from_flags(flags);
  const RepTable table = table_from_spec(spec);
  Window w;
  w.degree = degree;
  const RootConvention convention = spec.algebra == AlgebraKind::SP
                                        ? sp_default_convention(spec.rank)
                                        : sl_standard_convention(spec.rank);
  const auto found = singular_vectors(table, w, convention);
  Json j;
  j["spec"] = spec_json(spec);
  j["raising"] = convention.raising_labels;
  j["singular_vectors"] = singular_json(found, variable_names(spec));
  write_output(out_path, dump(j));
  return kExitPass;
}

int cmd_weights(const SpecFlags& flags, int degree, const std::string& format,
                const std::string& out_path) {
  const RepSpec spec = spec_from_flags(flags);
  const RepTable table = table_from_spec(spec);
  Window w;
  w.degree = degree;
  const auto cartan = select_subalgebra(spec.algebra, spec.rank, Subalgebra::Cartan);
  const WeightReport report = weight_decompose(table, w, cartan);
  if (format == "csv") {
    write_output(out_path, weight_csv(report));
  } else {
    Json j = weight_json(report);
    j["spec"] = spec_json(spec);
    write_output(out_path, dump(j));
  }
  return kExitPass;
}

int cmd_suite(const std::string& out_path) {
  suite::Options opts;
  opts.threads = suite::threads_from_env();
  const auto results = suite::run_all(opts);
  Json j = Json::array();
  bool ok = true;
  std::ostringstream table_text;
  for (const auto& r : results) {
    Json item;
    item["id"] = r.id;
    item["name"] = r.name;
    item["ok"] = r.ok;
    item["detail"] = r.detail;
    j.push_back(std::move(item));
    ok = ok && r.ok;
    table_text << (r.ok ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name << " — "
               << r.detail << "\n";
  }
  std::cerr << table_text.str();
  if (!out_path.empty()) write_output(out_path, dump(j));
  return ok ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for oscillator representation families built by operator swapping"};
  app.require_subcommand(1);

  SpecFlags flags;
  std::string out_path, in_path, seed_text, format = "json";
  int degree = 5, grade_range = 3, word_len = 8, ell = 0, quotient_degrees = 4;

  auto* build = app.add_subcommand("build", "Build a representation table and serialize it");
  add_spec_flags(build, flags);
  build->add_option("--out", out_path, "Output path (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "Check bracket identities and table cross-checks");
  add_spec_flags(verify, flags);
  verify->add_option("--in", in_path, "Verify a previously serialized table");
  verify->add_option("--degree", degree, "Window degree bound");
  verify->add_option("--grade-range", grade_range, "Signed-degree range for the grading checks");
  verify->add_option("--out", out_path, "Output path");

  auto* closure = app.add_subcommand("closure", "Submodule closure from a seed polynomial");
  add_spec_flags(closure, flags);
  closure->add_option("--seed", seed_text, "Seed polynomial, e.g. \"x1^2 - 2*x2\"")->required();
  auto* closure_degree = closure->add_option(
      "--degree", degree, "Saturation window degree bound (default: seed degree + word length)");
  closure->add_option("--word-len", word_len, "Maximum generator word length");
  closure->add_option("--out", out_path, "Output path");

  auto* series = app.add_subcommand("series", "Length-two series checks at c = -ell");
  series->add_option("--m", flags.m, "Rank m for sp(2m+2)")->required();
  series->add_option("--ell", ell, "Nonnegative integer with c = -ell")->required();
  series->add_option("--quotient-degree", quotient_degrees, "Quotient saturation depth");
  series->add_option("--out", out_path, "Output path");

  auto* singular = app.add_subcommand("singular", "Exact singular-vector search");
  add_spec_flags(singular, flags);
  singular->add_option("--degree", degree, "Degree bound of the search window");
  singular->add_option("--out", out_path, "Output path");

  auto* weights = app.add_subcommand("weights", "Weight-space decomposition of a window");
  add_spec_flags(weights, flags);
  weights->add_option("--degree", degree, "Window degree bound");
  weights->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  weights->add_option("--out", out_path, "Output path");

  auto* suite_cmd = app.add_subcommand("suite", "Run the full verification grid");
  suite_cmd->add_option("--out", out_path, "Output path for the JSON summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(flags, out_path);
    if (verify->parsed()) return cmd_verify(flags, in_path, degree, grade_range, out_path);
    if (closure->parsed()) {
      const std::optional<int> target =
          closure_degree->count() ? std::optional<int>(degree) : std::nullopt;
      return cmd_closure(flags, seed_text, target, word_len, out_path);
    }
    if (series->parsed()) return cmd_series(flags.m, ell, quotient_degrees, out_path);
    if (singular->parsed()) return cmd_singular(flags, degree, out_path);
    if (weights->parsed()) return cmd_weights(flags, degree, format, out_path);
    if (suite_cmd->parsed()) return cmd_suite(out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
