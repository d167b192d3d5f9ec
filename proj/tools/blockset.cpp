// blockset: generate block languages, apply operations, measure state
// complexity and run the bound bench.
//
// Exit codes: 0 ok, 1 usage, 2 length mismatch or a violated route/bound
// check, 3 empty language, 4 cover budget exhausted.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "blockset/bench.hpp"
#include "blockset/io.hpp"
#include "blockset/lang_ops.hpp"
#include "blockset/simd/kernels.hpp"
#include "blockset/synthesis.hpp"
#include "blockset/witnesses.hpp"

namespace {

using namespace blockset;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitEmpty = 3;
constexpr int kExitBudget = 4;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LengthMismatch:
    case ErrorKind::ShuffleArityMismatch: return kExitMismatch;
    case ErrorKind::EmptyLanguage: return kExitEmpty;
    case ErrorKind::CoverBudgetExceeded: return kExitBudget;
    default: return kExitUsage;
  }
}

void emit(const std::optional<std::string>& path, const std::string& text) {
  if (path)
    write_file(*path, text);
  else
    std::cout << text;
}

struct GenArgs {
  std::string family;
  std::uint32_t k = 2;
  std::optional<std::size_t> ell;
  std::optional<std::size_t> d;
  int x = 0;
  std::optional<std::string> word;
  std::optional<std::string> letters;
  std::optional<std::string> out;
};

BlockLanguage generate(const GenArgs& a) {
  auto need_d = [&]() {
    if (!a.d) throw Error(ErrorKind::Parse, "--family " + a.family + " needs --d");
    return *a.d;
  };
  auto need_ell = [&]() {
    if (!a.ell) throw Error(ErrorKind::Parse, "--family " + a.family + " needs --ell");
    return *a.ell;
  };
  if (a.family == "E") {
    if (a.k != 2) throw Error(ErrorKind::Parse, "family E is binary; drop --k or pass --k 2");
    return witness_E(need_ell());
  }
  if (a.family == "parity") return witness_parity(a.k, need_d(), a.x);
  if (a.family == "ko") return witness_ko(a.k, need_d());
  if (a.family == "full") return full_language(a.k, need_ell());
  if (a.family == "singleton") {
    if (!a.word) throw Error(ErrorKind::Parse, "--family singleton needs --word");
    const Word w = Alphabet(a.k).parse(*a.word);
    if (a.ell && *a.ell != w.size())
      throw Error(ErrorKind::LengthMismatch, "--word has length " + std::to_string(w.size()) + ", --ell is " +
                                                 std::to_string(*a.ell));
    return singleton(a.k, w.size(), w);
  }
  if (a.family == "subalphabet") {
    if (!a.letters) throw Error(ErrorKind::Parse, "--family subalphabet needs --letters");
    const Word symbols = Alphabet(a.k).parse(*a.letters);
    return subalphabet(a.k, need_ell(), symbols);
  }
  throw Error(ErrorKind::Parse, "unknown family '" + a.family + "'");
}

struct OpArgs {
  std::string op;
  std::vector<std::string> inputs;
  std::optional<std::string> word;
  std::optional<std::string> out;
  std::string emit = "lang";
  std::optional<std::string> dot;
  std::uint64_t budget = kDefaultCoverBudget;
};

bool star_like(const std::string& op) { return op == "star" || op == "plus"; }

int run_op_command(const OpArgs& a) {
  std::vector<BlockLanguage> operands;
  for (const auto& path : a.inputs) operands.push_back(read_language_file(path));
  std::optional<Word> word;
  if (a.word) {
    if (operands.empty()) throw Error(ErrorKind::Parse, "--word needs an --in language");
    word = operands.front().alphabet().parse(*a.word);
  }
  const MeasureOptions options{true, a.budget};
  const OpOutcome o = run_op(a.op, operands, word, options);

  std::string text;
  std::optional<std::string> dot;
  if (a.emit == "lang") {
    if (!o.language) throw Error(ErrorKind::Parse, a.op + " yields a language outside a block; use --emit dfa or nfa");
    text = language_to_json(*o.language).dump(2) + "\n";
    if (o.dfa) dot = to_dot(*o.dfa);
  } else if (a.emit == "dfa") {
    if (o.dfa) {
      text = automaton_to_json(*o.dfa).dump(2) + "\n";
      dot = to_dot(*o.dfa);
    } else {
      text = automaton_to_json(*o.general_dfa).dump(2) + "\n";
      dot = to_dot(*o.general_dfa);
    }
  } else if (a.emit == "nfa") {
    if (star_like(a.op)) {
      text = automaton_to_json(*o.general_nfa).dump(2) + "\n";
      dot = to_dot(*o.general_nfa);
    } else {
      const RankedNFA nfa = min_nfa_from_bitmap(*o.language, a.budget);
      text = automaton_to_json(nfa).dump(2) + "\n";
      dot = to_dot(nfa);
    }
  } else {
    throw Error(ErrorKind::Parse, "--emit must be lang, dfa or nfa");
  }
  if (a.out) write_file(*a.out, text);
  if (a.dot && dot) write_file(*a.dot, *dot);
  std::cout << outcome_to_json(o).dump(2) << "\n";

  if (!o.ok()) {
    std::cerr << "blockset: " << a.op << ": " << (o.route_agreement ? "bound check failed" : "routes disagree")
              << "\n";
    return kExitMismatch;
  }
  bool exact = star_like(a.op) || o.result.nsc_exact;
  for (const auto& r : o.operands) exact = exact && r.nsc_exact;
  if (!exact) {
    std::cerr << "blockset: cover budget exhausted; nsc values are upper bounds\n";
    return kExitBudget;
  }
  return kExitOk;
}

int run_sc_command(const std::string& in, const std::string& format, std::uint64_t budget) {
  const BlockLanguage lang = read_language_file(in);
  const ComplexityReport report = measure(lang, {true, budget});
  if (format == "md") {
    std::cout << report_to_markdown(report);
  } else if (format == "json") {
    Json j = report_to_json(report);
    if (lang.k() >= 2) j["bound_params"] = bound_params_to_json(bound_params(lang.k(), lang.ell()));
    std::cout << j.dump(2) << "\n";
  } else {
    throw Error(ErrorKind::Parse, "--format must be json or md");
  }
  if (!report.nsc_exact) {
    std::cerr << "blockset: cover budget exhausted; nsc is an upper bound\n";
    return kExitBudget;
  }
  return kExitOk;
}

int run_bench_command(const BenchOptions& options, const std::string& format, const std::optional<std::string>& out) {
  const BenchResult result = run_bench(options);
  if (format == "md")
    emit(out, to_markdown(result.rows));
  else if (format == "csv")
    emit(out, to_csv(result.rows));
  else
    throw Error(ErrorKind::Parse, "--format must be csv or md");
  std::cerr << result.rows.size() << " rows, " << result.failures << " failed, " << result.budget_rows
            << " over budget (kernels: " << simd::active().name << ")\n";
  return result.failures ? kExitMismatch : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block languages as bitmaps: generators, operations, state complexity and bound checks"};
  app.require_subcommand(1);
  std::uint64_t budget = kDefaultCoverBudget;
  app.add_option("--budget", budget, "Node budget for each minimal-cover search")->capture_default_str();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a language from a named family as JSON");
  gen_cmd->add_option("--family", gen.family, "E, parity, ko, full, singleton or subalphabet")
      ->required()
      ->check(CLI::IsMember({"E", "parity", "ko", "full", "singleton", "subalphabet"}));
  gen_cmd->add_option("--k", gen.k, "Alphabet size")->capture_default_str();
  gen_cmd->add_option("--ell", gen.ell, "Word length");
  gen_cmd->add_option("--d", gen.d, "Half length for parity and ko");
  gen_cmd->add_option("--x", gen.x, "Parity class for the parity family")->check(CLI::Range(0, 1));
  gen_cmd->add_option("--word", gen.word, "Word for the singleton family");
  gen_cmd->add_option("--letters", gen.letters, "Symbols for the subalphabet family, e.g. ac");
  gen_cmd->add_option("--out", gen.out, "Output path; stdout when absent");

  OpArgs op;
  auto* op_cmd = app.add_subcommand("op", "Apply an operation and print the outcome as JSON");
  op_cmd->add_option("operation", op.op, "Operation")
      ->required()
      ->check(CLI::IsMember(
          {"union", "intersect", "concat", "reverse", "complement", "star", "plus", "add-word", "remove-word"}));
  op_cmd->add_option("--in", op.inputs, "Operand language file (repeat for two operands)")->required();
  op_cmd->add_option("--word", op.word, "Word for add-word and remove-word");
  op_cmd->add_option("--out", op.out, "Where to write the result");
  op_cmd->add_option("--emit", op.emit, "Result form: lang, dfa or nfa")
      ->check(CLI::IsMember({"lang", "dfa", "nfa"}))
      ->capture_default_str();
  op_cmd->add_option("--dot", op.dot, "Also write the result automaton as DOT");

  std::string sc_in;
  std::string sc_format = "json";
  auto* sc_cmd = app.add_subcommand("sc", "Report dsc, nsc and rank widths of a language");
  sc_cmd->add_option("--in", sc_in, "Language file")->required();
  sc_cmd->add_option("--format", sc_format, "json or md")
      ->check(CLI::IsMember({"json", "md"}))
      ->capture_default_str();

  BenchOptions bench;
  std::string bench_format = "md";
  std::optional<std::string> bench_out;
  auto* bench_cmd = app.add_subcommand("bench", "Check the operation bounds over witness and random languages");
  bench_cmd->add_option("--suite", bench.suite, "table2, reversal-growth or all")
      ->check(CLI::IsMember({"table2", "reversal-growth", "all"}))
      ->capture_default_str();
  bench_cmd->add_option("--lmax", bench.lmax, "Largest word length (default 6 for table2, 10 for reversal-growth)");
  bench_cmd->add_option("--format", bench_format, "csv or md")
      ->check(CLI::IsMember({"csv", "md"}))
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Seed for random samples")->capture_default_str();
  bench_cmd->add_option("--jobs", bench.jobs, "Worker threads; 0 uses every core")->capture_default_str();
  bench_cmd->add_option("--samples", bench.samples, "Samples per random property row")->capture_default_str();
  bench_cmd->add_option("--out", bench_out, "Output path; stdout when absent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) {
      emit(gen.out, language_to_json(generate(gen)).dump(2) + "\n");
      return kExitOk;
    }
    if (*op_cmd) {
      op.budget = budget;
      return run_op_command(op);
    }
    if (*sc_cmd) return run_sc_command(sc_in, sc_format, budget);
    if (*bench_cmd) return run_bench_command(bench, bench_format, bench_out);
  } catch (const CoverBudgetExceeded& e) {
    std::cerr << "blockset: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "blockset: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "blockset: Parse: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
