#include "blockset/bench.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

#include "blockset/automata.hpp"
#include "blockset/error.hpp"
#include "blockset/lang_ops.hpp"
#include "blockset/synthesis.hpp"
#include "blockset/witnesses.hpp"

namespace blockset {
namespace {

using Task = std::function<std::vector<BenchRow>(std::mt19937_64&)>;

struct TableEntry {
  std::string dsc_bound;
  std::string dsc_sigma;
  std::string nsc_bound;
  std::string nsc_sigma;
};

const TableEntry& table_entry(const std::string& op) {
  static const std::map<std::string, TableEntry> table = {
      {"union", {"sum_{i=1}^{l-1}(m_i n_i + m_i + n_i) + 3", "3", "m + n - 2", "2"}},
      {"intersect", {"sum_{i=0}^{l} m_i n_i + 1", "2", "sum_{i=0}^{l} m_i n_i", "2"}},
      {"concat", {"m + n - 2", "1", "m + n - 1", "1"}},
      {"complement", {"m + l - 1", "2", "O(2^sqrt(m))", "2"}},
      {"add-word", {"m + l - 1", "2", "m + l - 1", "2"}},
      {"remove-word", {"m + l - 1", "2", "m + l - 1", "2"}},
      {"star", {"m - 1", "1", "m - 1", "1"}},
      {"plus", {"m", "1", "m", "1"}},
      {"reverse", {"2^Theta(sqrt(m))", "2", "m", "1"}},
  };
  static const TableEntry none{};
  const auto it = table.find(op);
  return it == table.end() ? none : it->second;
}

std::int64_t i64(std::size_t v) { return static_cast<std::int64_t>(v); }

std::string widths_str(const WidthProfile& w) {
  std::string out = "(";
  for (const std::size_t v : w.top_down()) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + ")";
}

std::string operand_str(const std::vector<ComplexityReport>& operands) {
  std::string out;
  const char* names[] = {"m", "n"};
  for (std::size_t i = 0; i < operands.size() && i < 2; ++i) {
    const auto& r = operands[i];
    if (!out.empty()) out += " ";
    out += std::string(names[i]) + "=" + std::to_string(r.dsc);
    if (r.nsc_measured) out += "/" + std::to_string(r.nsc);
    out += " " + widths_str(r.dfa_widths);
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep = "; ") {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

void add_note(BenchRow& row, const std::string& note) { row.notes = join({row.notes, note}); }

BenchStatus judge(std::int64_t measured, std::int64_t formula, std::string_view relation) {
  bool ok = true;
  if (relation == "=") ok = measured == formula;
  else if (relation == "<=") ok = measured <= formula;
  else if (relation == ">=") ok = measured >= formula;
  return ok ? BenchStatus::Pass : BenchStatus::Fail;
}

BenchRow check_row(std::string op, std::string family, std::string params, std::uint32_t k, std::size_t ell,
                   std::string metric, std::int64_t measured, std::int64_t formula, std::string relation) {
  BenchRow row;
  row.op = std::move(op);
  row.bound = table_entry(row.op).dsc_bound;
  row.sigma = table_entry(row.op).dsc_sigma;
  row.family = std::move(family);
  row.params = std::move(params);
  row.k = k;
  row.ell = ell;
  row.metric = std::move(metric);
  row.measured = measured;
  row.formula = formula;
  row.relation = std::move(relation);
  row.exact = row.relation == "=";
  row.status = judge(measured, formula, row.relation);
  return row;
}

struct Point {
  std::string family;
  std::string params;
  std::uint32_t k;
  std::size_t ell;
};

// One dsc row and, when an nsc was measured, one nsc row.
std::vector<BenchRow> outcome_rows(const OpOutcome& o, const Point& p) {
  const TableEntry& t = table_entry(o.op);
  BenchRow base;
  base.op = o.op;
  base.family = p.family;
  base.params = p.params;
  base.k = p.k;
  base.ell = p.ell;
  base.operands = operand_str(o.operands);

  BenchRow dsc = base;
  dsc.bound = t.dsc_bound;
  dsc.sigma = t.dsc_sigma;
  dsc.metric = "dsc";
  dsc.measured = i64(o.result.dsc);
  dsc.formula = o.formula;
  dsc.relation = o.relation;
  dsc.exact = o.formula && o.relation == "=";
  dsc.status = !o.formula ? BenchStatus::Note : o.dsc_ok ? BenchStatus::Pass : BenchStatus::Fail;
  dsc.notes = join(o.notes);

  std::vector<BenchRow> rows{dsc};
  if (o.result.nsc_measured) {
    BenchRow nsc = base;
    nsc.bound = t.nsc_bound;
    nsc.sigma = t.nsc_sigma;
    nsc.metric = "nsc";
    nsc.measured = i64(o.result.nsc);
    nsc.formula = o.nsc_formula;
    nsc.relation = o.nsc_relation;
    nsc.exact = o.nsc_formula && o.nsc_relation == "=";
    const bool budget = o.op != "star" && o.op != "plus" && !o.result.nsc_exact;
    bool operands_exact = true;
    for (const auto& r : o.operands) operands_exact = operands_exact && r.nsc_exact;
    if (budget || !operands_exact)
      nsc.status = BenchStatus::Budget;
    else
      nsc.status = !o.nsc_formula ? BenchStatus::Note : o.nsc_ok ? BenchStatus::Pass : BenchStatus::Fail;
    rows.push_back(nsc);
  }
  for (auto& r : rows)
    if (!o.route_agreement) {
      r.status = BenchStatus::Fail;
      add_note(r, "bitmap and automaton routes disagree");
    }
  return rows;
}

// Witness row: the instantiated formula must equal the closed-form witness
// value and the measurement must meet it.
void tighten(BenchRow& row, std::int64_t witness) {
  const bool routes = row.notes.find("routes disagree") == std::string::npos;
  row.relation = "=";
  row.exact = true;
  if (row.status == BenchStatus::Budget) return;
  if (!row.formula || *row.formula != witness) {
    row.status = BenchStatus::Fail;
    add_note(row, "formula differs from witness value " + std::to_string(witness));
    return;
  }
  row.status = routes && row.measured == witness ? BenchStatus::Pass : BenchStatus::Fail;
}

BenchRow note_row(std::string op, std::string metric, std::string notes) {
  BenchRow row;
  row.op = std::move(op);
  const TableEntry& t = table_entry(row.op);
  row.bound = metric.rfind("nsc", 0) == 0 ? t.nsc_bound : t.dsc_bound;
  row.sigma = metric.rfind("nsc", 0) == 0 ? t.nsc_sigma : t.dsc_sigma;
  row.family = "-";
  row.params = "asymptotic";
  row.metric = std::move(metric);
  row.relation = "substituted";
  row.status = BenchStatus::Note;
  row.notes = std::move(notes);
  return row;
}

std::string ell_param(std::size_t ell) { return "l=" + std::to_string(ell); }

BlockLanguage word_language(std::uint32_t k, std::size_t ell, Symbol s) {
  return singleton(k, ell, Word(ell, s));
}

BlockLanguage even_palindromes(std::uint32_t k, std::size_t ell) {
  const Alphabet alphabet(k);
  const std::uint64_t n = block_size(k, ell);
  BitSeq bits(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const Word w = index_to_word(alphabet, ell, i);
    bits.set(i, std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(ell / 2), w.rbegin()));
  }
  return BlockLanguage(alphabet, ell, std::move(bits));
}

// Property row over random operands: measured counts samples whose outcome
// is ok, formula is the sample count.
BenchRow property_row(const std::string& op, std::size_t ell, std::size_t samples, std::mt19937_64& rng) {
  const std::uint32_t k = 2;
  const bool binary = op == "union" || op == "intersect" || op == "concat";
  const bool toggle = op == "add-word" || op == "remove-word";
  std::size_t passed = 0;
  std::size_t budget = 0;
  std::size_t drawn = 0;
  std::size_t attempts = 0;
  std::vector<std::string> failures;
  while (drawn < samples && attempts < samples * 20) {
    ++attempts;
    std::vector<BlockLanguage> operands;
    if (op == "concat") {
      std::uniform_int_distribution<std::size_t> split(1, ell - 1);
      const std::size_t left = split(rng);
      operands = {random_language(k, left, rng), random_language(k, ell - left, rng)};
    } else {
      operands.push_back(random_language(k, ell, rng));
      if (binary) operands.push_back(random_language(k, ell, rng));
    }
    std::optional<Word> word;
    if (toggle) {
      std::uniform_int_distribution<std::uint64_t> pick(0, block_size(k, ell) - 1);
      word = index_to_word(Alphabet(k), ell, pick(rng));
      if (operands[0].contains(*word) == (op == "add-word")) continue;
    }
    try {
      const OpOutcome o = run_op(op, operands, word);
      ++drawn;
      bool exact = o.result.nsc_exact || op == "star" || op == "plus";
      for (const auto& r : o.operands) exact = exact && r.nsc_exact;
      if (!exact) {
        ++budget;
      } else if (o.ok()) {
        ++passed;
      } else if (failures.size() < 3) {
        failures.push_back(operands[0].bits().to_string());
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::EmptyLanguage) throw;
    }
  }
  BenchRow row;
  row.op = op;
  row.bound = table_entry(op).dsc_bound;
  row.sigma = table_entry(op).dsc_sigma;
  row.family = "random";
  row.params = "samples=" + std::to_string(samples);
  row.k = k;
  row.ell = ell;
  row.metric = "routes+bounds";
  row.measured = i64(passed);
  row.formula = i64(drawn - budget);
  row.relation = "all";
  row.exact = true;
  row.status = passed == drawn - budget && drawn == samples ? BenchStatus::Pass : BenchStatus::Fail;
  if (budget) add_note(row, std::to_string(budget) + " samples hit the cover budget");
  if (drawn < samples) add_note(row, "only " + std::to_string(drawn) + " nonempty samples drawn");
  if (!failures.empty()) add_note(row, "failing first operands: " + join(failures, ", "));
  return row;
}

// Largest |result - operand| over random toggles.
std::vector<BenchRow> toggle_spread_rows(std::size_t ell, std::size_t samples, std::mt19937_64& rng) {
  const std::uint32_t k = 2;
  std::int64_t max_dsc = 0;
  std::int64_t max_nsc = 0;
  std::size_t drawn = 0;
  std::size_t budget = 0;
  std::size_t route_failures = 0;
  std::uniform_int_distribution<std::uint64_t> pick(0, block_size(k, ell) - 1);
  while (drawn < samples) {
    const BlockLanguage lang = random_language(k, ell, rng);
    const Word word = index_to_word(Alphabet(k), ell, pick(rng));
    const bool present = lang.contains(word);
    if (present && lang.word_count() == 1) continue;
    ++drawn;
    const OpOutcome o = present ? remove_word(lang, word) : add_word(lang, word);
    if (!o.route_agreement) ++route_failures;
    max_dsc = std::max<std::int64_t>(max_dsc, std::llabs(i64(o.result.dsc) - i64(o.operands[0].dsc)));
    if (o.result.nsc_exact && o.operands[0].nsc_exact)
      max_nsc = std::max<std::int64_t>(max_nsc, std::llabs(i64(o.result.nsc) - i64(o.operands[0].nsc)));
    else
      ++budget;
  }
  const std::string params = "samples=" + std::to_string(samples);
  std::vector<BenchRow> rows{
      check_row("add-word", "random", params, k, ell, "max|d dsc|", max_dsc, i64(ell) - 1, "<="),
      check_row("add-word", "random", params, k, ell, "max|d nsc|", max_nsc, i64(ell) - 1, "<="),
  };
  rows[1].bound = table_entry("add-word").nsc_bound;
  for (auto& r : rows) {
    add_note(r, "toggles mix add-word and remove-word");
    if (route_failures) {
      r.status = BenchStatus::Fail;
      add_note(r, std::to_string(route_failures) + " route disagreements");
    }
  }
  if (budget) add_note(rows[1], std::to_string(budget) + " samples with inexact nsc excluded");
  return rows;
}

std::vector<Task> table2_tasks(std::size_t lmax, std::size_t samples) {
  std::vector<Task> tasks;
  const std::size_t lo = 3;

  for (std::size_t ell = lo; ell <= lmax; ++ell) {
    tasks.push_back([ell](std::mt19937_64&) {
      const Symbol ac[] = {0, 2};
      const Symbol bc[] = {1, 2};
      const BlockLanguage ops[] = {subalphabet(3, ell, ac), subalphabet(3, ell, bc)};
      auto rows = outcome_rows(run_op("union", ops), {"{a,c}^l | {b,c}^l", ell_param(ell), 3, ell});
      tighten(rows[0], 3 * i64(ell));
      return rows;
    });
    tasks.push_back([ell](std::mt19937_64&) {
      const BlockLanguage ops[] = {word_language(2, ell, 0), word_language(2, ell, 1)};
      auto rows = outcome_rows(run_op("union", ops), {"{a^l} | {b^l}", ell_param(ell), 2, ell});
      if (rows.size() > 1) tighten(rows[1], 2 * i64(ell));
      return rows;
    });
  }

  for (const auto& [k, d] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 2}, {2, 3}, {3, 2}}) {
    if (2 * d > std::max<std::size_t>(lmax, 4)) continue;
    tasks.push_back([k, d](std::mt19937_64&) {
      const BlockLanguage ops[] = {witness_parity(k, d, 0), witness_parity(k, d, 1)};
      const OpOutcome o = run_op("intersect", ops);
      auto rows = outcome_rows(o, {"parity x=0 & x=1", "d=" + std::to_string(d), k, 2 * d});
      for (auto& r : rows)
        if (r.formula) tighten(r, *r.formula);
      if (o.language && *o.language != even_palindromes(k, 2 * d))
        for (auto& r : rows) {
          r.status = BenchStatus::Fail;
          add_note(r, "result differs from the even palindromes");
        }
      return rows;
    });
  }

  for (std::size_t l1 = 1; l1 <= 4; ++l1)
    for (std::size_t l2 = 1; l2 <= 4; ++l2)
      tasks.push_back([l1, l2](std::mt19937_64&) {
        const BlockLanguage ops[] = {full_language(1, l1), full_language(1, l2)};
        auto rows = outcome_rows(run_op("concat", ops),
                                 {"{a^l1}{a^l2}", "l1=" + std::to_string(l1) + ",l2=" + std::to_string(l2), 1, l1 + l2});
        tighten(rows[0], i64(l1 + l2) + 2);
        if (rows.size() > 1) tighten(rows[1], i64(l1 + l2) + 1);
        return rows;
      });

  for (std::size_t ell = lo; ell <= lmax; ++ell)
    tasks.push_back([ell](std::mt19937_64&) {
      const BlockLanguage ops[] = {word_language(2, ell, 0)};
      auto rows = outcome_rows(run_op("complement", ops), {"{a^l}", ell_param(ell), 2, ell});
      tighten(rows[0], 2 * i64(ell) + 1);
      add_note(rows[0], "without dead state: operand " + std::to_string(ell + 1) + ", result " +
                            std::to_string(2 * ell));
      return rows;
    });

  for (const auto& [k, d] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 2}, {2, 3}, {3, 2}})
    tasks.push_back([k, d](std::mt19937_64&) {
      const std::string params = "d=" + std::to_string(d);
      const BlockLanguage lang = witness_ko(k, d);
      const BlockLanguage co = bit_not_block(lang);
      const ComplexityReport report = measure(co);
      std::int64_t kd = 1;
      for (std::size_t i = 0; i < d; ++i) kd *= k;
      std::vector<BenchRow> rows;
      rows.push_back(check_row("complement", "ko", params, k, 2 * d, "width[d]",
                               i64(report.dfa_widths.widths[d]), kd, "="));
      rows.push_back(check_row("complement", "ko", params, k, 2 * d, "nsc", i64(report.nsc), kd, ">="));
      rows.back().bound = table_entry("complement").nsc_bound;
      if (!report.nsc_exact) rows.back().status = BenchStatus::Budget;
      const RankedNFA nfa = witness_ko_nfa(k, d);
      BenchRow size = check_row("complement", "ko-nfa", params, k, 2 * d, "nfa states", i64(nfa.state_count()),
                                i64((k - 1) * d * d + 2 * d), "=");
      size.bound = table_entry("complement").nsc_bound;
      if (enumerate_language(nfa) != lang) {
        size.status = BenchStatus::Fail;
        add_note(size, "NFA language differs from the predicate");
      }
      rows.push_back(size);
      return rows;
    });

  for (std::size_t ell = lo; ell <= lmax; ++ell)
    tasks.push_back([ell](std::mt19937_64&) {
      const BlockLanguage full = full_language(2, ell);
      const Word a(ell, 0);
      std::vector<BenchRow> rows;
      rows.push_back(check_row("remove-word", "full", ell_param(ell), 2, ell, "dsc(operand)",
                               i64(measure(full, {false}).dsc), i64(ell) + 2, "="));
      auto removed = outcome_rows(remove_word(full, a), {"full minus a^l", ell_param(ell), 2, ell});
      tighten(removed[0], 2 * i64(ell) + 1);
      rows.insert(rows.end(), removed.begin(), removed.end());
      auto added = outcome_rows(add_word(*remove_word(full, a, {false}).language, a),
                                {"full minus a^l, plus a^l", ell_param(ell), 2, ell});
      rows.insert(rows.end(), added.begin(), added.end());
      return rows;
    });
  for (const std::size_t ell : {std::size_t{4}, std::size_t{6}})
    if (ell <= lmax)
      tasks.push_back([ell, samples](std::mt19937_64& rng) { return toggle_spread_rows(ell, samples, rng); });

  for (std::size_t ell = 2; ell <= lmax; ++ell)
    for (const char* op : {"star", "plus"}) {
      tasks.push_back([ell, op](std::mt19937_64&) {
        const BlockLanguage ops[] = {word_language(2, ell, 0)};
        return outcome_rows(run_op(op, ops), {"{a^l}", ell_param(ell), 2, ell});
      });
      tasks.push_back([ell, op](std::mt19937_64&) {
        const BlockLanguage ops[] = {full_language(1, ell)};
        auto rows = outcome_rows(run_op(op, ops), {"{a^l} unary", ell_param(ell), 1, ell});
        if (rows[0].measured != rows[0].formula) {
          rows[0].relation = "deviation";
          rows[0].exact = false;
          rows[0].status = BenchStatus::Note;
        }
        add_note(rows[0], "unary deviation reported, not asserted");
        return rows;
      });
    }

  for (std::size_t ell = 2; ell <= std::min<std::size_t>(lmax, 6); ++ell)
    tasks.push_back([ell](std::mt19937_64&) {
      const BlockLanguage ops[] = {witness_E(ell)};
      return outcome_rows(run_op("reverse", ops), {"E", ell_param(ell), 2, ell});
    });

  for (const char* op : {"union", "intersect", "concat", "complement", "reverse", "add-word", "remove-word",
                         "star", "plus"})
    for (const std::size_t ell : {std::size_t{3}, std::size_t{4}})
      tasks.push_back([op, ell, samples](std::mt19937_64& rng) {
        return std::vector<BenchRow>{property_row(op, ell, samples, rng)};
      });

  tasks.push_back([](std::mt19937_64&) {
    return std::vector<BenchRow>{
        note_row("reverse", "dsc tightness",
                 "2^Theta(sqrt m) is asymptotic; replaced at finite scale by the reversal-growth rows "
                 "dsc(E) >= 2^(l-r), dsc(E^R) <= 2^6 l^2 + 2^3 (l^2 + l), width(E^R) <= 2^(r+1)"),
        note_row("complement", "nsc tightness",
                 "O(2^sqrt m) is asymptotic; replaced at finite scale by the ko rows: rank-d width k^d, "
                 "nsc >= k^d, NFA size (k-1)d^2 + 2d"),
    };
  });
  return tasks;
}

std::vector<Task> growth_tasks(std::size_t lmax) {
  std::vector<Task> tasks;
  for (std::size_t ell = 5; ell <= lmax; ++ell)
    tasks.push_back([ell](std::mt19937_64&) {
      const BoundParams p = bound_params(2, ell);
      const BlockLanguage e = witness_E(ell);
      const MeasureOptions dsc_only{false};
      const ComplexityReport forward = measure(e, dsc_only);
      const ComplexityReport backward = measure(reversal_bitmap(e), dsc_only);
      const std::string params = ell_param(ell) + ",r=" + std::to_string(p.r);
      const std::int64_t l2 = i64(ell * ell);
      std::vector<BenchRow> rows{
          check_row("reverse-growth", "E", params, 2, ell, "dsc(E)", i64(forward.dsc),
                    std::int64_t{1} << (ell - p.r), ">="),
          check_row("reverse-growth", "E", params, 2, ell, "dsc(E)=max_dsc", i64(forward.dsc),
                    p.max_dsc.convert_to<std::int64_t>(), "="),
          check_row("reverse-growth", "E", params, 2, ell, "dsc(E^R)", i64(backward.dsc),
                    64 * l2 + 8 * (l2 + i64(ell)), "<="),
          check_row("reverse-growth", "E", params, 2, ell, "width(E^R)", i64(backward.dfa_widths.max_width()),
                    std::int64_t{1} << (p.r + 1), "<="),
      };
      for (auto& r : rows) {
        r.bound = table_entry("reverse").dsc_bound;
        r.sigma = "2";
      }
      add_note(rows[0], "finite-scale stand-in for the asymptotic reversal bound");
      const BlockLanguage twice = reversal_bitmap(reversal_bitmap(e));
      if (twice != e) {
        rows[2].status = BenchStatus::Fail;
        add_note(rows[2], "reversing twice does not restore E");
      }
      return rows;
    });
  return tasks;
}

std::vector<BenchRow> run_tasks(const std::vector<Task>& tasks, std::uint64_t seed, std::size_t jobs) {
  std::vector<std::vector<BenchRow>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(i)};
      std::mt19937_64 rng(seq);
      try {
        results[i] = tasks[i](rng);
      } catch (const CoverBudgetExceeded& e) {
        BenchRow row;
        row.op = "task";
        row.params = std::to_string(i);
        row.status = BenchStatus::Budget;
        row.notes = e.what();
        results[i] = {row};
      } catch (const std::exception& e) {
        BenchRow row;
        row.op = "task";
        row.params = std::to_string(i);
        row.status = BenchStatus::Fail;
        row.notes = e.what();
        results[i] = {row};
      }
    }
  };
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(tasks.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }
  std::vector<BenchRow> rows;
  for (auto& r : results) rows.insert(rows.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  return rows;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string md_field(const std::string& s) {
  std::string out;
  for (const char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

std::string opt_str(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); }

std::vector<std::string> cells(const BenchRow& r) {
  return {r.op,
          r.bound,
          r.sigma,
          r.family,
          r.params,
          std::to_string(r.k),
          std::to_string(r.ell),
          r.operands,
          r.metric,
          opt_str(r.measured),
          opt_str(r.formula),
          r.relation,
          r.exact ? "true" : "false",
          std::string(to_string(r.status)),
          r.notes};
}

}  // namespace

std::string_view to_string(BenchStatus status) noexcept {
  switch (status) {
    case BenchStatus::Pass: return "pass";
    case BenchStatus::Fail: return "FAIL";
    case BenchStatus::Budget: return "budget";
    case BenchStatus::Note: return "note";
  }
  return "?";
}

BlockLanguage random_language(std::uint32_t k, std::size_t ell, std::mt19937_64& rng, double density) {
  const std::uint64_t n = block_size(k, ell);
  std::bernoulli_distribution bit(density);
  for (;;) {
    BitSeq bits(n);
    for (std::uint64_t i = 0; i < n; ++i)
      if (bit(rng)) bits.set(i);
    if (!bits.none()) return BlockLanguage(Alphabet(k), ell, std::move(bits));
  }
}

BenchResult run_bench(const BenchOptions& options) {
  const bool table2 = options.suite == "table2" || options.suite == "all";
  const bool growth = options.suite == "reversal-growth" || options.suite == "all";
  if (!table2 && !growth) throw Error(ErrorKind::Parse, "unknown suite '" + options.suite + "'");
  std::vector<Task> tasks;
  if (table2) {
    auto t = table2_tasks(options.lmax ? options.lmax : 6, options.samples);
    tasks.insert(tasks.end(), t.begin(), t.end());
  }
  if (growth) {
    auto t = growth_tasks(options.lmax ? options.lmax : 10);
    tasks.insert(tasks.end(), t.begin(), t.end());
  }
  BenchResult result;
  result.rows = run_tasks(tasks, options.seed, options.jobs);
  std::stable_sort(result.rows.begin(), result.rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.op, a.k, a.ell, a.params, a.family, a.metric) <
           std::tie(b.op, b.k, b.ell, b.params, b.family, b.metric);
  });
  for (const auto& r : result.rows) {
    if (r.status == BenchStatus::Fail) ++result.failures;
    if (r.status == BenchStatus::Budget) ++result.budget_rows;
  }
  return result;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "op,bound,sigma,family,params,k,ell,operands,metric,measured,formula,relation,exact,status,notes\n";
  for (const auto& r : rows) {
    const auto c = cells(r);
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << csv_field(c[i]);
    out << "\n";
  }
  return out.str();
}

std::string to_markdown(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "| operation | bound | \\|Sigma\\| | family | params | k | l | operands | metric | measured | formula | rel "
         "| exact | status | notes |\n";
  out << "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    out << "|";
    for (const auto& c : cells(r)) out << " " << md_field(c) << " |";
    out << "\n";
  }
  return out.str();
}

}  // namespace blockset
