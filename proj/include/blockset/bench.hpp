#pragma once

// Bound-verification bench: one row per checked quantity, grouped by the
// operation rows of the block-language bound table.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "blockset/block_language.hpp"

namespace blockset {

enum class BenchStatus { Pass, Fail, Budget, Note };

std::string_view to_string(BenchStatus status) noexcept;

struct BenchRow {
  std::string op;
  // Table columns: the bound as printed and the alphabet size it needs.
  std::string bound;
  std::string sigma;
  std::string family;
  std::string params;
  std::uint32_t k = 0;
  std::size_t ell = 0;
  // Operand dsc/nsc and width profiles, e.g. "m=5 (1,1,1,1) n=5 (1,1,1,1)".
  std::string operands;
  // dsc, nsc, width[d], samples, ...
  std::string metric;
  std::optional<std::int64_t> measured;
  std::optional<std::int64_t> formula;
  // "=", "<=", ">=", "+-" (within ell - 1 of the operand), or "all" for
  // property rows where measured counts passing samples out of formula.
  std::string relation;
  bool exact = false;
  BenchStatus status = BenchStatus::Pass;
  std::string notes;
};

struct BenchOptions {
  std::string suite = "table2";
  // Largest ell per family; 0 picks the suite default (table2: 6,
  // reversal-growth: 10).
  std::size_t lmax = 0;
  std::uint64_t seed = 1;
  // 0 means hardware concurrency.
  std::size_t jobs = 0;
  // Samples per property row.
  std::size_t samples = 25;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::size_t failures = 0;
  std::size_t budget_rows = 0;
};

// Throws Error{Parse} for an unknown suite.
BenchResult run_bench(const BenchOptions& options);

std::string to_csv(const std::vector<BenchRow>& rows);
std::string to_markdown(const std::vector<BenchRow>& rows);

// Each bit set independently with probability `density`; retried until
// nonempty.
BlockLanguage random_language(std::uint32_t k, std::size_t ell, std::mt19937_64& rng, double density = 0.5);

}  // namespace blockset
