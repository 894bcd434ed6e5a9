#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tbt/char_duality.hpp"
#include "tbt/code.hpp"
#include "tbt/io.hpp"

namespace tbt {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t random_codes = 20;
  std::size_t max_length = 8;
  std::size_t jobs = 1;
  SearchBudget budget = SearchBudget::from_environment();
};

/// report = {"suite", "ok", "checks": [{"name", "ok", "detail"?}, ...], ...}
struct SuiteResult {
  std::string suite;
  bool ok = false;
  Json report;
};

/// Reproduces every printed value of the embedded fixtures.
SuiteResult run_worked_examples(const SuiteOptions& opts);
/// End-to-end dual construction on the fixture codes (or only `code` when given) and on
/// opts.random_codes random codes drawn from opts.seed.
SuiteResult run_kv_conjecture(const SuiteOptions& opts, const std::optional<LinearCode>& code = std::nullopt);
/// Structural invariants of characteristic spans and KV trellises on random codes.
SuiteResult run_properties(const SuiteOptions& opts);

/// "paper-examples" (alias "examples"), "kv-conjecture" or "properties". Throws InvalidArgument.
SuiteResult run_suite(std::string_view name, const SuiteOptions& opts);

/// Deterministic sample of codes with 3 <= n <= max_length over GF(2) and GF(3), both supports
/// full, 0 < k < n.
std::vector<LinearCode> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_length = 8);

Json kv_report_to_json(const KvConjectureReport& rep);
std::string tie_break_name(TieBreak t);

}  // namespace tbt
