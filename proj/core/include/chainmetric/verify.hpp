#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chainmetric/field.hpp"

// Theorem-verification sweeps. Every closed form and classification claim in
// the library is exercised here against enumeration on small instances. Each
// check is deterministic given (id, config): random instances derive from the
// config seed and the check id only.

namespace chainmetric {

enum class CheckStatus { passed, failed, skipped };

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::passed;
  std::uint64_t cases = 0;   // instances exercised
  std::string detail;        // first counterexample, aggregate stats, or skip reason
};

struct SweepConfig {
  std::uint64_t seed = 2024;
  unsigned random_weights = 20;        // tables per field in formula sweeps
  unsigned heavy_random_weights = 10;  // tables per field in clique-backed sweeps
  unsigned random_codes = 500;         // codes per (q, n) in code sweeps
  std::uint64_t budget = kDefaultEnumerationBudget;
};

struct EqualityInstance {
  unsigned q = 0;
  std::vector<unsigned> weight_values;  // w(a) for nonzero a in index order
  std::uint64_t S = 0;
  std::uint64_t product = 0;  // anticode factor times upper family size; equals q here
  bool code_diameter_perfect = false;
};

struct EqualityHuntResult {
  std::uint64_t tables_scanned = 0;
  std::uint64_t valid_tables = 0;
  std::uint64_t levels_checked = 0;
  std::vector<EqualityInstance> instances;
  bool all_verified = true;  // every instance yielded a diameter-perfect code
};

// Exhaustive scan of symmetric weight tables with values in [1, max_value]
// over the given field orders; records every criterion equality and verifies
// it constructively. Finding none is a legitimate outcome.
EqualityHuntResult equality_hunt(const std::vector<unsigned>& orders = {4, 8, 9},
                                 unsigned max_value = 4);

std::vector<std::string> check_ids();
CheckResult run_check(const std::string& id, const SweepConfig& config = {});
std::vector<CheckResult> run_verification_suite(const SweepConfig& config = {});

// Check ids backing acceptance criterion 1..10 (empty for other numbers).
std::vector<std::string> criterion_checks(unsigned criterion);

std::string to_string(CheckStatus status);

}  // namespace chainmetric
