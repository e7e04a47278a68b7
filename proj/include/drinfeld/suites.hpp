#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drinfeld/characters.hpp"
#include "drinfeld/report.hpp"

namespace drinfeld {

using TablePair = std::pair<int, int>;  // (j, i)

// All (j, i) with 1 <= i, j <= range and
// sum_beta beta(zeta)^{|n|-1-i} exp_value(beta)^j != 0, sorted by j then i.
// n must be a monic prime; zeta is its canonical root.
std::vector<TablePair> table_pairs(std::uint32_t q, const PolyA& n, int range);
// Reference list for q = 5, n = t^2+2, range 23.
const std::vector<TablePair>& golden_table();
// Rows grouped by j, pairs "[j, i]" separated by ", ", last row ending in ".".
std::string format_table(const std::vector<TablePair>& pairs);

struct SuiteOptions {
  std::optional<std::uint32_t> q;
  std::string var = "t";
  std::optional<std::string> modulus;
  std::optional<std::string> character;
  std::optional<int> weight;
  std::optional<int> type;
  std::optional<int> s;
  std::optional<std::size_t> precision;
  std::optional<int> hecke_degree_bound;
};

const std::vector<std::string>& suite_names();
// Throws InvalidArgument for an unknown suite. Reports come back in a fixed
// order regardless of the thread count.
std::vector<VerificationReport> run_suite(std::string_view name, const SuiteOptions& opt);

// DRINFELD_THREADS, else the hardware concurrency, at least 1.
unsigned thread_count();
// Runs the jobs on up to thread_count() threads; results keep job order.
std::vector<VerificationReport> run_parallel(const std::vector<std::function<VerificationReport()>>& jobs);

}  // namespace drinfeld
