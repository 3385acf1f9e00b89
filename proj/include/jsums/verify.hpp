#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jsums/curves.hpp"

namespace jsums {

using ordered_json = nlohmann::ordered_json;

// One checker per verified statement. The identifiers are part of the CLI
// and report interface and are treated as opaque check names.
enum class CheckId {
  greene_equiv,
  l1_4,
  l1_1,
  c1_4,
  c1_5,
  lemma_2_5,
  prop_2_6_1,
  prop_2_6_2,
  prop_2_6_3,
  prop_2_6_4,
  l3_5,
  t1_Em,
  t1_EmPrime,
  t3,
  t3_4,
  t3_5,
  t3_6,
  bt1,
  bt2,
  points_EC,
};

inline constexpr int kCheckCount = 20;

const char* check_name(CheckId id);
// One-line description of what the check verifies.
const char* check_description(CheckId id);
std::optional<CheckId> check_from_name(std::string_view name);
const std::vector<CheckId>& all_checks();

struct Sampling {
  std::uint64_t exhaustive_limit = 1000000;  // exhaustive when cells <= limit
  std::uint32_t samples = 500;               // draws per group otherwise
  std::uint64_t seed = 0;
};

struct CheckReport {
  CheckId check = CheckId::greene_equiv;
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t q = 0;
  ordered_json params;   // group parameters and cell tallies
  std::string status;    // pass | fail | hypothesis_unmet | vacuous
  ordered_json lhs;      // serialized sides of the first failing cell
  ordered_json rhs;
  ordered_json witness;  // minimal failing cell within the explored set
  ordered_json trace;    // adjudication notes and term decompositions
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> aux_primes;
};

// Runs one check over the given fields; one report per (field, parameter
// group). Cells are enumerated exhaustively in canonical order when the raw
// cell count fits sampling.exhaustive_limit, otherwise sampled with a seed
// derived deterministically from (seed, check, q, group).
std::vector<CheckReport> run_check(CheckId id,
                                   const std::vector<std::pair<std::uint32_t, std::uint32_t>>& fields,
                                   const Sampling& sampling, int aux_count = 2);

// Runs the given checks over every odd prime power in [q_min, q_max].
// Reports are ordered by (q, check, group). threads > 1 parallelizes over
// (check, field) pairs; the output is identical to the sequential run.
std::vector<CheckReport> sweep(const std::vector<CheckId>& ids, std::uint32_t q_min,
                               std::uint32_t q_max, const Sampling& sampling, int aux_count = 2,
                               int threads = 1);

// Re-evaluates the single cell recorded in a failure witness; returns the
// cell status ("pass", "fail", "hypothesis_unmet" or "skip").
std::string replay_witness(CheckId id, std::uint32_t p, std::uint32_t e,
                           const ordered_json& witness, const Sampling& sampling,
                           int aux_count = 2);

ordered_json report_to_json(const CheckReport& r);
ordered_json reports_to_json(const std::vector<CheckReport>& rs);
// Aggregated per (check, field) cell tallies: check,q,pass,fail,hypothesis_unmet,vacuous.
std::string summary_csv(const std::vector<CheckReport>& rs);
// One human-readable line per report.
std::string summary_text(const std::vector<CheckReport>& rs);

}  // namespace jsums
