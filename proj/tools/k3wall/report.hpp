/* SPDX-License-Identifier: Apache-2.0
 *
 * report.hpp -- the checks run by `k3wall verify` and their JSON / Markdown
 * rendering.
 *
 * A report is a list of checks in a fixed order.  Every check carries an
 * exact verdict; checks backed by a finite search also carry the searched
 * bound and a disclaimer.  Wall-clock timings are kept apart from the checks
 * so that reports are byte-identical across runs with the same flags.
 */
#ifndef K3WALL_TOOLS_REPORT_HPP
#define K3WALL_TOOLS_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "k3wall/polysearch.hpp"
#include "k3wall/tables.hpp"

namespace k3wall::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

enum class CheckStatus { Verified, Proved, Failed, ResourceCapped };
const char* to_string(CheckStatus s);
bool passes(CheckStatus s);

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::Failed;
  json numbers = json::object();
  json search_bounds; /* null for exact checks */
  double runtime_ms = 0.0;
};

struct VerifyOptions {
  std::int64_t s_max = 100000;
  double budget_sec = 600.0;
  std::size_t phase2_cap = 100000;
  /* Run the chain search even when the large-p certificate applies. */
  bool force_search = false;
  bool with_tables = true;
};

struct Report {
  std::int64_t p = 0, m = 0, g = 0;
  std::vector<CheckRecord> checks;
  json tables; /* null unless tables exist for p */
  std::vector<std::string> figures;
};

/* The individual checks, in the order `verify` runs them. */
CheckRecord check_m_and_bounds(const Surface& X);
CheckRecord check_brill_noether_count(const Surface& X);
CheckRecord check_grey_roots(const Surface& X, std::int64_t s_max);
CheckRecord check_first_wall(const Surface& X);
CheckRecord check_polygon(const Surface& X, const VerifyOptions& opt);
CheckRecord check_endgame(const Surface& X);

Report run_verify(const Surface& X, const VerifyOptions& opt);

/* 0 when every check passes, 1 on any failure, 2 when the only problem is
 * an exhausted resource budget. */
int exit_code(const Report& r);

json to_json(const Report& r, bool include_runtime);
std::string to_markdown(const Report& r, bool include_runtime);

json tables_json(const TableSet& t);
std::string tables_markdown(const TableSet& t);

/* Root scan of the grey region, shared by `verify` and `roots`. */
json roots_json(const RootScan& scan);
std::string roots_summary(const RootScan& scan);

/* Does the table set exist for this p? */
bool has_tables(std::int64_t p);

}  // namespace k3wall::cli

#endif  // K3WALL_TOOLS_REPORT_HPP
