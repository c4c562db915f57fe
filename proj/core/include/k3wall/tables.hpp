/* SPDX-License-Identifier: Apache-2.0
 *
 * tables.hpp -- recomputation of the case tables for (p, m) = (17, 4) and
 * (23, 5), diffed cell by cell against the printed values.
 *
 * For a base vertex q0 of the polygon and the next vertex q = a + ib between
 * the segments z1 z2 and q0 z2, the tables list
 *   l1 = the parity-aware bound of the segment q0 q (norm or Brill-Noether
 *        form, depending on the table),
 *   q' = the point of z1 z2 at height b + 1,
 *   l2 = the parity-aware bound of the envelope q q' z2.
 * The (23, 5) crossing table lists the abscissae of z1 z2, q3 z2 and q4 z2 at
 * each height; printed decimals are truncations of the exact values.
 */
#ifndef K3WALL_TABLES_HPP
#define K3WALL_TABLES_HPP

#include <string>
#include <vector>

#include "k3wall/polysearch.hpp"

namespace k3wall {

struct TableRow {
  std::string label;
  std::vector<std::string> printed;  /* as printed (markers such as '*' kept) */
  std::vector<std::string> computed; /* exact recomputation, same formatting */
  std::vector<bool> match;
};

struct ReproducedTable {
  int number = 0;
  std::string title;
  std::vector<std::string> columns; /* column headers as printed */
  std::vector<TableRow> rows;
  std::vector<std::string> notes;   /* mismatch explanations and remarks */
  std::size_t cells = 0, mismatches = 0;
  /* The case argument using this table needs l1 + l2 <= limit in every
   * column except those it treats separately (printed with '*'). */
  long sum_limit = 0;
  bool argument_holds = true;
};

/* The candidate vertices q of one case, computed from the geometry. */
struct CandidateCheck {
  std::string name;
  std::vector<GaussPoint> computed;
  std::vector<GaussPoint> printed;
  std::vector<GaussPoint> missing_from_print; /* admissible but not listed */
  std::vector<GaussPoint> not_admissible;     /* listed but outside the region */
};

struct TableSet {
  std::int64_t p = 0, m = 0;
  std::vector<ReproducedTable> tables;
  std::vector<CandidateCheck> candidates;
  /* Values of the missing candidates under the same formulas. */
  std::vector<std::string> extra_rows;
  bool all_cells_match() const;
  std::size_t mismatch_count() const;
};

/* Supported for (17, 4) and (23, 5); std::invalid_argument otherwise. */
TableSet reproduce_tables(const Surface& X);

/* "a+bi" with a rational real part. */
std::string gauss_string(const RatPoint& q);

}  // namespace k3wall

#endif  // K3WALL_TABLES_HPP
