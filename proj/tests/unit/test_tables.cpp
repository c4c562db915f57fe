/* SPDX-License-Identifier: Apache-2.0
 *
 * Unit tests for the reproduction of the case tables.
 */
#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "k3wall/tables.hpp"

using namespace k3wall;

namespace {

const ReproducedTable& table(const TableSet& s, int number) {
  auto it = std::find_if(s.tables.begin(), s.tables.end(), [&](const ReproducedTable& t) { return t.number == number; });
  if (it == s.tables.end()) throw std::out_of_range("no such table");
  return *it;
}

struct Cell {
  std::string printed, computed;
  bool match;
};

Cell cell(const ReproducedTable& t, const std::string& row, const std::string& column) {
  auto c = std::find(t.columns.begin(), t.columns.end(), column);
  if (c == t.columns.end()) throw std::out_of_range("no column " + column);
  const std::size_t j = static_cast<std::size_t>(c - t.columns.begin());
  for (const auto& r : t.rows)
    if (r.label == row) return Cell{r.printed[j], r.computed[j], r.match[j]};
  throw std::out_of_range("no row " + row);
}

}  // namespace

TEST(Tables, UnsupportedPair) { EXPECT_THROW(reproduce_tables(Surface(13)), std::invalid_argument); }

TEST(Tables, P17Examples) {
  const TableSet s = reproduce_tables(Surface(17));
  EXPECT_EQ(s.p, 17);
  EXPECT_EQ(s.m, 4);
  const Cell a = cell(table(s, 1), "l1", "11+5i");
  EXPECT_EQ(a.computed, "6");
  EXPECT_TRUE(a.match);
  const Cell b = cell(table(s, 2), "l1", "136+16i");
  EXPECT_EQ(b.computed, "84");
  EXPECT_EQ(cell(table(s, 2), "l2", "136+16i").computed, "0");
  EXPECT_EQ(cell(table(s, 2), "q'", "136+16i").computed, "--");
}

TEST(Tables, P17PrintedEvenRow) {
  const TableSet s = reproduce_tables(Surface(17));
  const ReproducedTable& t2 = table(s, 2);
  std::vector<std::string> printed;
  for (const auto& r : t2.rows)
    if (r.label == "l1") printed = r.printed;
  EXPECT_EQ(printed, (std::vector<std::string>{"7", "13", "21", "28", "42", "63", "84"}));
}

TEST(Tables, P17KnownMismatches) {
  const TableSet s = reproduce_tables(Surface(17));
  /* the Brill-Noether form at 57+9i: D = 56^2 + 4*17*25 + 4 = 4840, floor(sqrt(4840)/2) = 34 */
  EXPECT_EQ(isqrt(Integer(4840)), 69);
  const Cell c = cell(table(s, 1), "l1", "57+9i");
  EXPECT_EQ(c.printed, "35");
  EXPECT_EQ(c.computed, "34");
  EXPECT_FALSE(c.match);
  /* every mismatch is listed in the notes of its table */
  for (const auto& t : s.tables)
    if (t.mismatches > 0) {
      EXPECT_FALSE(t.notes.empty()) << "table " << t.number;
    }
}

TEST(Tables, P23CrossingValues) {
  const TableSet s = reproduce_tables(Surface(23));
  const Cell x6 = cell(table(s, 3), "x'_k", "6");
  EXPECT_EQ(x6.printed, "19.1");
  EXPECT_EQ(x6.computed, "19.1");
  EXPECT_TRUE(x6.match);
  EXPECT_EQ(table(s, 3).mismatches, 0u);
}

TEST(Tables, P23Candidates) {
  const TableSet s = reproduce_tables(Surface(23));
  for (const auto& c : s.candidates) {
    EXPECT_TRUE(c.missing_from_print.empty()) << c.name;
    EXPECT_TRUE(c.not_admissible.empty()) << c.name;
  }
}

TEST(Tables, GaussString) {
  EXPECT_EQ(gauss_string(RatPoint{make_rational(131, 6), Rational(6)}), "131/6+6i");
  EXPECT_EQ(gauss_string(RatPoint{Rational(11), Rational(5)}), "11+5i");
}
