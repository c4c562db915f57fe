/* SPDX-License-Identifier: Apache-2.0
 *
 * report.cpp -- checks of `k3wall verify` and report rendering.
 */
#include "report.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace k3wall::cli {

namespace {

json radical_json(const RadicalSum& x) {
  json j = json::object();
  j["exact"] = x.to_string();
  j["approx"] = radical_decimal(x, 12);
  return j;
}

json points_json(const std::vector<GaussPoint>& pts) {
  json a = json::array();
  for (const auto& g : pts) a.push_back(g.to_string());
  return a;
}

bool on_parabola(const RatPoint& pt, const Surface& X) { return pt.y == Rational(X.p()) * pt.x * pt.x; }

/* Markdown rendering of a JSON value inside a bullet list. */
std::string md_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void md_numbers(std::ostringstream& os, const json& numbers, const std::string& indent) {
  for (auto it = numbers.begin(); it != numbers.end(); ++it) {
    const json& v = it.value();
    if (v.is_object() && !v.empty()) {
      os << indent << "- " << it.key() << ":\n";
      md_numbers(os, v, indent + "  ");
    } else {
      os << indent << "- " << it.key() << ": " << md_value(v) << "\n";
    }
  }
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Verified: return "Verified";
    case CheckStatus::Proved: return "Proved";
    case CheckStatus::Failed: return "Failed";
    case CheckStatus::ResourceCapped: return "ResourceCapped";
  }
  return "?";
}

bool passes(CheckStatus s) { return s == CheckStatus::Verified || s == CheckStatus::Proved; }

bool has_tables(std::int64_t p) { return p == 17 || p == 23; }

/* ------------------------------------------------------------------------- */

CheckRecord check_m_and_bounds(const Surface& X) {
  CheckRecord c;
  c.name = "m_and_classes";
  const auto dv = distinguished_vectors(X);
  const auto mb = m_bound_check(X.p());
  const Integer v_sq = pairing(dv.v, dv.v, X);
  const Integer g = gcd(Integer(dv.m), Integer(X.p() - dv.m * dv.m));
  c.numbers["m"] = dv.m;
  c.numbers["v"] = dv.v.to_string();
  c.numbers["u"] = dv.u.to_string();
  c.numbers["w"] = dv.w.to_string();
  c.numbers["v_square"] = str(v_sq);
  c.numbers["w_equals_v_plus_u"] = dv.w == dv.v + dv.u;
  c.numbers["gcd_m_p_minus_m2"] = str(g);
  c.numbers["inequality_m_lt_half_p_minus_3"] = mb.m_inequality;
  c.numbers["sqrt_2p_over_5_floor"] = mb.sqrt_bound;
  c.numbers["m_le_sqrt_2p_over_5"] = mb.asymptotic;
  c.numbers["asymptotic_bound_required"] = mb.asymptotic_claimed;
  const bool ok = v_sq == 0 && g == 1 && dv.w == dv.v + dv.u && mb.m_inequality &&
                  (!mb.asymptotic_claimed || mb.asymptotic);
  c.status = ok ? CheckStatus::Verified : CheckStatus::Failed;
  return c;
}

CheckRecord check_brill_noether_count(const Surface& X) {
  CheckRecord c;
  c.name = "brill_noether_count";
  const std::int64_t m = min_nondivisor(X.p());
  const Integer expected(X.p() + m * m);
  const Integer value = prop52_identity(X);
  c.numbers["value"] = str(value);
  c.numbers["expected"] = str(expected);
  c.status = value == expected ? CheckStatus::Verified : CheckStatus::Failed;
  return c;
}

json roots_json(const RootScan& scan) {
  json j = json::object();
  j["s_max"] = scan.s_max;
  j["candidates_checked"] = scan.candidates_checked;
  json roots = json::array();
  for (const auto& r : scan.roots) roots.push_back(r.to_string());
  j["roots"] = roots;
  json certs = json::array();
  for (const auto& s : scan.certificates) {
    json e = json::object();
    e["segment"] = s.name;
    e["status"] = to_string(s.status);
    e["direction"] = "(" + std::to_string(s.dir_u) + ", " + std::to_string(s.dir_v) + ")";
    e["residue"] = str(s.residue);
    e["argument"] = s.argument;
    certs.push_back(e);
  }
  j["segment_certificates"] = certs;
  return j;
}

std::string roots_summary(const RootScan& scan) {
  std::ostringstream os;
  if (scan.roots.empty()) {
    os << "no roots found";
  } else {
    os << scan.roots.size() << " root" << (scan.roots.size() == 1 ? "" : "s") << " found:";
    for (const auto& r : scan.roots) os << " " << r.to_string();
  }
  bool all_proved = true;
  std::string names;
  for (const auto& s : scan.certificates) {
    if (!names.empty()) names += ",";
    names += s.name;
    all_proved = all_proved && s.status == ProofStatus::Proved;
  }
  os << "; segments " << names << ": ";
  if (all_proved) {
    os << "Proved";
  } else {
    bool first = true;
    for (const auto& s : scan.certificates) {
      os << (first ? "" : ", ") << s.name << " " << to_string(s.status);
      first = false;
    }
  }
  return os.str();
}

CheckRecord check_grey_roots(const Surface& X, std::int64_t s_max) {
  CheckRecord c;
  c.name = "grey_region_roots";
  const RootScan scan = enumerate_roots_in_region(grey_region(X), X, s_max);
  c.numbers = roots_json(scan);
  c.numbers["summary"] = roots_summary(scan);
  bool ok = scan.roots.empty();
  for (const auto& s : scan.certificates) ok = ok && s.status == ProofStatus::Proved;
  c.status = ok ? CheckStatus::Verified : CheckStatus::Failed;
  c.search_bounds = json::object();
  c.search_bounds["s_max"] = s_max;
  c.search_bounds["disclaimer"] =
      "the boundary segments are certified exactly; interior points are searched for roots with "
      "1 <= s <= s_max only, and absence beyond s_max is not established by this search";
  return c;
}

CheckRecord check_first_wall(const Surface& X) {
  CheckRecord c;
  c.name = "first_wall";
  const auto gv = grey_vertices(X);
  const auto dv = distinguished_vectors(X);
  const RatPoint pivot = pushforward_pivot(X);
  const bool pu = on_parabola(gv.p_u, X), qq = on_parabola(gv.q, X), pv = on_parabola(gv.p_v, X);
  const bool oprime = on_closed_segment(gv.o_prime, gv.q, gv.p_v);
  const bool pivot_is_pr_w = project(dv.w) == pivot;
  const bool col = collinear(pivot, gv.p_u, gv.p_v);
  const WallVerdict pv_class = classify_candidate_wall(gv.p_v, X).verdict;
  std::int64_t checked = 0, below = 0;
  json not_below = json::array();
  for (std::int64_t k = 1; k <= dv.m * dv.m; ++k) {
    if (k == X.p()) continue;
    const MukaiVector vk(Integer(dv.m * dv.m - k), Integer(dv.m), Integer(X.p() - k));
    const WallVerdict w = classify_candidate_wall(project(vk), X).verdict;
    ++checked;
    if (w == WallVerdict::Below) ++below;
    else not_below.push_back(k);
  }
  c.numbers["p_u"] = gv.p_u.to_string();
  c.numbers["q"] = gv.q.to_string();
  c.numbers["p_v"] = gv.p_v.to_string();
  c.numbers["o_prime"] = gv.o_prime.to_string();
  c.numbers["pr_w"] = pivot.to_string();
  c.numbers["p_u_on_parabola"] = pu;
  c.numbers["q_on_parabola"] = qq;
  c.numbers["p_v_on_parabola"] = pv;
  c.numbers["o_prime_on_segment_q_p_v"] = oprime;
  c.numbers["pr_w_p_u_p_v_collinear"] = col && pivot_is_pr_w;
  c.numbers["wall_of_p_v"] = to_string(pv_class);
  c.numbers["shifts_checked"] = checked;
  c.numbers["shifts_below"] = below;
  c.numbers["shifts_not_below"] = not_below;
  const bool ok = pu && qq && pv && oprime && col && pivot_is_pr_w && pv_class == WallVerdict::On && below == checked;
  c.status = ok ? CheckStatus::Verified : CheckStatus::Failed;
  return c;
}

namespace {

bool search_route(std::int64_t p) { return p < 31 || p == 47 || p == 59; }

json envelope_json(const EnvelopeCheck& e, std::int64_t target) {
  json j = json::object();
  j["q1"] = e.q1.to_string();
  j["q2"] = e.q2.to_string();
  j["h"] = radical_json(e.h);
  j["floor_h"] = str(e.floor_h);
  j["h_prime"] = str(e.h_prime);
  j["q1_real_part_odd"] = e.q1_odd;
  j["closed_form_agrees"] = e.factor_form_agrees;
  j["outside_points_are_z1_q1"] = e.outside_points_ok;
  j["floor_h_le_target_minus_1"] = e.floor_h_ok;
  j["h_prime_le_target_minus_1"] = e.h_prime_ok;
  j["passes"] = e.passes();
  if (!e.passes()) {
    std::string why;
    if (!e.floor_h_ok) why = "floor(h) = " + str(e.floor_h) + " exceeds " + std::to_string(target - 1);
    if (!e.h_prime_ok) why += (why.empty() ? "" : "; ") + std::string("h' = ") + str(e.h_prime) + " exceeds " +
                              std::to_string(target - 1);
    if (!e.outside_points_ok) why += (why.empty() ? "" : "; ") + std::string("unexpected lattice points outside the pentagon");
    j["note"] = why + "; the envelope bound alone does not settle this case, the chain search does";
  }
  return j;
}

}  // namespace

CheckRecord check_polygon(const Surface& X, const VerifyOptions& opt) {
  CheckRecord c;
  c.name = "polygon";
  const std::int64_t p = X.p();
  if (search_route(p) || opt.force_search) {
    SearchOptions so;
    so.budget_sec = opt.budget_sec;
    so.phase2_cap = opt.phase2_cap;
    const Verdict v = max_interior_bound(X, SearchMode::Refined, so);
    c.numbers["route"] = "chain search";
    c.numbers["mode"] = to_string(v.mode);
    c.numbers["chi"] = str(v.chi);
    c.numbers["target"] = str(v.target);
    c.numbers["lattice_points"] = v.lattice_count;
    if (v.status != VerdictStatus::ResourceCapped) {
      c.numbers["triangle_floor"] = str(v.triangle_floor);
      c.numbers["max_interior_bound"] = str(v.max_interior_bound);
      c.numbers["witness"] = v.witness.to_string();
      c.numbers["witness_plain_floor"] = str(v.witness_plain_floor);
      c.numbers["long_chains"] = v.refined_cases.size();
      c.numbers["long_chain_enumeration_complete"] = v.phase2_complete;
    }
    if (!v.note.empty()) c.numbers["note"] = v.note;
    if (search_route(p) && p != 13 && p != 17 && p != 23)
      c.numbers["envelope"] = envelope_json(envelope_check(X), p + v.m * v.m);
    switch (v.status) {
      case VerdictStatus::Verified: c.status = CheckStatus::Verified; break;
      case VerdictStatus::Failed: c.status = CheckStatus::Failed; break;
      case VerdictStatus::ResourceCapped: c.status = CheckStatus::ResourceCapped; break;
    }
    c.numbers["budget_sec"] = opt.budget_sec;
    c.numbers["long_chain_cap"] = opt.phase2_cap;
    return c;
  }
  const LargePCertificate lc = large_p_certificate(p);
  c.numbers["route"] = "large-p certificate";
  c.numbers["m"] = lc.m;
  c.numbers["two_epsilon"] = radical_json(lc.epsilon2);
  c.numbers["gap"] = radical_json(lc.gap);
  c.numbers["two_epsilon_lt_gap"] = lc.verdict;
  c.numbers["f1"] = str(lc.f1);
  c.numbers["f2"] = radical_json(lc.f2);
  c.numbers["f3"] = radical_json(lc.f3);
  c.numbers["two_epsilon_le_f1"] = lc.f1_bounds_eps;
  c.numbers["f2_plus_f3_le_gap"] = lc.f23_bounds_gap;
  json arg = json::object();
  arg["route"] = lc.route;
  arg["eps_threshold"] = lc.eps_threshold ? json(str(*lc.eps_threshold)) : json(nullptr);
  arg["gap_threshold"] = lc.gap_threshold ? json(str(*lc.gap_threshold)) : json(nullptr);
  arg["holds"] = lc.route_holds;
  arg["listed_bucket"] = lc.listed_bucket;
  if (!lc.note.empty()) arg["note"] = lc.note;
  c.numbers["closed_form_argument"] = arg;
  c.status = lc.verdict ? CheckStatus::Verified : CheckStatus::Failed;
  return c;
}

CheckRecord check_endgame(const Surface& X) {
  CheckRecord c;
  c.name = "theorem_endgame";
  const EndgameChecks e = theorem_endgame_checks(X);
  const std::int64_t m = min_nondivisor(X.p());
  c.numbers["k_range"] = "[" + std::to_string(-m * m) + ", " + std::to_string(m * m) + "]";
  c.numbers["gcd_m_p_minus_m2_is_1"] = e.gcd_ok;
  c.numbers["open_segment_o_z1_lattice_free"] = e.open_segment_lattice_free;
  c.numbers["square_admissible_iff_k_nonnegative"] = e.square_iff_k_nonnegative;
  c.numbers["only_k0_admissible_and_not_below"] = e.k_zero_unique;
  c.numbers["slope_equality_at_k0"] = e.strict_slope_fails_at_zero;
  c.status = e.all_ok() ? CheckStatus::Verified : CheckStatus::Failed;
  return c;
}

/* ------------------------------------------------------------------------- */

Report run_verify(const Surface& X, const VerifyOptions& opt) {
  Report r;
  r.p = X.p();
  r.m = min_nondivisor(X.p());
  r.g = X.genus();
  auto timed = [&](const std::string& name, const std::function<CheckRecord()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckRecord c;
    try {
      c = f();
    } catch (const std::exception& ex) {
      c = CheckRecord{};
      c.name = name;
      c.status = CheckStatus::Failed;
      c.numbers["error"] = ex.what();
    }
    c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    r.checks.push_back(std::move(c));
  };
  timed("m_and_classes", [&] { return check_m_and_bounds(X); });
  timed("brill_noether_count", [&] { return check_brill_noether_count(X); });
  timed("grey_region_roots", [&] { return check_grey_roots(X, opt.s_max); });
  timed("first_wall", [&] { return check_first_wall(X); });
  timed("polygon", [&] { return check_polygon(X, opt); });
  timed("theorem_endgame", [&] { return check_endgame(X); });
  if (opt.with_tables && has_tables(X.p())) r.tables = tables_json(reproduce_tables(X));
  return r;
}

int exit_code(const Report& r) {
  bool capped = false;
  for (const auto& c : r.checks) {
    if (c.status == CheckStatus::Failed) return 1;
    if (c.status == CheckStatus::ResourceCapped) capped = true;
  }
  return capped ? 2 : 0;
}

json to_json(const Report& r, bool include_runtime) {
  json j = json::object();
  j["tool_version"] = kToolVersion;
  j["surface"] = json{{"p", r.p}, {"m", r.m}, {"g", r.g}};
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e = json::object();
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    e["numbers"] = c.numbers;
    e["search_bounds"] = c.search_bounds;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["tables"] = r.tables;
  j["figures"] = r.figures;
  j["exit_code"] = exit_code(r);
  if (include_runtime) {
    json rt = json::object();
    for (const auto& c : r.checks) rt[c.name] = c.runtime_ms;
    j["runtime_ms"] = rt;
  }
  return j;
}

std::string to_markdown(const Report& r, bool include_runtime) {
  std::ostringstream os;
  const int code = exit_code(r);
  os << "# k3wall verification report\n\n";
  os << "- tool version: " << kToolVersion << "\n";
  os << "- surface: p = " << r.p << ", m = " << r.m << ", g = " << r.g << "\n";
  os << "- result: " << (code == 0 ? "PASS" : code == 2 ? "RESOURCE-CAPPED" : "FAIL") << " (exit " << code
     << ")\n\n";
  os << "| # | check | status | search |\n|---|---|---|---|\n";
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    const auto& c = r.checks[i];
    os << "| " << i + 1 << " | " << c.name << " | " << to_string(c.status) << " | "
       << (c.search_bounds.is_null() ? "exact" : "bounded") << " |\n";
  }
  for (const auto& c : r.checks) {
    os << "\n## " << c.name << " -- " << to_string(c.status) << "\n\n";
    md_numbers(os, c.numbers, "");
    if (!c.search_bounds.is_null()) {
      os << "\nSearch bounds:\n\n";
      md_numbers(os, c.search_bounds, "");
    }
  }
  if (!r.tables.is_null()) {
    os << "\n## Tables\n\n";
    os << "- cells: " << r.tables["cells"].dump() << ", printed-value mismatches: " << r.tables["mismatch_count"].dump()
       << " (run `k3wall tables --p " << r.p << "` for the full diff)\n";
  }
  if (!r.figures.empty()) {
    os << "\n## Figures\n\n";
    for (const auto& f : r.figures) os << "- " << f << "\n";
  }
  if (include_runtime) {
    os << "\n## Runtime\n\n";
    for (const auto& c : r.checks) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.1f", c.runtime_ms);
      os << "- " << c.name << ": " << buf << " ms\n";
    }
  }
  return os.str();
}

/* ------------------------------------------------------------------------- */

json tables_json(const TableSet& t) {
  json j = json::object();
  j["p"] = t.p;
  j["m"] = t.m;
  std::size_t cells = 0;
  json tabs = json::array();
  for (const auto& tb : t.tables) {
    json e = json::object();
    e["number"] = tb.number;
    e["title"] = tb.title;
    e["columns"] = tb.columns;
    json rows = json::array();
    for (const auto& row : tb.rows) {
      json rj = json::object();
      rj["label"] = row.label;
      rj["printed"] = row.printed;
      rj["computed"] = row.computed;
      rj["match"] = row.match;
      rows.push_back(rj);
    }
    e["rows"] = rows;
    e["cells"] = tb.cells;
    e["mismatches"] = tb.mismatches;
    e["sum_limit"] = tb.sum_limit;
    e["argument_holds"] = tb.argument_holds;
    e["notes"] = tb.notes;
    tabs.push_back(e);
    cells += tb.cells;
  }
  j["cells"] = cells;
  j["mismatch_count"] = t.mismatch_count();
  j["all_cells_match"] = t.all_cells_match();
  j["tables"] = tabs;
  json cands = json::array();
  for (const auto& c : t.candidates) {
    json e = json::object();
    e["name"] = c.name;
    e["computed"] = points_json(c.computed);
    e["printed"] = points_json(c.printed);
    e["missing_from_print"] = points_json(c.missing_from_print);
    e["not_admissible"] = points_json(c.not_admissible);
    cands.push_back(e);
  }
  j["candidates"] = cands;
  j["extra_rows"] = t.extra_rows;
  return j;
}

std::string tables_markdown(const TableSet& t) {
  std::ostringstream os;
  os << "# Case tables for (p, m) = (" << t.p << ", " << t.m << ")\n";
  std::size_t cells = 0;
  for (const auto& tb : t.tables) {
    cells += tb.cells;
    os << "\n## Table " << tb.number << ": " << tb.title << "\n\n";
    os << "| |";
    for (const auto& col : tb.columns) os << " " << md_escape(col) << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < tb.columns.size(); ++i) os << "---|";
    os << "\n";
    for (const auto& row : tb.rows) {
      os << "| " << md_escape(row.label) << " |";
      for (std::size_t i = 0; i < row.computed.size(); ++i) {
        if (row.match[i]) os << " " << md_escape(row.computed[i]) << " |";
        else os << " " << md_escape(row.computed[i]) << " (printed " << md_escape(row.printed[i]) << ") |";
      }
      os << "\n";
    }
    os << "\n" << tb.cells << " cells, " << tb.mismatches << " printed-value mismatch" << (tb.mismatches == 1 ? "" : "es");
    if (tb.sum_limit > 0)
      os << "; case argument (l1 + l2 <= " << tb.sum_limit << "): " << (tb.argument_holds ? "holds" : "fails");
    os << "\n";
    if (!tb.notes.empty()) {
      os << "\n";
      for (const auto& n : tb.notes) os << "- " << n << "\n";
    }
  }
  if (!t.candidates.empty()) {
    os << "\n## Candidate vertices\n\n";
    auto list = [](const std::vector<GaussPoint>& v) {
      std::string s;
      for (const auto& g : v) s += (s.empty() ? "" : " ") + g.to_string();
      return s.empty() ? std::string("none") : s;
    };
    for (const auto& c : t.candidates) {
      os << "- " << c.name << ": computed " << list(c.computed) << "\n";
      os << "  - printed " << list(c.printed) << "\n";
      os << "  - admissible but not printed: " << list(c.missing_from_print) << "\n";
      os << "  - printed but not admissible: " << list(c.not_admissible) << "\n";
    }
  }
  if (!t.extra_rows.empty()) {
    os << "\n## Values at the unprinted candidates\n\n";
    for (const auto& e : t.extra_rows) os << "- " << e << "\n";
  }
  os << "\nSummary: " << cells << " cells, " << t.mismatch_count() << " printed-value mismatch"
     << (t.mismatch_count() == 1 ? "" : "es") << "\n";
  return os.str();
}

}  // namespace k3wall::cli
