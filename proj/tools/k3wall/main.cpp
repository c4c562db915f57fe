/* SPDX-License-Identifier: Apache-2.0
 *
 * k3wall -- command-line front end.
 *
 *   k3wall verify --p P [--smax N] [--budget-sec S] [--report out.json] [--format json|md]
 *   k3wall verify-range --from A --to B
 *   k3wall tables --p P
 *   k3wall roots --p P --smax N
 *   k3wall figure --p P --kind holes|grey|triangle --out f.svg
 *
 * Exit codes: 0 pass, 1 fail, 2 resource-capped, 64 usage error, 74 I/O error.
 */
#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "figure.hpp"
#include "report.hpp"

namespace {

using namespace k3wall;
using namespace k3wall::cli;

constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  out.close();
  if (!out) throw IoError("cannot write " + path);
}

const CLI::Validator kPrime =
    CLI::Validator(
        [](std::string& s) -> std::string {
          try {
            std::size_t pos = 0;
            const long long v = std::stoll(s, &pos);
            if (pos != s.size()) return "not an integer: " + s;
            if (v < 13 || !is_prime(v)) return "p must be a prime >= 13, got " + s;
          } catch (const std::exception&) {
            return "not an integer: " + s;
          }
          return {};
        },
        "PRIME>=13");

std::string status_word(int code) { return code == 0 ? "PASS" : code == 2 ? "CAPPED" : "FAIL"; }

/* ------------------------------------------------------------------------- */

struct VerifyArgs {
  std::int64_t p = 0;
  VerifyOptions opt;
  std::string report, format = "md", figure_dir;
  bool timing = false;
};

int cmd_verify(const VerifyArgs& a) {
  const Surface X(a.p);
  Report r = run_verify(X, a.opt);
  if (!a.figure_dir.empty()) {
    std::filesystem::create_directories(a.figure_dir);
    for (auto [kind, name] : {std::pair{FigureKind::Triangle, "triangle"}, std::pair{FigureKind::Grey, "grey"},
                              std::pair{FigureKind::Holes, "holes"}}) {
      if (kind == FigureKind::Triangle && a.opt.budget_sec <= 0) continue;
      FigureOptions fo;
      fo.budget_sec = a.opt.budget_sec;
      const std::string path =
          (std::filesystem::path(a.figure_dir) / ("p" + std::to_string(a.p) + "_" + name + ".svg")).string();
      write_file(path, render_figure(X, kind, fo));
      r.figures.push_back(path);
    }
  }
  const json j = to_json(r, a.timing);
  if (!a.report.empty()) write_file(a.report, j.dump(2) + "\n");
  if (a.format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << to_markdown(r, a.timing);
  return exit_code(r);
}

struct RangeArgs {
  std::int64_t from = 13, to = 13;
  VerifyOptions opt;
  unsigned jobs = 0;
  std::string report;
  bool timing = false;
};

int cmd_verify_range(const RangeArgs& a) {
  std::vector<std::int64_t> primes;
  for (std::int64_t p = std::max<std::int64_t>(a.from, 13); p <= a.to; ++p)
    if (is_prime(p)) primes.push_back(p);
  std::vector<Report> reports(primes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) reports[i] = run_verify(Surface(primes[i]), a.opt);
  };
  unsigned n = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(primes.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  int worst = 0;
  std::size_t pass = 0, fail = 0, capped = 0;
  json all = json::array();
  for (const auto& r : reports) {
    const int code = exit_code(r);
    if (code == 1) worst = 1, ++fail;
    else if (code == 2) worst = worst == 1 ? 1 : 2, ++capped;
    else ++pass;
    std::string route = "?";
    for (const auto& c : r.checks)
      if (c.name == "polygon" && c.numbers.contains("route")) route = c.numbers["route"].get<std::string>();
    std::cout << "p=" << r.p << " m=" << r.m << " " << status_word(code) << " polygon: " << route;
    for (const auto& c : r.checks)
      if (!passes(c.status)) std::cout << " [" << c.name << ": " << to_string(c.status) << "]";
    std::cout << "\n";
    all.push_back(to_json(r, a.timing));
  }
  std::cout << "primes: " << reports.size() << "  pass: " << pass << "  fail: " << fail << "  capped: " << capped
            << "\n";
  if (!a.report.empty()) write_file(a.report, all.dump(2) + "\n");
  return worst;
}

int cmd_tables(std::int64_t p, const std::string& format, const std::string& out, bool strict) {
  if (!has_tables(p)) {
    std::cerr << "usage error: tables exist for p = 17 and p = 23 only\n";
    return kExitUsage;
  }
  const TableSet t = reproduce_tables(Surface(p));
  const std::string text = format == "json" ? tables_json(t).dump(2) + "\n" : tables_markdown(t);
  if (out.empty()) std::cout << text;
  else write_file(out, text);
  return strict && !t.all_cells_match() ? 1 : 0;
}

int cmd_roots(std::int64_t p, std::int64_t s_max, const std::string& format) {
  const Surface X(p);
  const RootScan scan = enumerate_roots_in_region(grey_region(X), X, s_max);
  bool ok = scan.roots.empty();
  for (const auto& s : scan.certificates) ok = ok && s.status == ProofStatus::Proved;
  if (format == "json") {
    json j = roots_json(scan);
    j["summary"] = roots_summary(scan);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << roots_summary(scan) << "\n";
    for (const auto& s : scan.certificates)
      std::cout << "  " << s.name << ": " << to_string(s.status) << " -- " << s.argument << "\n";
    std::cout << "searched roots with 1 <= s <= " << s_max << " (" << scan.candidates_checked
              << " candidates); absence beyond this bound is not established by the search\n";
  }
  return ok ? 0 : 1;
}

int cmd_figure(std::int64_t p, const std::string& kind, const std::string& out, std::int64_t hole_smax) {
  FigureOptions fo;
  fo.hole_smax = hole_smax;
  const FigureKind k = kind == "triangle" ? FigureKind::Triangle : kind == "grey" ? FigureKind::Grey : FigureKind::Holes;
  write_file(out, render_figure(Surface(p), k, fo));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k3wall: exact verification of the wall and h0 bounds for K3 surfaces of Picard rank one"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run every check for one prime");
  verify->add_option("--p", va.p, "prime p >= 13 (H^2 = 2p)")->required()->check(kPrime);
  verify->add_option("--smax", va.opt.s_max, "bound on s for the root search")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--budget-sec", va.opt.budget_sec, "time budget of the chain search")->capture_default_str();
  verify->add_option("--phase2-cap", va.opt.phase2_cap, "cap on the listed long chains")->capture_default_str();
  verify->add_flag("--search", va.opt.force_search, "use the chain search even where the large-p certificate applies");
  verify->add_option("--report", va.report, "write the JSON report to this file");
  verify->add_option("--format", va.format, "stdout format")->check(CLI::IsMember({"json", "md"}))->capture_default_str();
  verify->add_option("--figures", va.figure_dir, "also write the SVG figures into this directory");
  verify->add_flag("--timing", va.timing, "add wall-clock timings (segregated from the checks)");

  RangeArgs ra;
  auto* range = app.add_subcommand("verify-range", "verify every prime in [from, to]");
  range->add_option("--from", ra.from, "first candidate")->required();
  range->add_option("--to", ra.to, "last candidate")->required();
  range->add_option("--smax", ra.opt.s_max, "bound on s for the root search")->capture_default_str()->check(CLI::PositiveNumber);
  range->add_option("--budget-sec", ra.opt.budget_sec, "time budget of each chain search")->capture_default_str();
  range->add_option("--jobs", ra.jobs, "worker threads (default: hardware concurrency)");
  range->add_option("--report", ra.report, "write the JSON reports (an array) to this file");
  range->add_flag("--timing", ra.timing, "add wall-clock timings to the JSON reports");

  std::int64_t tp = 0;
  std::string tformat = "md", tout;
  bool strict = false;
  auto* tables = app.add_subcommand("tables", "recompute the case tables and diff them against the printed values");
  tables->add_option("--p", tp, "17 or 23")->required()->check(kPrime);
  tables->add_option("--format", tformat, "output format")->check(CLI::IsMember({"json", "md"}))->capture_default_str();
  tables->add_option("--out", tout, "write to this file instead of stdout");
  tables->add_flag("--strict", strict, "exit 1 when a printed value differs from the recomputation");

  std::int64_t rp = 0, rsmax = 100000;
  std::string rformat = "text";
  auto* roots = app.add_subcommand("roots", "search the grey region for projections of roots");
  roots->add_option("--p", rp, "prime p >= 13")->required()->check(kPrime);
  roots->add_option("--smax", rsmax, "bound on s")->capture_default_str()->check(CLI::PositiveNumber);
  roots->add_option("--format", rformat, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::int64_t fp = 0, hole_smax = 40;
  std::string kind, fout;
  auto* figure = app.add_subcommand("figure", "write an SVG figure");
  figure->add_option("--p", fp, "prime p >= 13")->required()->check(kPrime);
  figure->add_option("--kind", kind, "figure kind")->required()->check(CLI::IsMember({"holes", "grey", "triangle"}));
  figure->add_option("--out", fout, "output SVG file")->required();
  figure->add_option("--hole-smax", hole_smax, "draw the holes of roots with s up to this bound")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(va);
    if (*range) return cmd_verify_range(ra);
    if (*tables) return cmd_tables(tp, tformat, tout, strict);
    if (*roots) return cmd_roots(rp, rsmax, rformat);
    if (*figure) return cmd_figure(fp, kind, fout, hole_smax);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
