// Copyright 2026 The sumprod Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Acceptance gate. One PASS/FAIL line per criterion; exit status is the
// number of failures. Every tolerance and limit lives in this file.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "sumprod/error.hpp"
#include "sumprod/harness.hpp"

namespace sumprod {
namespace {

using Primes = std::vector<std::uint64_t>;

constexpr std::uint64_t kSeed = 42;

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, std::string const& what) {
    if (cond) return;
    ok = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

RunOptions options(Primes p, std::optional<std::uint64_t> trials) {
  RunOptions o;
  o.seed = kSeed;
  o.p_list = std::move(p);
  o.trials = trials;
  return o;
}

std::uint64_t tally(ClaimReport const& r, std::string const& key) {
  if (!r.params.contains("tally") || !r.params["tally"].contains(key)) return 0;
  return r.params["tally"][key].get<std::uint64_t>();
}

// Runs the claim and demands zero violations, no skipped field, and (when
// given) the exact trial count per field.
std::vector<ClaimReport> exact(Verdict& v, std::string const& id, Primes p, std::optional<std::uint64_t> trials,
                               std::uint64_t* total = nullptr) {
  std::vector<ClaimReport> reports = run_claim(id, options(p, trials));
  v.require(reports.size() == p.size(), id + ": expected one report per field");
  for (ClaimReport const& r : reports) {
    std::string const where = id + " p=" + std::to_string(r.p);
    v.require(r.violations == 0, where + ": " + std::to_string(r.violations) + " violations, first " + r.witness);
    v.require(!r.params.contains("skipped"), where + ": skipped");
    v.require(tally(r, "no_sample") == 0, where + ": trials without a sample");
    if (trials) v.require(r.trials == *trials, where + ": ran " + std::to_string(r.trials) + " trials");
    if (total) *total += r.trials;
  }
  return reports;
}

std::string count_of(std::uint64_t n, char const* what) { return std::to_string(n) + " " + what; }

bool well_formed_csv(std::string const& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "p,size,lhs,rhs,ratio") return false;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    if (cells.size() != 5) return false;
    for (std::string const& c : cells) {
      if (c.empty()) return false;
    }
    if (cells[0].find_first_not_of("0123456789") != std::string::npos) return false;
    if (cells[1].find_first_not_of("0123456789") != std::string::npos) return false;
    ++rows;
  }
  return rows > 0;
}

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<Verdict()> check;
};

std::vector<Criterion> criteria() {
  return {
      {1, "direction bound", 60,
       [] {
         Verdict v;
         // Non-collinear triples in F3^2: C(9,3) minus the 12 lines.
         std::uint64_t n = 0;
         auto const small = exact(v, "szonyi", {3}, std::nullopt, &n);
         v.require(small.front().trials == 84 - 12, "exhaustive F3 count");
         exact(v, "szonyi", {5, 7, 11, 13}, 10000, &n);
         if (v.ok) v.detail = count_of(n, "sets");
         return v;
       }},
      {2, "incidence bound", 30,
       [] {
         Verdict v;
         std::uint64_t n = 0;
         exact(v, "vinh", {5, 7, 11}, 1000, &n);
         if (v.ok) v.detail = count_of(n, "pairs");
         return v;
       }},
      {3, "rich-line bound", 30,
       [] {
         Verdict v;
         std::uint64_t n = 0;
         auto const r = exact(v, "alon-beck", {5, 7, 11}, 200, &n);
         for (ClaimReport const& x : r) v.require(x.params.value("eps", std::string()) == "1/2", "epsilon");
         if (v.ok) v.detail = count_of(n, "point sets");
         return v;
       }},
      {4, "power-set growth", 60,
       [] {
         Verdict v;
         auto const r = exact(v, "ruzsa", {5}, 100);
         v.require(r.front().params["k"] == Json::array({4, 5, 6}), "k range");
         if (v.ok) v.detail = count_of(100, "sets, k = 4..6");
         return v;
       }},
      {5, "pigeonhole", 30,
       [] {
         Verdict v;
         for (auto const& [id, p] : {std::pair{"cs-inequality-sl2", 5ul}, std::pair{"cs-inequality-aff", 7ul}}) {
           auto const r = exact(v, id, {p}, 500);
           v.require(tally(r.front(), "witness_produced") == 500, std::string(id) + ": missing witness");
         }
         if (v.ok) v.detail = count_of(1000, "pairs, witness every time");
         return v;
       }},
      {6, "energy decomposition", 120,
       [] {
         Verdict v;
         exact(v, "energy-decomposition", {5}, 50);
         exact(v, "frobenius", {5}, 100);
         if (v.ok) v.detail = "50 sets, 100 function pairs";
         return v;
       }},
      {7, "large sets fill the group", 600,
       [] {
         Verdict v;
         auto const r = exact(v, "a3-equals-g", {11}, 20);
         v.require(r.front().params.value("threshold", 0) == 1189, "threshold");
         v.require(tally(r.front(), "cube_is_group") == 20, "A^3 != G");
         if (v.ok) v.detail = "20 sets above 1189";
         return v;
       }},
      {8, "injectivity criterion", 60,
       [] {
         Verdict v;
         auto const r = exact(v, "helfgott-criterion", {7}, 1000);
         std::uint64_t const inj = tally(r.front(), "injective"), col = tally(r.front(), "collision");
         v.require(inj + col == 1000, "tally");
         v.require(inj > 0 && col > 0, "both outcomes exercised");
         if (v.ok) v.detail = std::to_string(inj) + " injective, " + std::to_string(col) + " collisions";
         return v;
       }},
      {9, "triple intersections", 600,
       [] {
         Verdict v;
         std::uint64_t n = 0;
         auto const r = exact(v, "triple-intersection", {5, 7}, std::nullopt, &n);
         v.require(r[0].params["taus"] == Json::array({1, 4}), "p=5 traces");
         v.require(r[1].params["taus"] == Json::array({1, 3, 4, 6}), "p=7 traces");
         if (v.ok) v.detail = count_of(n, "pairs");
         return v;
       }},
      {10, "affine structure", 600,
       [] {
         Verdict v;
         std::uint64_t n = 0;
         exact(v, "affine-small", {7, 11, 13, 31}, 1000, &n);
         exact(v, "affine-large", {11}, 100, &n);
         if (v.ok) v.detail = count_of(n, "sets");
         return v;
       }},
      {11, "grid energy identity", 300,
       [] {
         Verdict v;
         exact(v, "grid-energy", {13, 0}, 100);
         if (v.ok) v.detail = "100 grids over F13 and Q";
         return v;
       }},
      {12, "scaling scans", 900,
       [] {
         Verdict v;
         SuiteConfig cfg;
         cfg.suite = "scan";
         cfg.options.seed = kSeed;
         SuiteReport const a = run_suite(cfg), b = run_suite(cfg);
         std::string const csv = emit_report(a.reports, ReportFormat::kCsv);
         v.require(!a.reports.empty(), "no scans");
         v.require(well_formed_csv(csv), "malformed CSV");
         for (ClaimReport const& r : a.reports) {
           v.require(r.exponent && std::isfinite(*r.exponent), r.claim_id + ": no finite exponent");
         }
         v.require(emit_report(b.reports, ReportFormat::kJson) == emit_report(a.reports, ReportFormat::kJson),
                   "reports differ between runs");
         v.require(emit_report(b.reports, ReportFormat::kCsv) == csv, "CSV differs between runs");
         if (v.ok) v.detail = count_of(a.reports.size(), "scans");
         return v;
       }},
      {13, "Cayley search", 30,
       [] {
         Verdict v;
         exact(v, "cayley-bfs", {3, 5}, std::nullopt);
         if (v.ok) v.detail = "both searches agree, balls nested";
         return v;
       }},
      {14, "determinism", 600,
       [] {
         Verdict v;
         auto run = [](std::size_t threads) {
           SuiteConfig cfg;
           cfg.suite = "core";
           cfg.options.seed = kSeed;
           cfg.options.threads = threads;
           return emit_report(run_suite(cfg).reports, ReportFormat::kJson);
         };
         std::string const one = run(1);
         v.require(run(1) == one, "repeat at 1 thread differs");
         v.require(run(8) == one, "8 threads differ from 1");
         v.require(run(8) == one, "repeat at 8 threads differs");
         if (v.ok) v.detail = std::to_string(one.size()) + " bytes, identical";
         return v;
       }},
  };
}

}  // namespace
}  // namespace sumprod

int main() {
  int failures = 0;
  for (sumprod::Criterion const& c : sumprod::criteria()) {
    auto const start = std::chrono::steady_clock::now();
    sumprod::Verdict v;
    try {
      v = c.check();
    } catch (std::exception const& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) v.require(false, "over the time limit");
    failures += !v.ok;
    std::printf("%s %2d %s: %s (%.1f s, limit %.0f s)\n", v.ok ? "PASS" : "FAIL", c.number, c.name.c_str(),
                v.detail.c_str(), secs, c.limit_seconds);
    std::fflush(stdout);
  }
  return failures;
}
