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


// Seeded set generators, the claim registry, exponent fitting and suite
// orchestration.

#ifndef SUMPROD_HARNESS_HPP_
#define SUMPROD_HARNESS_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sumprod/groups.hpp"
#include "sumprod/io.hpp"
#include "sumprod/setalgebra.hpp"

namespace sumprod {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Randomness

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t fnv1a(std::string_view text) noexcept;

// Counter-based stream: output i is splitmix64(key + i * golden). The key is
// derived from (seed, label, index) so every trial owns an independent
// stream regardless of which thread runs it.
class TrialRng {
 public:
  using result_type = std::uint64_t;

  TrialRng(std::uint64_t seed, std::string_view label, std::uint64_t index) noexcept;

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() noexcept;

  // Uniform on [0, n). Requires n > 0.
  std::uint64_t below(std::uint64_t n) noexcept;
  // Uniform on [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// ---------------------------------------------------------------------------
// Generators

enum class Family {
  kRandom,
  kInterval,
  kGeometricProgression,
  kMultiplicativeSubgroup,
  kSubgroupCoset,
  kBorelConcentrated,
  kGrid,
  kStabilizerConcentrated,
};

enum class Target { kScalar, kSl2, kAff, kPoints };

std::string to_string(Family f);
Family parse_family(std::string_view name);

struct GeneratorSpec {
  Family family = Family::kRandom;
  Target target = Target::kScalar;
  std::size_t size = 0;
  Field field;
  std::uint64_t seed = 0;
  bool symmetric = false;         // group targets only
  bool include_identity = false;  // group targets only
  // start, ratio, shift, coset, extra, x, rows, cols, range
  std::map<std::string, std::int64_t> params;
};

struct GeneratedSet {
  AnySet set;
  bool truncated = false;  // the requested size was not reachable exactly
};

// Throws Error(kInfeasibleSize) when the family cannot produce the size,
// Error(kBadArguments) for a family/target pair that does not exist.
GeneratedSet generate_set(GeneratorSpec const& spec);

// Building blocks used by the claims; each draws from the supplied stream.
ScalarSet random_scalar_set(TrialRng& rng, Field const& field, std::size_t n, std::int64_t range = 0);
Sl2Element random_sl2(TrialRng& rng, PrimeField const& field);
Sl2Set random_sl2_set(TrialRng& rng, PrimeField const& field, std::size_t n);
AffElement random_aff(TrialRng& rng, PrimeField const& field);
AffSet random_aff_set(TrialRng& rng, PrimeField const& field, std::size_t n);
PointSet random_point_set(TrialRng& rng, PrimeField const& field, std::size_t n);
LineSet random_line_set(TrialRng& rng, PrimeField const& field, std::size_t n);
ScalarSet multiplicative_subgroup(PrimeField const& field, std::size_t order);

// Sample with draw() until the symmetrization reaches n, then keep inverse
// pairs in ascending order until exactly n elements remain. Sets truncated
// when parity makes n unreachable.
template <class E, class Draw>
ElementSet<E> random_symmetric(Draw draw, std::size_t n, bool include_identity, std::size_t order,
                               bool* truncated = nullptr);

// ---------------------------------------------------------------------------
// Reports

enum class ClaimMode { kExactConstant, kScalingReport };
std::string to_string(ClaimMode m);

struct ScanRow {
  std::uint64_t p = 0;
  std::size_t size = 0;
  std::string lhs;
  std::string rhs;
  std::string ratio;
  double fit_x = 0;  // abscissa used by the exponent fit
  double fit_y = 0;
};

struct ClaimReport {
  std::string claim_id;
  std::string anchor;
  ClaimMode mode = ClaimMode::kExactConstant;
  std::uint64_t p = 0;  // 0 for the rationals
  Json params = Json::object();
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  std::string witness;
  std::string lhs;
  std::string rhs;
  std::string ratio;
  std::optional<double> exponent;
  std::optional<double> residual;
  std::vector<ScanRow> rows;
};

Json to_json(ClaimReport const& r);
ClaimReport claim_report_from_json(Json const& j);

enum class ReportFormat { kJson, kCsv };

// JSON: an array of reports. CSV: the scan rows of every report under the
// header "p,size,lhs,rhs,ratio".
std::string emit_report(std::vector<ClaimReport> const& reports, ReportFormat format);

std::string mpz_string(mpz_class const& x);
// Exact value as "n" or "n/d".
std::string mpq_string(mpq_class x);
// floor(x * 10^digits) rendered with a decimal point.
std::string decimal_string(mpq_class const& x, unsigned digits = 6);
// Shortest round-trip text of a double.
std::string double_string(double x);

// ---------------------------------------------------------------------------
// Fitting

struct ExponentFit {
  double slope = 0;
  double intercept = 0;
  double max_residual = 0;
};

// Least squares on (log x, log y). Throws Error(kDegenerateSeries) for fewer
// than 3 points, a non-positive value, or constant x.
ExponentFit fit_exponent(std::vector<std::pair<double, double>> const& series);

// ---------------------------------------------------------------------------
// Claims

struct Caps {
  std::size_t group = kDefaultGroupCap;
  std::uint64_t work = kDefaultWorkCap;
};

struct RunOptions {
  std::uint64_t seed = 42;
  std::size_t threads = 1;
  std::optional<std::vector<std::uint64_t>> p_list;  // overrides the claim default
  std::optional<std::uint64_t> trials;              // overrides the claim default
  Caps caps;
};

struct ClaimInfo {
  std::string id;
  std::string anchor;  // the quoted statement under test
  ClaimMode mode;
  std::vector<std::uint64_t> default_p;
  std::uint64_t default_trials;
  std::string grid;  // human description of the parameter grid
  std::function<std::vector<ClaimReport>(ClaimInfo const&, RunOptions const&)> run;
};

std::vector<ClaimInfo> const& claim_registry();
ClaimInfo const* find_claim(std::string_view id);

// One report per field in the claim's p list. Throws Error(kUnknownClaim).
std::vector<ClaimReport> run_claim(std::string_view id, RunOptions const& options);

// Suites: "core" (every ExactConstant claim), "scan" (every ScalingReport
// claim), "all", or "none".
std::vector<std::string> suite_claims(std::string_view suite);

struct SuiteConfig {
  std::string suite;  // may be empty
  std::vector<std::string> claims;
  RunOptions options;
};

// Throws Error(kConfig) for malformed documents or unknown claims.
SuiteConfig parse_suite_config(Json const& doc);
Json to_json(SuiteConfig const& config);

struct SuiteReport {
  std::vector<ClaimReport> reports;
  std::uint64_t violations = 0;
};

SuiteReport run_suite(SuiteConfig const& config);

// Runs fn(trial) for trial in [0, n) on `threads` workers in fixed chunks and
// stops after the first chunk in which stop(result) holds for some trial.
// Results come back in trial order, independent of the thread count.
template <class R>
std::vector<R> run_trials(std::uint64_t n, std::size_t threads, std::function<R(std::uint64_t)> const& fn,
                          std::function<bool(R const&)> const& stop);

}  // namespace sumprod

#include "sumprod/harness_impl.hpp"

#endif  // SUMPROD_HARNESS_HPP_
