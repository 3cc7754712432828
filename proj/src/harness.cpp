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


#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_set>

#include "sumprod/error.hpp"
#include "sumprod/growth.hpp"
#include "sumprod/harness.hpp"

namespace sumprod {

// ---------------------------------------------------------------------------
// Randomness

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
}  // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  std::uint64_t z = x + kGolden;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view text) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

TrialRng::TrialRng(std::uint64_t seed, std::string_view label, std::uint64_t index) noexcept
    : key_(splitmix64(splitmix64(seed) ^ splitmix64(fnv1a(label)) ^ splitmix64(index * kGolden + 1))) {}

TrialRng::result_type TrialRng::operator()() noexcept { return splitmix64(key_ + (counter_++) * kGolden); }

std::uint64_t TrialRng::below(std::uint64_t n) noexcept {
  std::uint64_t const threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t const r = (*this)();
    if (r >= threshold) return r % n;
  }
}

std::int64_t TrialRng::between(std::int64_t lo, std::int64_t hi) noexcept {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

// ---------------------------------------------------------------------------
// Generators

std::string to_string(Family f) {
  switch (f) {
    case Family::kRandom: return "Random";
    case Family::kInterval: return "Interval";
    case Family::kGeometricProgression: return "GeometricProgression";
    case Family::kMultiplicativeSubgroup: return "MultiplicativeSubgroup";
    case Family::kSubgroupCoset: return "SubgroupCoset";
    case Family::kBorelConcentrated: return "BorelConcentrated";
    case Family::kGrid: return "Grid";
    case Family::kStabilizerConcentrated: return "StabilizerConcentrated";
  }
  return "Random";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::kRandom, Family::kInterval, Family::kGeometricProgression, Family::kMultiplicativeSubgroup,
                   Family::kSubgroupCoset, Family::kBorelConcentrated, Family::kGrid,
                   Family::kStabilizerConcentrated}) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorCode::kBadArguments, "unknown family '" + std::string(name) + "'");
}

namespace {

void infeasible(std::string const& what) { throw Error(ErrorCode::kInfeasibleSize, what); }

template <class T, class Draw>
std::vector<T> distinct_draws(Draw draw, std::size_t n, std::size_t universe) {
  if (n > universe) infeasible("requested " + std::to_string(n) + " of " + std::to_string(universe));
  std::unordered_set<T> seen;
  std::vector<T> out;
  out.reserve(n);
  while (out.size() < n) {
    T x = draw();
    if (seen.insert(x).second) out.push_back(std::move(x));
  }
  return out;
}

Scalar random_residue(TrialRng& rng, PrimeField const& f, bool nonzero) {
  std::uint64_t const v = nonzero ? 1 + rng.below(f.p() - 1) : rng.below(f.p());
  return Scalar::residue(static_cast<std::int64_t>(v), f);
}

Sl2Element random_borel(TrialRng& rng, PrimeField const& f) {
  std::uint64_t const a = 1 + rng.below(f.p() - 1);
  return Sl2Element(f, static_cast<std::int64_t>(a), static_cast<std::int64_t>(rng.below(f.p())), 0,
                    static_cast<std::int64_t>(f.inv(a)));
}

Sl2Element random_outside_borel(TrialRng& rng, PrimeField const& f) {
  for (;;) {
    Sl2Element g = random_sl2(rng, f);
    if (g.c() != 0) return g;
  }
}

AffElement random_stabilizer(TrialRng& rng, PrimeField const& f, Scalar const& x) {
  Scalar const a = random_residue(rng, f, true);
  return AffElement(a, x - a * x);
}

std::int64_t param(GeneratorSpec const& spec, std::string const& key, std::int64_t fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

ScalarSet checked_scalars(std::vector<Scalar> values, std::size_t n) {
  ScalarSet s(std::move(values));
  if (s.size() != n) infeasible("family repeats values before reaching size " + std::to_string(n));
  return s;
}

// Base elements from `base` plus `extra` elements from `outside`, keeping
// symmetry when requested.
template <class E, class Base, class Outside>
ElementSet<E> concentrated(Base base, Outside outside, std::size_t n, std::size_t extra, bool symmetric,
                           bool include_identity, std::size_t order, bool* truncated) {
  if (n < 1) return {};
  if (!symmetric) {
    if (extra >= n) infeasible("extra elements exceed the size");
    std::vector<E> v = distinct_draws<E>(base, n - extra, order);
    std::unordered_set<E> seen(v.begin(), v.end());
    while (v.size() < n) {
      E g = outside();
      if (seen.insert(g).second) v.push_back(std::move(g));
    }
    return ElementSet<E>(std::move(v));
  }
  if (2 * extra >= n) infeasible("extra elements exceed the size");
  ElementSet<E> core = random_symmetric<E>(base, n - 2 * extra, include_identity, order, truncated);
  std::vector<E> v(core.begin(), core.end());
  std::unordered_set<E> seen(v.begin(), v.end());
  while (v.size() + 1 < n && v.size() < core.size() + 2 * extra) {
    E g = outside();
    E gi = group_inv(g);
    if (seen.count(g) || seen.count(gi) || g == gi) continue;
    seen.insert(g);
    seen.insert(gi);
    v.push_back(std::move(g));
    v.push_back(std::move(gi));
  }
  if (truncated) *truncated = v.size() < n;
  return ElementSet<E>(std::move(v));
}

}  // namespace

ScalarSet random_scalar_set(TrialRng& rng, Field const& field, std::size_t n, std::int64_t range) {
  if (field.is_prime()) {
    PrimeField const f = field.prime_field();
    return ScalarSet(distinct_draws<Scalar>([&] { return random_residue(rng, f, false); }, n, f.p()));
  }
  if (range <= 0) range = std::max<std::int64_t>(10, 10 * static_cast<std::int64_t>(n));
  return ScalarSet(distinct_draws<Scalar>([&] { return Scalar::from_int(rng.between(-range, range), field); }, n,
                                          static_cast<std::size_t>(2 * range + 1)));
}

Sl2Element random_sl2(TrialRng& rng, PrimeField const& f) {
  std::uint64_t const p = f.p();
  std::uint64_t u = rng.below(p * (p * p - 1));
  if (u < (p - 1) * p * p) {
    std::uint64_t const a = 1 + u / (p * p), b = (u / p) % p, c = u % p;
    std::uint64_t const d = f.mul(f.add(1, f.mul(b, c)), f.inv(a));
    return Sl2Element(f, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), static_cast<std::int64_t>(c),
                      static_cast<std::int64_t>(d));
  }
  u -= (p - 1) * p * p;
  std::uint64_t const b = 1 + u / p, d = u % p;
  std::uint64_t const c = f.neg(f.inv(b));
  return Sl2Element(f, 0, static_cast<std::int64_t>(b), static_cast<std::int64_t>(c), static_cast<std::int64_t>(d));
}

Sl2Set random_sl2_set(TrialRng& rng, PrimeField const& f, std::size_t n) {
  std::size_t const order = static_cast<std::size_t>(f.p() * (f.p() * f.p() - 1));
  return Sl2Set(distinct_draws<Sl2Element>([&] { return random_sl2(rng, f); }, n, order));
}

AffElement random_aff(TrialRng& rng, PrimeField const& f) {
  return AffElement(random_residue(rng, f, true), random_residue(rng, f, false));
}

AffSet random_aff_set(TrialRng& rng, PrimeField const& f, std::size_t n) {
  return AffSet(distinct_draws<AffElement>([&] { return random_aff(rng, f); }, n, f.p() * (f.p() - 1)));
}

PointSet random_point_set(TrialRng& rng, PrimeField const& f, std::size_t n) {
  return PointSet(distinct_draws<PlanePoint>(
      [&] { return PlanePoint(random_residue(rng, f, false), random_residue(rng, f, false)); }, n, f.p() * f.p()));
}

LineSet random_line_set(TrialRng& rng, PrimeField const& f, std::size_t n) {
  std::uint64_t const p = f.p();
  auto draw = [&] {
    std::uint64_t const u = rng.below(p * p + p);
    if (u >= p * p) return PlaneLine::vertical(Scalar::residue(static_cast<std::int64_t>(u - p * p), f));
    return PlaneLine::non_vertical(Scalar::residue(static_cast<std::int64_t>(u / p), f),
                                   Scalar::residue(static_cast<std::int64_t>(u % p), f));
  };
  return LineSet(distinct_draws<PlaneLine>(draw, n, p * p + p));
}

ScalarSet multiplicative_subgroup(PrimeField const& f, std::size_t order) {
  std::uint64_t const p = f.p();
  if (order == 0 || (p - 1) % order != 0) {
    infeasible("no subgroup of order " + std::to_string(order) + " in F" + std::to_string(p) + "*");
  }
  std::vector<std::uint64_t> primes;
  for (std::uint64_t m = p - 1, q = 2; m > 1; ++q) {
    if (q * q > m) q = m;
    if (m % q == 0) {
      primes.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  std::uint64_t g = 2;
  if (p == 3) g = 2;
  while (std::any_of(primes.begin(), primes.end(), [&](std::uint64_t q) { return f.pow(g, (p - 1) / q) == 1; })) ++g;
  std::uint64_t const h = f.pow(g, (p - 1) / order);
  std::vector<Scalar> out;
  std::uint64_t x = 1;
  for (std::size_t i = 0; i < order; ++i, x = f.mul(x, h)) out.push_back(Scalar::residue(static_cast<std::int64_t>(x), f));
  return ScalarSet(std::move(out));
}

GeneratedSet generate_set(GeneratorSpec const& spec) {
  TrialRng rng(spec.seed, "generate:" + to_string(spec.family), 0);
  GeneratedSet out;
  std::size_t const n = spec.size;
  Field const& field = spec.field;
  auto prime = [&]() {
    if (!field.is_prime()) throw Error(ErrorCode::kBadArguments, to_string(spec.family) + " needs a prime field");
    return field.prime_field();
  };
  auto unsupported = [&]() -> GeneratedSet {
    throw Error(ErrorCode::kBadArguments, "family " + to_string(spec.family) + " has no such target");
  };
  switch (spec.target) {
    case Target::kScalar: {
      auto start = Scalar::from_int(param(spec, "start", 1), field);
      switch (spec.family) {
        case Family::kRandom: out.set = random_scalar_set(rng, field, n, param(spec, "range", 0)); break;
        case Family::kInterval: {
          std::vector<Scalar> v;
          for (std::size_t i = 0; i < n; ++i) v.push_back(start + Scalar::from_int(static_cast<std::int64_t>(i), field));
          out.set = checked_scalars(std::move(v), n);
          break;
        }
        case Family::kGeometricProgression: {
          Scalar const shift = Scalar::from_int(param(spec, "shift", 0), field);
          Scalar const ratio = Scalar::from_int(param(spec, "ratio", 2), field);
          std::vector<Scalar> v;
          Scalar term = Scalar::from_int(1, field);
          for (std::size_t i = 0; i < n; ++i, term = term * ratio) v.push_back(shift + term);
          out.set = checked_scalars(std::move(v), n);
          break;
        }
        case Family::kMultiplicativeSubgroup: out.set = multiplicative_subgroup(prime(), n); break;
        case Family::kSubgroupCoset: {
          ScalarSet const g = multiplicative_subgroup(prime(), n);
          Scalar const xi = Scalar::from_int(param(spec, "coset", 2), field);
          if (xi.is_zero()) throw Error(ErrorCode::kBadArguments, "coset representative must be nonzero");
          std::vector<Scalar> v;
          for (Scalar const& x : g) v.push_back(xi * x);
          out.set = ScalarSet(std::move(v));
          break;
        }
        default: return unsupported();
      }
      break;
    }
    case Target::kSl2: {
      PrimeField const f = prime();
      std::size_t const order = static_cast<std::size_t>(f.p() * (f.p() * f.p() - 1));
      auto draw = [&] { return random_sl2(rng, f); };
      switch (spec.family) {
        case Family::kRandom:
          out.set = spec.symmetric
                        ? random_symmetric<Sl2Element>(draw, n, spec.include_identity, order, &out.truncated)
                        : random_sl2_set(rng, f, n);
          break;
        case Family::kBorelConcentrated:
          out.set = concentrated<Sl2Element>([&] { return random_borel(rng, f); },
                                             [&] { return random_outside_borel(rng, f); }, n,
                                             static_cast<std::size_t>(param(spec, "extra", 1)), spec.symmetric,
                                             spec.include_identity, f.p() * (f.p() - 1), &out.truncated);
          break;
        default: return unsupported();
      }
      break;
    }
    case Target::kAff: {
      switch (spec.family) {
        case Family::kRandom: {
          PrimeField const f = prime();
          auto draw = [&] { return random_aff(rng, f); };
          out.set = spec.symmetric ? random_symmetric<AffElement>(draw, n, spec.include_identity,
                                                                  f.p() * (f.p() - 1), &out.truncated)
                                   : random_aff_set(rng, f, n);
          break;
        }
        case Family::kStabilizerConcentrated: {
          PrimeField const f = prime();
          Scalar const x = Scalar::from_int(param(spec, "x", 0), field);
          out.set = concentrated<AffElement>(
              [&] { return random_stabilizer(rng, f, x); },
              [&] {
                for (;;) {
                  AffElement g = random_aff(rng, f);
                  if (!(g.apply(x) == x)) return g;
                }
              },
              n, static_cast<std::size_t>(param(spec, "extra", 1)), spec.symmetric, spec.include_identity, f.p() - 1,
              &out.truncated);
          break;
        }
        case Family::kGrid: {
          std::size_t const rows = static_cast<std::size_t>(param(spec, "rows", 3));
          std::size_t const cols = static_cast<std::size_t>(param(spec, "cols", 3));
          std::vector<Scalar> cs;
          for (Scalar const& c : random_scalar_set(rng, field, rows + 1, param(spec, "range", 0))) {
            if (!c.is_zero() && cs.size() < rows) cs.push_back(c);
          }
          if (cs.size() < rows) infeasible("not enough nonzero slopes");
          ScalarSet const d = random_scalar_set(rng, field, cols, param(spec, "range", 0));
          out.set = grid_lines(ScalarSet(std::move(cs)), d,
                               param(spec, "scaled", 0) ? GridForm::kScaled : GridForm::kPlain);
          break;
        }
        default: return unsupported();
      }
      break;
    }
    case Target::kPoints: {
      switch (spec.family) {
        case Family::kRandom: out.set = random_point_set(rng, prime(), n); break;
        case Family::kGrid: {
          std::int64_t const rows = param(spec, "rows", 3), cols = param(spec, "cols", 3);
          std::vector<PlanePoint> v;
          for (std::int64_t i = 0; i < rows; ++i) {
            for (std::int64_t j = 0; j < cols; ++j) v.push_back(PlanePoint::from_ints(field, i, j));
          }
          PointSet s(std::move(v));
          if (s.size() != static_cast<std::size_t>(rows * cols)) infeasible("grid wraps around the field");
          out.set = std::move(s);
          break;
        }
        default: return unsupported();
      }
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

std::string to_string(ClaimMode m) { return m == ClaimMode::kExactConstant ? "ExactConstant" : "ScalingReport"; }

std::string mpz_string(mpz_class const& x) { return x.get_str(10); }

std::string mpq_string(mpq_class x) {
  x.canonicalize();
  if (x.get_den() == 1) return x.get_num().get_str(10);
  return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

std::string decimal_string(mpq_class const& x, unsigned digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class num = abs(x.get_num()) * scale;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
  std::string s = q.get_str(10);
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  return (sgn(x) < 0 ? "-" : "") + s;
}

std::string double_string(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, ptr) : "nan";
}

namespace {

Json row_json(ScanRow const& r) {
  Json j;
  j["p"] = r.p;
  j["size"] = r.size;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["ratio"] = r.ratio;
  j["fit_x"] = r.fit_x;
  j["fit_y"] = r.fit_y;
  return j;
}

}  // namespace

Json to_json(ClaimReport const& r) {
  Json j;
  j["claim_id"] = r.claim_id;
  j["anchor"] = r.anchor;
  j["mode"] = to_string(r.mode);
  j["p"] = r.p;
  j["params"] = r.params;
  j["trials"] = r.trials;
  j["violations"] = r.violations;
  j["witness"] = r.witness;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["ratio"] = r.ratio;
  j["exponent"] = r.exponent ? Json(*r.exponent) : Json(nullptr);
  j["residual"] = r.residual ? Json(*r.residual) : Json(nullptr);
  Json rows = Json::array();
  for (ScanRow const& row : r.rows) rows.push_back(row_json(row));
  j["rows"] = std::move(rows);
  return j;
}

ClaimReport claim_report_from_json(Json const& j) {
  try {
    ClaimReport r;
    r.claim_id = j.at("claim_id").get<std::string>();
    r.anchor = j.at("anchor").get<std::string>();
    std::string const mode = j.at("mode").get<std::string>();
    if (mode != "ExactConstant" && mode != "ScalingReport") throw Error(ErrorCode::kParse, "bad mode " + mode);
    r.mode = mode == "ExactConstant" ? ClaimMode::kExactConstant : ClaimMode::kScalingReport;
    r.p = j.at("p").get<std::uint64_t>();
    r.params = j.at("params");
    r.trials = j.at("trials").get<std::uint64_t>();
    r.violations = j.at("violations").get<std::uint64_t>();
    r.witness = j.at("witness").get<std::string>();
    r.lhs = j.at("lhs").get<std::string>();
    r.rhs = j.at("rhs").get<std::string>();
    r.ratio = j.at("ratio").get<std::string>();
    if (!j.at("exponent").is_null()) r.exponent = j.at("exponent").get<double>();
    if (!j.at("residual").is_null()) r.residual = j.at("residual").get<double>();
    for (Json const& row : j.at("rows")) {
      ScanRow s;
      s.p = row.at("p").get<std::uint64_t>();
      s.size = row.at("size").get<std::size_t>();
      s.lhs = row.at("lhs").get<std::string>();
      s.rhs = row.at("rhs").get<std::string>();
      s.ratio = row.at("ratio").get<std::string>();
      s.fit_x = row.at("fit_x").get<double>();
      s.fit_y = row.at("fit_y").get<double>();
      r.rows.push_back(std::move(s));
    }
    return r;
  } catch (Json::exception const& e) {
    throw Error(ErrorCode::kParse, std::string("malformed claim report: ") + e.what());
  }
}

std::string emit_report(std::vector<ClaimReport> const& reports, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    Json arr = Json::array();
    for (ClaimReport const& r : reports) arr.push_back(to_json(r));
    return arr.dump(2);
  }
  std::string out = "p,size,lhs,rhs,ratio\n";
  for (ClaimReport const& r : reports) {
    for (ScanRow const& row : r.rows) {
      out += std::to_string(row.p) + "," + std::to_string(row.size) + "," + row.lhs + "," + row.rhs + "," +
             row.ratio + "\n";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fitting

ExponentFit fit_exponent(std::vector<std::pair<double, double>> const& series) {
  if (series.size() < 3) throw Error(ErrorCode::kDegenerateSeries, "need at least 3 points");
  std::vector<double> xs, ys;
  for (auto [x, y] : series) {
    if (!(x > 0) || !(y > 0) || !std::isfinite(x) || !std::isfinite(y)) {
      throw Error(ErrorCode::kDegenerateSeries, "non-positive value in series");
    }
    xs.push_back(std::log(x));
    ys.push_back(std::log(y));
  }
  double const n = static_cast<double>(xs.size());
  double const mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double const my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx <= 1e-12 * n) throw Error(ErrorCode::kDegenerateSeries, "abscissae are constant");
  ExponentFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    fit.max_residual = std::max(fit.max_residual, std::abs(ys[i] - (fit.intercept + fit.slope * xs[i])));
  }
  return fit;
}

// ---------------------------------------------------------------------------
// Suites

ClaimInfo const* find_claim(std::string_view id) {
  for (ClaimInfo const& c : claim_registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::vector<ClaimReport> run_claim(std::string_view id, RunOptions const& options) {
  ClaimInfo const* info = find_claim(id);
  if (!info) throw Error(ErrorCode::kUnknownClaim, "unknown claim '" + std::string(id) + "'");
  return info->run(*info, options);
}

std::vector<std::string> suite_claims(std::string_view suite) {
  std::vector<std::string> out;
  if (suite.empty() || suite == "none") return out;
  bool const core = suite == "core", scan = suite == "scan", all = suite == "all";
  if (!core && !scan && !all) throw Error(ErrorCode::kConfig, "unknown suite '" + std::string(suite) + "'");
  for (ClaimInfo const& c : claim_registry()) {
    bool const exact = c.mode == ClaimMode::kExactConstant;
    if (all || (core && exact) || (scan && !exact)) out.push_back(c.id);
  }
  return out;
}

SuiteConfig parse_suite_config(Json const& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::kConfig, "config must be a JSON object");
  static std::set<std::string> const known = {"suite", "claims", "p_list", "trials", "seed", "caps", "threads"};
  SuiteConfig cfg;
  try {
    for (auto const& [key, value] : doc.items()) {
      if (!known.count(key)) throw Error(ErrorCode::kConfig, "unknown config key '" + key + "'");
    }
    if (doc.contains("suite")) cfg.suite = doc["suite"].get<std::string>();
    if (doc.contains("claims")) cfg.claims = doc["claims"].get<std::vector<std::string>>();
    if (doc.contains("p_list")) {
      cfg.options.p_list = doc["p_list"].get<std::vector<std::uint64_t>>();
      for (std::uint64_t p : *cfg.options.p_list) {
        if (p != 0 && (p < 3 || !is_prime(p))) throw Error(ErrorCode::kConfig, std::to_string(p) + " is not an odd prime");
      }
    }
    if (doc.contains("trials")) cfg.options.trials = doc["trials"].get<std::uint64_t>();
    if (doc.contains("seed")) cfg.options.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("threads")) cfg.options.threads = doc["threads"].get<std::size_t>();
    if (doc.contains("caps")) {
      Json const& caps = doc["caps"];
      if (!caps.is_object()) throw Error(ErrorCode::kConfig, "caps must be an object");
      for (auto const& [key, value] : caps.items()) {
        if (key == "group") {
          cfg.options.caps.group = value.get<std::size_t>();
        } else if (key == "work") {
          cfg.options.caps.work = value.get<std::uint64_t>();
        } else {
          throw Error(ErrorCode::kConfig, "unknown cap '" + key + "'");
        }
      }
    }
  } catch (Json::exception const& e) {
    throw Error(ErrorCode::kConfig, std::string("malformed config: ") + e.what());
  }
  suite_claims(cfg.suite);
  for (std::string const& id : cfg.claims) {
    if (!find_claim(id)) throw Error(ErrorCode::kConfig, "unknown claim '" + id + "'");
  }
  return cfg;
}

Json to_json(SuiteConfig const& config) {
  Json j;
  j["suite"] = config.suite;
  j["claims"] = config.claims;
  j["p_list"] = config.options.p_list ? Json(*config.options.p_list) : Json(nullptr);
  j["trials"] = config.options.trials ? Json(*config.options.trials) : Json(nullptr);
  j["seed"] = config.options.seed;
  j["caps"] = Json{{"group", config.options.caps.group}, {"work", config.options.caps.work}};
  return j;
}

SuiteReport run_suite(SuiteConfig const& config) {
  std::vector<std::string> ids = suite_claims(config.suite);
  for (std::string const& id : config.claims) {
    if (!find_claim(id)) throw Error(ErrorCode::kConfig, "unknown claim '" + id + "'");
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  }
  SuiteReport out;
  for (std::string const& id : ids) {
    for (ClaimReport& r : run_claim(id, config.options)) {
      if (r.mode == ClaimMode::kExactConstant) out.violations += r.violations;
      out.reports.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace sumprod
