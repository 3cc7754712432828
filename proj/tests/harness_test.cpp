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


#include <gtest/gtest.h>

#include <atomic>
#include <set>

#include "sumprod/error.hpp"
#include "sumprod/harness.hpp"

namespace sumprod {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

ScalarSet scalars(GeneratorSpec const& spec) { return std::get<ScalarSet>(generate_set(spec).set); }

GeneratorSpec scalar_spec(Family fam, std::size_t n, Field f) {
  GeneratorSpec s;
  s.family = fam;
  s.size = n;
  s.field = f;
  s.seed = 3;
  return s;
}

TEST(Rng, StreamsAreDeterministicAndDistinct) {
  TrialRng a(42, "x", 0), b(42, "x", 0), c(42, "x", 1), d(42, "y", 0), e(43, "x", 0);
  std::uint64_t const first = a();
  EXPECT_EQ(first, b());
  EXPECT_NE(first, c());
  EXPECT_NE(first, d());
  EXPECT_NE(first, e());
  TrialRng r(1, "below", 0);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(r.below(7), 7u);
    std::int64_t const v = r.between(-3, 3);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 3);
  }
}

TEST(Generators, Interval) {
  ScalarSet const s = scalars(scalar_spec(Family::kInterval, 5, Field::rationals()));
  std::vector<Scalar> want;
  for (int i = 1; i <= 5; ++i) want.push_back(Scalar::from_int(i, Field::rationals()));
  EXPECT_EQ(s, ScalarSet(want));
  EXPECT_EQ(product_set(s, s, ScalarOp::kAdd).size(), 9u);
}

TEST(Generators, GeometricProgressionAndSubgroup) {
  Field const q = Field::rationals(), f7 = Field::prime(7);
  ScalarSet const gp = scalars(scalar_spec(Family::kGeometricProgression, 4, q));
  EXPECT_EQ(gp, ScalarSet({Scalar::from_int(1, q), Scalar::from_int(2, q), Scalar::from_int(4, q),
                           Scalar::from_int(8, q)}));
  EXPECT_EQ(product_set(gp, gp, ScalarOp::kMul).size(), 7u);
  ScalarSet const h = scalars(scalar_spec(Family::kMultiplicativeSubgroup, 3, f7));
  EXPECT_EQ(h, ScalarSet({Scalar::from_int(1, f7), Scalar::from_int(2, f7), Scalar::from_int(4, f7)}));
  EXPECT_EQ(code_of([&] { scalars(scalar_spec(Family::kMultiplicativeSubgroup, 4, f7)); }),
            ErrorCode::kInfeasibleSize);
  // Every subgroup order dividing p - 1 is closed under products.
  PrimeField const f61(61);
  for (std::size_t d : {1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60}) {
    ScalarSet const g = multiplicative_subgroup(f61, d);
    ASSERT_EQ(g.size(), d);
    ASSERT_EQ(product_set(g, g, ScalarOp::kMul), g);
  }
}

TEST(Generators, SizesAndTargets) {
  Field const f11 = Field::prime(11);
  for (Family fam : {Family::kRandom, Family::kInterval, Family::kGeometricProgression}) {
    for (std::size_t n : {1, 3, 7}) EXPECT_EQ(scalars(scalar_spec(fam, n, f11)).size(), n);
  }
  GeneratorSpec g = scalar_spec(Family::kRandom, 20, f11);
  g.target = Target::kSl2;
  g.symmetric = true;
  Sl2Set const s = std::get<Sl2Set>(generate_set(g).set);
  EXPECT_EQ(s.size(), 20u);
  for (Sl2Element const& x : s) EXPECT_TRUE(s.contains(sl2_inv(x)));
  g.target = Target::kAff;
  EXPECT_EQ(std::get<AffSet>(generate_set(g).set).size(), 20u);
  g.family = Family::kGrid;
  g.target = Target::kSl2;
  EXPECT_EQ(code_of([&] { generate_set(g); }), ErrorCode::kBadArguments);
  // Same spec, same set.
  GeneratorSpec r = scalar_spec(Family::kRandom, 9, f11);
  EXPECT_EQ(generate_set(r).set, generate_set(r).set);
  EXPECT_EQ(parse_family(to_string(Family::kBorelConcentrated)), Family::kBorelConcentrated);
}

TEST(Fit, Exponents) {
  std::vector<std::pair<double, double>> sq, flat;
  for (double x : {2.0, 3.0, 5.0, 8.0}) {
    sq.emplace_back(x, x * x);
    flat.emplace_back(x, 7.0);
  }
  ExponentFit const f = fit_exponent(sq);
  EXPECT_NEAR(f.slope, 2.0, 1e-9);
  EXPECT_NEAR(f.max_residual, 0.0, 1e-9);
  EXPECT_NEAR(fit_exponent(flat).slope, 0.0, 1e-9);
  EXPECT_EQ(code_of([] { fit_exponent({{1, 1}, {2, 2}}); }), ErrorCode::kDegenerateSeries);
  EXPECT_EQ(code_of([] { fit_exponent({{1, 1}, {2, 0}, {3, 3}}); }), ErrorCode::kDegenerateSeries);
  EXPECT_EQ(code_of([] { fit_exponent({{2, 1}, {2, 2}, {2, 3}}); }), ErrorCode::kDegenerateSeries);
}

TEST(Trials, OrderAndThreadIndependence) {
  std::function<std::uint64_t(std::uint64_t)> const fn = [](std::uint64_t t) { return TrialRng(7, "t", t)(); };
  std::function<bool(std::uint64_t const&)> const never = [](std::uint64_t const&) { return false; };
  auto const one = run_trials<std::uint64_t>(500, 1, fn, never);
  ASSERT_EQ(one.size(), 500u);
  for (std::size_t threads : {2, 3, 8}) EXPECT_EQ(run_trials<std::uint64_t>(500, threads, fn, never), one);
  // Stopping happens at chunk granularity, identically for any thread count.
  std::function<bool(std::uint64_t const&)> const stop = [&](std::uint64_t const& v) { return v == one[100]; };
  auto const s1 = run_trials<std::uint64_t>(500, 1, fn, stop);
  EXPECT_EQ(s1.size(), 128u);
  EXPECT_EQ(run_trials<std::uint64_t>(500, 8, fn, stop), s1);
}

TEST(Formatting, Numbers) {
  EXPECT_EQ(mpq_string(mpq_class(6, 4)), "3/2");
  EXPECT_EQ(mpq_string(mpq_class(-4, 2)), "-2");
  EXPECT_EQ(decimal_string(mpq_class(1, 3), 4), "0.3333");
  EXPECT_EQ(decimal_string(mpq_class(5), 2), "5.00");
  EXPECT_EQ(std::stod(double_string(0.1)), 0.1);
}

TEST(Reports, JsonRoundTripKeepsBigIntegers) {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 1000);
  ClaimReport r;
  r.claim_id = "szonyi";
  r.anchor = "a";
  r.p = 5;
  r.trials = 3;
  r.lhs = mpz_string(big + 1);
  r.rhs = mpz_string(big);
  r.ratio = "1.000000";
  r.exponent = 1.25;
  r.rows.push_back(ScanRow{5, 2, "4", "2", "2", 2.0, 4.0});
  Json const j = to_json(r);
  ClaimReport const back = claim_report_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.lhs, r.lhs);
  EXPECT_EQ(back.lhs.size(), 1001u);
  EXPECT_EQ(to_json(back), j);
  std::string const csv = emit_report({r}, ReportFormat::kCsv);
  EXPECT_EQ(csv, "p,size,lhs,rhs,ratio\n5,2,4,2,2\n");
  EXPECT_EQ(emit_report({}, ReportFormat::kJson), "[]");
}

TEST(Registry, Lookups) {
  EXPECT_EQ(code_of([] { run_claim("nosuch", RunOptions{}); }), ErrorCode::kUnknownClaim);
  std::set<std::string> ids;
  for (ClaimInfo const& c : claim_registry()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.anchor.empty());
    EXPECT_EQ(find_claim(c.id), &c);
  }
  EXPECT_EQ(suite_claims("all").size(), ids.size());
  EXPECT_EQ(suite_claims("core").size() + suite_claims("scan").size(), ids.size());
  EXPECT_TRUE(suite_claims("none").empty());
  EXPECT_EQ(code_of([] { suite_claims("nosuch"); }), ErrorCode::kConfig);
}

TEST(Registry, SzonyiExhaustiveAtThree) {
  RunOptions o;
  o.p_list = std::vector<std::uint64_t>{3};
  std::vector<ClaimReport> const r = run_claim("szonyi", o);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].trials, 72u);
  EXPECT_EQ(r[0].violations, 0u);
}

TEST(Registry, RuzsaAndDeterminism) {
  RunOptions o;
  o.p_list = std::vector<std::uint64_t>{5};
  o.trials = 10;
  auto const a = emit_report(run_claim("ruzsa", o), ReportFormat::kJson);
  o.threads = 4;
  EXPECT_EQ(emit_report(run_claim("ruzsa", o), ReportFormat::kJson), a);
  o.p_list = std::vector<std::uint64_t>{11};
  o.trials = 50;
  auto const v42 = run_claim("vinh", o);
  o.seed = 43;
  EXPECT_NE(run_claim("vinh", o).front().lhs, v42.front().lhs);
}

TEST(Suites, Config) {
  SuiteConfig const none = parse_suite_config(Json::parse(R"({"suite": "none"})"));
  SuiteReport const r = run_suite(none);
  EXPECT_TRUE(r.reports.empty());
  EXPECT_EQ(emit_report(r.reports, ReportFormat::kJson), "[]");

  SuiteConfig const c =
      parse_suite_config(Json::parse(R"({"claims": ["vinh"], "p_list": [5], "trials": 20, "seed": 9})"));
  EXPECT_EQ(c.options.seed, 9u);
  EXPECT_EQ(parse_suite_config(to_json(c)).claims, c.claims);
  SuiteReport const v = run_suite(c);
  ASSERT_EQ(v.reports.size(), 1u);
  EXPECT_EQ(v.reports[0].trials, 20u);
  EXPECT_EQ(v.violations, 0u);

  for (char const* bad : {R"({"claims": ["nosuch"]})", R"({"suite": "nosuch"})", R"({"p_list": [4]})",
                          R"({"colour": 1})", R"({"trials": "many"})", R"([1])"}) {
    EXPECT_EQ(code_of([&] { parse_suite_config(Json::parse(bad)); }), ErrorCode::kConfig) << bad;
  }
}

}  // namespace
}  // namespace sumprod
