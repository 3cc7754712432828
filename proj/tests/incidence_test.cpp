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

#include <random>

#include "sumprod/error.hpp"
#include "sumprod/incidence.hpp"

namespace sumprod {
namespace {

Field const F3 = Field::prime(3), F5 = Field::prime(5), F7 = Field::prime(7), Q = Field::rationals();

PlanePoint pt(Field const& f, std::int64_t x, std::int64_t y) { return PlanePoint::from_ints(f, x, y); }

PointSet random_points(Field const& f, std::size_t n, std::mt19937_64& gen) {
  std::vector<PlanePoint> v;
  std::int64_t const p = static_cast<std::int64_t>(f.modulus());
  for (std::size_t i = 0; i < n; ++i) v.push_back(pt(f, static_cast<std::int64_t>(gen() % p), static_cast<std::int64_t>(gen() % p)));
  return PointSet(std::move(v));
}

TEST(Lines, CanonicalForms) {
  PlaneLine const l = PlaneLine::through(pt(F5, 0, 1), pt(F5, 1, 3));
  EXPECT_EQ(l, PlaneLine::through(pt(F5, 1, 3), pt(F5, 0, 1)));
  EXPECT_EQ(l.to_string(), "2 1");
  PlaneLine const v = PlaneLine::through(pt(F5, 2, 0), pt(F5, 2, 4));
  EXPECT_TRUE(v.is_vertical());
  EXPECT_EQ(v.to_string(), "V 2");
  EXPECT_THROW(v.to_affine(), Error);
  EXPECT_THROW(PlaneLine::through(pt(F5, 1, 1), pt(F5, 1, 1)), Error);
  AffElement const g = AffElement::from_ints(F7, 3, 4);
  EXPECT_EQ(PlaneLine::from_affine(g).to_affine(), g);
}

TEST(Incidences, Examples) {
  PointSet const all = all_points(F5);
  LineSet const nonvertical = all_lines(F5, false);
  EXPECT_EQ(nonvertical.size(), 25u);
  EXPECT_EQ(count_incidences_lines(all, nonvertical), 125u);
  EXPECT_EQ(count_incidences_lines(all, LineSet{}), 0u);
  PointSet const diag{pt(Q, 0, 0), pt(Q, 1, 1), pt(Q, 2, 2)};
  LineSet const yx{PlaneLine::non_vertical(Scalar::rational(1, 1), Scalar::rational(0, 1))};
  EXPECT_EQ(count_incidences_lines(diag, yx), 3u);
  EXPECT_THROW(count_incidences_lines(all, yx), Error);
}

TEST(Incidences, MatchesNestedLoops) {
  std::mt19937_64 gen(1);
  LineSet const lines = all_lines(F7);
  for (int i = 0; i < 20; ++i) {
    PointSet const p = random_points(F7, 1 + gen() % 30, gen);
    std::vector<PlaneLine> lv;
    for (std::size_t j = 0; j < 1 + gen() % 30; ++j) lv.push_back(lines[gen() % lines.size()]);
    LineSet const l(lv);
    std::uint64_t n = 0;
    for (auto const& q : p)
      for (auto const& m : l) n += m.contains(q);
    EXPECT_EQ(count_incidences_lines(p, l), n);
  }
}

TEST(Directions, Examples) {
  DirectionResult const d = directions(PointSet{pt(F5, 0, 0), pt(F5, 1, 0), pt(F5, 0, 1)});
  ASSERT_EQ(d.directions.size(), 3u);
  EXPECT_EQ(d.directions[0], Direction::finite(Scalar::from_int(0, F5)));
  EXPECT_EQ(d.directions[1], Direction::finite(Scalar::from_int(-1, F5)));
  EXPECT_TRUE(d.directions[2].infinite);
  EXPECT_FALSE(d.collinear);

  DirectionResult const c = directions(PointSet{pt(F5, 0, 0), pt(F5, 1, 1), pt(F5, 2, 2)});
  EXPECT_EQ(c.directions.size(), 1u);
  EXPECT_TRUE(c.collinear);

  EXPECT_EQ(directions(all_points(F3)).directions.size(), 4u);
  EXPECT_THROW(directions(PointSet{pt(F5, 0, 0)}), Error);
}

TEST(Directions, SzonyiExhaustiveAtThree) {
  PointSet const all = all_points(F3);
  std::size_t checked = 0;
  for (unsigned mask = 0; mask < (1u << 9); ++mask) {
    if (__builtin_popcount(mask) < 2 || __builtin_popcount(mask) > 3) continue;
    std::vector<PlanePoint> v;
    for (unsigned i = 0; i < 9; ++i) {
      if (mask >> i & 1) v.push_back(all[i]);
    }
    PointSet const s(v);
    DirectionResult const d = directions(s);
    ASSERT_EQ(d.collinear, is_collinear(s.elements()));
    if (d.collinear) continue;
    ++checked;
    EXPECT_GE(2 * d.directions.size(), s.size() + 3);
  }
  EXPECT_EQ(checked, 72u);
}

TEST(Directions, AllDirectionsAboveP) {
  std::mt19937_64 gen(2);
  for (int i = 0; i < 50; ++i) {
    PointSet p = random_points(F7, 8 + gen() % 20, gen);
    if (p.size() <= 7) continue;
    EXPECT_EQ(directions(p).directions.size(), 8u);
  }
}

TEST(DeterminedLines, Examples) {
  EXPECT_EQ(determined_lines(PointSet{pt(F5, 0, 0), pt(F5, 1, 1), pt(F5, 2, 2)}).size(), 1u);
  EXPECT_EQ(determined_lines(all_points(F5)).size(), 30u);
  EXPECT_EQ(determined_lines(PointSet{pt(F5, 0, 0), pt(F5, 3, 1)}).size(), 1u);
  EXPECT_THROW(determined_lines(PointSet{}), Error);
}

TEST(RichLines, Examples) {
  PointSet const all = all_points(F5);
  LineSet const lines = all_lines(F5);
  EXPECT_TRUE(rich_lines(all, lines, 6).empty());
  std::vector<RichGroup> const g = rich_lines(all, lines, 5);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].k, 0u);
  EXPECT_EQ(g[0].lines.size(), 30u);
  EXPECT_THROW(rich_lines(all, lines, 0), Error);
}

TEST(RichLines, PartitionProperty) {
  std::mt19937_64 gen(3);
  LineSet const lines = all_lines(F7);
  for (int i = 0; i < 30; ++i) {
    PointSet const p = random_points(F7, 1 + gen() % 40, gen);
    std::uint64_t const delta = 1 + gen() % 3;
    std::size_t members = 0, want = 0;
    std::uint64_t weighted = 0;
    for (RichGroup const& grp : rich_lines(p, lines, delta)) {
      members += grp.lines.size();
      for (std::size_t j = 0; j < grp.lines.size(); ++j) {
        EXPECT_GE(grp.richness[j], delta << grp.k);
        EXPECT_LT(grp.richness[j], delta << (grp.k + 1));
      }
      weighted += grp.lines.size() * (delta << grp.k);
    }
    for (PlaneLine const& l : lines) {
      std::uint64_t r = 0;
      for (PlanePoint const& q : p) r += l.contains(q);
      want += r >= delta;
    }
    EXPECT_EQ(members, want);
    EXPECT_LE(weighted, count_incidences_lines(p, lines));
  }
}

mpz_class distinct_oracle(ScalarSet const& d) {
  std::vector<PlanePoint> g;
  for (Scalar const& x : d)
    for (Scalar const& y : d) g.emplace_back(x, y);
  std::uint64_t n = 0;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b)
      for (std::size_t c = 0; c < g.size(); ++c)
        for (std::size_t e = 0; e < g.size(); ++e) {
          if (a == b || a == c || a == e || b == c || b == e || c == e) continue;
          std::vector<PlanePoint> const quad{g[a], g[b], g[c], g[e]};
          n += is_collinear(quad);
        }
  return mpz_class(static_cast<unsigned long>(n));
}

TEST(CollinearQuadruples, Examples) {
  auto set = [](std::initializer_list<std::int64_t> v) {
    std::vector<Scalar> s;
    for (auto x : v) s.push_back(Scalar::from_int(x, Q));
    return ScalarSet(s);
  };
  EXPECT_EQ(collinear_quadruples(set({0, 1})).distinct, 0);
  EXPECT_EQ(collinear_quadruples(set({5})).distinct, 0);
  EXPECT_EQ(collinear_quadruples(set({0, 1, 2})).distinct, distinct_oracle(set({0, 1, 2})));
  // Four rows, four columns and two diagonals carry 4 points each.
  EXPECT_EQ(collinear_quadruples(set({0, 1, 2, 3})).distinct, 10 * 24);
  EXPECT_EQ(collinear_quadruples(set({0, 1, 2, 3})).distinct, distinct_oracle(set({0, 1, 2, 3})));
}

TEST(CollinearQuadruples, OracleOnRandomSets) {
  std::mt19937_64 gen(4);
  for (Field const& f : {F7, Field::prime(11), Q}) {
    for (int i = 0; i < 4; ++i) {
      std::vector<Scalar> v;
      for (int j = 0; j < 4; ++j) v.push_back(Scalar::from_int(static_cast<std::int64_t>(gen() % 11), f));
      ScalarSet const d(v);
      QuadrupleCount const q = collinear_quadruples(d);
      EXPECT_EQ(q.distinct, distinct_oracle(d));
      // Sum over lines with 2+ points of |l n grid|^4.
      PointSet grid;
      {
        std::vector<PlanePoint> g;
        for (Scalar const& x : d)
          for (Scalar const& y : d) g.emplace_back(x, y);
        grid = PointSet(g);
      }
      mpz_class w = 0;
      if (grid.size() >= 2) {
        for (PlaneLine const& l : determined_lines(grid)) {
          unsigned long r = 0;
          for (PlanePoint const& q2 : grid) r += l.contains(q2);
          w += mpz_class(r * r * r * r);
        }
      }
      EXPECT_EQ(q.with_repeats, w);
    }
  }
}

TEST(PlaneIncidences, Examples) {
  std::vector<SpacePoint> const one{{Scalar::from_int(1, F7), Scalar::from_int(2, F7), Scalar::from_int(3, F7)}};
  EXPECT_EQ(count_incidences_planes(one, {}).count, 0u);
  std::vector<SpacePlane> planes;
  for (std::int64_t a = 0; a < 7; ++a) {
    // a x + y + 0 z = a + 2 passes through (1, 2, 3).
    planes.emplace_back(Scalar::from_int(a, F7), Scalar::from_int(1, F7), Scalar::from_int(0, F7),
                        Scalar::from_int(a + 2, F7));
  }
  EXPECT_EQ(count_incidences_planes(one, planes).count, 7u);
  EXPECT_EQ(count_incidences_planes(one, planes).max_collinear, 1u);
  EXPECT_THROW(SpacePlane(Scalar::from_int(0, F7), Scalar::from_int(0, F7), Scalar::from_int(0, F7),
                          Scalar::from_int(1, F7)),
               Error);
}

TEST(PlaneIncidences, MatchesNestedLoops) {
  std::mt19937_64 gen(5);
  auto s = [&] { return Scalar::from_int(static_cast<std::int64_t>(gen() % 7), F7); };
  std::vector<SpacePoint> pts;
  std::vector<SpacePlane> planes;
  for (int i = 0; i < 20; ++i) pts.push_back({s(), s(), s()});
  while (planes.size() < 20) {
    Scalar a = s(), b = s(), c = s();
    if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
    planes.emplace_back(a, b, c, s());
  }
  std::uint64_t n = 0;
  for (auto const& q : pts)
    for (auto const& pl : planes) {
      Scalar const lhs = pl.alpha() * q.x + pl.beta() * q.y + pl.gamma() * q.z;
      n += lhs == pl.delta();
    }
  EXPECT_EQ(count_incidences_planes(pts, planes).count, n);
  // Collinear points along (t, 2t, 3t).
  std::vector<SpacePoint> line;
  for (std::int64_t t = 0; t < 5; ++t) {
    line.push_back({Scalar::from_int(t, F7), Scalar::from_int(2 * t, F7), Scalar::from_int(3 * t, F7)});
  }
  line.push_back({Scalar::from_int(1, F7), Scalar::from_int(0, F7), Scalar::from_int(0, F7)});
  EXPECT_EQ(max_collinear_points(line), 5u);
}

TEST(Vinh, Examples) {
  VinhResult const full = vinh_deviation(all_points(F5), all_lines(F5));
  EXPECT_EQ(full.deviation, 0);
  EXPECT_TRUE(full.holds);
  VinhResult const one = vinh_deviation(PointSet{pt(F5, 0, 0)}, LineSet{PlaneLine::through(pt(F5, 0, 0), pt(F5, 1, 1))});
  EXPECT_EQ(one.deviation, mpq_class(4, 5));
  EXPECT_EQ(one.bound_sq, 5);
  EXPECT_TRUE(one.holds);
  EXPECT_THROW(vinh_deviation(PointSet{pt(Q, 0, 0)}, LineSet{}), Error);
}

TEST(Vinh, RandomAtEleven) {
  std::mt19937_64 gen(6);
  Field const f = Field::prime(11);
  LineSet const lines = all_lines(f);
  for (int i = 0; i < 1000; ++i) {
    PointSet const p = random_points(f, 1 + gen() % 121, gen);
    std::vector<PlaneLine> lv;
    for (std::size_t j = 0; j < 1 + gen() % 132; ++j) lv.push_back(lines[gen() % lines.size()]);
    VinhResult const v = vinh_deviation(p, LineSet(lv));
    ASSERT_TRUE(v.holds);
    ASSERT_LE(v.deviation_sq, mpq_class(v.bound_sq));
  }
}

TEST(AlonBeck, BoundValue) {
  std::mt19937_64 gen(7);
  mpq_class const eps(1, 2);
  PointSet p = random_points(F7, 30, gen);
  AlonResult const a = alon_beck_check(p, eps);
  EXPECT_TRUE(a.applicable);
  // eps^2 (1 - eps) / (2 + 2 eps) (p + 1)^2 = (1/8) / 3 * 64 = 8/3.
  EXPECT_EQ(a.bound, mpq_class(8, 3));
  EXPECT_TRUE(a.holds);
  EXPECT_FALSE(alon_beck_check(PointSet{pt(F7, 0, 0), pt(F7, 1, 0)}, eps).applicable);
}

TEST(MainTerms, ReportOnly) {
  EXPECT_GT(szemeredi_trotter_main_term(100, 100), 0);
  EXPECT_GT(stevens_de_zeeuw_main_term(10, 10, 100), 0);
}

}  // namespace
}  // namespace sumprod
