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

#include <map>
#include <random>

#include "sumprod/error.hpp"
#include "sumprod/groups.hpp"
#include "sumprod/setalgebra.hpp"

namespace sumprod {
namespace {

PrimeField const F5(5), F7(7);
Field const Q = Field::rationals();

ScalarSet ints(std::initializer_list<std::int64_t> v, Field const& f) {
  std::vector<Scalar> out;
  for (std::int64_t x : v) out.push_back(Scalar::from_int(x, f));
  return ScalarSet(std::move(out));
}

template <class E>
ElementSet<E> sample(ElementSet<E> const& pool, std::size_t n, std::mt19937_64& gen) {
  std::vector<E> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(pool[gen() % pool.size()]);
  return ElementSet<E>(std::move(v));
}

TEST(ProductSet, Examples) {
  Sl2Set const u0 = sl2_line_points({Sl2Element::identity(F5), 1});
  EXPECT_EQ(product_set(u0, u0), u0);
  Field const f5 = Field::prime(5);
  EXPECT_EQ(product_set(ints({0, 1}, f5), ints({0, 1}, f5), ScalarOp::kAdd), ints({0, 1, 2}, f5));
  ScalarSet const q = product_set(ints({1, 2, 3}, Q), ints({1, 2, 3}, Q), ScalarOp::kDiv);
  EXPECT_EQ(q.size(), 7u);
  EXPECT_TRUE(q.contains(Scalar::rational(2, 3)));
  EXPECT_TRUE(q.contains(Scalar::rational(3, 2)));
}

TEST(ProductSet, DivisionSkipsZero) {
  ScalarSet const a = ints({0, 1, 2}, Q);
  ScalarSet const q = product_set(a, a, ScalarOp::kDiv);
  EXPECT_EQ(q, (ScalarSet{Scalar::rational(0, 1), Scalar::rational(1, 2), Scalar::rational(1, 1),
                          Scalar::rational(2, 1)}));
  EXPECT_EQ(rep_function(a, a, ScalarOp::kDiv).total(), 6u);
}

TEST(ProductSet, KindMismatch) {
  EXPECT_THROW(product_set(ints({1}, Q), ints({1}, Field::prime(5)), ScalarOp::kAdd), Error);
}

TEST(ProductSet, DenseSl2PathAgreesWithGeneric) {
  Sl2Set const g = enumerate_sl2(F7);
  std::mt19937_64 gen(1);
  for (int i = 0; i < 50; ++i) {
    Sl2Set const x = sample(g, 1 + gen() % 40, gen), y = sample(g, 1 + gen() % 40, gen);
    for (GroupOp op : {GroupOp::kMul, GroupOp::kLeftQuotient, GroupOp::kRightQuotient}) {
      std::vector<Sl2Element> v;
      for (Sl2Element const& a : x)
        for (Sl2Element const& b : y) v.push_back(apply_op(op, a, b));
      EXPECT_EQ(product_set(x, y, op), Sl2Set(v));
    }
  }
}

TEST(PowerSet, UnipotentPowers) {
  Sl2Element const t = sl2_unipotent(F5, 1);
  Sl2Set const a{Sl2Element::identity(F5), t, sl2_inv(t)};
  for (unsigned k = 1; k <= 6; ++k) EXPECT_EQ(power_set_k(a, k).size(), std::min<std::size_t>(2 * k + 1, 5)) << k;
  EXPECT_EQ(power_set_k(a, 1), a);
  Sl2Set const u0 = sl2_line_points({Sl2Element::identity(F5), 1});
  for (unsigned k = 1; k <= 4; ++k) EXPECT_EQ(power_set_k(u0, k), u0);
  EXPECT_THROW(power_set_k(a, 0), Error);
}

TEST(PowerSet, WorkCap) {
  Sl2Set const g = enumerate_sl2(F7);
  try {
    power_set_k(g, 3, 1000);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(Symmetrize, Examples) {
  Sl2Element const t = sl2_unipotent(F5, 1);
  EXPECT_EQ(symmetrize(Sl2Set{t}), (Sl2Set{t, sl2_inv(t)}));
  Sl2Set const s{t, sl2_inv(t)};
  EXPECT_EQ(symmetrize(s), s);
  EXPECT_EQ(symmetrize(s, true), (Sl2Set{t, sl2_inv(t), Sl2Element::identity(F5)}));
  Field const f5 = Field::prime(5);
  EXPECT_EQ(symmetrize(AffSet{AffElement::from_ints(f5, 2, 1)}),
            (AffSet{AffElement::from_ints(f5, 2, 1), AffElement::from_ints(f5, 3, 2)}));
  EXPECT_TRUE(is_symmetric(symmetrize(Sl2Set{t, sl2_weyl(F5)})));
}

TEST(Symmetrize, SquareEqualsQuotients) {
  Sl2Set const g = enumerate_sl2(F5);
  std::mt19937_64 gen(2);
  for (int i = 0; i < 100; ++i) {
    Sl2Set const a = symmetrize(sample(g, 1 + gen() % 20, gen));
    Sl2Set const sq = product_set(a, a);
    EXPECT_EQ(sq, product_set(a, a, GroupOp::kRightQuotient));
    EXPECT_EQ(sq, product_set(a, a, GroupOp::kLeftQuotient));
  }
}

TEST(RepFunction, Examples) {
  Field const f5 = Field::prime(5);
  RepCounter<Scalar> const r = rep_function(ints({0, 1}, f5), ints({0, 1}, f5), ScalarOp::kAdd);
  EXPECT_EQ(r(Scalar::from_int(0, f5)), 1u);
  EXPECT_EQ(r(Scalar::from_int(1, f5)), 2u);
  EXPECT_EQ(r(Scalar::from_int(2, f5)), 1u);
  EXPECT_EQ(r.support_size(), 3u);
  EXPECT_EQ(to_csv(r), "key,count\n0,1\n1,2\n2,1\n");

  Field const f7 = Field::prime(7);
  ScalarSet const sub = ints({1, 2, 4}, f7);
  RepCounter<Scalar> const q = rep_function(sub, sub, ScalarOp::kDiv);
  for (Scalar const& s : sub) EXPECT_EQ(q(s), 3u);
  EXPECT_EQ(q.support_size(), 3u);
}

TEST(RepFunction, CosetQuotientIsConstant) {
  Field const f = Field::prime(7);
  AffSet const h = aff_stabilizer(f, Scalar::from_int(3, f));
  AffElement const g = AffElement::from_ints(f, 2, 5);
  std::vector<AffElement> v;
  for (AffElement const& x : h) v.push_back(aff_mul(g, x));
  AffSet const coset(std::move(v));
  RepCounter<AffElement> const r = rep_function(coset, coset, GroupOp::kLeftQuotient);
  EXPECT_EQ(r.support_size(), h.size());
  for (AffElement const& x : h) EXPECT_EQ(r(x), h.size());
}

TEST(RepFunction, TotalMass) {
  Sl2Set const g = enumerate_sl2(F5);
  std::mt19937_64 gen(3);
  for (int i = 0; i < 30; ++i) {
    Sl2Set const x = sample(g, 1 + gen() % 30, gen), y = sample(g, 1 + gen() % 30, gen);
    EXPECT_EQ(rep_function(x, y, GroupOp::kLeftQuotient).total(), x.size() * y.size());
  }
}

TEST(Energy, Examples) {
  Field const f5 = Field::prime(5);
  AffSet const u0 = aff_unipotent(f5);
  EXPECT_EQ(energy(u0, u0, GroupOp::kLeftQuotient), 125);
  ScalarSet const a = ints({1, 2, 3}, Q);
  EXPECT_EQ(energy(a, a, ScalarOp::kSub), 19);
  ScalarSet const b = ints({0, 1}, Q);
  EXPECT_EQ(energy(b, b, ScalarOp::kSub, 3), 10);
}

// Brute-force oracles: count solutions directly.
mpz_class additive_oracle(ScalarSet const& x, ScalarSet const& y, unsigned k) {
  std::map<Scalar, std::uint64_t> r;
  for (Scalar const& a : x)
    for (Scalar const& b : y) ++r[a - b];
  std::uint64_t count = 0;
  if (k == 2) {
    for (Scalar const& a : x)
      for (Scalar const& b : y)
        for (Scalar const& c : x)
          for (Scalar const& d : y) count += (a - b == c - d);
  } else {
    for (Scalar const& a : x)
      for (Scalar const& b : y)
        for (Scalar const& c : x)
          for (Scalar const& d : y) {
            if (a - b != c - d) continue;
            for (Scalar const& e : x)
              for (Scalar const& f : y) count += (e - f == a - b);
          }
  }
  return mpz_class(static_cast<unsigned long>(count));
}

TEST(Energy, MatchesNestedLoops) {
  std::mt19937_64 gen(4);
  Field const f = Field::prime(13);
  for (int i = 0; i < 40; ++i) {
    std::vector<Scalar> xv, yv;
    std::size_t const nx = 1 + gen() % 12, ny = 1 + gen() % 12;
    for (std::size_t j = 0; j < nx; ++j) xv.push_back(Scalar::from_int(static_cast<std::int64_t>(gen() % 13), f));
    for (std::size_t j = 0; j < ny; ++j) yv.push_back(Scalar::from_int(static_cast<std::int64_t>(gen() % 13), f));
    ScalarSet const x(xv), y(yv);
    EXPECT_EQ(energy(x, y, ScalarOp::kSub, 2), additive_oracle(x, y, 2));
    if (i % 4 == 0) EXPECT_EQ(energy(x, y, ScalarOp::kSub, 3), additive_oracle(x, y, 3));
  }
}

TEST(Energy, GroupEnergyMatchesNestedLoops) {
  Sl2Set const g = enumerate_sl2(F5);
  std::mt19937_64 gen(5);
  for (int i = 0; i < 20; ++i) {
    Sl2Set const a = sample(g, 1 + gen() % 12, gen);
    std::uint64_t count = 0;
    for (auto const& x1 : a)
      for (auto const& y1 : a)
        for (auto const& x2 : a)
          for (auto const& y2 : a) count += sl2_mul(sl2_inv(x1), y1) == sl2_mul(sl2_inv(x2), y2);
    EXPECT_EQ(energy(a, a, GroupOp::kLeftQuotient), mpz_class(static_cast<unsigned long>(count)));
  }
}

TEST(Energy, DecompositionIsExact) {
  Sl2Set const g = enumerate_sl2(F5);
  std::mt19937_64 gen(6);
  for (int i = 0; i < 10; ++i) {
    Sl2Set const a = sample(g, 1 + gen() % g.size(), gen);
    EnergyDecomposition const d = energy_decomposition(a, g);
    EXPECT_TRUE(d.identity_holds);
    EXPECT_EQ(mpq_class(d.energy), d.main_term + d.fluctuation);
  }
  // The whole group is flat: no fluctuation.
  EnergyDecomposition const full = energy_decomposition(g, g);
  EXPECT_EQ(full.fluctuation, 0);
  EXPECT_EQ(full.energy, 120 * 120 * 120);
}

TEST(Energy, FrobeniusBound) {
  Sl2Set const g = enumerate_sl2(F5);
  std::mt19937_64 gen(7);
  for (int i = 0; i < 20; ++i) {
    std::vector<std::int64_t> f1(g.size()), f2(g.size());
    std::int64_t s1 = 0, s2 = 0;
    for (std::size_t j = 0; j + 1 < g.size(); ++j) {
      s1 += f1[j] = static_cast<std::int64_t>(gen() % 9) - 4;
      s2 += f2[j] = static_cast<std::int64_t>(gen() % 9) - 4;
    }
    f1.back() = -s1;
    f2.back() = -s2;
    FrobeniusCheck const c = frobenius_check(g, f1, f2);
    EXPECT_TRUE(c.holds);
    EXPECT_LE(c.lhs, c.rhs);
  }
  std::vector<std::int64_t> bad(g.size(), 1);
  EXPECT_THROW(frobenius_check(g, bad, bad), Error);
}

TEST(WeightedMoment, Examples) {
  RepCounter<Scalar> one;
  one.add(Scalar::rational(1, 1));
  for (unsigned k = 2; k <= 4; ++k) EXPECT_EQ(weighted_energy_moment(one, ScalarOp::kDiv, k), 1);

  ScalarSet const d = ints({0, 1}, Q);
  RepCounter<Scalar> const f = rep_function(d, d, ScalarOp::kSub);
  // Oracle: quadruple loop over nonzero keys with u1/v1 = u2/v2, weighted.
  std::uint64_t want = 0;
  for (auto const& [u1, a] : f.map())
    for (auto const& [v1, b] : f.map())
      for (auto const& [u2, c] : f.map())
        for (auto const& [v2, e] : f.map()) {
          if (u1.is_zero() || v1.is_zero() || u2.is_zero() || v2.is_zero()) continue;
          if (u1 / v1 == u2 / v2) want += a * b * c * e;
        }
  EXPECT_EQ(weighted_energy_moment(f, ScalarOp::kDiv, 2), mpz_class(static_cast<unsigned long>(want)));
  EXPECT_EQ(want, 8u);
}

TEST(WeightedMoment, Homogeneity) {
  ScalarSet const d = ints({0, 1, 3, 7}, Q);
  RepCounter<Scalar> const f = rep_function(d, d, ScalarOp::kSub);
  RepCounter<Scalar> twice;
  for (auto const& [k, v] : f.map()) twice.add(k, 2 * v);
  for (unsigned k = 2; k <= 4; ++k) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, 2 * k);
    EXPECT_EQ(weighted_energy_moment(twice, ScalarOp::kDiv, k), scale * weighted_energy_moment(f, ScalarOp::kDiv, k));
  }
}

TEST(Doubling, Examples) {
  Sl2Set const u0 = sl2_line_points({Sl2Element::identity(F5), 1});
  EXPECT_EQ(doubling_stats(u0).tripling, 1);
  Sl2Set const g = enumerate_sl2(F5);
  DoublingStats const whole = doubling_stats(g, 3);
  EXPECT_EQ(whole.tripling, 1);
  EXPECT_TRUE(whole.symmetric && whole.has_identity);

  Sl2Set const a = symmetrize(Sl2Set{sl2_unipotent(F7, 1), sl2_diagonal(F7, 2)}, true);
  std::vector<Sl2Element> cube;
  for (auto const& x : a)
    for (auto const& y : a)
      for (auto const& z : a) cube.push_back(sl2_mul(sl2_mul(x, y), z));
  DoublingStats const s = doubling_stats(a, 4);
  EXPECT_EQ(s.profile[2], Sl2Set(cube).size());
  EXPECT_EQ(s.tripling, mpq_class(static_cast<unsigned long>(Sl2Set(cube).size()), 5));
  EXPECT_EQ(s.profile.size(), 4u);
}

TEST(Doubling, RuzsaOnRandomSets) {
  Sl2Set const g = enumerate_sl2(F5);
  std::mt19937_64 gen(8);
  for (int i = 0; i < 40; ++i) {
    Sl2Set const a = symmetrize(sample(g, 1 + gen() % 15, gen), true);
    DoublingStats const s = doubling_stats(a, 6);
    for (unsigned k = 4; k <= 6; ++k) {
      mpq_class bound(static_cast<unsigned long>(a.size()));
      for (unsigned j = 0; j < k - 2; ++j) bound *= s.tripling;
      EXPECT_LE(mpq_class(static_cast<unsigned long>(s.profile[k - 1])), bound);
    }
  }
}

}  // namespace
}  // namespace sumprod
