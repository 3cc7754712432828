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

// Product sets, powers, representation functions and energies over SL2,
// Aff and scalar sets. Counts are exact: multiplicities are 64-bit with
// overflow checks, moments are arbitrary precision.

#ifndef SUMPROD_SETALGEBRA_HPP_
#define SUMPROD_SETALGEBRA_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sumprod/element_set.hpp"
#include "sumprod/error.hpp"
#include "sumprod/groups.hpp"
#include "sumprod/scalar.hpp"

namespace sumprod {

using ScalarSet = ElementSet<Scalar>;

// Default bound on |X| * |Y| for a single product computation.
inline constexpr std::uint64_t kDefaultWorkCap = 200'000'000;

enum class GroupOp {
  kMul,            // x y
  kLeftQuotient,   // x^-1 y
  kRightQuotient,  // x y^-1
};

enum class ScalarOp { kAdd, kSub, kMul, kDiv };

template <class E>
E apply_op(GroupOp op, E const& x, E const& y) {
  switch (op) {
    case GroupOp::kMul: return group_mul(x, y);
    case GroupOp::kLeftQuotient: return group_mul(group_inv(x), y);
    case GroupOp::kRightQuotient: return group_mul(x, group_inv(y));
  }
  return group_mul(x, y);
}

// Division by zero yields nullopt; such pairs are skipped everywhere.
std::optional<Scalar> apply_op(ScalarOp op, Scalar const& x, Scalar const& y);

inline void check_work(std::uint64_t work, std::uint64_t cap) {
  if (work > cap) {
    throw Error(ErrorCode::kTooLarge, "product work " + std::to_string(work) + " exceeds cap " + std::to_string(cap));
  }
}

inline std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out;
  if (__builtin_add_overflow(x, y, &out)) throw Error(ErrorCode::kOverflow, "64-bit counter overflow");
  return out;
}

// Multiplicity map x -> r(x). Only keys with positive count are stored.
template <class K>
class RepCounter {
 public:
  void add(K const& key, std::uint64_t n = 1) {
    auto& slot = counts_[key];
    slot = checked_add(slot, n);
    total_ = checked_add(total_, n);
  }

  std::uint64_t operator()(K const& key) const {
    auto it = counts_.find(key);
    return it == counts_.end() ? 0 : it->second;
  }

  std::size_t support_size() const noexcept { return counts_.size(); }
  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t max_value() const {
    std::uint64_t m = 0;
    for (auto const& [k, v] : counts_) m = std::max(m, v);
    return m;
  }

  // Sum of r(x)^k.
  mpz_class moment(unsigned k) const {
    mpz_class sum = 0, term;
    for (auto const& [key, v] : counts_) {
      mpz_ui_pow_ui(term.get_mpz_t(), v, k);
      sum += term;
    }
    return sum;
  }

  // (key, count) pairs in ascending key order.
  std::vector<std::pair<K, std::uint64_t>> sorted() const {
    std::vector<std::pair<K, std::uint64_t>> out(counts_.begin(), counts_.end());
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) { return x.first < y.first; });
    return out;
  }

  std::unordered_map<K, std::uint64_t> const& map() const noexcept { return counts_; }

 private:
  std::unordered_map<K, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

std::string key_to_string(Scalar const& s);
std::string key_to_string(Sl2Element const& g);
std::string key_to_string(AffElement const& g);

// "key,count" lines under a header, keys ascending.
template <class K>
std::string to_csv(RepCounter<K> const& counter) {
  std::string out = "key,count\n";
  for (auto const& [k, v] : counter.sorted()) out += key_to_string(k) + "," + std::to_string(v) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Group sets

template <class E>
ElementSet<E> product_set(ElementSet<E> const& x, ElementSet<E> const& y, GroupOp op = GroupOp::kMul,
                          std::uint64_t work_cap = kDefaultWorkCap) {
  check_work(std::uint64_t{x.size()} * y.size(), work_cap);
  std::unordered_set<E> seen;
  for (E const& u : x) {
    for (E const& v : y) seen.insert(apply_op(op, u, v));
  }
  return ElementSet<E>(std::vector<E>(seen.begin(), seen.end()));
}

// Dense key-space marking; considerably faster for the SL2 workloads.
Sl2Set product_set(Sl2Set const& x, Sl2Set const& y, GroupOp op = GroupOp::kMul,
                   std::uint64_t work_cap = kDefaultWorkCap);

template <class E>
ElementSet<E> inverse_set(ElementSet<E> const& a) {
  std::vector<E> out;
  out.reserve(a.size());
  for (E const& g : a) out.push_back(group_inv(g));
  return ElementSet<E>(std::move(out));
}

template <class E>
bool is_symmetric(ElementSet<E> const& a) {
  return std::all_of(a.begin(), a.end(), [&](E const& g) { return a.contains(group_inv(g)); });
}

template <class E>
bool contains_identity(ElementSet<E> const& a) {
  return !a.empty() && a.contains(group_identity_like(a.front()));
}

// A u A^-1, plus the identity when requested.
template <class E>
ElementSet<E> symmetrize(ElementSet<E> const& a, bool include_identity = false) {
  ElementSet<E> s = a.set_union(inverse_set(a));
  if (include_identity && !a.empty()) s = s.set_union(ElementSet<E>{group_identity_like(a.front())});
  return s;
}

// A^k by repeated right multiplication with A; intermediates never exceed the
// group. Throws Error(kBadArguments) for k < 1, Error(kTooLarge) past work_cap.
template <class E>
ElementSet<E> power_set_k(ElementSet<E> const& a, unsigned k, std::uint64_t work_cap = kDefaultWorkCap) {
  if (k < 1) throw Error(ErrorCode::kBadArguments, "power k must be >= 1");
  ElementSet<E> acc = a;
  for (unsigned i = 1; i < k; ++i) acc = product_set(acc, a, GroupOp::kMul, work_cap);
  return acc;
}

template <class E>
RepCounter<E> rep_function(ElementSet<E> const& x, ElementSet<E> const& y, GroupOp op,
                           std::uint64_t work_cap = kDefaultWorkCap) {
  check_work(std::uint64_t{x.size()} * y.size(), work_cap);
  RepCounter<E> r;
  for (E const& u : x) {
    for (E const& v : y) r.add(apply_op(op, u, v));
  }
  return r;
}

// Sum_z r_{X op Y}(z)^k. With X = Y = L and kLeftQuotient this is E_k(L).
template <class E>
mpz_class energy(ElementSet<E> const& x, ElementSet<E> const& y, GroupOp op, unsigned k = 2,
                 std::uint64_t work_cap = kDefaultWorkCap) {
  return rep_function(x, y, op, work_cap).moment(k);
}

struct DoublingStats {
  mpq_class tripling;             // K[A] = |A^3| / |A|
  std::vector<std::size_t> profile;  // |A^k| for k = 1..kmax
  bool symmetric = false;
  bool has_identity = false;
};

inline constexpr unsigned kDefaultMaxPower = 8;

template <class E>
DoublingStats doubling_stats(ElementSet<E> const& a, unsigned kmax = kDefaultMaxPower,
                             std::uint64_t work_cap = kDefaultWorkCap) {
  if (a.empty()) throw Error(ErrorCode::kBadArguments, "doubling of an empty set");
  DoublingStats out;
  kmax = std::max(kmax, 3u);
  ElementSet<E> acc = a;
  out.profile.push_back(a.size());
  for (unsigned k = 2; k <= kmax; ++k) {
    acc = product_set(acc, a, GroupOp::kMul, work_cap);
    out.profile.push_back(acc.size());
  }
  out.tripling = mpq_class(static_cast<unsigned long>(out.profile[2]), static_cast<unsigned long>(a.size()));
  out.tripling.canonicalize();
  out.symmetric = is_symmetric(a);
  out.has_identity = contains_identity(a);
  return out;
}

// Sum_g (Sum_x f1(x) f2(g x))^2 with functions indexed by position in the
// enumerated group.
template <class E, class T>
T convolution_energy(ElementSet<E> const& group, std::span<T const> f1, std::span<T const> f2) {
  if (f1.size() != group.size() || f2.size() != group.size()) {
    throw Error(ErrorCode::kBadArguments, "function length differs from group order");
  }
  auto index = [&group](E const& e) {
    auto it = std::lower_bound(group.begin(), group.end(), e);
    return static_cast<std::size_t>(it - group.begin());
  };
  T total = 0;
  for (E const& g : group) {
    T inner = 0;
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (f1[i] == 0) continue;
      inner += f1[i] * f2[index(group_mul(g, group[i]))];
    }
    total += inner * inner;
  }
  return total;
}

// E(A) = |A|^4/|G| + E(f) with f = 1_A - |A|/|G|, as exact rationals.
struct EnergyDecomposition {
  mpz_class energy;
  mpq_class main_term;
  mpq_class fluctuation;
  bool identity_holds = false;
};

template <class E>
EnergyDecomposition energy_decomposition(ElementSet<E> const& a, ElementSet<E> const& group) {
  EnergyDecomposition out;
  out.energy = energy(a, a, GroupOp::kLeftQuotient, 2);
  mpq_class const density(static_cast<unsigned long>(a.size()), static_cast<unsigned long>(group.size()));
  std::vector<mpq_class> f(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    f[i] = (a.contains(group[i]) ? mpq_class(1) : mpq_class(0)) - density;
    f[i].canonicalize();
  }
  mpz_class n4;
  mpz_ui_pow_ui(n4.get_mpz_t(), a.size(), 4);
  out.main_term = mpq_class(n4, mpz_class(static_cast<unsigned long>(group.size())));
  out.main_term.canonicalize();
  std::span<mpq_class const> fs(f);
  out.fluctuation = convolution_energy<E, mpq_class>(group, fs, fs);
  out.identity_holds = (mpq_class(out.energy) == out.main_term + out.fluctuation);
  return out;
}

// Sum_g (Sum_x f1(x) f2(gx))^2 <= p^2 ||f1||^2 ||f2||^2 for mean-zero integer
// functions on SL2(F_p), compared exactly.
struct FrobeniusCheck {
  mpz_class lhs;
  mpz_class rhs;
  bool holds = false;
};

FrobeniusCheck frobenius_check(Sl2Set const& group, std::span<std::int64_t const> f1,
                               std::span<std::int64_t const> f2);

// ---------------------------------------------------------------------------
// Scalar sets

ScalarSet product_set(ScalarSet const& x, ScalarSet const& y, ScalarOp op, std::uint64_t work_cap = kDefaultWorkCap);
RepCounter<Scalar> rep_function(ScalarSet const& x, ScalarSet const& y, ScalarOp op,
                                std::uint64_t work_cap = kDefaultWorkCap);
mpz_class energy(ScalarSet const& x, ScalarSet const& y, ScalarOp op, unsigned k = 2,
                 std::uint64_t work_cap = kDefaultWorkCap);

// E^x_k(f) = Sum_s w(s)^k, where w(s) = Sum_{u op v = s} f(u) f(v) and op is
// kDiv or kMul. The key 0 never takes part: the multiplicative energies live
// on F*.
mpz_class weighted_energy_moment(RepCounter<Scalar> const& f, ScalarOp op, unsigned k);

// Weighted representation function behind weighted_energy_moment.
std::unordered_map<Scalar, mpz_class> weighted_rep_function(RepCounter<Scalar> const& f, ScalarOp op);

}  // namespace sumprod

#endif  // SUMPROD_SETALGEBRA_HPP_
