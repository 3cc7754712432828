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

#include "sumprod/setalgebra.hpp"

#include <unordered_set>
#include <vector>

namespace sumprod {

std::optional<Scalar> apply_op(ScalarOp op, Scalar const& x, Scalar const& y) {
  switch (op) {
    case ScalarOp::kAdd: return x + y;
    case ScalarOp::kSub: return x - y;
    case ScalarOp::kMul: return x * y;
    case ScalarOp::kDiv:
      if (y.is_zero()) return std::nullopt;
      return x / y;
  }
  return std::nullopt;
}

std::string key_to_string(Scalar const& s) { return s.to_string(); }

std::string key_to_string(Sl2Element const& g) {
  return std::to_string(g.a()) + " " + std::to_string(g.b()) + " " + std::to_string(g.c()) + " " +
         std::to_string(g.d());
}

std::string key_to_string(AffElement const& g) { return g.a().to_string() + " " + g.b().to_string(); }

Sl2Set product_set(Sl2Set const& x, Sl2Set const& y, GroupOp op, std::uint64_t work_cap) {
  check_work(std::uint64_t{x.size()} * y.size(), work_cap);
  if (x.empty() || y.empty()) return Sl2Set{};
  std::uint32_t const p = x.front().modulus();
  if (y.front().modulus() != p) throw Error(ErrorCode::kModulusMismatch, "product of sets over different moduli");
  std::uint64_t const space = std::uint64_t{p} * p * p * p;
  if (space > (std::uint64_t{1} << 28)) {
    return product_set<Sl2Element>(x, y, op, work_cap);
  }
  std::vector<Sl2Element> left(x.begin(), x.end()), right(y.begin(), y.end());
  if (op == GroupOp::kLeftQuotient) {
    for (auto& g : left) g = sl2_inv(g);
  } else if (op == GroupOp::kRightQuotient) {
    for (auto& g : right) g = sl2_inv(g);
  }
  std::vector<bool> mark(space, false);
  std::vector<std::uint64_t> keys;
  for (Sl2Element const& u : left) {
    for (Sl2Element const& v : right) {
      std::uint64_t key = sl2_mul(u, v).key();
      if (!mark[key]) {
        mark[key] = true;
        keys.push_back(key);
      }
    }
  }
  std::sort(keys.begin(), keys.end());
  std::vector<Sl2Element> out;
  out.reserve(keys.size());
  for (std::uint64_t key : keys) out.push_back(Sl2Element::from_key(key, p));
  return Sl2Set::from_sorted_unique(std::move(out));
}

FrobeniusCheck frobenius_check(Sl2Set const& group, std::span<std::int64_t const> f1,
                               std::span<std::int64_t const> f2) {
  if (group.empty()) throw Error(ErrorCode::kBadArguments, "empty group");
  std::vector<mpz_class> g1, g2;
  mpz_class sum1 = 0, sum2 = 0, norm1 = 0, norm2 = 0;
  for (std::size_t i = 0; i < f1.size(); ++i) {
    g1.emplace_back(static_cast<long>(f1[i]));
    sum1 += g1.back();
    norm1 += g1.back() * g1.back();
  }
  for (std::size_t i = 0; i < f2.size(); ++i) {
    g2.emplace_back(static_cast<long>(f2[i]));
    sum2 += g2.back();
    norm2 += g2.back() * g2.back();
  }
  if (sum1 != 0 || sum2 != 0) throw Error(ErrorCode::kBadArguments, "functions must have zero mean");
  FrobeniusCheck out;
  out.lhs = convolution_energy<Sl2Element, mpz_class>(group, g1, g2);
  mpz_class const p = static_cast<unsigned long>(group.front().modulus());
  out.rhs = p * p * norm1 * norm2;
  out.holds = out.lhs <= out.rhs;
  return out;
}

ScalarSet product_set(ScalarSet const& x, ScalarSet const& y, ScalarOp op, std::uint64_t work_cap) {
  check_work(std::uint64_t{x.size()} * y.size(), work_cap);
  std::unordered_set<Scalar> seen;
  for (Scalar const& u : x) {
    for (Scalar const& v : y) {
      if (auto z = apply_op(op, u, v)) seen.insert(std::move(*z));
    }
  }
  return ScalarSet(std::vector<Scalar>(seen.begin(), seen.end()));
}

RepCounter<Scalar> rep_function(ScalarSet const& x, ScalarSet const& y, ScalarOp op, std::uint64_t work_cap) {
  check_work(std::uint64_t{x.size()} * y.size(), work_cap);
  RepCounter<Scalar> r;
  for (Scalar const& u : x) {
    for (Scalar const& v : y) {
      if (auto z = apply_op(op, u, v)) r.add(*z);
    }
  }
  return r;
}

mpz_class energy(ScalarSet const& x, ScalarSet const& y, ScalarOp op, unsigned k, std::uint64_t work_cap) {
  return rep_function(x, y, op, work_cap).moment(k);
}

std::unordered_map<Scalar, mpz_class> weighted_rep_function(RepCounter<Scalar> const& f, ScalarOp op) {
  if (op != ScalarOp::kDiv && op != ScalarOp::kMul) {
    throw Error(ErrorCode::kBadArguments, "weighted moments are multiplicative");
  }
  std::vector<std::pair<Scalar, std::uint64_t>> support;
  for (auto const& [key, value] : f.map()) {
    if (!key.is_zero()) support.emplace_back(key, value);
  }
  std::unordered_map<Scalar, mpz_class> w;
  mpz_class term;
  for (auto const& [u, fu] : support) {
    for (auto const& [v, fv] : support) {
      Scalar s = op == ScalarOp::kDiv ? u / v : u * v;
      term = static_cast<unsigned long>(fu);
      term *= static_cast<unsigned long>(fv);
      w[s] += term;
    }
  }
  return w;
}

mpz_class weighted_energy_moment(RepCounter<Scalar> const& f, ScalarOp op, unsigned k) {
  mpz_class sum = 0, term;
  for (auto const& [s, ws] : weighted_rep_function(f, op)) {
    mpz_pow_ui(term.get_mpz_t(), ws.get_mpz_t(), k);
    sum += term;
  }
  return sum;
}

}  // namespace sumprod
