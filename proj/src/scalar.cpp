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

#include "sumprod/scalar.hpp"

#include <array>
#include <charconv>
#include <string>

#include "sumprod/error.hpp"

namespace sumprod {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

void require_same(Scalar const& x, Scalar const& y) {
  if (x.modulus() != y.modulus()) {
    throw Error(ErrorCode::kFieldMismatch,
                "scalars from " + x.field().name() + " and " + y.field().name());
  }
}

// x must be a unit mod m. Signed 128-bit keeps clear of overflow near 2^61.
std::uint64_t invmod(std::uint64_t x, std::uint64_t m) {
  __int128 r0 = m, r1 = x, t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t0 < 0) t0 += m;
  return static_cast<std::uint64_t>(t0);
}

std::uint64_t smaller_root(std::uint64_t r, std::uint64_t p) {
  return r <= p - r ? r : p - r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit n with these witnesses.
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= kMaxModulus || !is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not an odd prime below 2^61");
  }
}

std::uint64_t PrimeField::reduce(std::int64_t x) const noexcept {
  auto const m = static_cast<std::int64_t>(p_);
  std::int64_t r = x % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::add(std::uint64_t x, std::uint64_t y) const noexcept {
  std::uint64_t s = x + y;
  return s >= p_ ? s - p_ : s;
}

std::uint64_t PrimeField::sub(std::uint64_t x, std::uint64_t y) const noexcept {
  return x >= y ? x - y : x + p_ - y;
}

std::uint64_t PrimeField::mul(std::uint64_t x, std::uint64_t y) const noexcept {
  return mulmod(x, y, p_);
}

std::uint64_t PrimeField::neg(std::uint64_t x) const noexcept { return x == 0 ? 0 : p_ - x; }

std::uint64_t PrimeField::inv(std::uint64_t x) const {
  if (x % p_ == 0) throw Error(ErrorCode::kZeroInverse, "0 has no inverse mod " + std::to_string(p_));
  return invmod(x % p_, p_);
}

std::uint64_t PrimeField::pow(std::uint64_t x, std::uint64_t e) const noexcept {
  return powmod(x, e, p_);
}

PrimeField Field::prime_field() const {
  if (p_ == 0) throw Error(ErrorCode::kFieldMismatch, "Q is not a prime field");
  return PrimeField(p_);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "q" || text == "0") return Field::rationals();
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParse, "bad field '" + std::string(text) + "'");
  }
  return Field::prime(p);
}

Scalar::Scalar(mpq_class q) : v_(std::move(q)), modulus_(0) {
  std::get<mpq_class>(v_).canonicalize();
}

Scalar Scalar::residue(std::int64_t value, PrimeField const& field) {
  return Scalar(field.reduce(value), field.p());
}

Scalar Scalar::from_int(std::int64_t value, Field const& field) {
  if (field.is_rational()) return Scalar(mpq_class(static_cast<long>(value)));
  return residue(value, field.prime_field());
}

Scalar Scalar::rational(mpq_class value) { return Scalar(std::move(value)); }

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::kZeroInverse, "zero denominator");
  return Scalar(mpq_class(num, den));
}

Field Scalar::field() const { return Field(modulus_, Field::Unchecked{}); }

bool Scalar::is_zero() const {
  return is_residue() ? residue_value() == 0 : sgn(rational_value()) == 0;
}

bool Scalar::is_one() const {
  return is_residue() ? residue_value() == 1 : rational_value() == 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kZeroInverse, "inverse of zero");
  if (is_residue()) return Scalar(invmod(residue_value(), modulus_), modulus_);
  return Scalar(mpq_class(1) / rational_value());
}

Scalar Scalar::operator-() const {
  if (is_residue()) return Scalar(residue_value() == 0 ? 0 : modulus_ - residue_value(), modulus_);
  return Scalar(mpq_class(-rational_value()));
}

Scalar operator+(Scalar const& x, Scalar const& y) {
  require_same(x, y);
  if (x.is_residue()) {
    std::uint64_t s = x.residue_value() + y.residue_value();
    return Scalar(s >= x.modulus_ ? s - x.modulus_ : s, x.modulus_);
  }
  return Scalar(mpq_class(x.rational_value() + y.rational_value()));
}

Scalar operator-(Scalar const& x, Scalar const& y) {
  require_same(x, y);
  if (x.is_residue()) {
    std::uint64_t a = x.residue_value(), b = y.residue_value();
    return Scalar(a >= b ? a - b : a + x.modulus_ - b, x.modulus_);
  }
  return Scalar(mpq_class(x.rational_value() - y.rational_value()));
}

Scalar operator*(Scalar const& x, Scalar const& y) {
  require_same(x, y);
  if (x.is_residue()) return Scalar(mulmod(x.residue_value(), y.residue_value(), x.modulus_), x.modulus_);
  return Scalar(mpq_class(x.rational_value() * y.rational_value()));
}

Scalar operator/(Scalar const& x, Scalar const& y) {
  require_same(x, y);
  return x * y.inverse();
}

bool operator==(Scalar const& x, Scalar const& y) {
  require_same(x, y);
  if (x.is_residue()) return x.residue_value() == y.residue_value();
  return x.rational_value() == y.rational_value();
}

bool operator<(Scalar const& x, Scalar const& y) {
  require_same(x, y);
  if (x.is_residue()) return x.residue_value() < y.residue_value();
  return x.rational_value() < y.rational_value();
}

std::size_t Scalar::hash() const noexcept {
  if (is_residue()) return std::hash<std::uint64_t>{}(residue_value() * 0x9E3779B97F4A7C15ull + modulus_);
  mpq_class const& q = rational_value();
  std::size_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](mpz_srcptr z) {
    h ^= static_cast<std::size_t>(mpz_sgn(z) + 1);
    h *= 0x100000001b3ull;
    for (std::size_t i = 0; i < mpz_size(z); ++i) {
      h ^= static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i)));
      h *= 0x100000001b3ull;
    }
  };
  mix(q.get_num_mpz_t());
  mix(q.get_den_mpz_t());
  return h;
}

std::string Scalar::to_string() const {
  if (is_residue()) return std::to_string(residue_value());
  return rational_value().get_str();
}

Scalar Scalar::parse(std::string_view text, Field const& field) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::kParse, "empty scalar");
  if (field.is_rational()) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error(ErrorCode::kParse, "bad rational '" + s + "'");
    if (q.get_den() == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + s + "'");
    return Scalar(std::move(q));
  }
  if (s.find('/') != std::string::npos) {
    throw Error(ErrorCode::kParse, "rational '" + s + "' given for " + field.name());
  }
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParse, "bad residue '" + s + "'");
  }
  return residue(v, field.prime_field());
}

Scalar fp_inv(Scalar const& x) {
  if (!x.is_residue()) throw Error(ErrorCode::kFieldMismatch, "fp_inv needs a residue");
  return x.inverse();
}

std::optional<std::uint64_t> sqrt_by_scan(std::uint64_t x, PrimeField const& field) {
  std::uint64_t const p = field.p();
  x %= p;
  for (std::uint64_t r = 0; r <= p / 2; ++r) {
    if (field.mul(r, r) == x) return r;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> sqrt_tonelli_shanks(std::uint64_t x, PrimeField const& field) {
  std::uint64_t const p = field.p();
  x %= p;
  if (x == 0) return 0;
  if (field.pow(x, (p - 1) / 2) != 1) return std::nullopt;
  std::uint64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (field.pow(z, (p - 1) / 2) != p - 1) ++z;
  std::uint64_t m = static_cast<std::uint64_t>(s);
  std::uint64_t c = field.pow(z, q);
  std::uint64_t t = field.pow(x, q);
  std::uint64_t r = field.pow(x, (q + 1) / 2);
  while (t != 1) {
    std::uint64_t i = 0, t2 = t;
    while (t2 != 1) {
      t2 = field.mul(t2, t2);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = field.mul(b, b);
    m = i;
    c = field.mul(b, b);
    t = field.mul(t, c);
    r = field.mul(r, b);
  }
  return smaller_root(r, p);
}

ResidueStatus quadratic_residue_status(std::uint64_t x, PrimeField const& field) {
  x %= field.p();
  if (x == 0) return {ResidueKind::kZero, std::nullopt};
  auto root = field.p() <= 10000 ? sqrt_by_scan(x, field) : sqrt_tonelli_shanks(x, field);
  if (!root) return {ResidueKind::kNonSquare, std::nullopt};
  return {ResidueKind::kSquare, root};
}

ResidueStatus quadratic_residue_status(Scalar const& x) {
  if (!x.is_residue()) throw Error(ErrorCode::kFieldMismatch, "quadratic residue test needs F_p");
  return quadratic_residue_status(x.residue_value(), PrimeField(x.modulus()));
}

}  // namespace sumprod
