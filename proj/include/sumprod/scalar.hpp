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

// Exact scalars: residues modulo an odd prime, and rationals standing in for
// characteristic zero. Both live behind one value type, Scalar, which refuses
// to combine values from different fields.

#ifndef SUMPROD_SCALAR_HPP_
#define SUMPROD_SCALAR_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace sumprod {

// Largest admissible prime modulus; residues must pack into 61 bits.
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 61);

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  // Throws Error(kNotPrime) unless p is an odd prime below kMaxModulus.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }

  std::uint64_t reduce(std::int64_t x) const noexcept;
  std::uint64_t add(std::uint64_t x, std::uint64_t y) const noexcept;
  std::uint64_t sub(std::uint64_t x, std::uint64_t y) const noexcept;
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const noexcept;
  std::uint64_t neg(std::uint64_t x) const noexcept;
  // Throws Error(kZeroInverse) for x == 0.
  std::uint64_t inv(std::uint64_t x) const;
  std::uint64_t pow(std::uint64_t x, std::uint64_t e) const noexcept;

  friend bool operator==(PrimeField const&, PrimeField const&) = default;

 private:
  std::uint64_t p_;
};

// A field descriptor: either F_p or Q. modulus() == 0 denotes Q.
class Field {
 public:
  static Field rationals() noexcept { return Field(); }
  static Field prime(std::uint64_t p) { return Field(PrimeField(p)); }

  Field() noexcept = default;
  Field(PrimeField f) noexcept : p_(f.p()) {}  // NOLINT(runtime/explicit)

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime() const noexcept { return p_ != 0; }
  std::uint64_t modulus() const noexcept { return p_; }
  // Throws Error(kFieldMismatch) on Q.
  PrimeField prime_field() const;

  std::string name() const;
  // Accepts "Q", "0" or a decimal prime.
  static Field parse(std::string_view text);

  friend bool operator==(Field const&, Field const&) = default;

 private:
  friend class Scalar;
  struct Unchecked {};
  Field(std::uint64_t p, Unchecked) noexcept : p_(p) {}

  std::uint64_t p_ = 0;
};

class Scalar {
 public:
  // Zero of Q.
  Scalar() = default;

  static Scalar residue(std::int64_t value, PrimeField const& field);
  static Scalar from_int(std::int64_t value, Field const& field);
  static Scalar rational(mpq_class value);
  static Scalar rational(long num, long den);

  bool is_residue() const noexcept { return modulus_ != 0; }
  bool is_rational() const noexcept { return modulus_ == 0; }
  Field field() const;
  std::uint64_t modulus() const noexcept { return modulus_; }

  // Residue value in [0, p). Only valid for residues.
  std::uint64_t residue_value() const { return std::get<std::uint64_t>(v_); }
  // Normalized rational. Only valid for rationals.
  mpq_class const& rational_value() const { return std::get<mpq_class>(v_); }

  bool is_zero() const;
  bool is_one() const;

  // Throws Error(kZeroInverse) on zero.
  Scalar inverse() const;

  Scalar operator-() const;
  friend Scalar operator+(Scalar const& x, Scalar const& y);
  friend Scalar operator-(Scalar const& x, Scalar const& y);
  friend Scalar operator*(Scalar const& x, Scalar const& y);
  // Throws Error(kZeroInverse) when y is zero.
  friend Scalar operator/(Scalar const& x, Scalar const& y);

  // Mixed-field comparisons throw Error(kFieldMismatch).
  friend bool operator==(Scalar const& x, Scalar const& y);
  // Total order within one field: residues by value, rationals numerically.
  friend bool operator<(Scalar const& x, Scalar const& y);

  std::size_t hash() const noexcept;

  // "r" for residues, "n/m" (or "n" when m == 1) for rationals.
  std::string to_string() const;
  static Scalar parse(std::string_view text, Field const& field);

 private:
  Scalar(std::uint64_t value, std::uint64_t modulus) : v_(value), modulus_(modulus) {}
  explicit Scalar(mpq_class q);

  std::variant<mpq_class, std::uint64_t> v_;
  std::uint64_t modulus_ = 0;
};

// Throws Error(kZeroInverse) on zero; throws Error(kFieldMismatch) on Q.
Scalar fp_inv(Scalar const& x);

enum class ResidueKind { kZero, kSquare, kNonSquare };

struct ResidueStatus {
  ResidueKind kind;
  // For kSquare: the root r with r <= p - r.
  std::optional<std::uint64_t> root;

  friend bool operator==(ResidueStatus const&, ResidueStatus const&) = default;
};

// Square test with root extraction. Exhaustive scan below 10^4,
// Tonelli-Shanks above; both honour the same contract.
ResidueStatus quadratic_residue_status(Scalar const& x);
ResidueStatus quadratic_residue_status(std::uint64_t x, PrimeField const& field);
// Exposed for cross-checking the two routes.
std::optional<std::uint64_t> sqrt_by_scan(std::uint64_t x, PrimeField const& field);
std::optional<std::uint64_t> sqrt_tonelli_shanks(std::uint64_t x, PrimeField const& field);

}  // namespace sumprod

template <>
struct std::hash<sumprod::Scalar> {
  std::size_t operator()(sumprod::Scalar const& s) const noexcept { return s.hash(); }
};

#endif  // SUMPROD_SCALAR_HPP_
