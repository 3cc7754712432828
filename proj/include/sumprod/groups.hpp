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

// Element algebra of SL2(F_p) and Aff(F), together with the subgroup
// geometry used by the growth experiments: traces, conjugacy classes,
// maximal tori, Borel subgroups and the lines l_gamma inside them.

#ifndef SUMPROD_GROUPS_HPP_
#define SUMPROD_GROUPS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sumprod/element_set.hpp"
#include "sumprod/scalar.hpp"

namespace sumprod {

// SL2 moduli must satisfy p^4 < 2^64 so that packed keys fit one word.
inline constexpr std::uint64_t kMaxSl2Modulus = 65521;
inline constexpr std::size_t kDefaultGroupCap = 250000;

class Sl2Element {
 public:
  // Entries are reduced mod p. Throws Error(kInvalidElement) unless ad - bc = 1.
  Sl2Element(PrimeField const& field, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static Sl2Element identity(PrimeField const& field);
  static Sl2Element from_key(std::uint64_t key, std::uint32_t p);

  std::uint32_t a() const noexcept { return a_; }
  std::uint32_t b() const noexcept { return b_; }
  std::uint32_t c() const noexcept { return c_; }
  std::uint32_t d() const noexcept { return d_; }
  std::uint32_t modulus() const noexcept { return p_; }
  PrimeField field() const { return PrimeField(p_); }

  std::uint32_t trace() const noexcept { return static_cast<std::uint32_t>((std::uint64_t{a_} + d_) % p_); }
  bool is_identity() const noexcept { return a_ == 1 && d_ == 1 && b_ == 0 && c_ == 0; }
  // +1 or -1.
  bool is_central() const noexcept { return b_ == 0 && c_ == 0 && a_ == d_; }
  // Trace outside {2, -2}.
  bool is_regular_semisimple() const noexcept;

  // Base-p digits (a, b, c, d), most significant first.
  std::uint64_t key() const noexcept {
    std::uint64_t const p = p_;
    return ((std::uint64_t{a_} * p + b_) * p + c_) * p + d_;
  }

  std::string to_string() const;

  friend bool operator==(Sl2Element const& x, Sl2Element const& y) noexcept {
    return x.p_ == y.p_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator<(Sl2Element const& x, Sl2Element const& y) noexcept {
    return x.p_ != y.p_ ? x.p_ < y.p_ : x.key() < y.key();
  }

 private:
  struct Unchecked {};
  Sl2Element(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d, std::uint32_t p, Unchecked)
      : a_(a), b_(b), c_(c), d_(d), p_(p) {}

  friend Sl2Element sl2_mul(Sl2Element const& g, Sl2Element const& h);
  friend Sl2Element sl2_inv(Sl2Element const& g);
  friend Sl2Element sl2_negate(Sl2Element const& g);

  std::uint32_t a_, b_, c_, d_, p_;
};

using Sl2Set = ElementSet<Sl2Element>;

// Throws Error(kModulusMismatch) for different moduli.
Sl2Element sl2_mul(Sl2Element const& g, Sl2Element const& h);
Sl2Element sl2_inv(Sl2Element const& g);
Sl2Element sl2_negate(Sl2Element const& g);
Sl2Element sl2_conjugate(Sl2Element const& h, Sl2Element const& g);  // h g h^-1

// Standard elements: T = (1 1|0 1), S = (0 -1|1 0), diag(x, x^-1).
Sl2Element sl2_unipotent(PrimeField const& field, std::int64_t t = 1);
Sl2Element sl2_weyl(PrimeField const& field);
Sl2Element sl2_diagonal(PrimeField const& field, std::int64_t x);

// All elements of trace tau. For tau = +-2 this is the whole cone +-C,
// including +-1, unless include_central is false.
Sl2Set sl2_conjugacy_class(PrimeField const& field, std::uint64_t tau, bool include_central = true);

// Explicit conjugator search: some h with h x h^-1 = y, if one exists.
std::optional<Sl2Element> sl2_find_conjugator(Sl2Element const& x, Sl2Element const& y);

enum class TorusKind { kSplit, kNonSplit };

struct TorusDescriptor {
  Sl2Element base;
  Sl2Set elements;
  TorusKind kind;
  std::size_t normalizer_size;
};

// Centralizer of a regular semisimple g, which is its maximal torus.
// Throws Error(kNotRegularSemisimple) for trace +-2.
TorusDescriptor sl2_maximal_torus(Sl2Element const& g);

// Centralizer of an arbitrary element, by solving xg = gx.
Sl2Set sl2_centralizer(Sl2Element const& g);

// Normalizer of a subgroup, by exhaustive conjugation over the group.
Sl2Set sl2_normalizer(Sl2Set const& subgroup);

// The line h {(gamma t | 0 gamma^-1) : t in F} h^-1.
struct LineGamma {
  Sl2Element basis;
  std::uint32_t gamma;
};

// Throws Error(kBadArguments) for gamma = 0.
Sl2Set sl2_line_points(LineGamma const& line);

// One conjugator per Borel subgroup (p + 1 in total): h maps e1 to a
// representative of each projective point, so h B0 h^-1 runs over all Borels.
std::vector<Sl2Element> sl2_borel_bases(PrimeField const& field);

// Every line l_gamma in every basis, (p + 1)(p - 1) of them.
std::vector<LineGamma> sl2_all_lines(PrimeField const& field);

// Whether g lies on l_gamma in the given basis: h^-1 g h = (gamma * | 0 gamma^-1).
bool sl2_on_line(Sl2Element const& g, LineGamma const& line);

// Throws Error(kTooLarge) when p (p^2 - 1) exceeds cap.
Sl2Set enumerate_sl2(PrimeField const& field, std::size_t cap = kDefaultGroupCap);

class AffElement {
 public:
  // The map x -> a x + b. Throws Error(kInvalidElement) for a = 0 and
  // Error(kFieldMismatch) when a, b come from different fields.
  AffElement(Scalar a, Scalar b);

  static AffElement identity(Field const& field);
  static AffElement from_ints(Field const& field, std::int64_t a, std::int64_t b);

  Scalar const& a() const noexcept { return a_; }
  Scalar const& b() const noexcept { return b_; }
  Field field() const { return a_.field(); }

  bool is_identity() const { return a_.is_one() && b_.is_zero(); }
  Scalar apply(Scalar const& x) const { return a_ * x + b_; }

  std::string to_string() const;

  friend bool operator==(AffElement const& x, AffElement const& y) = default;
  friend bool operator<(AffElement const& x, AffElement const& y) {
    if (x.a_ == y.a_) return x.b_ < y.b_;
    return x.a_ < y.a_;
  }

  std::size_t hash() const noexcept { return a_.hash() * 0x9E3779B97F4A7C15ull ^ b_.hash(); }

 private:
  friend AffElement aff_mul(AffElement const& g, AffElement const& h);
  friend AffElement aff_inv(AffElement const& g);
  struct Unchecked {};
  AffElement(Scalar a, Scalar b, Unchecked) : a_(std::move(a)), b_(std::move(b)) {}

  Scalar a_;
  Scalar b_;
};

using AffSet = ElementSet<AffElement>;

// (a, b)(c, d) = (ac, ad + b). Throws Error(kFieldMismatch).
AffElement aff_mul(AffElement const& g, AffElement const& h);
// (a^-1, -a^-1 b).
AffElement aff_inv(AffElement const& g);

// {(a, x(1 - a)) : a in F*}. Needs a prime field.
AffSet aff_stabilizer(Field const& field, Scalar const& x);
// U0 = {(1, b)}; T0 = Stab(0) = {(a, 0)}. Need a prime field.
AffSet aff_unipotent(Field const& field);
// Centralizer of g != 1: Stab(b / (1 - a)) when a != 1, U0 when a = 1.
// The identity maps to the whole group. Needs a prime field.
AffSet aff_centralizer(AffElement const& g);
// Fixed point b / (1 - a) of a non-translation.
Scalar aff_fixed_point(AffElement const& g);

// Throws Error(kTooLarge) when p (p - 1) exceeds cap, Error(kFieldMismatch) on Q.
AffSet enumerate_aff(Field const& field, std::size_t cap = kDefaultGroupCap);

// Uniform group interface used by the generic set algorithms.
inline Sl2Element group_mul(Sl2Element const& g, Sl2Element const& h) { return sl2_mul(g, h); }
inline Sl2Element group_inv(Sl2Element const& g) { return sl2_inv(g); }
inline Sl2Element group_identity_like(Sl2Element const& g) { return Sl2Element::identity(g.field()); }
inline AffElement group_mul(AffElement const& g, AffElement const& h) { return aff_mul(g, h); }
inline AffElement group_inv(AffElement const& g) { return aff_inv(g); }
inline AffElement group_identity_like(AffElement const& g) { return AffElement::identity(g.field()); }

}  // namespace sumprod

template <>
struct std::hash<sumprod::Sl2Element> {
  std::size_t operator()(sumprod::Sl2Element const& g) const noexcept {
    return std::hash<std::uint64_t>{}(g.key() * 0x9E3779B97F4A7C15ull + g.modulus());
  }
};

template <>
struct std::hash<sumprod::AffElement> {
  std::size_t operator()(sumprod::AffElement const& g) const noexcept { return g.hash(); }
};

#endif  // SUMPROD_GROUPS_HPP_
