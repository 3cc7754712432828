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

#include "sumprod/groups.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "sumprod/error.hpp"

namespace sumprod {

namespace {

std::uint32_t checked_sl2_modulus(PrimeField const& field) {
  if (field.p() > kMaxSl2Modulus) {
    throw Error(ErrorCode::kTooLarge, "SL2 modulus " + std::to_string(field.p()) + " exceeds 65521");
  }
  return static_cast<std::uint32_t>(field.p());
}

inline std::uint32_t mulm(std::uint32_t x, std::uint32_t y, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{x} * y % p);
}
inline std::uint32_t addm(std::uint32_t x, std::uint32_t y, std::uint32_t p) {
  std::uint32_t s = x + y;
  return s >= p ? s - p : s;
}
inline std::uint32_t negm(std::uint32_t x, std::uint32_t p) { return x == 0 ? 0 : p - x; }

}  // namespace

Sl2Element::Sl2Element(PrimeField const& field, std::int64_t a, std::int64_t b, std::int64_t c,
                       std::int64_t d)
    : a_(static_cast<std::uint32_t>(field.reduce(a))),
      b_(static_cast<std::uint32_t>(field.reduce(b))),
      c_(static_cast<std::uint32_t>(field.reduce(c))),
      d_(static_cast<std::uint32_t>(field.reduce(d))),
      p_(checked_sl2_modulus(field)) {
  std::uint64_t det = field.sub(field.mul(a_, d_), field.mul(b_, c_));
  if (det != 1) {
    throw Error(ErrorCode::kInvalidElement, "determinant of " + to_string() + " is " + std::to_string(det));
  }
}

Sl2Element Sl2Element::identity(PrimeField const& field) {
  return Sl2Element(1, 0, 0, 1, checked_sl2_modulus(field), Unchecked{});
}

Sl2Element Sl2Element::from_key(std::uint64_t key, std::uint32_t p) {
  std::uint32_t d = static_cast<std::uint32_t>(key % p);
  key /= p;
  std::uint32_t c = static_cast<std::uint32_t>(key % p);
  key /= p;
  std::uint32_t b = static_cast<std::uint32_t>(key % p);
  key /= p;
  return Sl2Element(static_cast<std::uint32_t>(key), b, c, d, p, Unchecked{});
}

bool Sl2Element::is_regular_semisimple() const noexcept {
  std::uint32_t t = trace();
  return t != 2 % p_ && t != p_ - 2;
}

std::string Sl2Element::to_string() const {
  return "(" + std::to_string(a_) + " " + std::to_string(b_) + "|" + std::to_string(c_) + " " +
         std::to_string(d_) + ")";
}

Sl2Element sl2_mul(Sl2Element const& g, Sl2Element const& h) {
  if (g.p_ != h.p_) {
    throw Error(ErrorCode::kModulusMismatch,
                "p=" + std::to_string(g.p_) + " vs p=" + std::to_string(h.p_));
  }
  std::uint64_t const p = g.p_;
  auto e = [p](std::uint32_t x1, std::uint32_t y1, std::uint32_t x2, std::uint32_t y2) {
    return static_cast<std::uint32_t>((std::uint64_t{x1} * y1 + std::uint64_t{x2} * y2) % p);
  };
  return Sl2Element(e(g.a_, h.a_, g.b_, h.c_), e(g.a_, h.b_, g.b_, h.d_), e(g.c_, h.a_, g.d_, h.c_),
                    e(g.c_, h.b_, g.d_, h.d_), g.p_, Sl2Element::Unchecked{});
}

Sl2Element sl2_inv(Sl2Element const& g) {
  return Sl2Element(g.d_, negm(g.b_, g.p_), negm(g.c_, g.p_), g.a_, g.p_, Sl2Element::Unchecked{});
}

Sl2Element sl2_negate(Sl2Element const& g) {
  std::uint32_t p = g.p_;
  return Sl2Element(negm(g.a_, p), negm(g.b_, p), negm(g.c_, p), negm(g.d_, p), p, Sl2Element::Unchecked{});
}

Sl2Element sl2_conjugate(Sl2Element const& h, Sl2Element const& g) {
  return sl2_mul(sl2_mul(h, g), sl2_inv(h));
}

Sl2Element sl2_unipotent(PrimeField const& field, std::int64_t t) { return Sl2Element(field, 1, t, 0, 1); }

Sl2Element sl2_weyl(PrimeField const& field) { return Sl2Element(field, 0, -1, 1, 0); }

Sl2Element sl2_diagonal(PrimeField const& field, std::int64_t x) {
  std::uint64_t r = field.reduce(x);
  return Sl2Element(field, static_cast<std::int64_t>(r), 0, 0, static_cast<std::int64_t>(field.inv(r)));
}

Sl2Set sl2_conjugacy_class(PrimeField const& field, std::uint64_t tau, bool include_central) {
  std::uint32_t const p = checked_sl2_modulus(field);
  tau %= p;
  std::vector<Sl2Element> out;
  for (std::uint32_t a = 0; a < p; ++a) {
    std::uint32_t d = static_cast<std::uint32_t>(field.sub(tau, a));
    // bc = ad - 1
    std::uint32_t bc = static_cast<std::uint32_t>(field.sub(field.mul(a, d), 1));
    if (bc != 0) {
      for (std::uint32_t b = 1; b < p; ++b) {
        std::uint32_t c = static_cast<std::uint32_t>(field.mul(bc, field.inv(b)));
        out.push_back(Sl2Element(field, a, b, c, d));
      }
    } else {
      for (std::uint32_t t = 0; t < p; ++t) {
        out.push_back(Sl2Element(field, a, t, 0, d));
        if (t != 0) out.push_back(Sl2Element(field, a, 0, t, d));
      }
    }
  }
  if (!include_central) {
    std::erase_if(out, [](Sl2Element const& g) { return g.is_central(); });
  }
  return Sl2Set(std::move(out));
}

Sl2Set enumerate_sl2(PrimeField const& field, std::size_t cap) {
  std::uint64_t const p = field.p();
  if (p > kMaxSl2Modulus || p * (p * p - 1) > cap) {
    throw Error(ErrorCode::kTooLarge, "|SL2(F" + std::to_string(p) + ")| = " +
                                          std::to_string(p * (p * p - 1)) + " exceeds cap " +
                                          std::to_string(cap));
  }
  std::vector<Sl2Element> out;
  out.reserve(p * (p * p - 1));
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t b = 0; b < p; ++b) {
      for (std::uint64_t c = 0; c < p; ++c) {
        if (a != 0) {
          std::uint64_t d = field.mul(field.add(1, field.mul(b, c)), field.inv(a));
          out.push_back(Sl2Element(field, a, b, c, d));
        } else if (field.mul(b, c) == p - 1) {
          for (std::uint64_t d = 0; d < p; ++d) out.push_back(Sl2Element(field, 0, b, c, d));
        }
      }
    }
  }
  return Sl2Set(std::move(out));
}

std::optional<Sl2Element> sl2_find_conjugator(Sl2Element const& x, Sl2Element const& y) {
  for (Sl2Element const& h : enumerate_sl2(x.field())) {
    if (sl2_conjugate(h, x) == y) return h;
  }
  return std::nullopt;
}

Sl2Set sl2_centralizer(Sl2Element const& g) {
  PrimeField const field = g.field();
  if (g.is_central()) return enumerate_sl2(field);
  // Non-scalar g: the matrices commuting with g are alpha + beta g.
  std::uint64_t const p = field.p();
  std::uint64_t const tau = g.trace();
  std::vector<Sl2Element> out;
  for (std::uint64_t alpha = 0; alpha < p; ++alpha) {
    for (std::uint64_t beta = 0; beta < p; ++beta) {
      std::uint64_t det = field.add(field.add(field.mul(alpha, alpha), field.mul(field.mul(alpha, beta), tau)),
                                    field.mul(beta, beta));
      if (det != 1) continue;
      out.push_back(Sl2Element(field, field.add(alpha, field.mul(beta, g.a())), field.mul(beta, g.b()),
                               field.mul(beta, g.c()), field.add(alpha, field.mul(beta, g.d()))));
    }
  }
  return Sl2Set(std::move(out));
}

TorusDescriptor sl2_maximal_torus(Sl2Element const& g) {
  if (!g.is_regular_semisimple()) {
    throw Error(ErrorCode::kNotRegularSemisimple, g.to_string() + " has trace +-2");
  }
  PrimeField const field = g.field();
  std::uint64_t const tau = g.trace();
  ResidueStatus disc = quadratic_residue_status(field.sub(field.mul(tau, tau), 4), field);
  Sl2Set torus = sl2_centralizer(g);
  std::size_t n = torus.size();
  return TorusDescriptor{g, std::move(torus),
                         disc.kind == ResidueKind::kSquare ? TorusKind::kSplit : TorusKind::kNonSplit, 2 * n};
}

Sl2Set sl2_normalizer(Sl2Set const& subgroup) {
  std::vector<Sl2Element> out;
  if (subgroup.empty()) return Sl2Set{};
  for (Sl2Element const& h : enumerate_sl2(subgroup.front().field())) {
    bool keeps = std::all_of(subgroup.begin(), subgroup.end(),
                             [&](Sl2Element const& t) { return subgroup.contains(sl2_conjugate(h, t)); });
    if (keeps) out.push_back(h);
  }
  return Sl2Set::from_sorted_unique(std::move(out));
}

Sl2Set sl2_line_points(LineGamma const& line) {
  PrimeField const field = line.basis.field();
  std::uint64_t const gamma = line.gamma % field.p();
  if (gamma == 0) throw Error(ErrorCode::kBadArguments, "gamma must be nonzero");
  std::uint64_t const ginv = field.inv(gamma);
  std::vector<Sl2Element> out;
  out.reserve(field.p());
  for (std::uint64_t t = 0; t < field.p(); ++t) {
    out.push_back(sl2_conjugate(line.basis, Sl2Element(field, gamma, t, 0, ginv)));
  }
  return Sl2Set(std::move(out));
}

std::vector<Sl2Element> sl2_borel_bases(PrimeField const& field) {
  std::vector<Sl2Element> out;
  out.reserve(field.p() + 1);
  for (std::uint64_t y = 0; y < field.p(); ++y) out.push_back(Sl2Element(field, 1, 0, y, 1));
  out.push_back(sl2_weyl(field));
  return out;
}

std::vector<LineGamma> sl2_all_lines(PrimeField const& field) {
  std::vector<LineGamma> out;
  for (Sl2Element const& h : sl2_borel_bases(field)) {
    for (std::uint32_t gamma = 1; gamma < field.p(); ++gamma) out.push_back(LineGamma{h, gamma});
  }
  return out;
}

bool sl2_on_line(Sl2Element const& g, LineGamma const& line) {
  Sl2Element x = sl2_mul(sl2_mul(sl2_inv(line.basis), g), line.basis);
  return x.c() == 0 && x.a() == line.gamma % g.modulus();
}

AffElement::AffElement(Scalar a, Scalar b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.modulus() != b_.modulus()) {
    throw Error(ErrorCode::kFieldMismatch, "affine map over " + a_.field().name() + " and " + b_.field().name());
  }
  if (a_.is_zero()) throw Error(ErrorCode::kInvalidElement, "affine map with a = 0");
}

AffElement AffElement::identity(Field const& field) {
  return AffElement(Scalar::from_int(1, field), Scalar::from_int(0, field), Unchecked{});
}

AffElement AffElement::from_ints(Field const& field, std::int64_t a, std::int64_t b) {
  return AffElement(Scalar::from_int(a, field), Scalar::from_int(b, field));
}

std::string AffElement::to_string() const { return "(" + a_.to_string() + "," + b_.to_string() + ")"; }

AffElement aff_mul(AffElement const& g, AffElement const& h) {
  if (g.a_.modulus() != h.a_.modulus()) {
    throw Error(ErrorCode::kFieldMismatch, g.field().name() + " vs " + h.field().name());
  }
  return AffElement(g.a_ * h.a_, g.a_ * h.b_ + g.b_, AffElement::Unchecked{});
}

AffElement aff_inv(AffElement const& g) {
  Scalar ainv = g.a_.inverse();
  return AffElement(ainv, -(ainv * g.b_), AffElement::Unchecked{});
}

AffSet aff_stabilizer(Field const& field, Scalar const& x) {
  PrimeField const pf = field.prime_field();
  Scalar const one = Scalar::from_int(1, field);
  std::vector<AffElement> out;
  for (std::uint64_t a = 1; a < pf.p(); ++a) {
    Scalar sa = Scalar::residue(static_cast<std::int64_t>(a), pf);
    out.emplace_back(sa, x * (one - sa));
  }
  return AffSet(std::move(out));
}

AffSet aff_unipotent(Field const& field) {
  PrimeField const pf = field.prime_field();
  std::vector<AffElement> out;
  for (std::uint64_t b = 0; b < pf.p(); ++b) out.push_back(AffElement::from_ints(field, 1, static_cast<std::int64_t>(b)));
  return AffSet(std::move(out));
}

Scalar aff_fixed_point(AffElement const& g) {
  if (g.a().is_one()) throw Error(ErrorCode::kBadArguments, "translations have no fixed point");
  return g.b() / (Scalar::from_int(1, g.field()) - g.a());
}

AffSet aff_centralizer(AffElement const& g) {
  if (g.is_identity()) return enumerate_aff(g.field());
  if (g.a().is_one()) return aff_unipotent(g.field());
  return aff_stabilizer(g.field(), aff_fixed_point(g));
}

AffSet enumerate_aff(Field const& field, std::size_t cap) {
  PrimeField const pf = field.prime_field();
  std::uint64_t const p = pf.p();
  if (p * (p - 1) > cap) {
    throw Error(ErrorCode::kTooLarge, "|Aff(F" + std::to_string(p) + ")| exceeds cap " + std::to_string(cap));
  }
  std::vector<AffElement> out;
  out.reserve(p * (p - 1));
  for (std::uint64_t a = 1; a < p; ++a) {
    for (std::uint64_t b = 0; b < p; ++b) {
      out.push_back(AffElement::from_ints(field, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)));
    }
  }
  return AffSet(std::move(out));
}

}  // namespace sumprod
