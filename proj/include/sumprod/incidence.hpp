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

// Exact incidence geometry in F^2 and F^3, F = F_p or Q. Everything is
// nested-loop or hash counting; the sets involved are desk-sized.

#ifndef SUMPROD_INCIDENCE_HPP_
#define SUMPROD_INCIDENCE_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sumprod/groups.hpp"
#include "sumprod/scalar.hpp"
#include "sumprod/setalgebra.hpp"

namespace sumprod {

struct PlanePoint {
  Scalar x;
  Scalar y;

  PlanePoint(Scalar px, Scalar py);
  static PlanePoint from_ints(Field const& field, std::int64_t x, std::int64_t y);

  std::string to_string() const { return x.to_string() + " " + y.to_string(); }
  friend bool operator==(PlanePoint const&, PlanePoint const&) = default;
  friend bool operator<(PlanePoint const& u, PlanePoint const& v) { return u.x == v.x ? u.y < v.y : u.x < v.x; }
};

// y = slope x + intercept, or x = x0. The representation is unique.
class PlaneLine {
 public:
  static PlaneLine non_vertical(Scalar slope, Scalar intercept);
  static PlaneLine vertical(Scalar x0);
  // The line y = a x + b of an affine map.
  static PlaneLine from_affine(AffElement const& g) { return non_vertical(g.a(), g.b()); }
  // Throws Error(kBadArguments) for p == q.
  static PlaneLine through(PlanePoint const& p, PlanePoint const& q);

  bool is_vertical() const noexcept { return vertical_; }
  Scalar const& slope() const { return first_; }      // non-vertical only
  Scalar const& intercept() const { return second_; }  // non-vertical only
  Scalar const& x0() const { return first_; }          // vertical only

  bool contains(PlanePoint const& q) const;
  // Throws Error(kBadArguments) for vertical lines and for slope 0.
  AffElement to_affine() const;

  // "a b" or "V x0".
  std::string to_string() const;

  friend bool operator==(PlaneLine const&, PlaneLine const&) = default;
  friend bool operator<(PlaneLine const& l, PlaneLine const& m);

 private:
  PlaneLine(bool vertical, Scalar first, Scalar second)
      : vertical_(vertical), first_(std::move(first)), second_(std::move(second)) {}

  bool vertical_;
  Scalar first_;
  Scalar second_;
};

struct Direction {
  bool infinite = false;
  Scalar slope;  // meaningful when !infinite

  static Direction finite(Scalar m) { return Direction{false, std::move(m)}; }
  static Direction vertical() { return Direction{true, Scalar()}; }

  std::string to_string() const { return infinite ? "inf" : slope.to_string(); }
  friend bool operator==(Direction const& u, Direction const& v) {
    return u.infinite == v.infinite && (u.infinite || u.slope == v.slope);
  }
  friend bool operator<(Direction const& u, Direction const& v) {
    if (u.infinite != v.infinite) return v.infinite;
    return !u.infinite && u.slope < v.slope;
  }
};

struct SpacePoint {
  Scalar x, y, z;
  friend bool operator==(SpacePoint const&, SpacePoint const&) = default;
  friend bool operator<(SpacePoint const& u, SpacePoint const& v) {
    if (!(u.x == v.x)) return u.x < v.x;
    if (!(u.y == v.y)) return u.y < v.y;
    return u.z < v.z;
  }
};

// alpha x + beta y + gamma z = delta, scaled so the first nonzero
// coefficient is 1.
class SpacePlane {
 public:
  // Throws Error(kBadArguments) when (alpha, beta, gamma) = 0.
  SpacePlane(Scalar alpha, Scalar beta, Scalar gamma, Scalar delta);

  Scalar const& alpha() const { return c_[0]; }
  Scalar const& beta() const { return c_[1]; }
  Scalar const& gamma() const { return c_[2]; }
  Scalar const& delta() const { return c_[3]; }

  bool contains(SpacePoint const& q) const;

  friend bool operator==(SpacePlane const&, SpacePlane const&) = default;
  friend bool operator<(SpacePlane const& u, SpacePlane const& v);

 private:
  std::vector<Scalar> c_;
};

using PointSet = ElementSet<PlanePoint>;
using LineSet = ElementSet<PlaneLine>;

// All p^2 points of F_p^2, and all p^2 + p lines.
PointSet all_points(Field const& field);
LineSet all_lines(Field const& field, bool include_vertical = true);

// Throws Error(kFieldMismatch) when points and lines disagree on the field.
std::uint64_t count_incidences_lines(PointSet const& points, LineSet const& lines);

bool is_collinear(std::span<PlanePoint const> points);

struct DirectionResult {
  std::vector<Direction> directions;  // ascending, infinity last
  bool collinear = false;
};

// Slopes of lines through distinct pairs. Throws Error(kTooFewPoints).
DirectionResult directions(PointSet const& points);

// L(P). Throws Error(kTooFewPoints).
LineSet determined_lines(PointSet const& points);

struct RichGroup {
  unsigned k;                             // lines with delta 2^k <= richness < delta 2^(k+1)
  std::vector<PlaneLine> lines;           // ascending
  std::vector<std::uint64_t> richness;    // parallel to lines
};

// Lines of L carrying at least delta points of P, by dyadic richness class.
// Throws Error(kBadArguments) for delta < 1.
std::vector<RichGroup> rich_lines(PointSet const& points, LineSet const& lines, std::uint64_t delta);

// Q(D) for the grid D x D under two multiplicity conventions: ordered
// 4-tuples of pairwise distinct collinear points, and Sum over lines carrying
// at least two grid points of |l n (D x D)|^4.
struct QuadrupleCount {
  mpz_class distinct;
  mpz_class with_repeats;
};

QuadrupleCount collinear_quadruples(ScalarSet const& d);

struct PlaneIncidence {
  std::uint64_t count = 0;
  std::uint64_t max_collinear = 0;
};

PlaneIncidence count_incidences_planes(std::span<SpacePoint const> points, std::span<SpacePlane const> planes);

// Maximum number of collinear points in F^3 (0 for empty input).
std::uint64_t max_collinear_points(std::span<SpacePoint const> points);

// |I - |P||L|/p| <= sqrt(p |P| |L|), squared on both sides.
struct VinhResult {
  std::uint64_t incidences = 0;
  mpq_class deviation;     // |I - |P||L|/p|
  mpq_class deviation_sq;  // lhs^2
  mpz_class bound_sq;      // p |P| |L|
  bool holds = false;
};

// Throws Error(kFieldMismatch) over Q.
VinhResult vinh_deviation(PointSet const& points, LineSet const& lines);

// |L(P)| >= eps^2 (1 - eps) / (2 + 2 eps) (p + 1)^2 for |P| > (1 + eps)(p + 1).
struct AlonResult {
  bool applicable = false;
  std::size_t determined = 0;
  mpq_class bound;
  bool holds = false;
};

AlonResult alon_beck_check(PointSet const& points, mpq_class const& eps);

// Main terms of the incidence bounds whose constants are not pinned; used
// only in scaling reports.
double szemeredi_trotter_main_term(std::size_t points, std::size_t lines);
double stevens_de_zeeuw_main_term(std::size_t a, std::size_t b, std::size_t lines);

}  // namespace sumprod

template <>
struct std::hash<sumprod::PlanePoint> {
  std::size_t operator()(sumprod::PlanePoint const& q) const noexcept {
    return q.x.hash() * 0x9E3779B97F4A7C15ull ^ q.y.hash();
  }
};

template <>
struct std::hash<sumprod::PlaneLine> {
  std::size_t operator()(sumprod::PlaneLine const& l) const noexcept {
    if (l.is_vertical()) return l.x0().hash() ^ 0x5bd1e995u;
    return l.slope().hash() * 0x9E3779B97F4A7C15ull ^ l.intercept().hash();
  }
};

#endif  // SUMPROD_INCIDENCE_HPP_
