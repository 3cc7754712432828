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

#include "sumprod/incidence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "sumprod/error.hpp"

namespace sumprod {

namespace {

void require_field(Scalar const& u, Scalar const& v) {
  if (u.modulus() != v.modulus()) {
    throw Error(ErrorCode::kFieldMismatch, u.field().name() + " vs " + v.field().name());
  }
}

mpz_class pow4(std::uint64_t n) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), n, 4);
  return out;
}

}  // namespace

PlanePoint::PlanePoint(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) { require_field(x, y); }

PlanePoint PlanePoint::from_ints(Field const& field, std::int64_t x, std::int64_t y) {
  return PlanePoint(Scalar::from_int(x, field), Scalar::from_int(y, field));
}

PlaneLine PlaneLine::non_vertical(Scalar slope, Scalar intercept) {
  require_field(slope, intercept);
  return PlaneLine(false, std::move(slope), std::move(intercept));
}

PlaneLine PlaneLine::vertical(Scalar x0) {
  Scalar zero = Scalar::from_int(0, x0.field());
  return PlaneLine(true, std::move(x0), std::move(zero));
}

PlaneLine PlaneLine::through(PlanePoint const& p, PlanePoint const& q) {
  if (p == q) throw Error(ErrorCode::kBadArguments, "a line needs two distinct points");
  if (p.x == q.x) return vertical(p.x);
  Scalar slope = (q.y - p.y) / (q.x - p.x);
  Scalar intercept = p.y - slope * p.x;
  return non_vertical(std::move(slope), std::move(intercept));
}

bool PlaneLine::contains(PlanePoint const& q) const {
  if (vertical_) return q.x == first_;
  return q.y == first_ * q.x + second_;
}

AffElement PlaneLine::to_affine() const {
  if (vertical_) throw Error(ErrorCode::kBadArguments, "vertical lines are not affine maps");
  if (first_.is_zero()) throw Error(ErrorCode::kBadArguments, "horizontal lines are not invertible maps");
  return AffElement(first_, second_);
}

std::string PlaneLine::to_string() const {
  if (vertical_) return "V " + first_.to_string();
  return first_.to_string() + " " + second_.to_string();
}

bool operator<(PlaneLine const& l, PlaneLine const& m) {
  if (l.vertical_ != m.vertical_) return m.vertical_;
  if (!(l.first_ == m.first_)) return l.first_ < m.first_;
  return l.second_ < m.second_;
}

SpacePlane::SpacePlane(Scalar alpha, Scalar beta, Scalar gamma, Scalar delta)
    : c_{std::move(alpha), std::move(beta), std::move(gamma), std::move(delta)} {
  for (int i = 1; i < 4; ++i) require_field(c_[0], c_[i]);
  int lead = -1;
  for (int i = 0; i < 3; ++i) {
    if (!c_[i].is_zero()) {
      lead = i;
      break;
    }
  }
  if (lead < 0) throw Error(ErrorCode::kBadArguments, "plane with zero normal");
  Scalar const inv = c_[lead].inverse();
  for (auto& v : c_) v = v * inv;
}

bool SpacePlane::contains(SpacePoint const& q) const {
  return c_[0] * q.x + c_[1] * q.y + c_[2] * q.z == c_[3];
}

bool operator<(SpacePlane const& u, SpacePlane const& v) {
  for (int i = 0; i < 4; ++i) {
    if (!(u.c_[i] == v.c_[i])) return u.c_[i] < v.c_[i];
  }
  return false;
}

PointSet all_points(Field const& field) {
  std::uint64_t const p = field.prime_field().p();
  std::vector<PlanePoint> out;
  out.reserve(p * p);
  for (std::uint64_t x = 0; x < p; ++x) {
    for (std::uint64_t y = 0; y < p; ++y) {
      out.push_back(PlanePoint::from_ints(field, static_cast<std::int64_t>(x), static_cast<std::int64_t>(y)));
    }
  }
  return PointSet(std::move(out));
}

LineSet all_lines(Field const& field, bool include_vertical) {
  std::uint64_t const p = field.prime_field().p();
  std::vector<PlaneLine> out;
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t b = 0; b < p; ++b) {
      out.push_back(PlaneLine::non_vertical(Scalar::from_int(static_cast<std::int64_t>(a), field),
                                            Scalar::from_int(static_cast<std::int64_t>(b), field)));
    }
    if (include_vertical) out.push_back(PlaneLine::vertical(Scalar::from_int(static_cast<std::int64_t>(a), field)));
  }
  return LineSet(std::move(out));
}

std::uint64_t count_incidences_lines(PointSet const& points, LineSet const& lines) {
  if (!points.empty() && !lines.empty()) require_field(points.front().x, lines.front().slope());
  std::uint64_t count = 0;
  for (PlaneLine const& l : lines) {
    for (PlanePoint const& q : points) count += l.contains(q) ? 1 : 0;
  }
  return count;
}

bool is_collinear(std::span<PlanePoint const> points) {
  if (points.size() <= 2) return true;
  PlanePoint const& o = points[0];
  std::size_t j = 1;
  while (j < points.size() && points[j] == o) ++j;
  if (j == points.size()) return true;
  Scalar const dx = points[j].x - o.x, dy = points[j].y - o.y;
  for (std::size_t i = j + 1; i < points.size(); ++i) {
    // 2x2 determinant of the difference vectors.
    if (!(dx * (points[i].y - o.y) == dy * (points[i].x - o.x))) return false;
  }
  return true;
}

DirectionResult directions(PointSet const& points) {
  if (points.size() < 2) throw Error(ErrorCode::kTooFewPoints, "directions need two points");
  std::vector<Direction> dirs;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      PlanePoint const& u = points[i];
      PlanePoint const& v = points[j];
      if (u.x == v.x) {
        dirs.push_back(Direction::vertical());
      } else {
        dirs.push_back(Direction::finite((v.y - u.y) / (v.x - u.x)));
      }
    }
  }
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  return DirectionResult{std::move(dirs), is_collinear(points.elements())};
}

LineSet determined_lines(PointSet const& points) {
  if (points.size() < 2) throw Error(ErrorCode::kTooFewPoints, "lines need two points");
  std::unordered_set<PlaneLine> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) seen.insert(PlaneLine::through(points[i], points[j]));
  }
  return LineSet(std::vector<PlaneLine>(seen.begin(), seen.end()));
}

std::vector<RichGroup> rich_lines(PointSet const& points, LineSet const& lines, std::uint64_t delta) {
  if (delta < 1) throw Error(ErrorCode::kBadArguments, "richness threshold must be >= 1");
  std::map<unsigned, RichGroup> groups;
  for (PlaneLine const& l : lines) {
    std::uint64_t rich = 0;
    for (PlanePoint const& q : points) rich += l.contains(q) ? 1 : 0;
    if (rich < delta) continue;
    unsigned k = 0;
    while (delta << (k + 1) <= rich) ++k;
    RichGroup& g = groups[k];
    g.k = k;
    g.lines.push_back(l);
    g.richness.push_back(rich);
  }
  std::vector<RichGroup> out;
  for (auto& [k, g] : groups) out.push_back(std::move(g));
  return out;
}

QuadrupleCount collinear_quadruples(ScalarSet const& d) {
  std::vector<PlanePoint> grid;
  for (Scalar const& x : d) {
    for (Scalar const& y : d) grid.emplace_back(x, y);
  }
  // Ordered pairs per line give n(n - 1) for a line with n points.
  std::unordered_map<PlaneLine, std::uint64_t> pairs;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      if (i != j) ++pairs[PlaneLine::through(grid[i], grid[j])];
    }
  }
  QuadrupleCount out{0, 0};
  for (auto const& [line, m] : pairs) {
    auto n = static_cast<std::uint64_t>((1 + std::sqrt(1.0 + 4.0 * static_cast<double>(m))) / 2 + 0.5);
    while (n * (n - 1) > m) --n;
    while ((n + 1) * n <= m) ++n;
    mpz_class nn = static_cast<unsigned long>(n);
    out.with_repeats += pow4(n);
    if (n >= 4) out.distinct += nn * (nn - 1) * (nn - 2) * (nn - 3);
  }
  return out;
}

std::uint64_t max_collinear_points(std::span<SpacePoint const> points) {
  if (points.empty()) return 0;
  std::uint64_t best = 1;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) continue;
      Scalar const ux = points[j].x - points[i].x, uy = points[j].y - points[i].y, uz = points[j].z - points[i].z;
      std::uint64_t on = 2;
      for (std::size_t k = 0; k < points.size(); ++k) {
        if (k == i || k == j) continue;
        Scalar const vx = points[k].x - points[i].x, vy = points[k].y - points[i].y,
                     vz = points[k].z - points[i].z;
        bool coll = (uy * vz == uz * vy) && (uz * vx == ux * vz) && (ux * vy == uy * vx);
        on += coll ? 1 : 0;
      }
      best = std::max(best, on);
    }
  }
  return best;
}

PlaneIncidence count_incidences_planes(std::span<SpacePoint const> points, std::span<SpacePlane const> planes) {
  if (!points.empty() && !planes.empty()) require_field(points.front().x, planes.front().alpha());
  PlaneIncidence out;
  for (SpacePlane const& pi : planes) {
    for (SpacePoint const& q : points) out.count += pi.contains(q) ? 1 : 0;
  }
  out.max_collinear = max_collinear_points(points);
  return out;
}

VinhResult vinh_deviation(PointSet const& points, LineSet const& lines) {
  Field field = !points.empty() ? points.front().x.field() : (!lines.empty() ? lines.front().slope().field() : Field());
  if (field.is_rational()) {
    if (points.empty() && lines.empty()) throw Error(ErrorCode::kFieldMismatch, "field unknown for empty input");
    throw Error(ErrorCode::kFieldMismatch, "Vinh's bound is stated over F_p");
  }
  VinhResult out;
  out.incidences = count_incidences_lines(points, lines);
  mpz_class const p = static_cast<unsigned long>(field.modulus());
  mpz_class const pl = mpz_class(static_cast<unsigned long>(points.size())) * static_cast<unsigned long>(lines.size());
  mpq_class dev(mpz_class(static_cast<unsigned long>(out.incidences)) * p - pl, p);
  dev.canonicalize();
  out.deviation = abs(dev);
  out.deviation_sq = dev * dev;
  out.bound_sq = p * pl;
  out.holds = out.deviation_sq <= mpq_class(out.bound_sq);
  return out;
}

AlonResult alon_beck_check(PointSet const& points, mpq_class const& eps) {
  AlonResult out;
  if (points.empty()) return out;
  Field field = points.front().x.field();
  mpq_class const p1 = static_cast<unsigned long>(field.prime_field().p() + 1);
  out.applicable = mpq_class(static_cast<unsigned long>(points.size())) > (1 + eps) * p1;
  out.bound = eps * eps * (1 - eps) / (2 + 2 * eps) * p1 * p1;
  out.bound.canonicalize();
  out.determined = points.size() >= 2 ? determined_lines(points).size() : 0;
  out.holds = !out.applicable || mpq_class(static_cast<unsigned long>(out.determined)) >= out.bound;
  return out;
}

double szemeredi_trotter_main_term(std::size_t points, std::size_t lines) {
  double const p = static_cast<double>(points), l = static_cast<double>(lines);
  return std::pow(p * l, 2.0 / 3.0) + p + l;
}

double stevens_de_zeeuw_main_term(std::size_t a, std::size_t b, std::size_t lines) {
  double const x = static_cast<double>(a), y = static_cast<double>(b), l = static_cast<double>(lines);
  return std::pow(x, 0.75) * std::sqrt(y) * std::pow(l, 0.75) + x * y + l;
}

}  // namespace sumprod
