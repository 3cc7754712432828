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

// Executable forms of the growth arguments in SL2(F_p) and Aff(F): the
// conjugation map and its fibres, escape from the non-semisimple locus,
// triple intersections of conjugacy-class translates, line and trace slices,
// the torus pivot search, the affine structure verdict, coset energies, grid
// energies, image sets and Cayley graph breadth-first search.

#ifndef SUMPROD_GROWTH_HPP_
#define SUMPROD_GROWTH_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sumprod/groups.hpp"
#include "sumprod/incidence.hpp"
#include "sumprod/setalgebra.hpp"

namespace sumprod {

// ---------------------------------------------------------------------------
// Cayley graphs

struct BfsResult {
  std::size_t diameter = 0;           // eccentricity of the identity
  std::vector<std::size_t> layers;    // |sphere(k)|
  std::vector<std::size_t> growth;    // |ball(k)|, cumulative
  std::size_t group_order = 0;        // order of the ambient group
  bool generated = false;             // closure is the whole group
};

// Frontier-queue breadth-first search from the identity over the
// symmetrized generator set. Throws Error(kTooLarge) past cap.
BfsResult cayley_bfs(Sl2Set const& generators, std::size_t cap = kDefaultGroupCap);
BfsResult cayley_bfs(AffSet const& generators, std::size_t cap = kDefaultGroupCap);

// Independent implementation over the enumerated group with one bit per
// element per layer.
BfsResult cayley_bfs_layered(Sl2Set const& generators, std::size_t cap = kDefaultGroupCap);
BfsResult cayley_bfs_layered(AffSet const& generators, std::size_t cap = kDefaultGroupCap);

// ball(k + 1) is contained in ball(k) * S for every k.
bool ball_monotone(Sl2Set const& generators, std::size_t radius);

bool generates_sl2(Sl2Set const& a, std::size_t cap = kDefaultGroupCap);

// ---------------------------------------------------------------------------
// Exact-constant checks on products

// |A^k| <= K^(k-2) |A| for each k in [4, kmax].
struct RuzsaCheck {
  std::vector<std::size_t> sizes;  // |A^k|, k = 1..kmax
  mpq_class tripling;
  bool holds = true;
  unsigned failing_k = 0;
};

template <class E>
RuzsaCheck ruzsa_check(ElementSet<E> const& a, unsigned kmax = 6, std::uint64_t work_cap = kDefaultWorkCap) {
  RuzsaCheck out;
  DoublingStats stats = doubling_stats(a, kmax, work_cap);
  out.sizes = stats.profile;
  out.tripling = stats.tripling;
  mpz_class const n = static_cast<unsigned long>(a.size());
  mpz_class const n3 = static_cast<unsigned long>(out.sizes[2]);
  for (unsigned k = 4; k <= kmax; ++k) {
    // |A^k| * |A|^(k-2) <= |A^3|^(k-2) * |A|
    mpz_class lhs, rhs, t;
    mpz_pow_ui(t.get_mpz_t(), n.get_mpz_t(), k - 2);
    lhs = mpz_class(static_cast<unsigned long>(out.sizes[k - 1])) * t;
    mpz_pow_ui(rhs.get_mpz_t(), n3.get_mpz_t(), k - 2);
    rhs *= n;
    if (lhs > rhs && out.holds) {
      out.holds = false;
      out.failing_k = k;
    }
  }
  return out;
}

// A^3 = G and |AA|, |A^-1 A|, |A A^-1| >= min(|G|, |A|^2 / p^2) / 2.
struct FullProductCheck {
  bool threshold_met = false;  // |A| >= 2 |G|^(8/9)
  std::size_t threshold = 0;   // ceil(2 |G|^(8/9))
  bool cube_is_group = false;
  std::size_t aa = 0, inv_left = 0, inv_right = 0;
  mpq_class bound;
  bool holds = false;  // conclusions hold (vacuous below threshold)
};

// Smallest n with n^9 >= 2^9 |G|^8.
std::size_t full_product_threshold(std::size_t group_order);
FullProductCheck full_product_check(Sl2Set const& a);

// ---------------------------------------------------------------------------
// Conjugation map

struct HelfgottMapResult {
  Sl2Set image;
  std::map<std::size_t, std::size_t> fiber_histogram;  // fibre size -> number of fibres
  bool injective = false;
  std::optional<std::pair<Sl2Element, Sl2Element>> collision;
  // For regular semisimple g: whether A^-1 A avoids T_g \ {+-1}.
  std::optional<bool> torus_criterion;
  // Whether A and -A are disjoint.
  bool antipodal_free = false;
  // injective == (torus_criterion && antipodal_free) for regular semisimple g.
  bool criterion_consistent = true;
};

// h -> h g h^-1 on A. Throws Error(kCentralElement) for g = +-1.
HelfgottMapResult helfgott_map(Sl2Set const& a, Sl2Element const& g);

// |A| <= |Conj(g) n A g A^-1| * |Stab(g) n a0^-1 A| for a maximizing a0.
template <class E>
struct PigeonholeResult {
  std::size_t set_size = 0;
  std::size_t conj_part = 0;
  std::size_t stab_part = 0;
  std::optional<E> witness;
  bool holds = false;
};

PigeonholeResult<Sl2Element> orbit_stabilizer_check(Sl2Set const& a, Sl2Element const& g);
PigeonholeResult<AffElement> orbit_stabilizer_check(AffSet const& a, AffElement const& g);

// ---------------------------------------------------------------------------
// Escape

struct EscapeResult {
  std::optional<Sl2Element> found;
  bool found_in_set = false;   // witness lies in A itself rather than A^2
  bool precondition_held = false;  // |A| > 12 + 16 K |A|^(1/3)
  mpq_class tripling;
  bool violation = false;      // precondition held and nothing found
};

// Throws Error(kNotSymmetric), Error(kNotGenerating).
EscapeResult escape_regular_semisimple(Sl2Set const& a, std::size_t cap = kDefaultGroupCap);

// ---------------------------------------------------------------------------
// Triple intersections C_tau n y1 C_tau n y2 C_tau

enum class TripleKind { kAtMostTwo, kSingleLine, kDoubleLine, kTauZeroSpecial, kUnclassified };

std::string to_string(TripleKind kind);

struct TripleIntersectionVerdict {
  Sl2Set intersection;
  TripleKind kind = TripleKind::kUnclassified;
  std::optional<LineGamma> line;   // basis and gamma of the matched line
  bool y1_certified = false;
  bool y2_certified = false;
  bool valid = false;              // classification and certificates agree
};

// Throws Error(kBadArguments) for y1 or y2 = 1, y1 = y2, or tau = 0.
TripleIntersectionVerdict classify_triple_intersection(PrimeField const& field, std::uint64_t tau,
                                                       Sl2Element const& y1, Sl2Element const& y2);

// Descriptive variant for tau = 0 (y1, y2 != +-1, y1 != +-y2): detects the
// second coset of a maximal torus in its normaliser. Never asserted.
TripleIntersectionVerdict describe_tau_zero_intersection(PrimeField const& field, Sl2Element const& y1,
                                                         Sl2Element const& y2);

// Exhaustive sweep over unordered admissible pairs {y1, y2}.
struct TripleCensus {
  std::uint64_t pairs = 0;
  std::map<TripleKind, std::uint64_t> counts;
  std::uint64_t violations = 0;
  std::optional<std::pair<Sl2Element, Sl2Element>> witness;
  std::size_t max_intersection = 0;
};

TripleCensus triple_intersection_census(PrimeField const& field, std::uint64_t tau);

// ---------------------------------------------------------------------------
// Line and trace slices

struct SliceReport {
  std::size_t max_line_slice = 0;
  std::optional<LineGamma> best_line;
  std::size_t power_size = 0;    // |A^k|
  std::size_t big_power_size = 0;  // |A^(3k+2)|
  bool line_bound_holds = false;   // slice^3 <= 8 |A^(3k+2)|
  std::vector<std::pair<std::uint32_t, std::size_t>> trace_slices;  // (tau, |A^k n C_tau|)
  mpq_class tripling;
};

// Throws Error(kNotSymmetric), Error(kNotGenerating), Error(kTooLarge).
SliceReport slice_measurements(Sl2Set const& a, unsigned k, std::uint64_t work_cap = kDefaultWorkCap);

// ---------------------------------------------------------------------------
// Pivot search

struct TorusCensus {
  Sl2Element base;           // a regular semisimple element of the torus
  std::size_t square_hits;   // |A^2 n T|
  bool involved;
};

struct PivotResult {
  bool pivot_found = false;
  std::optional<Sl2Element> torus_base;   // involved torus T
  std::optional<Sl2Element> conjugator;   // h in A with h T h^-1 not involved
  std::vector<TorusCensus> census;        // every torus visited, in visiting order
};

// Throws Error(kNotSymmetric), Error(kNotGenerating), Error(kNoSemisimpleStart).
PivotResult pivot_search(Sl2Set const& a, std::size_t cap = kDefaultGroupCap);

// ---------------------------------------------------------------------------
// Affine structure

enum class AffineCase { kInStabilizer, kSmallProjection, kLargeSet };

std::string to_string(AffineCase c);

struct AffineStructureVerdict {
  AffineCase kind = AffineCase::kLargeSet;
  std::optional<Scalar> stabilized_point;
  std::size_t projection_size = 0;  // |pi(A)|
  std::size_t intercept_size = 0;   // |rho(A)|
  mpq_class tripling;
  std::optional<bool> small_bound_holds;  // |pi(A)| <= 2 K^4, checked for |A| <= 2p
  std::optional<bool> large_bound_holds;  // |pi(A)| <= 2 K^3 |A| / p, checked for |A| > 4p
  std::optional<bool> b_axis_in_a8;       // U0 inside A^8, checked for |A| > 4p
};

// Throws Error(kNotSymmetric), Error(kBadArguments) for |A| <= 1.
AffineStructureVerdict affine_structure(AffSet const& a);

// ---------------------------------------------------------------------------
// Coset energies

struct CosetEnergyStats {
  mpq_class w;         // |A|^-3 max_alpha E(A n alpha U0)
  mpq_class w_star;    // |A|^-3 max over cosets of C(g), g not in U0
  mpz_class best_unipotent_energy;
  mpz_class best_torus_energy;
  Scalar unipotent_coset_slope;             // the a-value of the best U0 coset
  std::optional<std::pair<Scalar, Scalar>> torus_coset;  // (x, c): b = c - x a
};

CosetEnergyStats coset_energy_stats(AffSet const& a);

// ---------------------------------------------------------------------------
// Grid energies

enum class GridForm { kPlain, kScaled };  // (c, d) or (c, c d)

AffSet grid_lines(ScalarSet const& c, ScalarSet const& d, GridForm form);

struct GridEnergyReport {
  mpz_class energy_direct;      // E(L) from r_{L^-1 L}
  mpz_class energy_identity;    // Sum_s r^2_{C/C}(s) r_{(D-D)/(D-D)}(s) + trivial
  mpz_class trivial_term;       // E^x(C) |D|^2
  bool identity_holds = false;
  mpz_class e3_direct;          // E_3(L)
  mpz_class e3_bound;           // |C| Sum_x r^3_{(D-D)/C}(x)
  bool e3_bound_holds = false;
  mpq_class rough_field_term;   // |C|^3 |D|^4 / p (zero over Q)
  double rough_main_term = 0;   // |C|^(5/2) |D|^3
};

// Throws Error(kZeroInC).
GridEnergyReport grid_energy_suite(ScalarSet const& c, ScalarSet const& d, GridForm form);

// ---------------------------------------------------------------------------
// Image sets

struct ImageSetResult {
  ScalarSet image;
  std::uint64_t schreier_stat = 0;   // #{(x, s) : s(x) in A}
  mpq_class concentration;           // M(S) = |S| / max |S n gH|
  std::size_t max_coset_hit = 0;
};

ImageSetResult image_set(ScalarSet const& a, AffSet const& lines);

// ---------------------------------------------------------------------------
// Sum-product statistics reported by the scans

// Sum_x r^2 over the multiset {a (b + sign c)} or {a b + sign c}.
enum class MixedForm { kTimesSum, kTimesDifference, kProductPlus, kProductMinus };
mpz_class mixed_energy(ScalarSet const& a, MixedForm form);

}  // namespace sumprod

#endif  // SUMPROD_GROWTH_HPP_
