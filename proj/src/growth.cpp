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


#include "sumprod/growth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <functional>
#include <set>
#include <unordered_map>

#include "sumprod/error.hpp"

namespace sumprod {
namespace {

// Membership over packed SL2 keys: a bit vector when p^4 is small, a hash set
// otherwise.
class KeyMask {
 public:
  explicit KeyMask(std::uint32_t p) {
    std::uint64_t const n = std::uint64_t{p} * p * p * p;
    if (n <= (std::uint64_t{1} << 28)) bits_.assign(n, false);
  }

  bool insert(Sl2Element const& g) {
    if (!bits_.empty()) {
      auto ref = bits_[g.key()];
      if (ref) return false;
      ref = true;
      return true;
    }
    return keys_.insert(g.key()).second;
  }

  bool contains(Sl2Element const& g) const {
    return bits_.empty() ? keys_.count(g.key()) != 0 : static_cast<bool>(bits_[g.key()]);
  }

 private:
  std::vector<bool> bits_;
  std::unordered_set<std::uint64_t> keys_;
};

KeyMask mask_of(Sl2Set const& a, std::uint32_t p) {
  KeyMask m(p);
  for (Sl2Element const& g : a) m.insert(g);
  return m;
}

std::size_t sl2_order(std::uint64_t p) { return static_cast<std::size_t>(p * (p * p - 1)); }

std::size_t group_order_of(Sl2Element const& g) { return sl2_order(g.modulus()); }

std::size_t group_order_of(AffElement const& g) {
  if (g.field().is_rational()) throw Error(ErrorCode::kTooLarge, "Aff(Q) is infinite");
  std::uint64_t const p = g.field().modulus();
  return static_cast<std::size_t>(p * (p - 1));
}

Sl2Set enumerate_group(Sl2Element const& g, std::size_t cap) { return enumerate_sl2(g.field(), cap); }
AffSet enumerate_group(AffElement const& g, std::size_t cap) { return enumerate_aff(g.field(), cap); }

template <class E>
BfsResult finish(BfsResult out, std::size_t visited) {
  out.growth.clear();
  std::size_t acc = 0;
  for (std::size_t n : out.layers) out.growth.push_back(acc += n);
  out.diameter = out.layers.size() - 1;
  out.generated = visited == out.group_order;
  return out;
}

template <class E>
BfsResult bfs_queue(ElementSet<E> const& generators, std::size_t cap) {
  if (generators.empty()) throw Error(ErrorCode::kBadArguments, "empty generator set");
  BfsResult out;
  out.group_order = group_order_of(generators.front());
  if (out.group_order > cap) throw Error(ErrorCode::kTooLarge, "group order exceeds cap");
  ElementSet<E> const s = symmetrize(generators);
  E const one = group_identity_like(generators.front());
  std::unordered_map<E, std::size_t> dist{{one, 0}};
  std::deque<E> queue{one};
  out.layers = {1};
  while (!queue.empty()) {
    E const x = queue.front();
    queue.pop_front();
    std::size_t const dx = dist.at(x);
    for (E const& g : s) {
      E y = group_mul(x, g);
      if (dist.emplace(y, dx + 1).second) {
        if (out.layers.size() <= dx + 1) out.layers.push_back(0);
        ++out.layers[dx + 1];
        queue.push_back(std::move(y));
      }
    }
  }
  return finish<E>(std::move(out), dist.size());
}

template <class E>
BfsResult bfs_layered(ElementSet<E> const& generators, std::size_t cap) {
  if (generators.empty()) throw Error(ErrorCode::kBadArguments, "empty generator set");
  BfsResult out;
  ElementSet<E> const group = enumerate_group(generators.front(), cap);
  out.group_order = group.size();
  auto index = [&group](E const& e) {
    return static_cast<std::size_t>(std::lower_bound(group.begin(), group.end(), e) - group.begin());
  };
  // Right multiplication by each generator as a permutation of indices.
  ElementSet<E> const s = symmetrize(generators);
  std::vector<std::vector<std::size_t>> step(s.size(), std::vector<std::size_t>(group.size()));
  for (std::size_t j = 0; j < s.size(); ++j) {
    for (std::size_t i = 0; i < group.size(); ++i) step[j][i] = index(group_mul(group[i], s[j]));
  }
  std::vector<bool> seen(group.size(), false), layer(group.size(), false);
  std::size_t const start = index(group_identity_like(generators.front()));
  seen[start] = layer[start] = true;
  std::size_t total = 1;
  out.layers = {1};
  while (true) {
    std::vector<bool> next(group.size(), false);
    std::size_t fresh = 0;
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (!layer[i]) continue;
      for (auto const& perm : step) {
        std::size_t const k = perm[i];
        if (!seen[k]) {
          seen[k] = next[k] = true;
          ++fresh;
        }
      }
    }
    if (fresh == 0) break;
    out.layers.push_back(fresh);
    total += fresh;
    layer.swap(next);
  }
  return finish<E>(std::move(out), total);
}

bool aff_conjugate(AffElement const& x, AffElement const& g) {
  if (!(x.a() == g.a())) return false;
  if (!g.a().is_one()) return true;
  return x.b().is_zero() == g.b().is_zero();
}

template <class E, class ConjTest>
PigeonholeResult<E> pigeonhole(ElementSet<E> const& a, E const& g, ConjTest in_class) {
  PigeonholeResult<E> out;
  out.set_size = a.size();
  if (a.empty()) {
    out.holds = true;
    return out;
  }
  // Conj(g) n A g A^-1
  std::unordered_set<E> agb;
  for (E const& x : a) {
    E const xg = group_mul(x, g);
    for (E const& y : a) {
      E z = group_mul(xg, group_inv(y));
      if (in_class(z)) agb.insert(std::move(z));
    }
  }
  out.conj_part = agb.size();
  for (E const& a0 : a) {
    E const inv = group_inv(a0);
    std::size_t hits = 0;
    for (E const& y : a) {
      E const q = group_mul(inv, y);
      if (group_mul(q, g) == group_mul(g, q)) ++hits;
    }
    if (!out.witness || hits > out.stab_part) {
      out.stab_part = hits;
      out.witness = a0;
    }
  }
  out.holds = std::uint64_t{out.set_size} <= std::uint64_t{out.conj_part} * out.stab_part;
  return out;
}

void require_symmetric(Sl2Set const& a) {
  if (!is_symmetric(a)) throw Error(ErrorCode::kNotSymmetric, "set is not symmetric");
}

void require_generating(Sl2Set const& a, std::size_t cap) {
  if (a.empty() || !generates_sl2(a, cap)) throw Error(ErrorCode::kNotGenerating, "set does not generate SL2");
}

bool good_escape(Sl2Element const& g) { return g.is_regular_semisimple() && g.trace() != 0; }

// First regular semisimple element of nonzero trace in A, then in A A.
std::optional<std::pair<Sl2Element, bool>> escape_search(Sl2Set const& a) {
  for (Sl2Element const& g : a) {
    if (good_escape(g)) return std::make_pair(g, true);
  }
  for (Sl2Element const& x : a) {
    for (Sl2Element const& y : a) {
      Sl2Element g = sl2_mul(x, y);
      if (good_escape(g)) return std::make_pair(g, false);
    }
  }
  return std::nullopt;
}

std::uint64_t trace_of_quotient(PrimeField const& f, Sl2Element const& y, Sl2Element const& x) {
  // tr(y^-1 x) with y^-1 = (d, -b; -c, a).
  std::uint64_t t = f.mul(y.d(), x.a());
  t = f.sub(t, f.mul(y.b(), x.c()));
  t = f.sub(t, f.mul(y.c(), x.b()));
  return f.add(t, f.mul(y.a(), x.d()));
}

Sl2Set triple_intersection(PrimeField const& f, Sl2Set const& cls, std::uint64_t tau, Sl2Element const& y1,
                           Sl2Element const& y2) {
  std::vector<Sl2Element> out;
  for (Sl2Element const& x : cls) {
    if (trace_of_quotient(f, y1, x) == tau && trace_of_quotient(f, y2, x) == tau) out.push_back(x);
  }
  return Sl2Set::from_sorted_unique(std::move(out));
}

std::vector<std::uint32_t> gammas_for(PrimeField const& f, std::uint64_t tau) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t g = 1; g < f.p(); ++g) {
    if (f.add(g, f.inv(g)) == tau) out.push_back(static_cast<std::uint32_t>(g));
  }
  return out;
}

// Tries to match a large intersection against single and double lines.
void match_lines(PrimeField const& f, std::uint64_t tau, Sl2Element const& y1, Sl2Element const& y2,
                 TripleIntersectionVerdict& v) {
  std::vector<std::uint32_t> const gammas = gammas_for(f, tau);
  if (gammas.empty()) return;
  for (Sl2Element const& h : sl2_borel_bases(f)) {
    LineGamma const unipotent{h, 1};
    for (std::uint32_t g : gammas) {
      Sl2Set const line = sl2_line_points(LineGamma{h, g});
      if (v.intersection == line) {
        LineGamma const sq{h, static_cast<std::uint32_t>(f.mul(g, g))};
        bool const s1 = sl2_on_line(y1, sq), s2 = sl2_on_line(y2, sq);
        bool const u1 = sl2_on_line(y1, unipotent), u2 = sl2_on_line(y2, unipotent);
        v.kind = TripleKind::kSingleLine;
        v.line = LineGamma{h, g};
        v.y1_certified = s1 || u1;
        v.y2_certified = s2 || u2;
        v.valid = (s1 && (s2 || u2)) || (s2 && (s1 || u1));
        return;
      }
      std::uint32_t const ginv = static_cast<std::uint32_t>(f.inv(g));
      if (ginv == g) continue;
      Sl2Set const both = line.set_union(sl2_line_points(LineGamma{h, ginv}));
      if (v.intersection == both) {
        v.kind = TripleKind::kDoubleLine;
        v.line = LineGamma{h, g};
        v.y1_certified = sl2_on_line(y1, unipotent);
        v.y2_certified = sl2_on_line(y2, unipotent);
        v.valid = v.y1_certified && v.y2_certified;
        return;
      }
    }
  }
}

std::uint64_t reduce_tau(PrimeField const& f, std::uint64_t tau) { return tau % f.p(); }

// Members of the maximal torus through a regular semisimple element, keyed by
// the smallest non-central key.
std::uint64_t torus_id(Sl2Set const& torus) {
  for (Sl2Element const& t : torus) {
    if (!t.is_central()) return t.key();
  }
  return 0;
}

mpz_class uz(std::size_t n) { return mpz_class(static_cast<unsigned long>(n)); }

mpz_class mpz_pow(mpz_class const& b, unsigned e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

BfsResult cayley_bfs(Sl2Set const& generators, std::size_t cap) { return bfs_queue(generators, cap); }
BfsResult cayley_bfs(AffSet const& generators, std::size_t cap) { return bfs_queue(generators, cap); }
BfsResult cayley_bfs_layered(Sl2Set const& generators, std::size_t cap) { return bfs_layered(generators, cap); }
BfsResult cayley_bfs_layered(AffSet const& generators, std::size_t cap) { return bfs_layered(generators, cap); }

bool ball_monotone(Sl2Set const& generators, std::size_t radius) {
  if (generators.empty()) return true;
  Sl2Set const s = symmetrize(generators);
  BfsResult const bfs = cayley_bfs(generators);
  Sl2Set ball{Sl2Element::identity(generators.front().field())};
  for (std::size_t k = 0; k < radius; ++k) {
    Sl2Set const grown = product_set(ball, s);
    Sl2Set const next = ball.set_union(grown);
    // Nested balls, and past the first step B(k+1) = B(k) S exactly.
    if (!ball.is_subset_of(next)) return false;
    if (k > 0 && next.size() != grown.size()) return false;
    std::size_t const expected = bfs.growth[std::min(k + 1, bfs.growth.size() - 1)];
    if (next.size() != expected) return false;
    ball = next;
  }
  return true;
}

bool generates_sl2(Sl2Set const& a, std::size_t cap) { return !a.empty() && cayley_bfs(a, cap).generated; }

std::size_t full_product_threshold(std::size_t group_order) {
  mpz_class const target = mpz_pow(mpz_class(2), 9) * mpz_pow(uz(group_order), 8);
  std::size_t n = static_cast<std::size_t>(2.0 * std::pow(static_cast<double>(group_order), 8.0 / 9.0));
  n = n > 3 ? n - 3 : 0;
  while (mpz_pow(uz(n), 9) < target) ++n;
  return n;
}

FullProductCheck full_product_check(Sl2Set const& a) {
  FullProductCheck out;
  if (a.empty()) throw Error(ErrorCode::kBadArguments, "empty set");
  std::uint64_t const p = a.front().modulus();
  std::size_t const order = sl2_order(p);
  out.threshold = full_product_threshold(order);
  out.threshold_met = a.size() >= out.threshold;
  Sl2Set const aa = product_set(a, a);
  out.aa = aa.size();
  out.inv_left = product_set(a, a, GroupOp::kLeftQuotient).size();
  out.inv_right = product_set(a, a, GroupOp::kRightQuotient).size();
  mpq_class sq(uz(a.size()) * uz(a.size()), uz(p * p));
  sq.canonicalize();
  mpq_class const whole(uz(order));
  out.bound = (sq < whole ? sq : whole) / 2;
  bool const sizes_ok = mpq_class(uz(out.aa)) >= out.bound && mpq_class(uz(out.inv_left)) >= out.bound &&
                        mpq_class(uz(out.inv_right)) >= out.bound;
  out.cube_is_group = product_set(aa, a).size() == order;
  out.holds = !out.threshold_met || (out.cube_is_group && sizes_ok);
  return out;
}

// ---------------------------------------------------------------------------

HelfgottMapResult helfgott_map(Sl2Set const& a, Sl2Element const& g) {
  if (g.is_central()) throw Error(ErrorCode::kCentralElement, g.to_string() + " is central");
  HelfgottMapResult out;
  std::map<Sl2Element, std::vector<Sl2Element>> fibers;
  for (Sl2Element const& x : a) fibers[sl2_conjugate(x, g)].push_back(x);
  std::vector<Sl2Element> image;
  out.injective = true;
  for (auto const& [y, pre] : fibers) {
    image.push_back(y);
    ++out.fiber_histogram[pre.size()];
    if (pre.size() > 1 && out.injective) {
      out.injective = false;
      out.collision = std::make_pair(pre[0], pre[1]);
    }
  }
  out.image = Sl2Set::from_sorted_unique(std::move(image));
  out.antipodal_free =
      std::none_of(a.begin(), a.end(), [&](Sl2Element const& x) { return a.contains(sl2_negate(x)); });
  if (g.is_regular_semisimple()) {
    Sl2Set const torus = sl2_maximal_torus(g).elements;
    KeyMask const quotients = mask_of(product_set(a, a, GroupOp::kLeftQuotient), g.modulus());
    bool meets = std::any_of(torus.begin(), torus.end(),
                             [&](Sl2Element const& t) { return !t.is_central() && quotients.contains(t); });
    out.torus_criterion = !meets;
    out.criterion_consistent = out.injective == (!meets && out.antipodal_free);
  }
  return out;
}

PigeonholeResult<Sl2Element> orbit_stabilizer_check(Sl2Set const& a, Sl2Element const& g) {
  PrimeField const f = g.field();
  KeyMask cls(g.modulus());
  for (Sl2Element const& h : enumerate_sl2(f)) cls.insert(sl2_conjugate(h, g));
  return pigeonhole(a, g, [&](Sl2Element const& z) { return cls.contains(z); });
}

PigeonholeResult<AffElement> orbit_stabilizer_check(AffSet const& a, AffElement const& g) {
  return pigeonhole(a, g, [&](AffElement const& z) { return aff_conjugate(z, g); });
}

// ---------------------------------------------------------------------------

EscapeResult escape_regular_semisimple(Sl2Set const& a, std::size_t cap) {
  require_symmetric(a);
  require_generating(a, cap);
  EscapeResult out;
  std::size_t const cube = power_set_k(a, 3).size();
  out.tripling = mpq_class(uz(cube), uz(a.size()));
  out.tripling.canonicalize();
  // |A| > 12 + 16 K |A|^(1/3)  <=>  (|A| - 12)^3 |A|^2 > 4096 |A^3|^3
  std::size_t const n = a.size();
  out.precondition_held = n > 12 && mpz_pow(uz(n - 12), 3) * mpz_pow(uz(n), 2) > 4096 * mpz_pow(uz(cube), 3);
  if (auto hit = escape_search(a)) {
    out.found = hit->first;
    out.found_in_set = hit->second;
  }
  out.violation = out.precondition_held && !out.found;
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(TripleKind kind) {
  switch (kind) {
    case TripleKind::kAtMostTwo: return "AtMostTwo";
    case TripleKind::kSingleLine: return "SingleLine";
    case TripleKind::kDoubleLine: return "DoubleLine";
    case TripleKind::kTauZeroSpecial: return "TauZeroSpecial";
    case TripleKind::kUnclassified: return "Unclassified";
  }
  return "Unclassified";
}

TripleIntersectionVerdict classify_triple_intersection(PrimeField const& field, std::uint64_t tau,
                                                       Sl2Element const& y1, Sl2Element const& y2) {
  tau = reduce_tau(field, tau);
  if (tau == 0) throw Error(ErrorCode::kBadArguments, "tau = 0 is handled descriptively");
  if (y1.is_identity() || y2.is_identity() || y1 == y2) {
    throw Error(ErrorCode::kBadArguments, "need y1, y2 != 1 and y1 != y2");
  }
  if (y1.modulus() != field.p() || y2.modulus() != field.p()) {
    throw Error(ErrorCode::kModulusMismatch, "elements from a different field");
  }
  TripleIntersectionVerdict v;
  v.intersection = triple_intersection(field, sl2_conjugacy_class(field, tau), tau, y1, y2);
  if (v.intersection.size() <= 2) {
    v.kind = TripleKind::kAtMostTwo;
    v.valid = true;
    return v;
  }
  match_lines(field, tau, y1, y2, v);
  return v;
}

TripleIntersectionVerdict describe_tau_zero_intersection(PrimeField const& field, Sl2Element const& y1,
                                                         Sl2Element const& y2) {
  if (y1.is_central() || y2.is_central() || y1 == y2 || y1 == sl2_negate(y2)) {
    throw Error(ErrorCode::kBadArguments, "need y1, y2 != +-1 and y1 != +-y2");
  }
  TripleIntersectionVerdict v;
  v.intersection = triple_intersection(field, sl2_conjugacy_class(field, 0), 0, y1, y2);
  if (v.intersection.size() <= 2) {
    v.kind = TripleKind::kAtMostTwo;
    v.valid = true;
    return v;
  }
  match_lines(field, 0, y1, y2, v);
  if (v.kind != TripleKind::kUnclassified) return v;
  if (y1.is_regular_semisimple()) {
    Sl2Set const torus = sl2_maximal_torus(y1).elements;
    if (torus.contains(y2)) {
      Sl2Set const normalizer = sl2_normalizer(torus);
      std::vector<Sl2Element> second;
      std::set_difference(normalizer.begin(), normalizer.end(), torus.begin(), torus.end(),
                          std::back_inserter(second));
      if (v.intersection == Sl2Set::from_sorted_unique(std::move(second))) {
        v.kind = TripleKind::kTauZeroSpecial;
        v.y1_certified = v.y2_certified = v.valid = true;
      }
    }
  }
  return v;
}

TripleCensus triple_intersection_census(PrimeField const& field, std::uint64_t tau) {
  tau = reduce_tau(field, tau);
  if (tau == 0) throw Error(ErrorCode::kBadArguments, "tau = 0 is handled descriptively");
  TripleCensus out;
  Sl2Set const cls = sl2_conjugacy_class(field, tau);
  Sl2Set const group = enumerate_sl2(field);
  std::size_t const words = (cls.size() + 63) / 64;
  // Row y: bit i set when cls[i] lies in y C_tau.
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<Sl2Element> ys;
  for (Sl2Element const& y : group) {
    if (y.is_identity()) continue;
    std::vector<std::uint64_t> row(words, 0);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (trace_of_quotient(field, y, cls[i]) == tau) row[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    rows.push_back(std::move(row));
    ys.push_back(y);
  }
  for (std::size_t i = 0; i < ys.size(); ++i) {
    for (std::size_t j = i + 1; j < ys.size(); ++j) {
      ++out.pairs;
      std::size_t hits = 0;
      for (std::size_t w = 0; w < words; ++w) hits += std::popcount(rows[i][w] & rows[j][w]);
      out.max_intersection = std::max(out.max_intersection, hits);
      if (hits <= 2) {
        ++out.counts[TripleKind::kAtMostTwo];
        continue;
      }
      TripleIntersectionVerdict const v = classify_triple_intersection(field, tau, ys[i], ys[j]);
      ++out.counts[v.kind];
      if (!v.valid) {
        ++out.violations;
        if (!out.witness) out.witness = std::make_pair(ys[i], ys[j]);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

SliceReport slice_measurements(Sl2Set const& a, unsigned k, std::uint64_t work_cap) {
  if (k < 1) throw Error(ErrorCode::kBadArguments, "power k must be >= 1");
  require_symmetric(a);
  require_generating(a, kDefaultGroupCap);
  SliceReport out;
  PrimeField const field = a.front().field();
  std::size_t const order = sl2_order(field.p());
  unsigned const top = 3 * k + 2;
  Sl2Set acc = a, ak, a3;
  for (unsigned j = 1; j <= top; ++j) {
    if (j > 1 && acc.size() < order) acc = product_set(acc, a, GroupOp::kMul, work_cap);
    if (j == k) ak = acc;
    if (j == 3) a3 = acc;
  }
  out.power_size = ak.size();
  out.big_power_size = acc.size();
  out.tripling = mpq_class(uz(a3.size()), uz(a.size()));
  out.tripling.canonicalize();
  KeyMask const mask = mask_of(ak, field.p());
  for (LineGamma const& line : sl2_all_lines(field)) {
    Sl2Set const pts = sl2_line_points(line);
    std::size_t const n = std::count_if(pts.begin(), pts.end(), [&](Sl2Element const& g) { return mask.contains(g); });
    if (n > out.max_line_slice || !out.best_line) {
      out.max_line_slice = n;
      out.best_line = line;
    }
  }
  out.line_bound_holds = mpz_pow(uz(out.max_line_slice), 3) <= 8 * uz(out.big_power_size);
  std::vector<std::size_t> by_trace(field.p(), 0);
  for (Sl2Element const& g : ak) ++by_trace[g.trace()];
  for (std::uint32_t t = 0; t < field.p(); ++t) out.trace_slices.emplace_back(t, by_trace[t]);
  return out;
}

// ---------------------------------------------------------------------------

PivotResult pivot_search(Sl2Set const& a, std::size_t cap) {
  require_symmetric(a);
  require_generating(a, cap);
  std::uint32_t const p = a.front().modulus();
  if (p > 13) throw Error(ErrorCode::kTooLarge, "torus enumeration is limited to p <= 13");
  auto start = escape_search(a);
  if (!start) throw Error(ErrorCode::kNoSemisimpleStart, "no regular semisimple element of nonzero trace in A u A^2");
  KeyMask const squares = mask_of(product_set(a, a, GroupOp::kLeftQuotient), p);
  PivotResult out;
  auto census_of = [&](Sl2Set const& torus, Sl2Element const& base) {
    TorusCensus c{base, 0, false};
    for (Sl2Element const& t : torus) {
      if (!squares.contains(t)) continue;
      ++c.square_hits;
      if (!t.is_central()) c.involved = true;
    }
    return c;
  };
  std::unordered_set<std::uint64_t> seen;
  std::deque<std::pair<Sl2Set, Sl2Element>> queue;
  Sl2Set t0 = sl2_maximal_torus(start->first).elements;
  seen.insert(torus_id(t0));
  out.census.push_back(census_of(t0, start->first));
  queue.emplace_back(std::move(t0), start->first);
  while (!queue.empty()) {
    auto [torus, base] = std::move(queue.front());
    queue.pop_front();
    for (Sl2Element const& h : a) {
      std::vector<Sl2Element> conj;
      conj.reserve(torus.size());
      for (Sl2Element const& t : torus) conj.push_back(sl2_conjugate(h, t));
      Sl2Set moved(std::move(conj));
      if (!seen.insert(torus_id(moved)).second) continue;
      Sl2Element const moved_base = sl2_conjugate(h, base);
      TorusCensus c = census_of(moved, moved_base);
      out.census.push_back(c);
      if (!c.involved) {
        out.pivot_found = true;
        out.torus_base = base;
        out.conjugator = h;
        return out;
      }
      queue.emplace_back(std::move(moved), moved_base);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(AffineCase c) {
  switch (c) {
    case AffineCase::kInStabilizer: return "InStabilizer";
    case AffineCase::kSmallProjection: return "SmallProjection";
    case AffineCase::kLargeSet: return "LargeSet";
  }
  return "LargeSet";
}

AffineStructureVerdict affine_structure(AffSet const& a) {
  if (a.size() <= 1) throw Error(ErrorCode::kBadArguments, "need |A| > 1");
  if (!is_symmetric(a)) throw Error(ErrorCode::kNotSymmetric, "set is not symmetric");
  Field const field = a.front().field();
  if (!field.is_prime()) throw Error(ErrorCode::kBadArguments, "affine structure needs a prime field");
  std::uint64_t const p = field.modulus();
  AffineStructureVerdict out;
  std::set<Scalar> slopes, intercepts;
  for (AffElement const& g : a) {
    slopes.insert(g.a());
    intercepts.insert(g.b());
  }
  out.projection_size = slopes.size();
  out.intercept_size = intercepts.size();
  auto moving = std::find_if(a.begin(), a.end(), [](AffElement const& g) { return !g.a().is_one(); });
  if (moving != a.end()) {
    Scalar const x = aff_fixed_point(*moving);
    if (std::all_of(a.begin(), a.end(), [&](AffElement const& g) { return g.apply(x) == x; })) {
      out.kind = AffineCase::kInStabilizer;
      out.stabilized_point = x;
      out.tripling = 1;
      out.tripling = mpq_class(uz(power_set_k(a, 3).size()), uz(a.size()));
      out.tripling.canonicalize();
      return out;
    }
  }
  std::size_t const n = a.size();
  std::size_t const cube = power_set_k(a, 3).size();
  out.tripling = mpq_class(uz(cube), uz(n));
  out.tripling.canonicalize();
  mpz_class const pi = uz(out.projection_size);
  if (n <= 2 * p) {
    out.kind = AffineCase::kSmallProjection;
    // |pi| <= 2 K^4  <=>  |pi| |A|^4 <= 2 |A^3|^4
    out.small_bound_holds = pi * mpz_pow(uz(n), 4) <= 2 * mpz_pow(uz(cube), 4);
    return out;
  }
  out.kind = AffineCase::kLargeSet;
  if (n <= 4 * p) return out;
  // |pi| <= 2 K^3 |A| / p  <=>  |pi| p |A|^2 <= 2 |A^3|^3
  out.large_bound_holds = pi * uz(p) * mpz_pow(uz(n), 2) <= 2 * mpz_pow(uz(cube), 3);
  AffSet const axis = aff_unipotent(field);
  AffSet acc = a;
  bool covered = axis.is_subset_of(acc);
  for (unsigned k = 2; k <= 8 && !covered; ++k) {
    acc = product_set(acc, a);
    covered = axis.is_subset_of(acc);
  }
  out.b_axis_in_a8 = covered;
  return out;
}

// ---------------------------------------------------------------------------

CosetEnergyStats coset_energy_stats(AffSet const& a) {
  if (a.size() <= 1) throw Error(ErrorCode::kBadArguments, "need |A| > 1");
  CosetEnergyStats out;
  auto energy_of = [](std::vector<AffElement> members) {
    AffSet const s(std::move(members));
    return energy(s, s, GroupOp::kLeftQuotient, 2);
  };
  std::map<Scalar, std::vector<AffElement>> by_slope;
  for (AffElement const& g : a) by_slope[g.a()].push_back(g);
  out.best_unipotent_energy = 0;
  for (auto const& [slope, members] : by_slope) {
    mpz_class e = energy_of(members);
    if (e > out.best_unipotent_energy) {
      out.best_unipotent_energy = e;
      out.unipotent_coset_slope = slope;
    }
  }
  // Cosets of Stab(x) are the lines b = c - x a in the (a, b) plane.
  std::map<std::pair<Scalar, Scalar>, std::set<std::size_t>> cosets;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i].a() == a[j].a()) continue;
      Scalar const x = -((a[j].b() - a[i].b()) / (a[j].a() - a[i].a()));
      Scalar const c = a[i].b() + x * a[i].a();
      auto& members = cosets[{x, c}];
      members.insert(i);
      members.insert(j);
    }
  }
  out.best_torus_energy = 1;
  Scalar const zero = Scalar::from_int(0, a.front().field());
  out.torus_coset = std::make_pair(zero, a.front().b());
  for (auto const& [key, idx] : cosets) {
    std::vector<AffElement> members;
    for (std::size_t i : idx) members.push_back(a[i]);
    mpz_class e = energy_of(std::move(members));
    if (e > out.best_torus_energy) {
      out.best_torus_energy = e;
      out.torus_coset = key;
    }
  }
  mpz_class const n3 = mpz_pow(uz(a.size()), 3);
  out.w = mpq_class(out.best_unipotent_energy, n3);
  out.w.canonicalize();
  out.w_star = mpq_class(out.best_torus_energy, n3);
  out.w_star.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------

AffSet grid_lines(ScalarSet const& c, ScalarSet const& d, GridForm form) {
  std::vector<AffElement> out;
  out.reserve(c.size() * d.size());
  for (Scalar const& x : c) {
    if (x.is_zero()) throw Error(ErrorCode::kZeroInC, "0 in C");
    for (Scalar const& y : d) out.emplace_back(x, form == GridForm::kPlain ? y : x * y);
  }
  return AffSet(std::move(out));
}

GridEnergyReport grid_energy_suite(ScalarSet const& c, ScalarSet const& d, GridForm form) {
  GridEnergyReport out;
  AffSet const lines = grid_lines(c, d, form);
  RepCounter<AffElement> const rl = rep_function(lines, lines, GroupOp::kLeftQuotient);
  out.energy_direct = rl.moment(2);
  out.e3_direct = rl.moment(3);

  RepCounter<Scalar> const rcc = rep_function(c, c, ScalarOp::kDiv);
  RepCounter<Scalar> const rdd = rep_function(d, d, ScalarOp::kSub);
  auto const ratios = weighted_rep_function(rdd, ScalarOp::kDiv);
  mpz_class sum = 0;
  for (auto const& [s, count] : rcc.map()) {
    auto it = ratios.find(s);
    if (it != ratios.end()) sum += mpz_class(static_cast<unsigned long>(count)) * count * it->second;
  }
  out.trivial_term = rcc.moment(2) * uz(d.size()) * uz(d.size());
  out.energy_identity = sum + out.trivial_term;
  out.identity_holds = out.energy_direct == out.energy_identity;

  RepCounter<Scalar> shifted;
  for (auto const& [u, count] : rdd.map()) {
    for (Scalar const& x : c) shifted.add(u / x, count);
  }
  out.e3_bound = uz(c.size()) * shifted.moment(3);
  out.e3_bound_holds = out.e3_direct <= out.e3_bound;

  mpz_class const cz = uz(c.size()), dz = uz(d.size());
  if (!c.empty() && c.front().is_residue()) {
    out.rough_field_term = mpq_class(mpz_pow(cz, 3) * mpz_pow(dz, 4), uz(c.front().modulus()));
    out.rough_field_term.canonicalize();
  }
  out.rough_main_term = std::pow(static_cast<double>(c.size()), 2.5) * std::pow(static_cast<double>(d.size()), 3);
  return out;
}

// ---------------------------------------------------------------------------

ImageSetResult image_set(ScalarSet const& a, AffSet const& lines) {
  if (!a.empty() && !lines.empty() && a.front().modulus() != lines.front().field().modulus()) {
    throw Error(ErrorCode::kFieldMismatch, "set and maps over different fields");
  }
  ImageSetResult out;
  std::vector<Scalar> image;
  image.reserve(a.size() * lines.size());
  for (AffElement const& s : lines) {
    for (Scalar const& x : a) {
      Scalar y = s.apply(x);
      if (a.contains(y)) ++out.schreier_stat;
      image.push_back(std::move(y));
    }
  }
  out.image = ScalarSet(std::move(image));
  // Cosets of U0 and of each Stab(x) are the lines of the (a, b) plane, so
  // the largest coset hit is the largest collinear subset.
  std::size_t best = lines.empty() ? 0 : 1;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::map<std::pair<bool, Scalar>, std::size_t> through;
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      Scalar const da = lines[j].a() - lines[i].a();
      auto key = da.is_zero() ? std::make_pair(true, Scalar()) : std::make_pair(false, (lines[j].b() - lines[i].b()) / da);
      best = std::max(best, ++through[key] + 1);
    }
  }
  out.max_coset_hit = best;
  if (best > 0) {
    out.concentration = mpq_class(uz(lines.size()), uz(best));
    out.concentration.canonicalize();
  }
  return out;
}

// ---------------------------------------------------------------------------

mpz_class mixed_energy(ScalarSet const& a, MixedForm form) {
  RepCounter<Scalar> out;
  switch (form) {
    case MixedForm::kTimesSum:
    case MixedForm::kTimesDifference: {
      auto const inner = rep_function(a, a, form == MixedForm::kTimesSum ? ScalarOp::kAdd : ScalarOp::kSub);
      for (Scalar const& x : a) {
        for (auto const& [s, count] : inner.map()) out.add(x * s, count);
      }
      break;
    }
    case MixedForm::kProductPlus:
    case MixedForm::kProductMinus: {
      auto const inner = rep_function(a, a, ScalarOp::kMul);
      for (auto const& [s, count] : inner.map()) {
        for (Scalar const& x : a) out.add(form == MixedForm::kProductPlus ? s + x : s - x, count);
      }
      break;
    }
  }
  return out.moment(2);
}

}  // namespace sumprod
