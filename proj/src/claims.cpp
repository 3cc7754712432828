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


// The claim registry. Exact-constant claims run seeded trial loops and count
// violations; scaling claims sweep a parameter and fit an exponent.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_set>

#include "sumprod/error.hpp"
#include "sumprod/growth.hpp"
#include "sumprod/harness.hpp"
#include "sumprod/incidence.hpp"

namespace sumprod {
namespace {

mpz_class uz(std::size_t n) { return mpz_class(static_cast<unsigned long>(n)); }

mpz_class zpow(mpz_class const& b, unsigned e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

mpq_class qcanon(mpq_class q) {
  q.canonicalize();
  return q;
}

// One trial's verdict. lhs <= rhs is the tested direction when has_bound.
struct Outcome {
  bool violation = false;
  std::string witness;
  bool has_bound = false;
  mpq_class lhs, rhs;
  std::vector<std::string> tags;

  void bound(mpq_class l, mpq_class r) {
    has_bound = true;
    lhs = std::move(l);
    rhs = std::move(r);
  }
};

template <class S>
std::string set_text(S const& s) {
  std::string out = "{";
  for (auto const& e : s) {
    if (out.size() > 1) out += "; ";
    out += e.to_string();
  }
  return out + "}";
}

std::vector<std::uint64_t> primes_for(ClaimInfo const& info, RunOptions const& opt) {
  return opt.p_list ? *opt.p_list : info.default_p;
}

std::uint64_t trials_for(ClaimInfo const& info, RunOptions const& opt) {
  return opt.trials ? *opt.trials : info.default_trials;
}

ClaimReport blank_report(ClaimInfo const& info, std::uint64_t p) {
  ClaimReport r;
  r.claim_id = info.id;
  r.anchor = info.anchor;
  r.mode = info.mode;
  r.p = p;
  return r;
}

// Folds trial outcomes into a report: the first violation supplies the
// witness, the largest lhs/rhs supplies the extremal pair.
void fold(ClaimReport& r, std::vector<Outcome> const& results) {
  r.trials += results.size();
  std::map<std::string, std::uint64_t> tally;
  if (r.params.contains("tally")) {
    for (auto const& [k, v] : r.params["tally"].items()) tally[k] = v.get<std::uint64_t>();
  }
  std::optional<mpq_class> best;
  mpq_class best_lhs, best_rhs;
  if (!r.lhs.empty()) {
    best_lhs = mpq_class(r.lhs);
    best_rhs = mpq_class(r.rhs);
    best_lhs.canonicalize();
    best_rhs.canonicalize();
    if (best_rhs != 0) best = best_lhs / best_rhs;
  }
  for (Outcome const& o : results) {
    for (std::string const& t : o.tags) ++tally[t];
    if (o.violation) {
      if (r.violations == 0) r.witness = o.witness;
      ++r.violations;
    }
    if (o.has_bound && o.rhs != 0) {
      mpq_class const q = o.lhs / o.rhs;
      if (!best || q > *best) {
        best = q;
        best_lhs = o.lhs;
        best_rhs = o.rhs;
      }
    }
  }
  if (best) {
    r.lhs = mpq_string(best_lhs);
    r.rhs = mpq_string(best_rhs);
    r.ratio = decimal_string(*best);
  }
  if (!tally.empty()) {
    Json t = Json::object();
    for (auto const& [k, v] : tally) t[k] = v;
    r.params["tally"] = t;
  }
}

using TrialFn = std::function<Outcome(TrialRng&, std::uint64_t)>;

void run_exact(ClaimReport& r, RunOptions const& opt, std::string const& label, std::uint64_t trials,
               TrialFn const& fn) {
  std::function<Outcome(std::uint64_t)> const task = [&](std::uint64_t t) {
    TrialRng rng(opt.seed, label, t);
    return fn(rng, t);
  };
  std::function<bool(Outcome const&)> const stop = [](Outcome const& o) { return o.violation; };
  fold(r, run_trials<Outcome>(trials, opt.threads, task, stop));
}

template <class Body>
std::vector<ClaimReport> per_prime(ClaimInfo const& info, RunOptions const& opt, Body body) {
  std::vector<ClaimReport> out;
  for (std::uint64_t p : primes_for(info, opt)) {
    ClaimReport r = blank_report(info, p);
    body(r, p);
    out.push_back(std::move(r));
  }
  return out;
}

void skip(ClaimReport& r, std::string const& why) { r.params["skipped"] = why; }

bool require_prime(ClaimReport& r, std::uint64_t p, std::uint64_t max_p = 0) {
  if (p == 0) {
    skip(r, "claim needs a prime field");
    return false;
  }
  if (max_p && p > max_p) {
    skip(r, "p exceeds the enumeration limit " + std::to_string(max_p));
    return false;
  }
  return true;
}

std::size_t sl2_order(std::uint64_t p) { return static_cast<std::size_t>(p * (p * p - 1)); }

Sl2Set random_symmetric_sl2(TrialRng& rng, PrimeField const& f, std::size_t n, bool identity) {
  return random_symmetric<Sl2Element>([&] { return random_sl2(rng, f); }, n, identity, sl2_order(f.p()));
}

AffSet random_symmetric_aff(TrialRng& rng, PrimeField const& f, std::size_t n, bool identity) {
  return random_symmetric<AffElement>([&] { return random_aff(rng, f); }, n, identity, f.p() * (f.p() - 1));
}

// ---------------------------------------------------------------------------
// Exact-constant claims

std::vector<ClaimReport> run_szonyi(ClaimInfo const& info, RunOptions const& opt) {
  return per_prime(info, opt, [&](ClaimReport& r, std::uint64_t p) {
    if (!require_prime(r, p)) return;
    PrimeField const f(p);
    auto check = [](PointSet const& pts) {
      Outcome o;
      DirectionResult const d = directions(pts);
      // |dirs| >= (|A| + 3) / 2
      o.bound(qcanon(mpq_class(uz(pts.size() + 3), 2)), mpq_class(uz(d.directions.size())));
      o.violation = 2 * d.directions.size() < pts.size() + 3;
      if (o.violation) o.witness = set_text(pts);
      return o;
    };
    if (p == 3) {
      // Every non-collinear subset of F_3^2 with 1 < |A| <= 3.
      PointSet const all = all_points(Field(f));
      std::vector<PointSet> subsets;
      std::size_t const n = all.size();
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int const bits = __builtin_popcount(mask);
        if (bits < 2 || bits > 3) continue;
        std::vector<PlanePoint> v;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask >> i & 1) v.push_back(all[i]);
        }
        if (!is_collinear(v)) subsets.emplace_back(std::move(v));
      }
      r.params["mode"] = "exhaustive";
      run_exact(r, opt, info.id + ":3", subsets.size(), [&](TrialRng&, std::uint64_t t) { return check(subsets[t]); });
      return;
    }
    r.params["mode"] = "random";
    r.params["size_range"] = {3, p};
    run_exact(r, opt, info.id + ":" + std::to_string(p), trials_for(info, opt), [&](TrialRng& rng, std::uint64_t) {
      std::size_t const n = static_cast<std::size_t>(rng.between(3, static_cast<std::int64_t>(p)));
      for (;;) {
        PointSet const pts = random_point_set(rng, f, n);
        if (!is_collinear(pts.elements())) return check(pts);
      }
    });
  });
}

std::vector<ClaimReport> run_vinh(ClaimInfo const& info, RunOptions const& opt) {
  return per_prime(info, opt, [&](ClaimReport& r, std::uint64_t p) {
    if (!require_prime(r, p)) return;
    PrimeField const f(p);
    run_exact(r, opt, info.id + ":" + std::to_string(p), trials_for(info, opt), [&](TrialRng& rng, std::uint64_t) {
      PointSet const pts = random_point_set(rng, f, static_cast<std::size_t>(rng.between(1, p * p)));
      LineSet const lines = random_line_set(rng, f, static_cast<std::size_t>(rng.between(1, p * p + p)));
      VinhResult const v = vinh_deviation(pts, lines);
      Outcome o;
      o.bound(v.deviation_sq, mpq_class(v.bound_sq));
      o.violation = !v.holds;
      if (o.violation) o.witness = "P=" + set_text(pts) + " L=" + set_text(lines);
      return o;
    });
  });
}

std::vector<ClaimReport> run_alon(ClaimInfo const& info, RunOptions const& opt) {
  mpq_class const eps(1, 2);
  return per_prime(info, opt, [&](ClaimReport& r, std::uint64_t p) {
    if (!require_prime(r, p)) return;
    PrimeField const f(p);
    r.params["eps"] = "1/2";
    std::int64_t const lo = static_cast<std::int64_t>(3 * (p + 1) / 2) + 1;
    run_exact(r, opt, info.id + ":" + std::to_string(p), trials_for(info, opt), [&](TrialRng& rng, std::uint64_t) {
      PointSet const pts = random_point_set(rng, f, static_cast<std::size_t>(rng.between(lo, p * p)));
      AlonResult const a = alon_beck_check(pts, eps);
      Outcome o;
      o.bound(a.bound, mpq_class(uz(a.determined)));
      o.violation = !a.applicable || !a.holds;
      if (o.violation) o.witness = set_text(pts);
      return o;
    });
  });
}

std::vector<ClaimReport> run_ruzsa(ClaimInfo const& info, RunOptions const& opt) {
  return per_prime(info, opt, [&](ClaimReport& r, std::uint64_t p) {
    if (!require_prime(r, p, 13)) return;
    PrimeField const f(p);
    r.params["k"] = {4, 5, 6};
    run_exact(r, opt, info.id + ":" + std::to_string(p), trials_for(info, opt), [&](TrialRng& rng, std::uint64_t) {
      std::size_t const n = static_cast<std::size_t>(rng.between(2, 40));
      Sl2Set const a = random_symmetric_sl2(rng, f, n, true);
      RuzsaCheck const c = ruzsa_check(a, 6, opt.caps.work);
      Outcome o;
      for (unsigned k = 4; k <= 6; ++k) {
        // |A^k| <= K^(k-2) |A|
        mpq_class rhs = uz(a.size());
        for (unsigned i = 0; i < k - 2; ++i) rhs *= c.tripling;
        mpq_class const lhs = uz(c.sizes[k - 1]);
        if (!o.has_bound || lhs / rhs > o.lhs / o.rhs) o.bound(lhs, rhs);
      }
      o.violation = !c.holds;
      if (o.violation) o.witness = "k=" + std::to_string(c.failing_k) + " A=" + set_text(a);
      return o;
    });
  });
}

template <class E, class Draw, class Check>
Outcome pigeonhole_trial(TrialRng& rng, Draw draw, Check check, std::size_t max_size) {
  std::size_t const n = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_size)));
  std::vector<E> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(draw());
  ElementSet<E> const a(std::move(v));
  E const g = draw();
  PigeonholeResult<E> const res = check(a, g);
  Outcome o;
  o.bound(mpq_class(uz(res.set_size)), mpq_class(uz(res.conj_part) * uz(res.stab_part)));
  o.violation = !res.holds || !res.witness;
  if (res.witness) o.tags.push_back("witness_produced");
  if (o.violation) o.witness = "g=" + g.to_string() + " A=" + set_text(a);
  return o;
}

std::vector<ClaimReport> run_cs_sl2(ClaimInfo const& info, RunOptions const& opt) {
  return per_prime(info, opt, [&](ClaimReport& r, std::uint64_t p) {
    if (!require_prime(r, p, 13)) return;
    PrimeField const f(p);
    run_exact(r, opt, info.id + ":" + std::to_string(p), trials_for(info, opt), [&](TrialRng& rng, std::uint64_t) {
      return pigeonhole_trial<Sl2Element>(
          rng, [&] { return random_sl2(rng, f); },
          [](Sl2Set const& a, Sl2Element const& g) { return orbit_stabilizer_check(a, g); }, 30);
    });
  });
}

std::vector<ClaimReport> run_cs_aff(ClaimInfo const& info, RunOptions const& opt) {
  return per_prime(info, opt, [&](ClaimReport& r, std::uint64_t p) {
    if (!require_prime(r, p)) return;
    PrimeField const f(p);
    run_exact(r, opt, info.id + ":" + std::to_string(p), trials_for(info, opt), [&](TrialRng& rng, std::uint64_t) {
      return pigeonhole_trial<AffElement>(
          rng, [&] { return random_aff(rng, f); },
          [](AffSet const& a, AffElement const& g) { return orbit_stabilizer_check(a, g); }, 30);
    });
  });
}

std::vector<ClaimReport> run_energy_decomposition(ClaimInfo const& info, RunOptions const& opt) {
  return per_prime(info, opt, [&](ClaimReport& r, std::uint64_t p) {
    if (!require_prime(r, p, 7)) return;
    PrimeField const f(p);
    Sl2Set const group = enumerate_sl2(f, opt.caps.group);
    run_exact(r, opt, info.id + ":" + std::to_string(p), trials_for(info, opt), [&](TrialRng& rng, std::uint64_t) {
      std::size_t const n = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(group.size())));
      Sl2Set const a = random_sl2_set(rng, f, n);
      EnergyDecomposition const d = energy_decomposition(a, group);
      Outcome o;
      o.bound(mpq_class(d.energy), d.main_term + d.fluctuation);
      o.violation = !d.identity_holds;
      if (o.violation) o.witness = set_text(a);
      return o;
    });
  });
}

std::vector<ClaimReport> run_frobenius(ClaimInfo const& info, RunOptions const& opt) {
  return per_prime(info, opt, [&](ClaimReport& r, std::uint64_t p) {
    if (!require_prime(r, p, 7)) return;
    PrimeField const f(p);
    Sl2Set const group = enumerate_sl2(f, opt.caps.group);
    r.params["value_range"] = {-4, 4};
    run_exact(r, opt, info.id + ":" + std::to_string(p), trials_for(info, opt), [&](TrialRng& rng, std::uint64_t) {
      auto draw = [&] {
        std::vector<std::int64_t> v(group.size());
        std::int64_t sum = 0;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) sum += v[i] = rng.between(-4, 4);
        v.back() = -sum;
        return v;
      };
      std::vector<std::int64_t> const f1 = draw(), f2 = draw();
      FrobeniusCheck const c = frobenius_check(group, f1, f2);
      Outcome o;
      o.bound(mpq_class(c.lhs), mpq_class(c.rhs));
      o.violation = !c.holds;
      if (o.violation) o.witness = "mean-zero pair at trial";
      return o;
    });
  });
}

std::vector<ClaimReport> run_full_product(ClaimInfo const& info, RunOptions const& opt) {
  return per_prime(info, opt, [&](ClaimReport& r, std::uint64_t p) {
    if (!require_prime(r, p, 31)) return;
    PrimeField const f(p);
    std::size_t const order = sl2_order(p);
    std::size_t const threshold = full_product_threshold(order);
    r.params["group_order"] = order;
    r.params["threshold"] = threshold;
    if (threshold > order) {
      skip(r, "threshold exceeds |G|");
      return;
    }
    run_exact(r, opt, info.id + ":" + std::to_string(p), trials_for(info, opt), [&](TrialRng& rng, std::uint64_t) {
      Sl2Set a;
      while (a.size() < threshold) {
        std::size_t const n = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(threshold),
                                                                   static_cast<std::int64_t>(order)));
        a = random_symmetric_sl2(rng, f, n, false);
      }
      FullProductCheck const c = full_product_check(a);
      Outcome o;
      // |AA| >= min(|G|, |A|^2/p^2)/2, reported as bound <= |AA|.
      o.bound(c.bound, mpq_class(uz(c.aa)));
      o.violation = !c.threshold_met || !c.holds;
      o.tags.push_back(c.cube_is_group ? "cube_is_group" : "cube_short");
      if (o.violation) o.witness = "|A|=" + std::to_string(a.size()) + " A=" + set_text(a);
      return o;
    });
  });
}

std::vector<ClaimReport> run_helfgott(ClaimInfo const& info, RunOptions const& opt) {
  return per_prime(info, opt, [&](ClaimReport& r, std::uint64_t p) {
    if (!require_prime(r, p, 31)) return;
    PrimeField const f(p);
    r.params["size_range"] = {1, 24};
    run_exact(r, opt, info.id + ":" + std::to_string(p), trials_for(info, opt), [&](TrialRng& rng, std::uint64_t) {
      std::size_t const n = static_cast<std::size_t>(rng.between(1, 24));
      Sl2Set const a = random_sl2_set(rng, f, n);
      Sl2Element g = random_sl2(rng, f);
      while (!g.is_regular_semisimple()) g = random_sl2(rng, f);
      HelfgottMapResult const h = helfgott_map(a, g);
      Outcome o;
      o.violation = !h.criterion_consistent;
      o.tags.push_back(h.injective ? "injective" : "collision");
      if (h.antipodal_free) {
        o.tags.push_back("antipodal_free");
        // With A n -A empty the torus predicate alone decides injectivity.
        if (h.injective != *h.torus_criterion) o.violation = true;
      } else if (h.injective != *h.torus_criterion) {
        o.tags.push_back("torus_predicate_alone_differs");
      }
      if (o.violation) o.witness = "g=" + g.to_string() + " A=" + set_text(a);
      return o;
    });
  });
}

std::vector<std::uint64_t> default_taus(std::uint64_t p) {
  if (p == 5) return {1, 4};
  if (p == 7) return {1, 3, 4, 6};
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 1; t < p; ++t) {
    if (t != 2 && t != p - 2) out.push_back(t);
  }
  return out;
}

std::vector<ClaimReport> run_triple(ClaimInfo const& info, RunOptions const& opt) {
  return per_prime(info, opt, [&](ClaimReport& r, std::uint64_t p) {
    if (!require_prime(r, p, 13)) return;
    PrimeField const f(p);
    std::vector<std::uint64_t> const taus = default_taus(p);
    r.params["taus"] = taus;
    r.params["mode"] = "exhaustive";
    Json kinds = Json::object();
    for (std::uint64_t tau : taus) {
      TripleCensus const c = triple_intersection_census(f, tau);
      r.trials += c.pairs;
      if (c.violations && r.violations == 0) {
        r.witness = "tau=" + std::to_string(tau) + " y1=" + c.witness->first.to_string() +
                    " y2=" + c.witness->second.to_string();
      }
      r.violations += c.violations;
      Json k = Json::object();
      for (auto const& [kind, n] : c.counts) k[to_string(kind)] = n;
      k["max_intersection"] = c.max_intersection;
      kinds[std::to_string(tau)] = k;
    }
    r.params["verdicts"] = kinds;
    // Trace 0 is described, never asserted.
    Sl2Set const group = enumerate_sl2(f, opt.caps.group);
    std::map<std::string, std::uint64_t> zero;
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (group[i].is_central()) continue;
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        if (group[j].is_central() || group[j] == sl2_negate(group[i])) continue;
        ++zero[to_string(describe_tau_zero_intersection(f, group[i], group[j]).kind)];
      }
    }
    Json z = Json::object();
    for (auto const& [k, n] : zero) z[k] = n;
    r.params["tau_zero_report"] = z;
  });
}

std::vector<ClaimReport> run_affine_small(ClaimInfo const& info, RunOptions const& opt) {
  return per_prime(info, opt, [&](ClaimReport& r, std::uint64_t p) {
    if (!require_prime(r, p)) return;
    PrimeField const f(p);
    r.params["size_range"] = {2, p};
    run_exact(r, opt, info.id + ":" + std::to_string(p), trials_for(info, opt), [&](TrialRng& rng, std::uint64_t t) {
      Outcome o;
      for (int attempt = 0; attempt < 1000; ++attempt) {
        std::size_t const n = static_cast<std::size_t>(rng.between(2, static_cast<std::int64_t>(p)));
        AffSet a;
        if (t % 2 == 0) {
          a = random_symmetric_aff(rng, f, n, rng.below(2) == 1);
        } else {
          GeneratorSpec spec;
          spec.family = Family::kStabilizerConcentrated;
          spec.target = Target::kAff;
          spec.size = std::max<std::size_t>(n, 3);
          spec.field = Field(f);
          spec.seed = rng();
          spec.symmetric = true;
          spec.params["x"] = static_cast<std::int64_t>(rng.below(p));
          spec.params["extra"] = 1;
          try {
            a = std::get<AffSet>(generate_set(spec).set);
          } catch (Error const& e) {
            if (e.code() != ErrorCode::kInfeasibleSize) throw;
            continue;
          }
        }
        if (a.size() < 2 || a.size() > p) continue;
        AffineStructureVerdict const v = affine_structure(a);
        if (v.kind == AffineCase::kInStabilizer) continue;
        o.tags.push_back(t % 2 == 0 ? "random" : "stabilizer_concentrated");
        mpq_class k4 = v.tripling * v.tripling;
        k4 *= k4;
        o.bound(mpq_class(uz(v.projection_size)), 2 * k4);
        o.violation = v.kind != AffineCase::kSmallProjection || !v.small_bound_holds.value_or(false);
        if (o.violation) o.witness = set_text(a);
        return o;
      }
      o.tags.push_back("no_sample");
      return o;
    });
  });
}

std::vector<ClaimReport> run_affine_large(ClaimInfo const& info, RunOptions const& opt) {
  return per_prime(info, opt, [&](ClaimReport& r, std::uint64_t p) {
    if (!require_prime(r, p, 61)) return;
    PrimeField const f(p);
    std::int64_t const lo = static_cast<std::int64_t>(4 * p + 1), hi = static_cast<std::int64_t>(p * (p - 1));
    if (lo > hi) {
      skip(r, "no sets with |A| > 4p in Aff(F_p)");
      return;
    }
    r.params["size_range"] = {lo, hi};
    run_exact(r, opt, info.id + ":" + std::to_string(p), trials_for(info, opt), [&](TrialRng& rng, std::uint64_t) {
      AffSet a;
      while (static_cast<std::int64_t>(a.size()) < lo) {
        a = random_symmetric_aff(rng, f, static_cast<std::size_t>(rng.between(lo, hi)), rng.below(2) == 1);
      }
      AffineStructureVerdict const v = affine_structure(a);
      Outcome o;
      mpq_class const k3 = v.tripling * v.tripling * v.tripling;
      o.bound(mpq_class(uz(v.projection_size)), qcanon(2 * k3 * uz(a.size()) / uz(p)));
      o.violation = v.kind != AffineCase::kLargeSet || !v.large_bound_holds.value_or(false) ||
                    !v.b_axis_in_a8.value_or(false);
      if (o.violation) o.witness = set_text(a);
      return o;
    });
  });
}

// Eight nested loops over (c, d) pairs: E(L) straight from the definition
// of g^-1 h for x -> c x + d.
mpz_class grid_energy_oracle(ScalarSet const& c, ScalarSet const& d, GridForm form) {
  std::vector<std::pair<Scalar, Scalar>> maps;
  for (Scalar const& x : c) {
    for (Scalar const& y : d) maps.emplace_back(x, form == GridForm::kPlain ? y : x * y);
  }
  std::uint64_t count = 0;
  for (auto const& [a1, b1] : maps) {
    for (auto const& [a2, b2] : maps) {
      Scalar const qa = a2 / a1, qb = (b2 - b1) / a1;
      for (auto const& [a3, b3] : maps) {
        for (auto const& [a4, b4] : maps) {
          if (a4 / a3 == qa && (b4 - b3) / a3 == qb) ++count;
        }
      }
    }
  }
  return mpz_class(static_cast<unsigned long>(count));
}

ScalarSet random_nonzero_set(TrialRng& rng, Field const& field, std::size_t n, bool rationals) {
  std::vector<Scalar> v;
  std::set<Scalar> seen;
  while (v.size() < n) {
    Scalar x;
    if (field.is_prime()) {
      x = Scalar::from_int(1 + static_cast<std::int64_t>(rng.below(field.modulus() - 1)), field);
    } else if (rationals) {
      x = Scalar::rational(static_cast<long>(rng.between(-12, 12)), static_cast<long>(rng.between(1, 4)));
    } else {
      x = Scalar::from_int(rng.between(-24, 24), field);
    }
    if (!x.is_zero() && seen.insert(x).second) v.push_back(x);
  }
  return ScalarSet(std::move(v));
}

std::vector<ClaimReport> run_grid_energy(ClaimInfo const& info, RunOptions const& opt) {
  return per_prime(info, opt, [&](ClaimReport& r, std::uint64_t p) {
    Field const field = p == 0 ? Field::rationals() : Field::prime(p);
    std::size_t const cap = p == 0 ? 12 : std::min<std::size_t>(12, p - 1);
    r.params["size_range"] = {1, cap};
    r.params["oracle_max"] = 5;
    run_exact(r, opt, info.id + ":" + std::to_string(p), trials_for(info, opt), [&](TrialRng& rng, std::uint64_t) {
      std::size_t const nc = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(cap)));
      std::size_t const nd = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(cap)));
      ScalarSet const c = random_nonzero_set(rng, field, nc, rng.below(2) == 1);
      ScalarSet d = random_nonzero_set(rng, field, nd, rng.below(2) == 1);
      if (rng.below(2) == 1) d = d.set_union(ScalarSet{Scalar::from_int(0, field)});
      GridEnergyReport const plain = grid_energy_suite(c, d, GridForm::kPlain);
      GridEnergyReport const scaled = grid_energy_suite(c, d, GridForm::kScaled);
      Outcome o;
      o.bound(mpq_class(plain.e3_direct), mpq_class(plain.e3_bound));
      std::string fail;
      if (!plain.identity_holds) fail += " plain-identity";
      if (!scaled.identity_holds) fail += " scaled-identity";
      if (!plain.e3_bound_holds) fail += " e3-bound";
      o.tags.push_back(scaled.e3_bound_holds ? "scaled_e3_within_bound" : "scaled_e3_exceeds_bound");
      if (c.size() <= 5 && d.size() <= 5) {
        o.tags.push_back("oracle_checked");
        if (grid_energy_oracle(c, d, GridForm::kPlain) != plain.energy_direct) fail += " plain-oracle";
        if (grid_energy_oracle(c, d, GridForm::kScaled) != scaled.energy_direct) fail += " scaled-oracle";
      }
      o.violation = !fail.empty();
      if (o.violation) o.witness = fail.substr(1) + ": C=" + set_text(c) + " D=" + set_text(d);
      return o;
    });
  });
}

std::vector<ClaimReport> run_cayley(ClaimInfo const& info, RunOptions const& opt) {
  return per_prime(info, opt, [&](ClaimReport& r, std::uint64_t p) {
    if (!require_prime(r, p, 31)) return;
    PrimeField const f(p);
    Sl2Set const gens{sl2_weyl(f), sl2_unipotent(f, 1)};
    BfsResult const q = cayley_bfs(gens, opt.caps.group);
    BfsResult const l = cayley_bfs_layered(gens, opt.caps.group);
    r.trials = 1;
    r.params["generators"] = "symmetrized {S, T}";
    r.params["diameter"] = q.diameter;
    r.params["layers"] = q.layers;
    bool increasing = true;
    for (std::size_t i = 1; i < q.growth.size(); ++i) increasing = increasing && q.growth[i] > q.growth[i - 1];
    bool const agree = q.layers == l.layers && q.diameter == l.diameter && q.generated == l.generated;
    bool const monotone = ball_monotone(gens, q.diameter + 1);
    r.lhs = std::to_string(q.growth.back());
    r.rhs = std::to_string(q.group_order);
    r.ratio = decimal_string(qcanon(mpq_class(uz(q.growth.back()), uz(q.group_order))));
    if (!agree || !monotone || !increasing || !q.generated) {
      r.violations = 1;
      r.witness = std::string(agree ? "" : "implementations disagree ") + (monotone ? "" : "ball not monotone ") +
                  (increasing ? "" : "growth stalls ") + (q.generated ? "" : "not generated");
    }
  });
}

std::vector<ClaimReport> run_escape(ClaimInfo const& info, RunOptions const& opt) {
  return per_prime(info, opt, [&](ClaimReport& r, std::uint64_t p) {
    if (!require_prime(r, p, 13)) return;
    PrimeField const f(p);
    std::size_t const order = sl2_order(p);
    run_exact(r, opt, info.id + ":" + std::to_string(p), trials_for(info, opt), [&](TrialRng& rng, std::uint64_t t) {
      // Half the trials sit near the top of the size range where the
      // precondition can hold.
      std::int64_t const lo = t % 2 == 0 ? 2 : static_cast<std::int64_t>(order * 3 / 4);
      for (;;) {
        std::size_t const n = static_cast<std::size_t>(rng.between(lo, static_cast<std::int64_t>(order)));
        Sl2Set const a = random_symmetric_sl2(rng, f, n, rng.below(2) == 1);
        if (a.empty() || !generates_sl2(a, opt.caps.group)) continue;
        EscapeResult const e = escape_regular_semisimple(a, opt.caps.group);
        Outcome o;
        if (e.precondition_held) o.tags.push_back("precondition_held");
        if (e.found) o.tags.push_back(e.found_in_set ? "found_in_A" : "found_in_A2");
        o.violation = e.violation;
        if (o.violation) o.witness = set_text(a);
        return o;
      }
    });
  });
}

std::vector<ClaimReport> run_line_slice(ClaimInfo const& info, RunOptions const& opt) {
  return per_prime(info, opt, [&](ClaimReport& r, std::uint64_t p) {
    if (!require_prime(r, p, 13)) return;
    PrimeField const f(p);
    r.params["k"] = 1;
    run_exact(r, opt, info.id + ":" + std::to_string(p), trials_for(info, opt), [&](TrialRng& rng, std::uint64_t) {
      for (;;) {
        std::size_t const n = static_cast<std::size_t>(rng.between(2, 40));
        Sl2Set const a = random_symmetric_sl2(rng, f, n, rng.below(2) == 1);
        if (!generates_sl2(a, opt.caps.group)) continue;
        SliceReport const s = slice_measurements(a, 1, opt.caps.work);
        Outcome o;
        // slice^3 <= 8 |A^5|
        o.bound(mpq_class(zpow(uz(s.max_line_slice), 3)), mpq_class(8 * uz(s.big_power_size)));
        o.violation = !s.line_bound_holds;
        if (o.violation) o.witness = set_text(a);
        return o;
      }
    });
  });
}

std::vector<ClaimReport> run_coset_energy(ClaimInfo const& info, RunOptions const& opt) {
  return per_prime(info, opt, [&](ClaimReport& r, std::uint64_t p) {
    if (!require_prime(r, p, 13)) return;
    PrimeField const f(p);
    Field const field(f);
    AffSet const group = enumerate_aff(field);
    // Every left coset of U0 and of each Stab(x), listed once.
    std::vector<AffSet> unipotent_cosets, torus_cosets;
    {
      std::set<std::vector<AffElement>> seen_u, seen_t;
      AffSet const u = aff_unipotent(field);
      std::vector<AffSet> stabs;
      for (std::uint64_t x = 0; x < p; ++x) stabs.push_back(aff_stabilizer(field, Scalar::residue(x, f)));
      for (AffElement const& g : group) {
        auto translate = [&](AffSet const& h) {
          std::vector<AffElement> v;
          for (AffElement const& e : h) v.push_back(aff_mul(g, e));
          return AffSet(std::move(v));
        };
        AffSet cu = translate(u);
        if (seen_u.insert(std::vector<AffElement>(cu.begin(), cu.end())).second) unipotent_cosets.push_back(cu);
        for (AffSet const& s : stabs) {
          AffSet ct = translate(s);
          if (seen_t.insert(std::vector<AffElement>(ct.begin(), ct.end())).second) torus_cosets.push_back(ct);
        }
      }
    }
    r.params["unipotent_cosets"] = unipotent_cosets.size();
    r.params["torus_cosets"] = torus_cosets.size();
    run_exact(r, opt, info.id + ":" + std::to_string(p), trials_for(info, opt), [&](TrialRng& rng, std::uint64_t) {
      std::size_t const n = static_cast<std::size_t>(rng.between(2, static_cast<std::int64_t>(group.size())));
      AffSet const a = random_aff_set(rng, f, n);
      CosetEnergyStats const s = coset_energy_stats(a);
      auto best = [&](std::vector<AffSet> const& cosets) {
        mpz_class m = 0;
        for (AffSet const& c : cosets) {
          AffSet const hit = a.set_intersection(c);
          if (!hit.empty()) m = std::max(m, energy(hit, hit, GroupOp::kLeftQuotient));
        }
        return m;
      };
      mpz_class const bu = best(unipotent_cosets), bt = best(torus_cosets);
      Outcome o;
      o.violation = bu != s.best_unipotent_energy || bt != s.best_torus_energy;
      if (o.violation) o.witness = set_text(a);
      return o;
    });
  });
}

std::vector<ClaimReport> run_torus_count(ClaimInfo const& info, RunOptions const& opt) {
  return per_prime(info, opt, [&](ClaimReport& r, std::uint64_t p) {
    if (!require_prime(r, p, 13)) return;
    PrimeField const f(p);
    Sl2Set const group = enumerate_sl2(f, opt.caps.group);
    Json rows = Json::array();
    for (Sl2Element const& base : {sl2_diagonal(f, 2), [&] {
           // A regular semisimple element with non-square discriminant.
           for (Sl2Element const& g : group) {
             if (g.is_regular_semisimple() && sl2_maximal_torus(g).kind == TorusKind::kNonSplit) return g;
           }
           return Sl2Element::identity(f);
         }()}) {
      if (!base.is_regular_semisimple()) continue;
      TorusDescriptor const t = sl2_maximal_torus(base);
      std::set<std::vector<Sl2Element>> conjugates;
      for (Sl2Element const& h : group) {
        std::vector<Sl2Element> v;
        for (Sl2Element const& x : t.elements) v.push_back(sl2_conjugate(h, x));
        std::sort(v.begin(), v.end());
        conjugates.insert(std::move(v));
      }
      std::size_t const normalizer = sl2_normalizer(t.elements).size();
      ++r.trials;
      bool const ok = conjugates.size() * normalizer == group.size() && normalizer == t.normalizer_size;
      if (!ok && r.violations++ == 0) r.witness = "torus of " + base.to_string();
      rows.push_back(Json{{"kind", t.kind == TorusKind::kSplit ? "split" : "non-split"},
                          {"order", t.elements.size()},
                          {"conjugates", conjugates.size()},
                          {"normalizer", normalizer}});
    }
    r.params["tori"] = rows;
  });
}

// ---------------------------------------------------------------------------
// Scaling claims

struct ScanPoint {
  std::size_t size;
  std::string lhs, rhs, ratio;
  double x, y;
};

void finish_scan(ClaimReport& r, std::vector<ScanPoint> const& pts, std::uint64_t p) {
  std::vector<std::pair<double, double>> series;
  for (ScanPoint const& s : pts) {
    r.rows.push_back(ScanRow{p, s.size, s.lhs, s.rhs, s.ratio, s.x, s.y});
    if (s.x > 0 && s.y > 0) series.emplace_back(s.x, s.y);
  }
  r.trials += pts.size();
}

// Fits all rows of a report once every field has contributed.
void fit_rows(ClaimReport& r) {
  std::vector<std::pair<double, double>> series;
  for (ScanRow const& row : r.rows) {
    if (row.fit_x > 0 && row.fit_y > 0) series.emplace_back(row.fit_x, row.fit_y);
  }
  try {
    ExponentFit const fit = fit_exponent(series);
    r.exponent = fit.slope;
    r.residual = fit.max_residual;
  } catch (Error const& e) {
    if (e.code() != ErrorCode::kDegenerateSeries) throw;
    r.params["fit_error"] = e.what();
  }
}

// Runs body(p, rng_for_row) for each prime and collects one report holding
// every row.
template <class Body>
std::vector<ClaimReport> run_scan(ClaimInfo const& info, RunOptions const& opt, Json axes, Body body) {
  ClaimReport r = blank_report(info, 0);
  std::vector<std::uint64_t> const primes = primes_for(info, opt);
  r.p = primes.empty() ? 0 : primes.front();
  r.params["p_list"] = primes;
  r.params["fit"] = std::move(axes);
  for (std::uint64_t p : primes) {
    std::vector<ScanPoint> pts = body(r, p);
    finish_scan(r, pts, p);
  }
  fit_rows(r);
  return {std::move(r)};
}

std::string dstr(double x) { return double_string(x); }

std::vector<ClaimReport> scan_growth(ClaimInfo const& info, RunOptions const& opt) {
  return run_scan(info, opt, Json{{"x", "|A|"}, {"y", "K"}}, [&](ClaimReport& r, std::uint64_t p) {
    std::vector<ScanPoint> out;
    if (!require_prime(r, p, 31)) return out;
    PrimeField const f(p);
    std::uint64_t const reps = trials_for(info, opt);
    for (std::size_t n : {8, 12, 16, 24, 32, 48, 64, 96, 128}) {
      for (std::uint64_t t = 0; t < reps; ++t) {
        TrialRng rng(opt.seed, info.id + ":" + std::to_string(p) + ":" + std::to_string(n), t);
        Sl2Set const a = random_symmetric_sl2(rng, f, n, true);
        std::size_t const cube = power_set_k(a, 3, opt.caps.work).size();
        mpq_class const k = qcanon(mpq_class(uz(cube), uz(a.size())));
        out.push_back({a.size(), std::to_string(cube), std::to_string(a.size()), decimal_string(k),
                       static_cast<double>(a.size()), k.get_d()});
      }
    }
    return out;
  });
}

std::vector<std::size_t> small_divisors(std::uint64_t p, std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out;
  for (std::size_t d = lo; d <= hi; ++d) {
    if ((p - 1) % d == 0) out.push_back(d);
  }
  return out;
}

std::vector<ClaimReport> scan_grid_energy(ClaimInfo const& info, RunOptions const& opt) {
  return run_scan(info, opt, Json{{"x", "|C|^(5/2) |D|^3"}, {"y", "E(L)"}}, [&](ClaimReport& r, std::uint64_t p) {
    std::vector<ScanPoint> out;
    if (!require_prime(r, p)) return out;
    PrimeField const f(p);
    std::size_t const top = static_cast<std::size_t>(std::sqrt(static_cast<double>(p)));
    for (std::size_t m : small_divisors(p, 3, std::min<std::size_t>(12, top))) {
      ScalarSet const c = multiplicative_subgroup(f, m);
      for (std::size_t n : {4, 8, 12}) {
        TrialRng rng(opt.seed, info.id + ":" + std::to_string(p) + ":" + std::to_string(m), n);
        ScalarSet const d = random_scalar_set(rng, Field(f), n);
        GridEnergyReport const g = grid_energy_suite(c, d, GridForm::kPlain);
        out.push_back({c.size() * d.size(), mpz_string(g.energy_direct), dstr(g.rough_main_term),
                       dstr(g.energy_direct.get_d() / g.rough_main_term), g.rough_main_term,
                       g.energy_direct.get_d()});
      }
    }
    return out;
  });
}

std::vector<ClaimReport> scan_quadruples(ClaimInfo const& info, RunOptions const& opt) {
  double worst_distinct = 0, worst_repeats = 0;
  auto reports = run_scan(
      info, opt, Json{{"x", "|D|"}, {"y", "Q(D) with repeats"}}, [&](ClaimReport& r, std::uint64_t p) {
        std::vector<ScanPoint> out;
        if (!require_prime(r, p)) return out;
        PrimeField const f(p);
        for (std::size_t n = 3; n <= 10 && n <= p; ++n) {
          TrialRng rng(opt.seed, info.id + ":" + std::to_string(p), n);
          ScalarSet const d = random_scalar_set(rng, Field(f), n);
          QuadrupleCount const q = collinear_quadruples(d);
          double const main = std::pow(static_cast<double>(n), 8) / (static_cast<double>(p) * p);
          double const scale = std::pow(static_cast<double>(n), 5) * std::log(static_cast<double>(n));
          worst_distinct = std::max(worst_distinct, std::abs(q.distinct.get_d() - main) / scale);
          worst_repeats = std::max(worst_repeats, std::abs(q.with_repeats.get_d() - main) / scale);
          out.push_back({n, mpz_string(q.with_repeats), dstr(main),
                         dstr(std::abs(q.with_repeats.get_d() - main) / scale), static_cast<double>(n),
                         q.with_repeats.get_d()});
        }
        return out;
      });
  reports.front().params["max_normalized_deviation"] = {{"distinct", worst_distinct}, {"with_repeats", worst_repeats}};
  reports.front().params["tighter_convention"] = worst_distinct <= worst_repeats ? "distinct" : "with_repeats";
  return reports;
}

std::vector<ClaimReport> scan_quotients(ClaimInfo const& info, RunOptions const& opt) {
  return run_scan(info, opt, Json{{"x", "min(|G|^(2+1/18), p^(4/3) |G|^(-5/6))"}, {"y", "|(G-G)/(G-G)|"}},
                  [&](ClaimReport& r, std::uint64_t p) {
                    std::vector<ScanPoint> out;
                    if (!require_prime(r, p)) return out;
                    PrimeField const f(p);
                    std::size_t const top = static_cast<std::size_t>(std::sqrt(static_cast<double>(p)));
                    for (std::size_t m : small_divisors(p, 3, top)) {
                      ScalarSet const g = multiplicative_subgroup(f, m);
                      ScalarSet const diff = product_set(g, g, ScalarOp::kSub);
                      std::size_t const q = product_set(diff, diff, ScalarOp::kDiv, opt.caps.work).size();
                      double const gm = static_cast<double>(m);
                      double const bound = std::min(std::pow(gm, 2.0 + 1.0 / 18), std::pow(static_cast<double>(p), 4.0 / 3) *
                                                                                     std::pow(gm, -5.0 / 6));
                      out.push_back({m, std::to_string(q), dstr(bound), dstr(q / bound), bound, static_cast<double>(q)});
                    }
                    return out;
                  });
}

ScalarSet family_set(std::string const& family, std::size_t n) {
  GeneratorSpec spec;
  spec.family = family == "interval" ? Family::kInterval : Family::kGeometricProgression;
  spec.size = n;
  spec.field = Field::rationals();
  return std::get<ScalarSet>(generate_set(spec).set);
}

std::vector<ClaimReport> scan_mixed(ClaimInfo const& info, RunOptions const& opt, std::string const& family) {
  return run_scan(info, opt, Json{{"x", "|A|"}, {"y", "Sum r^2_{A(A+A)}"}, {"family", family}},
                  [&](ClaimReport& r, std::uint64_t p) {
                    std::vector<ScanPoint> out;
                    if (p != 0) {
                      skip(r, "scan runs over Q");
                      return out;
                    }
                    for (std::size_t n : {4, 6, 8, 12, 16, 24, 32}) {
                      ScalarSet const a = family_set(family, n);
                      mpz_class const e = mixed_energy(a, MixedForm::kTimesSum);
                      double const ref = std::pow(static_cast<double>(n), 4.5);
                      out.push_back({n, mpz_string(e), dstr(ref), dstr(e.get_d() / ref), static_cast<double>(n), e.get_d()});
                    }
                    return out;
                  });
}

std::vector<ClaimReport> scan_additive(ClaimInfo const& info, RunOptions const& opt, std::string const& family) {
  return run_scan(info, opt, Json{{"x", "|A|"}, {"y", "E+(A, B)"}, {"A", "geometric progression"}, {"B", family}},
                  [&](ClaimReport& r, std::uint64_t p) {
                    std::vector<ScanPoint> out;
                    if (p != 0) {
                      skip(r, "scan runs over Q");
                      return out;
                    }
                    for (std::size_t n : {4, 6, 8, 12, 16, 24, 32, 48}) {
                      ScalarSet const a = family_set("gp", n), b = family_set(family, n);
                      mpz_class const e = energy(a, b, ScalarOp::kSub, 2);
                      double const ref = static_cast<double>(n) * std::pow(static_cast<double>(n), 1.5);
                      out.push_back({n, mpz_string(e), dstr(ref), dstr(e.get_d() / ref), static_cast<double>(n), e.get_d()});
                    }
                    return out;
                  });
}

std::vector<ClaimReport> scan_schreier(ClaimInfo const& info, RunOptions const& opt) {
  return run_scan(info, opt, Json{{"x", "|S| |A|"}, {"y", "Schreier statistic"}}, [&](ClaimReport& r,
                                                                                       std::uint64_t p) {
    std::vector<ScanPoint> out;
    if (!require_prime(r, p)) return out;
    PrimeField const f(p);
    Field const field(f);
    Json concentration = Json::array();
    for (std::size_t n : {8, 16, 32, 64}) {
      if (n > p) break;
      for (int share : {0, 50, 100}) {
        TrialRng rng(opt.seed, info.id + ":" + std::to_string(p) + ":" + std::to_string(share), n);
        std::vector<Scalar> av;
        for (std::size_t i = 0; i < n; ++i) av.push_back(Scalar::residue(static_cast<std::int64_t>(i), f));
        ScalarSet const a(std::move(av));
        // `share` percent of S are translations, the rest small dilations.
        std::unordered_set<AffElement> s;
        while (s.size() < n) {
          bool const translate = rng.below(100) < static_cast<std::uint64_t>(share);
          std::int64_t const slope = translate ? 1 : rng.between(1, 3);
          s.insert(AffElement::from_ints(field, slope, rng.between(-static_cast<std::int64_t>(n) / 2,
                                                                   static_cast<std::int64_t>(n) / 2)));
        }
        AffSet const maps(std::vector<AffElement>(s.begin(), s.end()));
        ImageSetResult const img = image_set(a, maps);
        mpz_class const denom = uz(maps.size()) * uz(a.size());
        out.push_back({n, std::to_string(img.schreier_stat), mpz_string(denom),
                       decimal_string(qcanon(mpq_class(uz(img.schreier_stat), denom))), denom.get_d(),
                       static_cast<double>(img.schreier_stat)});
        concentration.push_back(Json{{"size", n}, {"translation_share", share}, {"M", mpq_string(img.concentration)}});
      }
    }
    r.params["concentration"] = concentration;
    return out;
  });
}

std::vector<ClaimReport> scan_diameter(ClaimInfo const& info, RunOptions const& opt) {
  return run_scan(info, opt, Json{{"x", "|G|"}, {"y", "diameter"}}, [&](ClaimReport& r, std::uint64_t p) {
    std::vector<ScanPoint> out;
    if (!require_prime(r, p, 31)) return out;
    PrimeField const f(p);
    std::vector<Sl2Set> sets{Sl2Set{sl2_weyl(f), sl2_unipotent(f, 1)}};
    for (std::uint64_t t = 0; t < trials_for(info, opt); ++t) {
      TrialRng rng(opt.seed, info.id + ":" + std::to_string(p), t);
      sets.push_back(random_sl2_set(rng, f, 2));
    }
    for (Sl2Set const& s : sets) {
      BfsResult const b = cayley_bfs(s, opt.caps.group);
      if (!b.generated) continue;
      double const lg = std::log(static_cast<double>(b.group_order));
      out.push_back({b.group_order, std::to_string(b.diameter), dstr(lg), dstr(b.diameter / lg),
                     static_cast<double>(b.group_order), static_cast<double>(b.diameter)});
    }
    return out;
  });
}

std::vector<ClaimReport> scan_trace_slices(ClaimInfo const& info, RunOptions const& opt) {
  return run_scan(info, opt, Json{{"x", "K^(4k-4)/3 |A|^(2/3) + K^k |A|^(1/3)"}, {"y", "max |A^k n C_tau|"}, {"k", 2}},
                  [&](ClaimReport& r, std::uint64_t p) {
                    std::vector<ScanPoint> out;
                    if (!require_prime(r, p, 13)) return out;
                    PrimeField const f(p);
                    for (std::size_t n : {6, 10, 16, 24, 32}) {
                      TrialRng rng(opt.seed, info.id + ":" + std::to_string(p), n);
                      Sl2Set a = random_symmetric_sl2(rng, f, n, true);
                      while (!generates_sl2(a, opt.caps.group)) a = random_symmetric_sl2(rng, f, n, true);
                      SliceReport const s = slice_measurements(a, 2, opt.caps.work);
                      std::size_t best = 0;
                      for (auto [tau, count] : s.trace_slices) {
                        if (tau != 0) best = std::max(best, count);
                      }
                      double const k = s.tripling.get_d(), m = static_cast<double>(a.size());
                      double const ref = std::pow(k, 4.0 / 3) * std::cbrt(m * m) + k * k * std::cbrt(m);
                      out.push_back({a.size(), std::to_string(best), dstr(ref), dstr(best / ref), ref,
                                     static_cast<double>(best)});
                    }
                    return out;
                  });
}

std::vector<ClaimInfo> build_registry() {
  using M = ClaimMode;
  std::vector<ClaimInfo> v;
  auto add = [&](std::string id, std::string anchor, M mode, std::vector<std::uint64_t> p, std::uint64_t trials,
                 std::string grid, decltype(ClaimInfo::run) run) {
    v.push_back(ClaimInfo{std::move(id), std::move(anchor), mode, std::move(p), trials, std::move(grid), std::move(run)});
  };
  add("szonyi", "A non-collinear set of 1 < |A| <= p points determines at least (|A|+3)/2 distinct directions",
      M::kExactConstant, {3, 5, 7, 11, 13}, 10000, "p = 3 exhaustive; random non-collinear 3 <= |A| <= p", run_szonyi);
  add("vinh", "|I(P,L) - |P||L|/p| <= sqrt(p |P| |L|)", M::kExactConstant, {5, 7, 11}, 1000,
      "random P, L of any size", run_vinh);
  add("alon-beck", "|P| > (1+eps)(p+1) determines at least eps^2(1-eps)/(2+2eps) (p+1)^2 lines", M::kExactConstant,
      {5, 7, 11}, 200, "eps = 1/2, random |P| > 3(p+1)/2", run_alon);
  add("ruzsa", "|A^k| <= K^(k-2) |A|", M::kExactConstant, {5}, 100,
      "random symmetric A with identity, k = 4, 5, 6", run_ruzsa);
  add("cs-inequality-sl2", "|A| <= |Conj(g) n A g A^-1| |Stab(g) n a0^-1 A|", M::kExactConstant, {5}, 500,
      "random A, g in SL2", run_cs_sl2);
  add("cs-inequality-aff", "|A| <= |Conj(g) n A g A^-1| |Stab(g) n a0^-1 A|", M::kExactConstant, {7}, 500,
      "random A, g in Aff", run_cs_aff);
  add("energy-decomposition", "E(A) = |A|^4/|G| + Sum_g (Sum_x f(x) f(gx))^2 with f = A - |A|/|G|",
      M::kExactConstant, {5}, 50, "random A in SL2", run_energy_decomposition);
  add("frobenius", "Sum_g (Sum_x f1(x) f2(gx))^2 <= p^2 ||f1||^2 ||f2||^2 for mean-zero f1, f2", M::kExactConstant,
      {5}, 100, "random integer functions in [-4, 4] with zero sum", run_frobenius);
  add("a3-equals-g", "|A| >= 2|G|^(8/9) implies A^3 = G; |AA| >= min(|G|, |A|^2/p^2)/2", M::kExactConstant, {11}, 20,
      "random symmetric A above the threshold", run_full_product);
  add("helfgott-criterion", "h -> h g h^-1 is one-to-one on A as long as A^-1 A does not meet T \\ {+-1}",
      M::kExactConstant, {7}, 1000, "random A, regular semisimple g", run_helfgott);
  add("triple-intersection", "|C_tau n y1 C_tau n y2 C_tau| <= 2, or a line l_gamma, or l_gamma u l_gamma^-1",
      M::kExactConstant, {5, 7}, 0, "all admissible y1, y2; tau in {1,4} at p=5, {1,3,4,6} at p=7", run_triple);
  add("affine-small", "if |A| <= (1+eps)p, one has |pi(A)| <= 2K^4", M::kExactConstant, {7, 11, 13, 31}, 1000,
      "random and stabilizer-concentrated symmetric A, |A| <= p, not in any Stab(x)", run_affine_small);
  add("affine-large", "for |A| > 4p, |pi(A)| <= 2K^3 |A|/p and A^8 contains the b-axis", M::kExactConstant, {11}, 100,
      "random symmetric A with |A| > 4p", run_affine_large);
  add("grid-energy", "E(L) = Sum_s r^2_{C/C}(s) r_{(D-D)/(D-D)}(s) + trivial; E_3(L) <= |C| Sum_x r^3_{(D-D)/C}(x)",
      M::kExactConstant, {13, 0}, 100, "random C, D with |C|, |D| <= 12; oracle for |C|, |D| <= 5", run_grid_energy);
  add("cayley-bfs", "two breadth-first searches agree; ball(k+1) within ball(k) S", M::kExactConstant, {3, 5}, 1,
      "symmetrized {S, T}", run_cayley);
  add("escape", "|A| > 12 + 16 K |A|^(1/3) gives a regular semisimple element of nonzero trace", M::kExactConstant,
      {5, 7}, 200, "random symmetric generating A", run_escape);
  add("line-slice", "|l_gamma n A^k| <= 2 |A^(3k+2)|^(1/3)", M::kExactConstant, {5, 7}, 200,
      "random symmetric generating A, k = 1", run_line_slice);
  add("coset-energy", "w and w* maxima over all cosets of U0 and Stab(x)", M::kExactConstant, {7}, 100,
      "random A against coset enumeration", run_coset_energy);
  add("torus-conjugates", "a maximal torus has |G| / |N(T)| conjugates", M::kExactConstant, {5, 7, 11}, 0,
      "one split and one non-split torus", run_torus_count);

  add("growth-exponent-scan", "K >> |A|^(1/20) unless A^3 = G", M::kScalingReport, {11, 13}, 2,
      "random symmetric A, |A| in 8..128", scan_growth);
  add("grid-energy-scan", "E(L) << |C|^3 |D|^4 / p + |C|^(5/2) |D|^3", M::kScalingReport, {61, 181, 241}, 1,
      "C a multiplicative subgroup, D random of size 4, 8, 12", scan_grid_energy);
  add("collinear-quadruples-scan", "Q(D) - |D|^8/p^2 << |D|^5 log |D|", M::kScalingReport, {101, 211}, 1,
      "random D, |D| = 3..10", scan_quadruples);
  add("quotient-set-scan", "|(G-G)/(G-G)| >> min(|G|^(2+1/18), p^(4/3) |G|^(-5/6))", M::kScalingReport,
      {181, 241, 421, 541, 601, 661}, 1, "multiplicative subgroups with 3 <= |G| <= sqrt(p)", scan_quotients);
  add("mixed-energy-scan-interval", "Sum_x r^2_{A(A+A)}(x) << |A|^(9/2 - c)", M::kScalingReport, {0}, 1,
      "A = {1..n}", [](ClaimInfo const& i, RunOptions const& o) { return scan_mixed(i, o, "interval"); });
  add("mixed-energy-scan-gp", "Sum_x r^2_{A(A+A)}(x) << |A|^(9/2 - c)", M::kScalingReport, {0}, 1,
      "A = {1, 2, ..., 2^(n-1)}", [](ClaimInfo const& i, RunOptions const& o) { return scan_mixed(i, o, "gp"); });
  add("additive-energy-scan-interval", "E+(A, B) with |AA| <= M |A|", M::kScalingReport, {0}, 1,
      "A geometric progression, B = {1..n}",
      [](ClaimInfo const& i, RunOptions const& o) { return scan_additive(i, o, "interval"); });
  add("additive-energy-scan-gp", "E+(A, B) with |AA| <= M |A|", M::kScalingReport, {0}, 1,
      "A and B geometric progressions",
      [](ClaimInfo const& i, RunOptions const& o) { return scan_additive(i, o, "gp"); });
  add("schreier-scan", "Sum_{x in A} Sum_{s in S} A(sx) against the concentration M", M::kScalingReport, {101}, 1,
      "A = {0..n-1}, S mixing translations and small dilations", scan_schreier);
  add("diameter-scan", "diameter at most C (log|G| / log(N/C))^d", M::kScalingReport, {5, 7, 11, 13}, 3,
      "{S, T} and random pairs", scan_diameter);
  add("trace-slice-scan", "|A^k n C_tau| << K^((4k-4)/3) |A|^(2/3) + K^k |A|^(1/3)", M::kScalingReport, {7, 11}, 1,
      "random symmetric generating A, k = 2", scan_trace_slices);
  return v;
}

}  // namespace

std::vector<ClaimInfo> const& claim_registry() {
  static std::vector<ClaimInfo> const registry = build_registry();
  return registry;
}

}  // namespace sumprod
