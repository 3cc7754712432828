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


// Template definitions for harness.hpp.

#ifndef SUMPROD_HARNESS_IMPL_HPP_
#define SUMPROD_HARNESS_IMPL_HPP_

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <unordered_set>

#include "sumprod/error.hpp"

namespace sumprod {

inline constexpr std::uint64_t kTrialChunk = 64;

template <class E, class Draw>
ElementSet<E> random_symmetric(Draw draw, std::size_t n, bool include_identity, std::size_t order,
                               bool* truncated) {
  if (n > order) throw Error(ErrorCode::kInfeasibleSize, "requested size exceeds the group order");
  if (truncated) *truncated = false;
  if (n == 0) return {};
  std::unordered_set<E> pool;
  std::optional<E> one;
  std::uint64_t const budget = 64 * std::uint64_t{order} + 4096;
  for (std::uint64_t draws = 0; pool.size() < n; ++draws) {
    if (draws > budget) throw Error(ErrorCode::kInfeasibleSize, "generator family cannot reach the requested size");
    E g = draw();
    if (!one) {
      one = group_identity_like(g);
      if (include_identity) pool.insert(*one);
    }
    pool.insert(group_inv(g));
    pool.insert(std::move(g));
  }
  std::vector<E> sorted(pool.begin(), pool.end());
  std::sort(sorted.begin(), sorted.end());
  std::unordered_set<E> kept;
  std::vector<E> out;
  if (include_identity) {
    kept.insert(*one);
    out.push_back(*one);
  }
  for (E const& g : sorted) {
    if (out.size() == n) break;
    if (kept.count(g)) continue;
    E const inv = group_inv(g);
    std::size_t const need = inv == g ? 1 : 2;
    if (out.size() + need > n) continue;
    kept.insert(g);
    out.push_back(g);
    if (need == 2) {
      kept.insert(inv);
      out.push_back(inv);
    }
  }
  if (truncated) *truncated = out.size() < n;
  return ElementSet<E>(std::move(out));
}

template <class R>
std::vector<R> run_trials(std::uint64_t n, std::size_t threads, std::function<R(std::uint64_t)> const& fn,
                          std::function<bool(R const&)> const& stop) {
  std::vector<R> results;
  threads = std::max<std::size_t>(threads, 1);
  for (std::uint64_t begin = 0; begin < n; begin += kTrialChunk) {
    std::uint64_t const end = std::min(n, begin + kTrialChunk);
    std::vector<std::optional<R>> chunk(end - begin);
    std::atomic<std::uint64_t> next{begin};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&]() {
      for (std::uint64_t i; (i = next.fetch_add(1)) < end;) {
        if (failed.load()) return;
        try {
          chunk[i - begin].emplace(fn(i));
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
          return;
        }
      }
    };
    std::size_t const workers = std::min<std::uint64_t>(threads, end - begin);
    if (workers <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    bool halt = false;
    for (auto& r : chunk) {
      halt = halt || stop(*r);
      results.push_back(std::move(*r));
    }
    if (halt) break;
  }
  return results;
}

}  // namespace sumprod

#endif  // SUMPROD_HARNESS_IMPL_HPP_
