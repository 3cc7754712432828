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

#ifndef SUMPROD_ELEMENT_SET_HPP_
#define SUMPROD_ELEMENT_SET_HPP_

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

namespace sumprod {

// Sorted, duplicate-free collection of group elements or scalars. All members
// must come from the same field; the element types enforce that through their
// comparison operators, which throw on mixed fields.
template <class E>
class ElementSet {
 public:
  using value_type = E;
  using const_iterator = typename std::vector<E>::const_iterator;

  ElementSet() = default;
  explicit ElementSet(std::vector<E> elements) : elements_(std::move(elements)) { normalize(); }
  ElementSet(std::initializer_list<E> elements) : elements_(elements) { normalize(); }

  // Caller guarantees sorted, unique input.
  static ElementSet from_sorted_unique(std::vector<E> elements) {
    ElementSet s;
    s.elements_ = std::move(elements);
    return s;
  }

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const_iterator begin() const noexcept { return elements_.begin(); }
  const_iterator end() const noexcept { return elements_.end(); }
  E const& operator[](std::size_t i) const { return elements_[i]; }
  E const& front() const { return elements_.front(); }
  std::span<E const> elements() const noexcept { return elements_; }

  bool contains(E const& e) const { return std::binary_search(elements_.begin(), elements_.end(), e); }

  bool is_subset_of(ElementSet const& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                         elements_.end());
  }

  ElementSet set_union(ElementSet const& other) const {
    std::vector<E> out;
    out.reserve(size() + other.size());
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return from_sorted_unique(std::move(out));
  }

  ElementSet set_intersection(ElementSet const& other) const {
    std::vector<E> out;
    std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return from_sorted_unique(std::move(out));
  }

  friend bool operator==(ElementSet const& x, ElementSet const& y) { return x.elements_ == y.elements_; }

 private:
  void normalize() {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  }

  std::vector<E> elements_;
};

}  // namespace sumprod

#endif  // SUMPROD_ELEMENT_SET_HPP_
