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


// Plain-text set files. The first non-comment line names the kind and the
// field; each following line holds one element.
//
//   SL2 5        a b c d
//   AFF 7        a b          (AFF Q accepts rationals such as 3/4)
//   SCALAR 11    x
//   points 7     x y
//   lines 7      a b  or  V x0
//
// Lines starting with '#' and blank lines are ignored.

#ifndef SUMPROD_IO_HPP_
#define SUMPROD_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "sumprod/groups.hpp"
#include "sumprod/incidence.hpp"
#include "sumprod/setalgebra.hpp"

namespace sumprod {

using AnySet = std::variant<ScalarSet, Sl2Set, AffSet, PointSet, LineSet>;

// Throws Error(kParse) with the offending line number; element validation
// errors (det != 1, a = 0) are rethrown as kParse.
AnySet parse_set(std::string_view text);
// Throws Error(kIo) when the file cannot be read.
AnySet read_set_file(std::filesystem::path const& path);

std::string format_set(AnySet const& set, Field const& field);
void write_text_file(std::filesystem::path const& path, std::string const& text);

// "SL2", "AFF", "SCALAR", "points" or "lines".
std::string kind_name(AnySet const& set);
// Field of the first element; the rationals for an empty set.
Field field_of(AnySet const& set);

}  // namespace sumprod

#endif  // SUMPROD_IO_HPP_
