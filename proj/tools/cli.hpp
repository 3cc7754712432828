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


#ifndef SUMPROD_TOOLS_CLI_HPP_
#define SUMPROD_TOOLS_CLI_HPP_

#include <ostream>

namespace sumprod::cli {

// Exit codes: 0 success, 1 a violated exact-constant claim, 2 usage or
// configuration error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sumprod::cli

#endif  // SUMPROD_TOOLS_CLI_HPP_
