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


#include <gtest/gtest.h>

#include <filesystem>

#include "sumprod/error.hpp"
#include "sumprod/io.hpp"

namespace sumprod {
namespace {

ErrorCode parse_code(std::string const& text) {
  try {
    parse_set(text);
  } catch (Error const& e) {
    return e.code();
  }
  return ErrorCode::kIo;
}

TEST(Io, ParsesEveryKind) {
  AnySet const s = parse_set("# comment\nSL2 7\n1 1 0 1\n\n0 6 1 0\n");
  ASSERT_TRUE(std::holds_alternative<Sl2Set>(s));
  EXPECT_EQ(std::get<Sl2Set>(s).size(), 2u);
  EXPECT_EQ(kind_name(s), "SL2");
  EXPECT_EQ(field_of(s).name(), "F7");

  AnySet const q = parse_set("SCALAR Q\n1/2\n-3\n1/2\n");
  EXPECT_EQ(std::get<ScalarSet>(q).size(), 2u);
  EXPECT_TRUE(field_of(q).is_rational());

  EXPECT_EQ(std::get<AffSet>(parse_set("AFF 5\n2 1\n")).size(), 1u);
  EXPECT_EQ(std::get<PointSet>(parse_set("points 5\n0 0\n1 2\n")).size(), 2u);
  LineSet const l = std::get<LineSet>(parse_set("lines 5\nV 3\n2 1\n"));
  EXPECT_EQ(l.size(), 2u);
}

TEST(Io, RoundTrip) {
  for (std::string const text : {"SL2 5\n0 4 1 0\n1 1 0 1\n", "AFF Q\n1/2 -1\n3 0\n", "SCALAR 11\n0\n3\n10\n",
                                 "points 7\n1 2\n3 4\n", "lines 7\n1 2\nV 3\n"}) {
    AnySet const s = parse_set(text);
    std::string const out = format_set(s, field_of(s));
    EXPECT_EQ(parse_set(out), s) << text;
    EXPECT_EQ(format_set(parse_set(out), field_of(s)), out);
  }
}

TEST(Io, FileRoundTrip) {
  auto const path = std::filesystem::temp_directory_path() / "sumprod_io_test.txt";
  write_text_file(path, "SCALAR 13\n1\n2\n");
  EXPECT_EQ(std::get<ScalarSet>(read_set_file(path)).size(), 2u);
  std::filesystem::remove(path);
  try {
    read_set_file(path);
    FAIL() << "missing file accepted";
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(Io, Rejections) {
  EXPECT_EQ(parse_code("SL2 7\n1 1 1 1\n"), ErrorCode::kParse);  // det 0
  EXPECT_EQ(parse_code("AFF 7\n0 1\n"), ErrorCode::kParse);      // a = 0
  EXPECT_EQ(parse_code("SL2 Q\n1 0 0 1\n"), ErrorCode::kParse);
  EXPECT_EQ(parse_code("SL2 7\n1 0 0\n"), ErrorCode::kParse);
  EXPECT_EQ(parse_code("SL2 9\n1 0 0 1\n"), ErrorCode::kParse);
  EXPECT_EQ(parse_code("GROUP 7\n"), ErrorCode::kParse);
  EXPECT_EQ(parse_code("SCALAR 7\n1/2\n"), ErrorCode::kParse);
  EXPECT_EQ(parse_code("# nothing\n"), ErrorCode::kParse);
  try {
    parse_set("SCALAR 7\n1\nx\n");
  } catch (Error const& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

}  // namespace
}  // namespace sumprod
