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


#include "sumprod/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "sumprod/error.hpp"

namespace sumprod {
namespace {

std::vector<std::string> split_words(std::string const& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

[[noreturn]] void fail(std::size_t line_no, std::string const& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + what);
}

void need_words(std::vector<std::string> const& w, std::size_t n, std::size_t line_no) {
  if (w.size() != n) fail(line_no, "expected " + std::to_string(n) + " fields, found " + std::to_string(w.size()));
}

}  // namespace

AnySet parse_set(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, kind;
  std::size_t line_no = 0;
  Field field;
  bool have_header = false;
  std::vector<Scalar> scalars;
  std::vector<Sl2Element> sl2;
  std::vector<AffElement> aff;
  std::vector<PlanePoint> points;
  std::vector<PlaneLine> lines;
  while (std::getline(in, line)) {
    ++line_no;
    auto const words = split_words(line);
    if (words.empty() || words[0][0] == '#') continue;
    try {
      if (!have_header) {
        need_words(words, 2, line_no);
        kind = words[0];
        if (kind != "SL2" && kind != "AFF" && kind != "SCALAR" && kind != "points" && kind != "lines") {
          fail(line_no, "unknown kind '" + kind + "'");
        }
        field = Field::parse(words[1]);
        if (kind == "SL2" && !field.is_prime()) fail(line_no, "SL2 needs a prime field");
        have_header = true;
        continue;
      }
      auto s = [&](std::size_t i) { return Scalar::parse(words[i], field); };
      if (kind == "SCALAR") {
        need_words(words, 1, line_no);
        scalars.push_back(s(0));
      } else if (kind == "SL2") {
        need_words(words, 4, line_no);
        PrimeField const pf = field.prime_field();
        sl2.emplace_back(pf, static_cast<std::int64_t>(s(0).residue_value()),
                         static_cast<std::int64_t>(s(1).residue_value()),
                         static_cast<std::int64_t>(s(2).residue_value()),
                         static_cast<std::int64_t>(s(3).residue_value()));
      } else if (kind == "AFF") {
        need_words(words, 2, line_no);
        aff.emplace_back(s(0), s(1));
      } else if (kind == "points") {
        need_words(words, 2, line_no);
        points.emplace_back(s(0), s(1));
      } else {
        need_words(words, 2, line_no);
        lines.push_back(words[0] == "V" ? PlaneLine::vertical(s(1)) : PlaneLine::non_vertical(s(0), s(1)));
      }
    } catch (Error const& e) {
      if (e.code() == ErrorCode::kParse && std::string(e.what()).rfind("line ", 0) == 0) throw;
      fail(line_no, e.what());
    }
  }
  if (!have_header) throw Error(ErrorCode::kParse, "missing header line");
  if (kind == "SCALAR") return ScalarSet(std::move(scalars));
  if (kind == "SL2") return Sl2Set(std::move(sl2));
  if (kind == "AFF") return AffSet(std::move(aff));
  if (kind == "points") return PointSet(std::move(points));
  return LineSet(std::move(lines));
}

AnySet read_set_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_set(buf.str());
}

std::string kind_name(AnySet const& set) {
  static char const* const names[] = {"SCALAR", "SL2", "AFF", "points", "lines"};
  return names[set.index()];
}

Field field_of(AnySet const& set) {
  return std::visit(
      [](auto const& s) -> Field {
        if (s.empty()) return Field::rationals();
        using T = std::decay_t<decltype(s.front())>;
        if constexpr (std::is_same_v<T, Scalar>) {
          return s.front().field();
        } else if constexpr (std::is_same_v<T, Sl2Element>) {
          return Field(s.front().field());
        } else if constexpr (std::is_same_v<T, AffElement>) {
          return s.front().field();
        } else if constexpr (std::is_same_v<T, PlanePoint>) {
          return s.front().x.field();
        } else {
          return s.front().is_vertical() ? s.front().x0().field() : s.front().slope().field();
        }
      },
      set);
}

std::string format_set(AnySet const& set, Field const& field) {
  std::string out = kind_name(set) + " " + field.name().substr(field.is_rational() ? 0 : 1) + "\n";
  std::visit(
      [&out](auto const& s) {
        for (auto const& e : s) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, Sl2Element>) {
            out += std::to_string(e.a()) + " " + std::to_string(e.b()) + " " + std::to_string(e.c()) + " " +
                   std::to_string(e.d()) + "\n";
          } else if constexpr (std::is_same_v<T, AffElement>) {
            out += e.a().to_string() + " " + e.b().to_string() + "\n";
          } else {
            out += e.to_string() + "\n";
          }
        }
      },
      set);
  return out;
}

void write_text_file(std::filesystem::path const& path, std::string const& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

}  // namespace sumprod
