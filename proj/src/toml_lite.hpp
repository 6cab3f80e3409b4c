// Copyright 2026 The gibbsmatch Authors
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

#ifndef GIBBSMATCH_TOML_LITE_HPP_
#define GIBBSMATCH_TOML_LITE_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gibbsmatch::toml_lite {

// Minimal reader for the TOML slice the model and plan files use: top-level
// `key = value` pairs, `[[name]]` table arrays, strings, numbers and flat
// arrays, with `#` comments. Every value remembers its source line so schema
// checks can point at the offending line.

struct Value {
  enum class Kind { string, number, array };
  Kind kind = Kind::number;
  std::string str;
  double num = 0.0;
  bool is_integer = false;
  std::vector<Value> items;
  int line = 0;
};

struct Table {
  int line = 0;
  std::vector<std::pair<std::string, Value>> entries;  // file order

  const Value* find(std::string_view key) const;
};

struct Document {
  std::string source;  // name used in error messages
  Table root;
  std::vector<std::pair<std::string, Table>> table_arrays;  // file order
};

Document parse(std::string_view text, const std::string& source_name);

// Typed accessors; all throw ParseError naming `doc.source` and the line.
const Value& require(const Document& doc, const Table& table, std::string_view key);
std::string as_string(const Document& doc, const Value& v);
double as_number(const Document& doc, const Value& v);
long long as_integer(const Document& doc, const Value& v);
std::vector<std::string> as_string_array(const Document& doc, const Value& v);
std::vector<double> as_number_array(const Document& doc, const Value& v);
std::vector<long long> as_integer_array(const Document& doc, const Value& v);

[[noreturn]] void fail(const Document& doc, int line, const std::string& what);

}  // namespace gibbsmatch::toml_lite

#endif  // GIBBSMATCH_TOML_LITE_HPP_
