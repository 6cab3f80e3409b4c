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

#include "toml_lite.hpp"

#include <cctype>
#include <cstdlib>

#include "errors.hpp"

namespace gibbsmatch::toml_lite {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line;
  const std::string& source;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(source, line, what);
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
  }
};

Value parse_value(Cursor& c);

Value parse_string(Cursor& c) {
  Value v;
  v.kind = Value::Kind::string;
  v.line = c.line;
  ++c.pos;  // opening quote
  while (true) {
    if (c.done()) c.fail("unterminated string");
    const char ch = c.text[c.pos++];
    if (ch == '"') break;
    if (ch == '\n') c.fail("unterminated string");
    if (ch == '\\') {
      if (c.done()) c.fail("unterminated escape");
      const char esc = c.text[c.pos++];
      if (esc == '"' || esc == '\\')
        v.str.push_back(esc);
      else
        c.fail(std::string("unsupported escape '\\") + esc + "'");
    } else {
      v.str.push_back(ch);
    }
  }
  return v;
}

Value parse_number(Cursor& c) {
  Value v;
  v.kind = Value::Kind::number;
  v.line = c.line;
  const std::size_t start = c.pos;
  while (!c.done()) {
    const char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '+' || ch == '-' ||
        ch == '.' || ch == 'e' || ch == 'E' || ch == '_') {
      ++c.pos;
    } else {
      break;
    }
  }
  std::string digits(c.text.substr(start, c.pos - start));
  std::erase(digits, '_');
  if (digits.empty()) c.fail("expected a number");
  char* end = nullptr;
  v.num = std::strtod(digits.c_str(), &end);
  if (end == nullptr || *end != '\0') c.fail("malformed number '" + digits + "'");
  v.is_integer = digits.find_first_of(".eE") == std::string::npos;
  return v;
}

Value parse_array(Cursor& c) {
  Value v;
  v.kind = Value::Kind::array;
  v.line = c.line;
  ++c.pos;  // '['
  c.skip_ws();
  if (!c.done() && c.peek() == ']') {
    ++c.pos;
    return v;
  }
  while (true) {
    c.skip_ws();
    v.items.push_back(parse_value(c));
    c.skip_ws();
    if (c.done()) c.fail("unterminated array");
    const char ch = c.text[c.pos++];
    if (ch == ']') break;
    if (ch != ',') c.fail("expected ',' or ']' in array");
  }
  return v;
}

Value parse_value(Cursor& c) {
  if (c.done()) c.fail("expected a value");
  const char ch = c.peek();
  if (ch == '"') return parse_string(c);
  if (ch == '[') return parse_array(c);
  return parse_number(c);
}

bool is_key_char(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-';
}

}  // namespace

const Value* Table::find(std::string_view key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return &v;
  return nullptr;
}

Document parse(std::string_view text, const std::string& source_name) {
  Document doc;
  doc.source = source_name;
  Table* current = &doc.root;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::size_t len = (eol == std::string_view::npos ? text.size() : eol) - pos;
    std::string_view raw = text.substr(pos, len);
    ++line_no;
    pos += len + 1;

    Cursor c{raw, 0, line_no, source_name};
    c.skip_ws();
    if (c.done() || c.peek() == '#') {
      if (eol == std::string_view::npos) break;
      continue;
    }

    if (c.peek() == '[') {
      if (raw.substr(c.pos, 2) != "[[") c.fail("only [[name]] table arrays are supported");
      c.pos += 2;
      const std::size_t name_start = c.pos;
      while (!c.done() && is_key_char(c.peek())) ++c.pos;
      std::string name(raw.substr(name_start, c.pos - name_start));
      if (name.empty()) c.fail("missing table array name");
      if (raw.substr(c.pos, 2) != "]]") c.fail("expected ']]'");
      c.pos += 2;
      c.skip_ws();
      if (!c.done() && c.peek() != '#') c.fail("unexpected text after [[" + name + "]]");
      doc.table_arrays.emplace_back(std::move(name), Table{line_no, {}});
      current = &doc.table_arrays.back().second;
    } else {
      const std::size_t key_start = c.pos;
      while (!c.done() && is_key_char(c.peek())) ++c.pos;
      std::string key(raw.substr(key_start, c.pos - key_start));
      if (key.empty()) c.fail("expected a key");
      c.skip_ws();
      if (c.done() || c.peek() != '=') c.fail("expected '=' after key '" + key + "'");
      ++c.pos;
      c.skip_ws();
      Value v = parse_value(c);
      c.skip_ws();
      if (!c.done() && c.peek() != '#') c.fail("unexpected text after value of '" + key + "'");
      if (current->find(key) != nullptr) c.fail("duplicate key '" + key + "'");
      current->entries.emplace_back(std::move(key), std::move(v));
    }
    if (eol == std::string_view::npos) break;
  }
  return doc;
}

void fail(const Document& doc, int line, const std::string& what) {
  throw ParseError(doc.source, line, what);
}

const Value& require(const Document& doc, const Table& table, std::string_view key) {
  const Value* v = table.find(key);
  if (v == nullptr) fail(doc, table.line, "missing required key '" + std::string(key) + "'");
  return *v;
}

std::string as_string(const Document& doc, const Value& v) {
  if (v.kind != Value::Kind::string) fail(doc, v.line, "expected a string");
  return v.str;
}

double as_number(const Document& doc, const Value& v) {
  if (v.kind != Value::Kind::number) fail(doc, v.line, "expected a number");
  return v.num;
}

long long as_integer(const Document& doc, const Value& v) {
  if (v.kind != Value::Kind::number || !v.is_integer)
    fail(doc, v.line, "expected an integer");
  return static_cast<long long>(v.num);
}

std::vector<std::string> as_string_array(const Document& doc, const Value& v) {
  if (v.kind != Value::Kind::array) fail(doc, v.line, "expected an array");
  std::vector<std::string> out;
  out.reserve(v.items.size());
  for (const Value& item : v.items) out.push_back(as_string(doc, item));
  return out;
}

std::vector<double> as_number_array(const Document& doc, const Value& v) {
  if (v.kind != Value::Kind::array) fail(doc, v.line, "expected an array");
  std::vector<double> out;
  out.reserve(v.items.size());
  for (const Value& item : v.items) out.push_back(as_number(doc, item));
  return out;
}

std::vector<long long> as_integer_array(const Document& doc, const Value& v) {
  if (v.kind != Value::Kind::array) fail(doc, v.line, "expected an array");
  std::vector<long long> out;
  out.reserve(v.items.size());
  for (const Value& item : v.items) out.push_back(as_integer(doc, item));
  return out;
}

}  // namespace gibbsmatch::toml_lite
