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

#include "sequence.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "errors.hpp"
#include "util.hpp"

namespace gibbsmatch {

namespace {

struct RawSequence {
  std::vector<std::string> tokens;
  std::string model_id;
  uint64_t seed = 0;
};

RawSequence read_raw(const std::string& path) {
  const std::string text = read_file(path);
  RawSequence raw;

  const std::size_t eol = text.find('\n');
  const std::string header = text.substr(0, eol);
  uint64_t n = 0;
  {
    std::istringstream hs(header);
    std::string hash, kv;
    hs >> hash;
    if (hash != "#") throw ParseError(path, 1, "missing '# model=... n=... seed=...' header");
    bool have_model = false, have_n = false, have_seed = false;
    while (hs >> kv) {
      const std::size_t eq = kv.find('=');
      if (eq == std::string::npos) throw ParseError(path, 1, "malformed header field '" + kv + "'");
      const std::string key = kv.substr(0, eq);
      const std::string val = kv.substr(eq + 1);
      if (key == "model") {
        raw.model_id = val;
        have_model = true;
      } else if (key == "n") {
        n = std::stoull(val);
        have_n = true;
      } else if (key == "seed") {
        raw.seed = std::stoull(val);
        have_seed = true;
      } else {
        throw ParseError(path, 1, "unknown header field '" + key + "'");
      }
    }
    if (!have_model || !have_n || !have_seed)
      throw ParseError(path, 1, "header must carry model, n and seed");
  }

  std::string body = eol == std::string::npos ? std::string() : text.substr(eol + 1);
  const bool has_separator =
      body.find_first_of(" \t") != std::string::npos ||
      body.find('\n') != body.rfind('\n');  // more than one newline => token lines

  if (has_separator) {
    std::istringstream bs(body);
    std::string tok;
    while (bs >> tok) raw.tokens.push_back(tok);
  } else {
    for (const char c : body) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      raw.tokens.emplace_back(1, c);
    }
  }
  if (raw.tokens.size() != n)
    throw ParseError(path, 2,
                     "header says n=" + std::to_string(n) + " but found " +
                         std::to_string(raw.tokens.size()) + " symbols");
  if (raw.tokens.empty()) throw ParseError(path, 2, "sequence must be nonempty");
  return raw;
}

Sequence intern(const RawSequence& raw,
                std::map<std::string, uint32_t>& table,
                std::vector<std::string>& tokens) {
  Sequence seq{Alphabet({"?"}), {}, raw.model_id, raw.seed};
  seq.symbols.reserve(raw.tokens.size());
  for (const std::string& tok : raw.tokens) {
    auto [it, inserted] = table.emplace(tok, static_cast<uint32_t>(tokens.size()));
    if (inserted) tokens.push_back(tok);
    seq.symbols.push_back(it->second);
  }
  return seq;
}

}  // namespace

std::string sequence_to_text(const Sequence& seq) {
  std::ostringstream out;
  out << "# model=" << seq.model_id << " n=" << seq.symbols.size() << " seed=" << seq.seed
      << '\n';
  if (seq.alphabet.single_char()) {
    for (const uint32_t s : seq.symbols) out << seq.alphabet.token(s);
  } else {
    for (std::size_t i = 0; i < seq.symbols.size(); ++i) {
      if (i > 0) out << ' ';
      out << seq.alphabet.token(seq.symbols[i]);
    }
  }
  out << '\n';
  return out.str();
}

void write_sequence_file(const Sequence& seq, const std::string& path) {
  write_file_atomic(path, sequence_to_text(seq));
}

Sequence read_sequence_file(const std::string& path) {
  const RawSequence raw = read_raw(path);
  std::map<std::string, uint32_t> table;
  std::vector<std::string> tokens;
  Sequence seq = intern(raw, table, tokens);
  seq.alphabet = Alphabet(tokens);
  return seq;
}

std::pair<Sequence, Sequence> read_sequence_pair(const std::string& path_a,
                                                 const std::string& path_b) {
  const RawSequence raw_a = read_raw(path_a);
  const RawSequence raw_b = read_raw(path_b);
  std::map<std::string, uint32_t> table;
  std::vector<std::string> tokens;
  Sequence a = intern(raw_a, table, tokens);
  Sequence b = intern(raw_b, table, tokens);
  const Alphabet joint(tokens);
  a.alphabet = joint;
  b.alphabet = joint;
  return {std::move(a), std::move(b)};
}

}  // namespace gibbsmatch
