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

#include "interaction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gibbsmatch {

namespace {

bool term_key_less(const Term& a, const Term& b) {
  if (a.offsets != b.offsets) return a.offsets < b.offsets;
  return a.pattern < b.pattern;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw std::invalid_argument("alphabet must not be empty");
  for (uint32_t i = 0; i < tokens_.size(); ++i) {
    if (tokens_[i].empty()) throw std::invalid_argument("alphabet token must not be empty");
    if (!index_.emplace(tokens_[i], i).second)
      throw std::invalid_argument("duplicate alphabet token '" + tokens_[i] + "'");
  }
}

Alphabet Alphabet::spins() { return Alphabet({"+1", "-1"}); }

Alphabet Alphabet::letters(std::size_t size) {
  std::vector<std::string> tokens;
  tokens.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (i < 26)
      tokens.emplace_back(1, static_cast<char>('a' + i));
    else
      tokens.push_back("s" + std::to_string(i));
  }
  return Alphabet(std::move(tokens));
}

std::optional<uint32_t> Alphabet::index_of(std::string_view token) const {
  const auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Alphabet::single_char() const {
  return std::all_of(tokens_.begin(), tokens_.end(),
                     [](const std::string& t) { return t.size() == 1; });
}

Interaction::Interaction(Alphabet alphabet, std::vector<Term> terms)
    : alphabet_(std::move(alphabet)) {
  const auto m = static_cast<uint32_t>(alphabet_.size());
  for (const Term& t : terms) {
    if (t.offsets.empty()) throw std::invalid_argument("term has no offsets");
    if (t.offsets.size() != t.pattern.size())
      throw std::invalid_argument("term pattern length must match offsets length");
    if (t.offsets.front() != 0) throw std::invalid_argument("term offsets must start at 0");
    if (!std::is_sorted(t.offsets.begin(), t.offsets.end()) ||
        std::adjacent_find(t.offsets.begin(), t.offsets.end()) != t.offsets.end())
      throw std::invalid_argument("term offsets must be strictly increasing");
    for (const uint32_t s : t.pattern)
      if (s >= m) throw std::invalid_argument("term pattern symbol outside alphabet");
    if (!std::isfinite(t.value)) throw std::invalid_argument("term value must be finite");
  }
  std::sort(terms.begin(), terms.end(), term_key_less);
  for (Term& t : terms) {
    if (!terms_.empty() && terms_.back().offsets == t.offsets &&
        terms_.back().pattern == t.pattern) {
      terms_.back().value += t.value;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const Term& t) { return t.value == 0.0; });
  for (const Term& t : terms_) range_ = std::max(range_, t.span());
}

Interaction Interaction::zero(Alphabet alphabet) {
  return Interaction(std::move(alphabet), {});
}

Interaction Interaction::ising(double coupling, double field) {
  // Symbol 0 is spin +1, symbol 1 is spin -1; enumerate the four pair
  // patterns and two site patterns with the matching spin products.
  const auto spin = [](uint32_t s) { return s == 0 ? 1.0 : -1.0; };
  std::vector<Term> terms;
  for (uint32_t a = 0; a < 2; ++a) {
    for (uint32_t b = 0; b < 2; ++b)
      terms.push_back({{0, 1}, {a, b}, coupling * spin(a) * spin(b)});
    terms.push_back({{0}, {a}, field * spin(a)});
  }
  return Interaction(Alphabet::spins(), std::move(terms));
}

Interaction Interaction::iid_weights(std::span<const double> probs,
                                     std::optional<Alphabet> alphabet) {
  if (probs.empty()) throw std::invalid_argument("iid_weights needs at least one probability");
  double total = 0.0;
  for (const double p : probs) {
    if (!(p > 0.0)) throw std::invalid_argument("iid_weights probabilities must be positive");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("iid_weights probabilities must sum to 1");
  Alphabet a = alphabet ? std::move(*alphabet) : Alphabet::letters(probs.size());
  if (a.size() != probs.size())
    throw std::invalid_argument("alphabet size does not match probability vector");
  std::vector<Term> terms;
  for (uint32_t s = 0; s < probs.size(); ++s)
    terms.push_back({{0}, {s}, -std::log(probs[s])});
  return Interaction(std::move(a), std::move(terms));
}

Interaction Interaction::scaled(double factor) const {
  std::vector<Term> terms = terms_;
  for (Term& t : terms) t.value *= factor;
  return Interaction(alphabet_, std::move(terms));
}

Interaction Interaction::plus(const Interaction& other) const {
  if (!(alphabet_ == other.alphabet_))
    throw std::invalid_argument("cannot add interactions over different alphabets");
  std::vector<Term> terms = terms_;
  terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
  return Interaction(alphabet_, std::move(terms));
}

double Interaction::free_hamiltonian(std::span<const uint32_t> pattern) const {
  if (pattern.empty()) throw std::invalid_argument("pattern must be nonempty");
  const auto m = static_cast<uint32_t>(alphabet_.size());
  for (const uint32_t s : pattern)
    if (s >= m) throw std::invalid_argument("pattern symbol outside alphabet");
  double h = 0.0;
  for (const Term& t : terms_) {
    if (t.span() >= pattern.size()) continue;
    const std::size_t anchors = pattern.size() - t.span();
    for (std::size_t a = 0; a < anchors; ++a) {
      bool hit = true;
      for (std::size_t i = 0; i < t.offsets.size(); ++i) {
        if (pattern[a + t.offsets[i]] != t.pattern[i]) {
          hit = false;
          break;
        }
      }
      if (hit) h += t.value;
    }
  }
  return h;
}

double Interaction::energy_closing_at(std::span<const uint32_t> word,
                                      std::size_t site) const {
  double h = 0.0;
  for (const Term& t : terms_) {
    if (t.span() > site) continue;
    const std::size_t anchor = site - t.span();
    bool hit = true;
    for (std::size_t i = 0; i < t.offsets.size(); ++i) {
      if (word[anchor + t.offsets[i]] != t.pattern[i]) {
        hit = false;
        break;
      }
    }
    if (hit) h += t.value;
  }
  return h;
}

std::vector<double> Interaction::conditional_site_distribution(
    std::span<const uint32_t> left, std::span<const uint32_t> right) const {
  if (left.size() != range_ || right.size() != range_)
    throw std::invalid_argument("context length must equal the interaction range");
  const auto m = static_cast<uint32_t>(alphabet_.size());
  for (const auto ctx : {left, right})
    for (const uint32_t s : ctx)
      if (s >= m) throw std::invalid_argument("context symbol outside alphabet");

  // word = left . a . right, center at index range().
  std::vector<uint32_t> word(2 * static_cast<std::size_t>(range_) + 1);
  std::copy(left.begin(), left.end(), word.begin());
  std::copy(right.begin(), right.end(), word.begin() + range_ + 1);
  const std::size_t center = range_;

  std::vector<double> energy(m, 0.0);
  for (uint32_t a = 0; a < m; ++a) {
    word[center] = a;
    double e = 0.0;
    // Every translate covering the center site is anchored at center - s for
    // exactly one offset s of the term.
    for (const Term& t : terms_) {
      for (const uint32_t s : t.offsets) {
        const std::size_t anchor = center - s;
        bool hit = true;
        for (std::size_t i = 0; i < t.offsets.size(); ++i) {
          if (word[anchor + t.offsets[i]] != t.pattern[i]) {
            hit = false;
            break;
          }
        }
        if (hit) e += t.value;
      }
    }
    energy[a] = e;
  }
  const double shift = *std::min_element(energy.begin(), energy.end());
  std::vector<double> probs(m);
  double z = 0.0;
  for (uint32_t a = 0; a < m; ++a) {
    probs[a] = std::exp(-(energy[a] - shift));
    z += probs[a];
  }
  for (double& p : probs) p /= z;
  return probs;
}

bool Interaction::operator==(const Interaction& other) const {
  if (!(alphabet_ == other.alphabet_) || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& a = terms_[i];
    const Term& b = other.terms_[i];
    if (a.offsets != b.offsets || a.pattern != b.pattern || a.value != b.value) return false;
  }
  return true;
}

}  // namespace gibbsmatch
