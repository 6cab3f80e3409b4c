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

#ifndef GIBBSMATCH_INTERACTION_HPP_
#define GIBBSMATCH_INTERACTION_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gibbsmatch {

// Ordered set of distinct symbol tokens. Symbols are referred to by index
// everywhere else; tokens only matter at the file boundaries.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> tokens);

  // {+1, -1}, the spin alphabet used by the Ising constructor.
  static Alphabet spins();
  // {a, b, c, ...} of the requested size (s10, s11, ... past 'z').
  static Alphabet letters(std::size_t size);

  std::size_t size() const { return tokens_.size(); }
  const std::string& token(uint32_t index) const { return tokens_[index]; }
  const std::vector<std::string>& tokens() const { return tokens_; }
  std::optional<uint32_t> index_of(std::string_view token) const;
  // True when every token is a single byte (enables the compact file form).
  bool single_char() const;

  bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::map<std::string, uint32_t, std::less<>> index_;
};

// One anchored coupling: offsets are sorted, start at 0 and `pattern[i]` is
// the symbol required at `offsets[i]`. Translates are generated on demand,
// which is what makes translation invariance structural.
struct Term {
  std::vector<uint32_t> offsets;
  std::vector<uint32_t> pattern;
  double value = 0.0;

  uint32_t span() const { return offsets.back(); }
};

// Finite-range translation-invariant interaction. Terms are canonicalized at
// construction: sorted, duplicates merged, exact zeros dropped. Immutable
// afterwards, so values are safe to share across threads.
class Interaction {
 public:
  Interaction(Alphabet alphabet, std::vector<Term> terms);

  static Interaction zero(Alphabet alphabet);
  // Pair coupling J*s_i*s_{i+1} and site field h*s_i on the spin alphabet.
  static Interaction ising(double coupling, double field);
  // Range-0 site energies -ln p(a); the resulting measure is i.i.d. with
  // marginals p. Throws std::invalid_argument unless p is strictly positive
  // and sums to 1.
  static Interaction iid_weights(std::span<const double> probs,
                                 std::optional<Alphabet> alphabet = std::nullopt);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Term>& terms() const { return terms_; }
  // Max diameter over stored (nonzero) terms; 0 when there are none.
  uint32_t range() const { return range_; }
  bool is_zero() const { return terms_.empty(); }

  Interaction scaled(double factor) const;
  Interaction plus(const Interaction& other) const;

  // Free-boundary energy: sum over all term translates fully contained in
  // the pattern.
  double free_hamiltonian(std::span<const uint32_t> pattern) const;

  // Sum of the values of term translates that lie inside `word` and whose
  // rightmost site is exactly `site`. Summing this over all sites recovers
  // free_hamiltonian; it is the increment used by the transfer matrix and
  // the pattern enumerators.
  double energy_closing_at(std::span<const uint32_t> word, std::size_t site) const;

  // Boltzmann conditional of one site given length-range() contexts on both
  // sides. Entries are strictly inside (0, 1) because all couplings are
  // finite.
  std::vector<double> conditional_site_distribution(
      std::span<const uint32_t> left, std::span<const uint32_t> right) const;

  bool operator==(const Interaction& other) const;

 private:
  Alphabet alphabet_;
  std::vector<Term> terms_;
  uint32_t range_ = 0;
};

}  // namespace gibbsmatch

#endif  // GIBBSMATCH_INTERACTION_HPP_
