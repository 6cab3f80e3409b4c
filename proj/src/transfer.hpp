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

#ifndef GIBBSMATCH_TRANSFER_HPP_
#define GIBBSMATCH_TRANSFER_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "interaction.hpp"

namespace gibbsmatch {

// Patterns are enumerated exhaustively in a few places (power sums,
// diagnostics); runs larger than this many patterns are an error, never a
// silent truncation.
inline constexpr uint64_t kDefaultEnumerationCap = uint64_t{1} << 24;

// Largest admitted block state space m^B.
inline constexpr uint64_t kMaxTransferStates = 4096;

// Block transfer matrix of a finite-range interaction together with its
// Perron data and the induced stationary block chain. States are words of
// length B = max(range, 1) encoded big-endian (state index order ==
// lexicographic word order). The matrix entry for x -> y, y = tail(x).a,
// weighs every term translate that closes at the appended site, so each term
// is charged exactly once along a concatenation.
class TransferSystem {
 public:
  static TransferSystem build(const Interaction& interaction);

  const Interaction& interaction() const { return interaction_; }
  const Alphabet& alphabet() const { return interaction_.alphabet(); }
  uint32_t block_length() const { return block_len_; }
  std::size_t state_count() const { return pi_.size(); }
  std::size_t symbol_count() const { return alphabet().size(); }

  double pressure() const { return pressure_; }
  double spectral_radius() const { return lambda_; }
  // Max over the right/left eigenpairs of ||Tv - lambda v||_inf / (lambda ||v||_inf).
  double residual() const { return residual_; }

  std::size_t state_of(std::span<const uint32_t> block) const;
  std::size_t successor(std::size_t state, uint32_t symbol) const {
    return (state % tail_modulus_) * symbol_count() + symbol;
  }
  void decode_state(std::size_t state, std::span<uint32_t> out) const;

  // Stationary block distribution pi = l*r (sums to 1).
  double stationary(std::size_t state) const { return pi_[state]; }
  // Row-stochastic single-symbol extension P(x -> tail(x).a).
  double transition(std::size_t state, uint32_t symbol) const {
    return trans_[state * symbol_count() + symbol];
  }

  // Exact stationary probability of a pattern; lengths below B marginalize
  // over completions so there is a single code path for every k >= 1.
  double cylinder_prob(std::span<const uint32_t> pattern) const;

  // Marginal of pi over the first `len` coordinates (len <= B), indexed by
  // the big-endian prefix word.
  const std::vector<double>& prefix_marginal(uint32_t len) const {
    return marginals_[len];
  }

 private:
  TransferSystem(Interaction interaction, uint32_t block_len);

  Interaction interaction_;
  uint32_t block_len_;
  std::size_t tail_modulus_ = 1;  // m^(B-1)
  double lambda_ = 0.0;           // true spectral radius
  double pressure_ = 0.0;
  double residual_ = 0.0;
  std::vector<double> pi_;
  std::vector<double> trans_;
  std::vector<std::vector<double>> marginals_;  // [0..B]
};

// ln of the spectral radius of the transfer matrix; boundary-condition
// independent.
double pressure(const Interaction& interaction);

// Decay exponent of the pattern collision sum: pressure(U) - pressure(2U)/2.
// Strictly positive for every nondegenerate interaction.
double match_exponent(const Interaction& interaction);

// Two-measure analogue: (p(U) + p(V) - p(U+V)) / 2. Equals
// match_exponent(U) when V == U.
double cross_match_exponent(const Interaction& u, const Interaction& v);

// pressure - d/dq pressure(qU) at q = 1, central difference with step 1e-5.
double entropy(const Interaction& interaction);

// ln(n) / match exponent: the window length at which shift-match counts
// switch from divergent to vanishing.
double critical_length(const Interaction& interaction, uint64_t n);
double critical_length_for(double exponent, uint64_t n);

// Sum over all m^k patterns of cylinder_prob^exponent, enumerated in index
// order (the oracle the closed-form exponents are tested against).
double pattern_power_sum(const TransferSystem& ts, uint32_t k, double exponent,
                         uint64_t cap = kDefaultEnumerationCap);

// Exact sum over all k-patterns of P(A)*Q(A) via a joint walk of the two
// block chains; linear in k, so no enumeration cap applies.
double pattern_cross_sum(const TransferSystem& a, const TransferSystem& b, uint32_t k);

struct ThermoDiagnostics {
  // Worst multiplicative gap between cylinder probabilities and the
  // Boltzmann form e^{-k p(U)} e^{-H}, over all patterns with k <= k_max.
  double gamma_hat = 1.0;
  // Largest single-site conditional probability over all two-sided contexts.
  double rho_hat = 0.0;
  double delta_hat = 0.0;  // 1 - rho_hat
};

ThermoDiagnostics compute_diagnostics(const TransferSystem& ts, uint32_t k_max,
                                      uint64_t cap = kDefaultEnumerationCap);

}  // namespace gibbsmatch

#endif  // GIBBSMATCH_TRANSFER_HPP_
