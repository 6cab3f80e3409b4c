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

#include "transfer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace gibbsmatch {

namespace {

constexpr double kPerronTolerance = 1e-12;
constexpr int kPerronMaxIterations = 100000;

// Number of patterns m^k, or nullopt on overflow past `cap`.
std::optional<uint64_t> pattern_count(std::size_t m, uint32_t k, uint64_t cap) {
  uint64_t count = 1;
  for (uint32_t i = 0; i < k; ++i) {
    if (count > cap / m) return std::nullopt;
    count *= m;
  }
  if (count > cap) return std::nullopt;
  return count;
}

void check_enumeration_cap(std::size_t m, uint32_t k, uint64_t cap) {
  if (!pattern_count(m, k, cap))
    throw CapExceeded("pattern enumeration for k=" + std::to_string(k) + " over " +
                      std::to_string(m) + " symbols exceeds the cap of " +
                      std::to_string(cap) + " patterns");
}

double power_of(double p, double exponent) {
  if (exponent == 1.0) return p;
  if (exponent == 2.0) return p * p;
  if (exponent == 3.0) return p * p * p;
  return std::pow(p, exponent);
}

}  // namespace

TransferSystem::TransferSystem(Interaction interaction, uint32_t block_len)
    : interaction_(std::move(interaction)), block_len_(block_len) {}

std::size_t TransferSystem::state_of(std::span<const uint32_t> block) const {
  std::size_t idx = 0;
  for (const uint32_t s : block) idx = idx * symbol_count() + s;
  return idx;
}

void TransferSystem::decode_state(std::size_t state, std::span<uint32_t> out) const {
  const std::size_t m = symbol_count();
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<uint32_t>(state % m);
    state /= m;
  }
}

TransferSystem TransferSystem::build(const Interaction& interaction) {
  const std::size_t m = interaction.alphabet().size();
  const uint32_t block_len = std::max<uint32_t>(interaction.range(), 1);

  uint64_t states = 1;
  for (uint32_t i = 0; i < block_len; ++i) {
    if (states > kMaxTransferStates / m)
      throw std::invalid_argument("transfer state space m^B exceeds " +
                                  std::to_string(kMaxTransferStates));
    states *= m;
  }
  if (states > kMaxTransferStates)
    throw std::invalid_argument("transfer state space m^B exceeds " +
                                std::to_string(kMaxTransferStates));

  TransferSystem ts(interaction, block_len);
  const auto n_states = static_cast<std::size_t>(states);
  ts.tail_modulus_ = n_states / m;

  // Energies of one-symbol extensions; shifted so the largest weight is 1,
  // which keeps exp() well away from overflow for any finite couplings.
  std::vector<double> energy(n_states * m);
  std::vector<uint32_t> word(block_len + 1);
  for (std::size_t x = 0; x < n_states; ++x) {
    ts.decode_state(x, std::span(word).first(block_len));
    for (uint32_t a = 0; a < m; ++a) {
      word[block_len] = a;
      energy[x * m + a] = interaction.energy_closing_at(word, block_len);
    }
  }
  const double shift = *std::min_element(energy.begin(), energy.end());
  std::vector<double> weight(n_states * m);
  for (std::size_t i = 0; i < weight.size(); ++i) {
    weight[i] = std::exp(-(energy[i] - shift));
    if (!(weight[i] > 0.0) || !std::isfinite(weight[i]))
      throw SolverError("transfer weight underflow; coupling spread too large");
  }

  // Power iteration for the right and left Perron vectors of the shifted
  // matrix. The chain only ever uses ratios, so the shift cancels there;
  // only the pressure needs it back.
  std::vector<double> right(n_states, 1.0 / static_cast<double>(n_states));
  std::vector<double> left = right;
  std::vector<double> next(n_states);
  double lambda_shifted = 0.0;
  double residual = 0.0;

  const auto apply_right = [&](const std::vector<double>& v, std::vector<double>& out) {
    for (std::size_t x = 0; x < n_states; ++x) {
      double acc = 0.0;
      const std::size_t base = (x % ts.tail_modulus_) * m;
      for (uint32_t a = 0; a < m; ++a) acc += weight[x * m + a] * v[base + a];
      out[x] = acc;
    }
  };
  const auto apply_left = [&](const std::vector<double>& v, std::vector<double>& out) {
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t x = 0; x < n_states; ++x) {
      const std::size_t base = (x % ts.tail_modulus_) * m;
      for (uint32_t a = 0; a < m; ++a) out[base + a] += weight[x * m + a] * v[x];
    }
  };
  const auto iterate = [&](std::vector<double>& v, const auto& apply) -> double {
    double lambda = 0.0;
    for (int it = 0; it < kPerronMaxIterations; ++it) {
      apply(v, next);
      double sum = 0.0;
      for (const double x : next) sum += x;
      lambda = sum;
      double max_diff = 0.0;
      double max_v = 0.0;
      for (std::size_t i = 0; i < n_states; ++i) {
        max_diff = std::max(max_diff, std::abs(next[i] - lambda * v[i]));
        max_v = std::max(max_v, std::abs(v[i]));
      }
      const double rel = max_diff / (lambda * max_v);
      for (std::size_t i = 0; i < n_states; ++i) v[i] = next[i] / sum;
      if (rel <= kPerronTolerance) {
        residual = std::max(residual, rel);
        return lambda;
      }
    }
    apply(v, next);
    double sum = 0.0;
    for (const double x : next) sum += x;
    double max_diff = 0.0;
    for (std::size_t i = 0; i < n_states; ++i)
      max_diff = std::max(max_diff, std::abs(next[i] - sum * v[i]));
    throw SolverError("Perron iteration did not converge (relative residual " +
                      std::to_string(max_diff / sum) + ")");
  };

  lambda_shifted = iterate(right, apply_right);
  iterate(left, apply_left);

  for (const double v : right)
    if (!(v > 0.0)) throw SolverError("Perron vector not strictly positive");
  for (const double v : left)
    if (!(v > 0.0)) throw SolverError("Perron vector not strictly positive");

  ts.lambda_ = lambda_shifted * std::exp(-shift);
  ts.pressure_ = std::log(lambda_shifted) - shift;
  ts.residual_ = residual;

  // pi = l*r normalized; transitions row-normalized exactly so the sampler's
  // inverse CDF sees genuine distributions.
  double lr = 0.0;
  for (std::size_t x = 0; x < n_states; ++x) lr += left[x] * right[x];
  ts.pi_.resize(n_states);
  for (std::size_t x = 0; x < n_states; ++x) ts.pi_[x] = left[x] * right[x] / lr;

  ts.trans_.resize(n_states * m);
  for (std::size_t x = 0; x < n_states; ++x) {
    const std::size_t base = (x % ts.tail_modulus_) * m;
    double row = 0.0;
    for (uint32_t a = 0; a < m; ++a) {
      ts.trans_[x * m + a] = weight[x * m + a] * right[base + a];
      row += ts.trans_[x * m + a];
    }
    for (uint32_t a = 0; a < m; ++a) ts.trans_[x * m + a] /= row;
  }

  ts.marginals_.resize(block_len + 1);
  ts.marginals_[block_len] = ts.pi_;
  for (uint32_t len = block_len; len-- > 0;) {
    const std::vector<double>& fine = ts.marginals_[len + 1];
    std::vector<double>& coarse = ts.marginals_[len];
    coarse.assign(fine.size() / m, 0.0);
    for (std::size_t p = 0; p < coarse.size(); ++p) {
      double acc = 0.0;
      for (uint32_t a = 0; a < m; ++a) acc += fine[p * m + a];
      coarse[p] = acc;
    }
  }
  return ts;
}

double TransferSystem::cylinder_prob(std::span<const uint32_t> pattern) const {
  if (pattern.empty()) throw std::invalid_argument("pattern must be nonempty");
  const std::size_t m = symbol_count();
  for (const uint32_t s : pattern)
    if (s >= m) throw std::invalid_argument("pattern symbol outside alphabet");

  if (pattern.size() < block_len_) {
    std::size_t idx = 0;
    for (const uint32_t s : pattern) idx = idx * m + s;
    return marginals_[pattern.size()][idx];
  }
  std::size_t state = state_of(pattern.first(block_len_));
  double p = pi_[state];
  for (std::size_t t = block_len_; t < pattern.size(); ++t) {
    p *= transition(state, pattern[t]);
    state = successor(state, pattern[t]);
  }
  return p;
}

double pressure(const Interaction& interaction) {
  return TransferSystem::build(interaction).pressure();
}

double match_exponent(const Interaction& interaction) {
  return pressure(interaction) - pressure(interaction.scaled(2.0)) / 2.0;
}

double cross_match_exponent(const Interaction& u, const Interaction& v) {
  return 0.5 * (pressure(u) + pressure(v) - pressure(u.plus(v)));
}

double entropy(const Interaction& interaction) {
  const double step = 1e-5;
  const double plus = pressure(interaction.scaled(1.0 + step));
  const double minus = pressure(interaction.scaled(1.0 - step));
  return pressure(interaction) - (plus - minus) / (2.0 * step);
}

double critical_length_for(double exponent, uint64_t n) {
  if (n < 2) throw std::invalid_argument("critical length needs n >= 2");
  if (!(exponent > 0.0))
    throw std::invalid_argument("match exponent must be positive (degenerate model)");
  return std::log(static_cast<double>(n)) / exponent;
}

double critical_length(const Interaction& interaction, uint64_t n) {
  return critical_length_for(match_exponent(interaction), n);
}

double pattern_power_sum(const TransferSystem& ts, uint32_t k, double exponent,
                         uint64_t cap) {
  if (k < 1) throw std::invalid_argument("pattern_power_sum needs k >= 1");
  const std::size_t m = ts.symbol_count();
  check_enumeration_cap(m, k, cap);

  if (k < ts.block_length()) {
    const std::vector<double>& marg = ts.prefix_marginal(k);
    double total = 0.0;
    for (const double p : marg) total += power_of(p, exponent);
    return total;
  }

  double total = 0.0;
  // Depth-first over single-symbol extensions, visiting patterns in index
  // order so the sum is reproducible bit for bit.
  const auto extend = [&](const auto& self, std::size_t state, double p, uint32_t depth) -> void {
    if (depth == k) {
      total += power_of(p, exponent);
      return;
    }
    for (uint32_t a = 0; a < m; ++a)
      self(self, ts.successor(state, a), p * ts.transition(state, a), depth + 1);
  };
  for (std::size_t x = 0; x < ts.state_count(); ++x)
    extend(extend, x, ts.stationary(x), ts.block_length());
  return total;
}

double pattern_cross_sum(const TransferSystem& a, const TransferSystem& b, uint32_t k) {
  if (k < 1) throw std::invalid_argument("pattern_cross_sum needs k >= 1");
  if (!(a.alphabet() == b.alphabet()))
    throw std::invalid_argument("cross sum needs a shared alphabet");
  const std::size_t m = a.symbol_count();
  const uint32_t joint_block = std::max(a.block_length(), b.block_length());

  std::vector<uint32_t> word(std::max<uint32_t>(joint_block, k));

  if (k < joint_block) {
    // Few patterns (m^k < m^B <= state cap); enumerate directly.
    double total = 0.0;
    const uint64_t count = *pattern_count(m, k, kMaxTransferStates);
    for (uint64_t idx = 0; idx < count; ++idx) {
      uint64_t rest = idx;
      for (uint32_t i = k; i-- > 0;) {
        word[i] = static_cast<uint32_t>(rest % m);
        rest /= m;
      }
      const auto pat = std::span(word).first(k);
      total += a.cylinder_prob(pat) * b.cylinder_prob(pat);
    }
    return total;
  }

  // v[w] accumulates sum over patterns ending in the joint block w of
  // P(pattern) * Q(pattern); one pass per appended symbol.
  uint64_t joint_states = 1;
  for (uint32_t i = 0; i < joint_block; ++i) joint_states *= m;
  std::vector<double> v(joint_states);
  for (uint64_t w = 0; w < joint_states; ++w) {
    uint64_t rest = w;
    for (uint32_t i = joint_block; i-- > 0;) {
      word[i] = static_cast<uint32_t>(rest % m);
      rest /= m;
    }
    const auto block = std::span(word).first(joint_block);
    v[w] = a.cylinder_prob(block) * b.cylinder_prob(block);
  }

  const uint64_t a_states = a.state_count();
  const uint64_t b_states = b.state_count();
  const uint64_t tail = joint_states / m;
  std::vector<double> next(joint_states);
  for (uint32_t t = joint_block; t < k; ++t) {
    std::fill(next.begin(), next.end(), 0.0);
    for (uint64_t w = 0; w < joint_states; ++w) {
      if (v[w] == 0.0) continue;
      const auto sa = static_cast<std::size_t>(w % a_states);
      const auto sb = static_cast<std::size_t>(w % b_states);
      const uint64_t base = (w % tail) * m;
      for (uint32_t sym = 0; sym < m; ++sym)
        next[base + sym] += v[w] * a.transition(sa, sym) * b.transition(sb, sym);
    }
    v.swap(next);
  }
  double total = 0.0;
  for (const double x : v) total += x;
  return total;
}

ThermoDiagnostics compute_diagnostics(const TransferSystem& ts, uint32_t k_max,
                                      uint64_t cap) {
  if (k_max < 1) throw std::invalid_argument("diagnostics need k_max >= 1");
  const std::size_t m = ts.symbol_count();
  check_enumeration_cap(m, k_max, cap);
  const Interaction& u = ts.interaction();

  ThermoDiagnostics diag;

  // gamma_hat: walk every pattern of each length <= k_max, tracking the
  // probability and the free-boundary energy incrementally.
  double max_log_gap = 0.0;
  std::vector<uint32_t> prefix(k_max);
  const uint32_t block = ts.block_length();
  const auto visit = [&](const auto& self, uint32_t depth, std::size_t state, double p,
                         double h) -> void {
    if (depth > 0) {
      const double log_gap = std::log(p) + depth * ts.pressure() + h;
      max_log_gap = std::max(max_log_gap, std::abs(log_gap));
    }
    if (depth == k_max) return;
    for (uint32_t a = 0; a < m; ++a) {
      prefix[depth] = a;
      const double h_next =
          h + u.energy_closing_at(std::span(prefix).first(depth + 1), depth);
      double p_next;
      std::size_t state_next = 0;
      if (depth + 1 < block) {
        p_next = ts.prefix_marginal(depth + 1)[state * m + a];
        state_next = state * m + a;
      } else if (depth + 1 == block) {
        state_next = state * m + a;
        p_next = ts.stationary(state_next);
      } else {
        p_next = p * ts.transition(state, a);
        state_next = ts.successor(state, a);
      }
      self(self, depth + 1, state_next, p_next, h_next);
    }
  };
  visit(visit, 0, 0, 1.0, 0.0);
  diag.gamma_hat = std::exp(max_log_gap);

  // rho_hat: largest conditional symbol probability over all two-sided
  // contexts of length R.
  const uint32_t r = u.range();
  const auto ctx_count = pattern_count(m, 2 * r, cap);
  if (!ctx_count)
    throw CapExceeded("context enumeration m^(2R) exceeds the cap of " +
                      std::to_string(cap));
  std::vector<uint32_t> left(r), right(r);
  uint64_t side = 1;
  for (uint32_t i = 0; i < r; ++i) side *= m;
  double rho = 0.0;
  for (uint64_t li = 0; li < side; ++li) {
    uint64_t rest = li;
    for (uint32_t i = r; i-- > 0;) {
      left[i] = static_cast<uint32_t>(rest % m);
      rest /= m;
    }
    for (uint64_t ri = 0; ri < side; ++ri) {
      rest = ri;
      for (uint32_t i = r; i-- > 0;) {
        right[i] = static_cast<uint32_t>(rest % m);
        rest /= m;
      }
      const auto probs = u.conditional_site_distribution(left, right);
      rho = std::max(rho, *std::max_element(probs.begin(), probs.end()));
    }
  }
  diag.rho_hat = rho;
  diag.delta_hat = 1.0 - rho;
  return diag;
}

}  // namespace gibbsmatch
