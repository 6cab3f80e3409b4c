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

#ifndef GIBBSMATCH_EXPERIMENTS_HPP_
#define GIBBSMATCH_EXPERIMENTS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "model_file.hpp"
#include "transfer.hpp"

namespace gibbsmatch {

// Fixed documented default seed; runs never fall back to wall-clock state.
inline constexpr uint64_t kDefaultSeed = 1729;

enum class MatchMode { kSelf, kPairSame, kPairDifferent, kDirac };
enum class ScanKind { kRegime, kTightness, kSlope, kDiracControl };

std::string to_string(MatchMode mode);
std::string to_string(ScanKind scan);

struct ExperimentPlan {
  std::string name = "experiment";
  ScanKind scan = ScanKind::kRegime;
  MatchMode mode = MatchMode::kSelf;
  Model model_u;
  std::optional<Model> model_v;  // pair-different
  std::string dirac_token;       // dirac mode: the constant symbol
  double dirac_delta = 0.5;
  std::vector<uint64_t> n_grid;
  // Window rule: either explicit lengths, or integer offsets applied to
  // floor(k*(n)) with k* = ln(n)/alpha (ln(n)/alpha~ for pair-different).
  std::vector<uint32_t> k_list;
  std::vector<int64_t> k_offsets;
  uint64_t trials = 0;  // 0: 2000 per cell below n = 2^16, 200 at or above
  uint64_t seed = kDefaultSeed;
  std::vector<uint64_t> exceedance_m = {1, 2, 4, 8, 16, 32, 64};
};

// Plan file schema mirrors the struct; model paths resolve relative to the
// plan file's directory.
ExperimentPlan load_plan_file(const std::string& path);

struct MeanPrediction {
  double value = 0.0;
  // Pair modes carry the exact first-moment identity
  // (n-k+1)(n-k) * sum_A P(A)Q(A); self mode only has the order-of-magnitude
  // reference scale (n-k)e^{-k a} + (n-2k)^2 e^{-2k a}.
  bool exact = false;
};

MeanPrediction predicted_mean(MatchMode mode, const TransferSystem& u,
                              const TransferSystem* v, uint64_t n, uint32_t k,
                              uint32_t dirac_symbol = 0);

struct CellSummary {
  uint64_t n = 0;
  uint32_t k = 0;
  int64_t offset = 0;
  bool from_offset = false;
  double k_star = 0.0;  // fractional threshold before flooring (offset rule)
  uint64_t trials = 0;
  double mean = 0.0;
  double variance = 0.0;
  double q05 = 0.0, q50 = 0.0, q95 = 0.0;
  double zero_frac = 0.0;
  std::vector<std::pair<uint64_t, double>> exceedance;  // (m, P(N>m))
  double predicted_mean = 0.0;
  bool predicted_exact = false;
  double ratio = 0.0;  // mean / predicted
};

struct OffsetTrend {
  int64_t offset = 0;
  bool mean_strictly_increasing = false;
  bool zero_frac_nondecreasing = false;
  double zero_frac_at_largest_n = 0.0;
  double ratio_min = 0.0, ratio_max = 0.0;
};

struct RegimeResult {
  std::vector<CellSummary> cells;  // n-major, then k rule order
  std::vector<OffsetTrend> trends;
};

struct TightnessResult {
  std::vector<CellSummary> cells;
  std::vector<uint64_t> m_list;
  // scaled[ni][mi] = m * P(N>m) at grid point ni
  std::vector<std::vector<double>> scaled_exceedance;
  std::vector<double> positive_frac;  // P(N>0) per grid point
  double min_positive_frac = 0.0;
  std::vector<double> max_scaled_per_n;  // V(n) = max over m of m * P(N>m)
};

struct SlopeFit {
  std::vector<uint64_t> n_grid;
  std::vector<double> mean_m;
  std::vector<double> sd_m;
  uint64_t trials = 0;
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double target = 0.0;  // 1 / alpha
  double relative_error = 0.0;
};

struct DiracControl {
  struct Row {
    uint64_t n = 0;
    uint32_t k = 0;
    uint64_t trials = 0;
    double pattern_prob = 0.0;    // P([a]_k), exact
    double predicted_mean = 0.0;  // n (n-k+1) P([a]_k), diverging along the grid
    double zero_upper_counts = 0.0;  // union bound on P(N>0): (n-k+1) P([a]_k)
    double mean = 0.0;
    double zero_frac = 0.0;
  };
  double decay_rate = 0.0;  // per-symbol decay of P([a]_k)
  std::vector<Row> rows;
};

RegimeResult regime_scan(const ExperimentPlan& plan, unsigned workers);
TightnessResult tightness_scan(const ExperimentPlan& plan, unsigned workers);
SlopeFit slope_fit(const ExperimentPlan& plan, unsigned workers);
DiracControl dirac_control(const ExperimentPlan& plan, unsigned workers);

// Runs the plan's scan and writes <scan>.csv (+ auxiliary CSVs), run.json
// and optional plot series into out_dir. Output bytes depend only on the
// plan, never on the worker count.
void run_experiment(const ExperimentPlan& plan, const std::string& out_dir,
                    unsigned workers, bool plot_data);

}  // namespace gibbsmatch

#endif  // GIBBSMATCH_EXPERIMENTS_HPP_
