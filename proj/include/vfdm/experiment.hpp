// SPDX-License-Identifier: Apache-2.0
//
// vfdm: link-level simulator for Vandermonde frequency division multiplexing
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Config-driven Monte Carlo experiments: secondary rate vs SNR, the
// primary target-rate sweep, the Vandermonde rank sweep and a single
// fully traced trial. Trials run in parallel on a work pool; every trial
// is a pure function of a seed derived from (master seed, grid index,
// trial index), and aggregation always happens in trial order, so the
// CSV output is byte-identical at any thread count.

#ifndef VFDM_EXPERIMENT_HPP
#define VFDM_EXPERIMENT_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "vfdm/channel.hpp"
#include "vfdm/precoder.hpp"

namespace vfdm {

extern const char *const kVersion;

enum class ExperimentKind { rate_vs_snr, target_rate_sweep, rank_vs_l, single_trial };

const char *to_string(ExperimentKind kind);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::rate_vs_snr;
    SystemParams params;                       // p1/p2 hold the linear budgets
    std::vector<double> snr_grid_db;           // rate_vs_snr: P1 = P2 = 10^(snr/10)
    std::vector<double> target_grid;           // target_rate_sweep: R1* in bits/s/Hz
    std::vector<int> l_grid;                   // rank_vs_l
    int trials = 0;                            // 0 = kind-dependent default
    uint64_t master_seed = 1;
    PrecoderMode mode = PrecoderMode::exact;
    double bandwidth_hz = 20e6;                // for Mbps columns
    double rank_tol = 1e-12;
    double aspect_ratio = 0.25;                // c = L/N for the rank sweep
    int threads = 0;                           // 0 = hardware concurrency
    int oracle_check_interval = 50;            // log-det cross-check every k-th trial
    std::string output_path;                   // empty = stdout

    // Fills kind-dependent defaults (grids, trial counts) and checks all
    // invariants; throws ConfigError.
    void finalize();
};

// key=value assignment with the same keys as the config file; throws
// ConfigError on unknown keys or unparseable values.
void apply_config_kv(ExperimentConfig &config, const std::string &key, const std::string &value);

// Flat key=value text, one pair per line, '#' comments.
ExperimentConfig parse_config_file(const std::string &path);
ExperimentConfig parse_config_text(const std::string &text);

// Canonical serialization of every field; basis of the config hash.
std::string serialize_config(const ExperimentConfig &config);
uint64_t config_hash(const ExperimentConfig &config);

// Everything observable from one rate trial. `ok == false` marks a
// numerical failure (the trial is excluded from the averages and counted).
struct TrialRecord {
    bool ok = false;
    int redraws = 0;
    std::string error;
    double r1 = 0.0;
    double r2_opt = 0.0;
    double r2_eq = 0.0;
    double leakage = 0.0;
    double alpha = 0.0;
    double p1_spent = 0.0; // per-symbol average power the primary used
    int r_star = 0;
    bool primary_feasible = true;
    double oracle_gap = std::numeric_limits<double>::quiet_NaN(); // set when cross-checked
};

// One rate-vs-SNR trial at equal budgets p1 = p2 = p_linear.
TrialRecord run_rate_trial(const SystemParams &params, PrecoderMode mode, double p_linear,
                           uint64_t seed, bool oracle_check);

// One target-rate trial: the primary spends the least power achieving
// r1_target (full power, flagged infeasible, when unreachable).
TrialRecord run_target_trial(const SystemParams &params, PrecoderMode mode, double r1_target,
                             uint64_t seed, bool oracle_check);

struct RankTrialRecord {
    bool ok = false;
    int redraws = 0;
    std::string error;
    int rank = 0;
};

RankTrialRecord run_rank_trial(int l, int n, double sigma, double rel_tol, uint64_t seed);

struct ExperimentResult {
    ExperimentKind kind;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows; // one row per grid point
    uint64_t master_seed = 0;
    uint64_t cfg_hash = 0;
    PrecoderMode mode = PrecoderMode::exact;
    long total_trials = 0;
    long total_redraws = 0;
    long total_failures = 0;

    double failure_rate() const {
        return total_trials > 0 ? double(total_failures) / double(total_trials) : 0.0;
    }
};

ExperimentResult run_rate_vs_snr(const ExperimentConfig &config);
ExperimentResult run_target_rate_sweep(const ExperimentConfig &config);
ExperimentResult run_rank_vs_l(const ExperimentConfig &config);

// Dispatch on config.kind (single_trial is served by single_trial_trace).
ExperimentResult run_experiment(const ExperimentConfig &config);

// Structured text record of one fully instrumented trial: roots, leakage,
// singular values, beta, c, permutation, f_l sequence, r*, powers, alpha,
// rates and the oracle rate. Byte-identical on rerun.
std::string single_trial_trace(const ExperimentConfig &config);

// CSV with one '#' metadata line, a header row and 12-significant-digit
// values.
void write_csv(const ExperimentResult &result, std::ostream &os);
std::string csv_string(const ExperimentResult &result);

// Runs `count` jobs on `threads` workers (serial when threads <= 1).
// Bodies must not throw.
void parallel_for(int count, int threads, const std::function<void(int)> &body);

} // namespace vfdm

#endif
