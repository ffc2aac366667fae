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
// Input covariance optimization for both users: classical waterfilling
// (and its target-rate power-minimization variant) for the primary, and
// for the secondary the SVD diagonalization of the whitened effective
// channel followed by the closed-form equal-weighted-power allocation and
// a greedy subset search over the sorted normalized gains.

#ifndef VFDM_OPTIMIZER_HPP
#define VFDM_OPTIMIZER_HPP

#include <Eigen/Dense>
#include <vector>

#include "vfdm/channel.hpp"
#include "vfdm/precoder.hpp"

namespace vfdm {

struct PrimaryAllocation {
    Eigen::VectorXd powers;    // p_{1,n}, length N
    double water_level = 0.0;  // mu_1; 0 when nothing is allocated
    double achieved_rate = 0.0; // bits/s/Hz
    bool feasible = true;      // false: target unreachable or no usable carrier
    double budget = 0.0;       // total power actually spent, sum powers
};

// Waterfilling p_n = [mu - 1/|H_n|^2]_+ with total budget N*p1; the water
// level is solved exactly over the sorted active-set breakpoints.
PrimaryAllocation primary_waterfilling(const DiagFreqChannel &chan, double p1);

// Minimal-budget waterfilling that achieves r1_target within 1e-9
// bits/s/Hz, found by bisection on the per-symbol budget. If the target
// is unreachable at p1_max the full-power allocation is returned with
// feasible = false.
PrimaryAllocation primary_min_power_for_target(const DiagFreqChannel &chan, double r1_target,
                                               double p1_max);

// Diagonal of the interference-plus-noise covariance at the secondary
// receiver: entries 1 + p_{1,n} |H12_n|^2 (all >= 1).
Eigen::VectorXd interference_noise_diagonal(const DiagFreqChannel &chan12,
                                            const PrimaryAllocation &primary);

// Whitened effective channel G = S_eta^{-1/2} F T(h22) V, without the
// power normalization factor alpha (it is reinstated analytically in the
// rate expressions). s_eta_diag must be strictly positive.
Eigen::MatrixXcd effective_channel(const Eigen::VectorXcd &h22,
                                   const VandermondePrecoder &precoder,
                                   const Eigen::VectorXd &s_eta_diag);

// Equal-weighted-power allocation over prefixes of the c-sorted modes:
// within a selected subset of cardinality l, p_i = L P2 / (beta_i sum_j 1/beta_j),
// which equalizes beta_i p_i and yields per-mode SIR (N+L) P2 c_i / l.
// The greedy search keeps the prefix whose objective
// f_l = (1/N) sum_{i<=l} log2(1 + (N+L) P2 c_{pi(i)} / l) is largest
// (ties go to the smaller cardinality).
struct GreedyAllocation {
    std::vector<int> perm;   // retained indices sorted by c descending
    int r_star = 0;          // selected cardinality
    Eigen::VectorXd powers;  // per retained index; zero outside the subset
    std::vector<double> prefix_objective; // f_l for l = 1..r
};

GreedyAllocation greedy_equal_beta_allocation(const Eigen::VectorXd &beta,
                                              const Eigen::VectorXd &c, int l_total, double p2,
                                              int n, int n_plus_l);

struct SecondaryAllocation {
    Eigen::MatrixXcd svd_left;   // U_g, N x r (retained modes)
    Eigen::VectorXd singular_sq; // lambda_{g,i} = sigma_i^2, length r
    Eigen::MatrixXcd svd_right;  // P_g, L x r (retained columns)
    Eigen::VectorXd beta;        // [P_g^H V^H V P_g]_{ii}
    Eigen::VectorXd c;           // lambda_i / beta_i
    std::vector<int> perm;       // c-descending order
    int r_star = 0;
    Eigen::VectorXd powers;      // per retained index
    std::vector<double> prefix_objective; // f_l sequence
    double alpha = 0.0;          // sqrt((N+L) P2 / tr(V S2 V^H))
    Eigen::MatrixXcd covariance; // S2 = P_g diag(p) P_g^H, L x L
    bool empty = false;          // no usable singular value

    // Per-mode signal-to-interference ratios at the stored powers,
    // (N+L) P2 c_i beta_i p_i / sum_j beta_j p_j (zero outside the subset).
    Eigen::VectorXd sir(double p2, int n_plus_l) const;

    // High-SIR reparameterization constants a_i = (N+L) P2 c_i beta_i
    // (unrelated to the Vandermonde roots).
    Eigen::VectorXd high_sir_constants(double p2, int n_plus_l) const;
};

// Full secondary covariance pipeline: thin SVD of G (singular values
// below 1e-12 * sigma_max are dropped), beta/c from the precoder's
// unit-norm columns, greedy equal-beta allocation, covariance assembly
// and the power normalization alpha. Requires p2 > 0.
SecondaryAllocation secondary_covariance(const Eigen::MatrixXcd &g,
                                         const VandermondePrecoder &precoder, double p2, int n,
                                         int l);

// Baseline S2 = p2 * I_L; meets the trace constraint with equality.
SecondaryAllocation equal_power_covariance(int l, double p2);

} // namespace vfdm

#endif
