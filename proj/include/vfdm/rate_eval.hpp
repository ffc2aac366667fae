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
// Rate evaluation in closed form and through an independent
// log-determinant route. The closed form must match the log-det value on
// every optimized allocation; that single equality transitively checks
// the SVD, the beta/c bookkeeping, the closed-form powers and alpha.
// All rates are in bits/s/Hz (log base 2).

#ifndef VFDM_RATE_EVAL_HPP
#define VFDM_RATE_EVAL_HPP

#include <Eigen/Dense>

#include "vfdm/channel.hpp"
#include "vfdm/optimizer.hpp"
#include "vfdm/precoder.hpp"

namespace vfdm {

struct RateReport {
    double r1 = 0.0;
    double r2 = 0.0;
    double r2_oracle = 0.0;
    double leakage = 0.0;
    int r_star = 0;
    bool feasible_primary = true;
};

// (1/N) sum_{i=1}^{r*} log2(1 + (N+L) p2 c_{pi(i)} / r*).
double secondary_rate_closed_form(const SecondaryAllocation &alloc, int n, int l, double p2);

// Independent oracle for any covariance s2 with positive trace:
// (1/N) log2 det(I + (N+L) p2 / tr(V s2 V^H) * G s2 G^H), evaluated by a
// Cholesky factorization with log-domain accumulation.
double secondary_rate_logdet(const Eigen::VectorXcd &h22, const VandermondePrecoder &precoder,
                             const Eigen::VectorXd &s_eta_diag, const Eigen::MatrixXcd &s2,
                             double p2, int n, int l);

// Closed form for the equal power baseline S2 = P2 I_L over the retained
// modes: (1/N) sum_i log2(1 + (N+L) p2 lambda_i / L). Valid for unit-norm
// precoder columns, where tr(V S2 V^H) = L P2.
double secondary_rate_equal_power(const Eigen::VectorXd &singular_sq, double p2, int n, int l);

// (1/N) sum_n log2(1 + p_{1,n} |H_n|^2).
double primary_rate(const DiagFreqChannel &chan, const PrimaryAllocation &alloc);

} // namespace vfdm

#endif
