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

#include "vfdm/optimizer.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace vfdm {

PrimaryAllocation primary_waterfilling(const DiagFreqChannel &chan, double p1) {
    if (!(p1 >= 0.0)) throw std::invalid_argument("primary_waterfilling: p1 must be >= 0");
    if (!chan.gains.allFinite())
        throw std::invalid_argument("primary_waterfilling: gains must be finite");

    const int n = int(chan.gains.size());
    const double budget = double(n) * p1;
    PrimaryAllocation alloc;
    alloc.powers = Eigen::VectorXd::Zero(n);

    // Inverse gains of the usable carriers, sorted ascending; carriers
    // with zero gain never become active.
    std::vector<std::pair<double, int>> inv;
    inv.reserve(n);
    for (int k = 0; k < n; ++k) {
        const double g = std::norm(chan.gains[k]);
        if (g > 0.0) inv.emplace_back(1.0 / g, k);
    }
    std::sort(inv.begin(), inv.end());

    if (inv.empty() || budget <= 0.0) {
        alloc.feasible = !(budget > 0.0 && inv.empty()) && budget <= 0.0 ? true : inv.empty() ? false : true;
        alloc.feasible = budget <= 0.0 ? true : !inv.empty();
        alloc.water_level = 0.0;
        alloc.achieved_rate = 0.0;
        alloc.budget = 0.0;
        return alloc;
    }

    // Exact water level over the active-set breakpoints: with the k
    // smallest inverse gains active, mu = (budget + sum inv) / k. The
    // active set is the largest k whose water level still covers its
    // highest breakpoint.
    double prefix = 0.0;
    double mu = 0.0;
    int active = 0;
    for (int k = 1; k <= int(inv.size()); ++k) {
        prefix += inv[k - 1].first;
        const double candidate = (budget + prefix) / double(k);
        if (candidate > inv[k - 1].first) {
            mu = candidate;
            active = k;
        } else {
            break;
        }
    }

    double spent = 0.0;
    for (int i = 0; i < active; ++i) {
        const double p = std::max(0.0, mu - inv[i].first);
        alloc.powers[inv[i].second] = p;
        spent += p;
    }
    alloc.water_level = mu;
    alloc.budget = spent;
    alloc.feasible = true;

    double rate = 0.0;
    for (int k = 0; k < n; ++k) rate += std::log2(1.0 + alloc.powers[k] * std::norm(chan.gains[k]));
    alloc.achieved_rate = rate / double(n);
    return alloc;
}

PrimaryAllocation primary_min_power_for_target(const DiagFreqChannel &chan, double r1_target,
                                               double p1_max) {
    if (!(r1_target >= 0.0))
        throw std::invalid_argument("primary_min_power_for_target: target must be >= 0");
    if (!(p1_max >= 0.0))
        throw std::invalid_argument("primary_min_power_for_target: p1_max must be >= 0");

    if (r1_target == 0.0) {
        PrimaryAllocation alloc = primary_waterfilling(chan, 0.0);
        alloc.feasible = true;
        return alloc;
    }

    PrimaryAllocation full = primary_waterfilling(chan, p1_max);
    if (full.achieved_rate < r1_target) {
        full.feasible = false;
        return full;
    }

    // The rate is continuous and strictly increasing in the budget, so
    // bisect the per-symbol budget until the target is met to 1e-9.
    double lo = 0.0, hi = p1_max;
    PrimaryAllocation best = full;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        PrimaryAllocation trial = primary_waterfilling(chan, mid);
        if (trial.achieved_rate >= r1_target) {
            hi = mid;
            best = trial;
        } else {
            lo = mid;
        }
        if (std::abs(trial.achieved_rate - r1_target) <= 1e-9) {
            best = trial;
            break;
        }
        if (hi - lo <= 1e-12 * std::max(1.0, hi)) break;
    }
    best.feasible = true;
    return best;
}

Eigen::VectorXd interference_noise_diagonal(const DiagFreqChannel &chan12,
                                            const PrimaryAllocation &primary) {
    if (chan12.gains.size() != primary.powers.size())
        throw std::invalid_argument("interference_noise_diagonal: dimension mismatch");
    const int n = int(chan12.gains.size());
    Eigen::VectorXd diag(n);
    for (int k = 0; k < n; ++k) diag[k] = 1.0 + primary.powers[k] * std::norm(chan12.gains[k]);
    return diag;
}

Eigen::MatrixXcd effective_channel(const Eigen::VectorXcd &h22,
                                   const VandermondePrecoder &precoder,
                                   const Eigen::VectorXd &s_eta_diag) {
    const int n = int(s_eta_diag.size());
    if (n < 1) throw std::invalid_argument("effective_channel: empty covariance diagonal");
    if ((s_eta_diag.array() <= 0.0).any())
        throw std::invalid_argument("effective_channel: covariance diagonal must be positive");
    if (int(h22.size()) - 1 + n != int(precoder.matrix.rows()))
        throw std::invalid_argument("effective_channel: dimension mismatch");

    const Eigen::MatrixXcd v = precoder.unit_columns();
    Eigen::MatrixXcd g = unitary_dft(n) * (toeplitz_conv_matrix(h22, n) * v);
    // S_eta is diagonal, so the whitening is an exact per-row scaling.
    for (int k = 0; k < n; ++k) g.row(k) /= std::sqrt(s_eta_diag[k]);
    return g;
}

GreedyAllocation greedy_equal_beta_allocation(const Eigen::VectorXd &beta,
                                              const Eigen::VectorXd &c, int l_total, double p2,
                                              int n, int n_plus_l) {
    if (beta.size() != c.size())
        throw std::invalid_argument("greedy_equal_beta_allocation: beta/c size mismatch");
    if (!(p2 > 0.0)) throw std::invalid_argument("greedy_equal_beta_allocation: p2 must be > 0");
    const int r = int(beta.size());

    GreedyAllocation ga;
    ga.powers = Eigen::VectorXd::Zero(r);
    if (r == 0) return ga;

    ga.perm.resize(r);
    std::iota(ga.perm.begin(), ga.perm.end(), 0);
    std::stable_sort(ga.perm.begin(), ga.perm.end(), [&](int a, int b) { return c[a] > c[b]; });

    // f_l for every prefix cardinality; ties resolved toward smaller l.
    const double factor = double(n_plus_l) * p2;
    ga.prefix_objective.resize(r);
    double best = -std::numeric_limits<double>::infinity();
    for (int l = 1; l <= r; ++l) {
        double f = 0.0;
        for (int i = 0; i < l; ++i) f += std::log2(1.0 + factor * c[ga.perm[i]] / double(l));
        f /= double(n);
        ga.prefix_objective[l - 1] = f;
        if (f > best) {
            best = f;
            ga.r_star = l;
        }
    }

    const double budget = double(l_total) * p2;
    double inv_beta_sum = 0.0;
    for (int i = 0; i < ga.r_star; ++i) inv_beta_sum += 1.0 / beta[ga.perm[i]];
    for (int i = 0; i < ga.r_star; ++i)
        ga.powers[ga.perm[i]] = budget / (beta[ga.perm[i]] * inv_beta_sum);
    return ga;
}

Eigen::VectorXd SecondaryAllocation::sir(double p2, int n_plus_l) const {
    const int r = int(powers.size());
    Eigen::VectorXd out = Eigen::VectorXd::Zero(r);
    const double denom = beta.size() == r ? beta.dot(powers) : 0.0;
    if (denom <= 0.0) return out;
    for (int i = 0; i < r; ++i)
        out[i] = double(n_plus_l) * p2 * c[i] * beta[i] * powers[i] / denom;
    return out;
}

Eigen::VectorXd SecondaryAllocation::high_sir_constants(double p2, int n_plus_l) const {
    Eigen::VectorXd out(c.size());
    for (Eigen::Index i = 0; i < c.size(); ++i) out[i] = double(n_plus_l) * p2 * c[i] * beta[i];
    return out;
}

SecondaryAllocation secondary_covariance(const Eigen::MatrixXcd &g,
                                         const VandermondePrecoder &precoder, double p2, int n,
                                         int l) {
    if (!(p2 > 0.0)) throw std::invalid_argument("secondary_covariance: p2 must be > 0");
    if (int(g.rows()) != n || int(g.cols()) != l)
        throw std::invalid_argument("secondary_covariance: G must be N x L");
    if (int(precoder.matrix.cols()) != l)
        throw std::invalid_argument("secondary_covariance: precoder has wrong column count");

    SecondaryAllocation alloc;
    alloc.covariance = Eigen::MatrixXcd::Zero(l, l);

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(g, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd &sv = svd.singularValues();
    if (sv.size() == 0 || !(sv[0] > 1e-14 * std::max(1.0, g.norm()))) {
        alloc.empty = true;
        return alloc;
    }

    // Retain only well-conditioned modes; beta and c are computed for the
    // retained columns of P_g only.
    int r = 0;
    while (r < int(sv.size()) && sv[r] > 1e-12 * sv[0]) ++r;

    alloc.svd_left = svd.matrixU().leftCols(r);
    alloc.svd_right = svd.matrixV().leftCols(r);
    alloc.singular_sq = sv.head(r).array().square();

    const Eigen::MatrixXcd vp = precoder.unit_columns() * alloc.svd_right; // (N+L) x r
    alloc.beta.resize(r);
    alloc.c.resize(r);
    for (int i = 0; i < r; ++i) {
        alloc.beta[i] = vp.col(i).squaredNorm();
        alloc.c[i] = alloc.singular_sq[i] / alloc.beta[i];
    }

    GreedyAllocation ga =
        greedy_equal_beta_allocation(alloc.beta, alloc.c, l, p2, n, n + l);
    alloc.perm = std::move(ga.perm);
    alloc.r_star = ga.r_star;
    alloc.powers = std::move(ga.powers);
    alloc.prefix_objective = std::move(ga.prefix_objective);

    alloc.covariance =
        alloc.svd_right * alloc.powers.asDiagonal() * alloc.svd_right.adjoint();
    const double trace_vsv = alloc.beta.dot(alloc.powers); // tr(V S2 V^H)
    alloc.alpha = trace_vsv > 0.0 ? std::sqrt(double(n + l) * p2 / trace_vsv) : 0.0;
    return alloc;
}

SecondaryAllocation equal_power_covariance(int l, double p2) {
    if (l < 1) throw std::invalid_argument("equal_power_covariance: l must be >= 1");
    if (!(p2 >= 0.0)) throw std::invalid_argument("equal_power_covariance: p2 must be >= 0");
    SecondaryAllocation alloc;
    alloc.covariance = p2 * Eigen::MatrixXcd::Identity(l, l);
    alloc.powers = Eigen::VectorXd::Constant(l, p2);
    alloc.r_star = l;
    alloc.perm.resize(l);
    std::iota(alloc.perm.begin(), alloc.perm.end(), 0);
    return alloc;
}

} // namespace vfdm
