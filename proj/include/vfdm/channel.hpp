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
// Random frequency-selective channels and the deterministic linear
// operators of the block transmission model: Toeplitz convolution,
// unitary DFT and cyclic-prefix insertion. All values are immutable
// after construction and safe to share across threads.

#ifndef VFDM_CHANNEL_HPP
#define VFDM_CHANNEL_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>

namespace vfdm {

// Dimensions, per-link average power gains and per-symbol power budgets
// (linear scale) of the two-user system. Link gain sigma[i][j] belongs to
// the channel from transmitter i+1 to receiver j+1.
struct SystemParams {
    int n_carriers = 64; // N
    int cp_len = 16;     // L, 1 <= L <= N
    std::array<std::array<double, 2>, 2> sigma{{{1.0, 1.0}, {1.0, 1.0}}};
    double p1 = 10.0;
    double p2 = 10.0;

    // Throws std::invalid_argument on a violated invariant.
    void validate() const;
};

// The four (L+1)-tap impulse responses. h[i][j] is the link from
// transmitter i+1 to receiver j+1; tap 0 is the current-symbol tap.
struct ChannelSet {
    std::array<std::array<Eigen::VectorXcd, 2>, 2> h;

    const Eigen::VectorXcd &h11() const { return h[0][0]; }
    const Eigen::VectorXcd &h12() const { return h[0][1]; }
    const Eigen::VectorXcd &h21() const { return h[1][0]; }
    const Eigen::VectorXcd &h22() const { return h[1][1]; }
};

// Diagonal of a frequency-domain channel matrix, one gain per carrier.
struct DiagFreqChannel {
    Eigen::VectorXcd gains;
};

// Draws the four links with i.i.d. CN(0, sigma_ij/(L+1)) taps,
// deterministically from (params, seed). Links are drawn in the fixed
// order h11, h12, h21, h22 and every tap consumes the same number of
// uniforms regardless of its variance, so realizations stay paired when
// only the link gains change.
ChannelSet draw_channel_set(const SystemParams &params, uint64_t seed);

// N x (N+L) banded convolution matrix: row k holds [h_L, ..., h_0]
// starting at column k. L is inferred from h.size() - 1.
Eigen::MatrixXcd toeplitz_conv_matrix(const Eigen::VectorXcd &h, int n);

// Unitary DFT, entry (k,l) = exp(-2*pi*j*k*l/n) / sqrt(n).
Eigen::MatrixXcd unitary_dft(int n);

// (N+L) x N cyclic prefix insertion: A = [E; I_N] where E selects the
// last L rows, so A*u prefixes u with its own last L entries.
Eigen::MatrixXd cp_insertion_matrix(int n, int l);

// N-point frequency response of the taps: gains[k] = sum_l h_l e^{-2pi j k l / N}.
// This is exactly the diagonal produced by F * T(h) * A * F^H.
DiagFreqChannel frequency_response(const Eigen::VectorXcd &h, int n);

} // namespace vfdm

#endif
