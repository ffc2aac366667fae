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

#include "vfdm/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "vfdm/rng.hpp"

namespace vfdm {

void SystemParams::validate() const {
    if (n_carriers < 1) throw std::invalid_argument("n_carriers must be >= 1");
    if (cp_len < 1) throw std::invalid_argument("cp_len must be >= 1");
    if (cp_len > n_carriers) throw std::invalid_argument("cp_len must be <= n_carriers");
    for (const auto &row : sigma)
        for (double s : row)
            if (!(s >= 0.0)) throw std::invalid_argument("sigma entries must be >= 0");
    if (!(p1 >= 0.0)) throw std::invalid_argument("p1 must be >= 0");
    if (!(p2 >= 0.0)) throw std::invalid_argument("p2 must be >= 0");
}

ChannelSet draw_channel_set(const SystemParams &params, uint64_t seed) {
    params.validate();
    const int taps = params.cp_len + 1;
    Rng rng(seed);
    ChannelSet cs;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double var = params.sigma[i][j] / double(taps);
            Eigen::VectorXcd h(taps);
            for (int t = 0; t < taps; ++t) h[t] = rng.complex_gaussian(var);
            cs.h[i][j] = std::move(h);
        }
    }
    return cs;
}

Eigen::MatrixXcd toeplitz_conv_matrix(const Eigen::VectorXcd &h, int n) {
    if (h.size() < 1) throw std::invalid_argument("toeplitz_conv_matrix: empty taps");
    if (n < 1) throw std::invalid_argument("toeplitz_conv_matrix: n must be >= 1");
    const int l = int(h.size()) - 1;
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n + l);
    // Row k holds [h_L, ..., h_0] starting at column k.
    for (int k = 0; k < n; ++k)
        for (int j = 0; j <= l; ++j) t(k, k + j) = h[l - j];
    return t;
}

// Angles are reduced mod n before the trig call so the response and the
// DFT matrix stay accurate for large k*l products.
static inline std::complex<double> unit_twiddle(long long kl, int n) {
    const double angle = -2.0 * M_PI * double(kl % n) / double(n);
    return {std::cos(angle), std::sin(angle)};
}

Eigen::MatrixXcd unitary_dft(int n) {
    if (n < 1) throw std::invalid_argument("unitary_dft: n must be >= 1");
    const double scale = 1.0 / std::sqrt(double(n));
    Eigen::MatrixXcd f(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) f(k, l) = scale * unit_twiddle((long long)k * l, n);
    return f;
}

Eigen::MatrixXd cp_insertion_matrix(int n, int l) {
    if (n < 1 || l < 1) throw std::invalid_argument("cp_insertion_matrix: n, l must be >= 1");
    if (l > n) throw std::invalid_argument("cp_insertion_matrix: l must be <= n");
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n + l, n);
    for (int r = 0; r < l; ++r) a(r, n - l + r) = 1.0; // E: last L entries first
    for (int r = 0; r < n; ++r) a(l + r, r) = 1.0;     // then the block itself
    return a;
}

DiagFreqChannel frequency_response(const Eigen::VectorXcd &h, int n) {
    if (h.size() < 1) throw std::invalid_argument("frequency_response: empty taps");
    if (int(h.size()) > n)
        throw std::invalid_argument("frequency_response: more taps than carriers");
    Eigen::VectorXcd gains = Eigen::VectorXcd::Zero(n);
    for (int k = 0; k < n; ++k) {
        std::complex<double> acc = 0.0;
        for (int t = 0; t < int(h.size()); ++t) acc += h[t] * unit_twiddle((long long)k * t, n);
        gains[k] = acc;
    }
    return DiagFreqChannel{std::move(gains)};
}

} // namespace vfdm
