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
// Vandermonde null-space precoding. The cross-channel taps define the
// polynomial S(z) = sum_i h_i z^{L-i}; its L roots generate power columns
// [1, a, a^2, ...] that the banded convolution matrix annihilates, so the
// precoded signal vanishes at the other receiver.

#ifndef VFDM_PRECODER_HPP
#define VFDM_PRECODER_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace vfdm {

enum class PrecoderMode {
    exact,        // roots of the cross-channel polynomial; exact null space
    unit_modulus, // roots projected onto the unit circle (lossy)
    fft_columns,  // L columns of the (N+L)-point unitary DFT (lossy)
};

const char *to_string(PrecoderMode mode);
// Accepts "exact", "unit-modulus", "fft-columns" (and underscore variants).
PrecoderMode parse_precoder_mode(const std::string &text);

struct VandermondePrecoder {
    Eigen::VectorXcd roots;      // a_1..a_L; twiddle factors for fft_columns
    Eigen::MatrixXcd matrix;     // (N+L) x L, unit Euclidean norm columns
    PrecoderMode mode = PrecoderMode::exact;
    Eigen::VectorXd col_scales;  // factor applied to each raw power column
    std::vector<int> fft_col_indices; // selected DFT columns (fft_columns only)

    // Column-normalized copy of `matrix`. The whole rate chain is defined
    // on this representative, which makes it invariant to any positive
    // per-column rescaling of the stored matrix.
    Eigen::MatrixXcd unit_columns() const;
};

// Roots of S(z) = sum_{i=0}^{L} h_i z^{L-i}, computed as the eigenvalues
// of the companion matrix of S(z)/h_0 and returned sorted by (re, im).
// Throws DegenerateChannelError when |h_0| <= 1e-12 * ||h||.
Eigen::VectorXcd channel_poly_roots(const Eigen::VectorXcd &h21);

// Builds the (N+L) x L matrix of root powers with unit-norm columns.
// unit_modulus replaces each root by a/|a| first. fft_columns treats the
// given roots as DFT twiddle factors (callers normally go through
// build_fft_columns, which also selects them). Throws ConditioningError
// when a power column cannot be represented in double precision.
VandermondePrecoder build_vandermonde(const Eigen::VectorXcd &roots, int n, int l,
                                      PrecoderMode mode);

// fft_columns variant: picks the L columns of the (N+L)-point unitary DFT
// matrix with the largest per-column gain through the secondary link,
// ||F * T(h22) * v||. Chosen indices are recorded in fft_col_indices.
VandermondePrecoder build_fft_columns(const Eigen::VectorXcd &h22, int n, int l);

// Dispatch on mode: exact/unit_modulus precoders come from the roots of
// h21, fft_columns from the gain ranking through h22.
VandermondePrecoder make_precoder(const Eigen::VectorXcd &h21, const Eigen::VectorXcd &h22,
                                  int n, int l, PrecoderMode mode);

// Normalized residual of the null condition, ||T(h21) V||_F / ||T(h21)||_F.
// Zero iff the precoded signal is invisible at the primary receiver.
double interference_leakage(const Eigen::VectorXcd &h21, const VandermondePrecoder &precoder);

// Number of singular values >= rel_tol * sigma_max. rel_tol must lie in (0, 1).
int numerical_rank(const Eigen::MatrixXcd &m, double rel_tol);

} // namespace vfdm

#endif
