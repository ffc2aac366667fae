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

#include "vfdm/precoder.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "vfdm/channel.hpp"
#include "vfdm/errors.hpp"

namespace vfdm {

const char *to_string(PrecoderMode mode) {
    switch (mode) {
    case PrecoderMode::exact: return "exact";
    case PrecoderMode::unit_modulus: return "unit-modulus";
    case PrecoderMode::fft_columns: return "fft-columns";
    }
    return "?";
}

PrecoderMode parse_precoder_mode(const std::string &text) {
    if (text == "exact") return PrecoderMode::exact;
    if (text == "unit-modulus" || text == "unit_modulus") return PrecoderMode::unit_modulus;
    if (text == "fft-columns" || text == "fft_columns") return PrecoderMode::fft_columns;
    throw std::invalid_argument("unknown precoder mode: " + text);
}

Eigen::MatrixXcd VandermondePrecoder::unit_columns() const {
    Eigen::MatrixXcd m = matrix;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        const double norm = m.col(j).stableNorm();
        if (norm > 0.0) m.col(j) /= norm;
    }
    return m;
}

Eigen::VectorXcd channel_poly_roots(const Eigen::VectorXcd &h21) {
    const int l = int(h21.size()) - 1;
    if (l < 1) throw std::invalid_argument("channel_poly_roots: need at least two taps");
    const double norm = h21.norm();
    if (!(std::abs(h21[0]) > 1e-12 * norm) || norm == 0.0)
        throw DegenerateChannelError("channel polynomial has a degenerate leading coefficient");

    // Companion matrix of the monic polynomial S(z)/h_0; its eigenvalues
    // are the roots. No iterative polish stage: accuracy is covered by
    // the Vieta and residual checks in the test suite.
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(l, l);
    for (int i = 0; i + 1 < l; ++i) comp(i + 1, i) = 1.0;
    for (int i = 0; i < l; ++i) comp(i, l - 1) = -h21[l - i] / h21[0];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw ConditioningError("companion eigenvalue iteration failed", 0.0);
    Eigen::VectorXcd roots = solver.eigenvalues();
    std::sort(roots.data(), roots.data() + roots.size(),
              [](const std::complex<double> &a, const std::complex<double> &b) {
                  if (a.real() != b.real()) return a.real() < b.real();
                  return a.imag() < b.imag();
              });
    return roots;
}

VandermondePrecoder build_vandermonde(const Eigen::VectorXcd &roots, int n, int l,
                                      PrecoderMode mode) {
    if (int(roots.size()) != l)
        throw std::invalid_argument("build_vandermonde: roots.size() != l");
    if (n < 1 || l < 1) throw std::invalid_argument("build_vandermonde: n, l must be >= 1");

    Eigen::VectorXcd used = roots;
    if (mode == PrecoderMode::unit_modulus) {
        for (int j = 0; j < l; ++j) {
            const double mag = std::abs(used[j]);
            if (mag < 1e-300)
                throw ConditioningError("unit-modulus projection of a zero root", mag);
            used[j] /= mag;
        }
    }

    const int rows = n + l;
    VandermondePrecoder prec;
    prec.roots = used;
    prec.mode = mode;
    prec.matrix.resize(rows, l);
    prec.col_scales.resize(l);

    for (int j = 0; j < l; ++j) {
        const double mag = std::abs(used[j]);
        // Largest entry is |a|^(rows-1); past exp(700) the raw column no
        // longer fits in a double and normalization cannot rescue it.
        if (mag > 0.0 && double(rows - 1) * std::log(mag) > 700.0) {
            std::ostringstream msg;
            msg << "vandermonde column " << j << " overflows for |root| = " << mag;
            throw ConditioningError(msg.str(), mag);
        }
        Eigen::VectorXcd col(rows);
        std::complex<double> p = 1.0;
        for (int k = 0; k < rows; ++k) {
            col[k] = p;
            p *= used[j];
        }
        const double norm = col.stableNorm();
        if (!std::isfinite(norm) || norm == 0.0)
            throw ConditioningError("vandermonde column is not normalizable", mag);
        prec.col_scales[j] = 1.0 / norm;
        prec.matrix.col(j) = col / norm;
    }
    return prec;
}

VandermondePrecoder build_fft_columns(const Eigen::VectorXcd &h22, int n, int l) {
    if (n < 1 || l < 1) throw std::invalid_argument("build_fft_columns: n, l must be >= 1");
    const int m = n + l;
    if (int(h22.size()) != l + 1)
        throw std::invalid_argument("build_fft_columns: h22 must have l+1 taps");

    // Rank all M candidate DFT columns by their gain through the
    // secondary link and keep the strongest L (ties: smaller index).
    const Eigen::MatrixXcd w = unitary_dft(n) * toeplitz_conv_matrix(h22, n); // N x M
    const Eigen::MatrixXcd f_big = unitary_dft(m);
    const Eigen::MatrixXcd gains_mat = w * f_big; // column m = W * f_m
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> gain(m);
    for (int j = 0; j < m; ++j) gain[j] = gains_mat.col(j).norm();
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return gain[a] > gain[b]; });
    std::vector<int> chosen(order.begin(), order.begin() + l);
    std::sort(chosen.begin(), chosen.end());

    Eigen::VectorXcd twiddles(l);
    for (int j = 0; j < l; ++j) {
        const double angle = -2.0 * M_PI * double(chosen[j]) / double(m);
        twiddles[j] = std::complex<double>(std::cos(angle), std::sin(angle));
    }
    VandermondePrecoder prec = build_vandermonde(twiddles, n, l, PrecoderMode::fft_columns);
    prec.fft_col_indices = std::move(chosen);
    return prec;
}

VandermondePrecoder make_precoder(const Eigen::VectorXcd &h21, const Eigen::VectorXcd &h22,
                                  int n, int l, PrecoderMode mode) {
    if (mode == PrecoderMode::fft_columns) return build_fft_columns(h22, n, l);
    return build_vandermonde(channel_poly_roots(h21), n, l, mode);
}

double interference_leakage(const Eigen::VectorXcd &h21, const VandermondePrecoder &precoder) {
    const int l = int(h21.size()) - 1;
    const int n = int(precoder.matrix.rows()) - l;
    if (n < 1) throw std::invalid_argument("interference_leakage: inconsistent dimensions");
    const Eigen::MatrixXcd t = toeplitz_conv_matrix(h21, n);
    const double denom = t.norm();
    if (denom == 0.0) return 0.0;
    return (t * precoder.matrix).norm() / denom;
}

int numerical_rank(const Eigen::MatrixXcd &m, double rel_tol) {
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw std::invalid_argument("numerical_rank: rel_tol must be in (0, 1)");
    if (!m.allFinite()) throw std::invalid_argument("numerical_rank: matrix must be finite");
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto &sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] <= 0.0) return 0;
    const double cutoff = rel_tol * sv[0];
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] >= cutoff) ++rank;
    return rank;
}

} // namespace vfdm
