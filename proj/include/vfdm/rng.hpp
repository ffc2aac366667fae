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

#ifndef VFDM_RNG_HPP
#define VFDM_RNG_HPP

#include <complex>
#include <cstdint>

namespace vfdm {

// splitmix64 finalizer; bijective on 64-bit words.
uint64_t mix64(uint64_t x);

// Deterministic seed for a (stream, index) pair derived from a master seed.
// Monte Carlo trials use (grid index, trial index) so any trial can be
// replayed in isolation and results do not depend on execution order.
uint64_t derive_seed(uint64_t master, uint64_t stream, uint64_t index);

// xoshiro256++ with our own Box-Muller transform. Keeping the Gaussian
// path in-house (rather than std::normal_distribution) makes the byte
// stream independent of the standard library implementation. One complex
// Gaussian consumes exactly two uniforms, so draw alignment is preserved
// when a link variance changes (including variance zero).
class Rng {
  public:
    explicit Rng(uint64_t seed);

    uint64_t next_u64();

    // Uniform double in [0, 1).
    double uniform();

    // Standard normal pair via Box-Muller; two uniforms per call.
    std::pair<double, double> gaussian_pair();

    // Circularly-symmetric complex Gaussian CN(0, variance).
    std::complex<double> complex_gaussian(double variance);

  private:
    uint64_t s_[4];
};

} // namespace vfdm

#endif
