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

#ifndef VFDM_ERRORS_HPP
#define VFDM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vfdm {

// Leading tap of the cross channel vanishes, so the channel polynomial
// drops degree and no root-based precoder exists. Callers redraw the
// channel and count the event.
class DegenerateChannelError : public std::runtime_error {
  public:
    explicit DegenerateChannelError(const std::string &what) : std::runtime_error(what) {}
};

// A Vandermonde root is so large in modulus that its power column cannot
// be represented in double precision, even before normalization.
class ConditioningError : public std::runtime_error {
  public:
    ConditioningError(const std::string &what, double root_magnitude)
        : std::runtime_error(what), root_magnitude_(root_magnitude) {}

    double root_magnitude() const { return root_magnitude_; }

  private:
    double root_magnitude_ = 0.0;
};

// Malformed experiment configuration (bad key, bad value, failed invariant).
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace vfdm

#endif
