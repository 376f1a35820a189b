// Copyright 2026 The qfluid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Quantum Fourier transform builders: exact, inverse and approximate
 * (distance-truncated) with optional single-qubit phase compensation.
 *
 * The forward transform maps |j> to 2^{-n/2} sum_m e^{2 pi i j m / 2^n} |m>.
 * No terminal Swaps are emitted; the output bit reversal is recorded in the
 * circuit's output layout.
 */
#pragma once

#include <cstddef>
#include <limits>

#include "qfluid/circuit.hpp"

namespace qfluid {

struct AqftConfig {
    /// Largest retained control/target index distance. The default keeps
    /// every gate.
    std::size_t threshold_b{std::numeric_limits<std::size_t>::max()};
    /// Replace the removed controlled phases on each target by one Rz
    /// carrying their expected phase.
    bool compensate{false};
    /// Probability that a control qubit is |1>, used for the expected phase.
    double assumed_control_probability{0.5};

    static AqftConfig exact() { return {}; }
    /// Throws ConfigError when the probability is outside [0, 1].
    void validate() const;
};

/// Phase of the controlled rotation between qubits `distance` apart in an
/// exact QFT: 2 pi / 2^(distance + 1).
double qft_phase_for_distance(std::size_t distance);

Circuit build_qft(std::size_t n, bool inverse);

Circuit build_aqft(std::size_t n, bool inverse, const AqftConfig &cfg);

/// Number of controlled phases kept: sum_{k=1}^{min(b, n-1)} (n - k).
std::size_t aqft_two_qubit_count(std::size_t n, std::size_t b);

/// Analytic phase-error bound of one approximate transform:
/// sum_{k=b+1}^{n-1} (n-k) * (2 pi / 2^k) * w, w = 1/2 when compensated.
double aqft_error_bound(std::size_t n, std::size_t b, bool compensated);

} // namespace qfluid
