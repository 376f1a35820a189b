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
 * Monte Carlo gate-noise trajectories and the compounding-fidelity hardware
 * error model.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qfluid/circuit.hpp"
#include "qfluid/fluid.hpp"

namespace qfluid {

struct NoiseModel {
    double fidelity_1q{0.9997};
    double fidelity_2q{0.9967};
    std::uint64_t rng_seed{0};

    /// Throws ConfigError unless both fidelities lie in (0, 1].
    void validate() const;
};

struct NoisyEnsemble {
    std::vector<Statevector> states;
    /// Pauli insertions per trajectory.
    std::vector<std::size_t> pauli_events;

    [[nodiscard]] std::size_t total_events() const noexcept;
};

/// Generator for trajectory `index`; depends only on (seed, index).
std::mt19937_64 trajectory_rng(std::uint64_t seed, std::size_t index);

/**
 * @brief Runs `trajectories` stochastic copies of `circuit` on `initial`.
 *
 * After every gate, with probability 1 - fidelity for the gate's arity, a
 * uniformly drawn X, Y or Z hits one uniformly drawn qubit of that gate.
 * Trajectories are spread over `threads` workers (0 = hardware
 * concurrency); the result does not depend on the worker count.
 */
NoisyEnsemble noisy_execute(const Circuit &circuit, const Statevector &initial,
                            const NoiseModel &model, std::size_t trajectories,
                            std::size_t threads = 0);

/// Pointwise average of density and momentum over the ensemble, each state
/// decoded with `stored_norm`. States must be in the logical layout.
FlowObservables averaged_observables(const NoisyEnsemble &ensemble, const GridSpec &grid,
                                     double stored_norm);

/// 1 - f^N.
double cumulative_hardware_error(std::size_t two_qubit_gate_count, double fidelity_2q);

} // namespace qfluid
