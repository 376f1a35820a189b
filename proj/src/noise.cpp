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
#include "qfluid/noise.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <thread>

#include "qfluid/error.hpp"

namespace qfluid {

void NoiseModel::validate() const {
    if (!(fidelity_1q > 0.0 && fidelity_1q <= 1.0)) {
        throw ConfigError("fidelity_1q", "must lie in (0, 1]");
    }
    if (!(fidelity_2q > 0.0 && fidelity_2q <= 1.0)) {
        throw ConfigError("fidelity_2q", "must lie in (0, 1]");
    }
}

std::size_t NoisyEnsemble::total_events() const noexcept {
    std::size_t s = 0;
    for (auto e : pauli_events) {
        s += e;
    }
    return s;
}

std::mt19937_64 trajectory_rng(std::uint64_t seed, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) >> 32)};
    return std::mt19937_64(seq);
}

namespace {

std::size_t run_trajectory(const Circuit &circuit, Statevector &state, const NoiseModel &model,
                           std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> which_pauli(0, 2);
    std::uniform_int_distribution<int> which_qubit(0, 1);
    const double p1 = 1.0 - model.fidelity_1q;
    const double p2 = 1.0 - model.fidelity_2q;
    std::size_t events = 0;
    for (const auto &op : circuit.ops()) {
        apply_gate(state, op);
        const bool two = op.is_two_qubit();
        if (unit(rng) >= (two ? p2 : p1)) {
            continue;
        }
        const QubitIndex q = (two && which_qubit(rng) == 1) ? op.q1 : op.q0;
        switch (which_pauli(rng)) {
        case 0:
            state.apply_pauli_x(q);
            break;
        case 1:
            state.apply_pauli_y(q);
            break;
        default:
            state.apply_pauli_z(q);
            break;
        }
        ++events;
    }
    return events;
}

} // namespace

NoisyEnsemble noisy_execute(const Circuit &circuit, const Statevector &initial,
                            const NoiseModel &model, std::size_t trajectories,
                            std::size_t threads) {
    model.validate();
    if (trajectories < 1) {
        throw ConfigError("trajectories", "must be at least 1");
    }
    if (circuit.num_qubits() != initial.num_qubits()) {
        throw ShapeError("circuit and state qubit counts differ");
    }
    std::vector<std::optional<Statevector>> slots(trajectories);
    std::vector<std::size_t> events(trajectories, 0);

    auto worker = [&](std::size_t first, std::size_t stride) {
        for (std::size_t t = first; t < trajectories; t += stride) {
            Statevector s = initial;
            auto rng = trajectory_rng(model.rng_seed, t);
            events[t] = run_trajectory(circuit, s, model, rng);
            slots[t].emplace(std::move(s));
        }
    };

    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, trajectories);
    if (threads == 1) {
        worker(0, 1);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t w = 0; w < threads; ++w) {
            pool.emplace_back(worker, w, threads);
        }
    }

    NoisyEnsemble out;
    out.states.reserve(trajectories);
    for (auto &s : slots) {
        out.states.push_back(std::move(*s));
    }
    out.pauli_events = std::move(events);
    return out;
}

FlowObservables averaged_observables(const NoisyEnsemble &ensemble, const GridSpec &grid,
                                     double stored_norm) {
    if (ensemble.states.empty()) {
        throw ShapeError("empty ensemble");
    }
    FlowObservables acc{std::vector<double>(grid.size(), 0.0),
                        std::vector<double>(grid.size(), 0.0),
                        std::vector<double>(grid.size(), 0.0)};
    // ordered accumulation keeps the sum independent of scheduling
    for (const auto &s : ensemble.states) {
        const auto obs = observables(decode(s, grid, stored_norm));
        for (std::size_t m = 0; m < grid.size(); ++m) {
            acc.rho[m] += obs.rho[m];
            acc.jx[m] += obs.jx[m];
            acc.jy[m] += obs.jy[m];
        }
    }
    const double inv = 1.0 / static_cast<double>(ensemble.states.size());
    for (std::size_t m = 0; m < grid.size(); ++m) {
        acc.rho[m] *= inv;
        acc.jx[m] *= inv;
        acc.jy[m] *= inv;
    }
    return acc;
}

double cumulative_hardware_error(std::size_t two_qubit_gate_count, double fidelity_2q) {
    // -expm1(N log f) keeps precision near zero error
    return -std::expm1(static_cast<double>(two_qubit_gate_count) * std::log(fidelity_2q));
}

} // namespace qfluid
