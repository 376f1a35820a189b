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
#include "qfluid/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "qfluid/error.hpp"

namespace qfluid {

namespace {

std::size_t g_max_qubits = kDefaultMaxQubits;

constexpr Complex kI{0.0, 1.0};

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

} // namespace

std::size_t max_qubits() noexcept { return g_max_qubits; }
void set_max_qubits(std::size_t n) noexcept { g_max_qubits = n; }

Statevector Statevector::zero_state(std::size_t num_qubits) {
    if (num_qubits < 1 || num_qubits > g_max_qubits) {
        throw ResourceLimitError("statevector of " + std::to_string(num_qubits) +
                                 " qubits outside [1, " + std::to_string(g_max_qubits) +
                                 "]");
    }
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    amps[0] = 1.0;
    return {num_qubits, std::move(amps)};
}

NormalizedState Statevector::from_amplitudes(std::span<const Complex> raw) {
    if (raw.size() < 2 || !is_power_of_two(raw.size())) {
        throw ShapeError("amplitude count " + std::to_string(raw.size()) +
                         " is not a power of two >= 2");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(raw.size()));
    if (n > g_max_qubits) {
        throw ResourceLimitError("statevector of " + std::to_string(n) +
                                 " qubits exceeds the memory guard");
    }
    double sq = 0.0;
    for (const auto &a : raw) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw NumericError("non-finite amplitude");
        }
        sq += std::norm(a);
    }
    const double nrm = std::sqrt(sq);
    if (nrm == 0.0) {
        throw DegenerateStateError("cannot normalize a zero-norm amplitude array");
    }
    std::vector<Complex> amps(raw.begin(), raw.end());
    for (auto &a : amps) {
        a /= nrm;
    }
    return {Statevector{n, std::move(amps)}, nrm};
}

double Statevector::norm() const noexcept {
    double sq = 0.0;
    for (const auto &a : amps_) {
        sq += std::norm(a);
    }
    return std::sqrt(sq);
}

void Statevector::check_qubit(QubitIndex q) const {
    if (q >= num_qubits_) {
        throw IndexError("qubit " + std::to_string(q) + " out of range for " +
                         std::to_string(num_qubits_) + "-qubit state");
    }
}

void Statevector::check_pair(QubitIndex a, QubitIndex b) const {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw IndexError("two-qubit gate on coincident qubit " + std::to_string(a));
    }
}

void Statevector::apply_hadamard(QubitIndex target) {
    check_qubit(target);
    const std::size_t mask = std::size_t{1} << target;
    const double s = std::numbers::sqrt2 / 2.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == 0) {
            const Complex a0 = amps_[i];
            const Complex a1 = amps_[i | mask];
            amps_[i] = s * (a0 + a1);
            amps_[i | mask] = s * (a0 - a1);
        }
    }
}

void Statevector::apply_rz(QubitIndex target, double theta) {
    check_qubit(target);
    const std::size_t mask = std::size_t{1} << target;
    const Complex p0 = std::exp(-kI * (theta / 2.0));
    const Complex p1 = std::exp(kI * (theta / 2.0));
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        amps_[i] *= (i & mask) ? p1 : p0;
    }
}

void Statevector::apply_controlled_phase(QubitIndex control, QubitIndex target,
                                         double theta) {
    check_pair(control, target);
    const std::size_t mask = (std::size_t{1} << control) | (std::size_t{1} << target);
    const Complex ph = std::exp(kI * theta);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == mask) {
            amps_[i] *= ph;
        }
    }
}

void Statevector::apply_zz_entangler(QubitIndex i, QubitIndex j, double phi) {
    check_pair(i, j);
    const Complex same = std::exp(-kI * phi);
    const Complex diff = std::exp(kI * phi);
    for (std::size_t m = 0; m < amps_.size(); ++m) {
        const bool bi = (m >> i) & 1U;
        const bool bj = (m >> j) & 1U;
        amps_[m] *= (bi == bj) ? same : diff;
    }
}

void Statevector::apply_swap(QubitIndex i, QubitIndex j) {
    check_pair(i, j);
    const std::size_t mi = std::size_t{1} << i;
    const std::size_t mj = std::size_t{1} << j;
    for (std::size_t m = 0; m < amps_.size(); ++m) {
        // visit each (bit i = 1, bit j = 0) index once and swap with its mirror
        if ((m & mi) && !(m & mj)) {
            std::swap(amps_[m], amps_[(m & ~mi) | mj]);
        }
    }
}

void Statevector::apply_pauli_x(QubitIndex target) {
    check_qubit(target);
    const std::size_t mask = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == 0) {
            std::swap(amps_[i], amps_[i | mask]);
        }
    }
}

void Statevector::apply_pauli_y(QubitIndex target) {
    check_qubit(target);
    const std::size_t mask = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == 0) {
            const Complex a0 = amps_[i];
            const Complex a1 = amps_[i | mask];
            amps_[i] = -kI * a1;
            amps_[i | mask] = kI * a0;
        }
    }
}

void Statevector::apply_pauli_z(QubitIndex target) {
    check_qubit(target);
    const std::size_t mask = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & mask) {
            amps_[i] = -amps_[i];
        }
    }
}

void Statevector::apply_diagonal_phases(const std::function<double(std::size_t)> &phase) {
    for (std::size_t m = 0; m < amps_.size(); ++m) {
        amps_[m] *= std::exp(kI * phase(m));
    }
}

Statevector Statevector::permuted(std::span<const QubitIndex> layout) const {
    if (layout.size() != num_qubits_) {
        throw ShapeError("layout has " + std::to_string(layout.size()) +
                         " entries for a " + std::to_string(num_qubits_) + "-qubit state");
    }
    std::vector<bool> seen(num_qubits_, false);
    for (auto q : layout) {
        check_qubit(q);
        if (seen[q]) {
            throw IndexError("layout is not a permutation");
        }
        seen[q] = true;
    }
    std::vector<Complex> out(amps_.size());
    for (std::size_t logical = 0; logical < amps_.size(); ++logical) {
        std::size_t physical = 0;
        for (std::size_t b = 0; b < num_qubits_; ++b) {
            if ((logical >> b) & 1U) {
                physical |= std::size_t{1} << layout[b];
            }
        }
        out[logical] = amps_[physical];
    }
    return {num_qubits_, std::move(out)};
}

Complex inner_product(const Statevector &a, const Statevector &b) {
    if (a.size() != b.size()) {
        throw ShapeError("inner product of states with " + std::to_string(a.num_qubits()) +
                         " and " + std::to_string(b.num_qubits()) + " qubits");
    }
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double fidelity(const Statevector &a, const Statevector &b) {
    return std::min(1.0, std::norm(inner_product(a, b)));
}

double max_amplitude_distance(const Statevector &a, const Statevector &b) {
    if (a.size() != b.size()) {
        throw ShapeError("amplitude distance of states with different sizes");
    }
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

double max_amplitude_distance_up_to_phase(const Statevector &a, const Statevector &b) {
    const Complex overlap = inner_product(b, a);
    const double mag = std::abs(overlap);
    const Complex rot = mag > 0.0 ? std::conj(overlap) / mag : Complex{1.0, 0.0};
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(rot * a[i] - b[i]));
    }
    return d;
}

} // namespace qfluid
