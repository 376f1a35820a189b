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
 * Dense double-precision statevector and its gate kernels.
 *
 * Basis convention is little-endian: qubit `i` carries weight `2^i` in the
 * basis-state integer. Single-qubit Z has eigenvalue +1 on bit value 0.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qfluid {

using Complex = std::complex<double>;
using QubitIndex = std::size_t;

/// Largest qubit count a statevector may be allocated with by default
/// (2^28 complex doubles = 4 GiB).
inline constexpr std::size_t kDefaultMaxQubits = 28;

/// Current allocation guard; adjustable for machines with more or less
/// memory. Not synchronized: set it before starting worker threads.
std::size_t max_qubits() noexcept;
void set_max_qubits(std::size_t n) noexcept;

class Statevector;

/// Result of normalizing a raw amplitude array: the unit state plus the norm
/// that was divided out.
struct NormalizedState;

class Statevector {
  public:
    /// |0...0> on `num_qubits` qubits. Throws ResourceLimitError outside
    /// [1, max_qubits()].
    static Statevector zero_state(std::size_t num_qubits);

    /// Normalize `raw` (length a power of two, >= 2). Throws ShapeError on a
    /// bad length and DegenerateStateError on zero norm.
    static NormalizedState from_amplitudes(std::span<const Complex> raw);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] const Complex &operator[](std::size_t i) const { return amps_[i]; }
    [[nodiscard]] double norm() const noexcept;

    void apply_hadamard(QubitIndex target);
    /// exp(-i theta Z / 2).
    void apply_rz(QubitIndex target, double theta);
    /// Multiply amplitudes with both bits set by e^{i theta}.
    void apply_controlled_phase(QubitIndex control, QubitIndex target, double theta);
    /// exp(-i phi Z_i Z_j): bits agree -> e^{-i phi}, differ -> e^{+i phi}.
    void apply_zz_entangler(QubitIndex i, QubitIndex j, double phi);
    void apply_swap(QubitIndex i, QubitIndex j);
    void apply_pauli_x(QubitIndex target);
    void apply_pauli_y(QubitIndex target);
    void apply_pauli_z(QubitIndex target);
    /// Amplitude m is multiplied by e^{i phase(m)}.
    void apply_diagonal_phases(const std::function<double(std::size_t)> &phase);

    /// Gather amplitudes so that bit `b` of the returned basis index is read
    /// from physical qubit `layout[b]` of this state. `layout` must be a
    /// permutation of [0, num_qubits).
    [[nodiscard]] Statevector permuted(std::span<const QubitIndex> layout) const;

    friend bool operator==(const Statevector &, const Statevector &) = default;

  private:
    Statevector(std::size_t num_qubits, std::vector<Complex> amps)
        : num_qubits_(num_qubits), amps_(std::move(amps)) {}

    void check_qubit(QubitIndex q) const;
    void check_pair(QubitIndex a, QubitIndex b) const;

    std::size_t num_qubits_;
    std::vector<Complex> amps_;
};

struct NormalizedState {
    Statevector state;
    double norm;
};

/// <a|b>, conjugate-linear in `a`. Throws ShapeError on size mismatch.
Complex inner_product(const Statevector &a, const Statevector &b);

/// |<a|b>|^2.
double fidelity(const Statevector &a, const Statevector &b);

/// max_m |a_m - b_m|.
double max_amplitude_distance(const Statevector &a, const Statevector &b);

/// max_m |e^{i phi} a_m - b_m| with phi chosen to make <b|e^{i phi} a> real
/// and non-negative. The Rz/ZZ circuits drop a constant phase, so this is
/// the pointwise comparison against phase-exact oracles.
double max_amplitude_distance_up_to_phase(const Statevector &a, const Statevector &b);

} // namespace qfluid
