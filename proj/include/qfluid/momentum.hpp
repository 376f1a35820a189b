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
 * Free-particle momentum evolution exp(-i k^2 t / 2) on one axis register:
 * the exact diagonal, its {I, Z, ZZ} expansion, entangler truncation, and the
 * QFT-sandwiched per-axis and two-axis evolution circuits.
 *
 * Wavenumbers use two's-complement order: basis integer m on n qubits maps to
 * m for m < 2^(n-1) and to m - 2^n otherwise.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qfluid/circuit.hpp"
#include "qfluid/fourier.hpp"

namespace qfluid {

/// Evolution time, optionally tagged with the exponent p of t = pi * 2^-p.
struct EvolutionTime {
    double seconds{0.0};
    std::optional<int> exponent_p;

    static EvolutionTime from_exponent(int p);
    static EvolutionTime raw(double t) { return {t, std::nullopt}; }
};

std::int64_t wavenumber(std::size_t m, std::size_t n_axis);

/// phi(m) = -k(m)^2 t / 2, for Statevector::apply_diagonal_phases.
std::function<double(std::size_t)> exact_momentum_phases(std::size_t n_axis, double t);

struct PairCoefficient {
    QubitIndex i;
    QubitIndex j;
    double value;
};

/**
 * @brief k^2/2 = c0 + sum_i c_i z_i + sum_{i<j} c_ij z_i z_j with
 * z_i(m) = +1 when bit i of m is 0 and -1 otherwise.
 */
struct PauliDecomposition {
    std::size_t num_qubits{0};
    double c0{0.0};
    std::vector<double> c_single;
    /// Lexicographic in (i, j), i < j.
    std::vector<PairCoefficient> c_pair;

    [[nodiscard]] double pair(QubitIndex i, QubitIndex j) const;
    /// c0 + sum c_i z_i(m) + sum c_ij z_i(m) z_j(m).
    [[nodiscard]] double evaluate(std::size_t m) const;
};

/// Coefficients by Walsh-Hadamard projection of the exact diagonal for
/// n_axis <= 20 (throws NumericError if a higher-order term survives), and
/// by the closed two's-complement form above that.
PauliDecomposition decompose_k_squared(std::size_t n_axis);

/// Closed form from k = -1/2 - sum_i (w_i/2) z_i with w_i = 2^i below the
/// sign bit and w_{n-1} = -2^(n-1).
PauliDecomposition k_squared_closed_form(std::size_t n_axis);

/// theta minus its nearest multiple of 2 pi, in (-pi, pi]. Throws
/// NumericError on non-finite input.
double reduce_phase(double theta);

struct TruncationPolicy {
    /// Entanglers with |reduced angle| below this are dropped.
    double epsilon_th{0.0};
    /// Drop entanglers whose reduced angle is zero (to `periodic_tolerance`).
    bool periodic_removal{false};
    double periodic_tolerance{1e-12};

    static TruncationPolicy no_op() { return {}; }
    /// Throws ConfigError unless 0 <= epsilon_th < pi and tolerance >= 0.
    void validate() const;
};

enum class PairClass { Retained, RemovedPeriodic, RemovedSubthreshold };

std::string_view pair_class_name(PairClass c) noexcept;

struct PairPhase {
    QubitIndex i;
    QubitIndex j;
    /// Rz-convention angle 2 c_ij t.
    double theta;
    double theta_reduced;
    PairClass cls;
};

struct TruncationReport {
    std::vector<PairPhase> retained;
    std::vector<PairPhase> removed_periodic;
    std::vector<PairPhase> removed_subthreshold;

    [[nodiscard]] std::size_t total() const noexcept {
        return retained.size() + removed_periodic.size() + removed_subthreshold.size();
    }
    /// Sum of |theta_reduced| over sub-threshold removals.
    [[nodiscard]] double subthreshold_phase_sum() const noexcept;
};

/// Classify every ZZ term of `decomp` for evolution time `t` under `policy`.
TruncationReport apply_truncation(const PauliDecomposition &decomp, double t,
                                  const TruncationPolicy &policy);

/// {"retained": [...], "removed_periodic": [...], "removed_subthreshold": [...]}
/// with entries {i, j, theta, theta_reduced, class}.
nlohmann::json to_json(const TruncationReport &report);

/**
 * @brief Index band lo <= i + j < hi of surviving entanglers under the
 * idealized pair weight 2^(i+j); delta = hi - lo.
 *
 * lo = log2(eps/pi) + p + 2, hi = p + 3. eps = 0 yields lo = -inf.
 */
struct RetentionWindow {
    double lo;
    double hi;
    double delta;
};

RetentionWindow retention_window(int p, double epsilon_th);

/// Pairs 0 <= i < j < n inside the retention window.
std::size_t window_retained_pair_count(std::size_t n, int p, double epsilon_th);

/// Rz for every single-Z term then ZZ entanglers for retained pairs, on
/// logical qubits 0..n_axis-1. The identity term is dropped.
Circuit build_momentum_circuit(std::size_t n_axis, double t, const TruncationPolicy &policy);

/// Approximate QFT, momentum circuit, inverse approximate QFT. Acts in the
/// coordinate basis (identity layouts).
Circuit build_axis_evolution(std::size_t n_axis, double t, const AqftConfig &cfg,
                             const TruncationPolicy &policy);

/// x evolution on qubits [0, nx) followed by y evolution on [nx, nx+ny).
Circuit build_full_step(std::size_t nx, std::size_t ny, double t, const AqftConfig &cfg,
                        const TruncationPolicy &policy);

} // namespace qfluid
