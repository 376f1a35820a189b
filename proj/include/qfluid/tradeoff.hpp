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
 * Scaling of removed gates and truncation-error bounds with qubit count, and
 * the crossing of algorithmic error with avoided hardware error.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qfluid/fluid.hpp"

namespace qfluid {

/// Total qubits n split as nx = ceil(n/2), ny = floor(n/2).
struct AxisSplit {
    std::size_t nx;
    std::size_t ny;
};
AxisSplit split_qubits(std::size_t n);

struct ScalingConfig {
    std::size_t n_min{4};
    std::size_t n_max{64};
    std::size_t aqft_b{2};
    bool compensate{true};
    int time_exponent_p{1};
    double epsilon_th{0.39269908169872414}; // pi/8
    bool periodic_removal{true};
    double fidelity_2q{0.9967};
    /// Empirical (statevector) error is computed for n <= this.
    std::size_t empirical_max_n{12};
    InitialForm initial_form{InitialForm::PaperLiteral};

    void validate() const;
};

struct ScalingPoint {
    std::size_t n{0};
    std::size_t standard_two_qubit_raw{0};
    std::size_t truncated_two_qubit_raw{0};
    std::size_t standard_two_qubit_routed{0};
    std::size_t truncated_two_qubit_routed{0};
    std::size_t removed_gates_raw{0};
    std::size_t removed_gates_routed{0};
    /// Entanglers dropped from the momentum stage (periodic + sub-threshold).
    std::size_t removed_momentum_gates{0};
    /// 1 - f^removed, routed and raw.
    double avoided_error_routed{0.0};
    double avoided_error_raw{0.0};
    /// Forward plus inverse transform bound, summed over both axes.
    double aqft_bound{0.0};
    /// epsilon_th times removed_momentum_gates.
    double momentum_bound_paper{0.0};
    /// Sum of |reduced angle| over sub-threshold removals.
    double momentum_bound_tight{0.0};
    std::optional<double> empirical_error;
};

struct TradeoffCurves {
    ScalingConfig config;
    std::vector<ScalingPoint> points;
};

TradeoffCurves scaling_curves(const ScalingConfig &cfg);

/**
 * @brief 1 - fidelity between exact and truncated full-step evolution of the
 * encoded initial flow at t = pi 2^-p, noiseless.
 *
 * Throws ResourceLimitError for n > 14.
 */
double empirical_algorithmic_error(std::size_t n, std::size_t b, int p, double epsilon_th,
                                   bool compensate = true, bool periodic_removal = true,
                                   InitialForm form = InitialForm::PaperLiteral);

enum class Normalization { Bounded, Raw };
Normalization parse_normalization(std::string_view name);
std::string_view normalization_name(Normalization n) noexcept;

/// aqft_bound + momentum_bound_paper, optionally mapped to min(1, x/pi).
double algorithmic_error(const ScalingPoint &p, Normalization norm);

struct EquilibriumResult {
    /// Interpolated crossing abscissa; empty when the curves never cross.
    std::optional<double> n_star;
    double n_first{0.0};
    double n_last{0.0};
    double algorithmic_first{0.0};
    double algorithmic_last{0.0};
    double hardware_first{0.0};
    double hardware_last{0.0};
};

/// Sign change of (algorithmic - hardware), linearly interpolated. Throws
/// AmbiguityError listing every crossing when there is more than one, and
/// ShapeError on mismatched or too-short inputs.
EquilibriumResult equilibrium_point(std::span<const double> n, std::span<const double> algorithmic,
                                    std::span<const double> hardware);

EquilibriumResult equilibrium_point(const TradeoffCurves &curves, Normalization norm,
                                    bool routed = true);

struct LinearFit {
    double intercept;
    double slope;
    double r_squared;
};

/// Ordinary least squares y = a + b x.
LinearFit fit_linear(std::span<const double> x, std::span<const double> y);

} // namespace qfluid
