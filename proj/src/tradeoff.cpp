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
#include "qfluid/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qfluid/circuit.hpp"
#include "qfluid/error.hpp"
#include "qfluid/format.hpp"
#include "qfluid/fourier.hpp"
#include "qfluid/momentum.hpp"
#include "qfluid/noise.hpp"

namespace qfluid {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxEmpiricalQubits = 14;

struct AxisCounts {
    GateStats standard;
    GateStats truncated;
    std::size_t removed_momentum{0};
    double tight{0.0};
};

AxisCounts axis_counts(std::size_t m, double t, const AqftConfig &cfg,
                       const TruncationPolicy &policy) {
    AxisCounts a;
    a.standard = stats(build_axis_evolution(m, t, AqftConfig::exact(), TruncationPolicy::no_op()));
    a.truncated = stats(build_axis_evolution(m, t, cfg, policy));
    const auto report = apply_truncation(decompose_k_squared(m), t, policy);
    a.removed_momentum = report.removed_periodic.size() + report.removed_subthreshold.size();
    a.tight = report.subthreshold_phase_sum();
    return a;
}

} // namespace

AxisSplit split_qubits(std::size_t n) { return {(n + 1) / 2, n / 2}; }

void ScalingConfig::validate() const {
    if (n_min < 2) {
        throw ConfigError("n_min", "must be at least 2");
    }
    if (n_max < n_min) {
        throw ConfigError("n_max", "empty qubit range");
    }
    if (n_max > 124) {
        throw ConfigError("n_max", "must not exceed 124");
    }
    if (!(fidelity_2q > 0.0 && fidelity_2q <= 1.0)) {
        throw ConfigError("fidelity_2q", "must lie in (0, 1]");
    }
    TruncationPolicy{epsilon_th, periodic_removal}.validate();
}

TradeoffCurves scaling_curves(const ScalingConfig &cfg) {
    cfg.validate();
    const double t = std::ldexp(kPi, -cfg.time_exponent_p);
    const AqftConfig aqft{cfg.aqft_b, cfg.compensate};
    const TruncationPolicy policy{cfg.epsilon_th, cfg.periodic_removal};

    TradeoffCurves curves{cfg, {}};
    for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
        const auto split = split_qubits(n);
        ScalingPoint pt;
        pt.n = n;
        for (std::size_t m : {split.nx, split.ny}) {
            const auto a = axis_counts(m, t, aqft, policy);
            pt.standard_two_qubit_raw += a.standard.two_qubit_count;
            pt.truncated_two_qubit_raw += a.truncated.two_qubit_count;
            pt.standard_two_qubit_routed += a.standard.lnn_routed_two_qubit_count;
            pt.truncated_two_qubit_routed += a.truncated.lnn_routed_two_qubit_count;
            pt.removed_momentum_gates += a.removed_momentum;
            pt.momentum_bound_tight += a.tight;
            pt.aqft_bound += 2.0 * aqft_error_bound(m, cfg.aqft_b, cfg.compensate);
        }
        pt.removed_gates_raw = pt.standard_two_qubit_raw - pt.truncated_two_qubit_raw;
        pt.removed_gates_routed = pt.standard_two_qubit_routed - pt.truncated_two_qubit_routed;
        pt.avoided_error_routed = cumulative_hardware_error(pt.removed_gates_routed, cfg.fidelity_2q);
        pt.avoided_error_raw = cumulative_hardware_error(pt.removed_gates_raw, cfg.fidelity_2q);
        pt.momentum_bound_paper = cfg.epsilon_th * static_cast<double>(pt.removed_momentum_gates);
        if (n <= cfg.empirical_max_n && n <= kMaxEmpiricalQubits) {
            pt.empirical_error =
                empirical_algorithmic_error(n, cfg.aqft_b, cfg.time_exponent_p, cfg.epsilon_th,
                                            cfg.compensate, cfg.periodic_removal, cfg.initial_form);
        }
        curves.points.push_back(pt);
    }
    return curves;
}

double empirical_algorithmic_error(std::size_t n, std::size_t b, int p, double epsilon_th,
                                   bool compensate, bool periodic_removal, InitialForm form) {
    if (n > kMaxEmpiricalQubits) {
        throw ResourceLimitError("empirical error limited to " +
                                 std::to_string(kMaxEmpiricalQubits) + " qubits, got " +
                                 std::to_string(n));
    }
    const auto split = split_qubits(n);
    const GridSpec grid{split.nx, split.ny};
    const double t = std::ldexp(kPi, -p);
    const auto initial = encode(initial_wavefunction(grid, form));
    const auto exact = execute(
        build_full_step(split.nx, split.ny, t, AqftConfig::exact(), TruncationPolicy::no_op()),
        initial);
    const auto truncated =
        execute(build_full_step(split.nx, split.ny, t, AqftConfig{b, compensate},
                                TruncationPolicy{epsilon_th, periodic_removal}),
                initial);
    return std::max(0.0, 1.0 - fidelity(exact, truncated));
}

Normalization parse_normalization(std::string_view name) {
    if (name == "bounded") {
        return Normalization::Bounded;
    }
    if (name == "raw") {
        return Normalization::Raw;
    }
    throw ConfigError("normalization", "expected bounded or raw, got '" + std::string(name) + "'");
}

std::string_view normalization_name(Normalization n) noexcept {
    return n == Normalization::Bounded ? "bounded" : "raw";
}

double algorithmic_error(const ScalingPoint &p, Normalization norm) {
    const double raw = p.aqft_bound + p.momentum_bound_paper;
    return norm == Normalization::Raw ? raw : std::min(1.0, raw / kPi);
}

EquilibriumResult equilibrium_point(std::span<const double> n, std::span<const double> algorithmic,
                                    std::span<const double> hardware) {
    if (n.size() != algorithmic.size() || n.size() != hardware.size()) {
        throw ShapeError("equilibrium inputs differ in length");
    }
    if (n.size() < 2) {
        throw ShapeError("equilibrium needs at least two points");
    }
    EquilibriumResult r;
    r.n_first = n.front();
    r.n_last = n.back();
    r.algorithmic_first = algorithmic.front();
    r.algorithmic_last = algorithmic.back();
    r.hardware_first = hardware.front();
    r.hardware_last = hardware.back();

    auto sign = [](double v) { return (v > 0.0) - (v < 0.0); };
    std::vector<double> crossings;
    // Walk the nonzero signs of the difference; a flip between two nonzero
    // samples is a crossing, placed at the zero sample if one sits between
    // them and interpolated otherwise.
    std::optional<std::size_t> last;
    for (std::size_t i = 0; i < n.size(); ++i) {
        const double d = algorithmic[i] - hardware[i];
        if (sign(d) == 0) {
            continue;
        }
        if (last) {
            const double dl = algorithmic[*last] - hardware[*last];
            if (sign(dl) != sign(d)) {
                if (i - *last > 1) {
                    crossings.push_back(n[*last + 1]);
                } else {
                    crossings.push_back(n[*last] + (n[i] - n[*last]) * dl / (dl - d));
                }
            }
        }
        last = i;
    }
    if (crossings.size() > 1) {
        std::string list;
        for (auto c : crossings) {
            list += (list.empty() ? "" : ", ") + format_significant(c, 6);
        }
        throw AmbiguityError("curves cross " + std::to_string(crossings.size()) +
                             " times, at n = " + list);
    }
    if (!crossings.empty()) {
        r.n_star = crossings.front();
    }
    return r;
}

EquilibriumResult equilibrium_point(const TradeoffCurves &curves, Normalization norm,
                                    bool routed) {
    std::vector<double> n;
    std::vector<double> alg;
    std::vector<double> hw;
    for (const auto &p : curves.points) {
        n.push_back(static_cast<double>(p.n));
        alg.push_back(algorithmic_error(p, norm));
        hw.push_back(routed ? p.avoided_error_routed : p.avoided_error_raw);
    }
    return equilibrium_point(n, alg, hw);
}

LinearFit fit_linear(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw ShapeError("fit_linear needs two equally sized arrays of length >= 2");
    }
    const auto k = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= k;
    my /= k;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) {
        throw NumericError("fit_linear with constant abscissa");
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = y[i] - (intercept + slope * x[i]);
        ss_res += e * e;
    }
    const double r2 = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
    return {intercept, slope, r2};
}

} // namespace qfluid
