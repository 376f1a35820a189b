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
#include "qfluid/momentum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "qfluid/error.hpp"

namespace qfluid {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kMaxProjectionQubits = 20;

void check_axis(std::size_t n_axis) {
    if (n_axis < 1 || n_axis > 62) {
        throw ConfigError("n_axis", "must lie in [1, 62]");
    }
}

PauliDecomposition project_k_squared(std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> w(dim);
    for (std::size_t m = 0; m < dim; ++m) {
        const auto k = static_cast<double>(wavenumber(m, n));
        w[m] = 0.5 * k * k;
    }
    // In-place fast Walsh-Hadamard transform; w[S] becomes
    // sum_m d(m) (-1)^{popcount(m & S)}.
    for (std::size_t len = 1; len < dim; len <<= 1) {
        for (std::size_t i = 0; i < dim; i += len << 1) {
            for (std::size_t j = i; j < i + len; ++j) {
                const double a = w[j];
                const double b = w[j + len];
                w[j] = a + b;
                w[j + len] = a - b;
            }
        }
    }
    const double inv = 1.0 / static_cast<double>(dim);
    for (auto &v : w) {
        v *= inv;
    }
    double scale = 1.0;
    for (auto v : w) {
        scale = std::max(scale, std::abs(v));
    }
    for (std::size_t s = 0; s < dim; ++s) {
        if (std::popcount(s) > 2 && std::abs(w[s]) > 1e-12 * scale) {
            throw NumericError("k^2 expansion has a higher-order Z term");
        }
    }
    PauliDecomposition d;
    d.num_qubits = n;
    d.c0 = w[0];
    d.c_single.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        d.c_single[i] = w[std::size_t{1} << i];
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            d.c_pair.push_back({i, j, w[(std::size_t{1} << i) | (std::size_t{1} << j)]});
        }
    }
    return d;
}

} // namespace

EvolutionTime EvolutionTime::from_exponent(int p) { return {std::ldexp(kPi, -p), p}; }

std::int64_t wavenumber(std::size_t m, std::size_t n_axis) {
    check_axis(n_axis);
    const std::size_t dim = std::size_t{1} << n_axis;
    if (m >= dim) {
        throw IndexError("basis integer " + std::to_string(m) + " out of range for " +
                         std::to_string(n_axis) + " qubits");
    }
    const auto half = static_cast<std::int64_t>(dim >> 1);
    const auto v = static_cast<std::int64_t>(m);
    return v < half ? v : v - static_cast<std::int64_t>(dim);
}

std::function<double(std::size_t)> exact_momentum_phases(std::size_t n_axis, double t) {
    check_axis(n_axis);
    return [n_axis, t](std::size_t m) {
        const auto k = static_cast<double>(wavenumber(m, n_axis));
        return -0.5 * k * k * t;
    };
}

double PauliDecomposition::pair(QubitIndex i, QubitIndex j) const {
    if (i > j) {
        std::swap(i, j);
    }
    auto it = std::find_if(c_pair.begin(), c_pair.end(),
                           [&](const PairCoefficient &p) { return p.i == i && p.j == j; });
    if (it == c_pair.end()) {
        throw IndexError("no pair coefficient for (" + std::to_string(i) + ", " +
                         std::to_string(j) + ")");
    }
    return it->value;
}

double PauliDecomposition::evaluate(std::size_t m) const {
    auto z = [&](std::size_t q) { return ((m >> q) & 1U) ? -1.0 : 1.0; };
    double v = c0;
    for (std::size_t i = 0; i < c_single.size(); ++i) {
        v += c_single[i] * z(i);
    }
    for (const auto &p : c_pair) {
        v += p.value * z(p.i) * z(p.j);
    }
    return v;
}

PauliDecomposition k_squared_closed_form(std::size_t n_axis) {
    check_axis(n_axis);
    std::vector<double> w(n_axis);
    for (std::size_t i = 0; i < n_axis; ++i) {
        w[i] = std::ldexp(1.0, static_cast<int>(i));
    }
    w[n_axis - 1] = -w[n_axis - 1];
    PauliDecomposition d;
    d.num_qubits = n_axis;
    d.c0 = 0.125;
    for (auto wi : w) {
        d.c0 += 0.125 * wi * wi;
        d.c_single.push_back(0.25 * wi);
    }
    for (std::size_t i = 0; i < n_axis; ++i) {
        for (std::size_t j = i + 1; j < n_axis; ++j) {
            d.c_pair.push_back({i, j, 0.25 * w[i] * w[j]});
        }
    }
    return d;
}

PauliDecomposition decompose_k_squared(std::size_t n_axis) {
    check_axis(n_axis);
    if (n_axis <= kMaxProjectionQubits) {
        return project_k_squared(n_axis);
    }
    return k_squared_closed_form(n_axis);
}

double reduce_phase(double theta) {
    if (!std::isfinite(theta)) {
        throw NumericError("cannot reduce a non-finite phase");
    }
    double r = theta - kTwoPi * std::round(theta / kTwoPi);
    if (r <= -kPi) {
        r += kTwoPi;
    } else if (r > kPi) {
        r -= kTwoPi;
    }
    return r;
}

void TruncationPolicy::validate() const {
    if (!(epsilon_th >= 0.0 && epsilon_th < kPi)) {
        throw ConfigError("epsilon_th", "must lie in [0, pi)");
    }
    if (!(periodic_tolerance >= 0.0)) {
        throw ConfigError("periodic_tolerance", "must be non-negative");
    }
}

std::string_view pair_class_name(PairClass c) noexcept {
    switch (c) {
    case PairClass::Retained:
        return "retained";
    case PairClass::RemovedPeriodic:
        return "removed_periodic";
    case PairClass::RemovedSubthreshold:
        return "removed_subthreshold";
    }
    return "?";
}

double TruncationReport::subthreshold_phase_sum() const noexcept {
    double s = 0.0;
    for (const auto &p : removed_subthreshold) {
        s += std::abs(p.theta_reduced);
    }
    return s;
}

TruncationReport apply_truncation(const PauliDecomposition &decomp, double t,
                                  const TruncationPolicy &policy) {
    policy.validate();
    TruncationReport report;
    for (const auto &pc : decomp.c_pair) {
        const double theta = 2.0 * pc.value * t;
        const double reduced = reduce_phase(theta);
        PairPhase ph{pc.i, pc.j, theta, reduced, PairClass::Retained};
        if (policy.periodic_removal && std::abs(reduced) <= policy.periodic_tolerance) {
            ph.cls = PairClass::RemovedPeriodic;
            report.removed_periodic.push_back(ph);
        } else if (std::abs(reduced) < policy.epsilon_th) {
            ph.cls = PairClass::RemovedSubthreshold;
            report.removed_subthreshold.push_back(ph);
        } else {
            report.retained.push_back(ph);
        }
    }
    return report;
}

nlohmann::json to_json(const TruncationReport &report) {
    auto rows = [](const std::vector<PairPhase> &v) {
        auto arr = nlohmann::json::array();
        for (const auto &p : v) {
            arr.push_back({{"i", p.i},
                           {"j", p.j},
                           {"theta", p.theta},
                           {"theta_reduced", p.theta_reduced},
                           {"class", std::string(pair_class_name(p.cls))}});
        }
        return arr;
    };
    return {{"retained", rows(report.retained)},
            {"removed_periodic", rows(report.removed_periodic)},
            {"removed_subthreshold", rows(report.removed_subthreshold)}};
}

RetentionWindow retention_window(int p, double epsilon_th) {
    if (!(epsilon_th >= 0.0) || !std::isfinite(epsilon_th)) {
        throw ConfigError("epsilon_th", "must be finite and non-negative");
    }
    const double hi = static_cast<double>(p) + 3.0;
    if (epsilon_th == 0.0) {
        const double inf = std::numeric_limits<double>::infinity();
        return {-inf, hi, inf};
    }
    const double log_term = std::log2(epsilon_th / kPi);
    return {log_term + static_cast<double>(p) + 2.0, hi, 1.0 - log_term};
}

std::size_t window_retained_pair_count(std::size_t n, int p, double epsilon_th) {
    const auto w = retention_window(p, epsilon_th);
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto s = static_cast<double>(i + j);
            if (s >= w.lo && s < w.hi) {
                ++count;
            }
        }
    }
    return count;
}

Circuit build_momentum_circuit(std::size_t n_axis, double t, const TruncationPolicy &policy) {
    const auto decomp = decompose_k_squared(n_axis);
    const auto report = apply_truncation(decomp, t, policy);
    Circuit c(n_axis, "momentum");
    for (std::size_t i = 0; i < n_axis; ++i) {
        // e^{-i c_i t Z} = Rz(2 c_i t); Rz is 4 pi periodic.
        const double angle = std::remainder(2.0 * decomp.c_single[i] * t, 2.0 * kTwoPi);
        c.append(GateOp::rz(i, angle));
    }
    for (const auto &p : report.retained) {
        // exp(-i (theta_reduced/2) ZZ) equals exp(-i c_ij t ZZ) up to a sign.
        c.append(GateOp::zz_entangler(p.i, p.j, 0.5 * p.theta_reduced));
    }
    return c;
}

Circuit build_axis_evolution(std::size_t n_axis, double t, const AqftConfig &cfg,
                             const TruncationPolicy &policy) {
    auto forward = build_aqft(n_axis, false, cfg);
    auto inverse = build_aqft(n_axis, true, cfg);
    const QubitLayout &momentum_layout = forward.output_layout();
    auto momentum = build_momentum_circuit(n_axis, t, policy).remapped(momentum_layout, n_axis);
    momentum.set_layouts(momentum_layout, momentum_layout);
    auto c = concatenate(concatenate(forward, momentum), inverse);
    c.set_label("axis_evolution");
    return c;
}

Circuit build_full_step(std::size_t nx, std::size_t ny, double t, const AqftConfig &cfg,
                        const TruncationPolicy &policy) {
    const std::size_t n = nx + ny;
    std::vector<QubitIndex> x_map(nx);
    std::iota(x_map.begin(), x_map.end(), QubitIndex{0});
    std::vector<QubitIndex> y_map(ny);
    std::iota(y_map.begin(), y_map.end(), QubitIndex{nx});
    auto ux = build_axis_evolution(nx, t, cfg, policy).remapped(x_map, n);
    auto uy = build_axis_evolution(ny, t, cfg, policy).remapped(y_map, n);
    ux.set_label("U_x");
    uy.set_label("U_y");
    auto c = concatenate(ux, uy);
    c.set_label("full_step");
    return c;
}

} // namespace qfluid
