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
#include "qfluid/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qfluid/error.hpp"

namespace qfluid {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

QubitLayout reversed_layout(std::size_t n) {
    QubitLayout l(n);
    for (std::size_t b = 0; b < n; ++b) {
        l[b] = n - 1 - b;
    }
    return l;
}

std::string transform_label(std::size_t n, bool inverse, const AqftConfig &cfg) {
    std::string base = inverse ? "iqft" : "qft";
    if (cfg.threshold_b >= n - 1 || n == 1) {
        return base;
    }
    return "a" + base + "(b=" + std::to_string(cfg.threshold_b) +
           (cfg.compensate ? ",comp" : "") + ")";
}

} // namespace

void AqftConfig::validate() const {
    if (!(assumed_control_probability >= 0.0 && assumed_control_probability <= 1.0)) {
        throw ConfigError("assumed_control_probability", "must lie in [0, 1]");
    }
}

double qft_phase_for_distance(std::size_t distance) {
    return std::ldexp(kTwoPi, -static_cast<int>(distance + 1));
}

Circuit build_aqft(std::size_t n, bool inverse, const AqftConfig &cfg) {
    if (n < 1) {
        throw ConfigError("n", "transform needs at least one qubit");
    }
    cfg.validate();

    Circuit forward(n, transform_label(n, false, cfg));
    // Most significant qubit first; each target's block is its Hadamard
    // followed by controls at increasing distance, so removed gates form the
    // tail of the block and the compensation lands where the last one was.
    for (std::size_t t = n; t-- > 0;) {
        forward.append(GateOp::hadamard(t));
        double removed_expectation = 0.0;
        for (std::size_t d = 1; d <= t; ++d) {
            const double theta = qft_phase_for_distance(d);
            if (d <= cfg.threshold_b) {
                forward.append(GateOp::controlled_phase(t - d, t, theta));
            } else {
                removed_expectation += cfg.assumed_control_probability * theta;
            }
        }
        if (cfg.compensate && removed_expectation != 0.0) {
            // Rz(a) = e^{-ia/2} diag(1, e^{ia}): relative phase a on |1>.
            forward.append(GateOp::rz(t, removed_expectation));
        }
    }
    forward.set_layouts(identity_layout(n), reversed_layout(n));
    if (!inverse) {
        return forward;
    }

    Circuit inv(n, transform_label(n, true, cfg));
    const auto &ops = forward.ops();
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        GateOp op = *it;
        op.angle = -op.angle;
        inv.append(op);
    }
    inv.set_layouts(reversed_layout(n), identity_layout(n));
    return inv;
}

Circuit build_qft(std::size_t n, bool inverse) {
    return build_aqft(n, inverse, AqftConfig::exact());
}

std::size_t aqft_two_qubit_count(std::size_t n, std::size_t b) {
    std::size_t count = 0;
    for (std::size_t k = 1; k <= std::min(b, n - 1) && k < n; ++k) {
        count += n - k;
    }
    return count;
}

double aqft_error_bound(std::size_t n, std::size_t b, bool compensated) {
    if (n < 2 || b >= n - 1) {
        return 0.0;
    }
    const double w = compensated ? 0.5 : 1.0;
    double total = 0.0;
    for (std::size_t k = b + 1; k < n; ++k) {
        total += static_cast<double>(n - k) * std::ldexp(kTwoPi, -static_cast<int>(k)) * w;
    }
    return total;
}

} // namespace qfluid
