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
#include "qfluid/validation.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "qfluid/error.hpp"
#include "qfluid/fluid.hpp"
#include "qfluid/format.hpp"
#include "qfluid/fourier.hpp"
#include "qfluid/momentum.hpp"
#include "qfluid/noise.hpp"
#include "qfluid/tradeoff.hpp"

namespace qfluid {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

using Local = std::array<std::array<Complex, 4>, 4>;

/// Gate matrix over (bit q0, bit q1) with local index 2*b0 + b1; one-qubit
/// gates use the top-left 2x2 block with index b0.
Local local_matrix(const GateOp &op) {
    Local m{};
    switch (op.kind) {
    case GateKind::Hadamard: {
        const double s = 1.0 / std::sqrt(2.0);
        m[0][0] = s;
        m[0][1] = s;
        m[1][0] = s;
        m[1][1] = -s;
        break;
    }
    case GateKind::Rz:
        m[0][0] = std::exp(-0.5 * kI * op.angle);
        m[1][1] = std::exp(0.5 * kI * op.angle);
        break;
    case GateKind::ControlledPhase:
        m[0][0] = 1.0;
        m[1][1] = 1.0;
        m[2][2] = 1.0;
        m[3][3] = std::exp(kI * op.angle);
        break;
    case GateKind::ZZEntangler:
        m[0][0] = std::exp(-kI * op.angle);
        m[1][1] = std::exp(kI * op.angle);
        m[2][2] = std::exp(kI * op.angle);
        m[3][3] = std::exp(-kI * op.angle);
        break;
    case GateKind::Swap:
        m[0][0] = 1.0;
        m[1][2] = 1.0;
        m[2][1] = 1.0;
        m[3][3] = 1.0;
        break;
    }
    return m;
}

std::vector<Complex> random_amplitudes(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> v(std::size_t{1} << n);
    for (auto &a : v) {
        a = {g(rng), g(rng)};
    }
    return v;
}

Statevector random_state(std::size_t n, std::mt19937_64 &rng) {
    return Statevector::from_amplitudes(random_amplitudes(n, rng)).state;
}

Circuit random_circuit(std::size_t n, std::size_t gates, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> kind(0, 4);
    std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
    std::uniform_real_distribution<double> angle(-2.0 * kPi, 2.0 * kPi);
    Circuit c(n, "random");
    while (c.ops().size() < gates) {
        const auto k = static_cast<GateKind>(kind(rng));
        const auto a = qubit(rng);
        auto b = qubit(rng);
        if (k == GateKind::Hadamard) {
            c.append(GateOp::hadamard(a));
        } else if (k == GateKind::Rz) {
            c.append(GateOp::rz(a, angle(rng)));
        } else if (a != b) {
            c.append({k, a, b, k == GateKind::Swap ? 0.0 : angle(rng)});
        }
    }
    return c;
}

std::vector<Complex> mat_vec(const std::vector<Complex> &u, std::span<const Complex> v) {
    const std::size_t dim = v.size();
    std::vector<Complex> out(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < dim; ++c) {
            acc += u[r * dim + c] * v[c];
        }
        out[r] = acc;
    }
    return out;
}

double max_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

std::string sci(double v) { return format_significant(v, 3); }

struct Outcome {
    bool passed;
    std::string detail;
};

Outcome bounded(double worst, double tol) {
    return {worst < tol, "worst " + sci(worst) + " (tol " + sci(tol) + ")"};
}

} // namespace

std::vector<Complex> dense_unitary(const Circuit &circuit) {
    const std::size_t n = circuit.num_qubits();
    if (n > 8) {
        throw ResourceLimitError("dense unitary limited to 8 qubits, got " + std::to_string(n));
    }
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> u(dim * dim, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < dim; ++i) {
        u[i * dim + i] = 1.0;
    }
    std::vector<Complex> next(dim * dim);
    for (const auto &op : circuit.ops()) {
        const auto g = local_matrix(op);
        const bool two = op.is_two_qubit();
        const std::size_t mask = (std::size_t{1} << op.q0) | (two ? std::size_t{1} << op.q1 : 0);
        auto loc = [&](std::size_t idx) {
            const std::size_t b0 = (idx >> op.q0) & 1U;
            return two ? 2 * b0 + ((idx >> op.q1) & 1U) : b0;
        };
        std::fill(next.begin(), next.end(), Complex{0.0, 0.0});
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t k = 0; k < dim; ++k) {
                if ((r & ~mask) != (k & ~mask)) {
                    continue;
                }
                const Complex gk = g[loc(r)][loc(k)];
                if (gk == Complex{0.0, 0.0}) {
                    continue;
                }
                for (std::size_t c = 0; c < dim; ++c) {
                    next[r * dim + c] += gk * u[k * dim + c];
                }
            }
        }
        u.swap(next);
    }
    return u;
}

bool ValidationReport::all_passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.passed; });
}

ValidationReport run_validation(const ValidationOptions &opts) {
    ValidationReport report;
    std::mt19937_64 rng(opts.seed);

    auto run = [&](std::string name, const std::function<Outcome()> &fn) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult res{std::move(name), false, {}, 0.0};
        try {
            const auto o = fn();
            res.passed = o.passed;
            res.detail = o.detail;
        } catch (const std::exception &e) {
            res.detail = std::string("exception: ") + e.what();
        }
        res.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.checks.push_back(std::move(res));
    };

    run("statevector.norm_preserved", [&] {
        double worst = 0.0;
        for (std::size_t n = 1; n <= 10; ++n) {
            auto s = random_state(n, rng);
            execute_in_place(random_circuit(n, 200, rng), s);
            worst = std::max(worst, std::abs(s.norm() - 1.0));
        }
        return bounded(worst, 1e-10);
    });

    run("statevector.diagonal_matches_gates", [&] {
        double worst = 0.0;
        for (std::size_t n = 2; n <= 8; ++n) {
            const double t = 0.37 * static_cast<double>(n);
            auto s = random_state(n, rng);
            const auto via_gates = execute(build_momentum_circuit(n, t, TruncationPolicy::no_op()), s);
            s.apply_diagonal_phases(exact_momentum_phases(n, t));
            worst = std::max(worst, 1.0 - fidelity(via_gates, s));
        }
        return bounded(worst, 1e-10);
    });

    run("circuit.dense_unitary_oracle", [&] {
        double worst = 0.0;
        for (std::size_t n = 1; n <= 6; ++n) {
            for (int rep = 0; rep < 3; ++rep) {
                const auto c = random_circuit(n, 40, rng);
                const auto s = random_state(n, rng);
                worst = std::max(worst, max_diff(execute(c, s).amplitudes(),
                                                 mat_vec(dense_unitary(c), s.amplitudes())));
            }
            const auto axis = build_axis_evolution(n, 0.9, AqftConfig{1, true},
                                                   TruncationPolicy{kPi / 8, true});
            const auto s = random_state(n, rng);
            worst = std::max(worst, max_diff(execute(axis, s).amplitudes(),
                                             mat_vec(dense_unitary(axis), s.amplitudes())));
        }
        return bounded(worst, 1e-10);
    });

    run("circuit.depth_layers_valid", [&] {
        for (std::size_t n = 2; n <= 10; ++n) {
            const auto c = random_circuit(n, 120, rng);
            const auto layers = depth_layers(c);
            std::vector<std::size_t> layer_of(c.ops().size());
            std::size_t placed = 0;
            for (std::size_t l = 0; l < layers.size(); ++l) {
                std::vector<bool> busy(n, false);
                for (auto idx : layers[l]) {
                    const auto &op = c.ops()[idx];
                    if (busy[op.q0] || (op.is_two_qubit() && busy[op.q1])) {
                        return Outcome{false, "qubit reused inside a layer"};
                    }
                    busy[op.q0] = true;
                    if (op.is_two_qubit()) {
                        busy[op.q1] = true;
                    }
                    layer_of[idx] = l;
                    ++placed;
                }
            }
            if (placed != c.ops().size() || layers.size() != stats(c).logical_depth) {
                return Outcome{false, "layers do not cover the circuit"};
            }
            for (std::size_t a = 0; a < c.ops().size(); ++a) {
                for (std::size_t b = a + 1; b < c.ops().size(); ++b) {
                    const auto &x = c.ops()[a];
                    const auto &y = c.ops()[b];
                    const bool shared = x.q0 == y.q0 || (y.is_two_qubit() && x.q0 == y.q1) ||
                                        (x.is_two_qubit() && (x.q1 == y.q0 ||
                                                              (y.is_two_qubit() && x.q1 == y.q1)));
                    if (shared && layer_of[a] >= layer_of[b]) {
                        return Outcome{false, "dependency order violated"};
                    }
                }
            }
        }
        return Outcome{true, "n = 2..10, 120 gates each"};
    });

    run("circuit.text_roundtrip", [&] {
        for (std::size_t n = 2; n <= 8; ++n) {
            const auto c = build_axis_evolution(n, 1.1, AqftConfig{2, true}, TruncationPolicy{0.2, true});
            const auto back = parse_text(to_text(c));
            if (to_text(back) != to_text(c) || stats(back) != stats(c)) {
                return Outcome{false, "round trip changed the circuit at n = " + std::to_string(n)};
            }
            const auto s = random_state(n, rng);
            if (max_diff(execute(back, s).amplitudes(), execute(c, s).amplitudes()) > 1e-14) {
                return Outcome{false, "round trip changed the action at n = " + std::to_string(n)};
            }
        }
        return Outcome{true, "n = 2..8"};
    });

    run("fourier.qft_matches_dft", [&] {
        double worst = 0.0;
        for (std::size_t n = 1; n <= 6; ++n) {
            const std::size_t dim = std::size_t{1} << n;
            const auto q = build_qft(n, false);
            const auto u = dense_unitary(q);
            const double inv = 1.0 / std::sqrt(static_cast<double>(dim));
            // column j of the logical matrix is the permuted image of |j>
            for (std::size_t j = 0; j < dim; ++j) {
                std::vector<Complex> e(dim);
                e[j] = 1.0;
                const auto col = Statevector::from_amplitudes(mat_vec(u, e)).state;
                const auto logical = col.permuted(q.output_layout());
                for (std::size_t m = 0; m < dim; ++m) {
                    const double ph = 2.0 * kPi * static_cast<double>((j * m) % dim) /
                                      static_cast<double>(dim);
                    worst = std::max(worst, std::abs(logical[m] - inv * std::exp(kI * ph)));
                }
            }
        }
        return bounded(worst, 1e-10);
    });

    run("fourier.inverse_roundtrip", [&] {
        double worst = 0.0;
        for (std::size_t n = 1; n <= 10; ++n) {
            for (std::size_t b : {std::size_t{1}, std::size_t{2}, n}) {
                const AqftConfig cfg{b, true};
                const auto fwd = build_aqft(n, false, cfg);
                const auto s = random_state(n, rng);
                const auto back = execute(build_aqft(n, true, cfg), execute(fwd, s));
                worst = std::max(worst, max_diff(back.amplitudes(), s.amplitudes()));
            }
        }
        return bounded(worst, 1e-10);
    });

    run("fourier.aqft_full_threshold_is_qft", [&] {
        double worst = 0.0;
        for (std::size_t n = 1; n <= 8; ++n) {
            const auto a = build_aqft(n, false, AqftConfig{n - 1, true});
            const auto q = build_qft(n, false);
            for (int rep = 0; rep < 10; ++rep) {
                const auto s = random_state(n, rng);
                worst = std::max(worst, 1.0 - fidelity(execute(a, s), execute(q, s)));
            }
        }
        return bounded(worst, 1e-12);
    });

    run("momentum.pauli_reconstruction", [&] {
        double worst = 0.0;
        for (std::size_t n = 1; n <= 10; ++n) {
            auto d = decompose_k_squared(n);
            if (opts.corrupt_decomposition && n == 4) {
                d.c_pair.front().value += 0.25;
            }
            for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
                const auto k = static_cast<double>(wavenumber(m, n));
                worst = std::max(worst, std::abs(d.evaluate(m) - 0.5 * k * k));
            }
        }
        return bounded(worst, 1e-9);
    });

    run("momentum.closed_form_matches_projection", [&] {
        double worst = 0.0;
        for (std::size_t n = 1; n <= 10; ++n) {
            const auto a = decompose_k_squared(n);
            const auto b = k_squared_closed_form(n);
            worst = std::max(worst, std::abs(a.c0 - b.c0));
            for (std::size_t i = 0; i < n; ++i) {
                worst = std::max(worst, std::abs(a.c_single[i] - b.c_single[i]));
                for (std::size_t j = i + 1; j < n; ++j) {
                    worst = std::max(worst, std::abs(a.pair(i, j) - b.pair(i, j)));
                }
            }
        }
        return bounded(worst, 1e-9);
    });

    run("momentum.plane_wave_dispersion", [&] {
        const std::size_t n = 5;
        const std::size_t dim = std::size_t{1} << n;
        const double t = 0.61;
        const auto c = build_axis_evolution(n, t, AqftConfig::exact(), TruncationPolicy::no_op());
        // eigenvalue of each plane wave, relative to q = 0 so the dropped
        // constant phase cancels
        auto eigenvalue = [&](std::int64_t q) {
            std::vector<Complex> v(dim);
            for (std::size_t k = 0; k < dim; ++k) {
                v[k] = std::exp(kI * static_cast<double>(q) * (-kPi + 2.0 * kPi * static_cast<double>(k) /
                                                                        static_cast<double>(dim)));
            }
            const auto s = Statevector::from_amplitudes(v).state;
            const auto out = execute(c, s);
            return std::pair{inner_product(s, out), max_amplitude_distance_up_to_phase(out, s)};
        };
        const auto [lambda0, d0] = eigenvalue(0);
        double worst = d0;
        for (std::int64_t q = -16; q < 16; ++q) {
            const auto [lambda, d] = eigenvalue(q);
            const Complex expect = std::exp(-0.5 * kI * static_cast<double>(q * q) * t);
            worst = std::max({worst, d, std::abs(lambda / lambda0 - expect)});
        }
        return bounded(worst, 1e-10);
    });

    run("momentum.commuting_diagonal", [&] {
        double worst = 0.0;
        for (std::size_t n = 2; n <= 8; ++n) {
            const auto c = build_momentum_circuit(n, 0.83, TruncationPolicy::no_op());
            auto ops = c.ops();
            std::shuffle(ops.begin(), ops.end(), rng);
            Circuit shuffled(n, "shuffled");
            for (const auto &op : ops) {
                shuffled.append(op);
            }
            const auto s = random_state(n, rng);
            worst = std::max(worst, 1.0 - fidelity(execute(c, s), execute(shuffled, s)));
        }
        return bounded(worst, 1e-12);
    });

    run("momentum.periodic_removal_zero_cost", [&] {
        double worst = 0.0;
        for (std::size_t n = 1; n <= 10; ++n) {
            for (int p : {1, 2, 3}) {
                const double t = std::ldexp(kPi, -p);
                const auto s = random_state(n, rng);
                const auto exact = execute(build_momentum_circuit(n, t, TruncationPolicy::no_op()), s);
                const auto cut = execute(build_momentum_circuit(n, t, TruncationPolicy{0.0, true}), s);
                worst = std::max(worst, 1.0 - fidelity(exact, cut));
            }
        }
        return bounded(worst, 1e-10);
    });

    run("momentum.truncation_monotone_in_epsilon", [&] {
        for (std::size_t n : {4, 6, 8, 10}) {
            for (int p : {1, 2, 3}) {
                const double t = std::ldexp(kPi, -p);
                const auto s = random_state(n, rng);
                const auto exact = execute(build_momentum_circuit(n, t, TruncationPolicy::no_op()), s);
                double prev = -1.0;
                for (int e = 0; e <= 32; ++e) {
                    const double eps = kPi * e / 64.0;
                    const auto cut =
                        execute(build_momentum_circuit(n, t, TruncationPolicy{eps, true}), s);
                    const double deficit = 1.0 - fidelity(exact, cut);
                    if (deficit < prev - 1e-12) {
                        return Outcome{false, "deficit decreased at n = " + std::to_string(n) +
                                                  ", p = " + std::to_string(p)};
                    }
                    prev = deficit;
                }
            }
        }
        return Outcome{true, "eps = 0..pi/2 step pi/64"};
    });

    run("momentum.retained_pair_bound", [&] {
        for (std::size_t n = 1; n <= 20; ++n) {
            for (int p : {1, 2, 3}) {
                for (double eps : {kPi / 16, kPi / 8, kPi / 4}) {
                    const auto w = retention_window(p, eps);
                    const double bound = 0.5 * w.delta * static_cast<double>(n);
                    const auto count = window_retained_pair_count(n, p, eps);
                    if (static_cast<double>(count) > bound) {
                        return Outcome{false, std::to_string(count) + " pairs exceed " + sci(bound) +
                                                  " at n = " + std::to_string(n)};
                    }
                }
            }
        }
        return Outcome{true, "n <= 20, p in {1,2,3}, eps in {pi/16, pi/8, pi/4}"};
    });

    run("fluid.pipeline_matches_classical", [&] {
        const GridSpec grid{5, 5};
        const auto field = initial_wavefunction(grid, InitialForm::PaperLiteral);
        const auto s0 = encode(field);
        double worst = 0.0;
        for (int p : {1, 2}) {
            const double t = std::ldexp(kPi, -p);
            const auto q = execute(build_full_step(5, 5, t, AqftConfig::exact(),
                                                   TruncationPolicy::no_op()),
                                   s0);
            const auto ref = encode(classical_evolve(field, t));
            worst = std::max(worst, max_amplitude_distance_up_to_phase(q, ref));
        }
        return bounded(worst, 1e-8);
    });

    run("fluid.mass_conserved", [&] {
        const GridSpec grid{5, 5};
        const auto field = initial_wavefunction(grid, InitialForm::PaperLiteral);
        const auto s0 = encode(field);
        const double m0 = total_mass(density(field), grid);
        double worst = 0.0;
        for (int p : {1, 2}) {
            const double t = std::ldexp(kPi, -p);
            for (const auto &c : {build_full_step(5, 5, t, AqftConfig::exact(), TruncationPolicy::no_op()),
                                  build_full_step(5, 5, t, AqftConfig{2, true},
                                                  TruncationPolicy{kPi / 8, true})}) {
                const auto out = decode(execute(c, s0), grid, field.stored_norm);
                worst = std::max(worst, std::abs(total_mass(density(out), grid) - m0));
            }
        }
        return bounded(worst, 1e-10);
    });

    run("fluid.plane_wave_momentum", [&] {
        const GridSpec grid{4, 3};
        std::vector<Complex> v(grid.size());
        for (std::size_t l = 0; l < grid.ny_points(); ++l) {
            for (std::size_t k = 0; k < grid.nx_points(); ++k) {
                v[grid.index(k, l)] = 1.7 * std::exp(kI * (3.0 * grid.x(k) - 2.0 * grid.y(l)));
            }
        }
        const auto obs = observables(WaveField::from_values(grid, v));
        double worst = 0.0;
        for (std::size_t m = 0; m < grid.size(); ++m) {
            worst = std::max(worst, std::abs(obs.jx[m] - 3.0 * obs.rho[m]));
            worst = std::max(worst, std::abs(obs.jy[m] + 2.0 * obs.rho[m]));
        }
        return bounded(worst, 1e-9);
    });

    run("noise.unit_fidelity_is_noiseless", [&] {
        const auto c = build_full_step(3, 3, kPi / 2, AqftConfig{2, true}, TruncationPolicy{kPi / 8, true});
        const auto s = random_state(6, rng);
        const auto ref = execute(c, s);
        const auto ens = noisy_execute(c, s, NoiseModel{1.0, 1.0, 7}, 8, 2);
        for (const auto &st : ens.states) {
            if (!(st == ref)) {
                return Outcome{false, "trajectory differs from noiseless execution"};
            }
        }
        return Outcome{ens.total_events() == 0, "8 trajectories, 0 events expected"};
    });

    run("noise.schedule_independent", [&] {
        const auto c = build_full_step(3, 3, kPi / 4, AqftConfig{2, true}, TruncationPolicy{kPi / 8, true});
        const auto s = random_state(6, rng);
        const NoiseModel model{0.99, 0.95, 11};
        const auto a = noisy_execute(c, s, model, 24, 1);
        const auto b = noisy_execute(c, s, model, 24, 4);
        for (std::size_t i = 0; i < a.states.size(); ++i) {
            if (!(a.states[i] == b.states[i]) || a.pauli_events[i] != b.pauli_events[i]) {
                return Outcome{false, "trajectory " + std::to_string(i) + " depends on threads"};
            }
        }
        return Outcome{true, "24 trajectories, 1 vs 4 workers"};
    });

    run("tradeoff.hardware_error_monotone", [&] {
        for (std::size_t n = 0; n < 2000; ++n) {
            if (!(cumulative_hardware_error(n + 1, 0.9967) > cumulative_hardware_error(n, 0.9967))) {
                return Outcome{false, "not increasing at N = " + std::to_string(n)};
            }
        }
        for (double f = 0.90; f < 0.999; f += 0.001) {
            if (!(cumulative_hardware_error(100, f + 0.001) < cumulative_hardware_error(100, f))) {
                return Outcome{false, "not decreasing in f at " + sci(f)};
            }
        }
        return Outcome{true, "N < 2000, f in [0.9, 0.999]"};
    });

    run("tradeoff.curve_consistency", [&] {
        ScalingConfig cfg;
        cfg.n_min = 4;
        cfg.n_max = 24;
        cfg.empirical_max_n = 0;
        const auto curves = scaling_curves(cfg);
        std::size_t prev = 0;
        for (const auto &pt : curves.points) {
            if (pt.removed_gates_raw + pt.truncated_two_qubit_raw != pt.standard_two_qubit_raw ||
                pt.removed_gates_routed + pt.truncated_two_qubit_routed != pt.standard_two_qubit_routed) {
                return Outcome{false, "removed + truncated != standard at n = " + std::to_string(pt.n)};
            }
            if (pt.momentum_bound_tight > pt.momentum_bound_paper) {
                return Outcome{false, "tight bound above paper-style bound at n = " +
                                          std::to_string(pt.n)};
            }
            if (pt.removed_gates_raw < prev) {
                return Outcome{false, "removed count decreased at n = " + std::to_string(pt.n)};
            }
            if (!(pt.avoided_error_routed >= 0.0 && pt.avoided_error_routed < 1.0)) {
                return Outcome{false, "avoided error outside [0, 1)"};
            }
            prev = pt.removed_gates_raw;
        }
        return Outcome{true, "n = 4..24"};
    });

    run("tradeoff.empirical_error_noop_zero", [&] {
        double worst = 0.0;
        for (std::size_t n = 2; n <= 10; ++n) {
            worst = std::max(worst, empirical_algorithmic_error(n, n, 1, 0.0, true, false));
        }
        return bounded(worst, 1e-10);
    });

    return report;
}

std::string format_table(const ValidationReport &report) {
    std::size_t width = 5;
    for (const auto &c : report.checks) {
        width = std::max(width, c.name.size());
    }
    std::ostringstream os;
    os << std::string(width, ' ').replace(0, 5, "check") << "  result  seconds  detail\n";
    for (const auto &c : report.checks) {
        std::string name = c.name;
        name.resize(width, ' ');
        std::array<char, 32> buf{};
        std::string secs(buf.data(),
                         std::to_chars(buf.data(), buf.data() + buf.size(), c.seconds,
                                       std::chars_format::fixed, 4)
                             .ptr);
        secs.resize(std::max<std::size_t>(secs.size(), 7), ' ');
        os << name << "  " << (c.passed ? "PASS  " : "FAIL  ") << "  " << secs << "  " << c.detail
           << '\n';
    }
    std::size_t failed = 0;
    for (const auto &c : report.checks) {
        failed += c.passed ? 0 : 1;
    }
    os << report.checks.size() - failed << "/" << report.checks.size() << " checks passed\n";
    return os.str();
}

nlohmann::json to_json(const ValidationReport &report) {
    auto arr = nlohmann::json::array();
    for (const auto &c : report.checks) {
        arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"seconds", c.seconds}});
    }
    return {{"all_passed", report.all_passed()}, {"checks", arr}};
}

} // namespace qfluid
