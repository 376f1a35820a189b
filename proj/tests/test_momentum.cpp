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
#include <catch_amalgamated.hpp>

#include <algorithm>

#include "oracles.hpp"
#include "qfluid/error.hpp"
#include "qfluid/fourier.hpp"
#include "qfluid/momentum.hpp"

using namespace qfluid;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double pi = oracle::pi;

double t_of(int p) { return pi * std::ldexp(1.0, -p); }

AqftConfig exact_cfg(std::size_t n) { return AqftConfig{n - 1, false}; }

/// Coordinate-basis propagator F^dagger D F on one axis.
oracle::Mat axis_oracle(std::size_t n, double t) {
    const oracle::Mat f = oracle::dft_matrix(n);
    return f.adjoint() * oracle::kinetic_diagonal(n, t) * f;
}

/// Circuit with only the Rz layer and the listed entanglers, built by hand.
Circuit diagonal_with(std::size_t n, double t, const PauliDecomposition &d,
                      const std::vector<PairPhase> &pairs) {
    Circuit c(n);
    for (std::size_t i = 0; i < n; ++i) {
        c.append(GateOp::rz(i, 2.0 * d.c_single[i] * t));
    }
    for (const auto &p : pairs) {
        c.append(GateOp::zz_entangler(p.i, p.j, 0.5 * p.theta));
    }
    return c;
}

} // namespace

TEST_CASE("two's-complement wavenumbers", "[momentum]") {
    REQUIRE(wavenumber(0, 3) == 0);
    REQUIRE(wavenumber(3, 3) == 3);
    REQUIRE(wavenumber(4, 3) == -4);
    REQUIRE(wavenumber(7, 3) == -1);
    REQUIRE_THROWS_AS(wavenumber(8, 3), IndexError);
}

TEST_CASE("exact kinetic phases", "[momentum]") {
    const auto zero = exact_momentum_phases(4, 0.0);
    for (std::size_t m = 0; m < 16; ++m) {
        REQUIRE(zero(m) == 0.0);
    }
    REQUIRE_THAT(exact_momentum_phases(2, pi / 2.0)(2), WithinAbs(-pi, 1e-15));
}

TEST_CASE("one-qubit decomposition", "[momentum]") {
    const auto d = decompose_k_squared(1);
    REQUIRE_THAT(d.c0, WithinAbs(0.25, 1e-15));
    REQUIRE(d.c_single.size() == 1);
    REQUIRE_THAT(d.c_single[0], WithinAbs(-0.25, 1e-15));
    REQUIRE(d.c_pair.empty());
}

TEST_CASE("decomposition reconstructs k^2/2 exactly for n <= 10", "[momentum][oracle]") {
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto d = decompose_k_squared(n);
        REQUIRE(d.c_pair.size() == n * (n - 1) / 2);
        for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
            const double k = oracle::signed_k(m, n);
            REQUIRE(d.evaluate(m) == 0.5 * k * k);
        }
    }
}

TEST_CASE("projection agrees with the closed form", "[momentum]") {
    for (std::size_t n = 1; n <= 16; ++n) {
        const auto a = decompose_k_squared(n);
        const auto b = k_squared_closed_form(n);
        REQUIRE_THAT(a.c0, WithinRel(b.c0, 1e-13));
        for (std::size_t i = 0; i < n; ++i) {
            REQUIRE_THAT(a.c_single[i], WithinRel(b.c_single[i], 1e-13));
        }
        REQUIRE(a.c_pair.size() == b.c_pair.size());
        for (std::size_t q = 0; q < a.c_pair.size(); ++q) {
            REQUIRE(a.c_pair[q].i == b.c_pair[q].i);
            REQUIRE(a.c_pair[q].j == b.c_pair[q].j);
            REQUIRE_THAT(a.c_pair[q].value, WithinRel(b.c_pair[q].value, 1e-13));
        }
    }
}

TEST_CASE("pair coefficient magnitudes grow as 2^(i+j)", "[momentum]") {
    const std::size_t n = 8;
    const auto d = decompose_k_squared(n);
    for (const auto &pc : d.c_pair) {
        const double mag = std::ldexp(1.0, static_cast<int>(pc.i + pc.j) - 2);
        REQUIRE_THAT(std::abs(pc.value), WithinRel(mag, 1e-13));
        // the sign qubit flips the sign only
        REQUIRE((pc.value < 0) == (pc.j == n - 1));
    }
    REQUIRE_THAT(d.pair(2, 5), WithinRel(std::ldexp(1.0, 5), 1e-13));
    REQUIRE_THROWS_AS(d.pair(3, 3), IndexError);
}

TEST_CASE("phase reduction", "[momentum]") {
    REQUIRE(reduce_phase(0.0) == 0.0);
    REQUIRE_THAT(reduce_phase(3.0 * pi), WithinAbs(pi, 1e-12));
    REQUIRE_THAT(reduce_phase(-pi), WithinAbs(pi, 1e-12));
    for (int p = 1; p <= 3; ++p) {
        const int s = p + 3;
        REQUIRE_THAT(reduce_phase(-pi * std::ldexp(1.0, s - p - 2)), WithinAbs(0.0, 1e-12));
    }
    REQUIRE_THROWS_AS(reduce_phase(std::numeric_limits<double>::infinity()), NumericError);
    REQUIRE_THROWS_AS(reduce_phase(std::nan("")), NumericError);
}

TEST_CASE("policy validation", "[momentum]") {
    REQUIRE_NOTHROW(TruncationPolicy::no_op().validate());
    REQUIRE_THROWS_AS((TruncationPolicy{pi, false}.validate()), ConfigError);
    REQUIRE_THROWS_AS((TruncationPolicy{-0.1, false}.validate()), ConfigError);
    REQUIRE_THROWS_AS((TruncationPolicy{0.1, true, -1.0}.validate()), ConfigError);
}

TEST_CASE("no-op policy keeps every pair and matches the diagonal", "[momentum][oracle]") {
    std::mt19937_64 rng(61);
    for (std::size_t n = 1; n <= 10; ++n) {
        const double t = 0.37 + 0.1 * static_cast<double>(n);
        const auto report = apply_truncation(decompose_k_squared(n), t, TruncationPolicy::no_op());
        REQUIRE(report.retained.size() == n * (n - 1) / 2);
        REQUIRE(report.total() == report.retained.size());

        const auto s = oracle::random_state(n, rng);
        const auto out = execute(build_momentum_circuit(n, t, TruncationPolicy::no_op()), s);
        const oracle::Vec want = oracle::kinetic_diagonal(n, t) * oracle::to_eigen(s);
        REQUIRE(oracle::deficit(oracle::to_eigen(out), want) < 1e-10);
        REQUIRE(oracle::distance_up_to_phase(oracle::to_eigen(out), want) < 1e-10);
    }
}

TEST_CASE("periodic removal at t = pi 2^-p costs nothing", "[momentum]") {
    std::mt19937_64 rng(67);
    const std::size_t n = 8;
    const auto d = decompose_k_squared(n);
    for (int p = 1; p <= 3; ++p) {
        const double t = t_of(p);
        const auto report = apply_truncation(d, t, TruncationPolicy{0.0, true});
        for (const auto &pc : d.c_pair) {
            if (static_cast<int>(pc.i + pc.j) >= p + 3) {
                const bool found = std::any_of(report.removed_periodic.begin(), report.removed_periodic.end(),
                                               [&](const PairPhase &x) { return x.i == pc.i && x.j == pc.j; });
                REQUIRE(found);
            }
        }
        REQUIRE(report.removed_subthreshold.empty());

        auto all = report.retained;
        all.insert(all.end(), report.removed_periodic.begin(), report.removed_periodic.end());
        const auto s = oracle::random_state(n, rng);
        const auto with = execute(diagonal_with(n, t, d, all), s);
        const auto without = execute(diagonal_with(n, t, d, report.retained), s);
        REQUIRE(1.0 - fidelity(with, without) < 1e-10);
    }
}

TEST_CASE("threshold splits pairs by reduced angle", "[momentum]") {
    const auto d = decompose_k_squared(9);
    for (double t : {0.3, 1.1, t_of(2), t_of(3)}) {
        std::size_t prev = SIZE_MAX;
        for (double eps : {0.0, pi / 16.0, pi / 8.0, pi / 4.0, pi / 2.0}) {
            const auto r = apply_truncation(d, t, TruncationPolicy{eps, true});
            for (const auto &x : r.retained) {
                REQUIRE(std::abs(x.theta_reduced) >= eps);
            }
            for (const auto &x : r.removed_subthreshold) {
                REQUIRE(std::abs(x.theta_reduced) < eps);
                REQUIRE_THAT(x.theta, WithinAbs(2.0 * d.pair(x.i, x.j) * t, 1e-12));
            }
            REQUIRE(r.total() == d.c_pair.size());
            REQUIRE(r.retained.size() <= prev);
            prev = r.retained.size();
        }
    }
}

TEST_CASE("truncation report json", "[momentum]") {
    const auto r = apply_truncation(decompose_k_squared(5), t_of(1), TruncationPolicy{pi / 8.0, true});
    const auto j = to_json(r);
    REQUIRE(j.at("retained").size() == r.retained.size());
    REQUIRE(j.at("removed_periodic").size() == r.removed_periodic.size());
    REQUIRE(j.at("removed_periodic").at(0).at("class") == "removed_periodic");
}

TEST_CASE("retention window", "[momentum]") {
    const auto w = retention_window(2, pi / 8.0);
    REQUIRE_THAT(w.lo, WithinAbs(1.0, 1e-12));
    REQUIRE_THAT(w.hi, WithinAbs(5.0, 1e-12));
    REQUIRE_THAT(w.delta, WithinAbs(4.0, 1e-12));
    REQUIRE_THAT(retention_window(1, pi).delta, WithinAbs(1.0, 1e-12));
    const auto open = retention_window(1, 0.0);
    REQUIRE(std::isinf(open.lo));
    REQUIRE(open.lo < 0);
}

TEST_CASE("window pair count by enumeration", "[momentum]") {
    for (std::size_t n = 2; n <= 20; ++n) {
        for (int p = 1; p <= 3; ++p) {
            for (double eps : {pi / 16.0, pi / 8.0, pi / 4.0}) {
                const auto w = retention_window(p, eps);
                std::size_t brute = 0;
                for (std::size_t s = 1; s <= 2 * n - 3; ++s) {
                    if (static_cast<double>(s) < w.lo || static_cast<double>(s) >= w.hi) {
                        continue;
                    }
                    // pairs i < j < n with i + j = s
                    for (std::size_t i = 0; 2 * i < s; ++i) {
                        brute += (s - i < n) ? 1 : 0;
                    }
                }
                REQUIRE(window_retained_pair_count(n, p, eps) == brute);
            }
        }
    }
}

TEST_CASE("axis evolution equals the dense spectral propagator", "[momentum][oracle]") {
    std::mt19937_64 rng(71);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (double t : {0.0, t_of(2), t_of(1), 0.813}) {
            const auto c = build_axis_evolution(n, t, exact_cfg(n), TruncationPolicy::no_op());
            REQUIRE(c.input_layout() == identity_layout(n));
            REQUIRE(c.output_layout() == identity_layout(n));
            const auto s = oracle::random_state(n, rng);
            const oracle::Vec want = axis_oracle(n, t) * oracle::to_eigen(s);
            INFO("n=" << n << " t=" << t);
            REQUIRE(oracle::distance_up_to_phase(oracle::to_eigen(execute(c, s)), want) < 1e-10);
        }
    }
}

TEST_CASE("plane waves pick up e^{-i q^2 t / 2} relative to q = 0", "[momentum]") {
    const std::size_t n = 5;
    const std::size_t dim = 32;
    const double t = t_of(1);
    const auto c = build_axis_evolution(n, t, exact_cfg(n), TruncationPolicy::no_op());
    auto plane = [&](long q) {
        std::vector<oracle::cd> v(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            v[j] = std::polar(1.0, 2.0 * pi * static_cast<double>(q) * static_cast<double>(j) / dim);
        }
        return v;
    };
    const auto base = plane(0);
    for (long q : {1L, 2L, 3L, -5L, 7L}) {
        const auto wave = plane(q);
        std::vector<oracle::cd> mix(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            mix[j] = wave[j] + base[j];
        }
        const auto s = Statevector::from_amplitudes(mix).state;
        const auto out = execute(c, s);
        // project onto each mode and compare the relative phase
        oracle::cd aq{0.0}, a0{0.0};
        for (std::size_t j = 0; j < dim; ++j) {
            aq += std::conj(wave[j]) * out[j];
            a0 += std::conj(base[j]) * out[j];
        }
        const double qq = static_cast<double>(q);
        const auto want = std::polar(1.0, -qq * qq * t / 2.0);
        REQUIRE(std::abs(aq / a0 - want) < 1e-10);
    }
}

TEST_CASE("zero time is the identity", "[momentum]") {
    std::mt19937_64 rng(73);
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto s = oracle::random_state(n, rng);
        const auto out = execute(build_axis_evolution(n, 0.0, exact_cfg(n), TruncationPolicy::no_op()), s);
        REQUIRE(max_amplitude_distance(out, s) < 1e-10);
    }
}

TEST_CASE("full step acts axis by axis", "[momentum][oracle]") {
    std::mt19937_64 rng(79);
    const std::size_t nx = 5, ny = 4;
    const double t = t_of(1);
    const auto c = build_full_step(nx, ny, t, AqftConfig{8, false}, TruncationPolicy::no_op());
    const auto s = oracle::random_state(nx + ny, rng);
    const auto got = oracle::to_eigen(execute(c, s));

    // x fastest: column-major (Nx x Ny) view
    const oracle::Vec sv = oracle::to_eigen(s);
    const Eigen::Map<const oracle::Mat> grid(sv.data(), 32, 16);
    const oracle::Mat evolved = axis_oracle(nx, t) * grid * axis_oracle(ny, t).transpose();
    const oracle::Vec want = Eigen::Map<const oracle::Vec>(evolved.data(), evolved.size());
    REQUIRE(oracle::distance_up_to_phase(got, want) < 1e-10);
}
