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

#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "qfluid/error.hpp"
#include "qfluid/fluid.hpp"
#include "qfluid/fourier.hpp"
#include "qfluid/momentum.hpp"

using namespace qfluid;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using oracle::cd;

namespace {

constexpr double pi = oracle::pi;

WaveField make(const GridSpec &g, const std::function<cd(double, double)> &f) {
    std::vector<cd> v(g.size());
    for (std::size_t l = 0; l < g.ny_points(); ++l) {
        for (std::size_t k = 0; k < g.nx_points(); ++k) {
            v[g.index(k, l)] = f(g.x(k), g.y(l));
        }
    }
    return WaveField::from_values(g, std::move(v));
}

WaveField smooth_random(const GridSpec &g, std::mt19937_64 &rng) {
    std::normal_distribution<double> n;
    std::vector<std::pair<int, int>> modes{{0, 0}, {1, 0}, {0, 1}, {-1, 2}, {2, -1}, {3, 1}};
    std::vector<cd> amp;
    for (std::size_t i = 0; i < modes.size(); ++i) {
        amp.emplace_back(n(rng), n(rng));
    }
    return make(g, [&](double x, double y) {
        cd s{0.0};
        for (std::size_t i = 0; i < modes.size(); ++i) {
            s += amp[i] * std::exp(cd{0.0, modes[i].first * x + modes[i].second * y});
        }
        return s;
    });
}

/// Two-dimensional periodic propagator from dense per-axis DFT matrices.
std::vector<cd> dense_propagate(const WaveField &f, double t) {
    const auto &g = f.grid;
    auto axis = [t](std::size_t n) {
        const oracle::Mat dft = oracle::dft_matrix(n);
        return oracle::Mat(dft.adjoint() * oracle::kinetic_diagonal(n, t) * dft);
    };
    const Eigen::Map<const oracle::Mat> psi(f.values.data(), static_cast<Eigen::Index>(g.nx_points()),
                                            static_cast<Eigen::Index>(g.ny_points()));
    const oracle::Mat out = axis(g.nx_qubits) * psi * axis(g.ny_qubits).transpose();
    return {out.data(), out.data() + out.size()};
}

} // namespace

TEST_CASE("grid geometry", "[fluid]") {
    const GridSpec g{3, 2};
    REQUIRE(g.nx_points() == 8);
    REQUIRE(g.ny_points() == 4);
    REQUIRE(g.size() == 32);
    REQUIRE_THAT(g.x(0), WithinAbs(-pi, 1e-15));
    REQUIRE_THAT(g.dy(), WithinAbs(pi / 2.0, 1e-15));
    REQUIRE(g.index(1, 2) == 17);
}

TEST_CASE("field construction guards", "[fluid]") {
    const GridSpec g{2, 2};
    REQUIRE_THROWS_AS(WaveField::from_values(g, std::vector<cd>(15, 1.0)), ShapeError);
    std::vector<cd> bad(16, 1.0);
    bad[3] = {std::nan(""), 0.0};
    REQUIRE_THROWS_AS(WaveField::from_values(g, bad), NumericError);
    REQUIRE_THROWS_AS(encode(WaveField::from_values(g, std::vector<cd>(16, 0.0))), DegenerateStateError);
}

TEST_CASE("encode places grid points at basis indices", "[fluid]") {
    const GridSpec g{2, 2};
    const auto uniform = encode(WaveField::from_values(g, std::vector<cd>(16, 3.0)));
    for (std::size_t m = 0; m < 16; ++m) {
        REQUIRE_THAT(uniform[m].real(), WithinAbs(0.25, 1e-15));
    }
    for (auto [k, l, idx] : {std::tuple{1UL, 0UL, 1UL}, std::tuple{1UL, 2UL, 9UL}}) {
        std::vector<cd> v(16, 0.0);
        v[g.index(k, l)] = 2.0;
        const auto s = encode(WaveField::from_values(g, v));
        REQUIRE(s[idx] == cd{1.0});
    }
}

TEST_CASE("decode inverts encode", "[fluid]") {
    std::mt19937_64 rng(83);
    const GridSpec g{4, 3};
    const auto f = smooth_random(g, rng);
    const auto back = decode(encode(f), g, f.stored_norm);
    for (std::size_t i = 0; i < g.size(); ++i) {
        REQUIRE(std::abs(back.values[i] - f.values[i]) <= 1e-12 * std::abs(f.values[i]) + 1e-14);
    }
    const auto c = WaveField::from_values(g, std::vector<cd>(g.size(), cd{0.5, -0.5}));
    const auto cb = decode(encode(c), g, c.stored_norm);
    for (const auto &v : cb.values) {
        REQUIRE(std::abs(v - cd{0.5, -0.5}) < 1e-15);
    }
    REQUIRE_THROWS_AS(decode(encode(f), GridSpec{3, 3}, 1.0), ShapeError);
}

TEST_CASE("density and momentum of simple fields", "[fluid]") {
    const GridSpec g{5, 5};
    const auto wave = make(g, [](double x, double) { return std::exp(cd{0.0, x}); });
    const auto obs = observables(wave);
    for (std::size_t i = 0; i < g.size(); ++i) {
        REQUIRE_THAT(obs.rho[i], WithinAbs(1.0, 1e-12));
        REQUIRE_THAT(obs.jx[i], WithinAbs(1.0, 1e-10));
        REQUIRE_THAT(obs.jy[i], WithinAbs(0.0, 1e-10));
    }
    const auto real = make(g, [](double x, double y) { return cd{std::cos(x) + 0.3 * std::sin(2 * y) + 2.0}; });
    const auto [jx, jy] = momentum(real);
    for (std::size_t i = 0; i < g.size(); ++i) {
        REQUIRE_THAT(jx[i], WithinAbs(0.0, 1e-12));
        REQUIRE_THAT(jy[i], WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("initial flows", "[fluid]") {
    const GridSpec g{5, 5};
    const auto lit = observables(initial_wavefunction(g, InitialForm::PaperLiteral));
    const auto mat = observables(initial_wavefunction(g, InitialForm::DensityMatched));
    for (std::size_t l = 0; l < g.ny_points(); ++l) {
        const double y = g.y(l);
        for (std::size_t k = 0; k < g.nx_points(); ++k) {
            const auto m = g.index(k, l);
            REQUIRE_THAT(lit.rho[m], WithinAbs(std::exp(-2.0 * y * y), 1e-12));
            REQUIRE_THAT(lit.jx[m], WithinAbs(std::exp(-2.0 * y * y), 1e-10));
            REQUIRE_THAT(lit.jy[m], WithinAbs(0.0, 1e-10));
            REQUIRE_THAT(mat.rho[m], WithinAbs(std::exp(-y * y), 1e-12));
        }
    }
    REQUIRE(parse_initial_form("density_matched") == InitialForm::DensityMatched);
    REQUIRE(initial_form_name(InitialForm::PaperLiteral) == "paper_literal");
    REQUIRE_THROWS_AS(parse_initial_form("gaussian"), ConfigError);
}

TEST_CASE("classical propagator against the dense oracle", "[fluid][oracle]") {
    std::mt19937_64 rng(89);
    const GridSpec g{5, 4};
    const auto f = smooth_random(g, rng);
    const auto same = classical_evolve(f, 0.0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        REQUIRE(std::abs(same.values[i] - f.values[i]) < 1e-12);
    }
    for (double t : {pi / 4.0, pi / 2.0, 1.3}) {
        const auto got = classical_evolve(f, t);
        const auto want = dense_propagate(f, t);
        for (std::size_t i = 0; i < g.size(); ++i) {
            REQUIRE(std::abs(got.values[i] - want[i]) < 1e-10);
        }
    }
}

TEST_CASE("plane wave dispersion in the classical propagator", "[fluid]") {
    const GridSpec g{5, 5};
    const double t = 0.9;
    for (int q : {1, 3, -4}) {
        const auto f = make(g, [q](double x, double) { return std::exp(cd{0.0, q * x}); });
        const auto out = classical_evolve(f, t);
        const auto phase = std::polar(1.0, -q * q * t / 2.0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            REQUIRE(std::abs(out.values[i] - phase * f.values[i]) < 1e-10);
        }
    }
}

TEST_CASE("quantum pipeline matches the classical propagator", "[fluid]") {
    const GridSpec g{5, 5};
    const auto f = initial_wavefunction(g, InitialForm::PaperLiteral);
    for (int p : {1, 2}) {
        const double t = pi * std::ldexp(1.0, -p);
        const auto c = build_full_step(5, 5, t, AqftConfig{4, false}, TruncationPolicy::no_op());
        const auto q = execute(c, encode(f));
        const auto ref = encode(classical_evolve(f, t));
        REQUIRE(max_amplitude_distance_up_to_phase(q, ref) < 1e-8);
    }
}

TEST_CASE("mass is the density sum times the cell", "[fluid]") {
    const GridSpec g{4, 4};
    std::vector<double> rho(g.size(), 1.0);
    REQUIRE_THAT(total_mass(rho, g), WithinRel(4.0 * pi * pi, 1e-14));
    const auto f = initial_wavefunction(g, InitialForm::PaperLiteral);
    const double m0 = total_mass(density(f), g);
    for (double t : {pi / 4.0, pi / 2.0}) {
        REQUIRE_THAT(total_mass(density(classical_evolve(f, t)), g), WithinRel(m0, 1e-12));
    }
}

TEST_CASE("pearson correlation", "[fluid]") {
    std::mt19937_64 rng(97);
    std::normal_distribution<double> n;
    std::vector<double> a(200), neg(200), b(200);
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = n(rng);
        neg[i] = -a[i];
        b[i] = a[i] + 0.1 * n(rng);
    }
    REQUIRE_THAT(pearson_r(a, a), WithinAbs(1.0, 1e-14));
    REQUIRE_THAT(pearson_r(a, neg), WithinAbs(-1.0, 1e-14));

    // covariance formula written out directly
    double ma = 0, mb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= a.size();
    mb /= b.size();
    double sab = 0, saa = 0, sbb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    REQUIRE_THAT(pearson_r(a, b), WithinAbs(sab / std::sqrt(saa * sbb), 1e-12));

    std::vector<double> flat(200, 0.7);
    REQUIRE_THROWS_AS(pearson_r(a, flat), UndefinedCorrelationError);
    std::vector<double> tiny(200, 0.0);
    tiny[5] = 1e-17;
    REQUIRE_THROWS_AS(pearson_r(tiny, a), UndefinedCorrelationError);
    REQUIRE_THROWS_AS(pearson_r(a, std::vector<double>(10, 1.0)), ShapeError);
}

TEST_CASE("field csv layout", "[fluid]") {
    const GridSpec g{2, 1};
    const auto obs = observables(initial_wavefunction(g, InitialForm::PaperLiteral));
    const auto path = std::filesystem::temp_directory_path() / "qfluid_test_fields.csv";
    write_fields_csv(path, g, obs);
    std::ifstream is(path);
    std::string line;
    std::getline(is, line);
    REQUIRE(line == "x,y,rho,jx,jy");
    std::size_t rows = 0;
    while (std::getline(is, line)) {
        ++rows;
    }
    REQUIRE(rows == g.size());
    std::filesystem::remove(path);
}

TEST_CASE("momentum density matches the analytic gradient", "[fluid][oracle]") {
    const GridSpec g{5, 5};
    // psi = sum a_q e^{i(qx x + qy y)}, so grad psi = sum i q a_q e^{...}
    const std::vector<std::tuple<cd, int, int>> modes{
        {cd{1.2, 0.1}, 0, 0}, {cd{0.4, -0.3}, 1, 0}, {cd{-0.2, 0.5}, 2, -1}, {cd{0.3, 0.2}, -1, 3}};
    auto eval = [&](double x, double y, int which) {
        cd s{0.0};
        for (const auto &[a, qx, qy] : modes) {
            const cd e = a * std::exp(cd{0.0, qx * x + qy * y});
            s += which == 0 ? e : cd{0.0, static_cast<double>(which == 1 ? qx : qy)} * e;
        }
        return s;
    };
    const auto f = make(g, [&](double x, double y) { return eval(x, y, 0); });
    const auto obs = observables(f);
    for (std::size_t l = 0; l < g.ny_points(); ++l) {
        for (std::size_t k = 0; k < g.nx_points(); ++k) {
            const double x = g.x(k), y = g.y(l);
            const cd psi = eval(x, y, 0);
            const auto m = g.index(k, l);
            REQUIRE_THAT(obs.jx[m], WithinAbs(std::imag(std::conj(psi) * eval(x, y, 1)), 1e-10));
            REQUIRE_THAT(obs.jy[m], WithinAbs(std::imag(std::conj(psi) * eval(x, y, 2)), 1e-10));
        }
    }
}
