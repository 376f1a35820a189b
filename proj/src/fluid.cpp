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
#include "qfluid/fluid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <mutex>
#include <numbers>
#include <string>

#include "qfluid/error.hpp"
#include "qfluid/format.hpp"

namespace qfluid {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// FFTW planning is not thread-safe; execution on distinct arrays is.
std::mutex g_fftw_planner;

/// Unnormalized in-place 2D DFT over a row-major [ny][nx] array.
void fft2d(std::vector<Complex> &data, const GridSpec &grid, int sign) {
    auto *ptr = reinterpret_cast<fftw_complex *>(data.data());
    fftw_plan plan = nullptr;
    {
        std::lock_guard<std::mutex> lock(g_fftw_planner);
        plan = fftw_plan_dft_2d(static_cast<int>(grid.ny_points()),
                                static_cast<int>(grid.nx_points()), ptr, ptr, sign,
                                FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(g_fftw_planner);
        fftw_destroy_plan(plan);
    }
}

/// Signed mode number of FFT bin `m` out of `n`.
double mode(std::size_t m, std::size_t n) {
    return m < n / 2 ? static_cast<double>(m) : static_cast<double>(m) - static_cast<double>(n);
}

/// Spectral d/dx (axis 0) or d/dy (axis 1). The Nyquist bin is zeroed so the
/// derivative of a real field stays real.
std::vector<Complex> spectral_derivative(std::vector<Complex> f, const GridSpec &grid,
                                         int axis) {
    const std::size_t nx = grid.nx_points();
    const std::size_t ny = grid.ny_points();
    fft2d(f, grid, FFTW_FORWARD);
    const double inv = 1.0 / static_cast<double>(nx * ny);
    for (std::size_t l = 0; l < ny; ++l) {
        for (std::size_t k = 0; k < nx; ++k) {
            const std::size_t m = axis == 0 ? k : l;
            const std::size_t n = axis == 0 ? nx : ny;
            // The box has length 2 pi, so mode numbers are wavenumbers.
            const double kk = (2 * m == n) ? 0.0 : mode(m, n);
            f[grid.index(k, l)] *= kI * kk * inv;
        }
    }
    fft2d(f, grid, FFTW_BACKWARD);
    return f;
}

} // namespace

double GridSpec::dx() const noexcept { return 2.0 * kPi / static_cast<double>(nx_points()); }
double GridSpec::dy() const noexcept { return 2.0 * kPi / static_cast<double>(ny_points()); }
double GridSpec::x(std::size_t k) const noexcept { return -kPi + static_cast<double>(k) * dx(); }
double GridSpec::y(std::size_t l) const noexcept { return -kPi + static_cast<double>(l) * dy(); }

WaveField WaveField::from_values(GridSpec grid, std::vector<Complex> values) {
    if (values.size() != grid.size()) {
        throw ShapeError("field has " + std::to_string(values.size()) + " values for a " +
                         std::to_string(grid.size()) + "-point grid");
    }
    double sq = 0.0;
    for (const auto &v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw NumericError("non-finite field value");
        }
        sq += std::norm(v);
    }
    return {grid, std::move(values), std::sqrt(sq)};
}

InitialForm parse_initial_form(std::string_view name) {
    if (name == "paper_literal") {
        return InitialForm::PaperLiteral;
    }
    if (name == "density_matched") {
        return InitialForm::DensityMatched;
    }
    throw ConfigError("initial_form", "expected paper_literal or density_matched, got '" +
                                          std::string(name) + "'");
}

std::string_view initial_form_name(InitialForm form) noexcept {
    return form == InitialForm::PaperLiteral ? "paper_literal" : "density_matched";
}

WaveField initial_wavefunction(const GridSpec &grid, InitialForm form) {
    const double a = form == InitialForm::PaperLiteral ? 1.0 : 0.5;
    std::vector<Complex> v(grid.size());
    for (std::size_t l = 0; l < grid.ny_points(); ++l) {
        const double y = grid.y(l);
        for (std::size_t k = 0; k < grid.nx_points(); ++k) {
            v[grid.index(k, l)] = std::exp(Complex{-a * y * y, grid.x(k)});
        }
    }
    return WaveField::from_values(grid, std::move(v));
}

Statevector encode(const WaveField &field) {
    if (field.values.size() != field.grid.size()) {
        throw ShapeError("field values do not match its grid");
    }
    return Statevector::from_amplitudes(field.values).state;
}

WaveField decode(const Statevector &state, const GridSpec &grid, double stored_norm) {
    if (state.size() != grid.size()) {
        throw ShapeError("state of " + std::to_string(state.num_qubits()) +
                         " qubits does not match a " + std::to_string(grid.num_qubits()) +
                         "-qubit grid");
    }
    std::vector<Complex> v(state.amplitudes().begin(), state.amplitudes().end());
    for (auto &a : v) {
        a *= stored_norm;
    }
    return {grid, std::move(v), stored_norm};
}

std::vector<double> density(const WaveField &field) {
    std::vector<double> rho(field.values.size());
    std::transform(field.values.begin(), field.values.end(), rho.begin(),
                   [](const Complex &v) { return std::norm(v); });
    return rho;
}

std::pair<std::vector<double>, std::vector<double>> momentum(const WaveField &field) {
    const auto &psi = field.values;
    std::vector<Complex> psi_conj(psi.size());
    std::transform(psi.begin(), psi.end(), psi_conj.begin(),
                   [](const Complex &v) { return std::conj(v); });

    double scale = 0.0;
    for (const auto &v : psi) {
        scale = std::max(scale, std::norm(v));
    }
    const double tol = 1e-8 * std::max(1.0, scale);

    auto component = [&](int axis) {
        const auto d_psi = spectral_derivative(psi, field.grid, axis);
        const auto d_psi_conj = spectral_derivative(psi_conj, field.grid, axis);
        std::vector<double> j(psi.size());
        for (std::size_t m = 0; m < psi.size(); ++m) {
            const Complex v = 0.5 * kI * (psi[m] * d_psi_conj[m] - psi_conj[m] * d_psi[m]);
            if (std::abs(v.imag()) > tol) {
                throw NumericError("momentum density has imaginary residue " +
                                   format_significant(v.imag(), 3));
            }
            j[m] = v.real();
        }
        return j;
    };
    return {component(0), component(1)};
}

FlowObservables observables(const WaveField &field) {
    auto [jx, jy] = momentum(field);
    return {density(field), std::move(jx), std::move(jy)};
}

double total_mass(std::span<const double> rho, const GridSpec &grid) {
    double s = 0.0;
    for (auto r : rho) {
        s += r;
    }
    return s * grid.dx() * grid.dy();
}

WaveField classical_evolve(const WaveField &field, double t) {
    const auto &grid = field.grid;
    const std::size_t nx = grid.nx_points();
    const std::size_t ny = grid.ny_points();
    std::vector<Complex> f = field.values;
    fft2d(f, grid, FFTW_FORWARD);
    const double inv = 1.0 / static_cast<double>(nx * ny);
    for (std::size_t l = 0; l < ny; ++l) {
        const double ky = mode(l, ny);
        for (std::size_t k = 0; k < nx; ++k) {
            const double kx = mode(k, nx);
            f[grid.index(k, l)] *= std::exp(Complex{0.0, -0.5 * (kx * kx + ky * ky) * t}) * inv;
        }
    }
    fft2d(f, grid, FFTW_BACKWARD);
    return {grid, std::move(f), field.stored_norm};
}

double pearson_r(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.empty()) {
        throw ShapeError("pearson_r needs two non-empty arrays of equal size");
    }
    const auto n = static_cast<double>(a.size());
    double ma = 0.0;
    double mb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double sab = 0.0;
    double saa = 0.0;
    double sbb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - ma;
        const double db = b[i] - mb;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    // Spread at rounding level (e.g. a momentum component that vanishes
    // analytically) carries no signal and counts as constant.
    auto flat = [n](std::span<const double> v, double ss) {
        double scale = 0.0;
        for (auto x : v) {
            scale = std::max(scale, std::abs(x));
        }
        return std::sqrt(ss / n) <= 1e-12 * std::max(1.0, scale);
    };
    if (flat(a, saa) || flat(b, sbb)) {
        throw UndefinedCorrelationError("pearson_r of a constant array");
    }
    return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

void write_fields_csv(const std::filesystem::path &path, const GridSpec &grid,
                      const FlowObservables &obs) {
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw Error("cannot open " + path.string() + " for writing");
    }
    os << "x,y,rho,jx,jy\n";
    for (std::size_t l = 0; l < grid.ny_points(); ++l) {
        for (std::size_t k = 0; k < grid.nx_points(); ++k) {
            const std::size_t m = grid.index(k, l);
            os << format_significant(grid.x(k), 12) << ',' << format_significant(grid.y(l), 12)
               << ',' << format_significant(obs.rho[m], 12) << ','
               << format_significant(obs.jx[m], 12) << ',' << format_significant(obs.jy[m], 12)
               << '\n';
        }
    }
}

} // namespace qfluid
