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
 * Wave-function view of a 2D potential flow on the periodic box [-pi, pi)^2:
 * encoding onto a statevector, density and momentum observables (hbar = m =
 * 1), the classical spectral propagator, and field comparison.
 *
 * Grid values are stored x-fastest: entry k + Nx*l holds psi(x_k, y_l), which
 * is also the basis index of that point in the encoded state.
 */
#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "qfluid/statevector.hpp"

namespace qfluid {

struct GridSpec {
    std::size_t nx_qubits{5};
    std::size_t ny_qubits{5};

    [[nodiscard]] std::size_t nx_points() const noexcept { return std::size_t{1} << nx_qubits; }
    [[nodiscard]] std::size_t ny_points() const noexcept { return std::size_t{1} << ny_qubits; }
    [[nodiscard]] std::size_t size() const noexcept { return nx_points() * ny_points(); }
    [[nodiscard]] std::size_t num_qubits() const noexcept { return nx_qubits + ny_qubits; }
    [[nodiscard]] double dx() const noexcept;
    [[nodiscard]] double dy() const noexcept;
    [[nodiscard]] double x(std::size_t k) const noexcept;
    [[nodiscard]] double y(std::size_t l) const noexcept;
    [[nodiscard]] std::size_t index(std::size_t k, std::size_t l) const noexcept {
        return k + nx_points() * l;
    }

    friend bool operator==(const GridSpec &, const GridSpec &) = default;
};

struct WaveField {
    GridSpec grid;
    std::vector<Complex> values;
    /// Euclidean norm of `values` (no cell-area weight).
    double stored_norm{0.0};

    /// Builds a field and records its norm. Throws ShapeError on a size
    /// mismatch and NumericError on non-finite entries.
    static WaveField from_values(GridSpec grid, std::vector<Complex> values);
};

struct FlowObservables {
    std::vector<double> rho;
    std::vector<double> jx;
    std::vector<double> jy;
};

enum class InitialForm {
    /// psi = exp(-y^2 + i x), density exp(-2 y^2).
    PaperLiteral,
    /// psi = exp(-y^2/2 + i x), density exp(-y^2).
    DensityMatched,
};

InitialForm parse_initial_form(std::string_view name);
std::string_view initial_form_name(InitialForm form) noexcept;

WaveField initial_wavefunction(const GridSpec &grid, InitialForm form);

/// Unit-norm state with amplitude psi(x_k, y_l) / ||psi|| at index k + Nx*l.
/// Throws DegenerateStateError for an all-zero field.
Statevector encode(const WaveField &field);

/// Inverse of encode: amplitudes scaled back by `stored_norm`.
WaveField decode(const Statevector &state, const GridSpec &grid, double stored_norm);

/// |psi|^2.
std::vector<double> density(const WaveField &field);

/// J = (i/2)(psi grad psi* - psi* grad psi) with spectral derivatives.
/// Imaginary residue above 1e-8 (relative to the field scale) throws
/// NumericError.
std::pair<std::vector<double>, std::vector<double>> momentum(const WaveField &field);

FlowObservables observables(const WaveField &field);

/// Sum rho * dx * dy.
double total_mass(std::span<const double> rho, const GridSpec &grid);

/// Fourier mode (kx, ky) multiplied by exp(-i (kx^2 + ky^2) t / 2).
WaveField classical_evolve(const WaveField &field, double t);

/// Pearson correlation of two equally sized arrays. Throws ShapeError on a
/// size mismatch and UndefinedCorrelationError if either is constant, i.e. its
/// standard deviation is below 1e-12 of max(1, max abs value).
double pearson_r(std::span<const double> a, std::span<const double> b);

/// Writes `x,y,rho,jx,jy` rows in grid order, 12 significant digits.
void write_fields_csv(const std::filesystem::path &path, const GridSpec &grid,
                      const FlowObservables &obs);

} // namespace qfluid
