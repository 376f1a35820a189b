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
 * Self-check suite over all modules at small sizes, plus a brute-force dense
 * unitary builder it uses as an oracle.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qfluid/circuit.hpp"

namespace qfluid {

/// Row-major 2^n x 2^n matrix of `circuit`, built gate by gate from local
/// matrices over physical qubits. Limited to 8 qubits.
std::vector<Complex> dense_unitary(const Circuit &circuit);

struct ValidationOptions {
    /// Test hook: perturb one Pauli coefficient before the reconstruction
    /// check so that it must fail.
    bool corrupt_decomposition{false};
    std::uint64_t seed{20260101};
};

struct CheckResult {
    std::string name;
    bool passed{false};
    std::string detail;
    double seconds{0.0};
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    [[nodiscard]] bool all_passed() const noexcept;
};

ValidationReport run_validation(const ValidationOptions &opts = {});

/// Fixed-width table, one row per check.
std::string format_table(const ValidationReport &report);

nlohmann::json to_json(const ValidationReport &report);

} // namespace qfluid
