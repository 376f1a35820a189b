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
 * Gate-list circuit representation, cost metrics and the executor.
 */
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qfluid/statevector.hpp"

namespace qfluid {

enum class GateKind { Hadamard, Rz, ControlledPhase, ZZEntangler, Swap };

/// Text mnemonic used by the circuit dump format.
std::string_view gate_mnemonic(GateKind kind) noexcept;

/**
 * @brief One gate. `q1` is meaningful only for two-qubit kinds, `angle` only
 * for Rz (exp(-i angle Z/2)), ControlledPhase (e^{i angle} on |11>) and
 * ZZEntangler (exp(-i angle ZZ)).
 */
struct GateOp {
    GateKind kind{GateKind::Hadamard};
    QubitIndex q0{0};
    QubitIndex q1{0};
    double angle{0.0};

    static GateOp hadamard(QubitIndex q) { return {GateKind::Hadamard, q, 0, 0.0}; }
    static GateOp rz(QubitIndex q, double theta) { return {GateKind::Rz, q, 0, theta}; }
    static GateOp controlled_phase(QubitIndex c, QubitIndex t, double theta) {
        return {GateKind::ControlledPhase, c, t, theta};
    }
    static GateOp zz_entangler(QubitIndex i, QubitIndex j, double phi) {
        return {GateKind::ZZEntangler, i, j, phi};
    }
    static GateOp swap(QubitIndex i, QubitIndex j) { return {GateKind::Swap, i, j, 0.0}; }

    [[nodiscard]] bool is_two_qubit() const noexcept {
        return kind == GateKind::ControlledPhase || kind == GateKind::ZZEntangler ||
               kind == GateKind::Swap;
    }
    [[nodiscard]] bool has_angle() const noexcept {
        return kind != GateKind::Hadamard && kind != GateKind::Swap;
    }

    friend bool operator==(const GateOp &, const GateOp &) = default;
};

/// `layout[b]` is the physical qubit that holds logical bit `b`.
using QubitLayout = std::vector<QubitIndex>;

QubitLayout identity_layout(std::size_t num_qubits);

/**
 * @brief Ordered gate list on a fixed number of qubits.
 *
 * The circuit also records how logical bits map onto physical qubits at its
 * input and output. A QFT built without terminal Swaps leaves its output
 * bit-reversed; that reversal lives in `output_layout()` rather than in
 * gates.
 */
class Circuit {
  public:
    explicit Circuit(std::size_t num_qubits, std::string label = {});

    /// Appends `op`, throwing IndexError if a qubit is out of range or a
    /// two-qubit gate names the same qubit twice.
    void append(const GateOp &op);

    void set_layouts(QubitLayout input, QubitLayout output);
    void set_label(std::string label) { label_ = std::move(label); }

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] const std::vector<GateOp> &ops() const noexcept { return ops_; }
    [[nodiscard]] const std::string &label() const noexcept { return label_; }
    [[nodiscard]] const QubitLayout &input_layout() const noexcept { return input_layout_; }
    [[nodiscard]] const QubitLayout &output_layout() const noexcept { return output_layout_; }
    [[nodiscard]] bool empty() const noexcept { return ops_.empty(); }

    /// Copy with every qubit q relabeled to `mapping[q]` inside a register of
    /// `new_num_qubits`. Layouts are carried along; qubits outside the image
    /// of `mapping` keep an identity layout.
    [[nodiscard]] Circuit remapped(std::span<const QubitIndex> mapping,
                                   std::size_t new_num_qubits) const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    std::size_t num_qubits_;
    std::vector<GateOp> ops_;
    std::string label_;
    QubitLayout input_layout_;
    QubitLayout output_layout_;
};

struct GateStats {
    std::size_t one_qubit_count{0};
    std::size_t two_qubit_count{0};
    std::size_t logical_depth{0};
    /// Two-qubit count on a linear nearest-neighbour chain with round-trip
    /// Swap routing: a gate over distance d costs 1 + 6(d-1), an explicit
    /// Swap 3 + 6(d-1).
    std::size_t lnn_routed_two_qubit_count{0};

    friend bool operator==(const GateStats &, const GateStats &) = default;
};

/// Apply one gate through the statevector kernels.
void apply_gate(Statevector &state, const GateOp &op);

/// Run `circuit` on `state` in list order. Throws ShapeError on a qubit-count
/// mismatch.
Statevector execute(const Circuit &circuit, Statevector state);
void execute_in_place(const Circuit &circuit, Statevector &state);

/// Routing surcharge model cost of one two-qubit gate (0 for single-qubit).
std::size_t lnn_routed_cost(const GateOp &op) noexcept;

GateStats stats(const Circuit &circuit);

/// ASAP layering: each entry lists op indices sharing one depth layer.
std::vector<std::vector<std::size_t>> depth_layers(const Circuit &circuit);

/// `a` then `b`. Throws ShapeError on differing qubit counts and LayoutError
/// when `a`'s output layout is not `b`'s input layout.
Circuit concatenate(const Circuit &a, const Circuit &b);

/// Line-oriented dump: `#` header lines for label, qubit count and layouts,
/// then one `KIND q0 [q1] [angle]` line per gate, angles at 17 significant
/// digits.
std::string to_text(const Circuit &circuit);
Circuit parse_text(std::string_view text);

} // namespace qfluid
