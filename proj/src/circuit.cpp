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
#include "qfluid/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "qfluid/error.hpp"
#include "qfluid/format.hpp"

namespace qfluid {

namespace {

void check_layout(const QubitLayout &layout, std::size_t n, const char *what) {
    if (layout.size() != n) {
        throw ShapeError(std::string(what) + " layout size mismatch");
    }
    std::vector<bool> seen(n, false);
    for (auto q : layout) {
        if (q >= n || seen[q]) {
            throw IndexError(std::string(what) + " layout is not a permutation");
        }
        seen[q] = true;
    }
}

std::size_t distance(const GateOp &op) noexcept {
    return op.q0 > op.q1 ? op.q0 - op.q1 : op.q1 - op.q0;
}

} // namespace

std::string_view gate_mnemonic(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::Hadamard:
        return "H";
    case GateKind::Rz:
        return "RZ";
    case GateKind::ControlledPhase:
        return "CP";
    case GateKind::ZZEntangler:
        return "ZZ";
    case GateKind::Swap:
        return "SWAP";
    }
    return "?";
}

QubitLayout identity_layout(std::size_t num_qubits) {
    QubitLayout l(num_qubits);
    std::iota(l.begin(), l.end(), QubitIndex{0});
    return l;
}

Circuit::Circuit(std::size_t num_qubits, std::string label)
    : num_qubits_(num_qubits), label_(std::move(label)),
      input_layout_(identity_layout(num_qubits)),
      output_layout_(identity_layout(num_qubits)) {}

void Circuit::append(const GateOp &op) {
    if (op.q0 >= num_qubits_ || (op.is_two_qubit() && op.q1 >= num_qubits_)) {
        throw IndexError("gate qubit out of range for " + std::to_string(num_qubits_) +
                         "-qubit circuit");
    }
    if (op.is_two_qubit() && op.q0 == op.q1) {
        throw IndexError("two-qubit gate on coincident qubit " + std::to_string(op.q0));
    }
    GateOp stored = op;
    if (!op.is_two_qubit()) {
        stored.q1 = 0;
    }
    if (!op.has_angle()) {
        stored.angle = 0.0;
    }
    ops_.push_back(stored);
}

void Circuit::set_layouts(QubitLayout input, QubitLayout output) {
    check_layout(input, num_qubits_, "input");
    check_layout(output, num_qubits_, "output");
    input_layout_ = std::move(input);
    output_layout_ = std::move(output);
}

Circuit Circuit::remapped(std::span<const QubitIndex> mapping,
                          std::size_t new_num_qubits) const {
    if (mapping.size() != num_qubits_) {
        throw ShapeError("qubit mapping size mismatch");
    }
    std::vector<bool> used(new_num_qubits, false);
    for (auto q : mapping) {
        if (q >= new_num_qubits || used[q]) {
            throw IndexError("qubit mapping is not injective into the target register");
        }
        used[q] = true;
    }
    Circuit out(new_num_qubits, label_);
    for (auto op : ops_) {
        op.q0 = mapping[op.q0];
        if (op.is_two_qubit()) {
            op.q1 = mapping[op.q1];
        }
        out.append(op);
    }
    auto in = identity_layout(new_num_qubits);
    auto outl = identity_layout(new_num_qubits);
    for (std::size_t b = 0; b < num_qubits_; ++b) {
        in[mapping[b]] = mapping[input_layout_[b]];
        outl[mapping[b]] = mapping[output_layout_[b]];
    }
    out.set_layouts(std::move(in), std::move(outl));
    return out;
}

void apply_gate(Statevector &state, const GateOp &op) {
    switch (op.kind) {
    case GateKind::Hadamard:
        state.apply_hadamard(op.q0);
        break;
    case GateKind::Rz:
        state.apply_rz(op.q0, op.angle);
        break;
    case GateKind::ControlledPhase:
        state.apply_controlled_phase(op.q0, op.q1, op.angle);
        break;
    case GateKind::ZZEntangler:
        state.apply_zz_entangler(op.q0, op.q1, op.angle);
        break;
    case GateKind::Swap:
        state.apply_swap(op.q0, op.q1);
        break;
    }
}

void execute_in_place(const Circuit &circuit, Statevector &state) {
    if (circuit.num_qubits() != state.num_qubits()) {
        throw ShapeError("circuit has " + std::to_string(circuit.num_qubits()) +
                         " qubits, state has " + std::to_string(state.num_qubits()));
    }
    for (const auto &op : circuit.ops()) {
        apply_gate(state, op);
    }
}

Statevector execute(const Circuit &circuit, Statevector state) {
    execute_in_place(circuit, state);
    return state;
}

std::size_t lnn_routed_cost(const GateOp &op) noexcept {
    if (!op.is_two_qubit()) {
        return 0;
    }
    const std::size_t base = op.kind == GateKind::Swap ? 3 : 1;
    return base + 6 * (distance(op) - 1);
}

std::vector<std::vector<std::size_t>> depth_layers(const Circuit &circuit) {
    std::vector<std::size_t> next_free(circuit.num_qubits(), 0);
    std::vector<std::vector<std::size_t>> layers;
    const auto &ops = circuit.ops();
    for (std::size_t k = 0; k < ops.size(); ++k) {
        const auto &op = ops[k];
        std::size_t layer = next_free[op.q0];
        if (op.is_two_qubit()) {
            layer = std::max(layer, next_free[op.q1]);
        }
        if (layer == layers.size()) {
            layers.emplace_back();
        }
        layers[layer].push_back(k);
        next_free[op.q0] = layer + 1;
        if (op.is_two_qubit()) {
            next_free[op.q1] = layer + 1;
        }
    }
    return layers;
}

GateStats stats(const Circuit &circuit) {
    GateStats s;
    for (const auto &op : circuit.ops()) {
        if (op.is_two_qubit()) {
            ++s.two_qubit_count;
            s.lnn_routed_two_qubit_count += lnn_routed_cost(op);
        } else {
            ++s.one_qubit_count;
        }
    }
    s.logical_depth = depth_layers(circuit).size();
    return s;
}

Circuit concatenate(const Circuit &a, const Circuit &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ShapeError("cannot concatenate circuits on " + std::to_string(a.num_qubits()) +
                         " and " + std::to_string(b.num_qubits()) + " qubits");
    }
    if (a.output_layout() != b.input_layout()) {
        throw LayoutError("output layout of '" + a.label() +
                          "' does not match input layout of '" + b.label() + "'");
    }
    std::string label = a.label().empty()   ? b.label()
                        : b.label().empty() ? a.label()
                                            : a.label() + "+" + b.label();
    Circuit out(a.num_qubits(), std::move(label));
    for (const auto &op : a.ops()) {
        out.append(op);
    }
    for (const auto &op : b.ops()) {
        out.append(op);
    }
    out.set_layouts(a.input_layout(), b.output_layout());
    return out;
}

std::string to_text(const Circuit &circuit) {
    std::ostringstream os;
    auto layout_line = [&](const char *name, const QubitLayout &l) {
        os << "# " << name;
        for (auto q : l) {
            os << ' ' << q;
        }
        os << '\n';
    };
    os << "# label " << circuit.label() << '\n';
    os << "# qubits " << circuit.num_qubits() << '\n';
    layout_line("input_layout", circuit.input_layout());
    layout_line("output_layout", circuit.output_layout());
    for (const auto &op : circuit.ops()) {
        os << gate_mnemonic(op.kind) << ' ' << op.q0;
        if (op.is_two_qubit()) {
            os << ' ' << op.q1;
        }
        if (op.has_angle()) {
            os << ' ' << format_significant(op.angle, 17);
        }
        os << '\n';
    }
    return os.str();
}

namespace {

std::size_t parse_index(const std::string &tok) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
        throw ShapeError("bad qubit index '" + tok + "' in circuit text");
    }
    return v;
}

double parse_angle(const std::string &tok) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
        throw ShapeError("bad angle '" + tok + "' in circuit text");
    }
    return v;
}

} // namespace

Circuit parse_text(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    std::string label;
    std::size_t n = 0;
    bool have_n = false;
    QubitLayout in;
    QubitLayout out;
    std::vector<GateOp> ops;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "#") {
            std::string key;
            ls >> key;
            if (key == "label") {
                std::getline(ls, label);
                if (!label.empty() && label.front() == ' ') {
                    label.erase(0, 1);
                }
            } else if (key == "qubits") {
                std::string tok;
                ls >> tok;
                n = parse_index(tok);
                have_n = true;
            } else if (key == "input_layout" || key == "output_layout") {
                auto &dst = key == "input_layout" ? in : out;
                std::string tok;
                while (ls >> tok) {
                    dst.push_back(parse_index(tok));
                }
            }
            continue;
        }
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) {
            toks.push_back(tok);
        }
        auto need = [&](std::size_t k) {
            if (toks.size() != k) {
                throw ShapeError("wrong operand count for " + head + " in circuit text");
            }
        };
        if (head == "H") {
            need(1);
            ops.push_back(GateOp::hadamard(parse_index(toks[0])));
        } else if (head == "RZ") {
            need(2);
            ops.push_back(GateOp::rz(parse_index(toks[0]), parse_angle(toks[1])));
        } else if (head == "CP") {
            need(3);
            ops.push_back(GateOp::controlled_phase(parse_index(toks[0]), parse_index(toks[1]),
                                                   parse_angle(toks[2])));
        } else if (head == "ZZ") {
            need(3);
            ops.push_back(GateOp::zz_entangler(parse_index(toks[0]), parse_index(toks[1]),
                                               parse_angle(toks[2])));
        } else if (head == "SWAP") {
            need(2);
            ops.push_back(GateOp::swap(parse_index(toks[0]), parse_index(toks[1])));
        } else {
            throw ShapeError("unknown gate '" + head + "' in circuit text");
        }
    }
    if (!have_n) {
        throw ShapeError("circuit text lacks a '# qubits' header");
    }
    Circuit c(n, label);
    for (const auto &op : ops) {
        c.append(op);
    }
    if (!in.empty() || !out.empty()) {
        c.set_layouts(in.empty() ? identity_layout(n) : in,
                      out.empty() ? identity_layout(n) : out);
    }
    return c;
}

} // namespace qfluid
