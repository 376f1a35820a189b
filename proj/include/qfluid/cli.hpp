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
 * Run configuration and the batch subcommands behind the `qfluid` tool.
 *
 * Config files hold one `key = value` per line; `#` starts a comment.
 * Command-line overrides are applied after the file.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qfluid/fluid.hpp"
#include "qfluid/tradeoff.hpp"

namespace qfluid {

/// One requested evolution time. `label` is the file-name tag.
struct TimePoint {
    std::string label;
    double seconds{0.0};
    std::optional<int> exponent_p;
};

/// Accepts "0", "pi/4", "pi/2" or a raw non-negative real.
TimePoint parse_time_point(std::string_view text);

struct RunConfig {
    std::size_t nx_qubits{5};
    std::size_t ny_qubits{5};
    std::vector<TimePoint> times{parse_time_point("0"), parse_time_point("pi/4"),
                                 parse_time_point("pi/2")};
    InitialForm initial_form{InitialForm::PaperLiteral};
    /// Empty means exact transform.
    std::optional<std::size_t> aqft_b{2};
    double epsilon_over_pi{0.125};
    /// Time exponent used by the analytic sweeps (scaling, tradeoff).
    int time_exponent_p{1};
    bool compensate{true};
    bool periodic_removal{true};

    bool noise{true};
    double fidelity_1q{0.9997};
    double fidelity_2q{0.9967};
    std::size_t trajectories{200};
    /// Worker threads for trajectories; 0 uses the hardware concurrency.
    std::size_t threads{0};

    std::size_t n_min{4};
    std::size_t n_max{64};
    std::size_t empirical_max_n{12};
    Normalization normalization{Normalization::Bounded};

    std::filesystem::path output_dir{"qfluid_out"};
    std::uint64_t seed{20260101};
    bool dump_circuit{false};

    /// Throws ConfigError naming the first bad field.
    void validate() const;
    [[nodiscard]] ScalingConfig scaling() const;
};

/// Applies one key/value pair; unknown keys and malformed values throw
/// ConfigError.
void apply_setting(RunConfig &cfg, std::string_view key, std::string_view value);

/// Parses a config file's text into key/value pairs in file order.
std::vector<std::pair<std::string, std::string>> parse_config_text(std::string_view text);

RunConfig load_config(const std::filesystem::path &path);

/// Writes ideal/, origin/ and exp/ field CSVs per time point plus metrics.json.
void cmd_simulate(const RunConfig &cfg);

/// Writes scaling.csv, fits.json and pins.json.
void cmd_scaling(const RunConfig &cfg);

/// Writes tradeoff.csv and equilibrium.json. With `curves_csv`, the
/// columns n, algorithmic, hardware of that file replace the computed curves.
/// Returns false when the crossing is ambiguous.
bool cmd_tradeoff(const RunConfig &cfg, const std::optional<std::filesystem::path> &curves_csv = {});

/// Prints the check table; writes validation.json when `out` is given.
/// Returns true iff every check passed.
bool cmd_validate(bool inject_fault, const std::optional<std::filesystem::path> &out);

/// Entry point of the `qfluid` executable. Exit codes: 0 success,
/// 1 failed invariant or analysis, 2 usage or configuration error.
int run_cli(int argc, char **argv);

} // namespace qfluid
