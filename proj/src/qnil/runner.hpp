// Copyright 2026 The qnil Authors
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qnil/json_io.hpp"
#include "qnil/state.hpp"

namespace qnil::cli {

struct RunOptions {
    double tolerance = kDefaultZeroTolerance;
    /// Qubit pair for `wronskian`.
    int pair_i = 1;
    int pair_j = 2;
    /// Left block for `factor`.
    std::vector<int> split = {1};
};

struct RunReport {
    std::string command;
    std::string measure;
    std::string state_kind;
    Multivector value;  // body + soul of the result
    Json details;
    std::string input_digest;
    double tolerance = kDefaultZeroTolerance;
};

/// tangle2, wronskian, factor, sdet, stau, ber, norm, squbit-norm, sectors.
const std::vector<std::string> &commands();

/// Evaluates one command. Library errors propagate as qnil::Error.
RunReport run(const State &state, std::string_view command, const RunOptions &options,
              std::string input_digest = {});

/// {"command","measure","state_kind","body":{"re","im"},"soul":mv,"details",
///  "input_digest","tolerance"}
Json report_to_json(const RunReport &report);

/// "sha256:<hex>" of the given bytes.
std::string digest(std::string_view bytes);

}  // namespace qnil::cli
