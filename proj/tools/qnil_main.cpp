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

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qnil/qnil.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitDomain = 2;

using Json = nlohmann::ordered_json;

struct StateDeleter {
    void operator()(qnil_state *s) const {
        qnil_state_free(s);
    }
};
struct ReportDeleter {
    void operator()(qnil_report *r) const {
        qnil_report_free(r);
    }
};

int emit_error(const std::string &name, const std::string &message, int exit_code, int line = 0, int column = 0) {
    Json j{{"error", name}, {"message", message}};
    if (line > 0) {
        j["line"] = line;
        j["column"] = column;
    }
    std::cout << j.dump(2) << "\n";
    return exit_code;
}

int emit_status(qnil_status status) {
    int line = 0;
    int column = 0;
    qnil_last_error_position(&line, &column);
    int code = qnil_status_is_parse_error(status) ? kExitParse : kExitDomain;
    return emit_error(qnil_status_name(status), qnil_last_error(), code, line, column);
}

std::string shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

bool parse_double(const std::string &text, double &out) {
    const char *first = text.data();
    const char *last = first + text.size();
    auto res = std::from_chars(first, last, out);
    return res.ec == std::errc() && res.ptr == last;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qnil: graded-algebra entanglement calculator"};
    app.set_version_flag("--version", std::string(qnil_version()));

    std::string command;
    std::string path;
    std::string tolerance_text;
    bool raw = false;
    bool json = false;
    std::vector<int> pair;
    std::vector<int> split;

    app.add_option("command", command,
                   "tangle2 | wronskian | factor | sdet | stau | ber | norm | squbit-norm | sectors")
        ->required()
        ->check(CLI::IsMember(
            {"tangle2", "wronskian", "factor", "sdet", "stau", "ber", "norm", "squbit-norm", "sectors"}));
    app.add_option("file", path, "state file, '-' for standard input")->required();
    app.add_option("--tolerance", tolerance_text, "zero tolerance (default: $QNIL_TOLERANCE or 1e-12)");
    app.add_flag("--raw", raw, "print only the body as a bare number");
    app.add_flag("--json", json, "print the JSON report (default)");
    app.add_option("--pair", pair, "wronskian qubit pair, 1-based")->expected(2)->delimiter(',');
    app.add_option("--split", split, "factor: 1-based qubits of the left block")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        return emit_error("UsageError", e.what(), kExitParse);
    }

    qnil_run_options options = qnil_run_options_default();
    if (tolerance_text.empty()) {
        if (const char *env = std::getenv("QNIL_TOLERANCE"); env != nullptr && *env != '\0') {
            tolerance_text = env;
        }
    }
    if (!tolerance_text.empty()) {
        double t = 0;
        if (!parse_double(tolerance_text, t) || !(t >= 0) || t > 1) {
            return emit_error("UsageError", "tolerance must be a number in [0, 1], got '" + tolerance_text + "'",
                              kExitParse);
        }
        options.tolerance = t;
    }
    if (!pair.empty()) {
        options.pair_i = pair[0];
        options.pair_j = pair[1];
    }
    if (!split.empty()) {
        options.split = split.data();
        options.split_len = split.size();
    }

    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            return emit_error("IOError", "cannot read '" + path + "'", kExitParse);
        }
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }

    qnil_state *raw_state = nullptr;
    if (qnil_status st = qnil_state_parse(text.c_str(), options.tolerance, &raw_state); st != QNIL_OK) {
        return emit_status(st);
    }
    std::unique_ptr<qnil_state, StateDeleter> state(raw_state);

    qnil_report *raw_report = nullptr;
    if (qnil_status st = qnil_run(state.get(), command.c_str(), &options, &raw_report); st != QNIL_OK) {
        return emit_status(st);
    }
    std::unique_ptr<qnil_report, ReportDeleter> report(raw_report);

    if (raw && !json) {
        double re = 0;
        double im = 0;
        qnil_report_body(report.get(), &re, &im);
        if (im == 0) {
            std::cout << shortest(re) << "\n";
        } else {
            std::cout << shortest(re) << (im < 0 ? "" : "+") << shortest(im) << "i\n";
        }
        return kExitOk;
    }
    std::cout << Json::parse(qnil_report_json(report.get())).dump(2) << "\n";
    return kExitOk;
}
