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

#include "qnil/qnil.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "qnil/errors.hpp"
#include "qnil/expr.hpp"
#include "qnil/json_io.hpp"
#include "qnil/runner.hpp"
#include "qnil/state.hpp"

struct qnil_state {
    qnil::State state;
    std::string source;
};

struct qnil_report {
    qnil::cli::RunReport report;
    std::string json;
};

struct qnil_multivector {
    qnil::Multivector value;
};

namespace {

thread_local std::string g_last_error;
thread_local int g_last_line = 0;
thread_local int g_last_column = 0;

qnil_status status_of(qnil::ErrorKind kind) {
    switch (kind) {
        case qnil::ErrorKind::kParse:
            return QNIL_PARSE_ERROR;
        case qnil::ErrorKind::kArity:
            return QNIL_ARITY_ERROR;
        case qnil::ErrorKind::kUniverse:
            return QNIL_UNIVERSE_ERROR;
        case qnil::ErrorKind::kSector:
            return QNIL_SECTOR_ERROR;
        case qnil::ErrorKind::kParity:
            return QNIL_PARITY_ERROR;
        case qnil::ErrorKind::kBody:
            return QNIL_BODY_ERROR;
        case qnil::ErrorKind::kNotInvertible:
            return QNIL_NOT_INVERTIBLE_ERROR;
        case qnil::ErrorKind::kShape:
            return QNIL_SHAPE_ERROR;
        case qnil::ErrorKind::kIndex:
            return QNIL_INDEX_ERROR;
        case qnil::ErrorKind::kSplit:
            return QNIL_SPLIT_ERROR;
        case qnil::ErrorKind::kRange:
            return QNIL_RANGE_ERROR;
        case qnil::ErrorKind::kInvalidArgument:
            return QNIL_INVALID_ARGUMENT;
    }
    return QNIL_INTERNAL_ERROR;
}

template <typename F>
qnil_status guarded(F &&f) {
    g_last_error.clear();
    g_last_line = 0;
    g_last_column = 0;
    try {
        f();
        return QNIL_OK;
    } catch (const qnil::ParseError &e) {
        g_last_error = e.what();
        g_last_line = e.line();
        g_last_column = e.column();
        return QNIL_PARSE_ERROR;
    } catch (const qnil::Error &e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const nlohmann::json::exception &e) {
        g_last_error = std::string("malformed JSON: ") + e.what();
        return QNIL_INVALID_ARGUMENT;
    } catch (const std::bad_alloc &) {
        g_last_error = "out of memory";
        return QNIL_INTERNAL_ERROR;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return QNIL_INTERNAL_ERROR;
    } catch (...) {
        g_last_error = "unknown failure";
        return QNIL_INTERNAL_ERROR;
    }
}

char *dup_string(const std::string &s) {
    char *out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool ok, const char *what) {
    if (!ok) {
        qnil::fail(qnil::ErrorKind::kInvalidArgument, what);
    }
}

}  // namespace

extern "C" {

const char *qnil_version(void) {
    return "1.0.0";
}

const char *qnil_status_name(qnil_status status) {
    switch (status) {
        case QNIL_OK:
            return "Ok";
        case QNIL_INTERNAL_ERROR:
            return "InternalError";
        default:
            break;
    }
    if (status > QNIL_OK && status <= QNIL_INVALID_ARGUMENT) {
        return qnil::error_kind_name(static_cast<qnil::ErrorKind>(status - 1));
    }
    return "UnknownStatus";
}

const char *qnil_last_error(void) {
    return g_last_error.c_str();
}

void qnil_last_error_position(int *line, int *column) {
    if (line != nullptr) {
        *line = g_last_line;
    }
    if (column != nullptr) {
        *column = g_last_column;
    }
}

int qnil_status_is_parse_error(qnil_status status) {
    return status == QNIL_PARSE_ERROR || status == QNIL_ARITY_ERROR ? 1 : 0;
}

void qnil_string_free(char *s) {
    delete[] s;
}

qnil_run_options qnil_run_options_default(void) {
    static const int kSplit[1] = {1};
    return qnil_run_options{qnil::kDefaultZeroTolerance, 1, 2, kSplit, 1};
}

qnil_status qnil_state_parse(const char *text, double tolerance, qnil_state **out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        auto *s = new qnil_state{qnil::parse_state(text, tolerance), text};
        *out = s;
    });
}

qnil_status qnil_state_from_json(const char *json, double tolerance, qnil_state **out) {
    return guarded([&] {
        require(json != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        auto *s = new qnil_state{qnil::state_from_json(qnil::Json::parse(json), tolerance), json};
        *out = s;
    });
}

qnil_status qnil_state_to_json(const qnil_state *state, char **out) {
    return guarded([&] {
        require(state != nullptr && out != nullptr, "null argument");
        *out = dup_string(qnil::state_to_json(state->state).dump());
    });
}

const char *qnil_state_kind(const qnil_state *state) {
    return state == nullptr ? "" : qnil::state_kind(state->state);
}

void qnil_state_free(qnil_state *state) {
    delete state;
}

qnil_status qnil_expr_normalize(const char *text, char **out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = dup_string(qnil::expr::print(qnil::expr::parse(text)));
    });
}

qnil_status qnil_run(const qnil_state *state, const char *command, const qnil_run_options *options,
                     qnil_report **out) {
    return guarded([&] {
        require(state != nullptr && command != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        qnil_run_options o = options != nullptr ? *options : qnil_run_options_default();
        qnil::cli::RunOptions ro;
        ro.tolerance = o.tolerance;
        ro.pair_i = o.pair_i;
        ro.pair_j = o.pair_j;
        require(o.split != nullptr || o.split_len == 0, "null split with nonzero length");
        ro.split.assign(o.split, o.split + o.split_len);
        auto report = qnil::cli::run(state->state, command, ro, qnil::cli::digest(state->source));
        std::string json = qnil::cli::report_to_json(report).dump();
        *out = new qnil_report{std::move(report), std::move(json)};
    });
}

void qnil_report_body(const qnil_report *report, double *re, double *im) {
    qnil::Complex b = report == nullptr ? qnil::Complex{} : qnil::body(report->report.value);
    if (re != nullptr) {
        *re = b.real();
    }
    if (im != nullptr) {
        *im = b.imag();
    }
}

const char *qnil_report_json(const qnil_report *report) {
    return report == nullptr ? "" : report->json.c_str();
}

void qnil_report_free(qnil_report *report) {
    delete report;
}

qnil_status qnil_multivector_from_json(const char *json, qnil_multivector **out) {
    return guarded([&] {
        require(json != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        *out = new qnil_multivector{qnil::multivector_from_json(qnil::Json::parse(json))};
    });
}

qnil_status qnil_multivector_to_json(const qnil_multivector *m, char **out) {
    return guarded([&] {
        require(m != nullptr && out != nullptr, "null argument");
        *out = dup_string(qnil::multivector_to_json(m->value).dump());
    });
}

qnil_status qnil_multivector_mul(const qnil_multivector *a, const qnil_multivector *b, qnil_multivector **out) {
    return guarded([&] {
        require(a != nullptr && b != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        *out = new qnil_multivector{qnil::mul(a->value, b->value)};
    });
}

qnil_status qnil_multivector_add(const qnil_multivector *a, const qnil_multivector *b, qnil_multivector **out) {
    return guarded([&] {
        require(a != nullptr && b != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        *out = new qnil_multivector{a->value + b->value};
    });
}

qnil_status qnil_multivector_sharp(const qnil_multivector *a, qnil_multivector **out) {
    return guarded([&] {
        require(a != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        *out = new qnil_multivector{qnil::sharp(a->value)};
    });
}

qnil_status qnil_multivector_star(const qnil_multivector *a, qnil_multivector **out) {
    return guarded([&] {
        require(a != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        *out = new qnil_multivector{qnil::star(a->value)};
    });
}

qnil_status qnil_multivector_invert(const qnil_multivector *a, qnil_multivector **out) {
    return guarded([&] {
        require(a != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        *out = new qnil_multivector{qnil::invert(a->value)};
    });
}

void qnil_multivector_body(const qnil_multivector *a, double *re, double *im) {
    qnil::Complex b = a == nullptr ? qnil::Complex{} : qnil::body(a->value);
    if (re != nullptr) {
        *re = b.real();
    }
    if (im != nullptr) {
        *im = b.imag();
    }
}

void qnil_multivector_free(qnil_multivector *m) {
    delete m;
}

}  // extern "C"
