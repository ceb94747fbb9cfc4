/*
   Copyright 2026 the itp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "itp/itp.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "checks.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "interlace.hpp"
#include "multipoly.hpp"
#include "tutte.hpp"

struct itp_graph {
    itp::LoopedGraph value;
};

struct itp_poly {
    itp::MultiPoly value;
};

namespace {

thread_local std::string g_last_error;

itp_status fail(itp_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
itp_status guarded(F&& body) {
    try {
        return body();
    } catch (const itp::parse_error& e) {
        return fail(ITP_ERR_PARSE, e.what());
    } catch (const itp::cap_exceeded& e) {
        return fail(ITP_ERR_CAP, e.what());
    } catch (const itp::exact_division_error& e) {
        return fail(ITP_ERR_INTERNAL, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(ITP_ERR_INVALID, e.what());
    } catch (const std::out_of_range& e) {
        return fail(ITP_ERR_INVALID, e.what());
    } catch (const std::bad_alloc&) {
        return fail(ITP_ERR_NOMEM, "out of memory");
    } catch (const std::exception& e) {
        return fail(ITP_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(ITP_ERR_INTERNAL, "unknown error");
    }
}

itp::MultiPoly compute_dispatch(const itp::LoopedGraph& g, const std::string& kind,
                                const std::string& method, const char* params_text,
                                unsigned threads) {
    using namespace itp;

    const bool has_params = params_text != nullptr;
    if (kind == "param_rank") {
        if (!has_params)
            throw std::invalid_argument("kind param_rank requires a parameter file");
    } else if (has_params) {
        throw std::invalid_argument("a parameter file is only valid with kind param_rank");
    }

    if (kind == "q") {
        if (method == "subset") return q_subset(g, threads);
        if (method == "recursive") return q_recursive(g);
        if (method == "section") return q_from_section(g);
        throw std::invalid_argument("kind q supports methods subset, recursive, section");
    }
    if (kind == "tutte_ia" || kind == "tutte_ias") {
        const BinaryMatroid m =
            kind == "tutte_ia" ? BinaryMatroid::from_ia(g) : BinaryMatroid::from_ias(g);
        if (method == "subset") return tutte_subset(m);
        if (method == "recursive")
            return param_rank_recursive(m,
                                        ParameterAssignment::uniform(m, MultiPoly::one(),
                                                                     MultiPoly::one()));
        throw std::invalid_argument("kind " + kind + " supports methods subset, recursive");
    }
    if (kind == "section_ia" || kind == "section_ias") {
        if (method != "section")
            throw std::invalid_argument("kind " + kind + " supports only method section");
        const BinaryMatroid m =
            kind == "section_ia" ? BinaryMatroid::from_ia(g) : BinaryMatroid::from_ias(g);
        return section_transversal(m, TransversalScheme::for_matroid(m),
                                   ParameterAssignment::symbolic(m));
    }
    if (kind == "param_rank") {
        const auto entries = parse_parameter_file(params_text);
        bool any_psi = false;
        for (const auto& e : entries) any_psi = any_psi || e.label.kind == LabelKind::psi;
        const BinaryMatroid m =
            any_psi ? BinaryMatroid::from_ias(g) : BinaryMatroid::from_ia(g);
        const ParameterAssignment asg = assignment_from_entries(m, entries);
        if (method == "subset") return param_rank_subset(m, asg);
        if (method == "recursive") return param_rank_recursive(m, asg);
        throw std::invalid_argument("kind param_rank supports methods subset, recursive");
    }
    throw std::invalid_argument("unknown kind: " + kind);
}

}  // namespace

extern "C" {

const char* itp_last_error(void) { return g_last_error.c_str(); }

void itp_string_free(char* s) { std::free(s); }
void itp_graph_free(itp_graph* g) { delete g; }
void itp_poly_free(itp_poly* p) { delete p; }

itp_status itp_graph_parse(const char* text, itp_graph** out) {
    return guarded([&]() -> itp_status {
        if (text == nullptr || out == nullptr)
            return fail(ITP_ERR_INVALID, "null argument");
        auto g = std::make_unique<itp_graph>();
        g->value = itp::LoopedGraph::parse(text);
        *out = g.release();
        return ITP_OK;
    });
}

itp_status itp_graph_read_file(const char* path, itp_graph** out) {
    return guarded([&]() -> itp_status {
        if (path == nullptr || out == nullptr)
            return fail(ITP_ERR_INVALID, "null argument");
        std::ifstream in(path);
        if (!in) return fail(ITP_ERR_PARSE, std::string("cannot open file: ") + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        auto g = std::make_unique<itp_graph>();
        g->value = itp::LoopedGraph::parse(buf.str());
        *out = g.release();
        return ITP_OK;
    });
}

size_t itp_graph_vertex_count(const itp_graph* g) {
    return g == nullptr ? 0 : g->value.vertex_count();
}

uint64_t itp_graph_fingerprint(const itp_graph* g) {
    return g == nullptr ? 0 : itp::graph_fingerprint(g->value);
}

itp_status itp_graph_to_text(const itp_graph* g, char** out) {
    return guarded([&]() -> itp_status {
        if (g == nullptr || out == nullptr) return fail(ITP_ERR_INVALID, "null argument");
        *out = copy_string(g->value.to_text());
        return ITP_OK;
    });
}

itp_status itp_compute(const itp_graph* g, const char* kind, const char* method,
                       const char* params_text, unsigned threads, itp_poly** out) {
    return guarded([&]() -> itp_status {
        if (g == nullptr || kind == nullptr || method == nullptr || out == nullptr)
            return fail(ITP_ERR_INVALID, "null argument");
        auto p = std::make_unique<itp_poly>();
        p->value = compute_dispatch(g->value, kind, method, params_text, threads);
        *out = p.release();
        return ITP_OK;
    });
}

itp_status itp_poly_to_text(const itp_poly* p, char** out) {
    return guarded([&]() -> itp_status {
        if (p == nullptr || out == nullptr) return fail(ITP_ERR_INVALID, "null argument");
        *out = copy_string(p->value.to_text());
        return ITP_OK;
    });
}

itp_status itp_poly_to_json(const itp_poly* p, char** out) {
    return guarded([&]() -> itp_status {
        if (p == nullptr || out == nullptr) return fail(ITP_ERR_INVALID, "null argument");
        *out = copy_string(p->value.to_json());
        return ITP_OK;
    });
}

itp_status itp_poly_eval_xy(const itp_poly* p, const char* x_rat, const char* y_rat,
                            char** value_out) {
    return guarded([&]() -> itp_status {
        if (p == nullptr || x_rat == nullptr || y_rat == nullptr || value_out == nullptr)
            return fail(ITP_ERR_INVALID, "null argument");
        const itp::Rat value =
            itp::q_evaluate(p->value, itp::parse_rational(x_rat), itp::parse_rational(y_rat));
        *value_out = copy_string(itp::rational_to_string(value));
        return ITP_OK;
    });
}

itp_status itp_check(const itp_graph* g, const char* suite, char** report_out, int* pass_out) {
    return guarded([&]() -> itp_status {
        if (g == nullptr || suite == nullptr || report_out == nullptr || pass_out == nullptr)
            return fail(ITP_ERR_INVALID, "null argument");
        const auto lines = itp::check_suite(g->value, suite);
        *report_out = copy_string(itp::render_check_lines(lines));
        *pass_out = itp::all_passed(lines) ? 1 : 0;
        return ITP_OK;
    });
}

itp_status itp_selfcheck(unsigned max_vertices, uint64_t seed, uint64_t random_extra,
                         char** report_out, int* pass_out) {
    return guarded([&]() -> itp_status {
        if (report_out == nullptr || pass_out == nullptr)
            return fail(ITP_ERR_INVALID, "null argument");
        const auto report = itp::selfcheck(max_vertices, seed, random_extra);
        *report_out = copy_string(report.render());
        *pass_out = report.all_passed() ? 1 : 0;
        return ITP_OK;
    });
}

}  // extern "C"
