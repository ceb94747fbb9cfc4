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

// Batch CLI over the itp C API. Polynomials go to stdout; the metadata
// block and diagnostics go to stderr so stdout stays byte-identical across
// runs and parallelism settings.
//
// Exit codes: 0 success / all checks passed, 1 check failure, 2 parse error,
// 3 enumeration cap exceeded, 4 invalid flag combination.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "itp/itp.h"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitInvalid = 4;

int exit_code_for(itp_status status) {
    switch (status) {
        case ITP_OK:
            return 0;
        case ITP_ERR_PARSE:
            return kExitParse;
        case ITP_ERR_CAP:
            return kExitCap;
        case ITP_ERR_INVALID:
            return kExitInvalid;
        default:
            return 1;
    }
}

[[nodiscard]] int report_error(itp_status status) {
    std::cerr << "error: " << itp_last_error() << "\n";
    return exit_code_for(status);
}

struct StringDeleter {
    void operator()(char* s) const { itp_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
    void operator()(itp_graph* g) const { itp_graph_free(g); }
};
using Graph = std::unique_ptr<itp_graph, GraphDeleter>;

struct PolyDeleter {
    void operator()(itp_poly* p) const { itp_poly_free(p); }
};
using Poly = std::unique_ptr<itp_poly, PolyDeleter>;

int run_compute(const std::string& input, const std::string& kind, const std::string& method,
                const std::string& params_path, const std::string& eval_arg,
                const std::string& format, unsigned threads) {
    Graph graph;
    {
        itp_graph* raw = nullptr;
        const itp_status st = itp_graph_read_file(input.c_str(), &raw);
        if (st != ITP_OK) return report_error(st);
        graph.reset(raw);
    }

    std::optional<std::string> params_text;
    if (!params_path.empty()) {
        std::ifstream in(params_path);
        if (!in) {
            std::cerr << "error: cannot open parameter file: " << params_path << "\n";
            return kExitParse;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        params_text = buf.str();
    }

    std::string eval_x, eval_y;
    if (!eval_arg.empty()) {
        if (kind != "q") {
            std::cerr << "error: --eval is only valid with --kind q\n";
            return kExitInvalid;
        }
        const auto comma = eval_arg.find(',');
        if (comma == std::string::npos || eval_arg.rfind("x=", 0) != 0 ||
            eval_arg.compare(comma + 1, 2, "y=") != 0) {
            std::cerr << "error: --eval expects x=<rational>,y=<rational>\n";
            return kExitInvalid;
        }
        eval_x = eval_arg.substr(2, comma - 2);
        eval_y = eval_arg.substr(comma + 3);
    }

    const auto start = std::chrono::steady_clock::now();
    Poly poly;
    {
        itp_poly* raw = nullptr;
        const itp_status st =
            itp_compute(graph.get(), kind.c_str(), method.c_str(),
                        params_text ? params_text->c_str() : nullptr, threads, &raw);
        if (st != ITP_OK) return report_error(st);
        poly.reset(raw);
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();

    if (!eval_arg.empty()) {
        char* value = nullptr;
        const itp_status st = itp_poly_eval_xy(poly.get(), eval_x.c_str(), eval_y.c_str(), &value);
        if (st != ITP_OK) return report_error(st);
        CString owned(value);
        if (format == "json")
            std::cout << "{\"value\": \"" << owned.get() << "\"}\n";
        else
            std::cout << owned.get() << "\n";
    } else {
        char* rendered = nullptr;
        const itp_status st = format == "json" ? itp_poly_to_json(poly.get(), &rendered)
                                               : itp_poly_to_text(poly.get(), &rendered);
        if (st != ITP_OK) return report_error(st);
        CString owned(rendered);
        std::cout << owned.get() << "\n";
    }

    std::cerr << "vertices: " << itp_graph_vertex_count(graph.get()) << "\n"
              << "kind: " << kind << "\n"
              << "method: " << method << "\n"
              << "wall: " << elapsed << " us\n";
    return 0;
}

int run_check(const std::string& input, const std::string& suite) {
    Graph graph;
    {
        itp_graph* raw = nullptr;
        const itp_status st = itp_graph_read_file(input.c_str(), &raw);
        if (st != ITP_OK) return report_error(st);
        graph.reset(raw);
    }
    char* report = nullptr;
    int pass = 0;
    const itp_status st = itp_check(graph.get(), suite.c_str(), &report, &pass);
    if (st != ITP_OK) return report_error(st);
    CString owned(report);
    std::cout << owned.get();
    return pass ? 0 : kExitCheckFailed;
}

int run_selfcheck(unsigned max_vertices, std::uint64_t seed, std::uint64_t random_extra) {
    char* report = nullptr;
    int pass = 0;
    const itp_status st = itp_selfcheck(max_vertices, seed, random_extra, &report, &pass);
    if (st != ITP_OK) return report_error(st);
    CString owned(report);
    std::cout << owned.get();
    return pass ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact interlace and parametrized Tutte polynomial engine"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "Compute a polynomial for one graph");
    std::string input, params_path, eval_arg;
    std::string kind = "q", method = "subset", format = "text";
    unsigned threads = 0;
    compute->add_option("--input", input, "Graph file")->required();
    compute->add_option("--kind", kind, "q|tutte_ia|tutte_ias|section_ia|section_ias|param_rank");
    compute->add_option("--method", method, "subset|recursive|section");
    compute->add_option("--params", params_path, "Parameter file (kind param_rank only)");
    compute->add_option("--eval", eval_arg, "Evaluate at x=<rational>,y=<rational> (kind q)");
    compute->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    compute->add_option("--threads", threads, "Workers for subset enumeration (0 = auto)");

    // check
    auto* check = app.add_subcommand("check", "Run cross-check identities on one graph");
    std::string check_input, suite = "all";
    check->add_option("--input", check_input, "Graph file")->required();
    check->add_option("--suite", suite, "methods|section|ias|identities|all");

    // selfcheck
    auto* selfcheck = app.add_subcommand("selfcheck", "Exhaustive small-graph identity sweep");
    unsigned max_vertices = 3;
    std::uint64_t seed = 1;
    std::uint64_t random_extra = 0;
    selfcheck->add_option("--max-vertices", max_vertices, "Vertex count (1..5)")->required();
    selfcheck->add_option("--seed", seed, "Seed for randomized extensions");
    selfcheck->add_option("--random-extra", random_extra, "Extra random graphs on 6-9 vertices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInvalid;
    }

    if (compute->parsed())
        return run_compute(input, kind, method, params_path, eval_arg, format, threads);
    if (check->parsed()) return run_check(check_input, suite);
    return run_selfcheck(max_vertices, seed, random_extra);
}
