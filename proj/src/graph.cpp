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

#include "graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace itp {

namespace {

bool valid_vertex_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.emplace_back(line.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

LoopedGraph LoopedGraph::create(std::vector<std::string> vertices,
                                const std::vector<std::string>& loops,
                                const std::vector<std::pair<std::string, std::string>>& edges) {
    LoopedGraph g;
    for (const auto& name : vertices) {
        if (!valid_vertex_name(name)) throw parse_error("invalid vertex name: '" + name + "'");
        if (std::find(g.names_.begin(), g.names_.end(), name) != g.names_.end())
            throw parse_error("duplicate vertex: " + name);
        g.names_.push_back(name);
    }
    const std::size_t n = g.names_.size();
    g.loops_.assign(n, 0);
    g.adj_.assign(n * n, 0);
    for (const auto& name : loops) g.loops_[g.index_of(name)] = 1;
    for (const auto& [a, b] : edges) {
        const std::size_t i = g.index_of(a), j = g.index_of(b);
        if (i == j) throw parse_error("self-edge: " + a + "-" + b);
        if (g.adj_[i * n + j]) throw parse_error("duplicate edge: " + a + "-" + b);
        g.set_edge(i, j, true);
    }
    return g;
}

std::size_t LoopedGraph::index_of(const std::string& name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw parse_error("unknown vertex: " + name);
    return static_cast<std::size_t>(it - names_.begin());
}

bool LoopedGraph::has_vertex(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::vector<std::size_t> LoopedGraph::neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < names_.size(); ++j) {
        if (j != i && adjacent(i, j)) out.push_back(j);
    }
    return out;
}

std::size_t LoopedGraph::degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t j = 0; j < names_.size(); ++j) {
        if (j != i && adjacent(i, j)) ++d;
    }
    return d;
}

std::vector<std::pair<std::size_t, std::size_t>> LoopedGraph::edge_indices() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        for (std::size_t j = i + 1; j < names_.size(); ++j) {
            if (adjacent(i, j)) out.emplace_back(i, j);
        }
    }
    return out;
}

BitMatrix LoopedGraph::adjacency_matrix() const {
    const std::size_t n = names_.size();
    BitMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (loops_[i]) a.set(i, i, true);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (adjacent(i, j)) {
                a.set(i, j, true);
                a.set(j, i, true);
            }
        }
    }
    return a;
}

LoopedGraph LoopedGraph::delete_vertex(const std::string& v) const {
    return delete_vertex_at(index_of(v));
}

LoopedGraph LoopedGraph::delete_vertex_at(std::size_t vi) const {
    if (vi >= names_.size()) throw std::out_of_range("delete_vertex: index out of range");
    const std::size_t n = names_.size();
    LoopedGraph g;
    g.names_.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (i != vi) g.names_.push_back(names_[i]);
    }
    g.loops_.assign(n - 1, 0);
    g.adj_.assign((n - 1) * (n - 1), 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == vi) continue;
        const std::size_t ii = i < vi ? i : i - 1;
        g.loops_[ii] = loops_[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == vi) continue;
            const std::size_t jj = j < vi ? j : j - 1;
            if (adjacent(i, j)) g.set_edge(ii, jj, true);
        }
    }
    return g;
}

LoopedGraph LoopedGraph::local_complement(const std::string& v) const {
    return local_complement_at(index_of(v));
}

LoopedGraph LoopedGraph::local_complement_at(std::size_t vi) const {
    if (vi >= names_.size()) throw std::out_of_range("local_complement: index out of range");
    LoopedGraph g = *this;
    const auto nb = neighbors(vi);
    for (std::size_t a = 0; a < nb.size(); ++a) {
        for (std::size_t b = a + 1; b < nb.size(); ++b) g.toggle_edge(nb[a], nb[b]);
    }
    for (std::size_t x : nb) g.loops_[x] ^= 1;
    return g;
}

LoopedGraph LoopedGraph::pivot(const std::string& v, const std::string& w) const {
    return pivot_at(index_of(v), index_of(w));
}

LoopedGraph LoopedGraph::pivot_at(std::size_t vi, std::size_t wi) const {
    const std::size_t n = names_.size();
    if (vi >= n || wi >= n) throw std::out_of_range("pivot: index out of range");
    if (vi == wi) throw std::invalid_argument("pivot: vertices must be distinct");
    if (!adjacent(vi, wi)) throw std::invalid_argument("pivot: vertices must be neighbors");
    LoopedGraph g = *this;
    // neighborhood class within {v,w}: 1 = v only, 2 = w only, 3 = both
    auto cls = [&](std::size_t x) {
        return (adjacent(x, vi) ? 1 : 0) | (adjacent(x, wi) ? 2 : 0);
    };
    for (std::size_t x = 0; x < n; ++x) {
        if (x == vi || x == wi) continue;
        const int cx = cls(x);
        if (cx == 0) continue;
        for (std::size_t y = x + 1; y < n; ++y) {
            if (y == vi || y == wi) continue;
            const int cy = cls(y);
            if (cy == 0 || cy == cx) continue;
            g.toggle_edge(x, y);
        }
    }
    return g;
}

LoopedGraph LoopedGraph::disjoint_union(const LoopedGraph& g, const LoopedGraph& h) {
    std::set<std::string> taken(g.names_.begin(), g.names_.end());
    std::vector<std::string> renamed;
    renamed.reserve(h.names_.size());
    for (const auto& name : h.names_) {
        std::string candidate = name;
        for (unsigned k = 2; taken.count(candidate) != 0; ++k) {
            candidate = name + "_" + std::to_string(k);
        }
        taken.insert(candidate);
        renamed.push_back(candidate);
    }
    const std::size_t ng = g.names_.size(), nh = h.names_.size(), n = ng + nh;
    LoopedGraph out;
    out.names_ = g.names_;
    out.names_.insert(out.names_.end(), renamed.begin(), renamed.end());
    out.loops_.assign(n, 0);
    out.adj_.assign(n * n, 0);
    for (std::size_t i = 0; i < ng; ++i) {
        out.loops_[i] = g.loops_[i];
        for (std::size_t j = i + 1; j < ng; ++j) {
            if (g.adjacent(i, j)) out.set_edge(i, j, true);
        }
    }
    for (std::size_t i = 0; i < nh; ++i) {
        out.loops_[ng + i] = h.loops_[i];
        for (std::size_t j = i + 1; j < nh; ++j) {
            if (h.adjacent(i, j)) out.set_edge(ng + i, ng + j, true);
        }
    }
    return out;
}

void LoopedGraph::set_edge(std::size_t i, std::size_t j, bool present) {
    const std::size_t n = names_.size();
    adj_[i * n + j] = present ? 1 : 0;
    adj_[j * n + i] = present ? 1 : 0;
}

void LoopedGraph::toggle_edge(std::size_t i, std::size_t j) {
    const std::size_t n = names_.size();
    adj_[i * n + j] ^= 1;
    adj_[j * n + i] ^= 1;
}

LoopedGraph LoopedGraph::parse(std::string_view text) {
    bool saw_vertices = false, saw_loops = false, saw_edges = false;
    std::vector<std::string> vertices, loops;
    std::vector<std::pair<std::string, std::string>> edges;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;

        auto tokens = split_tokens(line);
        if (tokens.empty()) {
            if (pos > text.size()) break;
            continue;
        }
        if (tokens[0][0] == '#') {
            if (pos > text.size()) break;
            continue;
        }

        const std::string& head = tokens[0];
        if (head == "vertices:") {
            if (saw_vertices) throw parse_error("duplicate 'vertices:' line");
            saw_vertices = true;
            vertices.assign(tokens.begin() + 1, tokens.end());
        } else if (head == "loops:") {
            if (saw_loops) throw parse_error("duplicate 'loops:' line");
            saw_loops = true;
            loops.assign(tokens.begin() + 1, tokens.end());
        } else if (head == "edges:") {
            if (saw_edges) throw parse_error("duplicate 'edges:' line");
            saw_edges = true;
            for (std::size_t t = 1; t < tokens.size(); ++t) {
                const std::string& tok = tokens[t];
                const std::size_t dash = tok.find('-');
                if (dash == std::string::npos || tok.find('-', dash + 1) != std::string::npos)
                    throw parse_error("invalid edge token: '" + tok + "'");
                edges.emplace_back(tok.substr(0, dash), tok.substr(dash + 1));
            }
        } else {
            throw parse_error("unrecognized line: '" + head + "'");
        }
        if (pos > text.size()) break;
    }
    if (!saw_vertices) throw parse_error("missing 'vertices:' line");
    return create(std::move(vertices), loops, edges);
}

std::string LoopedGraph::to_text() const {
    std::ostringstream os;
    os << "vertices:";
    for (const auto& name : names_) os << " " << name;
    os << "\n";
    bool any_loop = false;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (loops_[i]) any_loop = true;
    }
    if (any_loop) {
        os << "loops:";
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (loops_[i]) os << " " << names_[i];
        }
        os << "\n";
    }
    const auto edges = edge_indices();
    if (!edges.empty()) {
        os << "edges:";
        for (const auto& [i, j] : edges) os << " " << names_[i] << "-" << names_[j];
        os << "\n";
    }
    return os.str();
}

}  // namespace itp
