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

#include "checks.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace itp {

namespace {

std::vector<std::string> vertex_names(unsigned n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (unsigned i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
    return names;
}

GroundLabel phi(const std::string& v) { return {v, LabelKind::phi}; }
GroundLabel chi(const std::string& v) { return {v, LabelKind::chi}; }

// Transversal of M(IA(G)) encoded by a bitmask: bit i set means vi_chi is
// chosen, clear means vi_phi.
std::vector<GroundLabel> transversal_from_mask(const LoopedGraph& g, std::uint64_t mask) {
    std::vector<GroundLabel> t;
    t.reserve(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        t.push_back((mask >> i) & 1 ? chi(g.vertex_name(i)) : phi(g.vertex_name(i)));
    }
    return t;
}

}  // namespace

std::uint64_t looped_graph_count(unsigned n) {
    if (n + n * (n - 1) / 2 >= 64)
        throw std::invalid_argument("looped_graph_count: structure does not fit 64 mask bits");
    return std::uint64_t{1} << (n + n * (n - 1) / 2);
}

LoopedGraph graph_from_mask(unsigned n, std::uint64_t mask) {
    if (n + n * (n - 1) / 2 >= 64)
        throw std::invalid_argument("graph_from_mask: structure does not fit 64 mask bits");
    const auto names = vertex_names(n);
    std::vector<std::string> loops;
    for (unsigned i = 0; i < n; ++i) {
        if ((mask >> i) & 1) loops.push_back(names[i]);
    }
    std::vector<std::pair<std::string, std::string>> edges;
    unsigned bit = n;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j, ++bit) {
            if ((mask >> bit) & 1) edges.emplace_back(names[i], names[j]);
        }
    }
    return LoopedGraph::create(names, loops, edges);
}

LoopedGraph random_graph(std::mt19937_64& rng, unsigned n) {
    const auto names = vertex_names(n);
    std::vector<std::string> loops;
    std::vector<std::pair<std::string, std::string>> edges;
    for (unsigned i = 0; i < n; ++i) {
        if (rng() & 1) loops.push_back(names[i]);
        for (unsigned j = i + 1; j < n; ++j) {
            if (rng() & 1) edges.emplace_back(names[i], names[j]);
        }
    }
    return LoopedGraph::create(names, loops, edges);
}

LoopedGraph random_graph_with_pendant(std::mt19937_64& rng, unsigned n) {
    if (n < 2) throw std::invalid_argument("pendant plant needs at least 2 vertices");
    LoopedGraph g = random_graph(rng, n);
    const auto names = g.vertices();
    std::vector<std::string> loops;
    for (std::size_t i = 1; i < n; ++i) {
        if (g.looped(i)) loops.push_back(names[i]);
    }
    std::vector<std::pair<std::string, std::string>> edges{{names[0], names[1]}};
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g.adjacent(i, j)) edges.emplace_back(names[i], names[j]);
        }
    }
    return LoopedGraph::create(names, loops, edges);
}

LoopedGraph random_graph_with_twins(std::mt19937_64& rng, unsigned n) {
    if (n < 3) throw std::invalid_argument("twin plant needs at least 3 vertices");
    LoopedGraph g = random_graph(rng, n);
    const auto names = g.vertices();
    const bool loop_flag = rng() & 1;
    const bool pair_edge = rng() & 1;
    std::vector<std::string> loops;
    if (loop_flag) {
        loops.push_back(names[0]);
        loops.push_back(names[1]);
    }
    for (std::size_t i = 2; i < n; ++i) {
        if (g.looped(i)) loops.push_back(names[i]);
    }
    // shared outside neighborhood, forced nonempty
    std::vector<std::size_t> shared;
    for (std::size_t j = 2; j < n; ++j) {
        if (rng() & 1) shared.push_back(j);
    }
    if (shared.empty()) shared.push_back(2 + rng() % (n - 2));
    std::vector<std::pair<std::string, std::string>> edges;
    if (pair_edge) edges.emplace_back(names[0], names[1]);
    for (std::size_t j : shared) {
        edges.emplace_back(names[0], names[j]);
        edges.emplace_back(names[1], names[j]);
    }
    for (std::size_t i = 2; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g.adjacent(i, j)) edges.emplace_back(names[i], names[j]);
        }
    }
    return LoopedGraph::create(names, loops, edges);
}

ParameterAssignment random_int_assignment(const BinaryMatroid& m, std::mt19937_64& rng, int lo,
                                          int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    ParameterAssignment asg;
    for (const auto& w : m.ground()) {
        asg.set(w, MultiPoly::constant(dist(rng)), MultiPoly::constant(dist(rng)));
    }
    return asg;
}

bool rank_identity_holds(const LoopedGraph& g) {
    const BinaryMatroid m = BinaryMatroid::from_ia(g);
    const BitMatrix a = g.adjacency_matrix();
    const std::size_t n = g.vertex_count();
    // column i of IA is v_i phi, column n+i is v_i chi
    std::vector<std::size_t> cols(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) cols[i] = ((mask >> i) & 1) ? n + i : i;
        const std::size_t lhs = m.rank_of_columns(cols);
        const std::size_t size_s = static_cast<std::size_t>(std::popcount(mask));
        const std::size_t rhs = n - size_s + a.rank_principal_masked(mask);
        if (lhs != rhs) return false;
    }
    return true;
}

bool minor_identity_holds(const LoopedGraph& g) {
    for (std::size_t vi = 0; vi < g.vertex_count(); ++vi) {
        const std::string v = g.vertex_name(vi);
        const BinaryMatroid direct = BinaryMatroid::from_ia(g.delete_vertex_at(vi));
        const BinaryMatroid minor = BinaryMatroid::from_ia(g).contracted(phi(v)).deleted(chi(v));
        const auto& ground = direct.ground();
        const std::size_t k = ground.size();
        if (minor.ground() != ground) return false;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            std::vector<GroundLabel> t;
            for (std::size_t i = 0; i < k; ++i) {
                if ((mask >> i) & 1) t.push_back(ground[i]);
            }
            if (direct.rank_of(t) != minor.rank_of(t)) return false;
        }
    }
    return true;
}

bool looped_pivot_lemma_holds(const LoopedGraph& g) {
    const BinaryMatroid m = BinaryMatroid::from_ia(g);
    const std::size_t n = g.vertex_count();
    for (std::size_t vi = 0; vi < n; ++vi) {
        if (!g.looped(vi)) continue;
        const BinaryMatroid reduced =
            BinaryMatroid::from_ia(g.local_complement_at(vi).delete_vertex_at(vi));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (((mask >> vi) & 1) == 0) continue;  // need v_chi in T
            const auto t = transversal_from_mask(g, mask);
            std::vector<GroundLabel> rest;
            for (const auto& w : t) {
                if (!(w.vertex == g.vertex_name(vi))) rest.push_back(w);
            }
            if (m.rank_of(t) != 1 + reduced.rank_of(rest)) return false;
        }
    }
    return true;
}

bool unlooped_pivot_lemmas_hold(const LoopedGraph& g) {
    const BinaryMatroid m = BinaryMatroid::from_ia(g);
    const std::size_t n = g.vertex_count();
    for (std::size_t vi = 0; vi < n; ++vi) {
        if (g.looped(vi)) continue;
        for (std::size_t wi = 0; wi < n; ++wi) {
            if (wi == vi || g.looped(wi) || !g.adjacent(vi, wi)) continue;
            const std::string v = g.vertex_name(vi), w = g.vertex_name(wi);
            const LoopedGraph piv = g.pivot_at(vi, wi);
            const BinaryMatroid m_w = BinaryMatroid::from_ia(piv.delete_vertex(w));
            const BinaryMatroid m_vw =
                BinaryMatroid::from_ia(piv.delete_vertex(w).delete_vertex(v));
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                if (((mask >> vi) & 1) == 0) continue;  // v_chi in T
                const auto t = transversal_from_mask(g, mask);
                if (((mask >> wi) & 1) == 0) {
                    // w_phi in T: r(T) - 1 == rank of T - {w_phi} in M(IA(G^vw - w))
                    std::vector<GroundLabel> rest;
                    for (const auto& e : t) {
                        if (e.vertex != w) rest.push_back(e);
                    }
                    if (m.rank_of(t) != 1 + m_w.rank_of(rest)) return false;
                } else {
                    // w_chi in T: r(T) == 2 + rank of T - {v_chi, w_chi}
                    std::vector<GroundLabel> rest;
                    for (const auto& e : t) {
                        if (e.vertex != v && e.vertex != w) rest.push_back(e);
                    }
                    if (m.rank_of(t) != 2 + m_vw.rank_of(rest)) return false;
                }
            }
        }
    }
    return true;
}

bool pendant_parallel_holds(const LoopedGraph& g, const std::string& v, const std::string& w) {
    return BinaryMatroid::from_ia(g).parallel(chi(v), phi(w));
}

bool twin_parallel_holds(const LoopedGraph& g, const std::string& v, const std::string& w) {
    return BinaryMatroid::from_ia(g).contracted(phi(v)).contracted(phi(w)).parallel(chi(v),
                                                                                    chi(w));
}

MultiPoly transversal_section_by_subsets(const BinaryMatroid& m, const TransversalScheme& scheme,
                                         const ParameterAssignment& asg) {
    const std::size_t n = m.ground_size();
    if (n >= 26) throw cap_exceeded("subset-scan section oracle limited to 25 elements");
    // column -> class
    std::vector<std::size_t> cls(n);
    for (std::size_t c = 0; c < scheme.class_count(); ++c) {
        for (const auto& w : scheme.classes()[c]) cls[m.column_of(w)] = c;
    }
    const std::size_t nc = scheme.class_count();
    MultiPoly result;
    std::vector<std::uint8_t> picks(nc);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != nc) continue;
        std::fill(picks.begin(), picks.end(), 0);
        bool transversal = true;
        for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
            const std::size_t col = static_cast<std::size_t>(std::countr_zero(bits));
            if (++picks[cls[col]] > 1) {
                transversal = false;
                break;
            }
        }
        if (!transversal) continue;
        MultiPoly weight = MultiPoly::one();
        for (std::size_t col = 0; col < n; ++col) {
            const auto& label = m.ground()[col];
            weight *= ((mask >> col) & 1) ? asg.a(label) : asg.b(label);
        }
        const std::size_t r = m.rank_of_columns([&] {
            std::vector<std::size_t> cols;
            for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1)
                cols.push_back(static_cast<std::size_t>(std::countr_zero(bits)));
            return cols;
        }());
        const std::uint32_t e = static_cast<std::uint32_t>(nc - r);
        result += weight * (e == 0 ? MultiPoly::one() : MultiPoly::monomial({"u"}, {e}, 1));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Suites

std::vector<CheckLine> check_methods(const LoopedGraph& g) {
    const MultiPoly qs = q_subset(g);
    const MultiPoly qr = q_recursive(g);
    const MultiPoly qf = q_from_section(g);
    return {
        {"q subset == q recursive", qs == qr, false, ""},
        {"q subset == q section", qs == qf, false, ""},
        {"q recursive == q section", qr == qf, false, ""},
    };
}

namespace {

CheckLine section_agreement_line(const BinaryMatroid& m, const std::string& name,
                                 const CheckEffort& effort, std::uint64_t salt) {
    const TransversalScheme scheme = TransversalScheme::for_matroid(m);
    const std::size_t n = m.ground_size();
    if (scheme.class_count() <= 3) {
        // symbolic: full subset expansion, ideal filter, then compare
        const ParameterAssignment sym = ParameterAssignment::symbolic(m);
        const MultiPoly filtered = pi_project(param_rank_subset(m, sym), scheme);
        const MultiPoly sz = MultiPoly::variable("s") * MultiPoly::variable("z");
        const MultiPoly sec = section_transversal(m, scheme, sym).substitute("u", sz);
        return {name + " (symbolic)", filtered == sec, false, ""};
    }
    if (n > effort.max_oracle_bits) {
        return {name, true, true, "skipped: ground set too large for the subset oracle"};
    }
    std::mt19937_64 rng(effort.seed ^ salt);
    const ParameterAssignment asg = random_int_assignment(m, rng);
    const MultiPoly direct = section_transversal(m, scheme, asg);
    const MultiPoly by_subsets = transversal_section_by_subsets(m, scheme, asg);
    return {name + " (random integer parameters)", direct == by_subsets, false, ""};
}

}  // namespace

std::vector<CheckLine> check_section(const LoopedGraph& g, const CheckEffort& effort) {
    std::vector<CheckLine> lines;
    lines.push_back(section_agreement_line(BinaryMatroid::from_ia(g),
                                           "section == filtered subset expansion (IA)", effort,
                                           graph_fingerprint(g)));
    lines.push_back(section_agreement_line(BinaryMatroid::from_ias(g),
                                           "section == filtered subset expansion (IAS)", effort,
                                           graph_fingerprint(g) * 3));
    return lines;
}

std::vector<CheckLine> check_ias(const LoopedGraph& g, const CheckEffort& effort) {
    const BinaryMatroid mia = BinaryMatroid::from_ia(g);
    const BinaryMatroid mias = BinaryMatroid::from_ias(g);
    const TransversalScheme s_ia = TransversalScheme::for_matroid(mia);
    const TransversalScheme s_ias = TransversalScheme::for_matroid(mias);

    ParameterAssignment asg_ia, asg_ias;
    std::string mode;
    if (g.vertex_count() <= 4) {
        mode = "symbolic";
        asg_ia = ParameterAssignment::symbolic(mia);
        asg_ias = ParameterAssignment::symbolic(mias);
    } else {
        mode = "random integer parameters";
        std::mt19937_64 rng(effort.seed ^ graph_fingerprint(g) ^ 0x1a5u);
        asg_ia = random_int_assignment(mia, rng);
        asg_ias = asg_ia;  // copy phi/chi values below
    }
    // psi elements: a = 0, b = 1 restricts the IAS section to the IA one
    for (const auto& w : mias.ground()) {
        if (w.kind == LabelKind::psi) {
            asg_ias.set(w, MultiPoly(), MultiPoly::one());
        } else if (mode != "symbolic") {
            asg_ias.set(w, asg_ia.a(w), asg_ia.b(w));
        }
    }
    const MultiPoly lhs = section_transversal(mias, s_ias, asg_ias);
    const MultiPoly rhs = section_transversal(mia, s_ia, asg_ia);
    return {{"IAS section with a(psi)=0, b(psi)=1 == IA section (" + mode + ")", lhs == rhs,
             false, ""}};
}

std::vector<CheckLine> check_identities(const LoopedGraph& g) {
    std::vector<CheckLine> lines;
    lines.push_back({"rank identity over all transversals", rank_identity_holds(g), false, ""});
    lines.push_back({"minor identity (IA of G-v == contract/delete)", minor_identity_holds(g),
                     false, ""});
    lines.push_back({"looped pivot rank lemma", looped_pivot_lemma_holds(g), false, ""});
    lines.push_back({"unlooped pivot rank lemmas", unlooped_pivot_lemmas_hold(g), false, ""});
    return lines;
}

std::vector<CheckLine> check_suite(const LoopedGraph& g, std::string_view suite,
                                   const CheckEffort& effort) {
    std::vector<CheckLine> lines;
    const bool all = suite == "all";
    if (all || suite == "methods") {
        const auto l = check_methods(g);
        lines.insert(lines.end(), l.begin(), l.end());
    }
    if (all || suite == "section") {
        const auto l = check_section(g, effort);
        lines.insert(lines.end(), l.begin(), l.end());
    }
    if (all || suite == "ias") {
        const auto l = check_ias(g, effort);
        lines.insert(lines.end(), l.begin(), l.end());
    }
    if (all || suite == "identities") {
        const auto l = check_identities(g);
        lines.insert(lines.end(), l.begin(), l.end());
    }
    if (lines.empty()) throw std::invalid_argument("unknown check suite: " + std::string(suite));
    return lines;
}

std::string render_check_lines(const std::vector<CheckLine>& lines) {
    std::ostringstream os;
    for (const auto& line : lines) {
        os << (line.skipped ? "SKIP" : line.pass ? "PASS" : "FAIL") << "  " << line.name;
        if (!line.detail.empty()) os << "  (" << line.detail << ")";
        os << "\n";
    }
    return os.str();
}

bool all_passed(const std::vector<CheckLine>& lines) {
    for (const auto& line : lines) {
        if (!line.skipped && !line.pass) return false;
    }
    return true;
}

SelfCheckReport selfcheck(unsigned max_vertices, std::uint64_t seed, std::uint64_t random_extra) {
    if (max_vertices == 0 || max_vertices > 5)
        throw std::invalid_argument("selfcheck: max_vertices must be between 1 and 5");
    SelfCheckReport report;
    report.max_vertices = max_vertices;
    CheckEffort effort;
    effort.seed = seed;
    effort.max_oracle_bits = 12;  // keep the bulk run affordable

    auto run_one = [&](const LoopedGraph& g) {
        const auto lines = check_suite(g, "all", effort);
        for (const auto& line : lines) {
            if (!line.skipped && !line.pass) {
                ++report.failures;
                if (report.first_failure.empty()) {
                    report.first_failure = "check '" + line.name + "' failed on:\n" + g.to_text();
                }
            }
        }
    };

    const std::uint64_t total = looped_graph_count(max_vertices);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        run_one(graph_from_mask(max_vertices, mask));
        ++report.exhaustive_checked;
    }
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < random_extra; ++i) {
        const unsigned n = 6 + static_cast<unsigned>(rng() % 4);
        run_one(random_graph(rng, n));
        ++report.random_checked;
    }
    return report;
}

std::string SelfCheckReport::render() const {
    std::ostringstream os;
    os << "graphs checked: " << exhaustive_checked << " (all looped simple graphs on "
       << max_vertices << " labeled vertices)\n";
    if (random_checked > 0) os << "random extras (6-9 vertices): " << random_checked << "\n";
    os << "failures: " << failures << "\n";
    if (!first_failure.empty()) os << "first failure:\n" << first_failure;
    return os.str();
}

}  // namespace itp
