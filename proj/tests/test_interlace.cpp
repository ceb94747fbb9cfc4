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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "checks.hpp"
#include "errors.hpp"
#include "interlace.hpp"
#include "oracles.hpp"

using itp::BinaryMatroid;
using itp::GroundLabel;
using itp::LabelKind;
using itp::LoopedGraph;
using itp::MultiPoly;
using itp::Rat;
using itp::TransversalScheme;
using itp::testing::clear_u_substitution;

namespace {

const MultiPoly X = MultiPoly::variable("x");
const MultiPoly Y = MultiPoly::variable("y");
const MultiPoly ONE = MultiPoly::one();

LoopedGraph parse(const std::string& text) { return LoopedGraph::parse(text); }

}  // namespace

TEST_CASE("closed forms") {
    CHECK(q_subset(parse("vertices:")) == ONE);
    CHECK(q_subset(parse("vertices: v")) == Y);
    CHECK(q_subset(parse("vertices: v\nloops: v")) == X);
    CHECK(q_subset(parse("vertices: v w\nedges: v-w")) == X * X - 2 * X + 2 * Y);
    CHECK(q_subset(parse("vertices: v w\nloops: v\nedges: v-w")) == X * X - X + Y);

    // edgeless graphs: x^loops * y^nonloops
    for (unsigned k = 0; k + 0 <= 4; ++k) {
        for (unsigned m = 0; k + m <= 4; ++m) {
            std::vector<std::string> names;
            std::vector<std::string> loops;
            for (unsigned i = 0; i < k + m; ++i) names.push_back("n" + std::to_string(i));
            for (unsigned i = 0; i < k; ++i) loops.push_back(names[i]);
            const LoopedGraph g = LoopedGraph::create(names, loops, {});
            CHECK(q_subset(g) == X.pow(k) * Y.pow(m));
            CHECK(q_recursive(g) == X.pow(k) * Y.pow(m));
        }
    }
}

TEST_CASE("hand-traced recursions") {
    // K2 via the pivot rule: y + y - 1 + (x-1)^2
    CHECK(q_recursive(parse("vertices: v w\nedges: v-w")) == X * X - 2 * X + 2 * Y);
    // looped-unlooped edge via the local complementation rule: y + (x-1)x
    CHECK(q_recursive(parse("vertices: v w\nloops: v\nedges: v-w")) == X * X - X + Y);
}

TEST_CASE("section recovery on single vertices") {
    // unlooped: section is 1 + (x-1)u, so q = 1 + (y-1) = y
    CHECK(q_from_section(parse("vertices: v")) == Y);
    // looped: both transversals have rank 1, so q = 1 + (x-1) = x
    CHECK(q_from_section(parse("vertices: v\nloops: v")) == X);
    CHECK(q_from_section(parse("vertices: v w\nedges: v-w")) == X * X - 2 * X + 2 * Y);
}

TEST_CASE("three-way agreement, exhaustive on up to 4 vertices") {
    for (unsigned n = 1; n <= 4; ++n) {
        for (std::uint64_t mask = 0; mask < itp::looped_graph_count(n); ++mask) {
            const LoopedGraph g = itp::graph_from_mask(n, mask);
            const MultiPoly qs = q_subset(g);
            REQUIRE(qs == q_recursive(g));
            REQUIRE(qs == q_from_section(g));
        }
    }
}

TEST_CASE("three-way agreement on 1000 random graphs with 6 to 9 vertices") {
    std::mt19937_64 rng(20260101);
    for (int trial = 0; trial < 1000; ++trial) {
        const unsigned n = 6 + rng() % 4;
        const LoopedGraph g = itp::random_graph(rng, n);
        const MultiPoly qs = q_subset(g);
        REQUIRE(qs == q_recursive(g));
        REQUIRE(qs == q_from_section(g));
    }
}

TEST_CASE("multiplicativity over disjoint unions") {
    std::mt19937_64 rng(5050);
    for (int trial = 0; trial < 60; ++trial) {
        const LoopedGraph g = itp::random_graph(rng, 1 + rng() % 4);
        const LoopedGraph h = itp::random_graph(rng, 1 + rng() % 4);
        REQUIRE(q_subset(LoopedGraph::disjoint_union(g, h)) == q_subset(g) * q_subset(h));
    }
}

TEST_CASE("q has only x and y, with degrees bounded by the vertex count") {
    std::mt19937_64 rng(616);
    for (int trial = 0; trial < 80; ++trial) {
        const unsigned n = 1 + rng() % 7;
        const LoopedGraph g = itp::random_graph(rng, n);
        const MultiPoly q = q_subset(g);
        for (const auto& v : q.variables()) REQUIRE((v == "x" || v == "y"));
        REQUIRE(q.degree_in("x") <= n);
        REQUIRE(q.degree_in("y") <= n);
        for (const auto& term : q.terms()) {
            std::uint64_t total = 0;
            for (const auto e : term.exponents) total += e;
            REQUIRE(total <= 2 * n);
        }
    }
}

TEST_CASE("q(G) at x=2, y=2 counts the subsets") {
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 60; ++trial) {
        const unsigned n = 1 + rng() % 8;
        const LoopedGraph g = itp::random_graph(rng, n);
        const Rat expected(std::uint64_t{1} << n);
        REQUIRE(q_evaluate(q_subset(g), Rat(2), Rat(2)) == expected);
    }
}

TEST_CASE("q_evaluate") {
    const MultiPoly q = X * X - 2 * X + 2 * Y;
    CHECK(q_evaluate(q, Rat(2), Rat(2)) == Rat(4));
    CHECK(q_evaluate(X, Rat(7, 2), Rat(0)) == Rat(7, 2));
    CHECK(q_evaluate(ONE, Rat(5), Rat(5)) == Rat(1));
    CHECK_THROWS_AS((void)q_evaluate(MultiPoly::variable("u"), Rat(1), Rat(1)),
                    std::invalid_argument);
}

TEST_CASE("parallel subset enumeration is bit-identical") {
    std::mt19937_64 rng(42424242);
    const LoopedGraph g = itp::random_graph(rng, 15);
    const MultiPoly sequential = q_subset(g, 1);
    const MultiPoly parallel = q_subset(g, 4);
    CHECK(sequential == parallel);
    CHECK(sequential.to_json() == parallel.to_json());
}

// q(G) = q(G-v) + (x-1) * section-value of (M(IA(G)) - v_phi) / v_chi under
// the interlace assignment. The section value is rational in x, so both
// sides are multiplied by (x-1)^D before comparing.
TEST_CASE("deletion recursion through the matroid minor") {
    for (unsigned n = 2; n <= 4; ++n) {
        for (std::uint64_t mask = 0; mask < itp::looped_graph_count(n); ++mask) {
            const LoopedGraph g = itp::graph_from_mask(n, mask);
            const MultiPoly q = q_subset(g);
            for (std::size_t vi = 0; vi < n; ++vi) {
                if (g.isolated(vi)) continue;
                const std::string v = g.vertex_name(vi);
                const BinaryMatroid minor = BinaryMatroid::from_ia(g)
                                                .deleted({v, LabelKind::phi})
                                                .contracted({v, LabelKind::chi});
                const TransversalScheme scheme = TransversalScheme::for_matroid(minor);
                const MultiPoly sec =
                    section_transversal(minor, scheme, itp::interlace_assignment(minor));
                const std::uint32_t d = sec.degree_in("u");
                const MultiPoly cleared = clear_u_substitution(sec, d);
                const MultiPoly xm1 = X - ONE;
                REQUIRE(xm1.pow(d) * (q - q_subset(g.delete_vertex_at(vi))) ==
                        xm1 * cleared);
            }
        }
    }
}

// The two split identities behind the pivot recursion: with S_phi/S_chi the
// parts of the minor's section taken over transversals containing w_phi and
// w_chi, and q_phi/q_chi the parts of q(G^vw - w) over transversals
// containing v_phi and v_chi:
//   (x-1) S_phi == q_chi and S_chi == (x-1) q(G^vw - v - w), q_phi == q(G^vw - v - w)
TEST_CASE("pivot recursion split identities") {
    for (unsigned n = 2; n <= 4; ++n) {
        for (std::uint64_t mask = 0; mask < itp::looped_graph_count(n); ++mask) {
            const LoopedGraph g = itp::graph_from_mask(n, mask);
            for (std::size_t vi = 0; vi < n; ++vi) {
                if (g.looped(vi)) continue;
                for (std::size_t wi = 0; wi < n; ++wi) {
                    if (wi == vi || g.looped(wi) || !g.adjacent(vi, wi)) continue;
                    const std::string v = g.vertex_name(vi), w = g.vertex_name(wi);

                    const BinaryMatroid minor = BinaryMatroid::from_ia(g)
                                                    .deleted({v, LabelKind::phi})
                                                    .contracted({v, LabelKind::chi});
                    const TransversalScheme ms = TransversalScheme::for_matroid(minor);
                    const auto masg = itp::interlace_assignment(minor);
                    const std::vector<GroundLabel> need_wphi{{w, LabelKind::phi}};
                    const std::vector<GroundLabel> need_wchi{{w, LabelKind::chi}};
                    const MultiPoly s_phi =
                        section_transversal_filtered(minor, ms, masg, need_wphi);
                    const MultiPoly s_chi =
                        section_transversal_filtered(minor, ms, masg, need_wchi);

                    const LoopedGraph piv = g.pivot_at(vi, wi);
                    const LoopedGraph piv_w = piv.delete_vertex(w);
                    const BinaryMatroid m2 = BinaryMatroid::from_ia(piv_w);
                    const TransversalScheme s2 = TransversalScheme::for_matroid(m2);
                    const auto asg2 = itp::interlace_assignment(m2);
                    const std::vector<GroundLabel> need_vphi{{v, LabelKind::phi}};
                    const std::vector<GroundLabel> need_vchi{{v, LabelKind::chi}};
                    const MultiPoly q_phi =
                        section_transversal_filtered(m2, s2, asg2, need_vphi);
                    const MultiPoly q_chi =
                        section_transversal_filtered(m2, s2, asg2, need_vchi);

                    const MultiPoly q3 = q_subset(piv_w.delete_vertex(v));
                    const MultiPoly xm1 = X - ONE;

                    const std::uint32_t d =
                        std::max({s_phi.degree_in("u"), s_chi.degree_in("u"),
                                  q_phi.degree_in("u"), q_chi.degree_in("u")});
                    // (x-1) S_phi == q_chi
                    REQUIRE(xm1 * clear_u_substitution(s_phi, d) ==
                            clear_u_substitution(q_chi, d));
                    // q_phi == q(G^vw - v - w)
                    REQUIRE(clear_u_substitution(q_phi, d) == xm1.pow(d) * q3);
                    // S_chi == (x-1) q(G^vw - v - w)
                    REQUIRE(clear_u_substitution(s_chi, d) == xm1.pow(d + 1) * q3);
                }
            }
        }
    }
}

TEST_CASE("compute_q carries method and fingerprint") {
    const LoopedGraph g = parse("vertices: v w\nedges: v-w");
    const auto r1 = itp::compute_q(g, itp::QMethod::subset);
    const auto r2 = itp::compute_q(g, itp::QMethod::section);
    CHECK(r1.polynomial == r2.polynomial);
    CHECK(r1.graph_fingerprint == r2.graph_fingerprint);
    CHECK(r1.graph_fingerprint == itp::graph_fingerprint(g));
    CHECK(itp::graph_fingerprint(g) != itp::graph_fingerprint(parse("vertices: v w")));
    CHECK(itp::q_method_name(r1.method) == "subset");
}

TEST_CASE("caps raise on oversized graphs") {
    std::vector<std::string> names;
    for (int i = 0; i < 31; ++i) names.push_back("v" + std::to_string(i));
    const LoopedGraph wide = LoopedGraph::create(names, {}, {});
    CHECK_THROWS_AS((void)q_subset(wide), itp::cap_exceeded);
}
