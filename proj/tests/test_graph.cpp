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

#include "errors.hpp"
#include "graph.hpp"
#include "oracles.hpp"

using itp::LoopedGraph;
using itp::parse_error;
using itp::testing::from_rows;

namespace {

LoopedGraph k2() { return LoopedGraph::create({"v", "w"}, {}, {{"v", "w"}}); }

}  // namespace

TEST_CASE("adjacency matrices") {
    CHECK(LoopedGraph::create({"a", "b"}, {}, {}).adjacency_matrix() == itp::BitMatrix(2, 2));
    CHECK(LoopedGraph::create({"a"}, {"a"}, {}).adjacency_matrix() == from_rows({{1}}));
    CHECK(k2().adjacency_matrix() == from_rows({{0, 1}, {1, 0}}));
}

TEST_CASE("adjacency matrix is symmetric") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::string> names;
        const unsigned n = 1 + rng() % 7;
        for (unsigned i = 0; i < n; ++i) names.push_back("n" + std::to_string(i));
        std::vector<std::pair<std::string, std::string>> edges;
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = i + 1; j < n; ++j) {
                if (rng() & 1) edges.emplace_back(names[i], names[j]);
            }
        }
        const auto a = LoopedGraph::create(names, {}, edges).adjacency_matrix();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) REQUIRE(a.get(i, j) == a.get(j, i));
        }
    }
}

TEST_CASE("delete_vertex") {
    const LoopedGraph g = k2().delete_vertex("w");
    CHECK(g.vertex_count() == 1);
    CHECK(g.vertices()[0] == "v");
    CHECK_FALSE(g.looped(0));

    CHECK(LoopedGraph::create({"a"}, {"a"}, {}).delete_vertex("a").vertex_count() == 0);

    const LoopedGraph path = LoopedGraph::create({"a", "b", "c"}, {}, {{"a", "b"}, {"b", "c"}});
    const LoopedGraph rest = path.delete_vertex("b");
    CHECK(rest.vertex_count() == 2);
    CHECK(rest.edge_indices().empty());

    CHECK_THROWS_AS((void)k2().delete_vertex("zzz"), parse_error);
}

TEST_CASE("delete_vertex commutes") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::string> names{"a", "b", "c", "d"};
        std::vector<std::pair<std::string, std::string>> edges;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i + 1; j < 4; ++j) {
                if (rng() & 1) edges.emplace_back(names[i], names[j]);
            }
        }
        const LoopedGraph g = LoopedGraph::create(names, {"b"}, edges);
        CHECK(g.delete_vertex("a").delete_vertex("c") == g.delete_vertex("c").delete_vertex("a"));
    }
}

TEST_CASE("local complementation") {
    // looped v with two nonadjacent unlooped neighbors a, b
    const LoopedGraph g =
        LoopedGraph::create({"v", "a", "b"}, {"v"}, {{"v", "a"}, {"v", "b"}});
    const LoopedGraph gc = g.local_complement("v");
    CHECK(gc.adjacent(1, 2));
    CHECK(gc.looped(1));
    CHECK(gc.looped(2));
    CHECK(gc.looped(0));
    CHECK(gc.adjacent(0, 1));

    // single neighbor: only the loop flag of that neighbor toggles
    const LoopedGraph h = LoopedGraph::create({"v", "a"}, {"v"}, {{"v", "a"}});
    const LoopedGraph hc = h.local_complement("v");
    CHECK(hc.looped(1));
    CHECK(hc.adjacent(0, 1));
    CHECK(h.local_complement("v").edge_indices() == h.edge_indices());

    // star: all three leaf pairs become edges, all leaves looped
    const LoopedGraph star = LoopedGraph::create({"v", "a", "b", "c"}, {"v"},
                                                 {{"v", "a"}, {"v", "b"}, {"v", "c"}});
    const LoopedGraph sc = star.local_complement("v");
    CHECK(sc.adjacent(1, 2));
    CHECK(sc.adjacent(1, 3));
    CHECK(sc.adjacent(2, 3));
    CHECK(sc.looped(1));
    CHECK(sc.looped(2));
    CHECK(sc.looped(3));
}

TEST_CASE("local complementation is an involution") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::string> names{"p", "q", "r", "s", "t"};
        std::vector<std::string> loops{"p"};
        std::vector<std::pair<std::string, std::string>> edges;
        for (std::size_t i = 0; i < 5; ++i) {
            for (std::size_t j = i + 1; j < 5; ++j) {
                if (rng() & 1) edges.emplace_back(names[i], names[j]);
            }
        }
        for (std::size_t i = 1; i < 5; ++i) {
            if (rng() & 1) loops.push_back(names[i]);
        }
        const LoopedGraph g = LoopedGraph::create(names, loops, edges);
        REQUIRE(g.local_complement("p").local_complement("p") == g);
    }
}

TEST_CASE("pivot") {
    // path a - v - w - b becomes the 4-cycle
    const LoopedGraph path =
        LoopedGraph::create({"a", "v", "w", "b"}, {}, {{"a", "v"}, {"v", "w"}, {"w", "b"}});
    const LoopedGraph piv = path.pivot("v", "w");
    CHECK(piv.adjacent(0, 3));
    CHECK(piv.adjacent(0, 1));
    CHECK(piv.adjacent(1, 2));
    CHECK(piv.adjacent(2, 3));
    CHECK_FALSE(piv.adjacent(0, 2));
    CHECK_FALSE(piv.adjacent(1, 3));

    CHECK(k2().pivot("v", "w") == k2());

    // x adjacent to both v and w, y adjacent to v only: {x,y} toggled;
    // x' adjacent to both as well: {x,x'} untouched
    const LoopedGraph g = LoopedGraph::create(
        {"v", "w", "x", "xp", "y"}, {},
        {{"v", "w"}, {"x", "v"}, {"x", "w"}, {"xp", "v"}, {"xp", "w"}, {"y", "v"}});
    const LoopedGraph p = g.pivot("v", "w");
    CHECK(p.adjacent(2, 4));
    CHECK_FALSE(p.adjacent(2, 3));

    CHECK_THROWS_AS((void)k2().pivot("v", "v"), std::invalid_argument);
    CHECK_THROWS_AS((void)k2().pivot("v", "nope"), parse_error);
    const LoopedGraph disconnected = LoopedGraph::create({"v", "w"}, {}, {});
    CHECK_THROWS_AS((void)disconnected.pivot("v", "w"), std::invalid_argument);
}

TEST_CASE("pivot is an involution") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::string> names{"v", "w", "a", "b", "c"};
        std::vector<std::pair<std::string, std::string>> edges{{"v", "w"}};
        for (std::size_t i = 0; i < 5; ++i) {
            for (std::size_t j = i + 1; j < 5; ++j) {
                if (i == 0 && j == 1) continue;
                if (rng() & 1) edges.emplace_back(names[i], names[j]);
            }
        }
        std::vector<std::string> loops;
        for (const auto& nm : names) {
            if (rng() & 1) loops.push_back(nm);
        }
        const LoopedGraph g = LoopedGraph::create(names, loops, edges);
        REQUIRE(g.pivot("v", "w").pivot("v", "w") == g);
    }
}

TEST_CASE("disjoint_union") {
    const LoopedGraph g = LoopedGraph::create({"a"}, {"a"}, {});
    CHECK(LoopedGraph::disjoint_union(g, LoopedGraph()) == g);

    const LoopedGraph u = LoopedGraph::disjoint_union(g, LoopedGraph::create({"b"}, {}, {}));
    CHECK(u.vertex_count() == 2);
    CHECK(u.looped(0));
    CHECK_FALSE(u.looped(1));
    CHECK(u.edge_indices().empty());

    const LoopedGraph two = LoopedGraph::disjoint_union(k2(), k2());
    CHECK(two.vertex_count() == 4);
    CHECK(two.edge_indices().size() == 2);
    // second copy's colliding names got suffixed
    CHECK(two.vertices()[2] == "v_2");
    CHECK(two.vertices()[3] == "w_2");
    CHECK(two.adjacent(2, 3));
}

TEST_CASE("parser accepts the documented format") {
    const LoopedGraph g = LoopedGraph::parse(
        "# comment lines start with '#'\n"
        "vertices: a b c d\n"
        "loops: b d\n"
        "edges: a-b b-c c-d\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.looped(1));
    CHECK(g.looped(3));
    CHECK(g.edge_indices().size() == 3);

    // sections in any order, loops/edges omitted
    CHECK(LoopedGraph::parse("edges: a-b\nvertices: a b\n").edge_indices().size() == 1);
    CHECK(LoopedGraph::parse("vertices: a b\n").edge_indices().empty());
    CHECK(LoopedGraph::parse("vertices:\n").vertex_count() == 0);
    CHECK(LoopedGraph::parse("vertices: a\nloops: a\n").looped(0));
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS((void)LoopedGraph::parse("vertices: a a\n"), parse_error);       // dup vertex
    CHECK_THROWS_AS((void)LoopedGraph::parse("vertices: a\nedges: a-b\n"), parse_error);  // unknown
    CHECK_THROWS_AS((void)LoopedGraph::parse("vertices: a\nedges: a-a\n"), parse_error);  // self
    CHECK_THROWS_AS((void)LoopedGraph::parse("vertices: a b\nedges: a-b b-a\n"),
                    parse_error);  // dup edge
    CHECK_THROWS_AS((void)LoopedGraph::parse("vertices: a b\nloops: c\n"), parse_error);
    CHECK_THROWS_AS((void)LoopedGraph::parse("edges: a-b\n"), parse_error);  // no vertices line
    CHECK_THROWS_AS((void)LoopedGraph::parse("vertices: a\nvertices: b\n"), parse_error);
    CHECK_THROWS_AS((void)LoopedGraph::parse("vertices: a$\n"), parse_error);  // bad name
    CHECK_THROWS_AS((void)LoopedGraph::parse("vertices: a b\nedges: a-b-c\n"), parse_error);
    CHECK_THROWS_AS((void)LoopedGraph::parse("verts: a\n"), parse_error);
}

TEST_CASE("parser survives arbitrary bytes") {
    std::mt19937_64 rng(4242);
    const std::string alphabet = "ab-: \n#_\t0\xff";
    for (int trial = 0; trial < 2000; ++trial) {
        std::string text;
        const std::size_t len = rng() % 40;
        for (std::size_t i = 0; i < len; ++i) text += alphabet[rng() % alphabet.size()];
        try {
            const LoopedGraph g = LoopedGraph::parse(text);
            // whatever parses must serialize and re-parse to itself
            REQUIRE(LoopedGraph::parse(g.to_text()) == g);
        } catch (const parse_error&) {
            // rejection is fine; crashing is not
        }
    }
}

TEST_CASE("serializer round-trips") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::string> names;
        const unsigned n = rng() % 6;
        for (unsigned i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
        std::vector<std::string> loops;
        std::vector<std::pair<std::string, std::string>> edges;
        for (unsigned i = 0; i < n; ++i) {
            if (rng() & 1) loops.push_back(names[i]);
            for (unsigned j = i + 1; j < n; ++j) {
                if (rng() & 1) edges.emplace_back(names[i], names[j]);
            }
        }
        const LoopedGraph g = LoopedGraph::create(names, loops, edges);
        REQUIRE(LoopedGraph::parse(g.to_text()) == g);
    }
}
