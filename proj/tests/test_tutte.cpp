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

#include <algorithm>
#include <random>

#include "checks.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "tutte.hpp"

using itp::BinaryMatroid;
using itp::BitMatrix;
using itp::cap_exceeded;
using itp::GroundLabel;
using itp::LabelKind;
using itp::LoopedGraph;
using itp::MultiPoly;
using itp::ParameterAssignment;
using itp::TransversalScheme;

namespace {

const MultiPoly S = MultiPoly::variable("s");
const MultiPoly Z = MultiPoly::variable("z");
const MultiPoly ONE = MultiPoly::one();

MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }

LoopedGraph single(bool looped) {
    return LoopedGraph::create({"v"}, looped ? std::vector<std::string>{"v"}
                                             : std::vector<std::string>{},
                               {});
}

BinaryMatroid empty_matroid() { return BinaryMatroid(BitMatrix(0, 0), {}); }

BinaryMatroid one_coloop() {
    return BinaryMatroid(itp::testing::from_rows({{1}}), {{"e", LabelKind::phi}});
}

}  // namespace

TEST_CASE("tutte_subset on the smallest matroids") {
    CHECK(tutte_subset(empty_matroid()) == ONE);
    // IA(single unlooped vertex): subsets give s, 1, sz, z
    CHECK(tutte_subset(BinaryMatroid::from_ia(single(false))) == ONE + S + Z + S * Z);
    // IA(single looped vertex): both singletons have rank 1
    CHECK(tutte_subset(BinaryMatroid::from_ia(single(true))) ==
          MultiPoly::constant(2) + S + Z);
}

TEST_CASE("param_rank_subset") {
    const BinaryMatroid m = BinaryMatroid::from_ia(single(false));

    // all parameters 1 collapses to the Tutte polynomial
    CHECK(param_rank_subset(m, ParameterAssignment::uniform(m, ONE, ONE)) == tutte_subset(m));

    // a = 0, b = 1 leaves only the empty subset
    CHECK(param_rank_subset(m, ParameterAssignment::uniform(m, MultiPoly(), ONE)) ==
          S.pow(static_cast<std::uint32_t>(m.rank_full())));

    // symbolic single unlooped vertex
    const MultiPoly expected = var("b_v_phi") * var("b_v_chi") * S +
                               var("a_v_phi") * var("b_v_chi") +
                               var("a_v_chi") * var("b_v_phi") * S * Z +
                               var("a_v_phi") * var("a_v_chi") * Z;
    CHECK(param_rank_subset(m, ParameterAssignment::symbolic(m)) == expected);

    ParameterAssignment missing;
    CHECK_THROWS_AS((void)param_rank_subset(m, missing), std::invalid_argument);
}

TEST_CASE("param_rank_recursive base cases") {
    ParameterAssignment empty_asg;
    CHECK(param_rank_recursive(empty_matroid(), empty_asg) == ONE);

    const BinaryMatroid coloop = one_coloop();
    CHECK(param_rank_recursive(coloop, ParameterAssignment::symbolic(coloop)) ==
          var("a_e_phi") + S * var("b_e_phi"));

    const BinaryMatroid m = BinaryMatroid::from_ia(single(false));
    CHECK(param_rank_recursive(m, ParameterAssignment::symbolic(m)) ==
          param_rank_subset(m, ParameterAssignment::symbolic(m)));
}

TEST_CASE("recursive and subset evaluators agree symbolically on tiny graphs") {
    for (unsigned n = 1; n <= 2; ++n) {
        for (std::uint64_t mask = 0; mask < itp::looped_graph_count(n); ++mask) {
            const LoopedGraph g = itp::graph_from_mask(n, mask);
            for (const bool ias : {false, true}) {
                const BinaryMatroid m =
                    ias ? BinaryMatroid::from_ias(g) : BinaryMatroid::from_ia(g);
                const ParameterAssignment sym = ParameterAssignment::symbolic(m);
                REQUIRE(param_rank_recursive(m, sym) == param_rank_subset(m, sym));
            }
        }
    }
}

TEST_CASE("recursive evaluator is element-order independent") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned n = 1 + rng() % 4;
        const LoopedGraph g = itp::random_graph(rng, n);
        const BinaryMatroid m = BinaryMatroid::from_ia(g);
        const ParameterAssignment asg = itp::random_int_assignment(m, rng);

        // permuting the columns permutes the processing order
        std::vector<std::size_t> perm(m.ground_size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<GroundLabel> labels;
        for (std::size_t i : perm) labels.push_back(m.ground()[i]);
        const BinaryMatroid permuted(m.matrix().select_columns(perm), labels);

        REQUIRE(param_rank_recursive(m, asg) == param_rank_recursive(permuted, asg));
    }
}

TEST_CASE("pi_project") {
    const BinaryMatroid m = BinaryMatroid::from_ia(single(false));
    const TransversalScheme scheme = TransversalScheme::for_matroid(m);
    const ParameterAssignment sym = ParameterAssignment::symbolic(m);

    const MultiPoly tau = param_rank_subset(m, sym);
    const MultiPoly projected = pi_project(tau, scheme);
    CHECK(projected == var("a_v_phi") * var("b_v_chi") +
                           var("a_v_chi") * var("b_v_phi") * S * Z);

    CHECK(pi_project(ONE, scheme) == ONE);

    const MultiPoly killed = var("a_v_phi") * var("a_v_chi") * (ONE + S);
    CHECK(pi_project(killed, scheme).is_zero());
}

TEST_CASE("section_transversal on single vertices") {
    const BinaryMatroid unlooped = BinaryMatroid::from_ia(single(false));
    const TransversalScheme s1 = TransversalScheme::for_matroid(unlooped);
    CHECK(section_transversal(unlooped, s1, ParameterAssignment::symbolic(unlooped)) ==
          var("a_v_phi") * var("b_v_chi") +
              var("a_v_chi") * var("b_v_phi") * var("u"));

    const BinaryMatroid looped = BinaryMatroid::from_ia(single(true));
    const TransversalScheme s2 = TransversalScheme::for_matroid(looped);
    CHECK(section_transversal(looped, s2, ParameterAssignment::symbolic(looped)) ==
          var("a_v_phi") * var("b_v_chi") + var("a_v_chi") * var("b_v_phi"));
}

TEST_CASE("section equals the pi-filtered subset expansion, symbolically") {
    const MultiPoly sz = S * Z;
    for (unsigned n = 1; n <= 3; ++n) {
        for (std::uint64_t mask = 0; mask < itp::looped_graph_count(n); ++mask) {
            const LoopedGraph g = itp::graph_from_mask(n, mask);
            for (const bool ias : {false, true}) {
                const BinaryMatroid m =
                    ias ? BinaryMatroid::from_ias(g) : BinaryMatroid::from_ia(g);
                const TransversalScheme scheme = TransversalScheme::for_matroid(m);
                const ParameterAssignment sym = ParameterAssignment::symbolic(m);
                const MultiPoly filtered = pi_project(param_rank_subset(m, sym), scheme);
                const MultiPoly sec = section_transversal(m, scheme, sym).substitute("u", sz);
                REQUIRE(filtered == sec);
            }
        }
    }
}

TEST_CASE("section agrees with the subset-scan oracle under integer parameters") {
    std::mt19937_64 rng(6174);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned n = 1 + rng() % 4;
        const LoopedGraph g = itp::random_graph(rng, n);
        const BinaryMatroid m =
            (rng() & 1) ? BinaryMatroid::from_ias(g) : BinaryMatroid::from_ia(g);
        const TransversalScheme scheme = TransversalScheme::for_matroid(m);
        const ParameterAssignment asg = itp::random_int_assignment(m, rng);
        REQUIRE(section_transversal(m, scheme, asg) ==
                itp::transversal_section_by_subsets(m, scheme, asg));
    }
}

TEST_CASE("IAS restriction: a(psi)=0, b(psi)=1 recovers the IA section") {
    for (unsigned n = 1; n <= 3; ++n) {
        for (std::uint64_t mask = 0; mask < itp::looped_graph_count(n); ++mask) {
            const LoopedGraph g = itp::graph_from_mask(n, mask);
            const auto lines = itp::check_ias(g);
            for (const auto& line : lines) REQUIRE(line.pass);
        }
    }
}

TEST_CASE("filtered sections split the full section") {
    std::mt19937_64 rng(24601);
    for (int trial = 0; trial < 25; ++trial) {
        const unsigned n = 2 + rng() % 3;
        const LoopedGraph g = itp::random_graph(rng, n);
        const BinaryMatroid m = BinaryMatroid::from_ia(g);
        const TransversalScheme scheme = TransversalScheme::for_matroid(m);
        const ParameterAssignment asg = itp::random_int_assignment(m, rng);
        const GroundLabel vphi{g.vertex_name(0), LabelKind::phi};
        const GroundLabel vchi{g.vertex_name(0), LabelKind::chi};
        const std::vector<GroundLabel> need_phi{vphi}, need_chi{vchi};
        REQUIRE(section_transversal_filtered(m, scheme, asg, need_phi) +
                    section_transversal_filtered(m, scheme, asg, need_chi) ==
                section_transversal(m, scheme, asg));
    }
}

TEST_CASE("enumeration caps raise cap_exceeded") {
    // 31 coloops: ground set above the default subset cap
    std::vector<GroundLabel> labels;
    for (int i = 0; i < 31; ++i) labels.push_back({"e" + std::to_string(i), LabelKind::phi});
    const BinaryMatroid big(BitMatrix::identity(31), labels);
    CHECK_THROWS_AS((void)tutte_subset(big), cap_exceeded);
    CHECK_THROWS_AS((void)param_rank_subset(big, ParameterAssignment::uniform(big, ONE, ONE)),
                    cap_exceeded);
    CHECK_THROWS_AS((void)param_rank_recursive(big, ParameterAssignment::uniform(big, ONE, ONE)),
                    cap_exceeded);

    // 25 vertices: above the transversal cap
    std::vector<std::string> names;
    for (int i = 0; i < 25; ++i) names.push_back("v" + std::to_string(i));
    const LoopedGraph wide = LoopedGraph::create(names, {}, {});
    const BinaryMatroid mwide = BinaryMatroid::from_ia(wide);
    const TransversalScheme scheme = TransversalScheme::for_matroid(mwide);
    CHECK_THROWS_AS(
        (void)section_transversal(mwide, scheme, ParameterAssignment::uniform(mwide, ONE, ONE)),
        cap_exceeded);
}

TEST_CASE("parameter files parse and validate") {
    const BinaryMatroid m = BinaryMatroid::from_ia(single(false));
    const auto entries = itp::parse_parameter_file(
        "# q(G) values\n"
        "v phi a=1 b=1\n"
        "v chi a=x-1 b=1\n");
    const ParameterAssignment asg = itp::assignment_from_entries(m, entries);
    CHECK(asg.a({"v", LabelKind::chi}) == var("x") - ONE);

    CHECK_THROWS_AS((void)itp::parse_parameter_file("v phi a=1\n"), itp::parse_error);
    CHECK_THROWS_AS((void)itp::parse_parameter_file("v zeta a=1 b=1\n"), itp::parse_error);
    CHECK_THROWS_AS((void)itp::assignment_from_entries(
                        m, itp::parse_parameter_file("v phi a=1 b=1\n")),
                    itp::parse_error);  // missing chi entry
    CHECK_THROWS_AS((void)itp::assignment_from_entries(
                        m, itp::parse_parameter_file("v phi a=1 b=1\nv phi a=2 b=1\n")),
                    itp::parse_error);  // duplicate
    CHECK_THROWS_AS((void)itp::assignment_from_entries(
                        m, itp::parse_parameter_file("v phi a=1 b=1\nv chi a=1 b=1\nw phi a=1 b=1\n")),
                    itp::parse_error);  // unknown element
}
