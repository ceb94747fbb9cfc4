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

#ifndef ITP_CHECKS_HPP
#define ITP_CHECKS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "interlace.hpp"
#include "matroid.hpp"
#include "tutte.hpp"

namespace itp {

// ---------------------------------------------------------------------------
// Graph generation

/// Number of looped simple graphs on n labeled vertices: 2^(n + n(n-1)/2).
std::uint64_t looped_graph_count(unsigned n);

/// Graph number `mask` on vertices v1..vn: the low n bits are loop flags,
/// the remaining n(n-1)/2 bits are edges in lexicographic pair order.
LoopedGraph graph_from_mask(unsigned n, std::uint64_t mask);

/// Uniform loops and edges (probability 1/2 each).
LoopedGraph random_graph(std::mt19937_64& rng, unsigned n);

/// Random graph of `n >= 2` vertices where vertex 0 is unlooped and pendant
/// on vertex 1.
LoopedGraph random_graph_with_pendant(std::mt19937_64& rng, unsigned n);

/// Random graph of `n >= 3` vertices where vertices 0 and 1 are twins:
/// equal loop flags and identical neighborhoods outside the pair, with at
/// least one outside neighbor (so the twin columns are nonzero after
/// contraction).
LoopedGraph random_graph_with_twins(std::mt19937_64& rng, unsigned n);

/// Assignment with uniformly random integer constants in [lo, hi].
ParameterAssignment random_int_assignment(const BinaryMatroid& m, std::mt19937_64& rng,
                                          int lo = -3, int hi = 3);

// ---------------------------------------------------------------------------
// Identity checks (exact; return false on the first violation)

/// r(T) == |V| - |S(T)| + rank(A[S(T)]) over all transversals of M(IA(G)).
bool rank_identity_holds(const LoopedGraph& g);

/// M(IA(G-v)) == (M(IA(G))/v_phi) - v_chi as rank functions, for every v.
bool minor_identity_holds(const LoopedGraph& g);

/// For looped v and transversals T containing v_chi:
/// r(T) == 1 + rank of T - {v_chi} in M(IA(G^v - v)).
bool looped_pivot_lemma_holds(const LoopedGraph& g);

/// For unlooped neighbors v, w:
///   T containing v_chi, w_phi: r(T) - 1 == rank in M(IA(G^vw - w)) of T - {w_phi}
///   T containing v_chi, w_chi: r(T) == 2 + rank in M(IA(G^vw - v - w)) of T - {v_chi, w_chi}
bool unlooped_pivot_lemmas_hold(const LoopedGraph& g);

/// Columns v_chi and w_phi are parallel in M(IA(G)) when v is an unlooped
/// degree-1 vertex with neighbor w.
bool pendant_parallel_holds(const LoopedGraph& g, const std::string& v, const std::string& w);

/// Columns v_chi and w_chi are parallel in M(IA(G))/{v_phi, w_phi} for twins
/// with at least one neighbor outside the pair.
bool twin_parallel_holds(const LoopedGraph& g, const std::string& v, const std::string& w);

/// Section computed by scanning all 2^|W| subsets and keeping transversals;
/// the subset-expansion counterpart of section_transversal, used to
/// cross-check it.
MultiPoly transversal_section_by_subsets(const BinaryMatroid& m, const TransversalScheme& scheme,
                                         const ParameterAssignment& asg);

// ---------------------------------------------------------------------------
// Check suites (CLI `check` and `selfcheck`)

struct CheckLine {
    std::string name;
    bool pass;
    bool skipped = false;
    std::string detail;
};

struct CheckEffort {
    /// Largest 2^bits subset scan a single check may run.
    std::size_t max_oracle_bits = 18;
    std::uint64_t seed = 0x17d0a3c5u;
};

std::vector<CheckLine> check_methods(const LoopedGraph& g);
std::vector<CheckLine> check_section(const LoopedGraph& g, const CheckEffort& effort = {});
std::vector<CheckLine> check_ias(const LoopedGraph& g, const CheckEffort& effort = {});
std::vector<CheckLine> check_identities(const LoopedGraph& g);

/// suite: methods | section | ias | identities | all
std::vector<CheckLine> check_suite(const LoopedGraph& g, std::string_view suite,
                                   const CheckEffort& effort = {});

std::string render_check_lines(const std::vector<CheckLine>& lines);
bool all_passed(const std::vector<CheckLine>& lines);

struct SelfCheckReport {
    unsigned max_vertices = 0;
    std::uint64_t exhaustive_checked = 0;
    std::uint64_t random_checked = 0;
    std::uint64_t failures = 0;
    std::string first_failure;  // graph text + failing line, empty if none

    bool all_passed() const { return failures == 0; }
    std::string render() const;
};

/// Runs the full identity suite on every looped simple graph on exactly
/// `max_vertices` labeled vertices, plus `random_extra` random graphs on
/// 6..9 vertices; deterministic for a fixed seed.
SelfCheckReport selfcheck(unsigned max_vertices, std::uint64_t seed, std::uint64_t random_extra);

}  // namespace itp

#endif
