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

#ifndef ITP_INTERLACE_HPP
#define ITP_INTERLACE_HPP

#include <cstdint>
#include <string>

#include "graph.hpp"
#include "multipoly.hpp"
#include "tutte.hpp"

namespace itp {

/**
 * Two-variable interlace polynomial by subset expansion:
 * sum over vertex subsets S of (x-1)^r(A[S]) (y-1)^(|S|-r(A[S])),
 * with r the GF(2) rank of the principal submatrix.
 *
 * threads = 0 picks a worker count automatically; any thread count yields
 * bit-identical results (workers fill disjoint (rank, size) count tables
 * that are merged by exact addition).
 */
MultiPoly q_subset(const LoopedGraph& g, unsigned threads = 0, const EnumLimits& limits = {});

/**
 * Same polynomial by graph recursion. Isolated vertices come off as factors
 * (x per looped, y per unlooped); a looped vertex with a neighbor is removed
 * by q(G) = q(G-v) + (x-1) q(G^v - v); otherwise the first edge joins two
 * unlooped vertices v, w and
 * q(G) = q(G-v) + q(G^vw - w) - q(G^vw - v - w) + (x-1)^2 q(G^vw - v - w).
 */
MultiPoly q_recursive(const LoopedGraph& g);

/**
 * Same polynomial recovered from the matroid section: the transversal sum
 * of M(IA(G)) under a(v_phi)=1, a(v_chi)=x-1, b=1 is grouped by powers of u,
 * and u^e is rewritten as (y-1)^e / (x-1)^e, the division being exact.
 */
MultiPoly q_from_section(const LoopedGraph& g, const EnumLimits& limits = {});

/// a(v_phi)=1, a(v_chi)=x-1, b=1 everywhere (psi elements, when present,
/// keep a=0, b=1 so an IAS matroid reduces to its IA part).
ParameterAssignment interlace_assignment(const BinaryMatroid& m);

/// Exact evaluation of a polynomial in x and y only.
Rat q_evaluate(const MultiPoly& p, const Rat& x_val, const Rat& y_val);

enum class QMethod { subset, recursive, section };

std::string_view q_method_name(QMethod m);

struct InterlaceResult {
    MultiPoly polynomial;
    QMethod method;
    std::uint64_t graph_fingerprint;
};

InterlaceResult compute_q(const LoopedGraph& g, QMethod method, unsigned threads = 0);

/// FNV-1a hash of the canonical graph serialization.
std::uint64_t graph_fingerprint(const LoopedGraph& g);

}  // namespace itp

#endif
