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

#ifndef ITP_TUTTE_HPP
#define ITP_TUTTE_HPP

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matroid.hpp"
#include "multipoly.hpp"

namespace itp {

/// Variable names used by symbolic parameter assignments: a_<vertex>_<kind>.
std::string param_var_a(const GroundLabel& w);
std::string param_var_b(const GroundLabel& w);

/**
 * Per-element parameter pair (a, b): a weights subsets containing the
 * element, b weights subsets that do not.
 */
class ParameterAssignment {
   public:
    ParameterAssignment() = default;

    /// a and b as fresh indeterminates for every ground element.
    static ParameterAssignment symbolic(const BinaryMatroid& m);

    /// The same (a, b) pair for every ground element.
    static ParameterAssignment uniform(const BinaryMatroid& m, const MultiPoly& a,
                                       const MultiPoly& b);

    void set(const GroundLabel& w, MultiPoly a, MultiPoly b);
    bool has(const GroundLabel& w) const { return values_.count(w) != 0; }
    const MultiPoly& a(const GroundLabel& w) const;
    const MultiPoly& b(const GroundLabel& w) const;

    /// True when every stored a and b is a constant polynomial.
    bool all_constant() const;

    std::size_t size() const { return values_.size(); }

   private:
    std::map<GroundLabel, std::pair<MultiPoly, MultiPoly>> values_;

    const std::pair<MultiPoly, MultiPoly>& entry(const GroundLabel& w) const;
};

/// One parsed line of a parameter file: "<vertex> <phi|chi|psi> a=<poly> b=<poly>".
struct ParameterEntry {
    GroundLabel label;
    MultiPoly a;
    MultiPoly b;
};

std::vector<ParameterEntry> parse_parameter_file(std::string_view text);

/// Builds the assignment for m's ground set; every element must be covered
/// exactly once and no entry may name an element outside the ground set.
ParameterAssignment assignment_from_entries(const BinaryMatroid& m,
                                            std::span<const ParameterEntry> entries);

/**
 * Partition of the ground set into one class per vertex: {v_phi, v_chi} for
 * IA-style matroids, {v_phi, v_chi, v_psi} for IAS-style ones. All classes
 * must have the same size.
 */
class TransversalScheme {
   public:
    static TransversalScheme for_matroid(const BinaryMatroid& m);

    const std::vector<std::vector<GroundLabel>>& classes() const { return classes_; }
    std::size_t class_count() const { return classes_.size(); }
    std::size_t class_size() const { return classes_.empty() ? 0 : classes_[0].size(); }

   private:
    std::vector<std::vector<GroundLabel>> classes_;
};

/// Enumeration refusal thresholds; exceeding one raises cap_exceeded.
struct EnumLimits {
    std::size_t subset_elements = 30;
    std::size_t transversal_classes = 24;
};

/// Tutte polynomial by subset expansion:
/// sum over T of s^(r(W)-r(T)) z^(|T|-r(T)).
MultiPoly tutte_subset(const BinaryMatroid& m, const EnumLimits& limits = {});

/// Parametrized rank polynomial by subset expansion:
/// sum over T of (prod a over T)(prod b over complement) s^(r(W)-r(T)) z^(|T|-r(T)).
MultiPoly param_rank_subset(const BinaryMatroid& m, const ParameterAssignment& asg,
                            const EnumLimits& limits = {});

/// Same value as param_rank_subset, computed by loop/coloop recursion on the
/// first ground element in label order:
///   tau(empty) = 1
///   coloop w:  (a(w) + s b(w)) tau(M/w)
///   loop w:    (b(w) + z a(w)) tau(M-w)
///   otherwise: b(w) tau(M-w) + a(w) tau(M/w)
MultiPoly param_rank_recursive(const BinaryMatroid& m, const ParameterAssignment& asg,
                               const EnumLimits& limits = {});

/// Drops every monomial divisible by a generator of the transversal ideal:
/// for 2-classes, both a(v_phi), a(v_chi) or both b(v_phi), b(v_chi); for
/// 3-classes, any two of the a's or all three b's. On multilinear parameter
/// monomials this computes the canonical representative of the section.
MultiPoly pi_project(const MultiPoly& p, const TransversalScheme& scheme);

/// Section by direct transversal enumeration:
/// sum over transversals T of (prod a)(prod b) u^(#classes - r(T)),
/// where u stands for the product sz (on transversals both exponents agree).
MultiPoly section_transversal(const BinaryMatroid& m, const TransversalScheme& scheme,
                              const ParameterAssignment& asg, const EnumLimits& limits = {});

/// Same sum restricted to transversals containing every label in `required`.
MultiPoly section_transversal_filtered(const BinaryMatroid& m, const TransversalScheme& scheme,
                                       const ParameterAssignment& asg,
                                       std::span<const GroundLabel> required,
                                       const EnumLimits& limits = {});

}  // namespace itp

#endif
