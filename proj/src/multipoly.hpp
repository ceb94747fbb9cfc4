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

#ifndef ITP_MULTIPOLY_HPP
#define ITP_MULTIPOLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace itp {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p" or "p/q" (decimal, optional sign) into an exact rational.
Rat parse_rational(std::string_view text);
std::string rational_to_string(const Rat& r);

/**
 * Sparse multivariate polynomial with exact integer coefficients over named
 * variables.
 *
 * Canonical form is maintained by every operation: the variable list is
 * sorted, contains only variables that actually occur, no stored coefficient
 * is zero, and terms are ordered graded-lexicographically (highest total
 * degree first, ties broken by the lexicographically larger exponent vector).
 * Two polynomials are equal iff their canonical forms are identical, so
 * operator== is structural.
 */
class MultiPoly {
   public:
    struct Term {
        std::vector<std::uint32_t> exponents;  // aligned with variables()
        Int coeff;
    };

    MultiPoly() = default;  // zero polynomial

    static MultiPoly constant(Int value);
    static MultiPoly constant(long value) { return constant(Int(value)); }
    static MultiPoly variable(const std::string& name);
    static MultiPoly one() { return constant(1); }

    /// coeff * prod vars[i]^exponents[i]; vars must be sorted and distinct.
    static MultiPoly monomial(const std::vector<std::string>& vars,
                              std::vector<std::uint32_t> exponents, Int coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const { return vars_.empty(); }
    /// Constant term's value; the polynomial must be constant.
    const Int& constant_value() const;

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t term_count() const { return terms_.size(); }
    /// Terms in canonical order.
    std::vector<Term> terms() const;

    std::uint32_t degree_in(const std::string& var) const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const MultiPoly& other);
    friend MultiPoly operator*(long c, const MultiPoly& p) { return constant(c) * p; }

    MultiPoly pow(std::uint32_t k) const;

    /// Replaces var^k by value^k, expanded exactly; absent variables are a no-op.
    MultiPoly substitute(const std::string& var, const MultiPoly& value) const;

    /// Exact evaluation; every variable of the polynomial must be assigned.
    Rat eval(const std::map<std::string, Rat>& point) const;

    /// Exact quotient p/d; throws exact_division_error when d does not divide p.
    static MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& d);

    /// Splits p as sum_e coeff_e * var^e; keys are the exponents that occur.
    std::map<std::uint32_t, MultiPoly> coefficients_of(const std::string& var) const;

    /// Human-readable sum in canonical term order, e.g. "x^2 - 2*x + 2*y".
    std::string to_text() const;

    /// Canonical JSON: variables sorted, coefficients as decimal strings.
    std::string to_json() const;

    /// Parses the to_text() syntax: +, -, *, ^, parentheses, integers,
    /// variable names matching [A-Za-z_][A-Za-z0-9_]*.
    static MultiPoly parse(std::string_view text);

    bool operator==(const MultiPoly& other) const = default;

   private:
    struct GradedLexDesc {
        bool operator()(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const;
    };
    using TermMap = std::map<std::vector<std::uint32_t>, Int, GradedLexDesc>;

    std::vector<std::string> vars_;
    TermMap terms_;

    void normalize();
    // Re-expresses the polynomial over the (sorted, superset) variable list.
    MultiPoly with_variables(const std::vector<std::string>& vars) const;
    static std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                               const std::vector<std::string>& b);
};

}  // namespace itp

#endif
