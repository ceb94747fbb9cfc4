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

#include "tutte.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>
#include <type_traits>

#include "errors.hpp"

namespace itp {

namespace {

// Masked rank over single-word rows; avoids the general path's heap buffer.
std::size_t rank_masked_1w(const BitMatrix& m, std::uint64_t mask) {
    std::uint64_t basis[64] = {};
    std::size_t rank = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::uint64_t v = m.row_words(r)[0] & mask;
        while (v != 0) {
            const int b = std::countr_zero(v);
            if (basis[b] != 0) {
                v ^= basis[b];
            } else {
                basis[b] = v;
                ++rank;
                break;
            }
        }
    }
    return rank;
}

std::size_t rank_masked(const BitMatrix& m, std::span<const std::uint64_t> mask) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.words_per_row() == 1) return rank_masked_1w(m, mask[0]);
    return m.rank_columns_masked(mask);
}

MultiPoly sz_monomial(std::uint32_t s_exp, std::uint32_t z_exp) {
    if (s_exp == 0 && z_exp == 0) return MultiPoly::one();
    if (s_exp == 0) return MultiPoly::monomial({"z"}, {z_exp}, 1);
    if (z_exp == 0) return MultiPoly::monomial({"s"}, {s_exp}, 1);
    return MultiPoly::monomial({"s", "z"}, {s_exp, z_exp}, 1);
}

}  // namespace

std::string param_var_a(const GroundLabel& w) { return "a_" + w.to_string(); }
std::string param_var_b(const GroundLabel& w) { return "b_" + w.to_string(); }

ParameterAssignment ParameterAssignment::symbolic(const BinaryMatroid& m) {
    ParameterAssignment asg;
    for (const auto& w : m.ground()) {
        asg.set(w, MultiPoly::variable(param_var_a(w)), MultiPoly::variable(param_var_b(w)));
    }
    return asg;
}

ParameterAssignment ParameterAssignment::uniform(const BinaryMatroid& m, const MultiPoly& a,
                                                 const MultiPoly& b) {
    ParameterAssignment asg;
    for (const auto& w : m.ground()) asg.set(w, a, b);
    return asg;
}

void ParameterAssignment::set(const GroundLabel& w, MultiPoly a, MultiPoly b) {
    values_[w] = {std::move(a), std::move(b)};
}

const std::pair<MultiPoly, MultiPoly>& ParameterAssignment::entry(const GroundLabel& w) const {
    const auto it = values_.find(w);
    if (it == values_.end())
        throw std::invalid_argument("missing parameter assignment for " + w.to_string());
    return it->second;
}

const MultiPoly& ParameterAssignment::a(const GroundLabel& w) const { return entry(w).first; }
const MultiPoly& ParameterAssignment::b(const GroundLabel& w) const { return entry(w).second; }

bool ParameterAssignment::all_constant() const {
    for (const auto& [w, ab] : values_) {
        if (!ab.first.is_constant() || !ab.second.is_constant()) return false;
    }
    return true;
}

std::vector<ParameterEntry> parse_parameter_file(std::string_view text) {
    std::vector<ParameterEntry> entries;
    std::size_t pos = 0;
    std::size_t lineno = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        const bool last = eol == text.size();
        pos = eol + 1;
        ++lineno;

        std::vector<std::string> tokens;
        {
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
                std::size_t start = i;
                while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
                if (i > start) tokens.emplace_back(line.substr(start, i - start));
            }
        }
        if (tokens.empty() || tokens[0][0] == '#') {
            if (last) break;
            continue;
        }
        const std::string where = "parameter file line " + std::to_string(lineno);
        if (tokens.size() != 4) throw parse_error(where + ": expected '<vertex> <kind> a=... b=...'");
        LabelKind kind;
        if (tokens[1] == "phi")
            kind = LabelKind::phi;
        else if (tokens[1] == "chi")
            kind = LabelKind::chi;
        else if (tokens[1] == "psi")
            kind = LabelKind::psi;
        else
            throw parse_error(where + ": unknown kind '" + tokens[1] + "'");
        if (tokens[2].rfind("a=", 0) != 0) throw parse_error(where + ": expected 'a=<poly>'");
        if (tokens[3].rfind("b=", 0) != 0) throw parse_error(where + ": expected 'b=<poly>'");
        ParameterEntry e;
        e.label = {tokens[0], kind};
        e.a = MultiPoly::parse(tokens[2].substr(2));
        e.b = MultiPoly::parse(tokens[3].substr(2));
        entries.push_back(std::move(e));
        if (last) break;
    }
    return entries;
}

ParameterAssignment assignment_from_entries(const BinaryMatroid& m,
                                            std::span<const ParameterEntry> entries) {
    ParameterAssignment asg;
    for (const auto& e : entries) {
        if (!m.has_element(e.label))
            throw parse_error("parameter entry for element not in the ground set: " +
                              e.label.to_string());
        if (asg.has(e.label))
            throw parse_error("duplicate parameter entry: " + e.label.to_string());
        asg.set(e.label, e.a, e.b);
    }
    for (const auto& w : m.ground()) {
        if (!asg.has(w))
            throw parse_error("missing parameter entry: " + w.to_string());
    }
    return asg;
}

TransversalScheme TransversalScheme::for_matroid(const BinaryMatroid& m) {
    TransversalScheme scheme;
    std::vector<std::string> order;
    for (const auto& w : m.ground()) {
        if (std::find(order.begin(), order.end(), w.vertex) == order.end())
            order.push_back(w.vertex);
    }
    for (const auto& v : order) {
        std::vector<GroundLabel> cls;
        for (const auto& w : m.ground()) {
            if (w.vertex == v) cls.push_back(w);
        }
        std::sort(cls.begin(), cls.end(),
                  [](const GroundLabel& a, const GroundLabel& b) { return a.kind < b.kind; });
        scheme.classes_.push_back(std::move(cls));
    }
    const std::size_t k = scheme.class_size();
    if (k != 0 && k != 2 && k != 3)
        throw std::invalid_argument("transversal classes must have size 2 or 3");
    for (const auto& cls : scheme.classes_) {
        if (cls.size() != k)
            throw std::invalid_argument("transversal classes must all have the same size");
    }
    return scheme;
}

namespace {

void check_scheme(const BinaryMatroid& m, const TransversalScheme& scheme) {
    std::vector<GroundLabel> covered;
    for (const auto& cls : scheme.classes()) {
        for (const auto& w : cls) covered.push_back(w);
    }
    std::vector<GroundLabel> ground = m.ground();
    std::sort(covered.begin(), covered.end());
    std::sort(ground.begin(), ground.end());
    if (covered != ground)
        throw std::invalid_argument("transversal scheme does not partition the ground set");
}

void check_assignment(const BinaryMatroid& m, const ParameterAssignment& asg) {
    for (const auto& w : m.ground()) {
        (void)asg.a(w);  // throws on missing entry
    }
}

}  // namespace

MultiPoly tutte_subset(const BinaryMatroid& m, const EnumLimits& limits) {
    const std::size_t n = m.ground_size();
    if (n > limits.subset_elements)
        throw cap_exceeded("subset expansion over " + std::to_string(n) +
                           " elements exceeds the cap of " + std::to_string(limits.subset_elements));
    const std::size_t rw = m.rank_full();
    // counts[r][k] = number of subsets of size k and rank r
    std::vector<std::vector<std::uint64_t>> counts(rw + 1,
                                                   std::vector<std::uint64_t>(n + 1, 0));
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const std::size_t r = rank_masked(m.matrix(), std::span(&mask, 1));
        counts[r][static_cast<std::size_t>(std::popcount(mask))] += 1;
    }
    MultiPoly result;
    for (std::size_t r = 0; r <= rw; ++r) {
        for (std::size_t k = 0; k <= n; ++k) {
            if (counts[r][k] == 0) continue;
            MultiPoly term = sz_monomial(static_cast<std::uint32_t>(rw - r),
                                         static_cast<std::uint32_t>(k - r));
            result += MultiPoly::constant(Int(static_cast<unsigned long>(counts[r][k]))) * term;
        }
    }
    return result;
}

namespace {

// DFS over in/out decisions with running weight products. Zero weights prune
// the whole subtree (every deeper product stays zero).
template <typename Weight, typename Leaf>
void weighted_subset_walk(std::size_t i, std::size_t n, std::uint64_t mask, const Weight& weight,
                          const std::vector<Weight>& a, const std::vector<Weight>& b,
                          const Leaf& leaf) {
    if (i == n) {
        leaf(mask, weight);
        return;
    }
    {
        const Weight excluded = weight * b[i];
        if (!(excluded == Weight{}))
            weighted_subset_walk(i + 1, n, mask, excluded, a, b, leaf);
    }
    {
        const Weight included = weight * a[i];
        if (!(included == Weight{}))
            weighted_subset_walk(i + 1, n, mask | (std::uint64_t{1} << i), included, a, b, leaf);
    }
}

}  // namespace

MultiPoly param_rank_subset(const BinaryMatroid& m, const ParameterAssignment& asg,
                            const EnumLimits& limits) {
    const std::size_t n = m.ground_size();
    if (n > limits.subset_elements)
        throw cap_exceeded("subset expansion over " + std::to_string(n) +
                           " elements exceeds the cap of " + std::to_string(limits.subset_elements));
    check_assignment(m, asg);
    const std::size_t rw = m.rank_full();

    if (asg.all_constant()) {
        std::vector<Int> av, bv;
        for (const auto& w : m.ground()) {
            av.push_back(asg.a(w).is_zero() ? Int(0) : asg.a(w).constant_value());
            bv.push_back(asg.b(w).is_zero() ? Int(0) : asg.b(w).constant_value());
        }
        std::vector<std::vector<Int>> sums(rw + 1, std::vector<Int>(n + 1, Int(0)));
        weighted_subset_walk<Int>(0, n, 0, Int(1), av, bv,
                                  [&](std::uint64_t mask, const Int& weight) {
                                      const std::size_t r =
                                          rank_masked(m.matrix(), std::span(&mask, 1));
                                      sums[r][static_cast<std::size_t>(std::popcount(mask))] +=
                                          weight;
                                  });
        MultiPoly result;
        for (std::size_t r = 0; r <= rw; ++r) {
            for (std::size_t k = 0; k <= n; ++k) {
                if (sums[r][k] == 0) continue;
                result += MultiPoly::constant(sums[r][k]) *
                          sz_monomial(static_cast<std::uint32_t>(rw - r),
                                      static_cast<std::uint32_t>(k - r));
            }
        }
        return result;
    }

    std::vector<MultiPoly> av, bv;
    for (const auto& w : m.ground()) {
        av.push_back(asg.a(w));
        bv.push_back(asg.b(w));
    }
    std::map<std::pair<std::size_t, std::size_t>, MultiPoly> groups;
    weighted_subset_walk<MultiPoly>(0, n, 0, MultiPoly::one(), av, bv,
                                    [&](std::uint64_t mask, const MultiPoly& weight) {
                                        const std::size_t r =
                                            rank_masked(m.matrix(), std::span(&mask, 1));
                                        const std::size_t k =
                                            static_cast<std::size_t>(std::popcount(mask));
                                        groups[{r, k}] += weight;
                                    });
    MultiPoly result;
    for (const auto& [rk, weight] : groups) {
        result += weight * sz_monomial(static_cast<std::uint32_t>(rw - rk.first),
                                       static_cast<std::uint32_t>(rk.second - rk.first));
    }
    return result;
}

namespace {

MultiPoly param_rank_rec(const BinaryMatroid& m, const ParameterAssignment& asg,
                         std::size_t rank_m, const MultiPoly& s, const MultiPoly& z) {
    if (m.ground_size() == 0) return MultiPoly::one();
    const GroundLabel& w = m.ground().front();
    const MultiPoly& a = asg.a(w);
    const MultiPoly& b = asg.b(w);

    if (m.matrix().column_is_zero(0)) {
        return (b + z * a) * param_rank_rec(m.deleted(w), asg, rank_m, s, z);
    }
    std::vector<std::uint64_t> mask(m.matrix().words_per_row(), 0);
    for (std::size_t c = 1; c < m.matrix().cols(); ++c)
        mask[c / 64] |= std::uint64_t{1} << (c % 64);
    const std::size_t rank_without = rank_masked(m.matrix(), mask);
    if (rank_without < rank_m) {  // coloop
        return (a + s * b) * param_rank_rec(m.contracted(w), asg, rank_m - 1, s, z);
    }
    return b * param_rank_rec(m.deleted(w), asg, rank_m, s, z) +
           a * param_rank_rec(m.contracted(w), asg, rank_m - 1, s, z);
}

}  // namespace

MultiPoly param_rank_recursive(const BinaryMatroid& m, const ParameterAssignment& asg,
                               const EnumLimits& limits) {
    if (m.ground_size() > limits.subset_elements)
        throw cap_exceeded("recursion over " + std::to_string(m.ground_size()) +
                           " elements exceeds the cap of " + std::to_string(limits.subset_elements));
    check_assignment(m, asg);
    const MultiPoly s = MultiPoly::variable("s");
    const MultiPoly z = MultiPoly::variable("z");
    return param_rank_rec(m, asg, m.rank_full(), s, z);
}

MultiPoly pi_project(const MultiPoly& p, const TransversalScheme& scheme) {
    // variable index -> (class index, is_a, member index), for parameter vars
    struct Slot {
        std::size_t cls;
        bool is_a;
    };
    std::map<std::string, Slot> slots;
    for (std::size_t c = 0; c < scheme.class_count(); ++c) {
        for (const auto& w : scheme.classes()[c]) {
            slots.emplace(param_var_a(w), Slot{c, true});
            slots.emplace(param_var_b(w), Slot{c, false});
        }
    }
    const auto& vars = p.variables();
    std::vector<const Slot*> var_slot(vars.size(), nullptr);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const auto it = slots.find(vars[i]);
        if (it != slots.end()) var_slot[i] = &it->second;
    }
    const std::size_t k = scheme.class_size();
    MultiPoly result;
    std::vector<std::uint8_t> a_count(scheme.class_count());
    std::vector<std::uint8_t> b_count(scheme.class_count());
    for (const auto& term : p.terms()) {
        std::fill(a_count.begin(), a_count.end(), 0);
        std::fill(b_count.begin(), b_count.end(), 0);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (term.exponents[i] == 0 || var_slot[i] == nullptr) continue;
            if (var_slot[i]->is_a)
                ++a_count[var_slot[i]->cls];
            else
                ++b_count[var_slot[i]->cls];
        }
        bool keep = true;
        for (std::size_t c = 0; c < scheme.class_count() && keep; ++c) {
            if (a_count[c] >= 2 || b_count[c] >= k) keep = false;
        }
        if (keep) result += MultiPoly::monomial(vars, term.exponents, term.coeff);
    }
    return result;
}

namespace {

template <typename Weight>
MultiPoly section_enumerate(const BinaryMatroid& m, const TransversalScheme& scheme,
                            const std::vector<std::vector<Weight>>& choice_weight,
                            const std::vector<std::vector<std::size_t>>& choice_col,
                            const std::vector<int>& forced) {
    const std::size_t nc = scheme.class_count();
    std::map<std::size_t, Weight> sums;  // u-exponent -> weight sum

    std::vector<std::size_t> choice(nc, 0);
    std::vector<std::uint64_t> mask(std::max<std::size_t>(m.matrix().words_per_row(), 1), 0);

    auto walk = [&](auto&& self, std::size_t c, const Weight& weight) -> void {
        if (c == nc) {
            std::fill(mask.begin(), mask.end(), 0);
            for (std::size_t i = 0; i < nc; ++i) {
                const std::size_t col = choice_col[i][choice[i]];
                mask[col / 64] |= std::uint64_t{1} << (col % 64);
            }
            const std::size_t r = rank_masked(m.matrix(), mask);
            auto [it, inserted] = sums.emplace(nc - r, weight);
            if (!inserted) it->second += weight;
            return;
        }
        for (std::size_t j = 0; j < choice_weight[c].size(); ++j) {
            if (forced[c] >= 0 && static_cast<std::size_t>(forced[c]) != j) continue;
            const Weight next = weight * choice_weight[c][j];
            if (next == Weight{}) continue;
            choice[c] = j;
            self(self, c + 1, next);
        }
    };
    Weight unit;
    if constexpr (std::is_same_v<Weight, Int>)
        unit = Int(1);
    else
        unit = MultiPoly::one();
    walk(walk, 0, unit);

    MultiPoly result;
    for (const auto& [e, weight] : sums) {
        MultiPoly u_term = e == 0 ? MultiPoly::one()
                                  : MultiPoly::monomial({"u"}, {static_cast<std::uint32_t>(e)}, 1);
        if constexpr (std::is_same_v<Weight, Int>)
            result += MultiPoly::constant(weight) * u_term;
        else
            result += weight * u_term;
    }
    return result;
}

}  // namespace

MultiPoly section_transversal_filtered(const BinaryMatroid& m, const TransversalScheme& scheme,
                                       const ParameterAssignment& asg,
                                       std::span<const GroundLabel> required,
                                       const EnumLimits& limits) {
    check_scheme(m, scheme);
    check_assignment(m, asg);
    const std::size_t nc = scheme.class_count();
    if (nc > limits.transversal_classes)
        throw cap_exceeded("transversal enumeration over " + std::to_string(nc) +
                           " classes exceeds the cap of " +
                           std::to_string(limits.transversal_classes));

    // Per class: the column of each member and the weight of choosing it,
    // which is a(member) times b of the other members of the same class.
    std::vector<std::vector<std::size_t>> choice_col(nc);
    std::vector<int> forced(nc, -1);
    for (std::size_t c = 0; c < nc; ++c) {
        const auto& cls = scheme.classes()[c];
        for (std::size_t j = 0; j < cls.size(); ++j) {
            choice_col[c].push_back(m.column_of(cls[j]));
            if (std::find(required.begin(), required.end(), cls[j]) != required.end()) {
                if (forced[c] >= 0)
                    throw std::invalid_argument(
                        "section filter requires two elements of one class");
                forced[c] = static_cast<int>(j);
            }
        }
    }
    for (const auto& w : required) {
        if (!m.has_element(w))
            throw std::invalid_argument("section filter element not in ground set: " +
                                        w.to_string());
    }

    if (asg.all_constant()) {
        std::vector<std::vector<Int>> weights(nc);
        for (std::size_t c = 0; c < nc; ++c) {
            const auto& cls = scheme.classes()[c];
            for (std::size_t j = 0; j < cls.size(); ++j) {
                Int wgt = asg.a(cls[j]).is_zero() ? Int(0) : asg.a(cls[j]).constant_value();
                for (std::size_t o = 0; o < cls.size(); ++o) {
                    if (o != j) wgt *= asg.b(cls[o]).is_zero() ? Int(0) : asg.b(cls[o]).constant_value();
                }
                weights[c].push_back(std::move(wgt));
            }
        }
        return section_enumerate<Int>(m, scheme, weights, choice_col, forced);
    }

    std::vector<std::vector<MultiPoly>> weights(nc);
    for (std::size_t c = 0; c < nc; ++c) {
        const auto& cls = scheme.classes()[c];
        for (std::size_t j = 0; j < cls.size(); ++j) {
            MultiPoly wgt = asg.a(cls[j]);
            for (std::size_t o = 0; o < cls.size(); ++o) {
                if (o != j) wgt *= asg.b(cls[o]);
            }
            weights[c].push_back(std::move(wgt));
        }
    }
    return section_enumerate<MultiPoly>(m, scheme, weights, choice_col, forced);
}

MultiPoly section_transversal(const BinaryMatroid& m, const TransversalScheme& scheme,
                              const ParameterAssignment& asg, const EnumLimits& limits) {
    return section_transversal_filtered(m, scheme, asg, {}, limits);
}

}  // namespace itp
