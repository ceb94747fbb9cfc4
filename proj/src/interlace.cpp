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

#include "interlace.hpp"

#include <bit>
#include <stdexcept>
#include <thread>

#include "errors.hpp"

namespace itp {

namespace {

using CountTable = std::vector<std::vector<std::uint64_t>>;  // [rank][size]

void count_range(const BitMatrix& a, std::uint64_t lo, std::uint64_t hi, CountTable& counts) {
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        const std::size_t r = a.rank_principal_masked(mask);
        counts[r][static_cast<std::size_t>(std::popcount(mask))] += 1;
    }
}

MultiPoly expand_counts(const CountTable& counts, std::size_t n) {
    const MultiPoly xm1 = MultiPoly::variable("x") - MultiPoly::one();
    const MultiPoly ym1 = MultiPoly::variable("y") - MultiPoly::one();
    std::vector<MultiPoly> xp(n + 1), yp(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        xp[i] = xm1.pow(static_cast<std::uint32_t>(i));
        yp[i] = ym1.pow(static_cast<std::uint32_t>(i));
    }
    MultiPoly result;
    for (std::size_t r = 0; r <= n; ++r) {
        for (std::size_t k = r; k <= n; ++k) {
            if (counts[r][k] == 0) continue;
            result += MultiPoly::constant(Int(static_cast<unsigned long>(counts[r][k]))) *
                      xp[r] * yp[k - r];
        }
    }
    return result;
}

}  // namespace

MultiPoly q_subset(const LoopedGraph& g, unsigned threads, const EnumLimits& limits) {
    const std::size_t n = g.vertex_count();
    if (n > limits.subset_elements)
        throw cap_exceeded("subset expansion over " + std::to_string(n) +
                           " vertices exceeds the cap of " + std::to_string(limits.subset_elements));
    const BitMatrix a = g.adjacency_matrix();
    const std::uint64_t total = std::uint64_t{1} << n;

    unsigned workers = threads;
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    if (n < 14) workers = 1;  // not worth spawning threads

    CountTable counts(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    if (workers <= 1) {
        count_range(a, 0, total, counts);
    } else {
        std::vector<CountTable> partial(workers,
                                        CountTable(n + 1, std::vector<std::uint64_t>(n + 1, 0)));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) {
            const std::uint64_t lo = total / workers * t;
            const std::uint64_t hi = t + 1 == workers ? total : total / workers * (t + 1);
            pool.emplace_back([&a, lo, hi, &tab = partial[t]] { count_range(a, lo, hi, tab); });
        }
        for (auto& th : pool) th.join();
        for (const auto& tab : partial) {
            for (std::size_t r = 0; r <= n; ++r) {
                for (std::size_t k = 0; k <= n; ++k) counts[r][k] += tab[r][k];
            }
        }
    }
    return expand_counts(counts, n);
}

MultiPoly q_recursive(const LoopedGraph& g) {
    const MultiPoly x = MultiPoly::variable("x");
    const MultiPoly y = MultiPoly::variable("y");
    const MultiPoly xm1 = x - MultiPoly::one();

    MultiPoly factor = MultiPoly::one();
    LoopedGraph h = g;

    // Strip isolated vertices into multiplicative base factors.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < h.vertex_count(); ++i) {
            if (h.isolated(i)) {
                factor *= h.looped(i) ? x : y;
                h = h.delete_vertex_at(i);
                changed = true;
                break;
            }
        }
    }
    if (h.vertex_count() == 0) return factor;

    // A looped vertex, if present, is non-isolated here: use the local
    // complementation rule at the first one.
    for (std::size_t i = 0; i < h.vertex_count(); ++i) {
        if (h.looped(i)) {
            const MultiPoly rest =
                q_recursive(h.delete_vertex_at(i)) +
                xm1 * q_recursive(h.local_complement_at(i).delete_vertex_at(i));
            return factor * rest;
        }
    }

    // All vertices unlooped and non-isolated: pivot on the first edge.
    const std::size_t v = 0;
    const std::size_t w = h.neighbors(v).front();
    const LoopedGraph piv = h.pivot_at(v, w);
    const LoopedGraph piv_w = piv.delete_vertex_at(w);
    const LoopedGraph piv_vw = piv_w.delete_vertex_at(v < w ? v : v - 1);
    const MultiPoly q_vw = q_recursive(piv_vw);
    const MultiPoly rest =
        q_recursive(h.delete_vertex_at(v)) + q_recursive(piv_w) - q_vw + xm1 * xm1 * q_vw;
    return factor * rest;
}

ParameterAssignment interlace_assignment(const BinaryMatroid& m) {
    const MultiPoly one = MultiPoly::one();
    const MultiPoly xm1 = MultiPoly::variable("x") - one;
    ParameterAssignment asg;
    for (const auto& w : m.ground()) {
        switch (w.kind) {
            case LabelKind::phi:
                asg.set(w, one, one);
                break;
            case LabelKind::chi:
                asg.set(w, xm1, one);
                break;
            case LabelKind::psi:
                asg.set(w, MultiPoly(), one);
                break;
        }
    }
    return asg;
}

MultiPoly q_from_section(const LoopedGraph& g, const EnumLimits& limits) {
    const BinaryMatroid m = BinaryMatroid::from_ia(g);
    const TransversalScheme scheme = TransversalScheme::for_matroid(m);
    const MultiPoly section = section_transversal(m, scheme, interlace_assignment(m), limits);

    const MultiPoly xm1 = MultiPoly::variable("x") - MultiPoly::one();
    const MultiPoly ym1 = MultiPoly::variable("y") - MultiPoly::one();
    MultiPoly result;
    for (const auto& [e, coeff] : section.coefficients_of("u")) {
        // Each transversal carries at least (x-1)^e, so this division is exact.
        result += MultiPoly::divide_exact(coeff, xm1.pow(e)) * ym1.pow(e);
    }
    return result;
}

Rat q_evaluate(const MultiPoly& p, const Rat& x_val, const Rat& y_val) {
    for (const auto& v : p.variables()) {
        if (v != "x" && v != "y")
            throw std::invalid_argument("q_evaluate: polynomial has foreign variable " + v);
    }
    return p.eval({{"x", x_val}, {"y", y_val}});
}

std::string_view q_method_name(QMethod m) {
    switch (m) {
        case QMethod::subset:
            return "subset";
        case QMethod::recursive:
            return "recursive";
        case QMethod::section:
            return "section";
    }
    return "?";
}

InterlaceResult compute_q(const LoopedGraph& g, QMethod method, unsigned threads) {
    InterlaceResult result;
    result.method = method;
    result.graph_fingerprint = graph_fingerprint(g);
    switch (method) {
        case QMethod::subset:
            result.polynomial = q_subset(g, threads);
            break;
        case QMethod::recursive:
            result.polynomial = q_recursive(g);
            break;
        case QMethod::section:
            result.polynomial = q_from_section(g);
            break;
    }
    return result;
}

std::uint64_t graph_fingerprint(const LoopedGraph& g) {
    const std::string text = g.to_text();
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace itp
