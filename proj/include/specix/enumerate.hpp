#pragma once

#include "specix/cycle_index.hpp"
#include "specix/fixfn.hpp"
#include "specix/inner_plethysm.hpp"
#include "specix/phi.hpp"
#include "specix/species.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace specix {

struct count_row {
    unsigned n = 0;
    int k = -1; // secondary index (outdegree, or edge count); -1 when absent
    bigint count;
};

/// Table of exact counts plus provenance notes (bounds used, solver used).
struct count_table {
    std::vector<count_row> rows;
    std::vector<std::string> notes;

    bigint at(unsigned n) const {
        for (const auto& r : rows)
            if (r.n == n && r.k == -1) return r.count;
        throw std::out_of_range("no row for n=" + std::to_string(n));
    }

    bigint at(unsigned n, int k) const {
        for (const auto& r : rows)
            if (r.n == n && r.k == k) return r.count;
        throw std::out_of_range("no row for n=" + std::to_string(n) + ",k=" + std::to_string(k));
    }
};

namespace detail {

inline void flatten_signed(const species_ptr& e, int sign,
                           std::vector<std::pair<int, species_ptr>>& out) {
    if (e->kind == species_kind::sum) {
        flatten_signed(e->a, sign, out);
        flatten_signed(e->b, sign, out);
    } else if (e->kind == species_kind::difference) {
        flatten_signed(e->a, sign, out);
        flatten_signed(e->b, -sign, out);
    } else {
        out.emplace_back(sign, e);
    }
}

} // namespace detail

/// Solves G_1 + G_1' = G at the fix-count level, for the loop-removal step
/// of the digraph pipeline. Handles G = (sum of copies of E) + (strictly
/// finite rest): the E part contributes the even-weight indicator, the rest
/// the alternating sum fix G_1[lambda] = sum_j (-1)^j fix G[augment(lambda,j)],
/// which terminates because the rest is strictly finite. The result is in
/// general a virtual species (signed fix counts).
inline fix_fn loopless_digraph_solution(const species_ptr& g) {
    std::vector<std::pair<int, species_ptr>> terms;
    detail::flatten_signed(expand_derivative(g), 1, terms);

    int e_coeff = 0;
    std::vector<std::pair<int, species_ptr>> rest;
    for (const auto& [sign, t] : terms) {
        if (t->kind == species_kind::set_species) {
            e_coeff += sign;
        } else if (strictly_finite(t)) {
            rest.emplace_back(sign, t);
        } else {
            throw species_error("loop removal for digraphs needs G to be a sum of E's and a "
                                "strictly finite part; got term " + format_species(t));
        }
    }

    unsigned max_deg = 0;
    for (const auto& [sign, t] : rest) max_deg = std::max(max_deg, *max_degree(t));

    p_series rest_series(max_deg);
    {
        evaluator ev;
        for (const auto& [sign, t] : rest) {
            const p_series zt = ev.cycle_index(t, max_deg);
            for (const auto& [lam, c] : zt.terms()) rest_series.add_term(lam, rational(sign) * c);
        }
    }
    auto rest_ptr = std::make_shared<const p_series>(std::move(rest_series));

    const std::string name = "loopless-solution(" + format_species(g) + ")";
    return fix_fn(name, [e_coeff, rest_ptr, max_deg](const partition& lam) {
        rational v = 0;
        if (e_coeff != 0 && lam.weight() % 2 == 0) v += e_coeff;
        for (unsigned j = 0; lam.weight() + j <= max_deg; ++j) {
            const rational t = fix_count(*rest_ptr, augment(lam, j));
            v += (j % 2 == 0) ? t : -t;
        }
        return v;
    });
}

namespace detail {

/// fix of the digraph species on the diagonal:
/// prod_k fixEG(power_type(lambda,k))^{m_k(lambda)}, where fixEG is the fix
/// function of E*G (or E*G_1 after loop removal).
inline rational digraph_fix_diagonal(const fix_fn& fix_eg, const partition& lam) {
    rational prod = 1;
    const auto& parts = lam.parts();
    std::map<unsigned, rational> memo; // k -> fixEG(power_type(lam,k))
    for (std::size_t i = 0; i < parts.size() && prod != 0;) {
        const unsigned k = parts[i];
        std::size_t j = i;
        while (j < parts.size() && parts[j] == k) ++j;
        auto it = memo.find(k);
        if (it == memo.end()) it = memo.emplace(k, fix_eg(power_type(lam, k))).first;
        prod *= rat_pow(it->second, static_cast<unsigned>(j - i));
        i = j;
    }
    return prod;
}

inline bigint checked_count(const rational& q, const char* what) {
    if (!is_integer(q) || q < 0)
        throw std::logic_error(std::string(what) + ": expected a nonnegative integer, got " +
                               rational_str(q));
    return to_integer(q);
}

} // namespace detail

/// Unlabeled G-digraph counts for n = 1..max_n. With loops allowed the
/// species is the diagonal of Phi(E*G); with loops forbidden G is first
/// replaced by the loop-removal solution. Counts are computed per n from the
/// diagonal fix products, never by materializing the two-sort Phi series.
inline count_table digraph_counts(const species_ptr& g, bool loops, unsigned max_n) {
    count_table out;
    fix_fn g_eff;
    if (loops) {
        g_eff = fix_counts(cycle_index(g, max_n));
        out.notes.push_back("family=digraphs loops=allowed G=" + format_species(g));
    } else {
        g_eff = loopless_digraph_solution(g);
        out.notes.push_back("family=digraphs loops=forbidden G=" + format_species(g) +
                            " solution=" + g_eff.name());
    }
    const p_series h = z_set(max_n) * from_fix(g_eff, max_n); // Z_{E*G}
    const fix_fn fix_eg = fix_counts(h);
    out.notes.push_back("bound=" + std::to_string(max_n));
    for (unsigned n = 1; n <= max_n; ++n) {
        rational total = 0;
        for (const partition& lam : partitions_of(n))
            total += detail::digraph_fix_diagonal(fix_eg, lam) / rational(z_of(lam));
        out.rows.push_back({n, -1, detail::checked_count(total, "digraph count")});
    }
    return out;
}

/// Digraphs with all outdegrees drawn from the set S (loops forbidden):
/// the digraph pipeline with G = sum_{k in S} E_k.
inline count_table outdegree_set_counts(const std::set<unsigned>& s, unsigned max_n) {
    if (s.empty()) throw species_error("outdegree set must be nonempty");
    species_ptr g;
    for (unsigned k : s) {
        species_ptr ek = sp::set_of_size(k);
        g = g ? sp::sum(g, ek) : ek;
    }
    return digraph_counts(g, /*loops=*/false, max_n);
}

/// n! [x^n] of the EGF of the digraph species: the number of labeled
/// structures, used by the cross-check against the direct product formula.
inline bigint labeled_digraph_count(const species_ptr& g, bool loops, unsigned n) {
    fix_fn g_eff = loops ? fix_counts(cycle_index(g, n)) : loopless_digraph_solution(g);
    const p_series h = z_set(n) * from_fix(g_eff, n);
    const rational v =
        detail::digraph_fix_diagonal(fix_counts(h), partition(std::vector<unsigned>(n, 1)));
    return detail::checked_count(v, "labeled digraph count");
}

/// The loop-removal solution for graphs: G_1 = G - G'' satisfies
/// G_1 + G_1'' + G_1^{(4)} + ... = G by telescoping when G is strictly finite.
inline species_ptr loopless_graph_solution(const species_ptr& g) {
    if (!strictly_finite(g))
        throw species_error("loop removal for graphs needs a strictly finite G");
    return sp::difference(g, sp::derivative(g, 2));
}

/// Unlabeled G-graph counts (multiple edges allowed; loops per request) for
/// n = 1..max_n, via <E(X*G(Y)), E(E_2(Y))>_Y. Each edge is a pair of
/// Y points, so exactness at n vertices needs bound_y >= deg(G) * n; the
/// required bound is computed here and an insufficient override is a hard
/// error.
inline count_table graph_counts(const species_ptr& g, bool loops, unsigned max_n,
                                std::optional<unsigned> bound_y_override = std::nullopt) {
    if (!strictly_finite(g))
        throw species_error("G-graphs are defined only for strictly finite G; got " +
                            format_species(g));
    const unsigned degree = *max_degree(g);
    const unsigned required_y = degree * max_n;
    const unsigned by = bound_y_override.value_or(required_y);
    if (by < required_y)
        throw species_error("bound_y=" + std::to_string(by) + " is too small for " +
                            std::to_string(max_n) + " vertices of degree " +
                            std::to_string(degree) + "; need bound_y >= " +
                            std::to_string(required_y));

    const species_ptr g_eff = loops ? g : loopless_graph_solution(g);
    evaluator ev;
    const bi_series vertices = ev.cycle_index_xy(
        sp::compose(sp::set(), sp::product(sp::x(), sp::compose(g_eff, sp::y()))), max_n, by);
    const bi_series pairing = ev.cycle_index_xy(
        sp::compose(sp::set(), sp::compose(sp::set_of_size(2), sp::y())), max_n, by);
    const p_series z = scalar_y(vertices, pairing);
    const std::vector<rational> types = iso_types(z);

    count_table out;
    out.notes.push_back("family=graphs loops=" + std::string(loops ? "allowed" : "forbidden") +
                        " G=" + format_species(g) +
                        (loops ? "" : " solution=" + format_species(g_eff)));
    out.notes.push_back("bound_x=" + std::to_string(max_n) + " bound_y=" + std::to_string(by) +
                        " (required " + std::to_string(required_y) + ")");
    for (unsigned n = 1; n <= max_n; ++n)
        out.rows.push_back({n, -1, detail::checked_count(types[n], "graph count")});
    return out;
}

/// Bicolored G-graph counts: coefficient of x^n y^e counts graphs on n
/// vertices with e edges, vertices split into two unordered non-empty color
/// classes and all edges across. Computed as the inner plethysm in Y of E_2
/// into Eplus(X*G(Y)). Every cell (n <= bound_x, e <= bound_y) is exact:
/// the construction is graded so truncation never leaks into retained cells.
inline count_table bicolored_counts(const species_ptr& g, unsigned bound_x, unsigned bound_y) {
    evaluator ev;
    const bi_series halves = ev.cycle_index_xy(
        sp::compose(sp::nonempty_set(), sp::product(sp::x(), sp::compose(g, sp::y()))), bound_x,
        bound_y);
    const bi_series paired = inner_plethysm_y(z_set_of_size(2, 2), halves);
    const auto types = iso_types_xy(paired);

    count_table out;
    out.notes.push_back("family=bicolored G=" + format_species(g));
    out.notes.push_back("bound_x=" + std::to_string(bound_x) +
                        " bound_y=" + std::to_string(bound_y) +
                        "; cell (n,e) exact for n<=bound_x, e<=bound_y");
    for (unsigned n = 1; n <= bound_x; ++n)
        for (unsigned e = 0; e <= bound_y; ++e)
            out.rows.push_back({n, static_cast<int>(e),
                                detail::checked_count(types[n][e], "bicolored count")});
    return out;
}

} // namespace specix
