#pragma once

#include "specix/partition.hpp"
#include "specix/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace specix {

// Desk-scale verification by explicit labeled enumeration plus Burnside
// counting. Everything here iterates structures and tests invariance
// directly; none of the cycle-type shortcuts of the engine are used, so the
// two sides fail independently.

class oracle_budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr std::uint64_t default_oracle_budget = 1'000'000'000ull;

enum class family_kind {
    relation,           // all subsets of V x V (digraphs with loops, G = E)
    outdegree_digraph,  // every vertex carries a k-subset of out-neighbors
    outdegree_set,      // out-set sizes drawn from a set S
    regular_multigraph, // symmetric multiplicity matrix, every degree = k
};

struct family_spec {
    family_kind kind;
    unsigned k = 0;
    std::set<unsigned> sizes; // for outdegree_set
    bool loops = false;

    std::string name() const {
        switch (kind) {
            case family_kind::relation: return "relations";
            case family_kind::outdegree_digraph:
                return "outdegree-" + std::to_string(k) + (loops ? " (loops)" : "");
            case family_kind::outdegree_set: {
                std::string s = "outdegree-set{";
                bool first = true;
                for (unsigned v : sizes) {
                    if (!first) s += ',';
                    s += std::to_string(v);
                    first = false;
                }
                return s + "}";
            }
            case family_kind::regular_multigraph:
                return std::to_string(k) + "-regular" + (loops ? " (loops)" : "");
        }
        return "?";
    }
};

/// An exhaustively enumerated set of labeled structures on [n], stored as
/// n x n integer matrices, with the relabeling action
/// m'[sigma(u)][sigma(v)] = m[u][v].
struct labeled_family {
    unsigned n = 0;
    std::vector<std::vector<std::uint8_t>> matrices;

    bool fixed_by(const std::vector<std::uint8_t>& m, const std::vector<unsigned>& perm) const {
        for (unsigned u = 0; u < n; ++u)
            for (unsigned v = 0; v < n; ++v)
                if (m[perm[u] * n + perm[v]] != m[u * n + v]) return false;
        return true;
    }
};

namespace oracle_detail {

inline void subsets_of_size(unsigned n, unsigned k, unsigned skip,
                            const std::function<void(const std::vector<unsigned>&)>& emit) {
    std::vector<unsigned> pick;
    std::function<void(unsigned)> rec = [&](unsigned start) {
        if (pick.size() == k) {
            emit(pick);
            return;
        }
        for (unsigned v = start; v < n; ++v) {
            if (v == skip) continue;
            pick.push_back(v);
            rec(v + 1);
            pick.pop_back();
        }
    };
    rec(0);
}

inline bigint family_size_bound(const family_spec& spec, unsigned n) {
    switch (spec.kind) {
        case family_kind::relation: return int_pow(bigint(2), n * n);
        case family_kind::outdegree_digraph:
            return int_pow(binomial(spec.loops ? n : n - 1, spec.k), n);
        case family_kind::outdegree_set: {
            bigint per_vertex = 0;
            for (unsigned k : spec.sizes) per_vertex += binomial(spec.loops ? n : n - 1, k);
            return int_pow(per_vertex, n);
        }
        case family_kind::regular_multigraph:
            // loose bound; the backtracking enumeration is capped as it runs
            return int_pow(bigint(spec.k + 1), n * (n + 1) / 2);
    }
    return 0;
}

} // namespace oracle_detail

inline labeled_family enumerate_family(const family_spec& spec, unsigned n,
                                       std::uint64_t budget = default_oracle_budget) {
    const bigint cap = bigint(budget) / factorial(n);
    if (spec.kind != family_kind::regular_multigraph &&
        oracle_detail::family_size_bound(spec, n) > cap)
        throw oracle_budget_error("oracle budget exceeded for " + spec.name() + " at n=" +
                                  std::to_string(n));

    labeled_family fam;
    fam.n = n;
    const auto push_capped = [&](std::vector<std::uint8_t> m) {
        fam.matrices.push_back(std::move(m));
        if (bigint(fam.matrices.size()) > cap)
            throw oracle_budget_error("oracle budget exceeded for " + spec.name() + " at n=" +
                                      std::to_string(n));
    };

    switch (spec.kind) {
        case family_kind::relation: {
            const unsigned cells = n * n;
            if (cells >= 63)
                throw oracle_budget_error("relation family too large to enumerate at n=" +
                                          std::to_string(n));
            for (std::uint64_t mask = 0; mask < (1ull << cells); ++mask) {
                std::vector<std::uint8_t> m(cells, 0);
                for (unsigned i = 0; i < cells; ++i) m[i] = (mask >> i) & 1;
                push_capped(std::move(m));
            }
            break;
        }
        case family_kind::outdegree_digraph:
        case family_kind::outdegree_set: {
            std::set<unsigned> sizes =
                spec.kind == family_kind::outdegree_digraph ? std::set<unsigned>{spec.k} : spec.sizes;
            // per-vertex out-sets, enumerated as an odometer over choices
            std::vector<std::vector<std::vector<unsigned>>> choices(n);
            for (unsigned v = 0; v < n; ++v)
                for (unsigned k : sizes)
                    oracle_detail::subsets_of_size(
                        n, k, spec.loops ? n /* nothing skipped */ : v,
                        [&](const std::vector<unsigned>& pick) { choices[v].push_back(pick); });
            std::vector<std::size_t> idx(n, 0);
            bool any_empty = false;
            for (unsigned v = 0; v < n; ++v) any_empty |= choices[v].empty();
            if (!any_empty) {
                for (;;) {
                    std::vector<std::uint8_t> m(n * n, 0);
                    for (unsigned v = 0; v < n; ++v)
                        for (unsigned w : choices[v][idx[v]]) m[v * n + w] = 1;
                    push_capped(std::move(m));
                    unsigned pos = 0;
                    while (pos < n && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
                    if (pos == n) break;
                }
            }
            break;
        }
        case family_kind::regular_multigraph: {
            // symmetric matrices with deg(v) = sum_{u != v} m[u][v] + 2*m[v][v] = k
            std::vector<std::uint8_t> m(n * n, 0);
            std::vector<unsigned> deg(n, 0);
            std::function<void(unsigned, unsigned)> rec = [&](unsigned u, unsigned v) {
                if (u == n) {
                    push_capped(m);
                    return;
                }
                if (v == n) {
                    if (deg[u] == spec.k) rec(u + 1, u + 1);
                    return;
                }
                const unsigned step = (u == v) ? 2 : 1;
                if (u == v && !spec.loops) {
                    rec(u, v + 1);
                    return;
                }
                for (unsigned mult = 0;; ++mult) {
                    if (deg[u] + mult * step > spec.k) break;
                    if (u != v && deg[v] + mult > spec.k) break;
                    m[u * n + v] = m[v * n + u] = static_cast<std::uint8_t>(mult);
                    deg[u] += mult * step;
                    if (u != v) deg[v] += mult;
                    rec(u, v + 1);
                    deg[u] -= mult * step;
                    if (u != v) deg[v] -= mult;
                }
                m[u * n + v] = m[v * n + u] = 0;
            };
            rec(0, 0);
            break;
        }
    }
    return fam;
}

/// Number of isomorphism classes by direct Burnside counting:
/// (1/n!) sum_sigma #{structures fixed by sigma}. The sum is asserted to be
/// divisible by n! before dividing.
inline bigint burnside_count(const family_spec& spec, unsigned n,
                             std::uint64_t budget = default_oracle_budget) {
    const labeled_family fam = enumerate_family(spec, n, budget);
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    bigint total = 0;
    do {
        std::uint64_t fixed = 0;
        for (const auto& m : fam.matrices)
            if (fam.fixed_by(m, perm)) ++fixed;
        total += fixed;
    } while (std::next_permutation(perm.begin(), perm.end()));
    const bigint order = factorial(n);
    if (total % order != 0)
        throw std::logic_error("Burnside sum " + total.str() + " not divisible by " + order.str());
    return total / order;
}

// ---------------------------------------------------------------------------
// Brute-force inner plethysm: orbits of the F(G[A]) construction.

/// A small concrete species: a count of structures per set size and the
/// relabeling action on structure ids. Enough shapes to give the inner
/// plethysm oracle nontrivial group actions.
struct concrete_species {
    std::string name;
    unsigned max_size = 0; // support bound; 0 structures above it
    std::function<unsigned(unsigned)> count;
    // act(m, sigma, id): the id of sigma . structure, sigma given as images
    std::function<unsigned(unsigned, const std::vector<unsigned>&, unsigned)> act;
};

inline concrete_species cs_set_of_size(unsigned k) {
    return {"E_" + std::to_string(k), k,
            [k](unsigned m) { return m == k ? 1u : 0u; },
            [](unsigned, const std::vector<unsigned>&, unsigned id) { return id; }};
}

inline concrete_species cs_singleton() { auto s = cs_set_of_size(1); s.name = "X"; return s; }

/// E truncated at a cap (the oracle needs strictly finite F).
inline concrete_species cs_set(unsigned cap) {
    return {"E<=" + std::to_string(cap), cap, [cap](unsigned m) { return m <= cap ? 1u : 0u; },
            [](unsigned, const std::vector<unsigned>&, unsigned id) { return id; }};
}

/// Subsets of the underlying set (the species E*E); ids are bitmasks.
inline concrete_species cs_subsets(unsigned cap) {
    return {"subsets", cap, [](unsigned m) { return 1u << m; },
            [](unsigned m, const std::vector<unsigned>& perm, unsigned id) {
                unsigned out = 0;
                for (unsigned i = 0; i < m; ++i)
                    if (id & (1u << i)) out |= 1u << perm[i];
                return out;
            }};
}

/// An element of the underlying set (the species X*E); ids are elements.
inline concrete_species cs_pointed_set(unsigned cap) {
    return {"pointed-set", cap, [](unsigned m) { return m; },
            [](unsigned, const std::vector<unsigned>& perm, unsigned id) { return perm[id]; }};
}

namespace oracle_detail {

inline std::vector<unsigned> perm_of_cycle_type(const partition& mu) {
    std::vector<unsigned> perm(mu.weight());
    unsigned base = 0;
    for (unsigned len : mu.parts()) {
        for (unsigned i = 0; i < len; ++i) perm[base + i] = base + (i + 1) % len;
        base += len;
    }
    return perm;
}

inline std::vector<std::vector<unsigned>> all_perms(unsigned m) {
    std::vector<unsigned> p(m);
    std::iota(p.begin(), p.end(), 0u);
    std::vector<std::vector<unsigned>> out;
    do out.push_back(p); while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace oracle_detail

/// fix (F ~ G)[mu] by direct orbit counting in the F(G[A]) construction:
/// pairs (t, f) with t an F-structure on [m] and f: [m] -> G[A], A = [n],
/// modulo the S_m action (tau.t, f o tau^{-1}); sigma acts by post-composing
/// f with G[sigma]. Counts the S_m-orbits fixed by sigma of cycle type mu.
inline bigint brute_inner_plethysm_fix(const concrete_species& f, const concrete_species& g,
                                       const partition& mu,
                                       std::uint64_t budget = default_oracle_budget) {
    const unsigned n = mu.weight();
    const unsigned g_count = g.count(n);
    const auto sigma = oracle_detail::perm_of_cycle_type(mu);

    // image of every G-structure under sigma
    std::vector<unsigned> g_sigma(g_count);
    for (unsigned id = 0; id < g_count; ++id) g_sigma[id] = g.act(n, sigma, id);

    bigint fixed_orbits = 0;
    for (unsigned m = 0; m <= f.max_size; ++m) {
        const unsigned f_count = f.count(m);
        if (f_count == 0) continue;
        std::uint64_t pair_count = f_count;
        for (unsigned i = 0; i < m; ++i) {
            pair_count *= g_count;
            if (pair_count > budget) throw oracle_budget_error("inner plethysm oracle budget");
        }
        if (g_count == 0 && m > 0) continue;

        const auto taus = oracle_detail::all_perms(m);
        using pair_enc = std::vector<unsigned>; // [t, f(0), ..., f(m-1)]
        const auto canonical = [&](const pair_enc& p) {
            pair_enc best = p;
            pair_enc cand(m + 1);
            for (const auto& tau : taus) {
                cand[0] = f.act(m, tau, p[0]);
                // (f o tau^{-1})(i) = f(tau^{-1}(i)), i.e. position tau(j) gets f(j)
                for (unsigned j = 0; j < m; ++j) cand[1 + tau[j]] = p[1 + j];
                if (cand < best) best = cand;
            }
            return best;
        };

        std::set<pair_enc> orbit_reps;
        pair_enc p(m + 1, 0);
        std::function<void(unsigned)> rec = [&](unsigned pos) {
            if (pos == m + 1) {
                orbit_reps.insert(canonical(p));
                return;
            }
            const unsigned limit = pos == 0 ? f_count : g_count;
            for (unsigned v = 0; v < limit; ++v) {
                p[pos] = v;
                rec(pos + 1);
            }
        };
        rec(0);

        for (const auto& rep : orbit_reps) {
            pair_enc moved = rep;
            for (unsigned j = 0; j < m; ++j) moved[1 + j] = g_sigma[rep[1 + j]];
            if (canonical(moved) == rep) ++fixed_orbits;
        }
    }
    return fixed_orbits;
}

} // namespace specix
