#pragma once

#include "specix/biseries.hpp"
#include "specix/pseries.hpp"
#include "specix/species.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace specix {

/// Semantic errors in species evaluation: sort misuse, composition guards,
/// unsupported shapes for a pipeline.
class species_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Evaluates species expressions to truncated cycle-index series. Atoms map
/// to their classical cycle indices, + and * to series sum and product,
/// composition to plethysm, and the derivative to d/dp_1. Sub-results are
/// memoized per (expression, bounds) within one evaluator; the caches change
/// nothing but speed.
class evaluator {
public:
    /// One-sort cycle index at the given truncation bound. Rejects Y.
    p_series cycle_index(const species_ptr& e, unsigned bound) {
        const auto key = std::make_pair(format_species(e), bound);
        auto it = memo1_.find(key);
        if (it != memo1_.end()) return it->second;
        p_series r = eval1(e, bound);
        memo1_.emplace(key, r);
        return r;
    }

    /// Two-sort cycle index; Y is the second sort.
    bi_series cycle_index_xy(const species_ptr& e, unsigned bx, unsigned by) {
        const auto key = std::make_tuple(format_species(e), bx, by);
        auto it = memo2_.find(key);
        if (it != memo2_.end()) return it->second;
        bi_series r = eval2(e, bx, by);
        memo2_.emplace(key, r);
        return r;
    }

private:
    std::map<std::pair<std::string, unsigned>, p_series> memo1_;
    std::map<std::tuple<std::string, unsigned, unsigned>, bi_series> memo2_;

    p_series eval1(const species_ptr& e, unsigned bound) {
        switch (e->kind) {
            case species_kind::zero: return p_series::zero(bound);
            case species_kind::one: return p_series::one(bound);
            case species_kind::singleton_x:
                return p_series::power_sum(partition::single(1), bound);
            case species_kind::singleton_y:
                throw species_error("Y appears in a one-sort cycle-index request");
            case species_kind::set_species: return z_set(bound);
            case species_kind::set_of_size: return z_set_of_size(e->size_k, bound);
            case species_kind::nonempty_set: return z_set(bound) - p_series::one(bound);
            case species_kind::sum:
                return cycle_index(e->a, bound) + cycle_index(e->b, bound);
            case species_kind::difference:
                return cycle_index(e->a, bound) - cycle_index(e->b, bound);
            case species_kind::product:
                return cycle_index(e->a, bound) * cycle_index(e->b, bound);
            case species_kind::compose:
                return compose1(e->a, cycle_index(e->b, bound), bound);
            case species_kind::derivative: {
                p_series f = cycle_index(e->a, bound + e->order);
                for (unsigned i = 0; i < e->order; ++i) f = p1_derivative(f);
                return f;
            }
        }
        throw species_error("unhandled species node");
    }

    // Z_{F o G} = Z_F o Z_G, computed by structural recursion on the outer
    // expression so that E and Eplus get the exponential closed form and
    // everything else reduces to polynomial plethysm.
    p_series compose1(const species_ptr& outer, const p_series& g, unsigned bound) {
        switch (outer->kind) {
            case species_kind::zero: return p_series::zero(bound);
            case species_kind::one: return p_series::one(bound);
            case species_kind::singleton_x: return g;
            case species_kind::singleton_y:
                throw species_error("Y appears in the outer factor of a composition");
            case species_kind::set_species: {
                guard_inner(g);
                p_series s(bound);
                for (unsigned k = 1; k <= bound; ++k) {
                    const p_series gk = pleth_power(g, k);
                    for (const auto& [lam, c] : gk.terms()) s.add_term(lam, c / k);
                }
                return exp_of(s);
            }
            case species_kind::nonempty_set:
                return compose1(sp::set(), g, bound) - p_series::one(bound);
            case species_kind::set_of_size:
                return plethysm(z_set_of_size(outer->size_k, outer->size_k), g,
                                /*outer_polynomial=*/true)
                    .truncated(bound);
            case species_kind::sum:
                return compose1(outer->a, g, bound) + compose1(outer->b, g, bound);
            case species_kind::difference:
                return compose1(outer->a, g, bound) - compose1(outer->b, g, bound);
            case species_kind::product:
                return compose1(outer->a, g, bound) * compose1(outer->b, g, bound);
            case species_kind::compose:
                return compose1(outer->a, compose1(outer->b, g, bound), bound);
            case species_kind::derivative:
                return compose1(expand_derivative(outer), g, bound);
        }
        throw species_error("unhandled species node");
    }

    void guard_inner(const p_series& g) const {
        if (g.coeff(partition()) != 0)
            throw species_error("composition does not converge: the inner species has "
                                "structures on the empty set and the outer is not "
                                "strictly finite");
    }

    bi_series eval2(const species_ptr& e, unsigned bx, unsigned by) {
        switch (e->kind) {
            case species_kind::zero: return bi_series::zero(bx, by);
            case species_kind::one: return bi_series::one(bx, by);
            case species_kind::singleton_x: {
                bi_series r(bx, by);
                r.add_term(partition::single(1), partition(), 1);
                return r;
            }
            case species_kind::singleton_y: {
                bi_series r(bx, by);
                r.add_term(partition(), partition::single(1), 1);
                return r;
            }
            case species_kind::set_species: return embed_x(z_set(bx), by);
            case species_kind::set_of_size: return embed_x(z_set_of_size(e->size_k, bx), by);
            case species_kind::nonempty_set:
                return embed_x(z_set(bx), by) - bi_series::one(bx, by);
            case species_kind::sum:
                return cycle_index_xy(e->a, bx, by) + cycle_index_xy(e->b, bx, by);
            case species_kind::difference:
                return cycle_index_xy(e->a, bx, by) - cycle_index_xy(e->b, bx, by);
            case species_kind::product:
                return cycle_index_xy(e->a, bx, by) * cycle_index_xy(e->b, bx, by);
            case species_kind::compose:
                return compose2(e->a, cycle_index_xy(e->b, bx, by), bx, by);
            case species_kind::derivative: {
                bi_series f = cycle_index_xy(e->a, bx + e->order, by);
                for (unsigned i = 0; i < e->order; ++i) f = p1x_derivative(f);
                return f;
            }
        }
        throw species_error("unhandled species node");
    }

    bi_series compose2(const species_ptr& outer, const bi_series& g, unsigned bx, unsigned by) {
        if (mentions_y(outer))
            throw species_error("Y appears in the outer factor of a composition");
        switch (outer->kind) {
            case species_kind::zero: return bi_series::zero(bx, by);
            case species_kind::one: return bi_series::one(bx, by);
            case species_kind::singleton_x: return g;
            case species_kind::set_species: {
                guard_inner_xy(g);
                bi_series s(bx, by);
                for (unsigned k = 1; k <= bx + by; ++k) {
                    const bi_series gk = pleth_power_xy(g, k);
                    for (const auto& [key, c] : gk.terms()) s.add_term(key.x, key.y, c / k);
                }
                return exp_of(s);
            }
            case species_kind::nonempty_set:
                return compose2(sp::set(), g, bx, by) - bi_series::one(bx, by);
            case species_kind::set_of_size:
                return bi_plethysm(z_set_of_size(outer->size_k, outer->size_k), g,
                                   /*outer_polynomial=*/true);
            case species_kind::sum:
                return compose2(outer->a, g, bx, by) + compose2(outer->b, g, bx, by);
            case species_kind::difference:
                return compose2(outer->a, g, bx, by) - compose2(outer->b, g, bx, by);
            case species_kind::product:
                return compose2(outer->a, g, bx, by) * compose2(outer->b, g, bx, by);
            case species_kind::compose:
                return compose2(outer->a, compose2(outer->b, g, bx, by), bx, by);
            case species_kind::derivative:
                return compose2(expand_derivative(outer), g, bx, by);
            default: throw species_error("unhandled species node");
        }
    }

    void guard_inner_xy(const bi_series& g) const {
        if (g.coeff(partition(), partition()) != 0)
            throw species_error("composition does not converge: the inner species has "
                                "structures on the empty set and the outer is not "
                                "strictly finite");
    }
};

inline p_series cycle_index(const species_ptr& e, unsigned bound) {
    evaluator ev;
    return ev.cycle_index(e, bound);
}

inline bi_series cycle_index_xy(const species_ptr& e, unsigned bx, unsigned by) {
    evaluator ev;
    return ev.cycle_index_xy(e, bx, by);
}

} // namespace specix
