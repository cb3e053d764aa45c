#pragma once

#include "specix/biseries.hpp"
#include "specix/partition.hpp"
#include "specix/pseries.hpp"

#include <map>

namespace specix {

// Both inner plethysms act through character values rather than any
// representation-ring structure: p_k acts by precomposing with the k-th
// power map on cycle types, and products of power sums act multiplicatively.
// The outer series f is taken to be an exact polynomial (a strictly finite
// species); the operations are linear in g across distinct degrees, which
// the per-mu evaluation below respects automatically since power_type
// preserves the weight of mu.

/// One-sort inner plethysm. With chi(mu) = fix g[mu],
///
///     fix (f ~ g)[mu] = sum_lambda c_lambda(f) prod_k chi(power_type(mu,k))^{m_k(lambda)}
///
/// and the result is assembled as sum_mu fix[mu] p_mu / z_mu at g's bound.
inline p_series inner_plethysm(const p_series& f, const p_series& g) {
    const unsigned bound = g.bound();
    p_series out(bound);
    for (unsigned m = 0; m <= bound; ++m) {
        for (const partition& mu : partitions_of(m)) {
            std::map<unsigned, rational> chi; // k -> fix g[power_type(mu, k)]
            rational val = 0;
            for (const auto& [lam, c] : f.terms()) {
                rational prod = 1;
                for (std::size_t i = 0; i < lam.part_count() && prod != 0;) {
                    const unsigned k = lam.parts()[i];
                    std::size_t j = i;
                    while (j < lam.part_count() && lam.parts()[j] == k) ++j;
                    auto it = chi.find(k);
                    if (it == chi.end())
                        it = chi.emplace(k, fix_count(g, power_type(mu, k))).first;
                    prod *= rat_pow(it->second, static_cast<unsigned>(j - i));
                    i = j;
                }
                val += c * prod;
            }
            if (val != 0) out.add_term(mu, val / rational(z_of(mu)));
        }
    }
    return out;
}

/// Inner plethysm in Y. Per mu the character value is an x-series,
/// chi(mu) = z_mu * (x-section of g at mu), the Adams operation on it is the
/// index substitution p_i(x) -> p_{ik}(x), and
///
///     f[chi](mu) = sum_lambda c_lambda(f) prod_k (p_k o chi(power_type(mu,k)))^{m_k(lambda)}
///
/// assembles into sum_mu f[chi](mu) p_mu(y) / z_mu. Exactness at g's bounds
/// is automatic: all substitutions only raise x-degrees.
inline bi_series inner_plethysm_y(const p_series& f, const bi_series& g) {
    const unsigned bx = g.bound_x();
    const unsigned by = g.bound_y();
    bi_series out(bx, by);
    const auto sections = detail::sections_by_y(g);
    const auto chi_of = [&](const partition& t) {
        auto it = sections.find(t);
        if (it == sections.end()) return p_series::zero(bx);
        return rational(z_of(t)) * it->second;
    };
    for (unsigned m = 0; m <= by; ++m) {
        for (const partition& mu : partitions_of(m)) {
            std::map<unsigned, p_series> adams; // k -> p_k o chi(power_type(mu, k))
            p_series val(bx);
            const rational zmu = rational(z_of(mu));
            for (const auto& [lam, c] : f.terms()) {
                p_series prod = p_series::one(bx);
                for (std::size_t i = 0; i < lam.part_count() && !prod.is_zero();) {
                    const unsigned k = lam.parts()[i];
                    std::size_t j = i;
                    while (j < lam.part_count() && lam.parts()[j] == k) ++j;
                    auto it = adams.find(k);
                    if (it == adams.end())
                        it = adams.emplace(k, pleth_power(chi_of(power_type(mu, k)), k)).first;
                    prod = prod * pow(it->second, static_cast<unsigned>(j - i));
                    i = j;
                }
                for (const auto& [lx, v] : prod.terms()) val.add_term(lx, c * v);
            }
            for (const auto& [lx, v] : val.terms()) out.add_term(lx, mu, v / zmu);
        }
    }
    return out;
}

} // namespace specix
