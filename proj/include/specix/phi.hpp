#pragma once

#include "specix/biseries.hpp"
#include "specix/fixfn.hpp"
#include "specix/partition.hpp"

#include <map>

namespace specix {

/// Cycle index of Phi(F), the two-sort species of functions from an X-set
/// into F-structures on a Y-set. Its fix counts factor through cycle types:
///
///     fix Phi(F)[lambda, mu] = prod_k F(power_type(mu, k))^{m_k(lambda)}
///
/// so the coefficient at (lambda, mu) is that product over z_lambda z_mu.
/// Negative or rational fix values (virtual F) run through the same formula.
inline bi_series phi_cycle_index(const fix_fn& f, unsigned bound_x, unsigned bound_y) {
    bi_series out(bound_x, bound_y);
    for (unsigned m = 0; m <= bound_y; ++m) {
        for (const partition& mu : partitions_of(m)) {
            // a[k] = fix F[sigma^k] for sigma of cycle type mu
            std::map<unsigned, rational> a;
            const rational zmu = rational(z_of(mu));
            for (unsigned n = 0; n <= bound_x; ++n) {
                for (const partition& lam : partitions_of(n)) {
                    rational prod = 1;
                    for (std::size_t i = 0; i < lam.part_count() && prod != 0;) {
                        const unsigned k = lam.parts()[i];
                        std::size_t j = i;
                        while (j < lam.part_count() && lam.parts()[j] == k) ++j;
                        auto it = a.find(k);
                        if (it == a.end()) it = a.emplace(k, f(power_type(mu, k))).first;
                        prod *= rat_pow(it->second, static_cast<unsigned>(j - i));
                        i = j;
                    }
                    if (prod != 0) out.add_term(lam, mu, prod / (rational(z_of(lam)) * zmu));
                }
            }
        }
    }
    return out;
}

} // namespace specix
