#pragma once

#include "specix/partition.hpp"
#include "specix/rational.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace specix {

/// Thrown when a plethystic composition cannot converge: an outer series of
/// unbounded degree composed with an inner series that has a constant term.
class composition_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// One-sort symmetric-function series in the power-sum basis,
///
///     f = sum_lambda c_lambda p_lambda,
///
/// with exact rational coefficients, truncated at an explicit degree bound.
/// Invariants: every stored key has weight <= bound, and no stored
/// coefficient is zero. Values are immutable in practice: all operations are
/// pure functions returning fresh series.
class p_series {
public:
    using term_map = std::map<partition, rational, partition_less>;

    explicit p_series(unsigned bound) : bound_(bound) {}

    static p_series zero(unsigned bound) { return p_series(bound); }

    static p_series constant(const rational& c, unsigned bound) {
        p_series f(bound);
        f.add_term(partition(), c);
        return f;
    }

    static p_series one(unsigned bound) { return constant(1, bound); }

    /// The basis element p_lambda (zero if |lambda| exceeds the bound).
    static p_series power_sum(const partition& lam, unsigned bound) {
        p_series f(bound);
        f.add_term(lam, 1);
        return f;
    }

    unsigned bound() const { return bound_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    rational coeff(const partition& lam) const {
        auto it = terms_.find(lam);
        return it == terms_.end() ? rational(0) : it->second;
    }

    /// Accumulates c onto the coefficient of p_lambda. Terms beyond the bound
    /// are discarded; zero results are erased.
    void add_term(const partition& lam, const rational& c) {
        if (lam.weight() > bound_ || c == 0) return;
        auto [it, inserted] = terms_.emplace(lam, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Re-declares the bound, dropping terms above it. Raising the bound does
    /// not recover discarded terms, so it is only sound for series known to
    /// be exact polynomials.
    p_series truncated(unsigned new_bound) const {
        if (new_bound >= bound_) {
            p_series f = *this;
            f.bound_ = new_bound;
            return f;
        }
        p_series f(new_bound);
        for (const auto& [lam, c] : terms_) f.add_term(lam, c);
        return f;
    }

    bool operator==(const p_series& o) const {
        return bound_ == o.bound_ && terms_ == o.terms_;
    }

private:
    unsigned bound_;
    term_map terms_;
};

inline p_series operator+(const p_series& a, const p_series& b) {
    p_series r = a.truncated(std::min(a.bound(), b.bound()));
    for (const auto& [lam, c] : b.terms()) r.add_term(lam, c);
    return r;
}

inline p_series operator-(const p_series& a, const p_series& b) {
    p_series r = a.truncated(std::min(a.bound(), b.bound()));
    for (const auto& [lam, c] : b.terms()) r.add_term(lam, -c);
    return r;
}

inline p_series operator*(const rational& c, const p_series& f) {
    p_series r(f.bound());
    if (c == 0) return r;
    for (const auto& [lam, v] : f.terms()) r.add_term(lam, c * v);
    return r;
}

/// Coefficientwise rational linear combination. An empty list yields the
/// zero series at the fallback bound; otherwise operands are re-truncated to
/// the minimum of their bounds.
inline p_series linear_combine(const std::vector<std::pair<rational, p_series>>& terms,
                               unsigned fallback_bound = 0) {
    if (terms.empty()) return p_series::zero(fallback_bound);
    unsigned bound = terms.front().second.bound();
    for (const auto& [c, f] : terms) bound = std::min(bound, f.bound());
    p_series r(bound);
    for (const auto& [c, f] : terms)
        for (const auto& [lam, v] : f.terms()) r.add_term(lam, c * v);
    return r;
}

namespace detail {

inline partition merge_parts(const partition& a, const partition& b) {
    std::vector<unsigned> out;
    out.reserve(a.part_count() + b.part_count());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(out), std::greater<unsigned>());
    return partition(std::move(out));
}

} // namespace detail

/// Product: p_lambda * p_mu = p_{lambda union mu}; terms beyond the common
/// bound are discarded.
inline p_series operator*(const p_series& a, const p_series& b) {
    const unsigned bound = std::min(a.bound(), b.bound());
    p_series r(bound);
    for (const auto& [la, ca] : a.terms()) {
        if (la.weight() > bound) break;
        for (const auto& [lb, cb] : b.terms()) {
            if (la.weight() + lb.weight() > bound) break; // terms sorted by weight
            r.add_term(detail::merge_parts(la, lb), ca * cb);
        }
    }
    return r;
}

inline p_series pow(const p_series& f, unsigned e) {
    p_series r = p_series::one(f.bound());
    for (unsigned i = 0; i < e; ++i) r = r * f;
    return r;
}

/// Kronecker (internal) product: in fix-count terms a pointwise product,
/// so [p_lambda](f x g) = z_lambda [p_lambda]f [p_lambda]g.
inline p_series kronecker(const p_series& a, const p_series& b) {
    const unsigned bound = std::min(a.bound(), b.bound());
    p_series r(bound);
    for (const auto& [lam, ca] : a.terms()) {
        const rational cb = b.coeff(lam);
        if (cb != 0) r.add_term(lam, z_of(lam) * ca * cb);
    }
    return r;
}

/// <f, g> = sum_lambda z_lambda c_lambda(f) c_lambda(g).
inline rational scalar_product(const p_series& a, const p_series& b) {
    const unsigned bound = std::min(a.bound(), b.bound());
    rational s = 0;
    for (const auto& [lam, ca] : a.terms()) {
        if (lam.weight() > bound) break;
        const rational cb = b.coeff(lam);
        if (cb != 0) s += rational(z_of(lam)) * ca * cb;
    }
    return s;
}

/// p_k composed with f: every index is multiplied by k, coefficients are
/// untouched (the Adams operation on the power-sum basis).
inline p_series pleth_power(const p_series& f, unsigned k) {
    p_series r(f.bound());
    for (const auto& [lam, c] : f.terms()) {
        std::vector<unsigned> parts;
        parts.reserve(lam.part_count());
        for (unsigned l : lam.parts()) parts.push_back(l * k);
        r.add_term(partition(std::move(parts)), c);
    }
    return r;
}

/// Plethysm f o g, extended from p_n o g by linearity and multiplicativity
/// in f. When g has a nonzero constant term the composition only makes sense
/// for an exactly-known polynomial f; callers assert that via
/// `outer_polynomial`, otherwise the call is rejected.
inline p_series plethysm(const p_series& f, const p_series& g, bool outer_polynomial = false) {
    if (!outer_polynomial && g.coeff(partition()) != 0)
        throw composition_error("plethysm: inner series has a constant term and the outer "
                                "series is truncated; composition does not converge");
    const unsigned bound = outer_polynomial ? g.bound() : std::min(f.bound(), g.bound());
    const p_series gt = g.truncated(bound);
    std::map<unsigned, p_series> g_pow_k;     // l -> p_l o g
    std::map<std::pair<unsigned, unsigned>, p_series> powers;
    p_series r(bound);
    for (const auto& [lam, c] : f.terms()) {
        p_series prod = p_series::one(bound);
        const auto& parts = lam.parts();
        for (std::size_t i = 0; i < parts.size() && !prod.is_zero();) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            const unsigned l = parts[i];
            const auto m = static_cast<unsigned>(j - i);
            auto git = g_pow_k.find(l);
            if (git == g_pow_k.end()) git = g_pow_k.emplace(l, pleth_power(gt, l)).first;
            auto pit = powers.find({l, m});
            if (pit == powers.end()) pit = powers.emplace(std::make_pair(l, m), pow(git->second, m)).first;
            prod = prod * pit->second;
            i = j;
        }
        for (const auto& [mu, v] : prod.terms()) r.add_term(mu, c * v);
    }
    return r;
}

/// exp of a series with zero constant term, truncated at its bound.
inline p_series exp_of(const p_series& s) {
    if (s.coeff(partition()) != 0)
        throw std::domain_error("exp_of: series must have zero constant term");
    p_series r = p_series::one(s.bound());
    p_series term = p_series::one(s.bound());
    for (unsigned j = 1; j <= s.bound() && !term.is_zero(); ++j) {
        term = rational(1, j) * (term * s);
        for (const auto& [lam, c] : term.terms()) r.add_term(lam, c);
    }
    return r;
}

/// Formal partial derivative with respect to p_1; the species derivative at
/// the cycle-index level. The bound drops by one.
inline p_series p1_derivative(const p_series& f) {
    const unsigned bound = f.bound() == 0 ? 0 : f.bound() - 1;
    p_series r(bound);
    for (const auto& [lam, c] : f.terms()) {
        const unsigned m1 = lam.multiplicity(1);
        if (m1 == 0) continue;
        std::vector<unsigned> parts = lam.parts();
        parts.pop_back(); // parts are weakly decreasing, so a 1 sits last
        r.add_term(partition(std::move(parts)), c * m1);
    }
    return r;
}

/// fix F[lambda] = z_lambda c_lambda: the fix-count view of a cycle index.
inline rational fix_count(const p_series& f, const partition& lam) {
    return rational(z_of(lam)) * f.coeff(lam);
}

/// Inverse of fix_count: builds sum_lambda fn(lambda) p_lambda / z_lambda
/// over all partitions of weight <= bound.
template <class Fn>
p_series from_fix(Fn&& fn, unsigned bound) {
    p_series r(bound);
    for (unsigned n = 0; n <= bound; ++n)
        for (const partition& lam : partitions_of(n)) {
            const rational v = fn(lam);
            if (v != 0) r.add_term(lam, v / rational(z_of(lam)));
        }
    return r;
}

/// Z_E = sum_lambda p_lambda / z_lambda (fix E = 1 everywhere).
inline p_series z_set(unsigned bound) {
    return from_fix([](const partition&) { return rational(1); }, bound);
}

/// Z_{E_k} = h_k = sum_{lambda |- k} p_lambda / z_lambda.
inline p_series z_set_of_size(unsigned k, unsigned bound) {
    p_series r(bound);
    if (k > bound) return r;
    for (const partition& lam : partitions_of(k)) r.add_term(lam, rational(1) / rational(z_of(lam)));
    return r;
}

/// EGF specialization p_1 = x, p_i = 0 (i > 1): coefficient of x^n is the
/// coefficient of p_{(1^n)}.
inline std::vector<rational> egf(const p_series& f) {
    std::vector<rational> out(f.bound() + 1, rational(0));
    for (const auto& [lam, c] : f.terms())
        if (lam.part_count() == lam.weight()) out[lam.weight()] = c;
    return out;
}

/// Isomorphism-types specialization p_i = x^i: coefficient of x^n is
/// sum_{lambda |- n} c_lambda.
inline std::vector<rational> iso_types(const p_series& f) {
    std::vector<rational> out(f.bound() + 1, rational(0));
    for (const auto& [lam, c] : f.terms()) out[lam.weight()] += c;
    return out;
}

inline std::string to_string(const p_series& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : f.terms()) {
        os << (first ? "" : " + ") << rational_str(c);
        if (!lam.empty()) os << "*p" << to_string(lam);
        first = false;
    }
    return os.str();
}

/// {"bound": N, "terms": [{"partition": [...], "coeff": "a/b"}, ...]} with
/// terms in canonical order.
inline void series_json(std::ostream& os, const p_series& f) {
    os << "{\"bound\":" << f.bound() << ",\"terms\":[";
    bool first = true;
    for (const auto& [lam, c] : f.terms()) {
        if (!first) os << ',';
        os << "{\"partition\":";
        partition_json(os, lam);
        os << ",\"coeff\":\"" << rational_str(c) << "\"}";
        first = false;
    }
    os << "]}";
}

} // namespace specix
