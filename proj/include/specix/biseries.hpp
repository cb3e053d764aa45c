#pragma once

#include "specix/partition.hpp"
#include "specix/pseries.hpp"
#include "specix/rational.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace specix {

/// Key of a two-sort term p_lambda(x) p_mu(y).
struct bi_key {
    partition x, y;
    bool operator==(const bi_key& o) const { return x == o.x && y == o.y; }
};

struct bi_key_less {
    bool operator()(const bi_key& a, const bi_key& b) const {
        partition_less less;
        if (a.x != b.x) return less(a.x, b.x);
        return less(a.y, b.y);
    }
};

/// Two-sort series sum_{lambda,mu} c_{lambda,mu} p_lambda(x) p_mu(y) with
/// independent truncation bounds per sort. The x- and y-bounds are
/// deliberately independent: graph pipelines need bound_y around
/// degree * bound_x, and silent y-truncation would corrupt top coefficients.
class bi_series {
public:
    using term_map = std::map<bi_key, rational, bi_key_less>;

    bi_series(unsigned bound_x, unsigned bound_y) : bx_(bound_x), by_(bound_y) {}

    static bi_series zero(unsigned bx, unsigned by) { return bi_series(bx, by); }

    static bi_series constant(const rational& c, unsigned bx, unsigned by) {
        bi_series f(bx, by);
        f.add_term(partition(), partition(), c);
        return f;
    }

    static bi_series one(unsigned bx, unsigned by) { return constant(1, bx, by); }

    unsigned bound_x() const { return bx_; }
    unsigned bound_y() const { return by_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    rational coeff(const partition& lam, const partition& mu) const {
        auto it = terms_.find(bi_key{lam, mu});
        return it == terms_.end() ? rational(0) : it->second;
    }

    void add_term(const partition& lam, const partition& mu, const rational& c) {
        if (lam.weight() > bx_ || mu.weight() > by_ || c == 0) return;
        auto [it, inserted] = terms_.emplace(bi_key{lam, mu}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bi_series truncated(unsigned bx, unsigned by) const {
        bi_series f(bx, by);
        for (const auto& [k, c] : terms_) f.add_term(k.x, k.y, c);
        return f;
    }

    bool operator==(const bi_series& o) const {
        return bx_ == o.bx_ && by_ == o.by_ && terms_ == o.terms_;
    }

private:
    unsigned bx_, by_;
    term_map terms_;
};

inline bi_series operator+(const bi_series& a, const bi_series& b) {
    bi_series r = a.truncated(std::min(a.bound_x(), b.bound_x()),
                              std::min(a.bound_y(), b.bound_y()));
    for (const auto& [k, c] : b.terms()) r.add_term(k.x, k.y, c);
    return r;
}

inline bi_series operator-(const bi_series& a, const bi_series& b) {
    bi_series r = a.truncated(std::min(a.bound_x(), b.bound_x()),
                              std::min(a.bound_y(), b.bound_y()));
    for (const auto& [k, c] : b.terms()) r.add_term(k.x, k.y, -c);
    return r;
}

inline bi_series operator*(const rational& c, const bi_series& f) {
    bi_series r(f.bound_x(), f.bound_y());
    if (c == 0) return r;
    for (const auto& [k, v] : f.terms()) r.add_term(k.x, k.y, c * v);
    return r;
}

/// Product: p-basis concatenation in both sorts independently.
inline bi_series operator*(const bi_series& a, const bi_series& b) {
    bi_series r(std::min(a.bound_x(), b.bound_x()), std::min(a.bound_y(), b.bound_y()));
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            if (ka.x.weight() + kb.x.weight() > r.bound_x()) continue;
            if (ka.y.weight() + kb.y.weight() > r.bound_y()) continue;
            r.add_term(detail::merge_parts(ka.x, kb.x), detail::merge_parts(ka.y, kb.y), ca * cb);
        }
    return r;
}

inline bi_series bi_multiply(const bi_series& a, const bi_series& b) { return a * b; }

/// Lift a pure-x series into the two-sort ring.
inline bi_series embed_x(const p_series& f, unsigned bound_y) {
    bi_series r(f.bound(), bound_y);
    for (const auto& [lam, c] : f.terms()) r.add_term(lam, partition(), c);
    return r;
}

/// Lift a pure-y series into the two-sort ring.
inline bi_series embed_y(const p_series& f, unsigned bound_x) {
    bi_series r(bound_x, f.bound());
    for (const auto& [mu, c] : f.terms()) r.add_term(partition(), mu, c);
    return r;
}

/// The x-section at fixed mu: sum_lambda c_{lambda,mu} p_lambda(x), with the
/// coefficients exactly as stored.
inline p_series x_section(const bi_series& f, const partition& mu) {
    p_series s(f.bound_x());
    for (const auto& [k, c] : f.terms())
        if (k.y == mu) s.add_term(k.x, c);
    return s;
}

/// Distinct y-partitions with a nonzero term, in canonical order.
inline std::vector<partition> y_support(const bi_series& f) {
    std::map<partition, bool, partition_less> seen;
    for (const auto& [k, c] : f.terms()) seen.emplace(k.y, true);
    std::vector<partition> out;
    out.reserve(seen.size());
    for (const auto& [mu, b] : seen) out.push_back(mu);
    return out;
}

namespace detail {

inline std::map<partition, p_series, partition_less> sections_by_y(const bi_series& f) {
    std::map<partition, p_series, partition_less> out;
    for (const auto& [k, c] : f.terms()) {
        auto it = out.find(k.y);
        if (it == out.end()) it = out.emplace(k.y, p_series(f.bound_x())).first;
        it->second.add_term(k.x, c);
    }
    return out;
}

} // namespace detail

/// Cartesian product in Y: per mu, the x-sections multiply with a z_mu
/// rescale, c_{.,mu}(result) = z_mu * c_{.,mu}(F) *_x c_{.,mu}(G).
inline bi_series cartesian_y(const bi_series& a, const bi_series& b) {
    bi_series r(std::min(a.bound_x(), b.bound_x()), std::min(a.bound_y(), b.bound_y()));
    const auto sa = detail::sections_by_y(a);
    const auto sb = detail::sections_by_y(b);
    for (const auto& [mu, fa] : sa) {
        auto it = sb.find(mu);
        if (it == sb.end()) continue;
        const p_series prod = rational(z_of(mu)) * (fa * it->second);
        for (const auto& [lam, c] : prod.terms()) r.add_term(lam, mu, c);
    }
    return r;
}

/// <F, G>_Y = (F x_Y G)|_{Y=1}: sum over mu of z_mu times the x-product of
/// the sections. The result is a one-sort series in x.
inline p_series scalar_y(const bi_series& a, const bi_series& b) {
    p_series r(std::min(a.bound_x(), b.bound_x()));
    const auto sa = detail::sections_by_y(a);
    const auto sb = detail::sections_by_y(b);
    for (const auto& [mu, fa] : sa) {
        auto it = sb.find(mu);
        if (it == sb.end()) continue;
        const p_series prod = rational(z_of(mu)) * (fa * it->second);
        for (const auto& [lam, c] : prod.terms()) r.add_term(lam, c);
    }
    return r;
}

/// Sets every p_mu(y) to 1: the x-sections are summed coefficientwise.
inline p_series set_y_one(const bi_series& f) {
    p_series r(f.bound_x());
    for (const auto& [k, c] : f.terms()) r.add_term(k.x, c);
    return r;
}

/// p_k applied plethystically in both sorts: p_i(x) -> p_{ki}(x) and
/// p_i(y) -> p_{ki}(y).
inline bi_series pleth_power_xy(const bi_series& f, unsigned k) {
    bi_series r(f.bound_x(), f.bound_y());
    for (const auto& [key, c] : f.terms()) {
        std::vector<unsigned> px, py;
        px.reserve(key.x.part_count());
        py.reserve(key.y.part_count());
        for (unsigned l : key.x.parts()) px.push_back(l * k);
        for (unsigned l : key.y.parts()) py.push_back(l * k);
        r.add_term(partition(std::move(px)), partition(std::move(py)), c);
    }
    return r;
}

inline bi_series pow(const bi_series& f, unsigned e) {
    bi_series r = bi_series::one(f.bound_x(), f.bound_y());
    for (unsigned i = 0; i < e; ++i) r = r * f;
    return r;
}

/// Plethystic composition of a one-sort outer series into a two-sort inner
/// series; same convergence guard as the one-sort plethysm.
inline bi_series bi_plethysm(const p_series& f, const bi_series& h, bool outer_polynomial = false) {
    if (!outer_polynomial && h.coeff(partition(), partition()) != 0)
        throw composition_error("bi_plethysm: inner series has a constant term and the outer "
                                "series is truncated; composition does not converge");
    bi_series r(h.bound_x(), h.bound_y());
    std::map<unsigned, bi_series> h_pow_k;
    for (const auto& [lam, c] : f.terms()) {
        bi_series prod = bi_series::one(h.bound_x(), h.bound_y());
        for (unsigned l : lam.parts()) {
            auto it = h_pow_k.find(l);
            if (it == h_pow_k.end()) it = h_pow_k.emplace(l, pleth_power_xy(h, l)).first;
            prod = prod * it->second;
            if (prod.is_zero()) break;
        }
        for (const auto& [key, v] : prod.terms()) r.add_term(key.x, key.y, c * v);
    }
    return r;
}

/// exp of a two-sort series with zero constant term.
inline bi_series exp_of(const bi_series& s) {
    if (s.coeff(partition(), partition()) != 0)
        throw std::domain_error("exp_of: series must have zero constant term");
    bi_series r = bi_series::one(s.bound_x(), s.bound_y());
    bi_series term = r;
    const unsigned max_j = s.bound_x() + s.bound_y();
    for (unsigned j = 1; j <= max_j && !term.is_zero(); ++j) {
        term = rational(1, j) * (term * s);
        for (const auto& [k, c] : term.terms()) r.add_term(k.x, k.y, c);
    }
    return r;
}

/// Derivative with respect to p_1(x); the x-bound drops by one.
inline bi_series p1x_derivative(const bi_series& f) {
    const unsigned bx = f.bound_x() == 0 ? 0 : f.bound_x() - 1;
    bi_series r(bx, f.bound_y());
    for (const auto& [k, c] : f.terms()) {
        const unsigned m1 = k.x.multiplicity(1);
        if (m1 == 0) continue;
        std::vector<unsigned> parts = k.x.parts();
        parts.pop_back();
        r.add_term(partition(std::move(parts)), k.y, c * m1);
    }
    return r;
}

/// fix F[lambda, mu] = z_lambda z_mu c_{lambda,mu}.
inline rational fix_count(const bi_series& f, const partition& lam, const partition& mu) {
    return rational(z_of(lam)) * rational(z_of(mu)) * f.coeff(lam, mu);
}

template <class Fn>
bi_series from_fix_xy(Fn&& fn, unsigned bx, unsigned by) {
    bi_series r(bx, by);
    for (unsigned a = 0; a <= bx; ++a)
        for (const partition& lam : partitions_of(a))
            for (unsigned b = 0; b <= by; ++b)
                for (const partition& mu : partitions_of(b)) {
                    const rational v = fn(lam, mu);
                    if (v != 0) r.add_term(lam, mu, v / (rational(z_of(lam)) * rational(z_of(mu))));
                }
    return r;
}

/// Two-variable isomorphism-types specialization p_i(x) = x^i, p_i(y) = y^i:
/// out[a][b] = sum over lambda |- a, mu |- b of c_{lambda,mu}.
inline std::vector<std::vector<rational>> iso_types_xy(const bi_series& f) {
    std::vector<std::vector<rational>> out(f.bound_x() + 1,
                                           std::vector<rational>(f.bound_y() + 1, rational(0)));
    for (const auto& [k, c] : f.terms()) out[k.x.weight()][k.y.weight()] += c;
    return out;
}

inline std::string to_string(const bi_series& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : f.terms()) {
        os << (first ? "" : " + ") << rational_str(c);
        if (!k.x.empty()) os << "*px" << to_string(k.x);
        if (!k.y.empty()) os << "*py" << to_string(k.y);
        first = false;
    }
    return os.str();
}

/// {"bound_x":N,"bound_y":M,"terms":[{"x":[...],"y":[...],"coeff":"a/b"}]}.
inline void series_json(std::ostream& os, const bi_series& f) {
    os << "{\"bound_x\":" << f.bound_x() << ",\"bound_y\":" << f.bound_y() << ",\"terms\":[";
    bool first = true;
    for (const auto& [k, c] : f.terms()) {
        if (!first) os << ',';
        os << "{\"x\":";
        partition_json(os, k.x);
        os << ",\"y\":";
        partition_json(os, k.y);
        os << ",\"coeff\":\"" << rational_str(c) << "\"}";
        first = false;
    }
    os << "]}";
}

} // namespace specix
