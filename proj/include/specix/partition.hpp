#pragma once

#include "specix/rational.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace specix {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition (of 0) is valid. Partitions index every series coefficient in
/// the library, so the decreasing storage order is the one canonical form.
class partition {
public:
    partition() = default;

    explicit partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end(), std::greater<unsigned>());
        if (!parts_.empty() && parts_.back() == 0)
            throw std::invalid_argument("partition parts must be positive");
        weight_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
    }

    static partition single(unsigned k) { return partition(std::vector<unsigned>{k}); }

    /// n with lambda a partition of n.
    unsigned weight() const { return weight_; }
    std::size_t part_count() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    const std::vector<unsigned>& parts() const { return parts_; }

    /// m_k, the number of parts equal to k.
    unsigned multiplicity(unsigned k) const {
        return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), k));
    }

    bool operator==(const partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const partition& o) const { return parts_ != o.parts_; }

private:
    std::vector<unsigned> parts_;
    unsigned weight_ = 0;
};

/// Canonical ordering: by weight, then decreasing lexicographic on the parts,
/// e.g. (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1). All series iterate their
/// terms in this order, which makes every printout reproducible.
struct partition_less {
    bool operator()(const partition& a, const partition& b) const {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                            a.parts().begin(), a.parts().end());
    }
};

/// z_lambda = prod_k k^{m_k} m_k!, the centralizer order; n!/z_lambda is the
/// size of the conjugacy class of cycle type lambda.
inline bigint z_of(const partition& lam) {
    bigint z = 1;
    const auto& p = lam.parts();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        const auto m = static_cast<unsigned>(j - i);
        z *= int_pow(p[i], m) * factorial(m);
        i = j;
    }
    return z;
}

/// Cycle type of sigma^k for any sigma of cycle type lambda: a part of
/// length l splits into gcd(l,k) cycles of length l/gcd(l,k).
inline partition power_type(const partition& lam, unsigned k) {
    std::vector<unsigned> out;
    out.reserve(lam.part_count());
    for (unsigned l : lam.parts()) {
        const unsigned g = std::gcd(l, k);
        for (unsigned i = 0; i < g; ++i) out.push_back(l / g);
    }
    return partition(std::move(out));
}

/// lambda with j extra parts of size 1; realizes the fix-count shadow of the
/// species derivative, fix G^{(j)}[lambda] = fix G[augment(lambda, j)].
inline partition augment(const partition& lam, unsigned j) {
    std::vector<unsigned> out = lam.parts();
    out.insert(out.end(), j, 1u);
    return partition(std::move(out));
}

namespace detail {

inline void gen_partitions(unsigned n, unsigned max_part, std::vector<unsigned>& acc,
                           std::vector<partition>& out) {
    if (n == 0) {
        out.push_back(partition(acc));
        return;
    }
    for (unsigned first = std::min(n, max_part); first >= 1; --first) {
        acc.push_back(first);
        gen_partitions(n - first, first, acc, out);
        acc.pop_back();
    }
}

} // namespace detail

/// All partitions of n in decreasing lexicographic order:
/// (n), (n-1,1), ..., (1^n).
inline const std::vector<partition>& partitions_of(unsigned n) {
    static std::mutex mtx;
    static std::vector<std::vector<partition>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= n) {
        const auto m = static_cast<unsigned>(cache.size());
        std::vector<partition> out;
        std::vector<unsigned> acc;
        detail::gen_partitions(m, m == 0 ? 1 : m, acc, out);
        cache.push_back(std::move(out));
    }
    return cache[n];
}

inline std::string to_string(const partition& lam) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < lam.part_count(); ++i) {
        if (i) os << ',';
        os << lam.parts()[i];
    }
    os << ']';
    return os.str();
}

/// JSON form: array of parts in canonical order, e.g. [2,1,1].
inline void partition_json(std::ostream& os, const partition& lam) {
    os << to_string(lam);
}

} // namespace specix
