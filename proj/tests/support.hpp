#pragma once

// Shared test helpers: independent oracles (kept deliberately naive and
// engine-free) and small generators for property-style tests.

#include "specix/cycle_index.hpp"
#include "specix/pseries.hpp"
#include "specix/species.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace testsupport {

using namespace specix;

// Partition-function values from the pentagonal-number recurrence,
// independent of the generator under test.
inline std::vector<long long> partition_numbers(unsigned max_n) {
    std::vector<long long> p(max_n + 1, 0);
    p[0] = 1;
    for (unsigned n = 1; n <= max_n; ++n) {
        long long total = 0;
        for (long long k = 1;; ++k) {
            const long long g1 = k * (3 * k - 1) / 2;
            const long long g2 = k * (3 * k + 1) / 2;
            if (g1 > static_cast<long long>(n) && g2 > static_cast<long long>(n)) break;
            const long long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= static_cast<long long>(n)) total += sign * p[n - g1];
            if (g2 <= static_cast<long long>(n)) total += sign * p[n - g2];
        }
        p[n] = total;
    }
    return p;
}

// Cycle type of an explicit permutation, as a partition.
inline partition cycle_type_of(const std::vector<unsigned>& perm) {
    const unsigned n = static_cast<unsigned>(perm.size());
    std::vector<bool> seen(n, false);
    std::vector<unsigned> lens;
    for (unsigned i = 0; i < n; ++i) {
        if (seen[i]) continue;
        unsigned len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        lens.push_back(len);
    }
    return partition(std::move(lens));
}

inline std::vector<unsigned> perm_of_type(const partition& mu) {
    std::vector<unsigned> perm(mu.weight());
    unsigned base = 0;
    for (unsigned len : mu.parts()) {
        for (unsigned i = 0; i < len; ++i) perm[base + i] = base + (i + 1) % len;
        base += len;
    }
    return perm;
}

// power_type oracle: build a permutation of the given type, raise it to the
// k-th power explicitly, read off the cycle type.
inline partition power_type_by_permutation(const partition& lam, unsigned k) {
    const auto perm = perm_of_type(lam);
    std::vector<unsigned> pk(perm.size());
    for (unsigned i = 0; i < perm.size(); ++i) {
        unsigned j = i;
        for (unsigned s = 0; s < k; ++s) j = perm[j];
        pk[i] = j;
    }
    return cycle_type_of(pk);
}

// --- set-partition oracle for the composition theorem ----------------------
//
// For F, G among {X, E_2, E_3, E} an (F o G)-structure on [n] is exactly an
// admissible set partition (block sizes constrained by G, block count by F),
// and sigma fixes it iff it permutes the blocks. fix counts come from
// explicit enumeration of all set partitions.

enum class simple_atom { X, E2, E3, E, EPLUS };

inline bool atom_admits(simple_atom a, unsigned size) {
    switch (a) {
        case simple_atom::X: return size == 1;
        case simple_atom::E2: return size == 2;
        case simple_atom::E3: return size == 3;
        case simple_atom::E: return true;
        case simple_atom::EPLUS: return size >= 1;
    }
    return false;
}

inline species_ptr atom_expr(simple_atom a) {
    switch (a) {
        case simple_atom::X: return sp::x();
        case simple_atom::E2: return sp::set_of_size(2);
        case simple_atom::E3: return sp::set_of_size(3);
        case simple_atom::E: return sp::set();
        case simple_atom::EPLUS: return sp::nonempty_set();
    }
    return sp::zero();
}

inline void all_set_partitions(unsigned n, const std::function<void(const std::vector<unsigned>&)>& emit) {
    std::vector<unsigned> block(n, 0); // restricted growth string
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned maxb) {
        if (i == n) {
            emit(block);
            return;
        }
        for (unsigned b = 0; b <= maxb; ++b) {
            block[i] = b;
            rec(i + 1, std::max(maxb, b + 1));
        }
    };
    if (n == 0) emit(block);
    else rec(0, 0);
}

inline long long brute_compose_fix(simple_atom f, simple_atom g, const partition& lam) {
    const unsigned n = lam.weight();
    const auto sigma = perm_of_type(lam);
    long long fixed = 0;
    all_set_partitions(n, [&](const std::vector<unsigned>& block) {
        const unsigned nblocks = n == 0 ? 0 : *std::max_element(block.begin(), block.end()) + 1;
        if (!atom_admits(f, nblocks)) return;
        std::vector<unsigned> sizes(nblocks, 0);
        for (unsigned b : block) ++sizes[b];
        for (unsigned s : sizes)
            if (!atom_admits(g, s)) return;
        // sigma must map blocks to blocks
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                if ((block[i] == block[j]) != (block[sigma[i]] == block[sigma[j]])) return;
        ++fixed;
    });
    return fixed;
}

// --- random generators ------------------------------------------------------

struct series_gen {
    std::mt19937 rng;

    explicit series_gen(unsigned seed) : rng(seed) {}

    rational small_rational() {
        std::uniform_int_distribution<int> num(-4, 4);
        std::uniform_int_distribution<int> den(1, 3);
        return rational(num(rng), den(rng));
    }

    partition random_partition(unsigned max_weight) {
        std::uniform_int_distribution<unsigned> wd(0, max_weight);
        const unsigned w = wd(rng);
        const auto& all = partitions_of(w);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        return all[pick(rng)];
    }

    p_series random_series(unsigned bound, unsigned terms, bool zero_constant = false) {
        p_series f(bound);
        for (unsigned i = 0; i < terms; ++i) {
            partition lam = random_partition(bound);
            if (zero_constant && lam.empty()) continue;
            f.add_term(lam, small_rational());
        }
        return f;
    }
};

// --- CLI process helper -----------------------------------------------------

struct cli_result {
    int exit_code = -1;
    std::string out;
};

inline cli_result run_cli(const std::string& args) {
#ifdef SPECIX_CLI_PATH
    const std::string cmd = std::string(SPECIX_CLI_PATH) + " " + args + " 2>/dev/null";
#else
    const std::string cmd = "specix " + args + " 2>/dev/null";
#endif
    cli_result res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace testsupport
