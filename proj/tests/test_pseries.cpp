#include "specix/pseries.hpp"

#include "specix/cycle_index.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace specix;
using testsupport::series_gen;

namespace {

partition P(std::vector<unsigned> v) { return partition(std::move(v)); }

// fix counts of a species product E*G by direct convolution over the
// sub-multisets of cycles: the E factor absorbs an invariant subset of the
// cycles of sigma, G takes the rest.
rational fix_e_times(const p_series& g, const partition& lam) {
    const auto& parts = lam.parts();
    const auto n = parts.size();
    rational total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<unsigned> rest;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) rest.push_back(parts[i]);
        total += fix_count(g, partition(std::move(rest)));
    }
    return total;
}

} // namespace

TEST_CASE("linear_combine") {
    series_gen gen(7);
    const p_series f = gen.random_series(6, 10);
    CHECK(linear_combine({{1, f}, {-1, f}}).is_zero());
    CHECK(linear_combine({}, 5) == p_series::zero(5));

    // Z_{E_2} + Z_{E_1} = p_1 + p_1^2/2 + p_2/2
    const p_series s = linear_combine({{1, z_set_of_size(2, 4)}, {1, z_set_of_size(1, 4)}});
    CHECK(s.coeff(P({1})) == 1);
    CHECK(s.coeff(P({1, 1})) == rational(1, 2));
    CHECK(s.coeff(P({2})) == rational(1, 2));
    CHECK(s.terms().size() == 3);

    const p_series two_p2 = linear_combine({{2, p_series::power_sum(P({2}), 4)}});
    CHECK(two_p2.coeff(P({2})) == 2);
}

TEST_CASE("multiply: unit, basis concatenation, fix counts of X*X") {
    series_gen gen(11);
    const p_series g = gen.random_series(6, 12);
    CHECK((p_series::one(6) * g) == g);

    const p_series p1 = p_series::power_sum(P({1}), 4);
    const p_series sq = p1 * p1;
    CHECK(sq.coeff(P({1, 1})) == 1);
    CHECK(sq.terms().size() == 1);
    // fixed ordered pairs of labeled points: 2 under the identity, 0 under a
    // transposition
    CHECK(fix_count(sq, P({1, 1})) == 2);
    CHECK(fix_count(sq, P({2})) == 0);
}

TEST_CASE("ring laws on random series") {
    series_gen gen(23);
    for (int it = 0; it < 120; ++it) {
        const p_series a = gen.random_series(5, 6);
        const p_series b = gen.random_series(5, 6);
        const p_series c = gen.random_series(5, 6);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("kronecker: unit Z_E, idempotents, associativity") {
    series_gen gen(31);
    const p_series e = z_set(6);
    for (int it = 0; it < 100; ++it) {
        const p_series g = gen.random_series(6, 8);
        CHECK(kronecker(e, g) == g);
        CHECK(kronecker(g, e) == g);
    }
    const p_series half_p2 = rational(1, 2) * p_series::power_sum(P({2}), 4);
    CHECK(kronecker(half_p2, half_p2) == half_p2);

    const p_series h2 = z_set_of_size(2, 4);
    CHECK(kronecker(h2, h2) == h2); // E_2 x E_2 = E_2

    for (int it = 0; it < 60; ++it) {
        const p_series a = gen.random_series(5, 6);
        const p_series b = gen.random_series(5, 6);
        const p_series c = gen.random_series(5, 6);
        CHECK(kronecker(a, b) == kronecker(b, a));
        CHECK(kronecker(kronecker(a, b), c) == kronecker(a, kronecker(b, c)));
    }
}

TEST_CASE("scalar product") {
    const p_series p1 = p_series::power_sum(P({1}), 4);
    CHECK(scalar_product(p_series::zero(4), p1) == 0);
    CHECK(scalar_product(p1, p1) == 1);
    const p_series h2 = z_set_of_size(2, 4);
    CHECK(scalar_product(h2, h2) == 1); // 1/4*2 + 1/4*2
}

TEST_CASE("plethysm basics") {
    const unsigned b = 8;
    CHECK(plethysm(p_series::power_sum(P({2}), b), p_series::power_sum(P({3}), b)) ==
          p_series::power_sum(P({6}), b));

    series_gen gen(41);
    const p_series p1 = p_series::power_sum(P({1}), 6);
    for (int it = 0; it < 100; ++it) {
        const p_series f = gen.random_series(6, 8);
        CHECK(plethysm(f, p1) == f);
    }

    // [p_{(1,1,1,1)}] Z_{E o E_2} = 1/8
    const p_series ee2 = plethysm(z_set(4), z_set_of_size(2, 4));
    CHECK(ee2.coeff(P({1, 1, 1, 1})) == rational(1, 8));

    // convergence guard: truncated outer with constant-term inner is rejected
    const p_series with_const = p_series::one(4) + p_series::power_sum(P({1}), 4);
    CHECK_THROWS_AS(plethysm(z_set(4), with_const), composition_error);
    CHECK_NOTHROW(plethysm(z_set_of_size(2, 2), with_const, /*outer_polynomial=*/true));
}

TEST_CASE("plethysm laws: p_n o p_m and distributivity") {
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned m = 1; m <= 5; ++m)
            CHECK(plethysm(p_series::power_sum(P({n}), 25), p_series::power_sum(P({m}), 25)) ==
                  p_series::power_sum(P({n * m}), 25));

    series_gen gen(43);
    for (int it = 0; it < 100; ++it) {
        const p_series f = gen.random_series(6, 4);
        const p_series g = gen.random_series(6, 4);
        const p_series h = gen.random_series(6, 4, /*zero_constant=*/true);
        CHECK(plethysm(f + g, h) == plethysm(f, h) + plethysm(g, h));
        CHECK(plethysm(f * g, h) == plethysm(f, h) * plethysm(g, h));
    }
}

TEST_CASE("composition theorem against the set-partition oracle") {
    using testsupport::simple_atom;
    // inner atoms all have zero constant term, so every pairing converges
    const simple_atom outers[] = {simple_atom::X, simple_atom::E2, simple_atom::E3, simple_atom::E};
    const simple_atom inners[] = {simple_atom::X, simple_atom::E2, simple_atom::E3,
                                  simple_atom::EPLUS};
    evaluator ev;
    for (simple_atom fa : outers)
        for (simple_atom ga : inners) {
            const p_series lhs =
                ev.cycle_index(sp::compose(testsupport::atom_expr(fa), testsupport::atom_expr(ga)), 6);
            for (unsigned n = 0; n <= 6; ++n)
                for (const auto& lam : partitions_of(n))
                    CHECK(fix_count(lhs, lam) == testsupport::brute_compose_fix(fa, ga, lam));
        }
}

TEST_CASE("p1 derivative") {
    const p_series p1sq = p_series::power_sum(P({1, 1}), 4);
    const p_series d = p1_derivative(p1sq);
    CHECK(d.coeff(P({1})) == 2);
    CHECK(d.bound() == 3);

    // E' = E degreewise up to bound-1
    CHECK(p1_derivative(z_set(6)) == z_set(5));
    // E_2' = E_1
    CHECK(p1_derivative(z_set_of_size(2, 4)) == z_set_of_size(1, 3));
    // E_k' = E_{k-1} across k
    for (unsigned k = 1; k <= 6; ++k)
        CHECK(p1_derivative(z_set_of_size(k, 7)) == z_set_of_size(k - 1, 6));
}

TEST_CASE("fix counts and from_fix round trip") {
    series_gen gen(53);
    for (int it = 0; it < 60; ++it) {
        const p_series f = gen.random_series(6, 10);
        const p_series back = from_fix([&](const partition& lam) { return fix_count(f, lam); }, 6);
        CHECK(back == f);
    }

    const p_series e = z_set(6);
    for (unsigned n = 0; n <= 6; ++n)
        for (const auto& lam : partitions_of(n)) CHECK(fix_count(e, lam) == 1);

    const p_series h3 = z_set_of_size(3, 6);
    for (unsigned n = 0; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(fix_count(h3, lam) == (n == 3 ? 1 : 0));
}

TEST_CASE("fix counts of E*(E_3 - E_1) match the cycle-subset convolution") {
    const unsigned b = 5;
    const p_series g = z_set_of_size(3, b) - z_set_of_size(1, b);
    const p_series prod = z_set(b) * g;
    for (unsigned n = 0; n <= b; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(fix_count(prod, lam) == fix_e_times(g, lam));
    CHECK(fix_count(prod, P({2, 1})) == 0); // regression value
}

TEST_CASE("specializations") {
    const auto iso_h2 = iso_types(z_set_of_size(2, 4));
    CHECK(iso_h2[2] == 1);
    CHECK(iso_h2[0] == 0);
    CHECK(iso_h2[3] == 0);

    const auto egf_e = egf(z_set(8));
    for (unsigned n = 0; n <= 8; ++n) CHECK(egf_e[n] == rational(1) / rational(factorial(n)));

    // iso-types of ordinary species have nonnegative integer coefficients
    evaluator ev;
    for (const char* text : {"E", "E_3", "E*E", "E_2(E_2)", "E(X*X)", "Eplus*X + E_4"}) {
        const auto types = iso_types(ev.cycle_index(parse_species(text), 7));
        for (const auto& c : types) {
            CHECK(is_integer(c));
            CHECK(c >= 0);
        }
    }
}

TEST_CASE("series json") {
    std::ostringstream os;
    series_json(os, z_set_of_size(2, 4));
    CHECK(os.str() ==
          "{\"bound\":4,\"terms\":[{\"partition\":[2],\"coeff\":\"1/2\"},"
          "{\"partition\":[1,1],\"coeff\":\"1/2\"}]}");
}

TEST_CASE("truncation is explicit and re-truncation drops high terms") {
    const p_series e = z_set(6);
    const p_series cut = e.truncated(3);
    CHECK(cut.bound() == 3);
    for (const auto& [lam, c] : cut.terms()) CHECK(lam.weight() <= 3);
    // binary ops re-truncate to the minimum bound
    CHECK((e + z_set(3)).bound() == 3);
    CHECK((e * z_set(4)).bound() == 4);
}
