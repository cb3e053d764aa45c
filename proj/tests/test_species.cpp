#include "specix/species.hpp"

#include "specix/cycle_index.hpp"
#include "specix/phi.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace specix;

namespace {

partition P(std::vector<unsigned> v) { return partition(std::move(v)); }

} // namespace

TEST_CASE("parser: grammar derivations") {
    const species_ptr e1 = parse_species("E(X*E_3(Y))");
    REQUIRE(e1->kind == species_kind::compose);
    CHECK(e1->a->kind == species_kind::set_species);
    REQUIRE(e1->b->kind == species_kind::product);
    CHECK(e1->b->a->kind == species_kind::singleton_x);
    REQUIRE(e1->b->b->kind == species_kind::compose);
    CHECK(e1->b->b->a->size_k == 3);
    CHECK(e1->b->b->b->kind == species_kind::singleton_y);

    const species_ptr e2 = parse_species("E_3 - E_1");
    REQUIRE(e2->kind == species_kind::difference);
    CHECK(e2->a->size_k == 3);
    CHECK(e2->b->size_k == 1);

    const species_ptr e3 = parse_species("E''");
    REQUIRE(e3->kind == species_kind::derivative);
    CHECK(e3->order == 2);
    CHECK(e3->a->kind == species_kind::set_species);

    CHECK(parse_species("  0 + 1\t* X ")->kind == species_kind::sum);
    CHECK(parse_species("Eplus")->kind == species_kind::nonempty_set);
    CHECK(parse_species("E_12")->size_k == 12);
}

TEST_CASE("parser: errors carry positions") {
    CHECK_THROWS_AS(parse_species("E_2 +"), species_parse_error);
    CHECK_THROWS_AS(parse_species("Q"), species_parse_error);
    CHECK_THROWS_AS(parse_species("E_"), species_parse_error);
    CHECK_THROWS_AS(parse_species("E_x"), species_parse_error);
    CHECK_THROWS_AS(parse_species("(E_2"), species_parse_error);
    CHECK_THROWS_AS(parse_species("E_2)"), species_parse_error);
    CHECK_THROWS_AS(parse_species(""), species_parse_error);
    try {
        parse_species("E_2 + Zoo");
    } catch (const species_parse_error& err) {
        CHECK(err.position() == 6);
    }
}

TEST_CASE("printer round-trips through the parser") {
    for (const char* text :
         {"E(X*E_3(Y))", "E_3 - E_1", "E''", "(E_2 + X)*E_4", "E_2(X*E_2(Y))",
          "Eplus*X + E_4", "X*(X + 1)'", "E - 1", "E_2(E_2)"}) {
        const species_ptr e = parse_species(text);
        const std::string printed = format_species(e);
        CHECK(format_species(parse_species(printed)) == printed);
        // same cycle index both ways
        if (!mentions_y(e))
            CHECK(cycle_index(parse_species(printed), 5) == cycle_index(e, 5));
    }
}

TEST_CASE("species json") {
    std::ostringstream os;
    species_json(os, parse_species("E_3 - E_1"));
    CHECK(os.str() ==
          "{\"kind\":\"difference\",\"args\":[{\"kind\":\"E_k\",\"k\":3},"
          "{\"kind\":\"E_k\",\"k\":1}]}");
}

TEST_CASE("strictly_finite and max_degree") {
    CHECK(strictly_finite(parse_species("E_3 - E_1")));
    CHECK(!strictly_finite(parse_species("E")));
    CHECK(!strictly_finite(parse_species("Eplus")));
    CHECK(!strictly_finite(parse_species("X*E")));
    CHECK(strictly_finite(parse_species("E_2(E_3)")));
    CHECK(*max_degree(parse_species("E_2(E_3)")) == 6);
    CHECK(*max_degree(parse_species("E_4'")) == 3);
    CHECK(*max_degree(parse_species("X*E_2 + 1")) == 3);
}

TEST_CASE("cycle_index atoms and identities") {
    const p_series h2 = cycle_index(parse_species("E_2"), 4);
    CHECK(h2.coeff(P({1, 1})) == rational(1, 2));
    CHECK(h2.coeff(P({2})) == rational(1, 2));
    CHECK(h2.terms().size() == 2);

    CHECK(cycle_index(parse_species("1"), 5) == p_series::one(5));
    CHECK(cycle_index(parse_species("0"), 5) == p_series::zero(5));
    CHECK(cycle_index(parse_species("X"), 5) == p_series::power_sum(P({1}), 5));

    // E = E_0 + E_1 + ... + E_b at bound b
    const unsigned b = 6;
    p_series sum_ek = p_series::zero(b);
    for (unsigned k = 0; k <= b; ++k) sum_ek = sum_ek + z_set_of_size(k, b);
    CHECK(cycle_index(parse_species("E"), b) == sum_ek);

    // Eplus = E - 1
    CHECK(cycle_index(parse_species("Eplus"), b) ==
          cycle_index(parse_species("E - 1"), b));

    // derivative of E_k is E_{k-1}
    for (unsigned k = 1; k <= 5; ++k) {
        const species_ptr ek = sp::set_of_size(k);
        CHECK(cycle_index(sp::derivative(ek), b) == cycle_index(sp::set_of_size(k - 1), b));
    }

    // E'' = E at every bound (evaluated through the derivative path)
    CHECK(cycle_index(parse_species("E''"), b) == z_set(b));
}

TEST_CASE("cycle_index of E_2(X*E_2(Y)) is the displayed two-sort series") {
    const bi_series zg = cycle_index_xy(parse_species("E_2(X*E_2(Y))"), 2, 4);
    CHECK(zg.coeff(P({1, 1}), P({1, 1, 1, 1})) == rational(1, 8));
    CHECK(zg.coeff(P({1, 1}), P({2, 1, 1})) == rational(1, 4));
    CHECK(zg.coeff(P({1, 1}), P({2, 2})) == rational(1, 8));
    CHECK(zg.coeff(P({2}), P({2, 2})) == rational(1, 4));
    CHECK(zg.coeff(P({2}), P({4})) == rational(1, 4));
    CHECK(zg.terms().size() == 5);
}

TEST_CASE("derivative of a two-sort expression acts on the x sort") {
    CHECK(cycle_index_xy(parse_species("(X*E_2(Y))'"), 2, 2) ==
          cycle_index_xy(parse_species("E_2(Y)"), 2, 2));
    // a derived outer species goes through the expansion rules
    const species_ptr derived_outer =
        sp::compose(sp::derivative(sp::set_of_size(2)), sp::product(sp::x(), sp::y()));
    CHECK(cycle_index_xy(derived_outer, 3, 3) == cycle_index_xy(parse_species("X*Y"), 3, 3));
}

TEST_CASE("sort misuse and convergence guard are hard errors") {
    CHECK_THROWS_AS(cycle_index(parse_species("Y"), 4), species_error);
    CHECK_THROWS_AS(cycle_index(parse_species("E(X + 1)"), 4), species_error);
    CHECK_THROWS_AS(cycle_index(parse_species("Eplus(1)"), 4), species_error);
    CHECK_NOTHROW(cycle_index(parse_species("E_2(X + 1)"), 4));
    CHECK_THROWS_AS(cycle_index_xy(parse_species("E(Y + 1)"), 3, 3), species_error);
    CHECK_THROWS_AS(cycle_index_xy(parse_species("Y(X)"), 3, 3), species_error);
}

TEST_CASE("ordinary expressions have nonnegative integer fix counts") {
    evaluator ev;
    for (const char* text : {"E", "E_3", "E*E", "E_2(E_2)", "Eplus", "X*E + E_2"}) {
        const p_series z = ev.cycle_index(parse_species(text), 6);
        for (unsigned n = 0; n <= 6; ++n)
            for (const auto& lam : partitions_of(n)) {
                const rational f = fix_count(z, lam);
                CHECK(is_integer(f));
                CHECK(f >= 0);
            }
    }
}

TEST_CASE("phi: fix formula, Phi(0) = E(Y), Phi(E)") {
    // Phi(0): x-section 1 at every mu
    const bi_series phi0 = phi_cycle_index(fix_fn::constant(0), 4, 4);
    CHECK(phi0 == cycle_index_xy(sp::compose(sp::set(), sp::y()), 4, 4));

    // Phi(E): fix = 1 at every (lambda, mu)
    const bi_series phie = phi_cycle_index(fix_fn::constant(1), 3, 3);
    for (unsigned a = 0; a <= 3; ++a)
        for (const auto& lam : partitions_of(a))
            for (unsigned b = 0; b <= 3; ++b)
                for (const auto& mu : partitions_of(b))
                    CHECK(fix_count(phie, lam, mu) == 1);

    // spot fix values against the product formula for F = E_2
    const fix_fn fe2 = fix_fn::weight_is(2);
    const bi_series phi2 = phi_cycle_index(fe2, 4, 4);
    // fix Phi(E_2)[(2,1),(2)]: a_1 = fix E_2[(2)] = 1, a_2 = fix E_2[(1,1)] = 1
    CHECK(fix_count(phi2, P({2, 1}), P({2})) == 1);
    // mu of weight 3: all values 0
    CHECK(fix_count(phi2, P({1}), P({3})) == 0);
}

TEST_CASE("phi multiplicativity, including a signed fix function") {
    testsupport::series_gen gen(61);
    evaluator ev;
    const p_series ze2 = ev.cycle_index(parse_species("E_2"), 4);
    const p_series zx = ev.cycle_index(parse_species("X"), 4);
    const p_series ze = ev.cycle_index(parse_species("E"), 4);

    const fix_fn f_e2 = fix_counts(ze2);
    const fix_fn f_x = fix_counts(zx);
    const fix_fn f_e = fix_counts(ze);
    const fix_fn f_virtual = f_e2 - f_x; // signed: a virtual species

    const std::pair<fix_fn, fix_fn> cases[] = {
        {f_e2, f_x}, {f_e, f_e2}, {f_virtual, f_e}, {f_virtual, f_virtual}};
    for (const auto& [f1, f2] : cases)
        CHECK(phi_cycle_index(f1 + f2, 4, 4) ==
              cartesian_y(phi_cycle_index(f1, 4, 4), phi_cycle_index(f2, 4, 4)));
}

TEST_CASE("phi diagonal reproduces the relation counts") {
    // fix of E*E at mu is 2^(number of parts); the diagonal of Phi(E*E)
    // counts binary relations
    evaluator ev;
    const p_series zee = ev.cycle_index(parse_species("E*E"), 3);
    const bi_series phi = phi_cycle_index(fix_counts(zee), 3, 3);
    const long long expected[] = {1, 2, 10, 104};
    for (unsigned n = 1; n <= 3; ++n) {
        rational total = 0;
        for (const auto& lam : partitions_of(n))
            total += fix_count(phi, lam, lam) / rational(z_of(lam));
        CHECK(total == expected[n]);
    }
}

TEST_CASE("fix function constructors and combinators") {
    const fix_fn even = fix_fn::even_weight();
    CHECK(even(partition()) == 1);
    CHECK(even(P({2, 1})) == 0);
    CHECK(even(P({1, 1})) == 1);

    const fix_fn e3 = fix_fn::weight_is(3);
    CHECK(e3(P({2, 1})) == 1);
    CHECK(e3(P({2})) == 0);

    const fix_fn c = fix_fn::constant(rational(-2, 3));
    CHECK(c(P({5})) == rational(-2, 3));

    const fix_fn m = fix_fn::of_map({{P({2}), rational(7)}});
    CHECK(m(P({2})) == 7);
    CHECK(m(P({1, 1})) == 0); // default outside the stored support

    const fix_fn combo = rational(2) * (even - e3);
    CHECK(combo(P({1, 1})) == 2);
    CHECK(combo(P({2, 1})) == -2);

    // series view round trip: from_fix(fix_counts(f)) = f
    const p_series f = z_set_of_size(3, 5) - rational(1, 2) * z_set(5);
    CHECK(from_fix(fix_counts(f), 5) == f);
}

TEST_CASE("memoized evaluation is identical to fresh evaluation") {
    evaluator ev;
    const species_ptr e = parse_species("E(X*E_2(Y))");
    const bi_series a = ev.cycle_index_xy(e, 4, 8);
    const bi_series b = ev.cycle_index_xy(e, 4, 8); // memo hit
    CHECK(a == b);
    evaluator fresh;
    CHECK(fresh.cycle_index_xy(e, 4, 8) == a);
}
