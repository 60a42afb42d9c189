#include <doctest.h>

#include "symreg/census.hpp"
#include "symreg/errors.hpp"
#include "symreg/symbolic.hpp"
#include "test_helpers.hpp"

using namespace symreg;
using testutil::complete;
using testutil::cycle;
using testutil::ideal;
using testutil::mono;

TEST_CASE("minimal primes of edge ideals are the minimal vertex covers") {
    for (const SimpleGraph& G : enumerate_graphs_up_to(5, true)) {
        if (G.edge_count() == 0) continue;
        CHECK(minimal_primes(edge_ideal(G)) == minimal_vertex_covers(G));
    }
    // a non-graph squarefree ideal
    MonomialIdeal I = ideal(3, {{1, 1, 1}});
    CHECK(minimal_primes(I) == std::vector<std::vector<int>>{{1}, {2}, {3}});
    CHECK_THROWS_AS(minimal_primes(MonomialIdeal::zero(2)), Error);
    CHECK_THROWS_AS(minimal_primes(ideal(2, {{2, 0}})), Error);
}

TEST_CASE("symbolic power examples") {
    MonomialIdeal c3 = edge_ideal(cycle(3));
    CHECK(symbolic_power(c3, 2) == ideal(3, {{2, 2, 0}, {2, 0, 2}, {0, 2, 2}, {1, 1, 1}}));
    MonomialIdeal c4 = edge_ideal(cycle(4));
    CHECK(symbolic_power(c4, 2) == power(c4, 2));
    CHECK(symbolic_power(c3, 1) == c3);
    CHECK_THROWS_AS(symbolic_power(MonomialIdeal::unit(2), 2), Error);
    CHECK_THROWS_AS(symbolic_power(ideal(2, {{2, 1}}), 2), Error);
    CHECK_THROWS_AS(symbolic_power(c3, 0), Error);
}

TEST_CASE("differential membership") {
    MonomialIdeal c3 = edge_ideal(cycle(3));
    CHECK(differential_member(c3, mono({1, 1, 1}), 2));
    CHECK(differential_member(c3, mono({1, 1, 0}), 1));  // f in I, s = 1
    CHECK_FALSE(differential_member(c3, mono({1, 1, 1}), 3));
}

TEST_CASE("expansion closed forms") {
    MonomialIdeal c3 = edge_ideal(cycle(3));
    CHECK(expansion(cycle(3), 2) == add(power(c3, 2), ideal(3, {{1, 1, 1}})));
    MonomialIdeal c5 = edge_ideal(cycle(5));
    CHECK(expansion(cycle(5), 3) == add(power(c5, 3), ideal(5, {{1, 1, 1, 1, 1}})));
    MonomialIdeal c6 = edge_ideal(cycle(6));
    CHECK(expansion(cycle(6), 3) == power(c6, 3));
    CHECK_THROWS_AS(expansion(cycle(3), 4), Error);
    CHECK_THROWS_AS(expansion(cycle(3), 1), Error);
}

TEST_CASE("fourth closure") {
    MonomialIdeal c3 = edge_ideal(cycle(3));
    MonomialIdeal expected = add(power(c3, 3), ideal(3, {{2, 2, 2}}));
    CHECK(fourth_closure(cycle(3)) == expected);
    CHECK(fourth_closure(cycle(3)) == add(symbolic_power(c3, 4), power(c3, 3)));
    CHECK(fourth_closure(complete(5)).contains(mono({1, 1, 1, 1, 1})));
    CHECK(fourth_closure(cycle(4)) == power(edge_ideal(cycle(4)), 3));
}

TEST_CASE("triple agreement: definition, closed form, differential") {
    for (const SimpleGraph& G : enumerate_graphs_up_to(5, true)) {
        if (G.edge_count() == 0) continue;
        MonomialIdeal I = edge_ideal(G);
        for (int s : {2, 3}) {
            MonomialIdeal sym = symbolic_power(I, s);
            CHECK(sym == expansion(G, s));
            for (const Monomial& f : sym.gens()) CHECK(differential_member(I, f, s));
            // non-members must fail the differential test
            testutil::Rng rng(61);
            int checked = 0;
            for (int t = 0; t < 60 && checked < 12; ++t) {
                Monomial m = rng.monomial(G.n(), 2);
                if (m.degree() > 2 * s + 1 || sym.contains(m)) continue;
                ++checked;
                CHECK_FALSE(differential_member(I, m, s));
            }
        }
    }
}

TEST_CASE("bipartite collapse on the small census") {
    for (const SimpleGraph& G : enumerate_graphs_up_to(5, true)) {
        if (G.edge_count() == 0 || !is_bipartite(G)) continue;
        MonomialIdeal I = edge_ideal(G);
        for (int s = 2; s <= 4; ++s) CHECK(symbolic_power(I, s) == power(I, s));
    }
}

TEST_CASE("restriction identity for symbolic power generators") {
    for (const SimpleGraph& G : enumerate_graphs_up_to(5, true)) {
        if (G.edge_count() == 0) continue;
        MonomialIdeal I = edge_ideal(G);
        for (int s : {2, 3}) {
            MonomialIdeal sym = symbolic_power(I, s);
            for (const Monomial& f : sym.gens()) {
                MonomialIdeal IV = restrict_to(I, f.support());
                if (IV.is_zero()) continue;  // cannot happen for generators
                CHECK(symbolic_power(IV, s).contains(f));
            }
        }
    }
}

TEST_CASE("containment chain I^s within I^(s) within I^(s-1)") {
    for (const SimpleGraph& G : enumerate_graphs_up_to(5, true)) {
        if (G.edge_count() == 0) continue;
        MonomialIdeal I = edge_ideal(G);
        for (int s : {2, 3, 4}) {
            MonomialIdeal ord = power(I, s);
            MonomialIdeal sym = symbolic_power(I, s);
            MonomialIdeal prev = (s == 2) ? I : symbolic_power(I, s - 1);
            for (const Monomial& f : ord.gens()) CHECK(sym.contains(f));
            for (const Monomial& f : sym.gens()) CHECK(prev.contains(f));
        }
    }
}

TEST_CASE("fourth closure equals I^(4) + I^3 on the small census") {
    for (const SimpleGraph& G : enumerate_graphs_up_to(5, true)) {
        if (G.edge_count() == 0) continue;
        MonomialIdeal I = edge_ideal(G);
        CHECK(fourth_closure(G) == add(symbolic_power(I, 4), power(I, 3)));
    }
}
