#include <doctest.h>

#include <algorithm>

#include "symreg/census.hpp"
#include "symreg/errors.hpp"
#include "symreg/regularity.hpp"
#include "symreg/symbolic.hpp"
#include "test_helpers.hpp"

using namespace symreg;
using testutil::cycle;
using testutil::ideal;
using testutil::mono;

namespace {

/// Star K_{1,4} with center 1: the running example I = x1*(x2,x3,x4,x5).
SimpleGraph star5() {
    SimpleGraph G(5);
    for (int v = 2; v <= 5; ++v) G.add_edge(1, v);
    return G;
}

}  // namespace

TEST_CASE("degree complex basics") {
    // squarefree ideal at a = 0 recovers the Stanley-Reisner complex
    testutil::Rng rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        MonomialIdeal I = rng.squarefree_ideal(5, 4);
        CHECK(degree_complex(I, Exponent::zeros(5)) == complex_of_ideal(I));
    }
    // x^a inside the ideal gives the void complex
    MonomialIdeal P3 = ideal(3, {{1, 1, 0}, {0, 1, 1}});
    CHECK(degree_complex(P3, Exponent({1, 1, 0})).is_void());
    CHECK_FALSE(degree_complex(P3, Exponent({1, 0, 1})).is_void());
    // star example: a = exponent of x2x3x4x5 makes the degree complex of I^2
    // the full simplex on {2,3,4,5}
    MonomialIdeal I2 = power(edge_ideal(star5()), 2);
    CHECK(degree_complex(I2, Exponent({0, 1, 1, 1, 1})) ==
          SimplicialComplex::from_facets(5, {{2, 3, 4, 5}}));
}

TEST_CASE("degree complex agrees with the radical colon route") {
    testutil::Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        MonomialIdeal I = rng.monomial_ideal(4, 5, 4);
        Exponent a = rng.monomial(4, 3).a;
        CHECK(degree_complex(I, a) == complex_of_ideal(radical_colon(I, a)));
        CHECK(ideal_of_complex(degree_complex(I, a)) == radical_colon(I, a));
    }
}

TEST_CASE("degree complex link normalization for entries >= -1") {
    testutil::Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        MonomialIdeal I = rng.monomial_ideal(4, 4, 3);
        Exponent a = rng.monomial(4, 2).a;
        std::vector<int> down;
        for (int j = 0; j < 4; ++j)
            if (rng.uniform(0, 2) == 0) down.push_back(j);
        if (down.empty()) continue;
        Exponent b = a;
        std::vector<int> negated;
        for (int j : down) {
            b.v[j] = -1;
            negated.push_back(j + 1);
        }
        SimplicialComplex upper = degree_complex(I, b.nonnegative_part());
        if (!upper.contains_face(negated)) {
            CHECK(degree_complex(I, b).is_void());
            continue;
        }
        CHECK(degree_complex(I, b) == link(upper, negated));
    }
}

TEST_CASE("gamma box") {
    CHECK(gamma_exponents(ideal(2, {{1, 1}})).size() == 1);
    MonomialIdeal c3sq = power(edge_ideal(cycle(3)), 2);
    GammaRange gamma = gamma_exponents(c3sq);
    CHECK(gamma.size() == 8);
    int count = 0;
    for (const Exponent& a : gamma) {
        for (int v : a.v) CHECK(v <= 1);
        ++count;
    }
    CHECK(count == 8);
    // absent variables stay pinned at zero
    MonomialIdeal J = ideal(4, {{1, 1, 0, 0}, {0, 2, 1, 0}});
    for (const Exponent& a : gamma_exponents(J)) CHECK(a.v[3] == 0);
    CHECK_THROWS_AS(gamma_exponents(MonomialIdeal::zero(2)), Error);
    CHECK_THROWS_AS(gamma_exponents(MonomialIdeal::unit(2)), Error);
}

TEST_CASE("reg_takayama on the paper star example") {
    MonomialIdeal I = edge_ideal(star5());
    for (int s = 1; s <= 3; ++s) {
        MonomialIdeal Is = (s == 1) ? I : power(I, s);
        CHECK(reg_takayama(Is).reg_quotient == 2 * s - 1);
        CHECK(betti_regularity(Is, 32003) == 2 * s - 1);
    }
}

TEST_CASE("reg_takayama small examples and certificates") {
    RegResult r = reg_takayama(ideal(2, {{1, 1}}));
    CHECK(r.reg_quotient == 1);
    REQUIRE(!r.certificates.empty());
    for (const auto& cert : r.certificates)
        CHECK(verify_certificate(ideal(2, {{1, 1}}), cert, r.reg_quotient));

    MonomialIdeal c5 = edge_ideal(cycle(5));
    CHECK(reg_takayama(c5).reg_quotient == 2);
    CHECK(betti_regularity(c5, 32003) == 2);

    CHECK_THROWS_AS(reg_takayama(MonomialIdeal::zero(2)), Error);
    CHECK_THROWS_AS(reg_takayama(MonomialIdeal::unit(2)), Error);
}

TEST_CASE("certificates re-verify across the small census") {
    for (const SimpleGraph& G : enumerate_graphs_up_to(4, true)) {
        if (G.edge_count() == 0) continue;
        for (int s : {1, 2}) {
            MonomialIdeal I = (s == 1) ? edge_ideal(G) : power(edge_ideal(G), s);
            RegResult r = reg_takayama(I);
            CHECK(!r.certificates.empty());
            for (const auto& cert : r.certificates) CHECK(verify_certificate(I, cert, r.reg_quotient));
            // certificates come out sorted
            CHECK(std::is_sorted(r.certificates.begin(), r.certificates.end(),
                                 [](const RegularityCertificate& x, const RegularityCertificate& y) {
                                     int dx = x.a.degree(), dy = y.a.degree();
                                     if (dx != dy) return dx < dy;
                                     if (x.a.v != y.a.v) return x.a.v < y.a.v;
                                     if (x.i != y.i) return x.i < y.i;
                                     return x.face < y.face;
                                 }));
        }
    }
}

TEST_CASE("betti oracle hand examples") {
    BettiTable t1 = betti_oracle(ideal(2, {{1, 1}}), 32003, 10);
    CHECK(t1.entries.at({0, 0}) == 1);
    CHECK(t1.entries.at({1, 2}) == 1);
    CHECK(t1.regularity() == 1);

    // 0 <- S/I <- S <- S(-2)^2 <- S(-3) <- 0 for (x1x2, x2x3)
    BettiTable t2 = betti_oracle(ideal(3, {{1, 1, 0}, {0, 1, 1}}), 32003, 10);
    CHECK(t2.entries.at({1, 2}) == 2);
    CHECK(t2.entries.at({2, 3}) == 1);
    CHECK(t2.regularity() == 1);

    MonomialIdeal c3s = symbolic_power(edge_ideal(cycle(3)), 2);
    CHECK(betti_regularity(c3s, 32003) == reg_takayama(c3s).reg_quotient);
}

TEST_CASE("betti oracle truncation error") {
    // (x1x2, x2x3) has its top Betti degree at 3; capping at 2 hits a nonzero
    // boundary strand
    CHECK_THROWS_AS(betti_oracle(ideal(3, {{1, 1, 0}, {0, 1, 1}}), 32003, 2), TruncationError);
    CHECK_NOTHROW(betti_oracle(ideal(3, {{1, 1, 0}, {0, 1, 1}}), 32003, 3));
    CHECK_THROWS_AS(betti_oracle(MonomialIdeal::zero(2), 32003, 5), Error);
}

TEST_CASE("upper bound scan") {
    CHECK(upper_bound_scan(ideal(2, {{1, 1}}), 32003) == 1);
    // strictness on the star example at s = 2
    MonomialIdeal I2 = power(edge_ideal(star5()), 2);
    int bound = upper_bound_scan(I2, 32003);
    int reg = reg_takayama(I2).reg_quotient;
    CHECK(reg == 3);
    CHECK(bound >= 4);
    CHECK(bound > reg);
    // bound dominates reg
    testutil::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        MonomialIdeal I = rng.monomial_ideal(4, 4, 3);
        if (!I.is_proper()) continue;
        CHECK(upper_bound_scan(I, 32003) >= reg_takayama(I).reg_quotient);
    }
    for (const SimpleGraph& G : enumerate_graphs_up_to(4, true)) {
        if (G.edge_count() == 0) continue;
        MonomialIdeal I2g = power(edge_ideal(G), 2);
        CHECK(upper_bound_scan(I2g, 32003) >= reg_takayama(I2g).reg_quotient);
    }
}

TEST_CASE("engine agreement on the small census and random ideals") {
    for (const SimpleGraph& G : enumerate_graphs_up_to(4, true)) {
        if (G.edge_count() == 0) continue;
        MonomialIdeal I = edge_ideal(G);
        for (int s : {1, 2, 3}) {
            MonomialIdeal Is = (s == 1) ? I : power(I, s);
            CHECK(reg_takayama(Is).reg_quotient == betti_regularity(Is, 32003));
            MonomialIdeal sym = (s == 1) ? I : symbolic_power(I, s);
            CHECK(reg_takayama(sym).reg_quotient == betti_regularity(sym, 32003));
        }
    }
    testutil::Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        MonomialIdeal I = rng.monomial_ideal(4, 5, 4);
        CHECK(reg_takayama(I).reg_quotient == betti_regularity(I, 32003));
    }
}

TEST_CASE("key identities for degree complexes of powers") {
    // radical colons of I^(2) and I^2 agree away from I^(2) (sweep in the
    // harness covers the full box; spot check here)
    MonomialIdeal c5 = edge_ideal(cycle(5));
    MonomialIdeal I2 = power(c5, 2), S2 = symbolic_power(c5, 2);
    testutil::Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        Exponent a = rng.monomial(5, 2).a;
        if (S2.contains(Monomial(a.v))) continue;
        CHECK(radical_colon(S2, a) == radical_colon(I2, a));
    }
}

TEST_CASE("red0_check") {
    MonomialIdeal I = power(edge_ideal(cycle(3)), 2);
    RegResult r = reg_takayama(I);
    REQUIRE(!r.certificates.empty());
    for (const auto& cert : r.certificates) CHECK(red0_check(I, cert, 32003));
    // invalid certificate is rejected
    RegularityCertificate bad = r.certificates.front();
    bad.value += 1;
    bad.i += 1;
    CHECK_THROWS_AS(red0_check(I, bad, 32003), Error);
    // vacuous case: principal ideal, no qualifying variable
    MonomialIdeal P = ideal(2, {{1, 1}});
    RegResult rp = reg_takayama(P);
    for (const auto& cert : rp.certificates) {
        MonomialIdeal R = radical_colon(P, cert.a);
        bool has_variable = false;
        for (const Monomial& g : R.gens())
            if (g.degree() == 1) has_variable = true;
        if (!has_variable) CHECK(red0_check(P, cert, 32003));
    }
}

TEST_CASE("restriction never raises symbolic regularity") {
    // reg I_V^(s) <= reg I^(s) over every vertex subset of a census sample
    RegOptions opts;
    opts.collect_certificates = false;
    for (const SimpleGraph& G : enumerate_graphs_up_to(5, true)) {
        if (G.edge_count() == 0 || G.n() < 4) continue;
        MonomialIdeal I = edge_ideal(G);
        for (int s : {2}) {
            int full = reg_takayama(symbolic_power(I, s), opts).reg_quotient + 1;
            for (std::uint32_t mask = 0; mask < (1u << G.n()); ++mask) {
                std::vector<int> V;
                for (int v = 1; v <= G.n(); ++v)
                    if ((mask >> (v - 1)) & 1) V.push_back(v);
                MonomialIdeal IV = restrict_to(I, V);
                if (IV.is_zero()) continue;
                int restricted = reg_takayama(symbolic_power(IV, s), opts).reg_quotient + 1;
                CHECK(restricted <= full);
            }
        }
    }
}

TEST_CASE("reg options: threads and deadline") {
    MonomialIdeal I = power(edge_ideal(cycle(5)), 2);
    RegOptions serial, parallel;
    parallel.threads = 2;
    RegResult a = reg_takayama(I, serial), b = reg_takayama(I, parallel);
    CHECK(a.reg_quotient == b.reg_quotient);
    REQUIRE(a.certificates.size() == b.certificates.size());
    for (size_t k = 0; k < a.certificates.size(); ++k) {
        CHECK(a.certificates[k].a == b.certificates[k].a);
        CHECK(a.certificates[k].i == b.certificates[k].i);
        CHECK(a.certificates[k].face == b.certificates[k].face);
    }
    RegOptions expired;
    expired.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    CHECK_THROWS_AS(reg_takayama(I, expired), TimeoutError);
}
