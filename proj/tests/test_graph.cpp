#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "symreg/census.hpp"
#include "symreg/errors.hpp"
#include "symreg/graph.hpp"
#include "test_helpers.hpp"

using namespace symreg;
using testutil::complete;
using testutil::cycle;
using testutil::ideal;
using testutil::mono;
using testutil::path;

TEST_CASE("edge ideal") {
    CHECK(edge_ideal(cycle(3)) == ideal(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
    CHECK(edge_ideal(SimpleGraph(3)).is_zero());
    CHECK(edge_ideal(path(3)) == ideal(3, {{1, 1, 0}, {0, 1, 1}}));
    SimpleGraph G = cycle(4);
    CHECK(static_cast<int>(edge_ideal(G).gens().size()) == G.edge_count());
}

TEST_CASE("neighborhood") {
    CHECK(neighborhood(cycle(5), {1}, false) == std::vector<int>{2, 5});
    CHECK(neighborhood(cycle(5), {}, false).empty());
    CHECK(neighborhood(cycle(3), {1, 2}, true) == std::vector<int>{1, 2, 3});
}

TEST_CASE("cliques") {
    CHECK(cliques(cycle(5), 3).empty());
    CHECK(cliques(complete(4), 4) == std::vector<std::vector<int>>{{1, 2, 3, 4}});
    // brute force over vertex subsets as the oracle
    auto oracle = [](const SimpleGraph& G, int k) {
        std::vector<std::vector<int>> out;
        for (std::uint32_t mask = 0; mask < (1u << G.n()); ++mask) {
            if (std::popcount(mask) != k) continue;
            std::vector<int> verts;
            for (int v = 1; v <= G.n(); ++v)
                if ((mask >> (v - 1)) & 1) verts.push_back(v);
            bool complete_sub = true;
            for (size_t i = 0; i < verts.size() && complete_sub; ++i)
                for (size_t j = i + 1; j < verts.size(); ++j)
                    if (!G.has_edge(verts[i], verts[j])) {
                        complete_sub = false;
                        break;
                    }
            if (complete_sub) out.push_back(verts);
        }
        return out;
    };
    auto sorted = [](std::vector<std::vector<int>> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(cliques(complete(4), 3)) == sorted(oracle(complete(4), 3)));
    CHECK(cliques(complete(4), 3).size() == 4);
    testutil::Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        SimpleGraph G = rng.graph(6, 50);
        for (int k = 2; k <= 4; ++k) CHECK(sorted(cliques(G, k)) == sorted(oracle(G, k)));
    }
}

TEST_CASE("five cycles") {
    CHECK(five_cycles(cycle(5)) == std::vector<std::array<int, 5>>{{1, 2, 3, 4, 5}});
    CHECK(five_cycles(cycle(4)).empty());
    CHECK(five_cycles(complete(5)).size() == 12);  // 5!/10 dihedral classes
}

TEST_CASE("aux ideals") {
    AuxIdeals a3 = aux_ideals(cycle(3));
    CHECK(a3.j1 == ideal(3, {{1, 1, 1}}));
    CHECK(a3.j2.is_zero());
    CHECK(a3.j3.is_zero());
    AuxIdeals a5 = aux_ideals(cycle(5));
    CHECK(a5.j1.is_zero());
    CHECK(a5.j2 == ideal(5, {{1, 1, 1, 1, 1}}));
    CHECK(a5.j3.is_zero());
    CHECK(aux_ideals(complete(5)).j3 == ideal(5, {{1, 1, 1, 1, 1}}));
}

TEST_CASE("minimal vertex covers") {
    SimpleGraph edge(2);
    edge.add_edge(1, 2);
    CHECK(minimal_vertex_covers(edge) == std::vector<std::vector<int>>{{1}, {2}});
    CHECK(minimal_vertex_covers(cycle(3)) ==
          std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
    auto c5 = minimal_vertex_covers(cycle(5));
    CHECK(c5.size() == 5);
    for (const auto& cover : c5) CHECK(cover.size() == 3);
    CHECK_THROWS_AS(minimal_vertex_covers(SimpleGraph(3)), Error);
}

TEST_CASE("covers meet every edge minimally") {
    testutil::Rng rng(19);
    for (int trial = 0; trial < 15; ++trial) {
        SimpleGraph G = rng.graph(6, 40);
        if (G.edge_count() == 0) continue;
        for (const auto& cover : minimal_vertex_covers(G)) {
            for (auto [u, v] : G.edges())
                CHECK((std::binary_search(cover.begin(), cover.end(), u) ||
                       std::binary_search(cover.begin(), cover.end(), v)));
            for (int drop : cover) {
                std::vector<int> smaller;
                for (int v : cover)
                    if (v != drop) smaller.push_back(v);
                bool still_cover = true;
                for (auto [u, v] : G.edges())
                    if (!std::binary_search(smaller.begin(), smaller.end(), u) &&
                        !std::binary_search(smaller.begin(), smaller.end(), v))
                        still_cover = false;
                CHECK_FALSE(still_cover);
            }
        }
    }
}

TEST_CASE("is_bipartite") {
    CHECK(is_bipartite(cycle(4)));
    CHECK_FALSE(is_bipartite(cycle(5)));
    CHECK_FALSE(is_bipartite(complete(4)));
}

TEST_CASE("bipartite iff no odd cycle") {
    // cross-check with explicit odd-cycle search on the census up to n = 6
    auto has_odd_cycle = [](const SimpleGraph& G) {
        std::vector<int> verts;
        for (int v = 1; v <= G.n(); ++v) verts.push_back(v);
        // try all closed walks through permutations of subsets of odd size
        for (int len = 3; len <= G.n(); len += 2) {
            std::vector<int> cyc(len);
            auto rec = [&](auto&& self, int depth, std::uint32_t used) -> bool {
                if (depth == len) return G.has_edge(cyc[len - 1], cyc[0]);
                for (int v = 1; v <= G.n(); ++v) {
                    if ((used >> (v - 1)) & 1) continue;
                    if (depth > 0 && !G.has_edge(cyc[depth - 1], v)) continue;
                    cyc[depth] = v;
                    if (self(self, depth + 1, used | (1u << (v - 1)))) return true;
                }
                return false;
            };
            if (rec(rec, 0, 0)) return true;
        }
        return false;
    };
    for (const SimpleGraph& G : enumerate_graphs_up_to(6, false))
        CHECK(is_bipartite(G) == !has_odd_cycle(G));
}

TEST_CASE("matching stats") {
    // brute force over edge subsets as the oracle
    auto oracle = [](const SimpleGraph& G) {
        auto edges = G.edges();
        int m = static_cast<int>(edges.size());
        MatchingStats st;
        for (std::uint32_t sel = 0; sel < (1u << m); ++sel) {
            std::uint32_t covered = 0;
            bool matching = true;
            std::vector<int> chosen;
            for (int i = 0; i < m && matching; ++i) {
                if (!((sel >> i) & 1)) continue;
                auto [u, v] = edges[i];
                std::uint32_t em = (1u << (u - 1)) | (1u << (v - 1));
                if (covered & em) matching = false;
                covered |= em;
                chosen.push_back(i);
            }
            if (!matching) continue;
            st.matching_number = std::max(st.matching_number, static_cast<int>(chosen.size()));
            bool induced = true;
            for (size_t a = 0; a < chosen.size() && induced; ++a)
                for (size_t b = a + 1; b < chosen.size() && induced; ++b) {
                    auto [u1, v1] = edges[chosen[a]];
                    auto [u2, v2] = edges[chosen[b]];
                    for (int x : {u1, v1})
                        for (int y : {u2, v2})
                            if (G.has_edge(x, y)) induced = false;
                }
            if (induced)
                st.induced_matching_number =
                    std::max(st.induced_matching_number, static_cast<int>(chosen.size()));
        }
        return st;
    };
    MatchingStats c5 = matching_stats(cycle(5));
    CHECK(c5.matching_number == 2);
    CHECK(c5.induced_matching_number == 1);
    MatchingStats oc5 = oracle(cycle(5));
    CHECK(c5.matching_number == oc5.matching_number);
    CHECK(c5.induced_matching_number == oc5.induced_matching_number);

    SimpleGraph edge(2);
    edge.add_edge(1, 2);
    CHECK(matching_stats(edge).matching_number == 1);
    CHECK(matching_stats(edge).induced_matching_number == 1);

    MatchingStats p4 = matching_stats(path(4));
    CHECK(p4.matching_number == 2);
    CHECK(p4.induced_matching_number == 1);

    testutil::Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        SimpleGraph G = rng.graph(6, 40);
        MatchingStats got = matching_stats(G), want = oracle(G);
        CHECK(got.matching_number == want.matching_number);
        CHECK(got.induced_matching_number == want.induced_matching_number);
    }
}

TEST_CASE("induced subgraph") {
    SimpleGraph H = induced_subgraph(cycle(5), {1, 2, 3});
    CHECK(H.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    CHECK(induced_subgraph(cycle(5), {1, 2, 3, 4, 5}) == cycle(5));
    CHECK(induced_subgraph(complete(4), {1, 2}).edges() ==
          std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("restriction of the edge ideal is the ideal of the induced subgraph") {
    testutil::Rng rng(43);
    for (int trial = 0; trial < 15; ++trial) {
        SimpleGraph G = rng.graph(6, 50);
        std::vector<int> U;
        for (int v = 1; v <= 6; ++v)
            if (rng.uniform(0, 1)) U.push_back(v);
        CHECK(restrict_to(edge_ideal(G), U) == edge_ideal(induced_subgraph(G, U)));
    }
}

TEST_CASE("triangle monomials squared lie in the edge ideal square") {
    for (const SimpleGraph& G : enumerate_graphs_up_to(5, true)) {
        if (G.edge_count() == 0) continue;
        MonomialIdeal I2 = power(edge_ideal(G), 2);
        AuxIdeals aux = aux_ideals(G);
        for (const Monomial& t : aux.j1.gens()) CHECK(I2.contains(t.times(t)));
    }
}

TEST_CASE("graph parsing") {
    SimpleGraph c3 = parse_graph("3 3\n1 2\n2 3\n1 3\n");
    CHECK(c3 == cycle(3));
    CHECK_THROWS_AS(parse_graph("2 1\n1 1\n"), ParseError);       // loop
    CHECK_THROWS_AS(parse_graph("2 2\n1 2\n1 2\n"), ParseError);  // duplicate edge
    CHECK_THROWS_AS(parse_graph("2 1\n1 3\n"), ParseError);       // out of range
    CHECK_THROWS_AS(parse_graph("Dxx?\n"), ParseError);           // malformed graph6
    try {
        parse_graph("3 2\n1 2\n2 2\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("graph6 round trips") {
    // D?{ is the 5-vertex star at the last vertex
    SimpleGraph star = from_graph6("D?{");
    CHECK(star.n() == 5);
    CHECK(star.edges() ==
          std::vector<std::pair<int, int>>{{1, 5}, {2, 5}, {3, 5}, {4, 5}});
    CHECK(to_graph6(star) == "D?{");
    testutil::Rng rng(47);
    for (int trial = 0; trial < 50; ++trial) {
        SimpleGraph G = rng.graph(rng.uniform(1, 8), 50);
        CHECK(from_graph6(to_graph6(G)) == G);
        CHECK(canonical_graph6(from_graph6(to_graph6(G))) == canonical_graph6(G));
    }
    CHECK(parse_graph("D?{") == star);
}

TEST_CASE("canonical forms are isomorphism invariants") {
    testutil::Rng rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        int n = rng.uniform(2, 7);
        SimpleGraph G = rng.graph(n, 50);
        // random relabeling
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i + 1;
        std::shuffle(perm.begin(), perm.end(), rng.gen);
        SimpleGraph H(n);
        for (auto [u, v] : G.edges()) H.add_edge(perm[u - 1], perm[v - 1]);
        CHECK(canonical_graph6(G) == canonical_graph6(H));
    }
    // and different graphs get different keys (spot check on the census)
    auto graphs = enumerate_graphs(5, false);
    std::set<std::string> keys;
    for (const auto& G : graphs) keys.insert(canonical_graph6(G));
    CHECK(keys.size() == graphs.size());
}

TEST_CASE("census counts match the known values") {
    const int expected_connected[] = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n)
        CHECK(static_cast<int>(enumerate_graphs(n, true).size()) == expected_connected[n - 1]);
    const int expected_all[] = {1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n)
        CHECK(static_cast<int>(enumerate_graphs(n, false).size()) == expected_all[n - 1]);
}
