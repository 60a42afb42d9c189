#include "symreg/census.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <unordered_set>

#include "symreg/errors.hpp"

namespace symreg {

namespace {

/// Upper-triangle adjacency bits of G under the relabeling perm (perm[i] is
/// the old 0-based vertex placed at new position i), packed row-major.
std::uint64_t adjacency_code(const SimpleGraph& G, const std::vector<int>& perm) {
    std::uint64_t code = 0;
    int n = G.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            code <<= 1;
            if (G.has_edge(perm[i] + 1, perm[j] + 1)) code |= 1;
        }
    return code;
}

/// Stable vertex coloring by iterated refinement on neighbor color multisets.
/// Color ids are assigned in sorted signature order, so they are invariant
/// under relabeling.
std::vector<int> stable_coloring(const SimpleGraph& G) {
    int n = G.n();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = G.degree(v + 1);
    {
        // normalize initial ids
        std::vector<int> sorted = color;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), color[v]) -
                                        sorted.begin());
    }
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nbr;
            std::uint32_t bits = G.adjacency_mask(v + 1);
            while (bits) {
                int u = std::countr_zero(bits);
                bits &= bits - 1;
                nbr.push_back(color[u]);
            }
            std::sort(nbr.begin(), nbr.end());
            sig[v].insert(sig[v].end(), nbr.begin(), nbr.end());
        }
        std::vector<std::vector<int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                       sorted.begin());
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

}  // namespace

SimpleGraph canonical_form(const SimpleGraph& G) {
    int n = G.n();
    if (n > 10) throw Error("canonical forms are limited to n <= 10");
    if (n <= 1) return G;
    std::vector<int> color = stable_coloring(G);
    // group vertices by color class (ascending color id)
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[color[v]].push_back(v);

    std::vector<int> perm;
    perm.reserve(n);
    std::uint64_t best_code = ~std::uint64_t{0};
    std::vector<int> best_perm;

    // min over all orderings listing color classes in id order, permuting
    // freely inside each class
    std::vector<std::vector<int>> class_list;
    for (auto& [c, verts] : classes) class_list.push_back(verts);

    std::vector<int> current;
    auto recurse = [&](auto&& self, std::size_t cls) -> void {
        if (cls == class_list.size()) {
            std::uint64_t code = adjacency_code(G, current);
            if (code < best_code) {
                best_code = code;
                best_perm = current;
            }
            return;
        }
        std::vector<int>& verts = class_list[cls];
        std::sort(verts.begin(), verts.end());
        do {
            current.insert(current.end(), verts.begin(), verts.end());
            self(self, cls + 1);
            current.resize(current.size() - verts.size());
        } while (std::next_permutation(verts.begin(), verts.end()));
    };
    recurse(recurse, 0);

    SimpleGraph H(n);
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[best_perm[i]] = i;
    for (auto [u, v] : G.edges()) H.add_edge(position[u - 1] + 1, position[v - 1] + 1);
    return H;
}

std::string canonical_graph6(const SimpleGraph& G) { return to_graph6(canonical_form(G)); }

namespace {

std::vector<SimpleGraph> all_graphs_canonical(int n) {
    // grow by one vertex at a time, rejecting isomorphs via canonical forms
    if (n == 0) return {SimpleGraph(0)};
    if (n == 1) return {SimpleGraph(1)};
    std::vector<SimpleGraph> smaller = all_graphs_canonical(n - 1);
    std::unordered_set<std::string> seen;
    std::vector<SimpleGraph> out;
    for (const SimpleGraph& H : smaller) {
        for (std::uint32_t nbrs = 0; nbrs < (1u << (n - 1)); ++nbrs) {
            SimpleGraph G(n);
            for (auto [u, v] : H.edges()) G.add_edge(u, v);
            for (int j = 0; j < n - 1; ++j)
                if ((nbrs >> j) & 1) G.add_edge(j + 1, n);
            SimpleGraph canon = canonical_form(G);
            if (seen.insert(to_graph6(canon)).second) out.push_back(std::move(canon));
        }
    }
    return out;
}

}  // namespace

std::vector<SimpleGraph> enumerate_graphs(int n, bool connected_only) {
    if (n < 0 || n > 8) throw Error("graph enumeration is limited to n <= 8");
    std::vector<SimpleGraph> graphs = all_graphs_canonical(n);
    if (connected_only) {
        graphs.erase(std::remove_if(graphs.begin(), graphs.end(),
                                    [](const SimpleGraph& G) { return !is_connected(G); }),
                     graphs.end());
    }
    std::sort(graphs.begin(), graphs.end(), [](const SimpleGraph& a, const SimpleGraph& b) {
        return to_graph6(a) < to_graph6(b);
    });
    return graphs;
}

std::vector<SimpleGraph> enumerate_graphs_up_to(int max_n, bool connected_only) {
    std::vector<SimpleGraph> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<SimpleGraph> g = enumerate_graphs(n, connected_only);
        out.insert(out.end(), g.begin(), g.end());
    }
    return out;
}

}  // namespace symreg
