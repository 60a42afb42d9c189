#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symreg/errors.hpp"
#include "symreg/ideal.hpp"

namespace symreg {

/// Undirected simple graph on the vertex set {1..n}: no loops, no multi-edges.
class SimpleGraph {
public:
    SimpleGraph() : n_(0) {}
    explicit SimpleGraph(int n) : n_(n), adj_(n, 0) {
        if (n < 0 || n > 31) throw Error("vertex count must be in [0, 31]");
    }
    SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int edge_count() const;

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    /// Edges as sorted pairs (u < v), in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    /// Adjacency bitmask of vertex v (bit i-1 for vertex i).
    std::uint32_t adjacency_mask(int v) const { return adj_[v - 1]; }

    int degree(int v) const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    int n_;
    std::vector<std::uint32_t> adj_;
};

struct AuxIdeals {
    MonomialIdeal j1;  // triangles
    MonomialIdeal j2;  // 4-cliques and 5-cycles
    MonomialIdeal j3;  // 5-cliques
};

struct MatchingStats {
    int matching_number = 0;
    int induced_matching_number = 0;
};

/// Edge ideal I(G) = (x_i x_j : {i,j} an edge); the edgeless graph gives the
/// zero ideal.
MonomialIdeal edge_ideal(const SimpleGraph& G);

/// N(U) or N[U] (1-based, sorted).
std::vector<int> neighborhood(const SimpleGraph& G, const std::vector<int>& U, bool closed);

/// All k-subsets inducing complete subgraphs, 2 <= k <= n.
std::vector<std::vector<int>> cliques(const SimpleGraph& G, int k);

/// All 5-cycles (not necessarily induced), one representative per dihedral
/// class: lexicographically least among the 10 rotations/reflections.
std::vector<std::array<int, 5>> five_cycles(const SimpleGraph& G);

AuxIdeals aux_ideals(const SimpleGraph& G);

/// All inclusion-minimal vertex sets meeting every edge.  Throws on an
/// edgeless graph.
std::vector<std::vector<int>> minimal_vertex_covers(const SimpleGraph& G);

bool is_bipartite(const SimpleGraph& G);

/// Maximum matching size and maximum induced matching size.
MatchingStats matching_stats(const SimpleGraph& G);

/// G[U] with the original vertex indices kept; vertices outside U become
/// isolated.
SimpleGraph induced_subgraph(const SimpleGraph& G, const std::vector<int>& U);

bool is_connected(const SimpleGraph& G);

/// Parses either the text format ("n m" header plus m edge lines, 1-based)
/// or a single graph6 line.  Errors carry the offending line number.
SimpleGraph parse_graph(const std::string& text);

SimpleGraph from_graph6(const std::string& line);
std::string to_graph6(const SimpleGraph& G);

/// Text format emitter: "n m" header plus sorted edge lines.
std::string to_edge_list_text(const SimpleGraph& G);

}  // namespace symreg
