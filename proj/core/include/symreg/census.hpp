#pragma once

#include <string>
#include <vector>

#include "symreg/graph.hpp"

namespace symreg {

/// Relabels G into its canonical form: the labeling minimizing the adjacency
/// bitstring among all orderings compatible with the stable vertex coloring
/// (iterated degree refinement).  Isomorphic graphs map to equal results.
SimpleGraph canonical_form(const SimpleGraph& G);

/// graph6 encoding of the canonical form; usable as a graph identity key.
std::string canonical_graph6(const SimpleGraph& G);

/// All graphs on exactly n vertices up to isomorphism (connected only when
/// requested), canonically labeled and sorted by their graph6 key.
std::vector<SimpleGraph> enumerate_graphs(int n, bool connected_only);

/// Union of enumerate_graphs for 1..max_n, in (n, graph6) order.
std::vector<SimpleGraph> enumerate_graphs_up_to(int max_n, bool connected_only);

}  // namespace symreg
