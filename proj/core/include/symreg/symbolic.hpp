#pragma once

#include "symreg/graph.hpp"
#include "symreg/ideal.hpp"

namespace symreg {

/// Minimal primes of a squarefree proper nonzero monomial ideal, each given
/// as the sorted variable set of the prime (a minimal transversal of the
/// generator supports).
std::vector<std::vector<int>> minimal_primes(const MonomialIdeal& I);

/// s-th symbolic power of a squarefree proper nonzero monomial ideal,
/// computed as the intersection of the s-th powers of its minimal primes.
MonomialIdeal symbolic_power(const MonomialIdeal& I, int s);

/// Membership test for the s-th symbolic power through coefficient-free
/// derivatives: every order-(s-1) star derivative of f with support inside
/// supp(f) must lie in I (a vanished derivative counts as inside).
bool differential_member(const MonomialIdeal& I, const Monomial& f, int s);

/// Closed forms for the small symbolic powers of an edge ideal:
/// s=2 gives I^2 + J1, s=3 gives I^3 + I*J1 + J2.  Other s are rejected.
MonomialIdeal expansion(const SimpleGraph& G, int s);

/// I^3 + J1*J1 + J3, which agrees with I^(4) + I^3.
MonomialIdeal fourth_closure(const SimpleGraph& G);

}  // namespace symreg
