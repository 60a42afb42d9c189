#pragma once

#include <string>
#include <vector>

#include "symreg/exponent.hpp"

namespace symreg {

/// A monomial ideal in a fixed ambient polynomial ring K[x_1..x_n], stored by
/// its unique minimal monomial generating set.  The zero ideal has an empty
/// generator list; the unit ideal is generated by the unit monomial.  Values
/// are immutable after construction and all operations are pure.
class MonomialIdeal {
public:
    MonomialIdeal() : n_(0) {}

    static MonomialIdeal zero(int n);
    static MonomialIdeal unit(int n);

    /// Builds the ideal generated by `gens`, minimalizing under divisibility.
    /// Throws DimensionMismatch when generators disagree on length.
    static MonomialIdeal from_generators(int n, std::vector<Monomial> gens);

    int ambient() const { return n_; }
    const std::vector<Monomial>& gens() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    bool is_proper() const { return !is_zero() && !is_unit(); }
    bool is_squarefree() const;

    /// Membership: some generator divides f.
    bool contains(const Monomial& f) const;

    /// rho_j = max exponent of x_j over the generators (0 for zero/unit).
    std::vector<int> rho() const;

    int max_generator_degree() const;

    /// JSON array of exponent tuples, e.g. [[2,1,0],[0,1,1]].
    std::string to_json_string() const;
    static MonomialIdeal from_json_string(const std::string& text);

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int n_;
    std::vector<Monomial> gens_;  // minimal, sorted by (degree, exponents)
};

/// Divisibility-minimal subset of `gens`; membership is unchanged.
MonomialIdeal minimalize(int n, std::vector<Monomial> gens);

MonomialIdeal add(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J);

/// I^s for s >= 1; s < 1 is rejected.
MonomialIdeal power(const MonomialIdeal& I, int s);

/// I ∩ J via pairwise lcm of generators, minimalized.
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// Intersection of several ideals.  Processed pairwise in ascending order of
/// generator count with minimalization after every step, which keeps the
/// intermediate generator sets small.
MonomialIdeal intersect_all(std::vector<MonomialIdeal> ideals);

/// I : x^a, generated by the clamped quotients g / gcd(g, x^a).  Requires a >= 0.
MonomialIdeal colon(const MonomialIdeal& I, const Exponent& a);

/// sqrt(I : x^a), generated by the squarefree parts of the colon quotients of
/// the generators.  Output generators are squarefree.  Requires a >= 0.
MonomialIdeal radical_colon(const MonomialIdeal& I, const Exponent& a);

/// Restriction I_V: generators supported inside V (1-based), same ambient.
MonomialIdeal restrict_to(const MonomialIdeal& I, const std::vector<int>& vertices);

}  // namespace symreg
