#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "symreg/ideal.hpp"

namespace symreg {

/// A simplicial complex on a subset of [n], stored by its facet list.  Two
/// degenerate values are distinguished: the void complex (no faces at all)
/// and the complex {∅} whose only face is the empty set.
class SimplicialComplex {
public:
    enum class Kind { void_complex, empty_only, proper };

    SimplicialComplex() : n_(0) {}

    static SimplicialComplex void_complex(int n);
    static SimplicialComplex empty_only(int n);
    static SimplicialComplex full_simplex(int n);

    /// Keeps the inclusion-maximal members of `faces` as facets.
    static SimplicialComplex from_facets(int n, std::vector<std::vector<int>> faces);

    int ambient() const { return n_; }
    Kind kind() const;
    bool is_void() const { return facets_.empty(); }

    /// Facets as sorted 1-based vertex lists; {∅} has the single facet {}.
    const std::vector<std::vector<int>>& facets() const { return facets_; }

    /// dim of the complex; -1 for {∅}. Must not be called on the void complex.
    int dimension() const;

    bool contains_face(const std::vector<int>& face) const;

    /// All faces including ∅ (absent for the void complex), sorted by
    /// (cardinality, vertex list).
    std::vector<std::vector<int>> all_faces() const;

    /// Faces as support bitmasks (bit i-1 for vertex i), sorted ascending.
    std::vector<std::uint32_t> face_masks() const;

    /// JSON of the form {"ambient":n,"facets":[[1,2],[3]]}; void is
    /// {"ambient":n,"facets":null}.
    std::string to_json_string() const;
    static SimplicialComplex from_json_string(const std::string& text);

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int n_;
    std::vector<std::vector<int>> facets_;  // sorted lists, pairwise incomparable
};

/// Reduced homology dimensions over GF(p); dims[i] for -1 <= i <= dim.
struct HomologyProfile {
    std::map<int, int> dims;
    int field_char = 0;

    int dim(int i) const {
        auto it = dims.find(i);
        return it == dims.end() ? 0 : it->second;
    }
    bool all_zero() const {
        for (auto& [i, d] : dims)
            if (d != 0) return false;
        return true;
    }
};

/// Stanley-Reisner complex of a squarefree ideal: faces F with x_F not in I.
/// The unit ideal gives the void complex, the zero ideal the full simplex.
SimplicialComplex complex_of_ideal(const MonomialIdeal& I);

/// Stanley-Reisner ideal of a complex: minimal non-faces as generators.
MonomialIdeal ideal_of_complex(const SimplicialComplex& D);

/// Link of a face; link(D, {}) = D.  Throws when F is not a face.
SimplicialComplex link(const SimplicialComplex& D, const std::vector<int>& face);

/// True when t belongs to every facet (so the complex is a cone with apex t).
bool is_cone_over(const SimplicialComplex& D, int t);

enum class SetOp { set_union, set_intersection };

/// Union or intersection of the two face sets, as a facet list.
SimplicialComplex combine(const SimplicialComplex& D1, const SimplicialComplex& D2, SetOp op);

/// Reduced simplicial homology over GF(p) from boundary-matrix ranks.
HomologyProfile reduced_homology(const SimplicialComplex& D, int p);

/// Homology core shared with the regularity engine: `faces` are the bitmasks
/// of all faces of a complex (the empty face 0 included unless the complex is
/// void); returns dims indexed by i+1, i.e. out[0] = dim H̃_{-1}.
std::vector<int> homology_of_face_masks(const std::vector<std::uint32_t>& faces, int p);

}  // namespace symreg
