#include "symreg/complex.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "symreg/errors.hpp"
#include "symreg/gfp.hpp"

namespace symreg {

namespace {

std::uint32_t mask_of(const std::vector<int>& face, int n) {
    std::uint32_t m = 0;
    for (int v : face) {
        if (v < 1 || v > n) throw Error("face vertex out of range");
        m |= (1u << (v - 1));
    }
    return m;
}

std::vector<int> vertices_of(std::uint32_t mask) {
    std::vector<int> f;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) f.push_back(i + 1);
    return f;
}

std::vector<std::uint32_t> maximal_masks(std::vector<std::uint32_t> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<std::uint32_t> out;
    for (size_t i = 0; i < masks.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < masks.size() && !dominated; ++j)
            if (i != j && (masks[i] & ~masks[j]) == 0) dominated = true;
        if (!dominated) out.push_back(masks[i]);
    }
    return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(int n) {
    SimplicialComplex D;
    D.n_ = n;
    return D;
}

SimplicialComplex SimplicialComplex::empty_only(int n) {
    SimplicialComplex D;
    D.n_ = n;
    D.facets_.push_back({});
    return D;
}

SimplicialComplex SimplicialComplex::full_simplex(int n) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    SimplicialComplex D;
    D.n_ = n;
    D.facets_.push_back(std::move(all));
    return D;
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<std::vector<int>> faces) {
    std::vector<std::uint32_t> masks;
    masks.reserve(faces.size());
    for (const auto& f : faces) masks.push_back(mask_of(f, n));
    SimplicialComplex D;
    D.n_ = n;
    for (std::uint32_t m : maximal_masks(std::move(masks))) D.facets_.push_back(vertices_of(m));
    std::sort(D.facets_.begin(), D.facets_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    return D;
}

SimplicialComplex::Kind SimplicialComplex::kind() const {
    if (facets_.empty()) return Kind::void_complex;
    if (facets_.size() == 1 && facets_[0].empty()) return Kind::empty_only;
    return Kind::proper;
}

int SimplicialComplex::dimension() const {
    if (is_void()) throw Error("the void complex has no dimension");
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool SimplicialComplex::contains_face(const std::vector<int>& face) const {
    if (is_void()) return false;
    std::uint32_t m = mask_of(face, n_);
    for (const auto& f : facets_)
        if ((m & ~mask_of(f, n_)) == 0) return true;
    return false;
}

std::vector<std::uint32_t> SimplicialComplex::face_masks() const {
    if (is_void()) return {};
    std::vector<std::uint32_t> facet_masks;
    facet_masks.reserve(facets_.size());
    for (const auto& f : facets_) facet_masks.push_back(mask_of(f, n_));
    std::vector<std::uint32_t> faces;
    // enumerate submasks of every facet
    for (std::uint32_t fm : facet_masks) {
        std::uint32_t sub = fm;
        while (true) {
            faces.push_back(sub);
            if (sub == 0) break;
            sub = (sub - 1) & fm;
        }
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    return faces;
}

std::vector<std::vector<int>> SimplicialComplex::all_faces() const {
    std::vector<std::uint32_t> masks = face_masks();
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return vertices_of(a) < vertices_of(b);
    });
    std::vector<std::vector<int>> out;
    out.reserve(masks.size());
    for (std::uint32_t m : masks) out.push_back(vertices_of(m));
    return out;
}

std::string SimplicialComplex::to_json_string() const {
    nlohmann::json j;
    j["ambient"] = n_;
    if (is_void()) {
        j["facets"] = nullptr;
    } else {
        j["facets"] = facets_;
    }
    return j.dump();
}

SimplicialComplex SimplicialComplex::from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid complex JSON: ") + e.what(), 1);
    }
    int n = j.at("ambient").get<int>();
    if (j.at("facets").is_null()) return void_complex(n);
    auto faces = j.at("facets").get<std::vector<std::vector<int>>>();
    return from_facets(n, std::move(faces));
}

SimplicialComplex complex_of_ideal(const MonomialIdeal& I) {
    if (!I.is_squarefree()) throw Error("Stanley-Reisner complex requires a squarefree ideal");
    int n = I.ambient();
    if (n > 20) throw Error("explicit face enumeration is limited to n <= 20");
    if (I.is_unit()) return SimplicialComplex::void_complex(n);
    if (I.is_zero()) return SimplicialComplex::full_simplex(n);
    std::vector<std::uint32_t> gen_masks;
    gen_masks.reserve(I.gens().size());
    for (const auto& g : I.gens()) gen_masks.push_back(g.support_mask());
    std::vector<std::vector<int>> faces;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        bool face = true;
        for (std::uint32_t gm : gen_masks) {
            if ((gm & ~m) == 0) {
                face = false;
                break;
            }
        }
        if (face) faces.push_back(vertices_of(m));
    }
    return SimplicialComplex::from_facets(n, std::move(faces));
}

MonomialIdeal ideal_of_complex(const SimplicialComplex& D) {
    int n = D.ambient();
    if (n > 20) throw Error("explicit face enumeration is limited to n <= 20");
    if (D.is_void()) return MonomialIdeal::unit(n);
    std::vector<std::uint32_t> face_set = D.face_masks();
    auto is_face = [&](std::uint32_t m) {
        return std::binary_search(face_set.begin(), face_set.end(), m);
    };
    std::vector<Monomial> gens;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        if (is_face(m)) continue;
        // minimal non-face: every proper maximal subset is a face
        bool minimal = true;
        for (int i = 0; i < n && minimal; ++i)
            if ((m >> i) & 1)
                if (!is_face(m & ~(1u << i))) minimal = false;
        if (!minimal) continue;
        std::vector<int> e(n, 0);
        for (int i = 0; i < n; ++i)
            if ((m >> i) & 1) e[i] = 1;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

SimplicialComplex link(const SimplicialComplex& D, const std::vector<int>& face) {
    if (!D.contains_face(face)) throw Error("link requires F to be a face of the complex");
    std::uint32_t fm = mask_of(face, D.ambient());
    if (fm == 0) return D;
    std::vector<std::vector<int>> link_faces;
    for (const auto& facet : D.facets()) {
        std::uint32_t m = mask_of(facet, D.ambient());
        if ((fm & ~m) == 0) link_faces.push_back(vertices_of(m & ~fm));
    }
    return SimplicialComplex::from_facets(D.ambient(), std::move(link_faces));
}

bool is_cone_over(const SimplicialComplex& D, int t) {
    if (t < 1 || t > D.ambient()) throw Error("cone apex out of range");
    if (D.is_void()) return false;
    for (const auto& f : D.facets())
        if (!std::binary_search(f.begin(), f.end(), t)) return false;
    return true;
}

SimplicialComplex combine(const SimplicialComplex& D1, const SimplicialComplex& D2, SetOp op) {
    if (D1.ambient() != D2.ambient()) throw DimensionMismatch("ambient mismatch in combine");
    int n = D1.ambient();
    std::vector<std::vector<int>> faces;
    if (op == SetOp::set_union) {
        faces = D1.facets();
        faces.insert(faces.end(), D2.facets().begin(), D2.facets().end());
    } else {
        if (D1.is_void() || D2.is_void()) return SimplicialComplex::void_complex(n);
        for (const auto& f1 : D1.facets()) {
            std::uint32_t m1 = mask_of(f1, n);
            for (const auto& f2 : D2.facets()) faces.push_back(vertices_of(m1 & mask_of(f2, n)));
        }
    }
    return SimplicialComplex::from_facets(n, std::move(faces));
}

std::vector<int> homology_of_face_masks(const std::vector<std::uint32_t>& faces, int p) {
    if (faces.empty()) return {};
    int max_card = 0;
    for (std::uint32_t f : faces) max_card = std::max(max_card, std::popcount(f));
    // bucket faces by cardinality; bucket c holds i = c-1 chains
    std::vector<std::vector<std::uint32_t>> bucket(max_card + 1);
    for (std::uint32_t f : faces) bucket[std::popcount(f)].push_back(f);
    for (auto& b : bucket) std::sort(b.begin(), b.end());
    auto index_in = [](const std::vector<std::uint32_t>& b, std::uint32_t m) {
        return static_cast<int>(std::lower_bound(b.begin(), b.end(), m) - b.begin());
    };
    // rank of the boundary map from cardinality c to c-1
    std::vector<int> rank(max_card + 2, 0);
    for (int c = 1; c <= max_card; ++c) {
        if (bucket[c].empty() || bucket[c - 1].empty()) continue;
        GfpMatrix m(static_cast<int>(bucket[c - 1].size()), static_cast<int>(bucket[c].size()));
        for (int col = 0; col < static_cast<int>(bucket[c].size()); ++col) {
            std::uint32_t f = bucket[c][col];
            int sign = 1;
            for (std::uint32_t bits = f; bits;) {
                std::uint32_t low = bits & (bits - 1);
                std::uint32_t vbit = bits ^ low;  // lowest set bit
                std::uint32_t sub = f & ~vbit;
                m.at(index_in(bucket[c - 1], sub), col) = sign;
                sign = -sign;
                bits = low;
            }
        }
        rank[c] = gfp_rank(std::move(m), p);
    }
    std::vector<int> dims(max_card + 1, 0);
    for (int c = 0; c <= max_card; ++c)
        dims[c] = static_cast<int>(bucket[c].size()) - rank[c] - rank[c + 1];
    // Euler characteristic must reconcile with the raw face counts
    long long chi_faces = 0, chi_hom = 0;
    for (int c = 0; c <= max_card; ++c) {
        long long s = (c % 2 == 0) ? -1 : 1;  // (-1)^(c-1)
        chi_faces += s * static_cast<long long>(bucket[c].size());
        chi_hom += s * dims[c];
    }
    assert(chi_faces == chi_hom);
    (void)chi_faces;
    (void)chi_hom;
    return dims;
}

HomologyProfile reduced_homology(const SimplicialComplex& D, int p) {
    if (!is_prime(p)) throw Error("homology coefficients require a prime field");
    HomologyProfile prof;
    prof.field_char = p;
    if (D.is_void()) return prof;
    std::vector<int> dims = homology_of_face_masks(D.face_masks(), p);
    for (int c = 0; c < static_cast<int>(dims.size()); ++c) prof.dims[c - 1] = dims[c];
    return prof;
}

}  // namespace symreg
