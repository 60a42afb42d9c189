#include "symreg/ideal.hpp"

#include <algorithm>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "symreg/errors.hpp"

namespace symreg {

namespace {

bool ideal_order(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.a.v < b.a.v;
}

struct MonHash {
    size_t operator()(const Monomial& m) const {
        size_t h = 1469598103934665603ull;
        for (int e : m.a.v) {
            h ^= static_cast<size_t>(e) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::vector<Monomial> dedupe(std::vector<Monomial> gens) {
    std::unordered_set<Monomial, MonHash> seen;
    std::vector<Monomial> out;
    out.reserve(gens.size());
    for (auto& g : gens)
        if (seen.insert(g).second) out.push_back(std::move(g));
    return out;
}

}  // namespace

MonomialIdeal MonomialIdeal::zero(int n) {
    MonomialIdeal I;
    I.n_ = n;
    return I;
}

MonomialIdeal MonomialIdeal::unit(int n) {
    MonomialIdeal I;
    I.n_ = n;
    I.gens_.push_back(Monomial::one(n));
    return I;
}

MonomialIdeal MonomialIdeal::from_generators(int n, std::vector<Monomial> gens) {
    for (const auto& g : gens)
        if (g.size() != n) throw DimensionMismatch("generator length does not match ambient n");
    gens = dedupe(std::move(gens));
    std::sort(gens.begin(), gens.end(), ideal_order);
    std::vector<Monomial> minimal;
    for (auto& g : gens) {
        bool divisible = false;
        for (const auto& kept : minimal) {
            if (kept.divides(g)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) minimal.push_back(std::move(g));
    }
    MonomialIdeal I;
    I.n_ = n;
    I.gens_ = std::move(minimal);
    return I;
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& f) const {
    if (f.size() != n_) throw DimensionMismatch("monomial length does not match ideal ambient");
    for (const auto& g : gens_)
        if (g.divides(f)) return true;
    return false;
}

std::vector<int> MonomialIdeal::rho() const {
    std::vector<int> r(n_, 0);
    for (const auto& g : gens_)
        for (int i = 0; i < n_; ++i) r[i] = std::max(r[i], g.a.v[i]);
    return r;
}

int MonomialIdeal::max_generator_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

std::string MonomialIdeal::to_json_string() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& g : gens_) arr.push_back(g.a.v);
    return arr.dump();
}

MonomialIdeal MonomialIdeal::from_json_string(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid ideal JSON: ") + e.what(), 1);
    }
    if (!arr.is_array()) throw ParseError("ideal JSON must be an array of exponent tuples", 1);
    std::vector<Monomial> gens;
    int n = -1;
    for (const auto& item : arr) {
        if (!item.is_array()) throw ParseError("exponent tuple must be an array", 1);
        std::vector<int> e = item.get<std::vector<int>>();
        if (n < 0) n = static_cast<int>(e.size());
        if (static_cast<int>(e.size()) != n)
            throw DimensionMismatch("exponent tuples of unequal length in ideal JSON");
        gens.emplace_back(std::move(e));
    }
    if (n < 0) throw ParseError("ideal JSON needs at least one tuple to fix n (zero ideal is ambient-ambiguous)", 1);
    return MonomialIdeal::from_generators(n, std::move(gens));
}

MonomialIdeal minimalize(int n, std::vector<Monomial> gens) {
    return MonomialIdeal::from_generators(n, std::move(gens));
}

namespace {

void require_same_ambient(const MonomialIdeal& I, const MonomialIdeal& J, const char* op) {
    if (I.ambient() != J.ambient())
        throw DimensionMismatch(std::string("ambient mismatch in ") + op);
}

}  // namespace

MonomialIdeal add(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ambient(I, J, "add");
    std::vector<Monomial> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return MonomialIdeal::from_generators(I.ambient(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ambient(I, J, "multiply");
    if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.ambient());
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size() * J.gens().size());
    for (const auto& f : I.gens())
        for (const auto& g : J.gens()) gens.push_back(f.times(g));
    return MonomialIdeal::from_generators(I.ambient(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, int s) {
    if (s < 1) throw Error("power requires s >= 1");
    MonomialIdeal r = I;
    for (int k = 1; k < s; ++k) r = multiply(r, I);
    return r;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ambient(I, J, "intersect");
    if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.ambient());
    if (I.is_unit()) return J;
    if (J.is_unit()) return I;
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size() * J.gens().size());
    for (const auto& f : I.gens())
        for (const auto& g : J.gens()) gens.push_back(f.lcm(g));
    return MonomialIdeal::from_generators(I.ambient(), std::move(gens));
}

MonomialIdeal intersect_all(std::vector<MonomialIdeal> ideals) {
    if (ideals.empty()) throw Error("intersect_all requires at least one ideal");
    std::sort(ideals.begin(), ideals.end(),
              [](const MonomialIdeal& a, const MonomialIdeal& b) {
                  return a.gens().size() < b.gens().size();
              });
    MonomialIdeal r = ideals.front();
    for (size_t k = 1; k < ideals.size(); ++k) r = intersect(r, ideals[k]);
    return r;
}

MonomialIdeal colon(const MonomialIdeal& I, const Exponent& a) {
    if (a.size() != I.ambient()) throw DimensionMismatch("exponent length mismatch in colon");
    if (!a.is_nonnegative()) throw Error("colon exponent must be nonnegative");
    if (!I.is_proper()) return I;  // colon(zero) = zero, colon(unit) = unit
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(g.quotient_clamped(a));
    return MonomialIdeal::from_generators(I.ambient(), std::move(gens));
}

MonomialIdeal radical_colon(const MonomialIdeal& I, const Exponent& a) {
    if (a.size() != I.ambient()) throw DimensionMismatch("exponent length mismatch in radical colon");
    if (!a.is_nonnegative()) throw Error("radical colon exponent must be nonnegative");
    if (!I.is_proper()) return I;
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(g.quotient_clamped(a).squarefree_part());
    return MonomialIdeal::from_generators(I.ambient(), std::move(gens));
}

MonomialIdeal restrict_to(const MonomialIdeal& I, const std::vector<int>& vertices) {
    std::uint32_t mask = 0;
    for (int v : vertices) {
        if (v < 1 || v > I.ambient()) throw Error("restriction vertex out of range");
        mask |= (1u << (v - 1));
    }
    std::vector<Monomial> gens;
    for (const auto& g : I.gens())
        if ((g.support_mask() & ~mask) == 0) gens.push_back(g);
    return MonomialIdeal::from_generators(I.ambient(), std::move(gens));
}

}  // namespace symreg
