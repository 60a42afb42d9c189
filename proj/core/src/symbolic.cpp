#include "symreg/symbolic.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "symreg/errors.hpp"

namespace symreg {

std::vector<std::vector<int>> minimal_primes(const MonomialIdeal& I) {
    if (!I.is_proper()) throw Error("minimal primes require a proper nonzero ideal");
    if (!I.is_squarefree()) throw Error("minimal primes via transversals require a squarefree ideal");
    int n = I.ambient();
    std::vector<std::uint32_t> supports;
    supports.reserve(I.gens().size());
    for (const auto& g : I.gens()) supports.push_back(g.support_mask());
    auto hits_all = [&](std::uint32_t s) {
        for (std::uint32_t sup : supports)
            if ((sup & s) == 0) return false;
        return true;
    };
    std::vector<std::vector<int>> out;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (!hits_all(s)) continue;
        bool minimal = true;
        for (int i = 0; i < n && minimal; ++i)
            if ((s >> i) & 1)
                if (hits_all(s & ~(1u << i))) minimal = false;
        if (!minimal) continue;
        std::vector<int> prime;
        for (int i = 0; i < n; ++i)
            if ((s >> i) & 1) prime.push_back(i + 1);
        out.push_back(std::move(prime));
    }
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

namespace {

/// (x_i : i in vars)^s: all monomials of degree s in the given variables.
MonomialIdeal variable_power(int n, const std::vector<int>& vars, int s) {
    std::vector<Monomial> gens;
    std::vector<int> e(n, 0);
    std::function<void(size_t, int)> rec = [&](size_t idx, int remaining) {
        if (idx + 1 == vars.size()) {
            e[vars[idx] - 1] = remaining;
            gens.emplace_back(e);
            e[vars[idx] - 1] = 0;
            return;
        }
        for (int d = 0; d <= remaining; ++d) {
            e[vars[idx] - 1] = d;
            rec(idx + 1, remaining - d);
        }
        e[vars[idx] - 1] = 0;
    };
    rec(0, s);
    return MonomialIdeal::from_generators(n, std::move(gens));
}

}  // namespace

MonomialIdeal symbolic_power(const MonomialIdeal& I, int s) {
    if (s < 1) throw Error("symbolic power requires s >= 1");
    if (!I.is_proper()) throw Error("symbolic power requires a proper nonzero ideal");
    if (!I.is_squarefree()) throw Error("symbolic power requires a squarefree ideal");
    std::vector<MonomialIdeal> prime_powers;
    for (const auto& prime : minimal_primes(I))
        prime_powers.push_back(variable_power(I.ambient(), prime, s));
    return intersect_all(std::move(prime_powers));
}

bool differential_member(const MonomialIdeal& I, const Monomial& f, int s) {
    if (s < 1) throw Error("differential membership requires s >= 1");
    if (f.size() != I.ambient()) throw DimensionMismatch("monomial length mismatch in differential test");
    if (!I.is_squarefree()) throw Error("differential membership requires a squarefree ideal");
    // restriction to supp(f) leaves the answer unchanged and shrinks the
    // divisibility tests
    const MonomialIdeal restricted = restrict_to(I, f.support());
    std::vector<int> sup = f.support();
    if (sup.empty()) return restricted.contains(f);
    // Derivatives in variables absent from f vanish and impose nothing, so a
    // ranges over supp(f) only.  Orders beyond the exponent clamp at zero:
    // the quotient x^max(r-a,0) is what the coefficient-free derivative
    // leaves behind, and it must stay inside the ideal.
    std::vector<int> a(I.ambient(), 0);
    std::function<bool(size_t, int)> rec = [&](size_t idx, int remaining) {
        if (idx + 1 == sup.size()) {
            a[sup[idx] - 1] = remaining;
            bool ok = restricted.contains(f.quotient_clamped(Exponent(a)));
            a[sup[idx] - 1] = 0;
            return ok;
        }
        for (int d = 0; d <= remaining; ++d) {
            a[sup[idx] - 1] = d;
            bool ok = rec(idx + 1, remaining - d);
            if (!ok) {
                a[sup[idx] - 1] = 0;
                return false;
            }
        }
        a[sup[idx] - 1] = 0;
        return true;
    };
    return rec(0, s - 1);
}

MonomialIdeal expansion(const SimpleGraph& G, int s) {
    if (s != 2 && s != 3) throw Error("expansion is available for s = 2 or s = 3 only");
    MonomialIdeal I = edge_ideal(G);
    AuxIdeals aux = aux_ideals(G);
    if (s == 2) return add(power(I, 2), aux.j1);
    return add(add(power(I, 3), multiply(I, aux.j1)), aux.j2);
}

MonomialIdeal fourth_closure(const SimpleGraph& G) {
    MonomialIdeal I = edge_ideal(G);
    AuxIdeals aux = aux_ideals(G);
    return add(add(power(I, 3), multiply(aux.j1, aux.j1)), aux.j3);
}

}  // namespace symreg
