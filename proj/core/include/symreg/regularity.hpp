#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symreg/complex.hpp"
#include "symreg/ideal.hpp"

namespace symreg {

/// Witness that reg(S/I) = |a| + i: a face F of the degree complex of I at a,
/// disjoint from supp(a), whose link has nonvanishing reduced homology in
/// degree i-1 over GF(field_char).
struct RegularityCertificate {
    Exponent a;
    int i = 0;
    std::vector<int> face;  // sorted, 1-based
    int value = 0;          // |a| + i
    int field_char = 0;

    std::string to_json_string() const;
};

struct RegOptions {
    int prime = 32003;
    bool collect_certificates = true;
    int threads = 1;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct RegResult {
    int reg_quotient = 0;  // reg(S/I); reg(I) is this plus one
    std::vector<RegularityCertificate> certificates;
    int field_char = 0;
};

/// Degree complex of I at a (a may have negative entries): the faces are
/// F \ G_a over all G_a ⊆ F ⊆ [n] such that every minimal generator x^b of I
/// admits an index i ∉ F with a_i < b_i.
SimplicialComplex degree_complex(const MonomialIdeal& I, const Exponent& a);

/// Lazy sweep over the exponent box: 0 <= a_j < rho_j for variables present
/// in I, pinned a_j = 0 for absent variables.  Degree complexes outside this
/// box are cones over a support vertex and contribute nothing.
class GammaRange {
public:
    explicit GammaRange(std::vector<int> rho);

    class iterator {
    public:
        using value_type = Exponent;
        iterator() = default;
        iterator(const std::vector<int>* limits, bool at_end);
        const Exponent& operator*() const { return current_; }
        iterator& operator++();
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
        }

    private:
        const std::vector<int>* limits_ = nullptr;
        Exponent current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(&limits_, false); }
    iterator end() const { return iterator(&limits_, true); }
    std::size_t size() const;

private:
    std::vector<int> limits_;  // per-variable count: max(rho_j, 1)
};

/// Throws on the zero and unit ideals.
GammaRange gamma_exponents(const MonomialIdeal& I);

/// reg(S/I) over GF(p) through degree complexes and links, together with all
/// value-maximizing certificates (a, i, F) with a in the gamma box, ordered
/// by (|a|, a, i, F).
RegResult reg_takayama(const MonomialIdeal& I, const RegOptions& opts = {});

/// Graded Betti numbers of S/I over GF(p).
struct BettiTable {
    std::map<std::pair<int, int>, int> entries;  // (i, j) -> dim Tor_i(S/I, K)_j
    int field_char = 0;
    int max_degree = 0;

    /// max{j - i} over nonzero entries.
    int regularity() const;
    std::string to_json_string() const;
};

/// Betti numbers via the Koszul complex on the n variables, computed graded
/// piece by graded piece for every total degree j <= max_degree.  Throws
/// TruncationError when the strand at j = max_degree is nonzero while degrees
/// above it remain unexamined.
BettiTable betti_oracle(const MonomialIdeal& I, int p, int max_degree);

/// reg(S/I) via betti_oracle with a degree bound large enough that no
/// truncation can occur (the total degree of the lcm of all generators caps
/// every Betti degree).
int betti_regularity(const MonomialIdeal& I, int p);

/// Right-hand side of the degree-complex upper bound:
/// max{|a| + reg(K[Delta_a(I)]) : a in the gamma box}.
int upper_bound_scan(const MonomialIdeal& I, int p);

/// Re-derives everything a certificate claims; `reg_quotient` is the value
/// reg(S/I) the certificate must match.
bool verify_certificate(const MonomialIdeal& I, const RegularityCertificate& cert,
                        int reg_quotient);

/// For every variable x_t in sqrt(I : x^a) with t outside supp(a), checks
/// reg(I) = reg(I + (x_t)); true when all equalities hold (vacuously true
/// when no variable qualifies).  Throws on an invalid certificate.
bool red0_check(const MonomialIdeal& I, const RegularityCertificate& cert, int p);

}  // namespace symreg
