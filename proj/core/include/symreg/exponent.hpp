#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symreg {

/// Integer exponent tuple of fixed length n.  Entries may be negative in the
/// contexts that allow Z^n vectors (degree complexes); most operations expect
/// nonnegative entries and say so.
struct Exponent {
    std::vector<int> v;

    Exponent() = default;
    explicit Exponent(std::vector<int> entries) : v(std::move(entries)) {}

    static Exponent zeros(int n) { return Exponent(std::vector<int>(n, 0)); }

    int size() const { return static_cast<int>(v.size()); }

    /// Total degree |a|.
    int degree() const;

    /// 1-based indices i with a_i != 0.
    std::vector<int> support() const;

    /// 1-based indices i with a_i < 0 (the set G_a).
    std::vector<int> negative_support() const;

    bool is_nonnegative() const;

    /// Bitmask of the support, bit (i-1) for variable i.  Requires n <= 32.
    std::uint32_t support_mask() const;

    Exponent plus(const Exponent& rhs) const;

    /// Componentwise min with `cap` (used for colon stabilization).
    Exponent min_with(const std::vector<int>& cap) const;

    /// Zeroes out the negative entries (the vector a^+).
    Exponent nonnegative_part() const;

    friend bool operator==(const Exponent&, const Exponent&) = default;
    auto operator<=>(const Exponent& rhs) const { return v <=> rhs.v; }
};

/// A monomial x^a with a >= 0 componentwise.
struct Monomial {
    Exponent a;

    Monomial() = default;
    explicit Monomial(Exponent e);
    explicit Monomial(std::vector<int> entries) : Monomial(Exponent(std::move(entries))) {}

    static Monomial one(int n) { return Monomial(Exponent::zeros(n)); }

    int size() const { return a.size(); }
    int degree() const { return a.degree(); }
    bool is_one() const { return degree() == 0; }
    std::vector<int> support() const { return a.support(); }
    std::uint32_t support_mask() const { return a.support_mask(); }

    bool is_squarefree() const;
    Monomial squarefree_part() const;

    bool divides(const Monomial& f) const;
    Monomial lcm(const Monomial& g) const;
    Monomial gcd(const Monomial& g) const;
    Monomial times(const Monomial& g) const;

    /// x^max(a - b, 0): the colon quotient, clamped at zero exponents.
    Monomial quotient_clamped(const Exponent& b) const;

    /// Power f^t, t >= 0.
    Monomial pow(int t) const;

    /// Text form `x1^2*x2`; the unit monomial prints as `1`.
    std::string to_string() const;

    /// Tuple form `[2,1,0]`.
    std::string to_tuple_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    auto operator<=>(const Monomial& rhs) const { return a <=> rhs.a; }
};

/// Coefficient-free partial derivative of f with respect to x^a: returns
/// f / x^a when x^a divides f, and nullopt (the zero marker) otherwise.
/// Requires a >= 0 and matching lengths.
std::optional<Monomial> star_derivative(const Monomial& f, const Exponent& a);

/// Parses `x1^2*x2` style text into a monomial in n variables.
Monomial parse_monomial_text(const std::string& text, int n);

/// Parses `[2,1,0]` style text; the length of the tuple fixes n.
Monomial parse_exponent_tuple(const std::string& text);

/// Accepts either notation; `n` is required for the x-style form and checked
/// against the tuple form when both are available.
Monomial parse_monomial(const std::string& text, int n);

}  // namespace symreg
