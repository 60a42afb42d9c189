#include "symreg/exponent.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

#include "symreg/errors.hpp"

namespace symreg {

int Exponent::degree() const {
    int d = 0;
    for (int e : v) d += e;
    return d;
}

std::vector<int> Exponent::support() const {
    std::vector<int> s;
    for (int i = 0; i < size(); ++i)
        if (v[i] != 0) s.push_back(i + 1);
    return s;
}

std::vector<int> Exponent::negative_support() const {
    std::vector<int> s;
    for (int i = 0; i < size(); ++i)
        if (v[i] < 0) s.push_back(i + 1);
    return s;
}

bool Exponent::is_nonnegative() const {
    return std::all_of(v.begin(), v.end(), [](int e) { return e >= 0; });
}

std::uint32_t Exponent::support_mask() const {
    assert(size() <= 32);
    std::uint32_t m = 0;
    for (int i = 0; i < size(); ++i)
        if (v[i] != 0) m |= (1u << i);
    return m;
}

Exponent Exponent::plus(const Exponent& rhs) const {
    if (size() != rhs.size()) throw DimensionMismatch("exponent length mismatch in addition");
    Exponent r = *this;
    for (int i = 0; i < size(); ++i) r.v[i] += rhs.v[i];
    return r;
}

Exponent Exponent::min_with(const std::vector<int>& cap) const {
    if (static_cast<int>(cap.size()) != size())
        throw DimensionMismatch("exponent length mismatch in min_with");
    Exponent r = *this;
    for (int i = 0; i < size(); ++i) r.v[i] = std::min(r.v[i], cap[i]);
    return r;
}

Exponent Exponent::nonnegative_part() const {
    Exponent r = *this;
    for (int& e : r.v) e = std::max(e, 0);
    return r;
}

Monomial::Monomial(Exponent e) : a(std::move(e)) {
    if (!a.is_nonnegative()) throw Error("monomial exponents must be nonnegative");
}

bool Monomial::is_squarefree() const {
    return std::all_of(a.v.begin(), a.v.end(), [](int e) { return e <= 1; });
}

Monomial Monomial::squarefree_part() const {
    Monomial r = *this;
    for (int& e : r.a.v) e = (e > 0) ? 1 : 0;
    return r;
}

bool Monomial::divides(const Monomial& f) const {
    if (size() != f.size()) throw DimensionMismatch("monomial length mismatch in divides");
    for (int i = 0; i < size(); ++i)
        if (a.v[i] > f.a.v[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& g) const {
    if (size() != g.size()) throw DimensionMismatch("monomial length mismatch in lcm");
    Monomial r = *this;
    for (int i = 0; i < size(); ++i) r.a.v[i] = std::max(r.a.v[i], g.a.v[i]);
    return r;
}

Monomial Monomial::gcd(const Monomial& g) const {
    if (size() != g.size()) throw DimensionMismatch("monomial length mismatch in gcd");
    Monomial r = *this;
    for (int i = 0; i < size(); ++i) r.a.v[i] = std::min(r.a.v[i], g.a.v[i]);
    return r;
}

Monomial Monomial::times(const Monomial& g) const {
    if (size() != g.size()) throw DimensionMismatch("monomial length mismatch in product");
    Monomial r = *this;
    for (int i = 0; i < size(); ++i) {
        r.a.v[i] += g.a.v[i];
        assert(r.a.v[i] >= 0 && "exponent overflow");
    }
    return r;
}

Monomial Monomial::quotient_clamped(const Exponent& b) const {
    if (size() != b.size()) throw DimensionMismatch("length mismatch in colon quotient");
    Monomial r = *this;
    for (int i = 0; i < size(); ++i) r.a.v[i] = std::max(r.a.v[i] - std::max(b.v[i], 0), 0);
    return r;
}

Monomial Monomial::pow(int t) const {
    assert(t >= 0);
    Monomial r = *this;
    for (int i = 0; i < size(); ++i) {
        long long e = static_cast<long long>(a.v[i]) * t;
        assert(e <= 1 << 20);
        r.a.v[i] = static_cast<int>(e);
    }
    return r;
}

std::string Monomial::to_string() const {
    std::string s;
    for (int i = 0; i < size(); ++i) {
        if (a.v[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(i + 1);
        if (a.v[i] > 1) s += '^' + std::to_string(a.v[i]);
    }
    return s.empty() ? "1" : s;
}

std::string Monomial::to_tuple_string() const {
    std::string s = "[";
    for (int i = 0; i < size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a.v[i]);
    }
    return s + "]";
}

std::optional<Monomial> star_derivative(const Monomial& f, const Exponent& a) {
    if (f.size() != a.size()) throw DimensionMismatch("length mismatch in star derivative");
    if (!a.is_nonnegative()) throw Error("star derivative order must be nonnegative");
    for (int i = 0; i < f.size(); ++i)
        if (a.v[i] > f.a.v[i]) return std::nullopt;
    Monomial r = f;
    for (int i = 0; i < f.size(); ++i) r.a.v[i] -= a.v[i];
    return r;
}

namespace {

void skip_ws(const std::string& s, size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

int parse_int(const std::string& s, size_t& pos) {
    skip_ws(s, pos);
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw ParseError("expected integer in monomial text", 1);
    return std::stoi(s.substr(start, pos - start));
}

}  // namespace

Monomial parse_monomial_text(const std::string& text, int n) {
    std::vector<int> e(n, 0);
    size_t pos = 0;
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == '1') {
        ++pos;
        skip_ws(text, pos);
        if (pos != text.size()) throw ParseError("trailing characters after unit monomial", 1);
        return Monomial(e);
    }
    bool expect_factor = true;
    while (pos < text.size()) {
        skip_ws(text, pos);
        if (pos >= text.size()) break;
        if (!expect_factor) {
            if (text[pos] != '*') throw ParseError("expected '*' between factors", 1);
            ++pos;
            skip_ws(text, pos);
        }
        if (pos >= text.size() || text[pos] != 'x')
            throw ParseError("expected variable like x3", 1);
        ++pos;
        int idx = parse_int(text, pos);
        if (idx < 1 || idx > n) throw ParseError("variable index out of range", 1);
        int exp = 1;
        skip_ws(text, pos);
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            exp = parse_int(text, pos);
            if (exp < 0) throw ParseError("negative exponent in monomial", 1);
        }
        e[idx - 1] += exp;
        expect_factor = false;
        skip_ws(text, pos);
    }
    if (expect_factor) throw ParseError("empty monomial text", 1);
    return Monomial(e);
}

Monomial parse_exponent_tuple(const std::string& text) {
    size_t pos = 0;
    skip_ws(text, pos);
    if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '[' in tuple", 1);
    ++pos;
    std::vector<int> e;
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            e.push_back(parse_int(text, pos));
            skip_ws(text, pos);
            if (pos >= text.size()) throw ParseError("unterminated tuple", 1);
            if (text[pos] == ',') {
                ++pos;
                continue;
            }
            if (text[pos] == ']') {
                ++pos;
                break;
            }
            throw ParseError("expected ',' or ']' in tuple", 1);
        }
    }
    skip_ws(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters after tuple", 1);
    return Monomial(e);
}

Monomial parse_monomial(const std::string& text, int n) {
    size_t pos = 0;
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == '[') {
        Monomial m = parse_exponent_tuple(text);
        if (m.size() != n) throw DimensionMismatch("tuple length does not match ambient n");
        return m;
    }
    return parse_monomial_text(text, n);
}

}  // namespace symreg
