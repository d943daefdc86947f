#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torgr/index.hpp"

namespace torgr {

using Rational = mpq_class;

/// Variable namespaces. The declaration order is the default variable ranking.
enum class VarTag : std::uint8_t {
    p,            // Plücker coordinate p_u
    z,            // orbit coordinate z_u
    x,            // pair coordinate x_(u,v)
    y,            // fiber-block coordinate y_u
    block_marker, // degree marker for one pair block, keyed by a sorted pair
    fiber_marker, // degree marker for one fiber block, keyed by a block string
    scale,        // degree marker for the Plücker block
    block,        // abstract block variable x_a, keyed by a block string
    torus,        // torus parameter t_alpha
    aux,          // fresh target variable used by graph ideals
};

struct VarId {
    VarTag tag = VarTag::p;
    Tuple a;
    Tuple b;

    static VarId P(const MultiIndex& u) { return {VarTag::p, u.entries(), {}}; }
    static VarId Z(const MultiIndex& u) { return {VarTag::z, u.entries(), {}}; }
    static VarId X(const PairIndex& uv) { return {VarTag::x, uv.u.entries(), uv.v.entries()}; }
    static VarId Y(const MultiIndex& u) { return {VarTag::y, u.entries(), {}}; }
    static VarId T(const SortedPair& w) { return {VarTag::block_marker, w.odd, w.even}; }
    static VarId M(const BlockString& a) { return {VarTag::fiber_marker, a.letters, {}}; }
    static VarId S() { return {VarTag::scale, {}, {}}; }
    static VarId XA(const BlockString& a) { return {VarTag::block, a.letters, {}}; }
    static VarId TT(int alpha) { return {VarTag::torus, {alpha}, {}}; }
    static VarId Aux(int k) { return {VarTag::aux, {k}, {}}; }

    /// Export name, e.g. p_1_2, x_1_2__3_4, w_12, t_3.
    std::string name() const;

    auto operator<=>(const VarId&) const = default;
};

VarId parse_var(std::string_view name);

class Monomial {
public:
    using Factor = std::pair<VarId, int>;

    Monomial() = default;
    explicit Monomial(std::vector<Factor> factors);
    static Monomial of(const VarId& v, int e = 1);

    const std::vector<Factor>& factors() const noexcept { return f_; }
    bool is_one() const noexcept { return f_.empty(); }
    int degree() const;
    int exponent(const VarId& v) const;
    std::vector<VarId> variables() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const; // exact quotient, throws if o does not divide
    Monomial lcm(const Monomial& o) const;
    Monomial gcd(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<Factor> f_; // sorted by variable, positive exponents
};

/// Sparse polynomial with exact rational coefficients in canonical form.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(long c); // NOLINT: constants convert implicitly
    explicit Polynomial(const Rational& c);
    static Polynomial var(const VarId& v);
    static Polynomial term(const Rational& c, const Monomial& m);

    const TermMap& terms() const noexcept { return t_; }
    bool is_zero() const noexcept { return t_.empty(); }
    std::size_t size() const noexcept { return t_.size(); }
    int degree() const;
    std::set<VarId> variables() const;
    bool is_monomial() const { return t_.size() == 1; }
    /// Exactly two terms with coefficients +1 and -1.
    bool is_unit_binomial() const;

    void add_term(const Rational& c, const Monomial& m);
    Rational coefficient(const Monomial& m) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Monomial& m, const Polynomial& p);
    Polynomial operator-() const;
    Polynomial pow(int e) const;

    bool operator==(const Polynomial& o) const { return t_ == o.t_; }

    /// Replaces variables by polynomials; variables mapped to nullopt stay.
    Polynomial substitute(const std::function<std::optional<Polynomial>(const VarId&)>& image) const;
    Polynomial substitute(const std::map<VarId, Polynomial>& image) const;
    Rational evaluate(const std::function<Rational(const VarId&)>& value) const;

private:
    TermMap t_;
};

Polynomial var(const VarId& v);
Polynomial product(const std::vector<Polynomial>& factors);

/// Human-readable rendering with export variable names (terms in lex order).
std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m);

} // namespace torgr
