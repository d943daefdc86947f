#pragma once

// Explicit polynomial families: Plücker relations and their linearizations,
// ℘-binomials, the sorted and orbit Gröbner systems, fiber ideals, J ideals,
// cubic binomials and the named example relations.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "torgr/groebner.hpp"
#include "torgr/random.hpp"

namespace torgr {

struct PluckerTerm {
    int sign = 1;
    MultiIndex u;
    MultiIndex v;
};

/// F = sum sign * p_u p_v, every (u,v) carrying the common sorted key.
struct PluckerRelation {
    std::vector<PluckerTerm> terms;
    SortedPair key;
    Polynomial polynomial() const;
};

/// plus - minus with unit coefficients.
struct Binomial {
    Monomial plus;
    Monomial minus;
    Polynomial polynomial() const;
    static Binomial of(const Polynomial& f); // throws unless f is a unit binomial
    bool operator==(const Binomial&) const = default;
};

struct RationalPoint {
    int d = 0;
    int m = 0; // ambient dimension
    std::map<MultiIndex, Rational> coords;

    const Rational& at(const MultiIndex& u) const;
    bool all_nonzero() const;
    /// Value of a P-variable; everything else raises invalid-parameter.
    Rational value(const VarId& v) const;
};

struct MultiProjPoint {
    std::map<BlockString, std::vector<Rational>> y_blocks; // ordered as fiber_indices(a)
    std::map<SortedPair, std::vector<Rational>> w_blocks;  // ordered as lambda_w(w)
};

std::vector<PluckerRelation> plucker_relations(int d, int n);
Polynomial linearize(const PluckerRelation& F);

Polynomial pp(const PairIndex& uv);   // p_u p_v
Polynomial xvar(const PairIndex& uv); // x_(u,v)

std::vector<Binomial> wp_binomials(const SortedPair& w, const Decomposition& dec);

// Sorted Gröbner basis in the block variables.
std::vector<Binomial> sorted_gb(const Decomposition& dec);
/// Weight order on the block variables making every unsorted monomial lead.
TermOrder sorting_order(const Decomposition& dec);
/// Sorted monomials in the block variables of the given degree.
std::vector<Monomial> sorted_monomials(const Decomposition& dec, int degree);
/// Rewrites unsorted pairs of factors until the monomial is sorted.
Monomial straighten(const Monomial& m, const Decomposition& dec);

// Orbit closure systems.
MultiIndex fiber_representative(const BlockString& a, const Decomposition& dec);
/// Composite order: fibers compared through sorting_order, then degrevlex per fiber
/// with the representative smallest.
TermOrder orbit_order(const Decomposition& dec);
std::vector<Polynomial> orbit_gb(const RationalPoint& p, const Decomposition& dec, bool monic = false);
std::vector<Polynomial> fiber_ideal(const MultiProjPoint& y, const Decomposition& dec);

struct JIdeals {
    std::map<BlockString, std::vector<Polynomial>> ja;
    std::map<SortedPair, std::vector<Polynomial>> jw;
};
JIdeals j_ideals(const Decomposition& dec);
/// Generators of the product ideal, one choice per factor, duplicates removed.
std::vector<Monomial> j_product(const Decomposition& dec);
/// Same with the pair factors restricted to `pairs`.
std::vector<Monomial> j_product(const Decomposition& dec, const std::vector<SortedPair>& pairs);

std::vector<Binomial> cubic_binomials(int n);
/// Cubic form of the binomial at five distinct letters h,i,j,k,l (not necessarily increasing).
Polynomial cubic_form(const std::array<int, 5>& letters);

// Named example relations.
struct ExampleInfo {
    std::string name;
    std::vector<std::string> letters; // symbolic letters, default-numbered 4, 5, ... after 1,2,3
    int d = 2;
    std::string map;       // phi, phi_rho, phi_gr or phi_gr_rho
    bool maps_to_zero = false;
    std::string source;    // relation in the letter language
    std::string h;         // multiplier in φ(f) = h F (empty when maps_to_zero)
    std::string F;         // Plücker relation in φ(f) = h F
    bool battery = true;   // part of the example battery
};
const std::vector<ExampleInfo>& example_catalog();
const ExampleInfo& example_info(const std::string& family);
/// Instantiates `text` (written in the letter language) with letters bound to integers.
Polynomial parse_example(const std::string& text, const std::map<std::string, int>& binding, int d, int n);
std::map<std::string, int> default_binding(const ExampleInfo& info);
int default_ambient(const ExampleInfo& info);
/// Plücker relation given by a polynomial in P variables (coefficients +1/-1).
PluckerRelation relation_of(const Polynomial& F);
Polynomial catalog_example(const std::string& family, const std::map<std::string, int>& binding = {}, int n = 0);

struct RbReport {
    bool rho_linear = false;
    bool phi_square_free = false;
    bool wp_reducible = false;
    bool has_common_factor = false;
};
RbReport check_rb_properties(const Binomial& b, const Decomposition& dec);

/// φ on polynomials in P and X variables (x_(u,v) -> p_u p_v), no Plücker reduction.
Polynomial phi_image(const Polynomial& f);

struct HplDecomposition {
    PluckerRelation F;
    Polynomial h;
    std::vector<Polynomial> parts; // f_s per term s of F, f = sum sign(s) f_s
};
/// Splits f with φ(f) = hF into parts; nullopt when the terms do not fit.
std::optional<HplDecomposition> hpl_decompose(const Polynomial& f, const PluckerRelation& F, const Polynomial& h);
struct HplCheck {
    bool part_sum = false;  // f equals the signed sum of its parts
    bool identity1 = false; // x_t f_s - x_s f_t maps to zero for all s,t
    bool identity2 = false; // x_s f - f_s L_F maps to zero for all s
};
HplCheck check_hpl_identities(const HplDecomposition& dcp, const Polynomial& f);

struct FpLCheck {
    bool reduces_to_zero = false; // reduction modulo the ℘-binomial basis
    bool exact_combination = false; // equals the signed sum of ℘-binomials
};
FpLCheck check_f_eq_pl(const PluckerRelation& F, const PairIndex& ab, const Decomposition& dec);

// Random points.
RationalPoint random_point(int d, int m, Rng& rng, int bound = 9);
/// Plücker coordinates of a random integer d x m matrix, all minors nonzero.
RationalPoint random_grassmannian_point(int d, int m, Rng& rng, int bound = 9);
RationalPoint ones_point(int d, int m);

} // namespace torgr
