#include <doctest.h>

#include "oracles.hpp"
#include "torgr/groebner.hpp"
#include "torgr/relations.hpp"

using namespace torgr;

TEST_CASE("the (2,4) Plücker relation") {
    auto F = plucker_relations(2, 4);
    REQUIRE(F.size() == 1);
    CHECK(to_string(F[0].polynomial()) == "p_1_2*p_3_4 - p_1_3*p_2_4 + p_1_4*p_2_3");
    CHECK(F[0].key.str() == "((13),(24))");
    CHECK(to_string(linearize(F[0])) == "x_1_2__3_4 - x_1_3__2_4 + x_1_4__2_3");
}

TEST_CASE("three-term relations of Gr(2,n) are indexed by 4-subsets") {
    for (int n = 4; n <= 7; ++n) CHECK(plucker_relations(2, n).size() == static_cast<std::size_t>(oracle::binom(n, 4)));
}

TEST_CASE("Plücker ideals have the classical Hilbert functions") {
    // Gr(2,4): (k+1)(k+2)^2(k+3)/12. Gr(3,6) degree 2: semistandard tableaux of shape 2x3, 175.
    auto hilb = [](int d, int n, std::vector<int> degs) {
        std::vector<Polynomial> gens;
        std::set<VarId> vars;
        for (const auto& F : plucker_relations(d, n)) gens.push_back(F.polynomial());
        std::vector<VarId> amb;
        for (const auto& u : multi_indices(d, n)) {
            vars.insert(VarId::P(u));
            amb.push_back(VarId::P(u));
        }
        auto o = default_order(vars);
        auto gb = reduced_groebner(gens, o);
        return hilbert_function(leading_monomials(gb.generators, o), amb, degs);
    };
    std::vector<long long> want;
    for (int k = 0; k <= 3; ++k) want.push_back((k + 1) * (k + 2) * (k + 2) * (k + 3) / 12);
    CHECK(hilb(2, 4, {0, 1, 2, 3}) == want);
    CHECK(hilb(3, 6, {2}) == std::vector<long long>{175});
}

TEST_CASE("sorted Gröbner basis of (2,4)") {
    auto g = sorted_gb(Decomposition::unit(2, 4));
    REQUIRE(g.size() == 2);
    std::set<std::string> got;
    for (const auto& b : g) got.insert(to_string(b.polynomial()));
    CHECK(got == std::set<std::string>{"w_12*w_34 - w_13*w_24", "-w_13*w_24 + w_14*w_23"});
}

TEST_CASE("straightening picks the sorted representative") {
    Decomposition dec = Decomposition::unit(2, 4);
    Monomial m({{VarId::XA(BlockString{{1, 4}}), 1}, {VarId::XA(BlockString{{2, 3}}), 1}});
    Monomial s({{VarId::XA(BlockString{{1, 3}}), 1}, {VarId::XA(BlockString{{2, 4}}), 1}});
    CHECK(straighten(m, dec) == s);
}

TEST_CASE("sorted monomials count lattice points of the hypersimplex") {
    Decomposition dec = Decomposition::unit(2, 5);
    for (int k = 0; k <= 3; ++k)
        CHECK(static_cast<long long>(sorted_monomials(dec, k).size()) == oracle::hypersimplex_points(2, 5, k));
}

TEST_CASE("wp binomials are homogeneous and killed by phi") {
    Decomposition dec = Decomposition::unit(2, 5);
    for (const auto& w : nontrivial_pairs(dec))
        for (const auto& b : wp_binomials(w, dec)) {
            Polynomial f = b.polynomial();
            CHECK(phi_image(f).is_zero());
            CHECK(f.degree() == 3);
        }
}

TEST_CASE("cubic binomials") {
    CHECK(cubic_binomials(5).size() == 1);
    CHECK(cubic_binomials(6).size() == static_cast<std::size_t>(oracle::binom(6, 5)));
    CHECK(cubic_binomials(7).size() == static_cast<std::size_t>(oracle::binom(7, 5)));
    auto b = cubic_binomials(5)[0];
    CHECK(to_string(b.polynomial()) == "x_1_2__3_4*x_1_4__3_5*x_1_5__2_3 - x_1_2__3_5*x_1_4__2_3*x_1_5__3_4");
}

TEST_CASE("orbit Gröbner basis of the all-ones point") {
    Decomposition dec = Decomposition::unit(2, 4);
    auto g = orbit_gb(ones_point(2, 4), dec, true);
    // the two sorting binomials become z12 z34 - z13 z24 and z14 z23 - z13 z24
    CHECK(g.size() == 2);
    for (const auto& f : g) CHECK(f.is_unit_binomial());
}

TEST_CASE("orbit Gröbner basis is a reduced basis for random points") {
    Rng rng(3);
    for (const auto& dec : {Decomposition::unit(2, 4), Decomposition({3, 1}, 2)}) {
        auto p = random_grassmannian_point(dec.d(), dec.total(), rng);
        auto g = orbit_gb(p, dec, true);
        CHECK(is_groebner(g, orbit_order(dec)));
        CHECK(is_reduced(g, orbit_order(dec)));
    }
}

TEST_CASE("random Grassmannian points satisfy the Plücker relations") {
    Rng rng(5);
    auto p = random_grassmannian_point(2, 5, rng);
    CHECK(p.all_nonzero());
    for (const auto& F : plucker_relations(2, 5))
        CHECK(F.polynomial().evaluate([&](const VarId& v) { return p.value(v); }) == 0);
}

TEST_CASE("J ideals and their product") {
    Decomposition dec = Decomposition::unit(2, 4);
    auto J = j_ideals(dec);
    CHECK(J.ja.size() == block_strings(dec).size());
    CHECK(J.jw.size() == sorted_pairs(dec).size());
    auto prod = j_product(dec);
    CHECK_FALSE(prod.empty());
    for (const auto& m : prod) CHECK(m.degree() >= 1);
}

TEST_CASE("example catalog instantiates") {
    for (const auto& e : example_catalog()) {
        Polynomial f = catalog_example(e.name);
        CHECK_FALSE(f.is_zero());
    }
}

TEST_CASE("F = pL identity on (2,5)") {
    Decomposition dec = Decomposition::unit(2, 5);
    for (const auto& F : plucker_relations(2, 5)) {
        auto r = check_f_eq_pl(F, PairIndex(F.terms[0].u, F.terms[0].v), dec);
        CHECK(r.reduces_to_zero);
        CHECK(r.exact_combination);
    }
}
