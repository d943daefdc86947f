#include <doctest.h>

#include "oracles.hpp"
#include "torgr/error.hpp"
#include "torgr/kernels.hpp"

using namespace torgr;

TEST_CASE("map kinds parse from either separator") {
    CHECK(parse_kind("phi-gr-rho") == MapKind::phi_gr_rho);
    CHECK(parse_kind("phi_gr_rho") == MapKind::phi_gr_rho);
    CHECK(parse_kind("h-quotient-projection") == MapKind::y_projection);
    CHECK(kind_name(MapKind::zeta_p) == "zeta-p");
    CHECK_THROWS_AS(parse_kind("psi"), InvalidParameter);
}

TEST_CASE("rho-bullet images are torus monomials") {
    auto m = build_map(MapKind::rho_bullet, Decomposition({3, 1}, 2));
    Polynomial t1 = var(VarId::TT(1)), t2 = var(VarId::TT(2));
    CHECK(m.image.at(VarId::XA(BlockString{{1, 1}})) == t1 * t1);
    CHECK(m.image.at(VarId::XA(BlockString{{1, 2}})) == t1 * t2);
}

TEST_CASE("phi sends x to pp") {
    auto m = build_map(MapKind::phi, Decomposition::unit(2, 4));
    PairIndex uv({1, 2}, {3, 4});
    CHECK(apply_map(m, xvar(uv), false) == pp(uv));
}

TEST_CASE("the (2,4) rho Gr kernel is the linearized relation") {
    auto r = kernel_mh(build_map(MapKind::phi_gr_rho, Decomposition::unit(2, 4)), 4);
    REQUIRE(r.generators.size() == 1);
    CHECK(to_string(r.generators[0]) == "x_1_2__3_4 - x_1_3__2_4 + x_1_4__2_3");
    CHECK(r.multi_homogeneous);
    CHECK_FALSE(r.truncated);
}

TEST_CASE("quotient projection for r = (3,1)") {
    auto r = h_quotient_projection(Decomposition({3, 1}, 2), 4);
    REQUIRE(r.generators.size() == 1);
    CHECK(to_string(r.generators[0]) == "y_1_2*y_3_4 - y_1_3*y_2_4 + y_1_4*y_2_3");
    CHECK_THROWS_AS(h_quotient_projection(Decomposition::unit(2, 4), 4), PreconditionViolation);
}

TEST_CASE("rho-bullet kernel equals the sorted ideal") {
    Decomposition dec = Decomposition::unit(2, 4);
    auto m = build_map(MapKind::rho_bullet, dec);
    auto r = kernel_mh(m, 4);
    std::vector<Polynomial> s;
    for (const auto& b : sorted_gb(dec)) s.push_back(b.polynomial());
    for (const auto& g : r.generators) {
        CHECK(g.is_unit_binomial());
        CHECK(normal_form(g, s, sorting_order(dec)).is_zero());
    }
    for (const auto& f : s) CHECK(normal_form(f, r.generators, r.order).is_zero());
}

TEST_CASE("kernel generators are block-homogeneous binomials") {
    auto m = build_map(MapKind::phi, Decomposition::unit(2, 4));
    auto r = kernel_mh(m, 4);
    CHECK_FALSE(r.generators.empty());
    for (const auto& g : r.generators) {
        CHECK(is_block_homogeneous(m, g));
        CHECK(apply_map(m, g).is_zero());
    }
}

TEST_CASE("cubic binomials lie in the rho kernel") {
    for (int n : {5, 6}) {
        auto m = build_map(MapKind::phi_rho, Decomposition::unit(2, n));
        for (const auto& b : cubic_binomials(n)) {
            auto k = verify_kernel_membership(b.polynomial(), m);
            CHECK(k.member);
            CHECK(phi_image(b.polynomial()).is_zero());
        }
    }
}

TEST_CASE("non-members are rejected") {
    auto m = build_map(MapKind::phi_rho, Decomposition::unit(2, 5));
    Polynomial f = xvar(PairIndex({1, 2}, {3, 4})) - xvar(PairIndex({1, 3}, {2, 4}));
    CHECK_FALSE(verify_kernel_membership(f, m).member);
}

TEST_CASE("hilbert function of the orbit closure counts weight sums") {
    Rng rng(17);
    for (const auto& dec : {Decomposition::unit(2, 4), Decomposition::unit(2, 5), Decomposition({3, 1}, 2),
                            Decomposition({2, 2, 1}, 2)}) {
        auto p = random_grassmannian_point(dec.d(), dec.total(), rng);
        CHECK(hilbert_orbit(p, dec, 4) == oracle::weight_sums(dec, 4));
    }
    CHECK(hilbert_orbit(ones_point(2, 4), Decomposition::unit(2, 4), 4) == std::vector<long long>{1, 6, 19, 44, 85});
    // two blocks give a rational normal curve of degree one, a line
    CHECK(hilbert_orbit(ones_point(2, 4), Decomposition({3, 1}, 2), 4) == std::vector<long long>{1, 2, 3, 4, 5});
}

TEST_CASE("theta at degenerate and generic points") {
    Decomposition dec = Decomposition::unit(2, 4);
    auto gen = theta_eval(ones_point(2, 4), dec);
    CHECK_FALSE(gen.degenerate);
    CHECK_FALSE(gen.j_vanishes);

    RationalPoint p = ones_point(2, 4);
    p.coords[MultiIndex{1, 2}] = 0;
    auto deg = theta_eval(p, dec);
    CHECK(deg.degenerate);
    CHECK(deg.j_vanishes);
}

TEST_CASE("theta blocks are the fiber and pair coordinates") {
    Decomposition dec({3, 1}, 2);
    Rng rng(2);
    auto p = random_point(2, 4, rng);
    auto t = theta_eval(p, dec);
    REQUIRE(t.point.y_blocks.size() == 2);
    auto a = BlockString{{1, 1}};
    auto ys = t.point.y_blocks.at(a);
    auto idx = fiber_indices(a, dec);
    REQUIRE(ys.size() == idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) CHECK(ys[i] == p.at(idx[i]));
}

TEST_CASE("zeta-p kernel matches the orbit basis") {
    Rng rng(9);
    Decomposition dec({3, 1}, 2);
    auto p = random_grassmannian_point(2, 4, rng);
    auto r = kernel_mh(build_map(MapKind::zeta_p, dec, std::nullopt, p), 4);
    auto g = orbit_gb(p, dec, true);
    auto o = orbit_order(dec);
    for (const auto& f : g) CHECK(normal_form(f, r.generators, r.order).is_zero());
    for (const auto& f : r.generators) CHECK(normal_form(f, g, o).is_zero());
}

TEST_CASE("quintic reduction steps") {
    auto q = quintic_steps();
    CHECK(q.g_in_kernel);
    CHECK(q.difference_matches);
    CHECK(q.f_is_cubic);
    CHECK(q.cubic_prime_is_relabelled);
}

TEST_CASE("conjecture experiment rejects other n") {
    CHECK_THROWS_AS(conjecture_experiment(4, 4), InvalidParameter);
}
