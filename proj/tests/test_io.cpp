#include <doctest.h>

#include "torgr/error.hpp"
#include "torgr/io.hpp"
#include "torgr/kernels.hpp"

using namespace torgr;

TEST_CASE("polynomial json round-trip") {
    Polynomial f = plucker_relations(2, 4)[0].polynomial() * Rational(-3, 7) + 2;
    json j = to_json(f);
    CHECK(polynomial_from_json(j) == f);
    CHECK(polynomial_from_json(json::parse(j.dump())) == f);
}

TEST_CASE("decomposition and point round-trip") {
    Decomposition dec({2, 2, 1}, 2);
    CHECK(decomposition_from_json(to_json(dec)) == dec);
    Rng rng(4);
    auto p = random_point(2, 5, rng);
    auto q = point_from_json(to_json(p));
    CHECK(q.coords == p.coords);
    CHECK(q.d == 2);
    CHECK(q.m == 5);
}

TEST_CASE("kernel report round-trip") {
    auto r = kernel_mh(build_map(MapKind::phi_gr_rho, Decomposition::unit(2, 4)), 4);
    auto back = kernel_report_from_json(to_json(r));
    CHECK(back.generators == r.generators);
    CHECK(back.kind == r.kind);
    CHECK(back.degree_cap == r.degree_cap);
    CHECK(back.order.matrix() == r.order.matrix());
}

TEST_CASE("multi-projective point round-trip") {
    auto t = theta_eval(ones_point(2, 4), Decomposition::unit(2, 4));
    auto back = multiproj_from_json(to_json(t.point));
    CHECK(back.y_blocks == t.point.y_blocks);
    CHECK(back.w_blocks == t.point.w_blocks);
}

TEST_CASE("documents carry a schema version") {
    json d = document("ideal", {{"generators", json::array()}});
    CHECK(d["schema"] == kSchema);
    CHECK_NOTHROW(open_document(d, "ideal"));
    CHECK_THROWS_AS(open_document(d, "point"), SchemaMismatch);
    d["schema"] = kSchema + 1;
    CHECK_THROWS_AS(open_document(d, "ideal"), SchemaMismatch);
    CHECK_THROWS_AS(parse_document_text("{not json"), ParseError);
}

TEST_CASE("text polynomials parse back") {
    Polynomial f = plucker_relations(2, 5)[3].polynomial() - Polynomial(Rational(5, 2));
    CHECK(parse_polynomial(to_string(f)) == f);
    CHECK(parse_polynomial("2*t_1^3 - t_2") == var(VarId::TT(1)).pow(3) * Rational(2) - var(VarId::TT(2)));
    CHECK_THROWS_AS(parse_polynomial("p_1_2 +* p_3_4"), ParseError);
}

TEST_CASE("CAS export strings") {
    std::vector<Polynomial> I{plucker_relations(2, 4)[0].polynomial()};
    CHECK(export_cas(I, {}, CasDialect::singular) ==
          "ring R = 0,(p_1_2,p_1_3,p_1_4,p_2_3,p_2_4,p_3_4),dp;\n"
          "ideal I =\n"
          "  p_1_2*p_3_4 - p_1_3*p_2_4 + p_1_4*p_2_3;\n");
    CHECK(export_cas(I, {}, CasDialect::sage) ==
          "R.<p_1_2,p_1_3,p_1_4,p_2_3,p_2_4,p_3_4> = PolynomialRing(QQ, order='degrevlex')\n"
          "I = R.ideal([\n"
          "  p_1_2*p_3_4 - p_1_3*p_2_4 + p_1_4*p_2_3\n"
          "])\n");
    CHECK(parse_dialect("cas-a") == CasDialect::singular);
    CHECK(parse_dialect("cas-b") == CasDialect::sage);
    CHECK_THROWS_AS(parse_dialect("maple"), InvalidParameter);
    std::vector<Polynomial> mixed{var(VarId::P({1, 2})) - var(VarId::TT(1))};
    CHECK_THROWS_AS(export_cas(mixed, {}, CasDialect::singular), InvalidParameter);
}
