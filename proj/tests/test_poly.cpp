#include <doctest.h>

#include "torgr/error.hpp"
#include "torgr/groebner.hpp"
#include "torgr/order.hpp"
#include "torgr/random.hpp"

using namespace torgr;

namespace {
Polynomial X() { return var(VarId::TT(1)); }
Polynomial Y() { return var(VarId::TT(2)); }
Polynomial Z() { return var(VarId::TT(3)); }
} // namespace

TEST_CASE("variable names round-trip") {
    std::vector<VarId> vs{VarId::P({1, 2}),
                          VarId::Z({2, 3}),
                          VarId::X(PairIndex({1, 2}, {3, 4})),
                          VarId::Y({1, 4}),
                          VarId::T(sorted_key({1, 3}, {2, 4})),
                          VarId::M(BlockString{{1, 2}}),
                          VarId::S(),
                          VarId::XA(BlockString{{1, 1}}),
                          VarId::TT(3),
                          VarId::Aux(7)};
    for (const auto& v : vs) CHECK(parse_var(v.name()) == v);
    CHECK(VarId::X(PairIndex({1, 2}, {3, 4})).name() == "x_1_2__3_4");
    CHECK(VarId::P({1, 2}).name() == "p_1_2");
    CHECK_THROWS_AS(parse_var("q_1"), ParseError);
}

TEST_CASE("canonical form cancels and orders terms") {
    Polynomial f = X() * Y() + Y() * X() - 2 * (X() * Y());
    CHECK(f.is_zero());
    Polynomial g = (X() + Y()).pow(2);
    CHECK(g.size() == 3);
    CHECK(g.coefficient(Monomial({{VarId::TT(1), 1}, {VarId::TT(2), 1}})) == 2);
    CHECK(to_string(X() - Y()) == "t_1 - t_2");
    CHECK((X() * Rational(1, 2)).coefficient(Monomial::of(VarId::TT(1))) == Rational(1, 2));
}

TEST_CASE("monomial arithmetic") {
    Monomial a({{VarId::TT(1), 2}, {VarId::TT(2), 1}});
    Monomial b({{VarId::TT(2), 3}});
    CHECK(a.lcm(b) == Monomial({{VarId::TT(1), 2}, {VarId::TT(2), 3}}));
    CHECK(a.gcd(b) == Monomial::of(VarId::TT(2)));
    CHECK_FALSE(a.coprime(b));
    CHECK(Monomial::of(VarId::TT(1)).coprime(b));
    CHECK((a * b) / b == a);
    CHECK_THROWS(b / a);
    CHECK(a.degree() == 3);
}

TEST_CASE("substitution and evaluation") {
    Polynomial f = X() * X() - Y();
    Polynomial g = f.substitute(std::map<VarId, Polynomial>{{VarId::TT(2), X() * X()}});
    CHECK(g.is_zero());
    Rational v = f.evaluate([](const VarId& u) { return u == VarId::TT(1) ? Rational(3) : Rational(5); });
    CHECK(v == 4);
}

TEST_CASE("lex and degrevlex on three variables") {
    std::vector<VarId> r{VarId::TT(1), VarId::TT(2), VarId::TT(3)};
    auto lex = TermOrder::lex(r);
    auto drl = TermOrder::degrevlex(r);
    Monomial x = Monomial::of(VarId::TT(1)), y2 = Monomial::of(VarId::TT(2), 2);
    CHECK(compare(lex, x, y2) == std::strong_ordering::greater);
    CHECK(compare(drl, x, y2) == std::strong_ordering::less);
    // degrevlex: x*z^2 < y^3 since the smallest variable z appears more
    Monomial xz2({{VarId::TT(1), 1}, {VarId::TT(3), 2}});
    Monomial y3 = Monomial::of(VarId::TT(2), 3);
    CHECK(compare(drl, xz2, y3) == std::strong_ordering::less);
    CHECK(compare(lex, xz2, y3) == std::strong_ordering::greater);
}

TEST_CASE("elimination order puts front variables first") {
    auto o = TermOrder::elimination({VarId::TT(1)}, TermOrder::degrevlex({VarId::TT(2), VarId::TT(3)}));
    CHECK(compare(o, Monomial::of(VarId::TT(1)), Monomial::of(VarId::TT(2), 5)) == std::strong_ordering::greater);
    CHECK(leading_monomial(Y().pow(4) + X(), o) == Monomial::of(VarId::TT(1)));
}

TEST_CASE("weighted orders break ties with the tie order") {
    std::vector<VarId> r{VarId::TT(1), VarId::TT(2)};
    auto o = TermOrder::weighted({1, 3}, TermOrder::lex(r));
    CHECK(compare(o, Monomial::of(VarId::TT(1), 2), Monomial::of(VarId::TT(2))) == std::strong_ordering::less);
    CHECK(compare(o, Monomial::of(VarId::TT(1), 3), Monomial::of(VarId::TT(2))) == std::strong_ordering::greater);
}

TEST_CASE("random term-order axioms on a composite order") {
    std::vector<VarId> g1{VarId::TT(1), VarId::TT(2)}, g2{VarId::TT(3), VarId::TT(4)};
    auto outer = TermOrder::degrevlex({VarId::Aux(1), VarId::Aux(2)});
    auto o = TermOrder::composite({{VarId::Aux(1), g1}, {VarId::Aux(2), g2}}, outer,
                                  {TermOrder::lex(g1), TermOrder::degrevlex(g2)});
    Rng rng(11);
    auto rand_mono = [&] {
        std::vector<Monomial::Factor> f;
        for (int i = 1; i <= 4; ++i) {
            int e = rng.uniform(0, 3);
            if (e) f.push_back({VarId::TT(i), e});
        }
        return Monomial(f);
    };
    for (int t = 0; t < 300; ++t) {
        Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
        auto ab = compare(o, a, b);
        CHECK((ab == std::strong_ordering::equal) == (a == b));
        CHECK(compare(o, a * c, b * c) == ab);
        if (!c.is_one()) CHECK(compare(o, a * c, a) == std::strong_ordering::greater);
        if (ab == std::strong_ordering::less && compare(o, b, c) == std::strong_ordering::less)
            CHECK(compare(o, a, c) == std::strong_ordering::less);
    }
}
