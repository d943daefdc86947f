#include <doctest.h>

#include <algorithm>

#include "torgr/error.hpp"
#include "torgr/groebner.hpp"

using namespace torgr;

namespace {
VarId v(int i) { return VarId::TT(i); }
Polynomial t(int i) { return var(v(i)); }

bool same_set(std::vector<Polynomial> a, std::vector<Polynomial> b) {
    auto key = [](const Polynomial& f) { return to_string(f); };
    auto less = [&](const Polynomial& x, const Polynomial& y) { return key(x) < key(y); };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    return a == b;
}
} // namespace

TEST_CASE("textbook basis: x^3 - 2xy, x^2y - 2y^2 + x") {
    // the reduced graded basis is {x^2, xy, y^2 - x/2}
    auto o = TermOrder::degrevlex({v(1), v(2)});
    Polynomial x = t(1), y = t(2);
    auto gb = reduced_groebner({x.pow(3) - 2 * (x * y), x.pow(2) * y - 2 * y.pow(2) + x}, o);
    CHECK(gb.reduced);
    CHECK(same_set(gb.generators, {x.pow(2), x * y, y.pow(2) - x * Rational(1, 2)}));
    CHECK(is_groebner(gb.generators, o));
    CHECK(is_reduced(gb.generators, o));
}

TEST_CASE("lex basis of a zero-dimensional system") {
    // x^2 + y^2 - 1, x - y under lex x > y gives {x - y, y^2 - 1/2}
    auto o = TermOrder::lex({v(1), v(2)});
    Polynomial x = t(1), y = t(2);
    auto gb = reduced_groebner({x.pow(2) + y.pow(2) - 1, x - y}, o);
    CHECK(same_set(gb.generators, {x - y, y.pow(2) - Polynomial(Rational(1, 2))}));
}

TEST_CASE("unit ideal collapses to 1") {
    auto o = TermOrder::degrevlex({v(1), v(2)});
    auto gb = reduced_groebner({t(1) * t(2) - 1, t(1)}, o);
    REQUIRE(gb.generators.size() == 1);
    CHECK(gb.generators[0] == Polynomial(1));
}

TEST_CASE("reduction trace reconstructs the input") {
    auto o = TermOrder::degrevlex({v(1), v(2), v(3)});
    std::vector<Polynomial> basis{t(1) * t(2) - t(3), t(2).pow(2) - t(1)};
    Polynomial f = t(1).pow(2) * t(2).pow(3) + t(3) * t(2) + 5;
    Reduction r = reduce(f, basis, o);
    Polynomial back = r.remainder;
    for (const auto& s : r.trace) back += s.multiplier * basis[s.divisor] * s.coefficient;
    CHECK(back == f);
    CHECK(normal_form(r.remainder, basis, o) == r.remainder);
}

TEST_CASE("s-polynomial of co-prime leading terms reduces to zero") {
    auto o = TermOrder::degrevlex({v(1), v(2), v(3), v(4)});
    Polynomial f = t(1) * t(2) - t(3), g = t(4).pow(2) - t(3);
    CHECK(normal_form(s_polynomial(f, g, o), {f, g}, o).is_zero());
}

TEST_CASE("twisted cubic as the kernel of a monomial map") {
    // a,b,c,d -> s^3, s^2u, su^2, u^3: kernel generated by the three 2x2 minors
    std::map<VarId, Polynomial> img{{v(1), t(10).pow(3)},
                                    {v(2), t(10).pow(2) * t(11)},
                                    {v(3), t(10) * t(11).pow(2)},
                                    {v(4), t(11).pow(3)}};
    auto k = kernel_of_monomial_map(img);
    CHECK(k.generators.size() == 3);
    Polynomial a = t(1), b = t(2), c = t(3), d = t(4);
    for (const auto& m : {a * c - b * b, b * d - c * c, a * d - b * c})
        CHECK(normal_form(m, k.generators, k.order).is_zero());
    for (const auto& g : k.generators) {
        CHECK(g.is_unit_binomial());
        CHECK(g.substitute(img).is_zero());
    }
}

TEST_CASE("kernel modulo a target ideal") {
    // x1 -> s, x2 -> u with s = u in the target: kernel is x1 - x2
    std::map<VarId, Polynomial> img{{v(1), t(10)}, {v(2), t(11)}};
    auto k = kernel_modulo(img, {t(10) - t(11)});
    REQUIRE(k.generators.size() == 1);
    CHECK((k.generators[0] == t(1) - t(2) || k.generators[0] == t(2) - t(1)));
}

TEST_CASE("elimination ideal") {
    // <x - s^2, y - s^3> eliminating s gives y^2 - x^3
    auto k = eliminate({t(1) - t(9).pow(2), t(2) - t(9).pow(3)}, {v(9)});
    REQUIRE(k.generators.size() == 1);
    Polynomial e = t(2).pow(2) - t(1).pow(3);
    CHECK((k.generators[0] == e || k.generators[0] == -e));
}

TEST_CASE("ideal membership with certificate") {
    auto o = TermOrder::degrevlex({v(1), v(2)});
    std::vector<Polynomial> gens{t(1).pow(2) - t(2), t(1) * t(2) - 1};
    auto m = ideal_member(t(2).pow(2) - t(1), gens, o);
    CHECK(m.member);
    auto n = ideal_member(t(1) - 2, gens, o);
    CHECK_FALSE(n.member);
}

TEST_CASE("budgets fail loudly") {
    auto o = TermOrder::degrevlex({v(1), v(2), v(3)});
    std::vector<Polynomial> gens{t(1) * t(2) - t(3).pow(2), t(2) * t(3) - t(1).pow(2), t(1) * t(3) - t(2).pow(2)};
    BuchbergerOptions tight;
    tight.budget.max_spairs = 1;
    CHECK_THROWS_AS(buchberger(gens, o, tight), ResourceExceeded);
    BuchbergerOptions deg;
    deg.budget.max_degree = 2;
    CHECK_THROWS_AS(buchberger(gens, o, deg), ResourceExceeded);
    deg.truncate = true;
    auto gb = buchberger(gens, o, deg);
    CHECK(gb.truncated);
}

TEST_CASE("threaded reduction gives the same reduced basis") {
    auto o = TermOrder::degrevlex({v(1), v(2), v(3), v(4)});
    std::vector<Polynomial> gens{t(1) * t(4) - t(2) * t(3), t(1) * t(3) - t(2).pow(2), t(2) * t(4) - t(3).pow(2)};
    BuchbergerOptions par;
    par.budget.threads = 3;
    CHECK(reduced_groebner(gens, o).generators == reduced_groebner(gens, o, par).generators);
}

TEST_CASE("hilbert function from leading monomials") {
    // <x^2> in two variables: 1, 2, 2, 2
    auto h = hilbert_function({Monomial::of(v(1), 2)}, {v(1), v(2)}, {0, 1, 2, 3});
    CHECK(h == std::vector<long long>{1, 2, 2, 2});
}
