#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "torgr/error.hpp"
#include "torgr/index.hpp"

using namespace torgr;

TEST_CASE("multi-indices are the d-subsets in lex order") {
    auto v = multi_indices(2, 4);
    REQUIRE(v.size() == 6);
    CHECK(v.front().str() == "12");
    CHECK(v.back().str() == "34");
    for (int m = 3; m <= 7; ++m)
        for (int d = 1; d < m; ++d) CHECK(multi_indices(d, m).size() == static_cast<std::size_t>(oracle::binom(m, d)));
    CHECK(std::is_sorted(v.begin(), v.end()));
}

TEST_CASE("multi-index rejects non-increasing tuples") {
    CHECK_THROWS_AS(MultiIndex({2, 1}), InvalidParameter);
    CHECK_THROWS_AS(MultiIndex({1, 1}), InvalidParameter);
}

TEST_CASE("canonical plucker symbols") {
    auto s = canonical_plucker({2, 1}, 4);
    CHECK(s.sign == -1);
    CHECK(s.index().str() == "12");
    auto t = canonical_plucker({3, 1, 2}, 4);
    CHECK(t.sign == 1);
    CHECK(t.index().str() == "123");
    auto z = canonical_plucker({1, 1}, 4);
    CHECK(z.is_zero());
    CHECK_THROWS(z.index());
}

TEST_CASE("compositions and block strings are in bijection") {
    Decomposition dec({3, 1}, 2);
    auto cs = composition_set(dec);
    auto js = block_strings(dec);
    REQUIRE(cs.size() == 2);
    REQUIRE(js.size() == 2);
    CHECK(js[0].str() == "11");
    CHECK(js[1].str() == "12");
    for (const auto& c : cs) CHECK(composition_of_string(string_of_composition(c, dec), dec) == c);

    Decomposition dec2({2, 2, 1}, 2);
    // compositions of 2 into three parts bounded by (2,2,1): all of C(4,2) except (0,0,2)
    CHECK(composition_set(dec2).size() == 5);
    CHECK(block_strings(Decomposition::unit(3, 6)).size() == 20);
}

TEST_CASE("fiber indices partition the multi-indices") {
    Decomposition dec({2, 2, 1}, 2);
    std::size_t total = 0;
    for (const auto& a : block_strings(dec)) {
        for (const auto& u : fiber_indices(a, dec)) CHECK(block_string_of(u, dec) == a);
        total += fiber_indices(a, dec).size();
    }
    CHECK(total == multi_indices(2, 5).size());
}

TEST_CASE("sorted pairs of the unit (2,4) decomposition") {
    Decomposition dec = Decomposition::unit(2, 4);
    auto w = sorted_pairs(dec);
    // degree-2 sorted monomials count the lattice points of twice the hypersimplex
    CHECK(static_cast<long long>(w.size()) == oracle::hypersimplex_points(2, 4, 2));
    for (const auto& p : w) CHECK(is_sorted(p.odd, p.even));
    CHECK(sorted_key({1, 4}, {2, 3}).str() == "((13),(24))");
    CHECK(interleave({1, 3}, {2, 4}) == Tuple{1, 2, 3, 4});
}

TEST_CASE("lambda sets aggregate pairs by key") {
    Decomposition dec = Decomposition::unit(2, 4);
    SortedPair w = sorted_key({1, 3}, {2, 4});
    auto l = lambda_w(w, dec);
    REQUIRE(l.size() == 3);
    for (const auto& uv : l) CHECK(pair_key(uv, dec) == w);
    CHECK(nontrivial_pairs(dec).size() == 1);

    auto ls = lambda_sort(2, 4);
    REQUIRE(ls.size() == 1);
    CHECK(ls[0].str() == "((13),(24))");
    // d+2 = 4 distinct letters out of 5, one key per 4-subset
    CHECK(lambda_sort(2, 5).size() == 5);
}

TEST_CASE("every pair lands in exactly one lambda set") {
    Decomposition dec({2, 2, 1}, 2);
    auto idx = multi_indices(2, 5);
    std::size_t pairs = 0;
    for (const auto& w : sorted_pairs(dec)) pairs += lambda_w(w, dec).size();
    CHECK(pairs == idx.size() * (idx.size() + 1) / 2);
}

TEST_CASE("support projection and contraction") {
    SortedPair w = sorted_key({1, 3}, {2, 4});
    CHECK(support(w) == Tuple{1, 2, 3, 4});
    CHECK_FALSE(project_support(w, {1, 2, 3}).has_value());
    auto p = project_support(w, {1, 2, 3, 4, 5});
    REQUIRE(p.has_value());
    CHECK(*p == w);
    CHECK(contract_support(w, {5}).str() == "((135),(245))");
    CHECK_THROWS_AS(contract_support(w, {3}), InvalidParameter);
}
