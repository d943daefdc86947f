#pragma once

// Brute-force reference computations shared by the unit tests.

#include <set>
#include <vector>

#include "torgr/index.hpp"

namespace oracle {

inline long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Weight of a Plücker index: how many entries fall into each block.
inline std::vector<int> weight(const torgr::MultiIndex& u, const torgr::Decomposition& dec) {
    std::vector<int> w(dec.blocks(), 0);
    for (int e : u.entries()) ++w[dec.block_of(e) - 1];
    return w;
}

// Distinct k-fold sums of the index weights. For a point with every coordinate
// nonzero this is the dimension of the degree-k part of the orbit closure ring.
inline std::vector<long long> weight_sums(const torgr::Decomposition& dec, int max_degree) {
    std::set<std::vector<int>> base;
    for (const auto& u : torgr::multi_indices(dec.d(), dec.total())) base.insert(weight(u, dec));
    std::vector<long long> out;
    std::set<std::vector<int>> cur{std::vector<int>(dec.blocks(), 0)};
    for (int k = 0; k <= max_degree; ++k) {
        out.push_back(static_cast<long long>(cur.size()));
        std::set<std::vector<int>> next;
        for (const auto& s : cur)
            for (const auto& b : base) {
                auto t = s;
                for (std::size_t i = 0; i < t.size(); ++i) t[i] += b[i];
                next.insert(t);
            }
        cur = std::move(next);
    }
    return out;
}

// Lattice points of k times the hypersimplex: vectors in {0..k}^n summing to d*k.
inline long long hypersimplex_points(int d, int n, int k) {
    long long count = 0;
    std::vector<int> v(n, 0);
    while (true) {
        int s = 0;
        for (int x : v) s += x;
        if (s == d * k) ++count;
        int i = 0;
        while (i < n && v[i] == k) v[i++] = 0;
        if (i == n) break;
        ++v[i];
    }
    return count;
}

} // namespace oracle
