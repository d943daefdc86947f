#include "torgr/relations.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include "torgr/error.hpp"

namespace torgr {

namespace {

Polynomial p_of(const MultiIndex& u) { return var(VarId::P(u)); }

Monomial pp_mono(const PairIndex& uv) {
    return Monomial({{VarId::P(uv.u), 1}}) * Monomial({{VarId::P(uv.v), 1}});
}

Monomial x_mono(const PairIndex& uv) { return Monomial::of(VarId::X(uv)); }

// Largest monomial under lex on the default ranking, the first rendered term.
Monomial first_term(const Polynomial& f) {
    std::set<VarId> vars = f.variables();
    return leading_monomial(f, TermOrder::lex({vars.begin(), vars.end()}));
}

Polynomial sign_normalized(const Polynomial& f) {
    return sgn(f.coefficient(first_term(f))) < 0 ? -f : f;
}

Rational minor(const std::vector<std::vector<long long>>& a, const MultiIndex& cols) {
    const std::size_t d = cols.size();
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m[i][j] = static_cast<long>(a[i][static_cast<std::size_t>(cols[j] - 1)]);
    Rational det = 1;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = c;
        while (piv < d && sgn(m[piv][c]) == 0) ++piv;
        if (piv == d) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < d; ++r) {
            Rational q = m[r][c] / m[c][c];
            for (std::size_t k = c; k < d; ++k) m[r][k] -= q * m[c][k];
        }
    }
    return det;
}

} // namespace

// ---------------------------------------------------------------- basic types

Polynomial PluckerRelation::polynomial() const {
    Polynomial f;
    for (const auto& t : terms) f.add_term(t.sign, pp_mono(PairIndex(t.u, t.v)));
    return f;
}

Polynomial Binomial::polynomial() const { return Polynomial::term(1, plus) - Polynomial::term(1, minus); }

Binomial Binomial::of(const Polynomial& f) {
    if (!f.is_unit_binomial()) throw InvalidParameter("not a unit binomial: " + to_string(f));
    Binomial b;
    for (const auto& [m, c] : f.terms()) (c > 0 ? b.plus : b.minus) = m;
    return b;
}

const Rational& RationalPoint::at(const MultiIndex& u) const {
    auto it = coords.find(u);
    if (it == coords.end()) throw InvalidParameter("point has no coordinate " + u.str());
    return it->second;
}

bool RationalPoint::all_nonzero() const {
    return std::all_of(coords.begin(), coords.end(), [](const auto& kv) { return sgn(kv.second) != 0; });
}

Rational RationalPoint::value(const VarId& v) const {
    if (v.tag != VarTag::p) throw InvalidParameter("point assigns values to P variables only, got " + v.name());
    return at(MultiIndex(v.a));
}

Polynomial pp(const PairIndex& uv) { return Polynomial::term(1, pp_mono(uv)); }
Polynomial xvar(const PairIndex& uv) { return var(VarId::X(uv)); }

// ---------------------------------------------------------------- Plücker relations

PluckerRelation relation_of(const Polynomial& F) {
    PluckerRelation r;
    const std::set<VarId> vars = F.variables();
    for (const auto& [m, c] : sorted_terms(F, TermOrder::lex({vars.begin(), vars.end()}))) {
        if (c != 1 && c != -1) throw InvalidParameter("Plücker relation coefficients must be +1 or -1");
        std::vector<MultiIndex> idx;
        for (const auto& [v, e] : m.factors()) {
            if (v.tag != VarTag::p) throw InvalidParameter("Plücker relation in non-P variable " + v.name());
            for (int k = 0; k < e; ++k) idx.emplace_back(v.a);
        }
        if (idx.size() != 2) throw InvalidParameter("Plücker relation terms must be quadratic");
        r.terms.push_back({c > 0 ? 1 : -1, idx[0], idx[1]});
    }
    if (r.terms.empty()) throw InvalidParameter("zero Plücker relation");
    r.key = sorted_key(r.terms[0].u.entries(), r.terms[0].v.entries());
    for (const auto& t : r.terms)
        if (!(sorted_key(t.u.entries(), t.v.entries()) == r.key))
            throw InvalidParameter("Plücker relation terms carry different sorted keys");
    return r;
}

std::vector<PluckerRelation> plucker_relations(int d, int n) {
    if (d < 2 || d >= n) throw InvalidParameter("plucker_relations needs 2 <= d < n");
    std::map<std::pair<SortedPair, std::string>, PluckerRelation> found;
    for (const auto& h : multi_indices(d - 1, n))
        for (const auto& k : multi_indices(d + 1, n)) {
            Polynomial f;
            for (int lam = 0; lam <= d; ++lam) {
                Tuple left = h.entries();
                left.push_back(k[static_cast<std::size_t>(lam)]);
                auto s = canonical_plucker(left, n);
                if (s.is_zero()) continue;
                Tuple right;
                for (int i = 0; i <= d; ++i)
                    if (i != lam) right.push_back(k[static_cast<std::size_t>(i)]);
                int sign = (lam % 2 == 0 ? 1 : -1) * s.sign;
                f.add_term(sign, pp_mono(PairIndex(s.index(), MultiIndex(right))));
            }
            if (f.is_zero()) continue;
            f = sign_normalized(f);
            PluckerRelation r = relation_of(f);
            found.emplace(std::make_pair(r.key, to_string(f)), std::move(r));
        }
    std::vector<PluckerRelation> out;
    for (auto& [k, r] : found) out.push_back(std::move(r));
    return out;
}

Polynomial linearize(const PluckerRelation& F) {
    Polynomial f;
    for (const auto& t : F.terms) f.add_term(t.sign, x_mono(PairIndex(t.u, t.v)));
    return f;
}

std::vector<Binomial> wp_binomials(const SortedPair& w, const Decomposition& dec) {
    auto L = lambda_w(w, dec);
    std::vector<Binomial> out;
    for (std::size_t i = 0; i < L.size(); ++i)
        for (std::size_t j = i + 1; j < L.size(); ++j)
            out.push_back({pp_mono(L[j]) * x_mono(L[i]), pp_mono(L[i]) * x_mono(L[j])});
    return out;
}

// ---------------------------------------------------------------- sorting

std::vector<Binomial> sorted_gb(const Decomposition& dec) {
    auto strings = block_strings(dec);
    std::vector<Binomial> out;
    for (std::size_t i = 0; i < strings.size(); ++i)
        for (std::size_t j = i + 1; j < strings.size(); ++j) {
            const auto& a = strings[i];
            const auto& b = strings[j];
            if (is_sorted(a.letters, b.letters) || is_sorted(b.letters, a.letters)) continue;
            SortedPair k = sorted_key(a.letters, b.letters);
            Monomial plus = Monomial::of(VarId::XA(a)) * Monomial::of(VarId::XA(b));
            Monomial minus = Monomial::of(VarId::XA({k.odd})) * Monomial::of(VarId::XA({k.even}));
            if (plus == minus) continue;
            out.push_back({plus, minus});
        }
    return out;
}

TermOrder sorting_order(const Decomposition& dec) {
    auto strings = block_strings(dec);
    std::vector<VarId> vars;
    std::map<VarId, std::size_t> col;
    for (const auto& a : strings) {
        col[VarId::XA(a)] = vars.size();
        vars.push_back(VarId::XA(a));
    }
    // Perceptron for a weight vector with weight(plus) > weight(minus) on every binomial.
    std::vector<std::vector<long long>> rows;
    for (const auto& b : sorted_gb(dec)) {
        std::vector<long long> r(vars.size(), 0);
        for (const auto& [v, e] : b.plus.factors()) r[col.at(v)] += e;
        for (const auto& [v, e] : b.minus.factors()) r[col.at(v)] -= e;
        rows.push_back(std::move(r));
    }
    std::vector<long long> w(vars.size(), 0);
    bool done = false;
    for (int pass = 0; pass < 100000 && !done; ++pass) {
        done = true;
        for (const auto& r : rows) {
            long long s = 0;
            for (std::size_t i = 0; i < r.size(); ++i) s += r[i] * w[i];
            if (s <= 0) {
                done = false;
                for (std::size_t i = 0; i < r.size(); ++i) w[i] += r[i];
            }
        }
    }
    if (!done) throw ResourceExceeded("no sorting weight vector found");
    // The binomials are homogeneous, so a uniform shift keeps every inequality.
    long long lo = vars.empty() ? 0 : *std::min_element(w.begin(), w.end());
    for (auto& x : w) x += 1 - lo;
    return TermOrder::weighted(w, TermOrder::degrevlex(vars));
}

std::vector<Monomial> sorted_monomials(const Decomposition& dec, int degree) {
    auto strings = block_strings(dec);
    std::vector<Monomial> out;
    std::vector<std::size_t> pick;
    // Sorted monomials are the chains a_1 <= ... <= a_k whose interleave is weakly increasing.
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(pick.size()) == degree) {
            std::vector<Tuple> parts;
            for (auto k : pick) parts.push_back(strings[k].letters);
            Tuple all;
            for (std::size_t pos = 0; pos < static_cast<std::size_t>(dec.d()); ++pos)
                for (const auto& p : parts) all.push_back(p[pos]);
            if (!std::is_sorted(all.begin(), all.end())) return;
            Monomial m;
            for (auto k : pick) m = m * Monomial::of(VarId::XA(strings[k]));
            out.push_back(m);
            return;
        }
        for (std::size_t k = from; k < strings.size(); ++k) {
            pick.push_back(k);
            rec(k);
            pick.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

Monomial straighten(const Monomial& m, const Decomposition& dec) {
    std::vector<BlockString> f;
    for (const auto& [v, e] : m.factors()) {
        if (v.tag != VarTag::block || !is_block_string(v.a, dec))
            throw InvalidParameter("straighten expects block variables of the decomposition, got " + v.name());
        for (int k = 0; k < e; ++k) f.push_back({v.a});
    }
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(f.begin(), f.end());
        for (std::size_t i = 0; i < f.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < f.size() && !changed; ++j) {
                if (is_sorted(f[i].letters, f[j].letters)) continue;
                SortedPair k = sorted_key(f[i].letters, f[j].letters);
                f[i] = {k.odd};
                f[j] = {k.even};
                changed = true;
            }
    }
    Monomial out;
    for (const auto& a : f) out = out * Monomial::of(VarId::XA(a));
    return out;
}

// ---------------------------------------------------------------- orbit systems

MultiIndex fiber_representative(const BlockString& a, const Decomposition& dec) {
    return fiber_indices(a, dec).front();
}

TermOrder orbit_order(const Decomposition& dec) {
    std::vector<TermOrder::Group> groups;
    std::vector<TermOrder> inner;
    for (const auto& a : block_strings(dec)) {
        std::vector<VarId> members;
        for (const auto& u : fiber_indices(a, dec)) members.push_back(VarId::Z(u));
        std::vector<VarId> ranking(members.rbegin(), members.rend());
        groups.push_back({VarId::XA(a), members});
        inner.push_back(TermOrder::degrevlex(ranking));
    }
    return TermOrder::composite(groups, sorting_order(dec), inner);
}

std::vector<Polynomial> orbit_gb(const RationalPoint& p, const Decomposition& dec, bool monic) {
    if (p.d != dec.d() || p.m != dec.total()) throw InvalidParameter("point does not match the decomposition");
    if (!p.all_nonzero()) throw PreconditionViolation("orbit_gb needs a point with all coordinates nonzero");
    std::vector<Polynomial> out;
    for (const auto& a : block_strings(dec)) {
        auto fib = fiber_indices(a, dec);
        const MultiIndex& ua = fib.front();
        for (std::size_t k = 1; k < fib.size(); ++k)
            out.push_back(var(VarId::Z(fib[k])) * p.at(ua) - var(VarId::Z(ua)) * p.at(fib[k]));
    }
    for (const auto& b : sorted_gb(dec)) {
        std::vector<MultiIndex> lead, tail;
        for (const auto& [v, e] : b.plus.factors())
            for (int k = 0; k < e; ++k) lead.push_back(fiber_representative({v.a}, dec));
        for (const auto& [v, e] : b.minus.factors())
            for (int k = 0; k < e; ++k) tail.push_back(fiber_representative({v.a}, dec));
        Rational cl = p.at(tail[0]) * p.at(tail[1]);
        Rational ct = p.at(lead[0]) * p.at(lead[1]);
        out.push_back(var(VarId::Z(lead[0])) * var(VarId::Z(lead[1])) * cl -
                      var(VarId::Z(tail[0])) * var(VarId::Z(tail[1])) * ct);
    }
    if (monic) {
        TermOrder o = orbit_order(dec);
        for (auto& f : out) f = make_monic(f, o);
    }
    return out;
}

std::vector<Polynomial> fiber_ideal(const MultiProjPoint& y, const Decomposition& dec) {
    std::vector<Polynomial> out;
    auto emit = [&](const Rational& c1, const Polynomial& m1, const Rational& c2, const Polynomial& m2) {
        if (sgn(c1) == 0 && sgn(c2) == 0) return;
        out.push_back(m1 * c1 - m2 * c2);
    };
    for (const auto& a : block_strings(dec)) {
        auto it = y.y_blocks.find(a);
        auto fib = fiber_indices(a, dec);
        if (it == y.y_blocks.end() || it->second.size() != fib.size())
            throw InvalidParameter("fiber point lacks a well-formed block " + a.str());
        const auto& ya = it->second;
        if (std::all_of(ya.begin(), ya.end(), [](const Rational& c) { return sgn(c) == 0; }))
            throw InvalidParameter("fiber point block " + a.str() + " is identically zero");
        for (std::size_t i = 0; i < fib.size(); ++i)
            for (std::size_t j = i + 1; j < fib.size(); ++j)
                emit(ya[j], var(VarId::Z(fib[i])), ya[i], var(VarId::Z(fib[j])));
    }
    for (const auto& w : sorted_pairs(dec)) {
        auto it = y.w_blocks.find(w);
        auto L = lambda_w(w, dec);
        if (it == y.w_blocks.end() || it->second.size() != L.size())
            throw InvalidParameter("fiber point lacks a well-formed block " + w.str());
        const auto& yw = it->second;
        if (std::all_of(yw.begin(), yw.end(), [](const Rational& c) { return sgn(c) == 0; }))
            throw InvalidParameter("fiber point block " + w.str() + " is identically zero");
        auto zz = [](const PairIndex& uv) { return var(VarId::Z(uv.u)) * var(VarId::Z(uv.v)); };
        for (std::size_t i = 0; i < L.size(); ++i)
            for (std::size_t j = i + 1; j < L.size(); ++j) emit(yw[j], zz(L[i]), yw[i], zz(L[j]));
    }
    return out;
}

JIdeals j_ideals(const Decomposition& dec) {
    JIdeals J;
    for (const auto& a : block_strings(dec))
        for (const auto& u : fiber_indices(a, dec)) J.ja[a].push_back(p_of(u));
    for (const auto& w : sorted_pairs(dec))
        for (const auto& uv : lambda_w(w, dec)) J.jw[w].push_back(pp(uv));
    return J;
}

std::vector<Monomial> j_product(const Decomposition& dec) { return j_product(dec, sorted_pairs(dec)); }

std::vector<Monomial> j_product(const Decomposition& dec, const std::vector<SortedPair>& pairs) {
    JIdeals J = j_ideals(dec);
    std::set<Monomial> cur{Monomial()};
    auto times = [&](const std::vector<Polynomial>& gens) {
        std::set<Monomial> next;
        for (const auto& m : cur)
            for (const auto& g : gens) next.insert(m * g.terms().begin()->first);
        cur = std::move(next);
    };
    for (const auto& [a, g] : J.ja) times(g);
    for (const auto& w : pairs) {
        auto it = J.jw.find(w);
        if (it == J.jw.end()) throw InvalidParameter("unknown sorted pair " + w.str());
        times(it->second);
    }
    return {cur.begin(), cur.end()};
}

// ---------------------------------------------------------------- cubic binomials

Polynomial cubic_form(const std::array<int, 5>& L) {
    const int n = *std::max_element(L.begin(), L.end());
    std::set<int> distinct(L.begin(), L.end());
    if (distinct.size() != 5) throw InvalidParameter("cubic form needs five distinct letters");
    auto x = [&](int a, int b, int c, int e) {
        auto s = canonical_plucker({a, b}, n);
        auto t = canonical_plucker({c, e}, n);
        return var(VarId::X(PairIndex(s.index(), t.index()))) * Rational(s.sign * t.sign);
    };
    const int h = L[0], i = L[1], j = L[2], k = L[3], l = L[4];
    return x(h, i, j, k) * x(h, k, j, l) * x(h, l, i, j) - x(h, k, i, j) * x(h, l, j, k) * x(h, i, j, l);
}

std::vector<Binomial> cubic_binomials(int n) {
    std::vector<Binomial> out;
    if (n < 5) return out;
    for (const auto& s : multi_indices(5, n)) {
        Polynomial f = cubic_form({s[0], s[1], s[2], s[3], s[4]});
        Binomial b = Binomial::of(f);
        // In increasing letters every symbol is already canonical.
        if (f != b.polynomial()) throw InvalidParameter("cubic binomial sign did not resolve to +1");
        out.push_back(b);
    }
    return out;
}

// ---------------------------------------------------------------- named examples

const std::vector<ExampleInfo>& example_catalog() {
    static const std::vector<ExampleInfo> cat = [] {
        const std::string F3 = "p(123) p(1ab) - p(12a) p(13b) + p(13a) p(12b)";
        const std::string F4 = "p(123) p(abc) - p(12a) p(3bc) + p(13a) p(2bc) - p(23a) p(1bc)";
        const std::string h3 = "p(12a') p(13a') p(23a') p(2b'c') p(3b'c') p(a'bc)";
        std::vector<ExampleInfo> c;
        c.push_back({"rk0-0-3'", {"b", "c"}, 3, "phi", true,
                     "x(12b,13c) x(23b,12c) x(13b,23c) - x(13b,12c) x(12b,23c) x(23b,13c)", "", ""});
        c.push_back({"rk0-0-3", {"a", "b", "c"}, 3, "phi", true,
                     "x(12a,13b) x(13a,12c) x(12b,13c) - x(13a,12b) x(12a,13c) x(13b,12c)", "", ""});
        c.push_back({"rk0-0-4", {"a", "b", "c"}, 3, "phi", true,
                     "x(12a,13b) x(13a,12c) x(12b,23c) x(23b,13c) - x(13a,12b) x(12a,13c) x(23b,12c) x(13b,23c)", "",
                     ""});
        c.push_back({"rk0-1-4", {"a", "b", "c"}, 3, "phi", true,
                     "x(123,3bc) x(13a,2bc) x(12b,23c) x(12a,13b) - x(13b,23c) x(12a,3bc) x(123,2bc) x(13a,12b)", "",
                     ""});
        c.push_back({"rk1-1", {"a", "b", "c", "A", "B", "C"}, 3, "phi", true,
                     "x(12a,3bc) x(13a,2BC) x(13A,2bc) x(12A,3BC) - x(13a,2bc) x(12a,3BC) x(12A,3bc) x(13A,2BC)", "",
                     ""});
        c.push_back({"rk0-1", {"a", "b", "c", "a'", "A", "B", "C"}, 3, "phi", true,
                     "x(12a,13a') x(13a,2bc) x(12a',3BC) x(12A,3bc) x(13A,2BC)"
                     " - x(13a,12a') x(12a,3bc) x(13a',2BC) x(13A,2bc) x(12A,3BC)",
                     "", ""});
        c.push_back({"odd-vr-pl", {"a", "b", "c"}, 3, "phi_gr", false,
                     "p(1ab) p(12c) p(13c) x(123,1ac) - p(1ac) p(12c) p(13b) x(12a,13c)"
                     " + p(1ac) p(12b) p(13c) x(13a,12c)",
                     "p(1ac) p(12c) p(13c)", F3});
        c.push_back({"m.t-vr-pl", {"a", "b", "1'", "b'"}, 3, "phi_gr", false,
                     "p(1ab) p(1'2a) p(1'2b') x(1'ab,123) x(1'3a,12b')"
                     " - p(12a) p(1'ab) p(1'2b') x(1'2a,13b) x(1'3a,12b')"
                     " + p(1'ab) p(1'2a) p(12b') x(1'3a,12b) x(13a,1'2b')",
                     "p(1'ab) p(1'2a) p(1'2b') p(1'3a) p(12b')", F3});
        c.push_back({"m.t-vr-pl-2", {"a", "b", "1'", "2'", "b'"}, 3, "phi_gr", false,
                     "p(1ab) p(1'2a) p(1'2'b') x(1'ab,123) x(1'3a,12'b')"
                     " - p(12a) p(1'ab) p(1'2'b') x(1'2a,13b) x(1'3a,12'b')"
                     " + p(1'ab) p(1'2a) p(12'b') x(1'3a,12b) x(13a,1'2'b')",
                     "p(1'ab) p(1'2a) p(1'2'b') p(1'3a) p(12'b')", F3});
        c.push_back({"m.t-vr-pl-3", {"a", "b", "c", "a'", "b'", "c'"}, 3, "phi_gr", false,
                     "p(abc) x(a'bc,123) x(12a',3b'c') p(13a') p(2b'c') p(23a')"
                     " - p(12a) x(12a',3bc) x(13a',2b'c') p(23a') p(a'bc) p(3b'c')"
                     " + p(13a) x(13a',2bc) x(12a',3b'c') p(23a') p(a'bc) p(2b'c')"
                     " - p(23a) x(23a',1bc) x(12a',3b'c') p(13a') p(a'bc) p(2b'c')",
                     h3, F4});
        // First term corrected: the printed p(a'bc) factor breaks φ(f) = hF, p(2b'c') restores it.
        c.push_back({"m.t-vr-pl-3'", {"a", "b", "c", "a'", "b'", "c'"}, 3, "phi_gr", false,
                     "p(abc) x(a'bc,123) x(12a',3b'c') p(13a') p(2b'c') p(23a')"
                     " - p(12a) x(12a',3bc) x(13a',2b'c') p(23a') p(a'bc) p(3b'c')"
                     " + p(13a) x(13a',2bc) x(12a',3b'c') p(23a') p(a'bc) p(2b'c')"
                     " - p(23a) x(23a',1bc) x(13a',2b'c') p(12a') p(a'bc) p(3b'c')",
                     h3, F4});
        c.push_back({"m.t-vr-pl-3'-literal", {"a", "b", "c", "a'", "b'", "c'"}, 3, "phi_gr", false,
                     "p(abc) x(a'bc,123) x(12a',3b'c') p(13a') p(a'bc) p(23a')"
                     " - p(12a) x(12a',3bc) x(13a',2b'c') p(23a') p(a'bc) p(3b'c')"
                     " + p(13a) x(13a',2bc) x(12a',3b'c') p(23a') p(a'bc) p(2b'c')"
                     " - p(23a) x(23a',1bc) x(13a',2b'c') p(12a') p(a'bc) p(3b'c')",
                     h3, F4, false});
        c.push_back({"the-vr", {"a", "b", "c", "a'", "b'", "c'"}, 3, "phi_gr_rho", false,
                     "x(abc,23a') x(13a,2b'c') x(a'bc,123) x(12a',3b'c') x(23a,13a')"
                     " - x(23a,a'bc) x(12a,3b'c') x(12a',3bc) x(13a',2b'c') x(13a,23a')"
                     " + x(23a,a'bc) x(13a,2b'c') x(13a',2bc) x(12a',3b'c') x(13a,23a')"
                     " - x(23a,a'bc) x(13a,2b'c') x(23a',1bc) x(12a',3b'c') x(23a,13a')",
                     h3 + " p(13a) p(23a)", F4});
        c.push_back({"p-reducible", {"a", "b", "c"}, 3, "phi", true,
                     "p(123) p(13a) p(2bc) x(13b,23c) x(12a,3bc) - p(13b) p(23c) p(12a) x(123,3bc) x(13a,2bc)", "",
                     ""});
        return c;
    }();
    return cat;
}

const ExampleInfo& example_info(const std::string& family) {
    for (const auto& e : example_catalog())
        if (e.name == family) return e;
    throw InvalidParameter("unknown example family: " + family);
}

std::map<std::string, int> default_binding(const ExampleInfo& info) {
    std::map<std::string, int> b{{"1", 1}, {"2", 2}, {"3", 3}};
    int next = 4;
    for (const auto& l : info.letters) b[l] = next++;
    return b;
}

int default_ambient(const ExampleInfo& info) { return 3 + static_cast<int>(info.letters.size()); }

namespace {

std::vector<std::string> split_letters(std::string_view s, std::string_view whole) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\'') throw ParseError("stray prime in " + std::string(whole));
        if (!std::isalnum(static_cast<unsigned char>(s[i]))) throw ParseError("bad letter in " + std::string(whole));
        std::string l(1, s[i]);
        if (i + 1 < s.size() && s[i + 1] == '\'') {
            l += '\'';
            ++i;
        }
        out.push_back(l);
    }
    return out;
}

} // namespace

Polynomial parse_example(const std::string& text, const std::map<std::string, int>& binding, int d, int n) {
    auto resolve = [&](std::string_view sym) {
        Tuple raw;
        for (const auto& l : split_letters(sym, text)) {
            auto it = binding.find(l);
            if (it == binding.end()) throw InvalidParameter("letter " + l + " is not bound");
            raw.push_back(it->second);
        }
        if (static_cast<int>(raw.size()) != d) throw ParseError("index of wrong length in " + std::string(sym));
        return canonical_plucker(raw, n);
    };
    Polynomial total;
    Polynomial term = 1;
    int sign = 1;
    bool open = false;
    std::istringstream in(text);
    std::string tok;
    auto flush = [&]() {
        if (open) total += term * Rational(sign);
        term = 1;
        sign = 1;
        open = false;
    };
    while (in >> tok) {
        if (tok == "+" || tok == "-") {
            flush();
            sign = tok == "-" ? -1 : 1;
            continue;
        }
        open = true;
        if (tok.size() < 4 || tok[1] != '(' || tok.back() != ')') throw ParseError("bad factor " + tok);
        std::string inner = tok.substr(2, tok.size() - 3);
        if (tok[0] == 'p') {
            auto s = resolve(inner);
            term *= s.is_zero() ? Polynomial() : var(VarId::P(s.index())) * Rational(s.sign);
        } else if (tok[0] == 'x') {
            auto comma = inner.find(',');
            if (comma == std::string::npos) throw ParseError("pair factor needs two halves: " + tok);
            auto s = resolve(std::string_view(inner).substr(0, comma));
            auto t = resolve(std::string_view(inner).substr(comma + 1));
            if (s.is_zero() || t.is_zero()) term = Polynomial();
            else term *= var(VarId::X(PairIndex(s.index(), t.index()))) * Rational(s.sign * t.sign);
        } else {
            throw ParseError("unknown factor " + tok);
        }
    }
    flush();
    return total;
}

Polynomial catalog_example(const std::string& family, const std::map<std::string, int>& binding, int n) {
    const ExampleInfo& info = example_info(family);
    std::map<std::string, int> b = default_binding(info);
    for (const auto& [k, v] : binding) {
        if (!b.count(k)) throw InvalidParameter("family " + family + " has no letter " + k);
        b[k] = v;
    }
    int m = n > 0 ? n : 0;
    std::set<int> used;
    for (const auto& [k, v] : b) {
        if (!used.insert(v).second) throw InvalidParameter("letters of " + family + " must be distinct");
        m = std::max(m, n > 0 ? n : v);
    }
    for (const auto& [k, v] : b)
        if (v < 1 || v > m) throw InvalidParameter("letter " + k + " out of range");
    return parse_example(info.source, b, info.d, m);
}

// ---------------------------------------------------------------- binomial properties

Polynomial phi_image(const Polynomial& f) {
    return f.substitute([](const VarId& v) -> std::optional<Polynomial> {
        if (v.tag != VarTag::x) return std::nullopt;
        return pp(PairIndex(MultiIndex(v.a), MultiIndex(v.b)));
    });
}

RbReport check_rb_properties(const Binomial& b, const Decomposition& dec) {
    auto pair_of = [](const VarId& v) { return PairIndex(MultiIndex(v.a), MultiIndex(v.b)); };
    auto side_linear = [&](const Monomial& m) {
        std::map<SortedPair, int> deg;
        for (const auto& [v, e] : m.factors())
            if (v.tag == VarTag::x) deg[pair_key(pair_of(v), dec)] += e;
        return std::all_of(deg.begin(), deg.end(), [](const auto& kv) { return kv.second <= 1; });
    };
    auto square_free = [&](const Monomial& m) {
        Polynomial img = phi_image(Polynomial::term(1, m));
        for (const auto& [v, e] : img.terms().begin()->first.factors())
            if (e > 1) return false;
        return true;
    };
    RbReport r;
    r.rho_linear = side_linear(b.plus) && side_linear(b.minus);
    r.phi_square_free = square_free(b.plus) && square_free(b.minus);
    r.has_common_factor = !b.plus.gcd(b.minus).is_one();
    for (const auto& [A, ea] : b.plus.factors()) {
        if (A.tag != VarTag::x) continue;
        for (const auto& [B, eb] : b.minus.factors()) {
            if (B.tag != VarTag::x || A == B) continue;
            PairIndex a = pair_of(A), bb = pair_of(B);
            if (!(pair_key(a, dec) == pair_key(bb, dec))) continue;
            if ((pp_mono(bb) * Monomial::of(A)).divides(b.plus) || (pp_mono(a) * Monomial::of(B)).divides(b.minus))
                r.wp_reducible = true;
        }
    }
    return r;
}

// ---------------------------------------------------------------- identities

std::optional<HplDecomposition> hpl_decompose(const Polynomial& f, const PluckerRelation& F, const Polynomial& h) {
    if (!h.is_monomial() || h.terms().begin()->second != 1) return std::nullopt;
    const Monomial& hm = h.terms().begin()->first;
    HplDecomposition out{F, h, std::vector<Polynomial>(F.terms.size())};
    for (const auto& [m, c] : f.terms()) {
        Monomial img = phi_image(Polynomial::term(1, m)).terms().begin()->first;
        if (!hm.divides(img)) return std::nullopt;
        Monomial q = img / hm;
        bool placed = false;
        for (std::size_t s = 0; s < F.terms.size() && !placed; ++s) {
            if (pp_mono(PairIndex(F.terms[s].u, F.terms[s].v)) == q) {
                out.parts[s].add_term(c * F.terms[s].sign, m);
                placed = true;
            }
        }
        if (!placed) return std::nullopt;
    }
    return out;
}

HplCheck check_hpl_identities(const HplDecomposition& dcp, const Polynomial& f) {
    HplCheck r;
    const auto& T = dcp.F.terms;
    Polynomial sum;
    for (std::size_t s = 0; s < T.size(); ++s) sum += dcp.parts[s] * Rational(T[s].sign);
    r.part_sum = sum == f;
    auto xs = [&](std::size_t s) { return xvar(PairIndex(T[s].u, T[s].v)); };
    r.identity1 = true;
    for (std::size_t s = 0; s < T.size(); ++s)
        for (std::size_t t = 0; t < T.size(); ++t)
            if (!phi_image(xs(t) * dcp.parts[s] - xs(s) * dcp.parts[t]).is_zero()) r.identity1 = false;
    Polynomial L = linearize(dcp.F);
    r.identity2 = true;
    for (std::size_t s = 0; s < T.size(); ++s)
        if (!phi_image(xs(s) * f - dcp.parts[s] * L).is_zero()) r.identity2 = false;
    return r;
}

FpLCheck check_f_eq_pl(const PluckerRelation& F, const PairIndex& ab, const Decomposition& dec) {
    FpLCheck r;
    Polynomial G = xvar(ab) * F.polynomial() - pp(ab) * linearize(F);
    SortedPair w = pair_key(PairIndex(F.terms.front().u, F.terms.front().v), dec);
    auto B = wp_binomials(w, dec);
    std::vector<Polynomial> gens;
    for (const auto& b : B) gens.push_back(b.polynomial());
    std::set<VarId> vars = G.variables();
    for (const auto& g : gens)
        for (const auto& v : g.variables()) vars.insert(v);
    TermOrder o = default_order(vars);
    auto gb = reduced_groebner(gens, o);
    r.reduces_to_zero = normal_form(G, gb.generators, o).is_zero();
    // Second route: the signed sum of the ℘-binomials pairing each term with (a,b).
    Polynomial combo;
    bool all_listed = true;
    for (const auto& t : F.terms) {
        PairIndex s(t.u, t.v);
        if (s == ab) continue;
        Polynomial piece = pp(s) * xvar(ab) - pp(ab) * xvar(s);
        bool listed = std::any_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return g == piece || g == -piece; });
        all_listed = all_listed && listed;
        combo += piece * Rational(t.sign);
    }
    r.exact_combination = all_listed && combo == G;
    return r;
}

// ---------------------------------------------------------------- random points

RationalPoint random_point(int d, int m, Rng& rng, int bound) {
    RationalPoint p{d, m, {}};
    for (const auto& u : multi_indices(d, m)) p.coords[u] = Rational(static_cast<long>(rng.nonzero(bound)));
    return p;
}

RationalPoint random_grassmannian_point(int d, int m, Rng& rng, int bound) {
    auto idx = multi_indices(d, m);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<std::vector<long long>> a(static_cast<std::size_t>(d), std::vector<long long>(static_cast<std::size_t>(m)));
        for (auto& row : a)
            for (auto& x : row) x = rng.uniform(-bound, bound);
        RationalPoint p{d, m, {}};
        bool ok = true;
        for (const auto& u : idx) {
            Rational v = minor(a, u);
            if (sgn(v) == 0) {
                ok = false;
                break;
            }
            p.coords[u] = v;
        }
        if (ok) return p;
    }
    throw ResourceExceeded("no matrix with all minors nonzero found");
}

RationalPoint ones_point(int d, int m) {
    RationalPoint p{d, m, {}};
    for (const auto& u : multi_indices(d, m)) p.coords[u] = 1;
    return p;
}

} // namespace torgr
