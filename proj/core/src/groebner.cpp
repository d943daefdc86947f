#include "torgr/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <thread>

#include "torgr/error.hpp"

namespace torgr {

namespace {

// Dense exponent vectors over the columns of one term order.
struct Mono {
    std::vector<int> e;
    std::uint64_t sev = 0; // bit (i mod 64) set when e[i] > 0
    long long w0 = 0;      // first matrix row applied to e

    bool divides(const Mono& o) const {
        if (sev & ~o.sev) return false;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    bool operator==(const Mono& o) const { return e == o.e; }
};

struct Term {
    Mono m;
    Rational c;
};

using Poly = std::vector<Term>; // strictly decreasing monomials

class Engine {
public:
    Engine(const TermOrder& o, const std::map<VarId, int>& grading) : order_(o) {
        vars_ = o.variables();
        const auto& mat = o.matrix();
        row0_ = mat.empty() ? std::vector<long long>(vars_.size(), 0) : mat[0];
        for (std::size_t r = 1; r < mat.size(); ++r) {
            std::vector<std::pair<int, long long>> sparse;
            for (std::size_t j = 0; j < mat[r].size(); ++j)
                if (mat[r][j] != 0) sparse.emplace_back(static_cast<int>(j), mat[r][j]);
            rows_.push_back(std::move(sparse));
        }
        gw_.assign(vars_.size(), 1);
        for (std::size_t j = 0; j < vars_.size(); ++j) {
            auto it = grading.find(vars_[j]);
            if (it != grading.end()) {
                if (it->second <= 0) throw InvalidParameter("grading weights must be positive");
                gw_[j] = it->second;
            }
        }
    }

    std::size_t nvars() const { return vars_.size(); }

    void finish(Mono& m) const {
        m.sev = 0;
        m.w0 = 0;
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] > 0) m.sev |= std::uint64_t{1} << (i % 64);
            m.w0 += row0_[i] * m.e[i];
        }
    }

    int cmp(const Mono& a, const Mono& b) const {
        if (a.w0 != b.w0) return a.w0 > b.w0 ? 1 : -1;
        for (const auto& row : rows_) {
            long long s = 0;
            for (auto [j, c] : row) s += c * (a.e[static_cast<std::size_t>(j)] - b.e[static_cast<std::size_t>(j)]);
            if (s != 0) return s > 0 ? 1 : -1;
        }
        return 0;
    }

    long long grade(const Mono& m) const {
        long long d = 0;
        for (std::size_t i = 0; i < m.e.size(); ++i) d += gw_[i] * m.e[i];
        return d;
    }

    Mono mul(const Mono& a, const Mono& b) const {
        Mono r;
        r.e.resize(a.e.size());
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
        r.sev = a.sev | b.sev;
        r.w0 = a.w0 + b.w0;
        return r;
    }

    Mono quo(const Mono& a, const Mono& b) const {
        Mono r;
        r.e.resize(a.e.size());
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] - b.e[i];
        finish(r);
        return r;
    }

    Mono lcm(const Mono& a, const Mono& b) const {
        Mono r;
        r.e.resize(a.e.size());
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        finish(r);
        return r;
    }

    static bool coprime(const Mono& a, const Mono& b) {
        if ((a.sev & b.sev) == 0) return true;
        for (std::size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] > 0 && b.e[i] > 0) return false;
        return true;
    }

    Mono to_mono(const Monomial& m) const {
        Mono r;
        r.e.assign(vars_.size(), 0);
        for (const auto& [v, k] : m.factors()) {
            int p = order_.position(v);
            if (p < 0) throw InvalidParameter("variable not ranked by the order: " + v.name());
            r.e[static_cast<std::size_t>(p)] = k;
        }
        finish(r);
        return r;
    }

    Monomial to_monomial(const Mono& m) const {
        std::vector<Monomial::Factor> f;
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] > 0) f.emplace_back(vars_[i], m.e[i]);
        return Monomial(std::move(f));
    }

    Poly to_poly(const Polynomial& f) const {
        Poly p;
        p.reserve(f.size());
        for (const auto& [m, c] : f.terms()) p.push_back({to_mono(m), c});
        std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return cmp(a.m, b.m) > 0; });
        return p;
    }

    Polynomial to_polynomial(const Poly& p) const {
        Polynomial f;
        for (const auto& t : p) f.add_term(t.c, to_monomial(t.m));
        return f;
    }

    // a[from..] - c * t * b[1..], used after the leading terms cancel.
    Poly sub_mul(const Poly& a, std::size_t from, const Rational& c, const Mono& t, const Poly& b) const {
        Poly out;
        out.reserve(a.size() - from + b.size());
        std::size_t i = from, j = 1;
        Rational tmp;
        while (i < a.size() || j < b.size()) {
            if (j == b.size()) {
                out.push_back(a[i++]);
                continue;
            }
            Mono tb = mul(t, b[j].m);
            int s = i == a.size() ? -1 : cmp(a[i].m, tb);
            if (s > 0) {
                out.push_back(a[i++]);
            } else if (s < 0) {
                tmp = -c * b[j].c;
                out.push_back({std::move(tb), tmp});
                ++j;
            } else {
                tmp = a[i].c - c * b[j].c;
                if (sgn(tmp) != 0) out.push_back({std::move(tb), tmp});
                ++i;
                ++j;
            }
        }
        return out;
    }

    struct Step {
        std::size_t divisor;
        Mono mult;
        Rational coef;
    };

    // Full reduction of f by the listed reducers (leading coefficients arbitrary).
    Poly nf(Poly f, const std::vector<const Poly*>& red, std::vector<Step>* steps = nullptr,
            const std::vector<std::size_t>* ids = nullptr) const {
        Poly rem;
        std::size_t start = 0;
        while (start < f.size()) {
            const Term& lead = f[start];
            std::size_t k = 0;
            for (; k < red.size(); ++k)
                if ((*red[k])[0].m.divides(lead.m)) break;
            if (k == red.size()) {
                rem.push_back(lead);
                ++start;
                continue;
            }
            const Poly& g = *red[k];
            Rational q = lead.c / g[0].c;
            Mono t = quo(lead.m, g[0].m);
            if (steps) steps->push_back({ids ? (*ids)[k] : k, t, q});
            f = sub_mul(f, start + 1, q, t, g);
            start = 0;
        }
        return rem;
    }

    Poly spoly(const Poly& f, const Poly& g) const {
        Mono l = lcm(f[0].m, g[0].m);
        Mono tf = quo(l, f[0].m), tg = quo(l, g[0].m);
        // s = g0.c * tf * f - f0.c * tg * g
        Poly a;
        a.reserve(f.size());
        for (const auto& t : f) a.push_back({mul(tf, t.m), g[0].c * t.c});
        Rational c = f[0].c;
        return sub_mul(a, 1, c, tg, g);
    }

    static void monic(Poly& p) {
        if (p.empty() || p[0].c == 1) return;
        Rational inv = 1 / p[0].c;
        for (auto& t : p) t.c *= inv;
    }

private:
    TermOrder order_;
    std::vector<VarId> vars_;
    std::vector<long long> row0_;
    std::vector<std::vector<std::pair<int, long long>>> rows_;
    std::vector<long long> gw_;
};

void check_covered(const TermOrder& o, const std::vector<Polynomial>& fs) {
    for (const auto& f : fs)
        for (const auto& v : f.variables())
            if (!o.covers(v)) throw InvalidParameter("variable not ranked by the order: " + v.name());
}

class Clock {
public:
    explicit Clock(double limit) : limit_(limit), t0_(std::chrono::steady_clock::now()) {}
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }
    void check() const {
        if (limit_ > 0 && elapsed() > limit_) throw ResourceExceeded("time budget exceeded");
    }

private:
    double limit_;
    std::chrono::steady_clock::time_point t0_;
};

struct Pair {
    std::size_t i, j;
    Mono lcm;
    long long deg;
};

class Buchberger {
public:
    Buchberger(const Engine& eng, const BuchbergerOptions& opts) : E(eng), opt(opts), clock(opts.budget.max_seconds) {}

    void run(std::vector<Poly> gens) {
        std::sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) { return E.cmp(a[0].m, b[0].m) < 0; });
        for (auto& g : gens) {
            clock.check();
            Poly r = E.nf(std::move(g), reducers());
            if (!r.empty()) add(std::move(r));
            if (unit) return;
        }
        while (!pairs.empty()) {
            clock.check();
            long long d = pairs.front().deg;
            for (const auto& p : pairs) d = std::min(d, p.deg);
            const int cap = opt.budget.max_degree;
            if (cap > 0 && d > cap) {
                if (!opt.truncate) throw ResourceExceeded("degree budget exceeded at degree " + std::to_string(d));
                truncated = true;
                pairs.clear();
                break;
            }
            stats.max_pair_degree = std::max(stats.max_pair_degree, static_cast<int>(d));
            std::vector<Pair> batch, rest;
            for (auto& p : pairs) (p.deg == d ? batch : rest).push_back(std::move(p));
            pairs = std::move(rest);
            std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
                int c = E.cmp(a.lcm, b.lcm);
                if (c != 0) return c < 0;
                return std::tie(a.i, a.j) < std::tie(b.i, b.j);
            });
            auto red = reducers();
            std::vector<Poly> out(batch.size());
            auto work = [&](std::size_t k0, std::size_t step) {
                for (std::size_t k = k0; k < batch.size(); k += step)
                    out[k] = E.nf(E.spoly(basis[batch[k].i], basis[batch[k].j]), red);
            };
            unsigned nt = std::max(1u, opt.budget.threads);
            if (nt == 1 || batch.size() < 8) {
                work(0, 1);
            } else {
                std::vector<std::thread> ts;
                for (unsigned t = 0; t < nt; ++t) ts.emplace_back(work, t, nt);
                for (auto& t : ts) t.join();
            }
            clock.check();
            stats.pairs_reduced += batch.size();
            for (auto& r0 : out) {
                if (r0.empty()) {
                    ++stats.zero_reductions;
                    continue;
                }
                Poly r = E.nf(std::move(r0), reducers());
                if (r.empty()) {
                    ++stats.zero_reductions;
                    continue;
                }
                add(std::move(r));
                if (unit) return;
            }
        }
    }

    std::vector<Poly> result() const {
        std::vector<Poly> g;
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (active[k]) g.push_back(basis[k]);
        return g;
    }

    GroebnerStats stats;
    bool truncated = false;

private:
    std::vector<const Poly*> reducers() const {
        std::vector<const Poly*> r;
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (active[k]) r.push_back(&basis[k]);
        return r;
    }

    void add(Poly r) {
        Engine::monic(r);
        if (r.size() == 1 && std::all_of(r[0].m.e.begin(), r[0].m.e.end(), [](int x) { return x == 0; })) {
            basis.clear();
            active.clear();
            pairs.clear();
            basis.push_back(std::move(r));
            active.push_back(true);
            unit = true;
            return;
        }
        basis.push_back(std::move(r));
        active.push_back(false);
        update(basis.size() - 1);
        std::size_t live = static_cast<std::size_t>(std::count(active.begin(), active.end(), true));
        stats.peak_basis = std::max(stats.peak_basis, live);
        if (opt.budget.max_basis > 0 && live > opt.budget.max_basis) throw ResourceExceeded("basis size budget exceeded");
    }

    // Gebauer-Moeller installation of basis[h].
    void update(std::size_t h) {
        const Mono& lh = basis[h][0].m;
        std::vector<Pair> C;
        for (std::size_t g = 0; g < basis.size(); ++g) {
            if (!active[g]) continue;
            Mono l = E.lcm(basis[g][0].m, lh);
            long long dg = E.grade(l);
            C.push_back({g, h, std::move(l), dg});
        }
        std::vector<Pair> D;
        std::vector<char> cop;
        for (std::size_t k = 0; k < C.size(); ++k) {
            const Mono& lg = basis[C[k].i][0].m;
            if (Engine::coprime(lg, lh)) {
                D.push_back(C[k]);
                cop.push_back(1);
                continue;
            }
            bool dominated = false;
            for (std::size_t l = k + 1; l < C.size() && !dominated; ++l) dominated = C[l].lcm.divides(C[k].lcm);
            for (std::size_t l = 0; l < D.size() && !dominated; ++l) dominated = D[l].lcm.divides(C[k].lcm);
            if (!dominated) {
                D.push_back(C[k]);
                cop.push_back(0);
            } else {
                ++stats.chain_skipped;
            }
        }
        std::vector<Pair> nb;
        for (auto& p : pairs) {
            if (lh.divides(p.lcm) && !(E.lcm(basis[p.i][0].m, lh) == p.lcm) &&
                !(E.lcm(basis[p.j][0].m, lh) == p.lcm)) {
                ++stats.chain_skipped;
                continue;
            }
            nb.push_back(std::move(p));
        }
        for (std::size_t k = 0; k < D.size(); ++k) {
            if (cop[k]) {
                ++stats.coprime_skipped;
                continue;
            }
            nb.push_back(std::move(D[k]));
            ++stats.pairs_created;
        }
        pairs = std::move(nb);
        if (opt.budget.max_spairs > 0 && stats.pairs_created > opt.budget.max_spairs)
            throw ResourceExceeded("S-pair budget exceeded");
        for (std::size_t g = 0; g < basis.size(); ++g)
            if (active[g] && lh.divides(basis[g][0].m)) active[g] = false;
        active[h] = true;
    }

    const Engine& E;
    const BuchbergerOptions& opt;
    Clock clock;
    std::vector<Poly> basis;
    std::vector<bool> active;
    std::vector<Pair> pairs;
    bool unit = false;
};

std::vector<Poly> interreduce(const Engine& E, std::vector<Poly> g) {
    // Minimalize: drop elements whose leading monomial is divisible by another's.
    std::sort(g.begin(), g.end(), [&](const Poly& a, const Poly& b) { return E.cmp(a[0].m, b[0].m) < 0; });
    std::vector<Poly> mins;
    for (auto& p : g) {
        bool red = false;
        for (const auto& q : mins)
            if (q[0].m.divides(p[0].m)) red = true;
        if (!red) mins.push_back(std::move(p));
    }
    std::vector<Poly> out;
    for (std::size_t k = 0; k < mins.size(); ++k) {
        std::vector<const Poly*> others;
        for (std::size_t l = 0; l < mins.size(); ++l)
            if (l != k) others.push_back(&mins[l]);
        // Leading term stays; only the tail gets reduced.
        Poly tail(mins[k].begin() + 1, mins[k].end());
        Poly r = E.nf(std::move(tail), others);
        Poly p;
        p.push_back(mins[k][0]);
        p.insert(p.end(), r.begin(), r.end());
        Engine::monic(p);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Polynomial> export_all(const Engine& E, const std::vector<Poly>& g) {
    std::vector<Polynomial> out;
    out.reserve(g.size());
    for (const auto& p : g) out.push_back(E.to_polynomial(p));
    return out;
}

} // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& o) {
    if (f.is_zero() || g.is_zero()) throw InvalidParameter("S-polynomial of a zero polynomial");
    check_covered(o, {f, g});
    Engine E(o, {});
    Poly a = E.to_poly(f), b = E.to_poly(g);
    // Normalize to the monic convention: lcm/lt(f) f/lc(f) - lcm/lt(g) g/lc(g).
    Engine::monic(a);
    Engine::monic(b);
    return E.to_polynomial(E.spoly(a, b));
}

Reduction reduce(const Polynomial& f, const std::vector<Polynomial>& basis, const TermOrder& o, bool with_trace) {
    check_covered(o, basis);
    check_covered(o, {f});
    Engine E(o, {});
    std::vector<Poly> b;
    std::vector<std::size_t> ids;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].is_zero()) continue;
        b.push_back(E.to_poly(basis[k]));
        ids.push_back(k);
    }
    std::vector<const Poly*> red;
    for (const auto& p : b) red.push_back(&p);
    std::vector<Engine::Step> steps;
    Poly r = E.nf(E.to_poly(f), red, with_trace ? &steps : nullptr, &ids);
    Reduction out;
    out.remainder = E.to_polynomial(r);
    for (auto& s : steps) out.trace.push_back({s.divisor, E.to_monomial(s.mult), s.coef});
    return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const TermOrder& o) {
    return reduce(f, basis, o, false).remainder;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& o, const BuchbergerOptions& opts) {
    check_covered(o, gens);
    Engine E(o, opts.grading);
    std::vector<Poly> g;
    for (const auto& f : gens)
        if (!f.is_zero()) g.push_back(E.to_poly(f));
    Clock clock(0);
    Buchberger bb(E, opts);
    bb.run(std::move(g));
    GroebnerBasis out;
    out.order = o;
    out.generators = export_all(E, bb.result());
    out.truncated = bb.truncated;
    out.stats = bb.stats;
    out.stats.seconds = clock.elapsed();
    return out;
}

GroebnerBasis reduce_basis(const GroebnerBasis& gb) {
    Engine E(gb.order, {});
    std::vector<Poly> g;
    for (const auto& f : gb.generators)
        if (!f.is_zero()) g.push_back(E.to_poly(f));
    GroebnerBasis out = gb;
    out.generators = export_all(E, interreduce(E, std::move(g)));
    out.reduced = true;
    return out;
}

GroebnerBasis reduced_groebner(const std::vector<Polynomial>& gens, const TermOrder& o, const BuchbergerOptions& opts) {
    return reduce_basis(buchberger(gens, o, opts));
}

bool is_groebner(const std::vector<Polynomial>& basis, const TermOrder& o, bool skip_coprime) {
    check_covered(o, basis);
    Engine E(o, {});
    std::vector<Poly> b;
    for (const auto& f : basis)
        if (!f.is_zero()) b.push_back(E.to_poly(f));
    std::vector<const Poly*> red;
    for (const auto& p : b) red.push_back(&p);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            if (skip_coprime && Engine::coprime(b[i][0].m, b[j][0].m)) continue;
            if (!E.nf(E.spoly(b[i], b[j]), red).empty()) return false;
        }
    return true;
}

bool is_reduced(const std::vector<Polynomial>& basis, const TermOrder& o) {
    check_covered(o, basis);
    Engine E(o, {});
    std::vector<Poly> b;
    for (const auto& f : basis) {
        if (f.is_zero()) return false;
        b.push_back(E.to_poly(f));
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i][0].c != 1) return false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : b[j])
                if (b[i][0].m.divides(t.m)) return false;
        }
    }
    return true;
}

Membership ideal_member(const Polynomial& f, const std::vector<Polynomial>& gens, const TermOrder& o,
                        const BuchbergerOptions& opts) {
    Membership m;
    m.basis = reduced_groebner(gens, o, opts);
    m.certificate = reduce(f, m.basis.generators, o, true);
    // A zero remainder is a certificate even for a truncated basis.
    m.member = m.certificate.remainder.is_zero();
    return m;
}

GroebnerBasis eliminate(const std::vector<Polynomial>& gens, const std::vector<VarId>& front,
                        const BuchbergerOptions& opts, std::optional<TermOrder> back) {
    std::set<VarId> fr(front.begin(), front.end());
    if (!back) {
        std::set<VarId> rest;
        for (const auto& g : gens)
            for (const auto& v : g.variables())
                if (!fr.count(v)) rest.insert(v);
        back = default_order(rest);
    }
    TermOrder o = TermOrder::elimination(front, *back);
    GroebnerBasis gb = reduced_groebner(gens, o, opts);
    GroebnerBasis out;
    out.order = *back;
    out.reduced = true;
    out.truncated = gb.truncated;
    out.stats = gb.stats;
    for (const auto& g : gb.generators) {
        bool free = true;
        for (const auto& v : g.variables())
            if (fr.count(v)) free = false;
        if (free) out.generators.push_back(g);
    }
    return out;
}

GroebnerBasis kernel_of_monomial_map(const std::map<VarId, Polynomial>& images, const BuchbergerOptions& opts,
                                     std::optional<TermOrder> source_order) {
    return kernel_modulo(images, {}, opts, std::move(source_order));
}

GroebnerBasis kernel_modulo(const std::map<VarId, Polynomial>& images, const std::vector<Polynomial>& target_ideal,
                            const BuchbergerOptions& opts, std::optional<TermOrder> source_order) {
    std::set<VarId> targets;
    for (const auto& [v, img] : images) {
        if (!img.is_monomial()) throw InvalidParameter("image of " + v.name() + " is not a single term");
        for (const auto& t : img.variables()) targets.insert(t);
    }
    for (const auto& g : target_ideal)
        for (const auto& t : g.variables()) targets.insert(t);
    std::set<VarId> sources;
    for (const auto& [v, img] : images) {
        if (v.tag == VarTag::aux) throw InvalidParameter("source variables may not use the aux namespace");
        sources.insert(v);
    }
    // Targets get fresh names so that sources and targets may share variables.
    std::map<VarId, VarId> rename;
    std::vector<VarId> front;
    int k = 0;
    for (const auto& t : targets) {
        rename.emplace(t, VarId::Aux(k++));
        front.push_back(rename.at(t));
    }
    auto renamed = [&](const Polynomial& f) {
        return f.substitute([&](const VarId& v) -> std::optional<Polynomial> { return Polynomial::var(rename.at(v)); });
    };

    // The graph ideal is homogeneous once each source weighs as much as its image.
    std::map<VarId, int> gw;
    for (const auto& t : targets) {
        auto it = opts.grading.find(t);
        gw[rename.at(t)] = it == opts.grading.end() ? 1 : it->second;
    }
    std::vector<Polynomial> gens;
    int max_src = 1;
    for (const auto& [v, img] : images) {
        const Monomial& m = img.terms().begin()->first;
        int wdeg = 0;
        for (const auto& [t, e] : m.factors()) wdeg += e * gw.at(rename.at(t));
        if (wdeg == 0) wdeg = 1;
        gw[v] = wdeg;
        max_src = std::max(max_src, wdeg);
        gens.push_back(Polynomial::var(v) - renamed(img));
    }
    for (const auto& g : target_ideal) gens.push_back(renamed(g));

    BuchbergerOptions o2 = opts;
    o2.grading = gw;
    // A cap is given in source degree; scale it to the weighted grading.
    if (opts.budget.max_degree > 0) o2.budget.max_degree = opts.budget.max_degree * max_src;
    if (!source_order) source_order = default_order(sources);
    return eliminate(gens, front, o2, *source_order);
}

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& basis, const TermOrder& o) {
    std::vector<Monomial> out;
    for (const auto& f : basis)
        if (!f.is_zero()) out.push_back(leading_monomial(f, o));
    return out;
}

std::vector<long long> hilbert_function(const std::vector<Monomial>& leading, const std::vector<VarId>& ambient,
                                        const std::vector<int>& degrees) {
    std::map<VarId, int> pos;
    for (std::size_t i = 0; i < ambient.size(); ++i) pos[ambient[i]] = static_cast<int>(i);
    const std::size_t n = ambient.size();
    std::vector<std::vector<int>> gens;
    for (const auto& m : leading) {
        std::vector<int> e(n, 0);
        bool inside = true;
        for (const auto& [v, k] : m.factors()) {
            auto it = pos.find(v);
            if (it == pos.end()) inside = false;
            else e[static_cast<std::size_t>(it->second)] = k;
        }
        // A generator using a variable outside the ambient ring kills nothing there.
        if (inside) gens.push_back(std::move(e));
    }
    std::vector<long long> out;
    std::vector<int> cur(n, 0);
    auto divisible = [&]() {
        for (const auto& g : gens) {
            bool d = true;
            for (std::size_t i = 0; i < n && d; ++i) d = g[i] <= cur[i];
            if (d) return true;
        }
        return false;
    };
    for (int t : degrees) {
        if (t < 0) throw InvalidParameter("negative degree");
        long long count = 0;
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
            if (divisible()) return;
            if (left == 0) {
                ++count;
                return;
            }
            if (i == n) return;
            for (int e = left; e >= 0; --e) {
                cur[i] += e;
                rec(i + 1, left - e);
                cur[i] -= e;
            }
        };
        if (t == 0) count = divisible() ? 0 : 1;
        else if (n > 0) rec(0, t);
        out.push_back(count);
    }
    return out;
}

} // namespace torgr
