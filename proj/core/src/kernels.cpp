#include "torgr/kernels.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "torgr/error.hpp"

namespace torgr {

namespace {

const std::vector<std::pair<MapKind, std::string>>& kind_table() {
    static const std::vector<std::pair<MapKind, std::string>> t{
        {MapKind::phi, "phi"},
        {MapKind::phi_rho, "phi-rho"},
        {MapKind::phi_gr, "phi-gr"},
        {MapKind::phi_gr_rho, "phi-gr-rho"},
        {MapKind::zeta, "zeta"},
        {MapKind::zeta_p, "zeta-p"},
        {MapKind::rho_bullet, "rho-bullet"},
        {MapKind::y_projection, "h-quotient-projection"},
    };
    return t;
}

bool is_phi(MapKind k) {
    return k == MapKind::phi || k == MapKind::phi_rho || k == MapKind::phi_gr || k == MapKind::phi_gr_rho;
}

bool is_zeta(MapKind k) { return k == MapKind::zeta || k == MapKind::zeta_p; }

std::vector<VarId> p_vars(int d, int m) {
    std::vector<VarId> out;
    for (const auto& u : multi_indices(d, m)) out.push_back(VarId::P(u));
    return out;
}

std::vector<Polynomial> sorted_polys(const Decomposition& dec) {
    std::vector<Polynomial> out;
    for (const auto& b : sorted_gb(dec)) out.push_back(b.polynomial());
    return out;
}

Polynomial xv(int a, int b, int c, int e, int n) {
    auto s = canonical_plucker({a, b}, n);
    auto t = canonical_plucker({c, e}, n);
    return var(VarId::X(PairIndex(s.index(), t.index()))) * Rational(s.sign * t.sign);
}

} // namespace

std::string kind_name(MapKind k) {
    for (const auto& [kk, n] : kind_table())
        if (kk == k) return n;
    throw InvalidParameter("unknown map kind");
}

MapKind parse_kind(const std::string& s) {
    std::string t = s;
    std::replace(t.begin(), t.end(), '_', '-');
    for (const auto& [k, n] : kind_table())
        if (n == t) return k;
    if (t == "y-projection") return MapKind::y_projection;
    throw InvalidParameter("unknown map kind: " + s);
}

std::string method_name(KernelReport::Method m) {
    switch (m) {
    case KernelReport::Method::elimination: return "elimination";
    case KernelReport::Method::block_marker: return "block-marker";
    case KernelReport::Method::lattice_oracle: return "lattice-oracle";
    }
    return "elimination";
}

// ---------------------------------------------------------------- Plücker ideal

PluckerIdeal::PluckerIdeal(int d, int m) : d_(d), m_(m), rel_(plucker_relations(d, m)) {
    auto vars = p_vars(d, m);
    order_ = default_order({vars.begin(), vars.end()});
}

const GroebnerBasis& PluckerIdeal::basis(const BuchbergerOptions& opts) const {
    std::call_once(once_, [&] {
        std::vector<Polynomial> gens;
        for (const auto& F : rel_) gens.push_back(F.polynomial());
        gb_ = reduced_groebner(gens, order_, opts);
    });
    return gb_;
}

std::optional<std::pair<Polynomial, std::size_t>> PluckerIdeal::single_multiple(const Polynomial& f) const {
    if (f.is_zero()) return std::nullopt;
    const std::set<VarId> fv = f.variables();
    const auto& [m0, c0] = *f.terms().begin();
    for (std::size_t i = 0; i < rel_.size(); ++i) {
        const Polynomial F = rel_[i].polynomial();
        const std::set<VarId> Fv = F.variables();
        if (!std::includes(fv.begin(), fv.end(), Fv.begin(), Fv.end())) continue;
        for (const auto& [t, ct] : F.terms()) {
            if (!t.divides(m0)) continue;
            Polynomial h = Polynomial::term(c0 / ct, m0 / t);
            if (h * F == f) return std::make_pair(h, i);
        }
    }
    return std::nullopt;
}

std::shared_ptr<const PluckerIdeal> plucker_ideal(int d, int m) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const PluckerIdeal>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{d, m}];
    if (!slot) slot = std::make_shared<const PluckerIdeal>(d, m);
    return slot;
}

// ---------------------------------------------------------------- maps

bool MapSpec::is_gr() const {
    return kind == MapKind::phi_gr || kind == MapKind::phi_gr_rho || kind == MapKind::y_projection;
}

bool MapSpec::has_p_block() const { return kind == MapKind::phi || kind == MapKind::phi_gr; }

MapSpec build_map(MapKind kind, const Decomposition& dec, std::optional<std::vector<SortedPair>> subset,
                  std::optional<RationalPoint> point) {
    MapSpec m;
    m.kind = kind;
    m.dec = dec;
    if (point && kind != MapKind::zeta_p) throw InvalidParameter("only zeta-p takes a point");
    if (subset && !is_phi(kind)) throw InvalidParameter("only the phi maps take a pair subset");
    auto add = [&](const VarId& v, Polynomial img) {
        if (m.image.count(v)) return;
        m.source_vars.push_back(v);
        m.image.emplace(v, std::move(img));
    };
    if (is_phi(kind)) {
        m.subset = subset ? *subset : nontrivial_pairs(dec);
        for (const auto& w : m.subset)
            for (const auto& uv : lambda_w(w, dec)) {
                add(VarId::X(uv), pp(uv));
                m.x_blocks[w].push_back(VarId::X(uv));
            }
        if (m.has_p_block())
            for (const auto& v : p_vars(dec.d(), dec.total())) add(v, var(v));
    } else if (is_zeta(kind)) {
        if (kind == MapKind::zeta_p) {
            if (!point) throw InvalidParameter("zeta-p needs a point");
            if (point->d != dec.d() || point->m != dec.total())
                throw InvalidParameter("point does not match the decomposition");
            if (!point->all_nonzero()) throw PreconditionViolation("zeta-p needs a point with all coordinates nonzero");
            m.point = point;
        }
        for (const auto& a : block_strings(dec))
            for (const auto& u : fiber_indices(a, dec)) {
                Polynomial img = var(VarId::XA(a));
                if (m.point) img *= m.point->at(u);
                add(VarId::Z(u), img);
                m.y_blocks[a].push_back(VarId::Z(u));
            }
    } else if (kind == MapKind::rho_bullet) {
        for (const auto& a : block_strings(dec)) {
            Composition c = composition_of_string(a, dec);
            Monomial t;
            for (std::size_t al = 0; al < c.parts.size(); ++al)
                if (c.parts[al] > 0) t = t * Monomial::of(VarId::TT(static_cast<int>(al) + 1), c.parts[al]);
            add(VarId::XA(a), Polynomial::term(1, t));
            m.y_blocks[a].push_back(VarId::XA(a));
        }
    } else {
        for (const auto& a : block_strings(dec))
            for (const auto& u : fiber_indices(a, dec)) {
                add(VarId::Y(u), var(VarId::P(u)));
                m.y_blocks[a].push_back(VarId::Y(u));
            }
    }
    if (m.is_gr()) m.plucker = plucker_ideal(dec.d(), dec.total());
    return m;
}

Polynomial apply_map(const MapSpec& m, const Polynomial& f, bool reduce) {
    for (const auto& v : f.variables())
        if (!m.image.count(v)) throw InvalidParameter("variable " + v.name() + " is not a source variable of the map");
    Polynomial g = f.substitute(m.image);
    if (!reduce || g.is_zero()) return g;
    if (m.is_gr()) {
        if (m.plucker->single_multiple(g)) return Polynomial();
        return normal_form(g, m.plucker->basis().generators, m.plucker->order());
    }
    if (is_zeta(m.kind)) return normal_form(g, sorted_polys(m.dec), sorting_order(m.dec));
    return g;
}

// ---------------------------------------------------------------- Θ

ThetaValue theta_eval(const RationalPoint& p, const Decomposition& dec, std::optional<std::vector<SortedPair>> subset) {
    if (p.d != dec.d() || p.m != dec.total()) throw InvalidParameter("point does not match the decomposition");
    std::vector<SortedPair> pairs = subset ? *subset : sorted_pairs(dec);
    ThetaValue out;
    auto zero = [](const std::vector<Rational>& v) {
        return std::all_of(v.begin(), v.end(), [](const Rational& c) { return sgn(c) == 0; });
    };
    for (const auto& a : block_strings(dec)) {
        auto& blk = out.point.y_blocks[a];
        for (const auto& u : fiber_indices(a, dec)) blk.push_back(p.at(u));
        if (zero(blk)) out.degenerate = true;
    }
    for (const auto& w : pairs) {
        auto& blk = out.point.w_blocks[w];
        for (const auto& uv : lambda_w(w, dec)) blk.push_back(p.at(uv.u) * p.at(uv.v));
        if (zero(blk)) out.degenerate = true;
    }
    out.j_vanishes = true;
    auto value = [&](const VarId& v) { return p.value(v); };
    for (const auto& g : j_product(dec, pairs))
        if (sgn(Polynomial::term(1, g).evaluate(value)) != 0) {
            out.j_vanishes = false;
            break;
        }
    if (out.degenerate != out.j_vanishes) throw std::logic_error("degeneracy of the point disagrees with the J locus");
    return out;
}

// ---------------------------------------------------------------- kernels

std::vector<int> block_degree(const MapSpec& m, const Monomial& mono) {
    if (is_zeta(m.kind) || m.kind == MapKind::rho_bullet) return {mono.degree()};
    std::map<VarId, std::size_t> slot;
    std::size_t k = 0;
    for (const auto& [w, vs] : m.x_blocks) {
        for (const auto& v : vs) slot[v] = k;
        ++k;
    }
    for (const auto& [a, vs] : m.y_blocks) {
        for (const auto& v : vs) slot[v] = k;
        ++k;
    }
    std::vector<int> deg(k + 1, 0); // last entry is the P block
    for (const auto& [v, e] : mono.factors()) {
        auto it = slot.find(v);
        if (it != slot.end()) deg[it->second] += e;
        else if (v.tag == VarTag::p) deg[k] += e;
        else throw InvalidParameter("variable " + v.name() + " is not a source variable of the map");
    }
    return deg;
}

bool is_block_homogeneous(const MapSpec& m, const Polynomial& f) {
    if (f.is_zero()) return true;
    const auto first = block_degree(m, f.terms().begin()->first);
    for (const auto& [mono, c] : f.terms())
        if (block_degree(m, mono) != first) return false;
    return true;
}

KernelReport kernel_mh(const MapSpec& m, int degree_cap, const BuchbergerOptions& opts) {
    if (degree_cap < 1) throw InvalidParameter("degree cap must be at least 1");
    KernelReport r;
    r.kind = m.kind;
    r.degree_cap = degree_cap;
    std::map<VarId, Polynomial> images;
    std::vector<Polynomial> target;
    if (is_phi(m.kind)) {
        r.method = KernelReport::Method::block_marker;
        for (const auto& [w, vs] : m.x_blocks)
            for (const auto& v : vs) images[v] = m.image.at(v) * var(VarId::T(w));
        if (m.has_p_block())
            for (const auto& v : m.source_vars)
                if (v.tag == VarTag::p) images[v] = m.image.at(v) * var(VarId::S());
    } else if (m.kind == MapKind::y_projection) {
        r.method = KernelReport::Method::block_marker;
        for (const auto& [a, vs] : m.y_blocks)
            for (const auto& v : vs) images[v] = m.image.at(v) * var(VarId::M(a));
    } else {
        r.method = KernelReport::Method::elimination;
        images = m.image;
        if (is_zeta(m.kind)) target = sorted_polys(m.dec);
    }
    if (m.is_gr())
        for (const auto& F : m.plucker->relations()) target.push_back(F.polynomial());

    std::set<VarId> src(m.source_vars.begin(), m.source_vars.end());
    r.order = is_zeta(m.kind) ? orbit_order(m.dec) : default_order(src);
    BuchbergerOptions o = opts;
    o.budget.max_degree = degree_cap;
    o.truncate = true;
    GroebnerBasis gb = kernel_modulo(images, target, o, r.order);
    r.generators = gb.generators;
    r.truncated = gb.truncated;
    r.stats = gb.stats;
    r.multi_homogeneous = std::all_of(r.generators.begin(), r.generators.end(),
                                      [&](const Polynomial& g) { return is_block_homogeneous(m, g); });
    return r;
}

KernelReport h_quotient_projection(const Decomposition& dec, int degree_cap, const BuchbergerOptions& opts) {
    if (dec.blocks() != 2 || dec.size(2) != 1)
        throw PreconditionViolation("the quotient projection needs block sizes (n-1, 1)");
    return kernel_mh(build_map(MapKind::y_projection, dec), degree_cap, opts);
}

std::vector<long long> hilbert_orbit(const RationalPoint& p, const Decomposition& dec, int max_degree) {
    if (!p.all_nonzero()) throw PreconditionViolation("hilbert_orbit needs a point with all coordinates nonzero");
    if (max_degree < 0) throw InvalidParameter("maximal degree must be nonnegative");
    TermOrder o = orbit_order(dec);
    std::vector<Polynomial> gb = orbit_gb(p, dec, true);
    if (!is_groebner(gb, o) || !is_reduced(gb, o)) gb = reduced_groebner(gb, o).generators;
    std::vector<VarId> ambient;
    for (const auto& u : multi_indices(dec.d(), dec.total())) ambient.push_back(VarId::Z(u));
    std::vector<int> degrees;
    for (int k = 0; k <= max_degree; ++k) degrees.push_back(k);
    return hilbert_function(leading_monomials(gb, o), ambient, degrees);
}

KernelMembership verify_kernel_membership(const Polynomial& f, const MapSpec& m) {
    KernelMembership out;
    auto& c = out.certificate;
    c.image = apply_map(m, f, false);
    if (c.image.is_zero()) {
        c.route = "zero-image";
        out.member = true;
        return out;
    }
    if (m.is_gr()) {
        if (auto hit = m.plucker->single_multiple(c.image)) {
            c.route = "plucker-multiple";
            c.quotient = hit->first;
            c.relation = m.plucker->relations()[hit->second];
            out.member = true;
            return out;
        }
        c.route = "groebner-reduction";
        c.reduction = reduce(c.image, m.plucker->basis().generators, m.plucker->order());
    } else if (is_zeta(m.kind)) {
        c.route = "sorted-reduction";
        c.reduction = reduce(c.image, sorted_polys(m.dec), sorting_order(m.dec));
    } else {
        c.route = "zero-image";
        c.reduction.remainder = c.image;
        return out;
    }
    out.member = c.reduction.remainder.is_zero();
    return out;
}

// ---------------------------------------------------------------- cubic experiments

namespace {

struct CubicIdeal {
    TermOrder order;
    GroebnerBasis gb;
};

CubicIdeal cubic_ideal(int n, const BuchbergerOptions& opts) {
    MapSpec m = build_map(MapKind::phi_rho, Decomposition::unit(2, n));
    std::vector<Polynomial> gens;
    for (const auto& b : cubic_binomials(n)) gens.push_back(b.polynomial());
    TermOrder o = default_order({m.source_vars.begin(), m.source_vars.end()});
    return {o, reduced_groebner(gens, o, opts)};
}

} // namespace

std::vector<Polynomial> relabelled_cubics(int n) {
    std::vector<Polynomial> out;
    std::set<Polynomial::TermMap> seen;
    for (const auto& s : multi_indices(5, n)) {
        std::array<int, 5> L{s[0], s[1], s[2], s[3], s[4]};
        do {
            Polynomial f = cubic_form(L);
            if (f.is_zero() || seen.count((-f).terms())) continue;
            if (seen.insert(f.terms()).second) out.push_back(f);
        } while (std::next_permutation(L.begin(), L.end()));
    }
    return out;
}

QuinticSteps quintic_steps(const BuchbergerOptions& opts) {
    const int n = 6;
    auto x = [&](int a, int b, int c, int e) { return xv(a, b, c, e, n); };
    QuinticSteps s;
    s.g = x(1, 2, 3, 4) * x(1, 4, 3, 5) * x(1, 5, 2, 6) * x(1, 6, 2, 3) * x(1, 3, 2, 5) -
          x(1, 4, 2, 3) * x(1, 5, 3, 4) * x(1, 6, 2, 5) * x(1, 3, 2, 6) * x(1, 2, 3, 5);
    s.f = x(1, 2, 3, 4) * x(1, 4, 3, 5) * x(1, 5, 2, 3) - x(1, 4, 2, 3) * x(1, 5, 3, 4) * x(1, 2, 3, 5);
    s.cubic_prime = x(1, 5, 2, 6) * x(1, 6, 2, 3) * x(1, 3, 2, 5) - x(1, 6, 2, 5) * x(1, 3, 2, 6) * x(1, 5, 2, 3);
    MapSpec m = build_map(MapKind::phi_rho, Decomposition::unit(2, n));
    s.g_in_kernel = verify_kernel_membership(s.g, m).member;
    s.difference_matches =
        s.g - x(1, 6, 2, 5) * x(1, 3, 2, 6) * s.f == x(1, 2, 3, 4) * x(1, 4, 3, 5) * s.cubic_prime;
    s.f_is_cubic = s.f == cubic_form({1, 2, 3, 4, 5});
    Polynomial relabelled = cubic_form({1, 5, 2, 6, 3});
    s.cubic_prime_is_relabelled = s.cubic_prime == relabelled || s.cubic_prime == -relabelled;
    try {
        CubicIdeal C = cubic_ideal(n, opts);
        s.cubic_prime_in_cubic_ideal = normal_form(s.cubic_prime, C.gb.generators, C.order).is_zero();
        s.g_in_cubic_ideal = normal_form(s.g, C.gb.generators, C.order).is_zero();
    } catch (const ResourceExceeded&) {
    }
    return s;
}

ConjectureReport conjecture_experiment(int n, int degree_cap, const BuchbergerOptions& opts) {
    if (n != 5 && n != 6) throw InvalidParameter("the conjecture experiment runs for n = 5 or 6");
    ConjectureReport r;
    r.n = n;
    MapSpec m = build_map(MapKind::phi_rho, Decomposition::unit(2, n));
    try {
        r.kernel = kernel_mh(m, degree_cap, opts);
        CubicIdeal C = cubic_ideal(n, opts);
        r.consistent = true;
        for (const auto& g : r.kernel->generators) {
            ConjectureReport::Verdict v{g, g.degree(), normal_form(g, C.gb.generators, C.order).is_zero()};
            r.consistent = r.consistent && v.in_cubic_ideal;
            ++r.degree_counts[v.degree];
            r.verdicts.push_back(std::move(v));
        }
        r.status = r.consistent ? "consistent" : "inconsistent";
        try {
            TermOrder o = C.order;
            GroebnerBasis R = reduced_groebner(relabelled_cubics(n), o, opts);
            Polynomial prod = 1;
            for (const auto& v : m.source_vars) prod *= var(v);
            int in = 0, sat = 0;
            for (const auto& g : r.kernel->generators) {
                in += normal_form(g, R.generators, o).is_zero();
                sat += normal_form(g * prod, R.generators, o).is_zero();
            }
            r.relabelled_members = in;
            r.saturated_members = sat;
        } catch (const ResourceExceeded&) {
        }
        if (r.kernel->truncated) r.note = "kernel truncated at degree " + std::to_string(degree_cap);
    } catch (const ResourceExceeded& e) {
        r.status = "resource-exceeded";
        r.note = e.what();
    }
    return r;
}

} // namespace torgr
