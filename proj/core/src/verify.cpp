#include "torgr/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "torgr/error.hpp"

namespace torgr {

namespace {

using Clock = std::chrono::steady_clock;

struct Ctx {
    SuiteOptions opts;
    Rng rng;
};

json strings(const std::vector<Polynomial>& fs) {
    json a = json::array();
    for (const auto& f : fs) a.push_back(to_string(f));
    return a;
}

json dec_json(const Decomposition& dec) { return to_json(dec); }

CheckResult verdict(bool ok, json details) {
    CheckResult r;
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    r.details = std::move(details);
    return r;
}

Polynomial X(std::initializer_list<int> u, std::initializer_list<int> v) {
    return var(VarId::X(PairIndex(MultiIndex(u), MultiIndex(v))));
}
Polynomial Y(std::initializer_list<int> u) { return var(VarId::Y(MultiIndex(u))); }

const std::vector<Decomposition>& orbit_instances() {
    static const std::vector<Decomposition> v{Decomposition::unit(2, 4), Decomposition::unit(2, 5),
                                              Decomposition({3, 1}, 2), Decomposition({2, 2, 1}, 2)};
    return v;
}

// Point with roughly half of its coordinates zero.
RationalPoint sparse_point(int d, int m, Rng& rng) {
    RationalPoint p{d, m, {}};
    for (const auto& u : multi_indices(d, m))
        p.coords[u] = rng.uniform(0, 1) == 0 ? Rational(0) : Rational(static_cast<long>(rng.nonzero(3)));
    return p;
}

Monomial random_monomial(const std::vector<VarId>& vars, Rng& rng, int max_exp) {
    std::vector<Monomial::Factor> f;
    for (const auto& v : vars) {
        int e = static_cast<int>(rng.uniform(0, max_exp));
        if (rng.uniform(0, 2) == 0 && e) f.emplace_back(v, e);
    }
    return Monomial(f);
}

// ---------------------------------------------------------------- checks

CheckResult check_h24_line(Ctx& c) {
    auto r = kernel_mh(build_map(MapKind::phi_gr_rho, Decomposition::unit(2, 4)), 4, c.opts.engine);
    std::vector<Polynomial> expected{X({1, 2}, {3, 4}) - X({1, 3}, {2, 4}) + X({1, 4}, {2, 3})};
    bool ok = r.generators == expected && !r.truncated;
    return verdict(ok, {{"instance", {{"d", 2}, {"n", 4}, {"kind", "phi-gr-rho"}}},
                        {"generators", strings(r.generators)},
                        {"expected", strings(expected)}});
}

CheckResult check_h_quotient(Ctx& c) {
    auto r = h_quotient_projection(Decomposition({3, 1}, 2), 4, c.opts.engine);
    std::vector<Polynomial> expected{Y({1, 2}) * Y({3, 4}) - Y({1, 3}) * Y({2, 4}) + Y({2, 3}) * Y({1, 4})};
    MapSpec m = build_map(MapKind::y_projection, Decomposition({3, 1}, 2));
    std::vector<int> bideg = r.generators.size() == 1 ? block_degree(m, r.generators[0].terms().begin()->first)
                                                      : std::vector<int>{};
    bool ok = r.generators == expected && r.multi_homogeneous && !r.truncated;
    return verdict(ok, {{"instance", {{"blocks", {3, 1}}, {"d", 2}}},
                        {"generators", strings(r.generators)},
                        {"expected", strings(expected)},
                        {"block_degree", bideg}});
}

CheckResult check_orbit_buchberger(Ctx& c) {
    json cases = json::array();
    bool ok = true;
    for (const auto& dec : orbit_instances())
        for (int k = 0; k < 3; ++k) {
            RationalPoint p = random_grassmannian_point(dec.d(), dec.total(), c.rng);
            TermOrder o = orbit_order(dec);
            auto G = orbit_gb(p, dec, true);
            bool gb = is_groebner(G, o);
            bool red = is_reduced(G, o);
            json row{{"decomposition", dec_json(dec)}, {"size", G.size()}, {"buchberger", gb}, {"reduced", red}};
            if (!(gb && red)) row["point"] = to_json(p);
            ok = ok && gb && red;
            cases.push_back(row);
        }
    return verdict(ok, {{"cases", cases}});
}

CheckResult check_orbit_oracle(Ctx& c) {
    json cases = json::array();
    bool ok = true;
    for (const auto& dec : orbit_instances())
        for (int k = 0; k < 3; ++k) {
            RationalPoint p = random_grassmannian_point(dec.d(), dec.total(), c.rng);
            TermOrder o = orbit_order(dec);
            auto direct = reduced_groebner(orbit_gb(p, dec), o, c.opts.engine).generators;
            auto kernel = kernel_mh(build_map(MapKind::zeta_p, dec, std::nullopt, p), 2 * dec.d() + 4, c.opts.engine);
            bool eq = direct == kernel.generators && !kernel.truncated;
            json row{{"decomposition", dec_json(dec)}, {"size", direct.size()}, {"equal", eq}};
            if (!eq) {
                row["point"] = to_json(p);
                row["orbit_gb"] = strings(direct);
                row["kernel"] = strings(kernel.generators);
            }
            ok = ok && eq;
            cases.push_back(row);
        }
    return verdict(ok, {{"cases", cases}});
}

CheckResult check_hilbert(Ctx& c) {
    const std::vector<long long> baseline{1, 6, 19, 44, 85};
    auto ones = hilbert_orbit(ones_point(2, 4), Decomposition::unit(2, 4), 4);
    bool ok = ones == baseline;
    json cases = json::array();
    for (const auto& dec : orbit_instances()) {
        std::vector<long long> ref;
        bool agree = true;
        json pts = json::array();
        for (int k = 0; k < 5; ++k) {
            RationalPoint p = random_point(dec.d(), dec.total(), c.rng);
            auto h = hilbert_orbit(p, dec, 4);
            if (k == 0) ref = h;
            if (h != ref) {
                agree = false;
                pts.push_back({{"point", to_json(p)}, {"values", h}});
            }
        }
        json row{{"decomposition", dec_json(dec)}, {"values", ref}, {"agree", agree}};
        if (!agree) row["disagreeing"] = pts;
        ok = ok && agree;
        cases.push_back(row);
    }
    return verdict(ok, {{"baseline", ones}, {"expected_baseline", baseline}, {"cases", cases}});
}

CheckResult check_standard_monomials(Ctx&) {
    bool ok = true;
    json cases = json::array();
    for (int n : {4, 5}) {
        Decomposition dec = Decomposition::unit(2, n);
        TermOrder o = sorting_order(dec);
        std::vector<Polynomial> gb;
        for (const auto& b : sorted_gb(dec)) gb.push_back(b.polynomial());
        auto lead = leading_monomials(gb, o);
        std::vector<VarId> vars;
        for (const auto& a : block_strings(dec)) vars.push_back(VarId::XA(a));
        bool is_gb = is_groebner(gb, o);
        for (int deg = 0; deg <= 3; ++deg) {
            // All monomials of this degree, then those avoiding the leading terms.
            std::vector<Monomial> all{Monomial()};
            for (int k = 0; k < deg; ++k) {
                std::set<Monomial> next;
                for (const auto& m : all)
                    for (const auto& v : vars) next.insert(m * Monomial::of(v));
                all.assign(next.begin(), next.end());
            }
            std::vector<Monomial> standard;
            for (const auto& m : all)
                if (std::none_of(lead.begin(), lead.end(), [&](const Monomial& l) { return l.divides(m); }))
                    standard.push_back(m);
            auto sorted = sorted_monomials(dec, deg);
            bool eq = sorted == standard && is_gb;
            json row{{"n", n}, {"degree", deg}, {"count", standard.size()}, {"equal", eq}};
            if (!eq) {
                json a = json::array(), b = json::array();
                for (const auto& m : sorted) a.push_back(to_string(m));
                for (const auto& m : standard) b.push_back(to_string(m));
                row["sorted"] = a;
                row["standard"] = b;
            }
            ok = ok && eq;
            cases.push_back(row);
        }
    }
    return verdict(ok, {{"cases", cases}});
}

CheckResult check_examples(Ctx&) {
    bool ok = true;
    json cases = json::array();
    for (const auto& info : example_catalog()) {
        const int n = default_ambient(info);
        auto binding = default_binding(info);
        Polynomial f = catalog_example(info.name);
        MapSpec m = build_map(parse_kind(info.map), Decomposition::unit(info.d, n));
        auto mem = verify_kernel_membership(f, m);
        Polynomial image = apply_map(m, f, false);
        bool stated = false;
        if (info.maps_to_zero) {
            stated = image.is_zero();
        } else {
            Polynomial h = parse_example(info.h, binding, info.d, n);
            Polynomial F = parse_example(info.F, binding, info.d, n);
            stated = image == h * F;
        }
        json row{{"family", info.name}, {"map", info.map}, {"n", n}, {"member", mem.member},
                 {"route", mem.certificate.route}, {"stated_image", stated}, {"battery", info.battery}};
        if (!(mem.member && stated)) {
            row["relation"] = to_string(f);
            row["image"] = to_string(image);
        }
        if (info.battery) ok = ok && mem.member && stated;
        cases.push_back(row);
    }
    return verdict(ok, {{"cases", cases}});
}

CheckResult check_identities(Ctx&) {
    bool ok = true;
    json cases = json::array();
    auto f_eq_pl = [&](const PluckerRelation& F, const Decomposition& dec, const std::string& label) {
        SortedPair w = pair_key(PairIndex(F.terms.front().u, F.terms.front().v), dec);
        bool all = true;
        for (const auto& ab : lambda_w(w, dec)) {
            auto r = check_f_eq_pl(F, ab, dec);
            if (!(r.reduces_to_zero && r.exact_combination)) {
                all = false;
                cases.push_back({{"failed", "F=pL"}, {"relation", label}, {"pair", ab.str()},
                                 {"reduces_to_zero", r.reduces_to_zero}, {"exact_combination", r.exact_combination}});
            }
        }
        return all;
    };
    auto hpl = [&](const Polynomial& f, const PluckerRelation& F, const Polynomial& h, const std::string& label) {
        auto d = hpl_decompose(f, F, h);
        bool good = false;
        if (d) {
            auto r = check_hpl_identities(*d, f);
            good = r.part_sum && r.identity1 && r.identity2;
        }
        if (!good) cases.push_back({{"failed", "h-pl"}, {"relation", label}, {"decomposed", d.has_value()}});
        return good;
    };
    int count = 0;
    for (int n : {4, 5}) {
        Decomposition dec = Decomposition::unit(2, n);
        for (const auto& F : plucker_relations(2, n)) {
            const std::string label = to_string(F.polynomial());
            ok = f_eq_pl(F, dec, label) && ok;
            ok = hpl(linearize(F), F, 1, label) && ok;
            ++count;
        }
    }
    for (const auto& info : example_catalog()) {
        if (info.maps_to_zero || !info.battery) continue;
        const int n = default_ambient(info);
        auto binding = default_binding(info);
        Decomposition dec = Decomposition::unit(info.d, n);
        PluckerRelation F = relation_of(parse_example(info.F, binding, info.d, n));
        Polynomial h = parse_example(info.h, binding, info.d, n);
        Polynomial f = catalog_example(info.name);
        // Canonical index signs can leave h = -monomial; both identities are linear in f.
        if (h.is_monomial() && h.terms().begin()->second < 0) {
            h = -h;
            f = -f;
        }
        ok = f_eq_pl(F, dec, info.name) && ok;
        ok = hpl(f, F, h, info.name) && ok;
        ++count;
    }
    return verdict(ok, {{"relations_checked", count}, {"failures", cases}});
}

CheckResult check_cubic_kernel(Ctx&) {
    bool ok = true;
    json cases = json::array();
    for (int n : {5, 6}) {
        MapSpec m = build_map(MapKind::phi_rho, Decomposition::unit(2, n));
        int good = 0;
        auto cubics = cubic_binomials(n);
        for (const auto& b : cubics) {
            bool mem = verify_kernel_membership(b.polynomial(), m).member;
            // Second route: the two monomial images coincide.
            bool eq = phi_image(Polynomial::term(1, b.plus)) == phi_image(Polynomial::term(1, b.minus));
            if (mem && eq) ++good;
            else cases.push_back({{"n", n}, {"binomial", to_string(b.polynomial())}, {"member", mem}, {"images_equal", eq}});
        }
        ok = ok && good == static_cast<int>(cubics.size());
        cases.push_back({{"n", n}, {"count", cubics.size()}, {"members", good}});
    }
    return verdict(ok, {{"cases", cases}});
}

json quintic_json(const QuinticSteps& s) {
    auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json("resource-exceeded"); };
    return {{"g", to_string(s.g)},
            {"f", to_string(s.f)},
            {"cubic_prime", to_string(s.cubic_prime)},
            {"g_in_kernel", s.g_in_kernel},
            {"difference_matches", s.difference_matches},
            {"f_is_cubic", s.f_is_cubic},
            {"cubic_prime_is_relabelled", s.cubic_prime_is_relabelled},
            {"cubic_prime_in_cubic_ideal", opt(s.cubic_prime_in_cubic_ideal)},
            {"g_in_cubic_ideal", opt(s.g_in_cubic_ideal)}};
}

CheckResult check_conjecture(Ctx& c, int n) {
    auto rep = conjecture_experiment(n, n == 5 ? 8 : 5, c.opts.engine);
    json details = to_json(rep);
    CheckResult r;
    if (rep.status == "resource-exceeded") {
        r.status = CheckStatus::resource_exceeded;
        r.details = details;
        return r;
    }
    bool ok = rep.consistent;
    if (n == 5) {
        auto q = quintic_steps(c.opts.engine);
        details["quintic"] = quintic_json(q);
        ok = ok && q.g_in_kernel && q.difference_matches && q.f_is_cubic && q.cubic_prime_is_relabelled;
    }
    if (!ok) {
        for (const auto& v : rep.verdicts)
            if (!v.in_cubic_ideal) {
                details["witness"] = to_string(v.generator);
                break;
            }
    }
    return verdict(ok, details);
}

CheckResult check_engine(Ctx& c) {
    json out;
    bool ok = true;

    // Composite order axioms, with the weight matrix as an independent comparison.
    {
        Decomposition dec({2, 2, 1}, 2);
        TermOrder o = orbit_order(dec);
        const auto& vars = o.variables();
        auto by_matrix = [&](const Monomial& a, const Monomial& b) {
            for (const auto& row : o.matrix()) {
                long long x = 0, y = 0;
                for (std::size_t k = 0; k < vars.size(); ++k) {
                    x += row[k] * a.exponent(vars[k]);
                    y += row[k] * b.exponent(vars[k]);
                }
                if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
            }
            return std::strong_ordering::equal;
        };
        int bad = 0;
        json witness;
        for (int t = 0; t < 1000; ++t) {
            Monomial a = random_monomial(vars, c.rng, 3), b = random_monomial(vars, c.rng, 3),
                     m = random_monomial(vars, c.rng, 2);
            auto ab = compare(o, a, b), ba = compare(o, b, a), bm = compare(o, b, m), am = compare(o, a, m);
            bool good = ab == by_matrix(a, b) && (ab == 0) == (a == b) && ab == (0 <=> ba);
            good = good && compare(o, a * m, b * m) == ab && compare(o, Monomial(), a) != std::strong_ordering::greater;
            if (ab < 0 && bm < 0) good = good && am < 0;
            if (!good && witness.is_null()) witness = {to_string(a), to_string(b), to_string(m)};
            bad += !good;
        }
        out["order_axioms"] = {{"triples", 1000}, {"violations", bad}};
        if (!witness.is_null()) out["order_witness"] = witness;
        ok = ok && bad == 0;
    }

    // S-polynomials of binomials with coprime leading monomials reduce to zero.
    {
        std::vector<VarId> vars;
        for (const auto& u : multi_indices(2, 5)) vars.push_back(VarId::Z(u));
        TermOrder o = default_order({vars.begin(), vars.end()});
        int tested = 0, bad = 0;
        while (tested < 200) {
            auto bin = [&] {
                Polynomial f = Polynomial::term(1, random_monomial(vars, c.rng, 2)) -
                               Polynomial::term(Rational(static_cast<long>(c.rng.nonzero(5))), random_monomial(vars, c.rng, 2));
                return f;
            };
            Polynomial f = bin(), g = bin();
            if (f.size() != 2 || g.size() != 2) continue;
            if (!leading_monomial(f, o).coprime(leading_monomial(g, o))) continue;
            ++tested;
            if (!normal_form(s_polynomial(f, g, o), {f, g}, o).is_zero()) ++bad;
        }
        out["coprime_spairs"] = {{"pairs", tested}, {"nonzero", bad}};
        ok = ok && bad == 0;
    }

    // Reduction is idempotent and its trace reconstructs the input.
    {
        Decomposition dec = Decomposition::unit(2, 5);
        TermOrder o = sorting_order(dec);
        std::vector<Polynomial> gb;
        for (const auto& b : sorted_gb(dec)) gb.push_back(b.polynomial());
        const auto& vars = o.variables();
        int bad = 0;
        for (int t = 0; t < 200; ++t) {
            Polynomial f;
            for (int k = 0; k < 4; ++k)
                f += Polynomial::term(Rational(static_cast<long>(c.rng.nonzero(7))), random_monomial(vars, c.rng, 2));
            Reduction red = reduce(f, gb, o);
            Polynomial again = normal_form(red.remainder, gb, o);
            Polynomial rebuilt = red.remainder;
            for (const auto& s : red.trace) rebuilt += (s.multiplier * gb[s.divisor]) * s.coefficient;
            if (again != red.remainder || rebuilt != f) ++bad;
        }
        out["reduce_idempotent"] = {{"polynomials", 200}, {"violations", bad}};
        ok = ok && bad == 0;
    }

    // Kernel generators of toric maps are binomials that map to zero and are block-homogeneous.
    {
        std::vector<MapSpec> maps{
            build_map(MapKind::phi, Decomposition::unit(2, 4)),
            build_map(MapKind::phi_rho, Decomposition::unit(2, 5)),
            build_map(MapKind::zeta, Decomposition({3, 1}, 2)),
            build_map(MapKind::zeta_p, Decomposition({2, 2, 1}, 2), std::nullopt, random_point(2, 5, c.rng)),
            build_map(MapKind::rho_bullet, Decomposition::unit(2, 5)),
        };
        json rows = json::array();
        for (const auto& m : maps) {
            auto r = kernel_mh(m, 4, c.opts.engine);
            int bad = 0;
            for (const auto& g : r.generators)
                if (g.size() != 2 || !apply_map(m, g).is_zero() || !is_block_homogeneous(m, g)) ++bad;
            rows.push_back({{"kind", kind_name(m.kind)}, {"generators", r.generators.size()}, {"violations", bad}});
            ok = ok && bad == 0;
        }
        out["kernel_binomials"] = rows;
    }

    // X-linear kernel binomials of phi factor as a monomial times a ℘-binomial.
    {
        Decomposition dec = Decomposition::unit(2, 4);
        MapSpec m = build_map(MapKind::phi, dec);
        auto r = kernel_mh(m, 4, c.opts.engine);
        std::set<Polynomial::TermMap> wp;
        for (const auto& w : nontrivial_pairs(dec))
            for (const auto& b : wp_binomials(w, dec)) {
                wp.insert(b.polynomial().terms());
                wp.insert((-b.polynomial()).terms());
            }
        int linear = 0, bad = 0;
        for (const auto& g : r.generators) {
            Binomial b = Binomial::of(make_monic(g, r.order));
            auto deg = block_degree(m, b.plus);
            if (deg.empty() || std::any_of(deg.begin(), deg.end() - 1, [](int e) { return e > 1; })) continue;
            ++linear;
            Monomial common = b.plus.gcd(b.minus);
            Binomial q{b.plus / common, b.minus / common};
            bool factor = wp.count(q.polynomial().terms()) > 0;
            if (!(factor && check_rb_properties(b, dec).wp_reducible)) ++bad;
        }
        out["rho_linear_factorization"] = {{"binomials", linear}, {"violations", bad}};
        ok = ok && bad == 0;
    }
    return verdict(ok, out);
}

CheckResult check_degenerate(Ctx& c) {
    bool ok = true;
    json cases = json::array();
    for (const auto& dec : {Decomposition::unit(2, 4), Decomposition({3, 1}, 2)}) {
        int degenerate = 0, agree = 0;
        json witness;
        for (int k = 0; k < 200; ++k) {
            RationalPoint p = sparse_point(dec.d(), dec.total(), c.rng);
            try {
                auto t = theta_eval(p, dec);
                degenerate += t.degenerate;
                ++agree;
            } catch (const std::logic_error&) {
                if (witness.is_null()) witness = to_json(p);
            }
        }
        json row{{"decomposition", dec_json(dec)}, {"points", 200}, {"agree", agree}, {"degenerate", degenerate}};
        if (!witness.is_null()) row["witness"] = witness;
        ok = ok && agree == 200;
        cases.push_back(row);
    }
    return verdict(ok, {{"cases", cases}});
}

const std::vector<std::pair<std::string, std::function<CheckResult(Ctx&)>>>& registry() {
    static const std::vector<std::pair<std::string, std::function<CheckResult(Ctx&)>>> r{
        {"h24-line", check_h24_line},
        {"h-quotient-31", check_h_quotient},
        {"orbit-gb-buchberger", check_orbit_buchberger},
        {"orbit-gb-oracle", check_orbit_oracle},
        {"hilbert-independence", check_hilbert},
        {"standard-monomials", check_standard_monomials},
        {"example-battery", check_examples},
        {"identity-suites", check_identities},
        {"cubic-kernel", check_cubic_kernel},
        {"conjecture-n5", [](Ctx& c) { return check_conjecture(c, 5); }},
        {"conjecture-n6", [](Ctx& c) { return check_conjecture(c, 6); }},
        {"engine-properties", check_engine},
        {"degenerate-locus", check_degenerate},
    };
    return r;
}

std::uint64_t id_seed(const std::string& id, std::uint64_t seed) {
    std::uint64_t h = 1469598103934665603ull; // FNV-1a
    for (unsigned char ch : id) h = (h ^ ch) * 1099511628211ull;
    return h ^ (seed * 0x9e3779b97f4a7c15ull);
}

} // namespace

std::string status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::resource_exceeded: return "resource-exceeded";
    }
    return "skipped";
}

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, fn] : registry()) v.push_back(id);
        return v;
    }();
    return ids;
}

CheckResult run_check(const std::string& id, const SuiteOptions& opts) {
    auto it = std::find_if(registry().begin(), registry().end(), [&](const auto& e) { return e.first == id; });
    if (it == registry().end()) throw InvalidParameter("unknown check id: " + id);
    Ctx ctx{opts, Rng(id_seed(id, opts.seed))};
    auto t0 = Clock::now();
    CheckResult r;
    try {
        r = it->second(ctx);
    } catch (const ResourceExceeded& e) {
        r.status = CheckStatus::resource_exceeded;
        r.details = {{"reason", e.what()}};
    }
    r.id = id;
    r.elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

std::vector<CheckResult> run_suite(const std::vector<std::string>& selection, const SuiteOptions& opts) {
    for (const auto& id : selection)
        if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end())
            throw InvalidParameter("unknown check id: " + id);
    std::vector<CheckResult> out(selection.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex mu;
    auto worker = [&] {
        for (std::size_t k; (k = next++) < selection.size();) {
            try {
                out[k] = run_check(selection[k], opts);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned par = std::max(1u, std::min<unsigned>(opts.parallelism, static_cast<unsigned>(selection.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < par; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

json to_json(const CheckResult& r) { return {{"id", r.id}, {"status", status_name(r.status)}, {"details", r.details}}; }

CheckResult check_result_from_json(const json& j) {
    CheckResult r;
    if (!j.is_object() || !j.contains("id") || !j.contains("status")) throw ParseError("check result lacks id or status");
    r.id = j.at("id").get<std::string>();
    const std::string s = j.at("status").get<std::string>();
    bool known = false;
    for (auto st : {CheckStatus::pass, CheckStatus::fail, CheckStatus::skipped, CheckStatus::resource_exceeded})
        if (status_name(st) == s) {
            r.status = st;
            known = true;
        }
    if (!known) throw ParseError("unknown check status " + s);
    r.details = j.value("details", json::object());
    return r;
}

json report_document(const std::vector<CheckResult>& results, const SuiteOptions& opts) {
    json checks = json::array();
    std::map<std::string, int> counts;
    for (const auto& r : results) {
        checks.push_back(to_json(r));
        ++counts[status_name(r.status)];
    }
    return document("verify-report", {{"seed", opts.seed},
                                      {"budget",
                                       {{"max_basis", opts.engine.budget.max_basis},
                                        {"max_spairs", opts.engine.budget.max_spairs},
                                        {"max_seconds", opts.engine.budget.max_seconds}}},
                                      {"checks", checks},
                                      {"counts", counts}});
}

} // namespace torgr
