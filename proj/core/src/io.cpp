#include "torgr/io.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "torgr/error.hpp"

namespace torgr {

namespace {

Rational parse_rational(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
    q.canonicalize();
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator: " + s);
    return q;
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field ") + key);
    return j.at(key);
}

std::vector<VarId> vars_from(const json& j) {
    std::vector<VarId> out;
    for (const auto& s : j) out.push_back(parse_var(s.get<std::string>()));
    return out;
}

json names(const std::vector<VarId>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(v.name());
    return a;
}

json order_to_json(const TermOrder& o) {
    json j;
    switch (o.kind()) {
    case TermOrder::Kind::lex:
        j = {{"kind", "lex"}, {"ranking", names(o.variables())}};
        break;
    case TermOrder::Kind::degrevlex:
        j = {{"kind", "degrevlex"}, {"ranking", names(o.variables())}};
        break;
    case TermOrder::Kind::weighted:
        j = {{"kind", "weighted"}, {"weights", o.weights()}, {"tie", order_to_json(o.back())}};
        break;
    case TermOrder::Kind::composite: {
        json groups = json::array();
        for (const auto& g : o.groups()) groups.push_back({{"proxy", g.proxy.name()}, {"members", names(g.members)}});
        json inner = json::array();
        for (const auto& i : o.inner()) inner.push_back(order_to_json(i));
        j = {{"kind", "composite"}, {"groups", groups}, {"outer", order_to_json(o.outer())}, {"inner", inner}};
        break;
    }
    case TermOrder::Kind::elimination:
        j = {{"kind", "elimination"}, {"front", names(o.front())}, {"back", order_to_json(o.back())}};
        break;
    }
    return j;
}

TermOrder order_from_json(const json& j) {
    const std::string k = field(j, "kind").get<std::string>();
    if (k == "lex") return TermOrder::lex(vars_from(field(j, "ranking")));
    if (k == "degrevlex") return TermOrder::degrevlex(vars_from(field(j, "ranking")));
    if (k == "weighted")
        return TermOrder::weighted(field(j, "weights").get<std::vector<long long>>(),
                                   order_from_json(field(j, "tie")));
    if (k == "composite") {
        std::vector<TermOrder::Group> groups;
        for (const auto& g : field(j, "groups"))
            groups.push_back({parse_var(field(g, "proxy").get<std::string>()), vars_from(field(g, "members"))});
        std::vector<TermOrder> inner;
        for (const auto& i : field(j, "inner")) inner.push_back(order_from_json(i));
        return TermOrder::composite(groups, order_from_json(field(j, "outer")), inner);
    }
    if (k == "elimination")
        return TermOrder::elimination(vars_from(field(j, "front")), order_from_json(field(j, "back")));
    throw ParseError("unknown order kind " + k);
}

struct Lexer {
    const std::string& s;
    std::size_t i = 0;
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool at_end() {
        ws();
        return i >= s.size();
    }
    std::string word() {
        ws();
        std::size_t b = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '/')) ++i;
        if (b == i) throw ParseError("unexpected character at position " + std::to_string(i) + " in: " + s);
        return s.substr(b, i - b);
    }
};

} // namespace

// ---------------------------------------------------------------- polynomials

json to_json(const Polynomial& f) {
    std::set<VarId> vs = f.variables();
    std::vector<VarId> vars(vs.begin(), vs.end());
    std::map<VarId, std::size_t> col;
    for (std::size_t k = 0; k < vars.size(); ++k) col[vars[k]] = k;
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> e(vars.size(), 0);
        for (const auto& [v, x] : m.factors()) e[col.at(v)] = x;
        terms.push_back({{"c", c.get_str()}, {"e", e}});
    }
    return {{"vars", names(vars)}, {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j) {
    std::vector<VarId> vars = vars_from(field(j, "vars"));
    Polynomial f;
    for (const auto& t : field(j, "terms")) {
        auto e = field(t, "e").get<std::vector<int>>();
        if (e.size() != vars.size()) throw ParseError("exponent list length differs from variable list");
        std::vector<Monomial::Factor> fac;
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k]) fac.emplace_back(vars[k], e[k]);
        f.add_term(parse_rational(field(t, "c").get<std::string>()), Monomial(fac));
    }
    return f;
}

json to_json(const std::vector<Polynomial>& fs) {
    json a = json::array();
    for (const auto& f : fs) a.push_back(to_json(f));
    return a;
}

std::vector<Polynomial> polynomials_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected a list of polynomials");
    std::vector<Polynomial> out;
    for (const auto& x : j) out.push_back(polynomial_from_json(x));
    return out;
}

Polynomial parse_polynomial(const std::string& text) {
    Lexer L{text};
    Polynomial f;
    bool first = true;
    while (!L.at_end()) {
        int sign = 1;
        if (L.eat('-')) sign = -1;
        else if (!L.eat('+') && !first) throw ParseError("expected + or - in: " + text);
        first = false;
        Rational c = sign;
        Monomial m;
        do {
            std::string w = L.word();
            if (std::isdigit(static_cast<unsigned char>(w[0]))) {
                c *= parse_rational(w);
            } else {
                int e = 1;
                if (L.eat('^')) e = std::stoi(L.word());
                m = m * Monomial::of(parse_var(w), e);
            }
        } while (L.eat('*'));
        f.add_term(c, m);
    }
    if (first) throw ParseError("empty polynomial");
    return f;
}

// ---------------------------------------------------------------- domain objects

json to_json(const Decomposition& dec) { return {{"d", dec.d()}, {"blocks", dec.block_sizes()}}; }

Decomposition decomposition_from_json(const json& j) {
    return Decomposition(field(j, "blocks").get<Tuple>(), field(j, "d").get<int>());
}

json to_json(const RationalPoint& p) {
    json coords = json::array();
    for (const auto& [u, c] : p.coords) coords.push_back({{"u", u.entries()}, {"c", c.get_str()}});
    return {{"d", p.d}, {"m", p.m}, {"coords", coords}};
}

RationalPoint point_from_json(const json& j) {
    RationalPoint p{field(j, "d").get<int>(), field(j, "m").get<int>(), {}};
    for (const auto& c : field(j, "coords"))
        p.coords[MultiIndex(field(c, "u").get<Tuple>())] = parse_rational(field(c, "c").get<std::string>());
    for (const auto& u : multi_indices(p.d, p.m))
        if (!p.coords.count(u)) throw ParseError("point lacks coordinate " + u.str());
    if (p.coords.size() != multi_indices(p.d, p.m).size()) throw ParseError("point has stray coordinates");
    return p;
}

json to_json(const MultiProjPoint& y) {
    auto vec = [](const std::vector<Rational>& v) {
        json a = json::array();
        for (const auto& c : v) a.push_back(c.get_str());
        return a;
    };
    json yb = json::array(), wb = json::array();
    for (const auto& [a, v] : y.y_blocks) yb.push_back({{"a", a.letters}, {"v", vec(v)}});
    for (const auto& [w, v] : y.w_blocks) wb.push_back({{"odd", w.odd}, {"even", w.even}, {"v", vec(v)}});
    return {{"y_blocks", yb}, {"w_blocks", wb}};
}

MultiProjPoint multiproj_from_json(const json& j) {
    auto vec = [](const json& a) {
        std::vector<Rational> v;
        for (const auto& c : a) v.push_back(parse_rational(c.get<std::string>()));
        return v;
    };
    MultiProjPoint y;
    for (const auto& b : field(j, "y_blocks"))
        y.y_blocks[BlockString{field(b, "a").get<Tuple>()}] = vec(field(b, "v"));
    for (const auto& b : field(j, "w_blocks"))
        y.w_blocks[SortedPair{field(b, "odd").get<Tuple>(), field(b, "even").get<Tuple>()}] =
            vec(field(b, "v"));
    return y;
}

json to_json(const GroebnerStats& s, bool with_time) {
    json j{{"pairs_created", s.pairs_created},   {"coprime_skipped", s.coprime_skipped},
           {"chain_skipped", s.chain_skipped},   {"pairs_reduced", s.pairs_reduced},
           {"zero_reductions", s.zero_reductions}, {"peak_basis", s.peak_basis},
           {"max_pair_degree", s.max_pair_degree}};
    if (with_time) j["seconds"] = s.seconds;
    return j;
}

GroebnerStats stats_from_json(const json& j) {
    GroebnerStats s;
    s.pairs_created = field(j, "pairs_created").get<std::size_t>();
    s.coprime_skipped = field(j, "coprime_skipped").get<std::size_t>();
    s.chain_skipped = field(j, "chain_skipped").get<std::size_t>();
    s.pairs_reduced = field(j, "pairs_reduced").get<std::size_t>();
    s.zero_reductions = field(j, "zero_reductions").get<std::size_t>();
    s.peak_basis = field(j, "peak_basis").get<std::size_t>();
    s.max_pair_degree = field(j, "max_pair_degree").get<int>();
    if (j.contains("seconds")) s.seconds = j.at("seconds").get<double>();
    return s;
}

json to_json(const KernelReport& r) {
    return {{"kind", kind_name(r.kind)},
            {"generators", to_json(r.generators)},
            {"multi_homogeneous", r.multi_homogeneous},
            {"method", method_name(r.method)},
            {"truncated", r.truncated},
            {"degree_cap", r.degree_cap},
            {"order", order_to_json(r.order)},
            {"stats", to_json(r.stats)}};
}

KernelReport kernel_report_from_json(const json& j) {
    KernelReport r;
    r.kind = parse_kind(field(j, "kind").get<std::string>());
    r.generators = polynomials_from_json(field(j, "generators"));
    r.multi_homogeneous = field(j, "multi_homogeneous").get<bool>();
    const std::string m = field(j, "method").get<std::string>();
    if (m == "elimination") r.method = KernelReport::Method::elimination;
    else if (m == "block-marker") r.method = KernelReport::Method::block_marker;
    else if (m == "lattice-oracle") r.method = KernelReport::Method::lattice_oracle;
    else throw ParseError("unknown kernel method " + m);
    r.truncated = field(j, "truncated").get<bool>();
    r.degree_cap = field(j, "degree_cap").get<int>();
    r.order = order_from_json(field(j, "order"));
    r.stats = stats_from_json(field(j, "stats"));
    return r;
}

json to_json(const ConjectureReport& r) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts)
        verdicts.push_back({{"generator", to_string(v.generator)}, {"degree", v.degree}, {"in_cubic_ideal", v.in_cubic_ideal}});
    json degs = json::object();
    for (const auto& [d, c] : r.degree_counts) degs[std::to_string(d)] = c;
    json j{{"n", r.n}, {"status", r.status}, {"consistent", r.consistent}, {"verdicts", verdicts},
           {"generator_degrees", degs}};
    if (!r.note.empty()) j["note"] = r.note;
    if (r.kernel) j["kernel_truncated"] = r.kernel->truncated;
    if (r.relabelled_members) j["relabelled_cubic_members"] = *r.relabelled_members;
    if (r.saturated_members) j["saturated_members"] = *r.saturated_members;
    return j;
}

// ---------------------------------------------------------------- documents

json document(const std::string& kind, json data) { return {{"schema", kSchema}, {"kind", kind}, {"data", std::move(data)}}; }

json open_document(const json& doc, const std::string& kind) {
    if (!doc.is_object() || !doc.contains("schema")) throw ParseError("document has no schema field");
    if (!doc.at("schema").is_number_integer() || doc.at("schema").get<int>() != kSchema)
        throw SchemaMismatch("unsupported schema " + doc.at("schema").dump());
    if (!kind.empty() && field(doc, "kind") != kind)
        throw SchemaMismatch("expected a " + kind + " document, got " + doc.at("kind").dump());
    return field(doc, "data");
}

json parse_document_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

// ---------------------------------------------------------------- exports

CasDialect parse_dialect(const std::string& s) {
    if (s == "cas-a") return CasDialect::singular;
    if (s == "cas-b") return CasDialect::sage;
    throw InvalidParameter("unknown export dialect: " + s);
}

std::string export_cas(const std::vector<Polynomial>& ideal, const std::vector<VarId>& ring, CasDialect dialect) {
    std::vector<VarId> vars = ring;
    std::set<VarId> declared(ring.begin(), ring.end());
    std::set<VarId> used;
    for (const auto& f : ideal)
        for (const auto& v : f.variables()) used.insert(v);
    if (vars.empty()) {
        std::set<VarTag> tags;
        for (const auto& v : used) tags.insert(v.tag);
        if (tags.size() > 1) throw InvalidParameter("ideal mixes variable namespaces; declare the ring explicitly");
        vars.assign(used.begin(), used.end());
    } else {
        for (const auto& v : used)
            if (!declared.count(v)) throw InvalidParameter("variable " + v.name() + " is not declared in the ring");
    }
    if (vars.empty()) throw InvalidParameter("cannot declare a ring without variables");
    std::ostringstream out;
    std::string list;
    for (std::size_t k = 0; k < vars.size(); ++k) list += (k ? "," : "") + vars[k].name();
    std::vector<std::string> gens;
    for (const auto& f : ideal) gens.push_back(to_string(f));
    if (gens.empty()) gens.push_back("0");
    if (dialect == CasDialect::singular) {
        out << "ring R = 0,(" << list << "),dp;\n";
        out << "ideal I =\n";
        for (std::size_t k = 0; k < gens.size(); ++k) out << "  " << gens[k] << (k + 1 < gens.size() ? ",\n" : ";\n");
    } else {
        out << "R.<" << list << "> = PolynomialRing(QQ, order='degrevlex')\n";
        out << "I = R.ideal([\n";
        for (std::size_t k = 0; k < gens.size(); ++k) out << "  " << gens[k] << (k + 1 < gens.size() ? ",\n" : "\n");
        out << "])\n";
    }
    return out.str();
}

} // namespace torgr
