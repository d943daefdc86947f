#include "torgr/poly.hpp"

#include <algorithm>
#include <charconv>

#include "torgr/error.hpp"

namespace torgr {

namespace {

std::string join(const Tuple& t, const char* sep = "_") {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i > 0) s += sep;
        s += std::to_string(t[i]);
    }
    return s;
}

std::string letters(const Tuple& t) {
    bool wide = std::any_of(t.begin(), t.end(), [](int v) { return v >= 10; });
    if (wide) return join(t);
    std::string s;
    for (int v : t) s += static_cast<char>('0' + v);
    return s;
}

Tuple parse_ints(std::string_view s, std::string_view whole) {
    Tuple out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find('_', pos);
        if (next == std::string_view::npos) next = s.size();
        std::string_view part = s.substr(pos, next - pos);
        int v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
            throw ParseError("bad variable name: " + std::string(whole));
        out.push_back(v);
        pos = next + 1;
    }
    return out;
}

Tuple parse_letters(std::string_view s, std::string_view whole) {
    if (s.find('_') != std::string_view::npos) return parse_ints(s, whole);
    Tuple out;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("bad variable name: " + std::string(whole));
        out.push_back(c - '0');
    }
    if (out.empty()) throw ParseError("bad variable name: " + std::string(whole));
    return out;
}

std::pair<Tuple, Tuple> parse_halves(std::string_view s, std::string_view whole) {
    auto split = s.find("__");
    if (split == std::string_view::npos) throw ParseError("bad pair variable name: " + std::string(whole));
    return {parse_ints(s.substr(0, split), whole), parse_ints(s.substr(split + 2), whole)};
}

// Lex comparison on the default ranking: the smaller VarId is the larger variable.
bool lex_greater(const Monomial& a, const Monomial& b) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0, j = 0;
    while (i < fa.size() || j < fb.size()) {
        if (j == fb.size()) return true;
        if (i == fa.size()) return false;
        if (fa[i].first == fb[j].first) {
            if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
            ++i;
            ++j;
        } else {
            return fa[i].first < fb[j].first;
        }
    }
    return false;
}

} // namespace

std::string VarId::name() const {
    switch (tag) {
    case VarTag::p: return "p_" + join(a);
    case VarTag::z: return "z_" + join(a);
    case VarTag::x: return "x_" + join(a) + "__" + join(b);
    case VarTag::y: return "y_" + join(a);
    case VarTag::block_marker: return "T_" + join(a) + "__" + join(b);
    case VarTag::fiber_marker: return "m_" + letters(a);
    case VarTag::scale: return "s";
    case VarTag::block: return "w_" + letters(a);
    case VarTag::torus: return "t_" + join(a);
    case VarTag::aux: return "aux_" + join(a);
    }
    return "?";
}

VarId parse_var(std::string_view name) {
    if (name == "s") return VarId::S();
    auto us = name.find('_');
    if (us == std::string_view::npos || us + 1 >= name.size()) throw ParseError("bad variable name: " + std::string(name));
    std::string_view head = name.substr(0, us);
    std::string_view rest = name.substr(us + 1);
    if (head == "p") return {VarTag::p, MultiIndex(parse_ints(rest, name)).entries(), {}};
    if (head == "z") return {VarTag::z, MultiIndex(parse_ints(rest, name)).entries(), {}};
    if (head == "y") return {VarTag::y, MultiIndex(parse_ints(rest, name)).entries(), {}};
    if (head == "x") {
        auto [u, v] = parse_halves(rest, name);
        return VarId::X(PairIndex(MultiIndex(u), MultiIndex(v)));
    }
    if (head == "T") {
        auto [o, e] = parse_halves(rest, name);
        return {VarTag::block_marker, o, e};
    }
    if (head == "m") return {VarTag::fiber_marker, parse_letters(rest, name), {}};
    if (head == "w") return {VarTag::block, parse_letters(rest, name), {}};
    if (head == "t") return {VarTag::torus, parse_ints(rest, name), {}};
    if (head == "aux") return {VarTag::aux, parse_ints(rest, name), {}};
    throw ParseError("unknown variable namespace: " + std::string(name));
}

Monomial::Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(), [](const Factor& x, const Factor& y) { return x.first < y.first; });
    for (auto& [v, e] : factors) {
        if (e < 0) throw InvalidParameter("negative exponent");
        if (e == 0) continue;
        if (!f_.empty() && f_.back().first == v)
            f_.back().second += e;
        else
            f_.emplace_back(std::move(v), e);
    }
}

Monomial Monomial::of(const VarId& v, int e) { return Monomial({{v, e}}); }

int Monomial::degree() const {
    int d = 0;
    for (const auto& f : f_) d += f.second;
    return d;
}

int Monomial::exponent(const VarId& v) const {
    auto it = std::lower_bound(f_.begin(), f_.end(), v, [](const Factor& f, const VarId& x) { return f.first < x; });
    return it != f_.end() && it->first == v ? it->second : 0;
}

std::vector<VarId> Monomial::variables() const {
    std::vector<VarId> out;
    for (const auto& f : f_) out.push_back(f.first);
    return out;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < f_.size() || j < o.f_.size()) {
        if (j == o.f_.size() || (i < f_.size() && f_[i].first < o.f_[j].first)) {
            r.f_.push_back(f_[i++]);
        } else if (i == f_.size() || o.f_[j].first < f_[i].first) {
            r.f_.push_back(o.f_[j++]);
        } else {
            r.f_.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    std::size_t j = 0;
    for (const auto& [v, e] : f_) {
        while (j < o.f_.size() && o.f_[j].first < v) ++j;
        if (j == o.f_.size() || !(o.f_[j].first == v) || o.f_[j].second < e) return false;
    }
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    if (!o.divides(*this)) throw InvalidParameter("monomial division is not exact");
    Monomial r;
    std::size_t j = 0;
    for (const auto& [v, e] : f_) {
        int sub = 0;
        if (j < o.f_.size() && o.f_[j].first == v) sub = o.f_[j++].second;
        if (e > sub) r.f_.emplace_back(v, e - sub);
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < f_.size() || j < o.f_.size()) {
        if (j == o.f_.size() || (i < f_.size() && f_[i].first < o.f_[j].first)) {
            r.f_.push_back(f_[i++]);
        } else if (i == f_.size() || o.f_[j].first < f_[i].first) {
            r.f_.push_back(o.f_[j++]);
        } else {
            r.f_.emplace_back(f_[i].first, std::max(f_[i].second, o.f_[j].second));
            ++i;
            ++j;
        }
    }
    return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
    Monomial r;
    std::size_t j = 0;
    for (const auto& [v, e] : f_) {
        while (j < o.f_.size() && o.f_[j].first < v) ++j;
        if (j < o.f_.size() && o.f_[j].first == v) r.f_.emplace_back(v, std::min(e, o.f_[j].second));
    }
    return r;
}

bool Monomial::coprime(const Monomial& o) const { return gcd(o).is_one(); }

Polynomial::Polynomial(long c) {
    if (c != 0) t_.emplace(Monomial(), Rational(c));
}

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) t_.emplace(Monomial(), c);
}

Polynomial Polynomial::var(const VarId& v) { return term(1, Monomial::of(v)); }

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
    Polynomial p;
    p.add_term(c, m);
    return p;
}

int Polynomial::degree() const {
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.degree());
    return d;
}

std::set<VarId> Polynomial::variables() const {
    std::set<VarId> out;
    for (const auto& [m, c] : t_)
        for (const auto& f : m.factors()) out.insert(f.first);
    return out;
}

bool Polynomial::is_unit_binomial() const {
    if (t_.size() != 2) return false;
    auto it = t_.begin();
    const Rational& a = it->second;
    const Rational& b = std::next(it)->second;
    return (a == 1 && b == -1) || (a == -1 && b == 1);
}

void Polynomial::add_term(const Rational& c, const Monomial& m) {
    if (c == 0) return;
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rational(0) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.t_) add_term(c, m);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.t_) add_term(-c, m);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) r.add_term(ca * cb, ma * mb);
    return r;
}

Polynomial operator*(const Monomial& m, const Polynomial& p) {
    Polynomial r;
    for (const auto& [mp, c] : p.t_) r.t_.emplace_hint(r.t_.end(), m * mp, c);
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [m, v] : t_) v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw InvalidParameter("negative power");
    Polynomial r(1L), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

Polynomial Polynomial::substitute(const std::function<std::optional<Polynomial>(const VarId&)>& image) const {
    std::map<std::pair<VarId, int>, Polynomial> powers;
    Polynomial r;
    for (const auto& [m, c] : t_) {
        Polynomial acc(c);
        Monomial kept;
        for (const auto& [v, e] : m.factors()) {
            auto key = std::make_pair(v, e);
            auto it = powers.find(key);
            if (it == powers.end()) {
                auto img = image(v);
                Polynomial val = img ? img->pow(e) : Polynomial::term(1, Monomial::of(v, e));
                it = powers.emplace(key, std::move(val)).first;
            }
            acc = acc * it->second;
            if (acc.is_zero()) break;
        }
        r += acc;
    }
    return r;
}

Polynomial Polynomial::substitute(const std::map<VarId, Polynomial>& image) const {
    return substitute([&](const VarId& v) -> std::optional<Polynomial> {
        auto it = image.find(v);
        if (it == image.end()) return std::nullopt;
        return it->second;
    });
}

Rational Polynomial::evaluate(const std::function<Rational(const VarId&)>& value) const {
    Rational total = 0;
    std::map<VarId, Rational> cache;
    for (const auto& [m, c] : t_) {
        Rational term = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = cache.find(v);
            if (it == cache.end()) it = cache.emplace(v, value(v)).first;
            for (int k = 0; k < e; ++k) term *= it->second;
        }
        total += term;
    }
    return total;
}

Polynomial var(const VarId& v) { return Polynomial::var(v); }

Polynomial product(const std::vector<Polynomial>& factors) {
    Polynomial r(1L);
    for (const auto& f : factors) r *= f;
    return r;
}

std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string s;
    for (const auto& [v, e] : m.factors()) {
        if (!s.empty()) s += '*';
        s += v.name();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(), f.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return lex_greater(x.first, y.first); });
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& [m, c] = terms[i];
        Rational mag = abs(c);
        bool neg = c < 0;
        if (i == 0)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (m.is_one()) {
            s += mag.get_str();
        } else {
            if (mag != 1) s += mag.get_str() + "*";
            s += to_string(m);
        }
    }
    return s;
}

} // namespace torgr
