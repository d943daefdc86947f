#include "torgr/order.hpp"

#include <algorithm>
#include <set>

#include "torgr/error.hpp"

namespace torgr {

struct TermOrder::Node {
    Kind kind = Kind::lex;
    std::vector<VarId> vars;
    std::map<VarId, int> pos;
    std::vector<std::vector<long long>> rows;

    std::vector<VarId> ranking;
    std::vector<long long> weights;
    std::vector<Group> groups;
    std::vector<TermOrder> inner;
    std::vector<VarId> front;
    std::shared_ptr<const Node> outer;
    std::shared_ptr<const Node> back;

    void index_vars() {
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (!pos.emplace(vars[i], static_cast<int>(i)).second)
                throw InvalidParameter("variable ranked twice: " + vars[i].name());
        }
    }
};

namespace {

// Rows of `sub` re-expressed over the columns of `vars`.
std::vector<std::vector<long long>> embed(const TermOrder& sub, const std::vector<VarId>& vars,
                                          const std::map<VarId, int>& pos) {
    std::vector<std::vector<long long>> out;
    for (const auto& row : sub.matrix()) {
        std::vector<long long> r(vars.size(), 0);
        for (std::size_t j = 0; j < sub.variables().size(); ++j) r[static_cast<std::size_t>(pos.at(sub.variables()[j]))] = row[j];
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

TermOrder::TermOrder() : TermOrder(lex({})) {}

TermOrder TermOrder::lex(std::vector<VarId> ranking) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::lex;
    n->vars = ranking;
    n->ranking = std::move(ranking);
    n->index_vars();
    for (std::size_t i = 0; i < n->vars.size(); ++i) {
        std::vector<long long> r(n->vars.size(), 0);
        r[i] = 1;
        n->rows.push_back(std::move(r));
    }
    return TermOrder(n);
}

TermOrder TermOrder::degrevlex(std::vector<VarId> ranking) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::degrevlex;
    n->vars = ranking;
    n->ranking = std::move(ranking);
    n->index_vars();
    std::size_t k = n->vars.size();
    n->rows.emplace_back(k, 1);
    for (std::size_t i = k; i-- > 1;) {
        std::vector<long long> r(k, 0);
        r[i] = -1;
        n->rows.push_back(std::move(r));
    }
    return TermOrder(n);
}

TermOrder TermOrder::weighted(std::vector<long long> weights, TermOrder tie) {
    if (weights.size() != tie.variables().size()) throw InvalidParameter("weight vector length differs from tie order");
    for (long long w : weights)
        if (w <= 0) throw InvalidParameter("weights must be positive");
    auto n = std::make_shared<Node>();
    n->kind = Kind::weighted;
    n->vars = tie.variables();
    n->index_vars();
    n->weights = weights;
    n->rows.push_back(std::move(weights));
    for (const auto& r : tie.matrix()) n->rows.push_back(r);
    n->back = tie.n_;
    return TermOrder(n);
}

TermOrder TermOrder::composite(std::vector<Group> groups, TermOrder outer, std::vector<TermOrder> inner) {
    if (groups.size() != inner.size()) throw InvalidParameter("composite order needs one inner order per group");
    if (groups.size() != outer.variables().size()) throw InvalidParameter("outer order must rank exactly the group proxies");
    auto n = std::make_shared<Node>();
    n->kind = Kind::composite;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (!outer.covers(groups[g].proxy)) throw InvalidParameter("outer order misses proxy " + groups[g].proxy.name());
        std::set<VarId> a(groups[g].members.begin(), groups[g].members.end());
        std::set<VarId> b(inner[g].variables().begin(), inner[g].variables().end());
        if (a != b || a.size() != groups[g].members.size()) throw InvalidParameter("inner order must rank exactly its group");
        n->vars.insert(n->vars.end(), groups[g].members.begin(), groups[g].members.end());
    }
    n->index_vars();
    for (const auto& orow : outer.matrix()) {
        std::vector<long long> r(n->vars.size(), 0);
        for (std::size_t g = 0; g < groups.size(); ++g) {
            long long c = orow[static_cast<std::size_t>(outer.position(groups[g].proxy))];
            for (const auto& v : groups[g].members) r[static_cast<std::size_t>(n->pos.at(v))] = c;
        }
        n->rows.push_back(std::move(r));
    }
    for (const auto& in : inner) {
        auto e = embed(in, n->vars, n->pos);
        n->rows.insert(n->rows.end(), e.begin(), e.end());
    }
    n->groups = std::move(groups);
    n->inner = std::move(inner);
    n->outer = outer.n_;
    return TermOrder(n);
}

TermOrder TermOrder::elimination(std::vector<VarId> front, TermOrder back) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::elimination;
    for (const auto& v : front)
        if (back.covers(v)) throw InvalidParameter("front variable also ranked by back order: " + v.name());
    n->vars = front;
    n->vars.insert(n->vars.end(), back.variables().begin(), back.variables().end());
    n->index_vars();
    auto fo = degrevlex(front);
    auto e = embed(fo, n->vars, n->pos);
    n->rows.insert(n->rows.end(), e.begin(), e.end());
    auto eb = embed(back, n->vars, n->pos);
    n->rows.insert(n->rows.end(), eb.begin(), eb.end());
    n->front = std::move(front);
    n->back = back.n_;
    return TermOrder(n);
}

TermOrder::Kind TermOrder::kind() const { return n_->kind; }
const std::vector<VarId>& TermOrder::variables() const { return n_->vars; }
bool TermOrder::covers(const VarId& v) const { return n_->pos.count(v) > 0; }

int TermOrder::position(const VarId& v) const {
    auto it = n_->pos.find(v);
    return it == n_->pos.end() ? -1 : it->second;
}

const std::vector<std::vector<long long>>& TermOrder::matrix() const { return n_->rows; }

const std::vector<TermOrder::Group>& TermOrder::groups() const {
    if (n_->kind != Kind::composite) throw InvalidParameter("not a composite order");
    return n_->groups;
}

TermOrder TermOrder::outer() const {
    if (n_->kind != Kind::composite) throw InvalidParameter("not a composite order");
    return TermOrder(n_->outer);
}

const std::vector<TermOrder>& TermOrder::inner() const {
    if (n_->kind != Kind::composite) throw InvalidParameter("not a composite order");
    return n_->inner;
}

const std::vector<VarId>& TermOrder::front() const {
    if (n_->kind != Kind::elimination) throw InvalidParameter("not an elimination order");
    return n_->front;
}

TermOrder TermOrder::back() const {
    if (!n_->back) throw InvalidParameter("order has no back order");
    return TermOrder(n_->back);
}

const std::vector<long long>& TermOrder::weights() const {
    if (n_->kind != Kind::weighted) throw InvalidParameter("not a weighted order");
    return n_->weights;
}

TermOrder default_order(const std::set<VarId>& vars) { return TermOrder::degrevlex({vars.begin(), vars.end()}); }

std::strong_ordering compare(const TermOrder& o, const Monomial& a, const Monomial& b) {
    std::vector<std::pair<int, int>> diff; // (column, exponent difference)
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto col = [&](const VarId& v) {
        int p = o.position(v);
        if (p < 0) throw InvalidParameter("variable not ranked by the order: " + v.name());
        return p;
    };
    std::size_t i = 0, j = 0;
    while (i < fa.size() || j < fb.size()) {
        if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
            diff.emplace_back(col(fa[i].first), fa[i].second);
            ++i;
        } else if (i == fa.size() || fb[j].first < fa[i].first) {
            diff.emplace_back(col(fb[j].first), -fb[j].second);
            ++j;
        } else {
            int d = fa[i].second - fb[j].second;
            if (d != 0) diff.emplace_back(col(fa[i].first), d);
            else col(fa[i].first);
            ++i;
            ++j;
        }
    }
    if (diff.empty()) return std::strong_ordering::equal;
    for (const auto& row : o.matrix()) {
        long long s = 0;
        for (auto [c, d] : diff) s += row[static_cast<std::size_t>(c)] * d;
        if (s > 0) return std::strong_ordering::greater;
        if (s < 0) return std::strong_ordering::less;
    }
    // A non-degenerate matrix never gets here.
    throw InvalidParameter("term order does not separate distinct monomials");
}

std::vector<std::pair<Monomial, Rational>> sorted_terms(const Polynomial& f, const TermOrder& o) {
    std::vector<std::pair<Monomial, Rational>> t(f.terms().begin(), f.terms().end());
    std::sort(t.begin(), t.end(), [&](const auto& x, const auto& y) { return compare(o, x.first, y.first) > 0; });
    return t;
}

Monomial leading_monomial(const Polynomial& f, const TermOrder& o) {
    if (f.is_zero()) throw InvalidParameter("zero polynomial has no leading monomial");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : f.terms())
        if (!best || compare(o, m, *best) > 0) best = &m;
    return *best;
}

Rational leading_coefficient(const Polynomial& f, const TermOrder& o) { return f.coefficient(leading_monomial(f, o)); }

Polynomial make_monic(const Polynomial& f, const TermOrder& o) {
    if (f.is_zero()) return f;
    Rational lc = leading_coefficient(f, o);
    return f * Rational(1 / lc);
}

} // namespace torgr
