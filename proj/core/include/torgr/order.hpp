#pragma once

#include <compare>
#include <memory>
#include <unordered_map>
#include <vector>

#include "torgr/poly.hpp"

namespace torgr {

/// Term order on monomials over a finite list of variables.
///
/// Every order compiles to an integer weight matrix over variables(): two
/// monomials are compared by the successive dot products with its rows. A
/// ranking lists variables from largest to smallest.
class TermOrder {
public:
    enum class Kind { lex, degrevlex, weighted, composite, elimination };

    struct Group {
        VarId proxy;                 // variable the outer order sees for this group
        std::vector<VarId> members;
    };

    TermOrder(); // lex on no variables
    static TermOrder lex(std::vector<VarId> ranking);
    static TermOrder degrevlex(std::vector<VarId> ranking);
    /// Positive weights first, then `tie` on the same variables.
    static TermOrder weighted(std::vector<long long> weights, TermOrder tie);
    /// Compares the group-degree monomials under `outer` first, then each
    /// group's own order, groups taken left to right.
    static TermOrder composite(std::vector<Group> groups, TermOrder outer, std::vector<TermOrder> inner);
    /// Any monomial involving the front variables beats every monomial free of them.
    static TermOrder elimination(std::vector<VarId> front, TermOrder back);

    Kind kind() const;
    const std::vector<VarId>& variables() const;
    bool covers(const VarId& v) const;
    int position(const VarId& v) const; // -1 when not covered

    /// Dense weight matrix, one row per comparison stage, columns as in variables().
    const std::vector<std::vector<long long>>& matrix() const;

    const std::vector<Group>& groups() const;       // composite only
    TermOrder outer() const;                        // composite only
    const std::vector<TermOrder>& inner() const;    // composite only
    const std::vector<VarId>& front() const;        // elimination only
    TermOrder back() const;                         // elimination and weighted tie
    const std::vector<long long>& weights() const;  // weighted only

private:
    struct Node;
    explicit TermOrder(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

/// Degree-reverse-lexicographic order on the variables sorted by default ranking.
TermOrder default_order(const std::set<VarId>& vars);

std::strong_ordering compare(const TermOrder& o, const Monomial& a, const Monomial& b);

Monomial leading_monomial(const Polynomial& f, const TermOrder& o);
Rational leading_coefficient(const Polynomial& f, const TermOrder& o);
/// Terms sorted from largest to smallest.
std::vector<std::pair<Monomial, Rational>> sorted_terms(const Polynomial& f, const TermOrder& o);
Polynomial make_monic(const Polynomial& f, const TermOrder& o);

} // namespace torgr
