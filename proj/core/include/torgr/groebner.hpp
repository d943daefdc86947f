#pragma once

#include <map>
#include <optional>
#include <vector>

#include "torgr/order.hpp"

namespace torgr {

/// Caps for a Gröbner computation. Zero means unlimited.
struct Budget {
    std::size_t max_basis = 20000;
    std::size_t max_spairs = 2000000;
    int max_degree = 0;
    double max_seconds = 0;
    unsigned threads = 1;
};

struct BuchbergerOptions {
    Budget budget;
    /// Positive variable weights used for pair selection and degree caps.
    /// Unlisted variables weigh 1.
    std::map<VarId, int> grading;
    /// Drop pairs above budget.max_degree instead of failing.
    bool truncate = false;
};

struct GroebnerStats {
    std::size_t pairs_created = 0;
    std::size_t coprime_skipped = 0;
    std::size_t chain_skipped = 0;
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
    std::size_t peak_basis = 0;
    int max_pair_degree = 0;
    double seconds = 0;
};

struct GroebnerBasis {
    std::vector<Polynomial> generators;
    TermOrder order;
    bool reduced = false;
    bool truncated = false;
    GroebnerStats stats;
};

struct ReductionStep {
    std::size_t divisor = 0; // index into the basis
    Monomial multiplier;
    Rational coefficient;
};

/// f = sum(coefficient * multiplier * basis[divisor]) + remainder.
struct Reduction {
    Polynomial remainder;
    std::vector<ReductionStep> trace;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& o);
Reduction reduce(const Polynomial& f, const std::vector<Polynomial>& basis, const TermOrder& o, bool with_trace = true);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const TermOrder& o);

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& o, const BuchbergerOptions& opts = {});
GroebnerBasis reduce_basis(const GroebnerBasis& gb);
GroebnerBasis reduced_groebner(const std::vector<Polynomial>& gens, const TermOrder& o, const BuchbergerOptions& opts = {});

/// Buchberger criterion over every pair; `skip_coprime` omits pairs with co-prime leading monomials.
bool is_groebner(const std::vector<Polynomial>& basis, const TermOrder& o, bool skip_coprime = false);
bool is_reduced(const std::vector<Polynomial>& basis, const TermOrder& o);

struct Membership {
    bool member = false;
    Reduction certificate;
    GroebnerBasis basis;
};
Membership ideal_member(const Polynomial& f, const std::vector<Polynomial>& gens, const TermOrder& o,
                        const BuchbergerOptions& opts = {});

/// Generators of the ideal intersected with the subring free of `front`.
/// The returned basis is the reduced basis of the elimination ideal under `back`.
GroebnerBasis eliminate(const std::vector<Polynomial>& gens, const std::vector<VarId>& front,
                        const BuchbergerOptions& opts = {}, std::optional<TermOrder> back = std::nullopt);

/// Kernel of v -> images[v] (each image a single term) through graph-ideal elimination.
GroebnerBasis kernel_of_monomial_map(const std::map<VarId, Polynomial>& images, const BuchbergerOptions& opts = {},
                                     std::optional<TermOrder> source_order = std::nullopt);

/// Same, with the images taken modulo `target_ideal` (generators over the image variables).
GroebnerBasis kernel_modulo(const std::map<VarId, Polynomial>& images, const std::vector<Polynomial>& target_ideal,
                            const BuchbergerOptions& opts = {}, std::optional<TermOrder> source_order = std::nullopt);

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& basis, const TermOrder& o);

/// Number of monomials of each degree in `ambient` not divisible by any generator.
std::vector<long long> hilbert_function(const std::vector<Monomial>& leading, const std::vector<VarId>& ambient,
                                        const std::vector<int>& degrees);

} // namespace torgr
