#pragma once

// Index combinatorics of poly-diagonal torus actions on Grassmannians:
// Plücker multi-indices, block compositions and their string encodings,
// sorted pairs and the pair sets Λ_w grouped by a common sorted key.

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace torgr {

using Tuple = std::vector<int>;

/// Strictly increasing tuple of positive integers.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(Tuple entries);
    MultiIndex(std::initializer_list<int> entries) : MultiIndex(Tuple(entries)) {}

    const Tuple& entries() const noexcept { return e_; }
    std::size_t size() const noexcept { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    bool contains(int v) const;

    std::string str() const;

    auto operator<=>(const MultiIndex&) const = default;

private:
    Tuple e_;
};

struct ZeroSymbol {
    auto operator<=>(const ZeroSymbol&) const = default;
};

/// Result of bringing a raw Plücker symbol into canonical form.
/// A symbol with a repeated entry is the zero marker, never an index of sign 0.
struct SignedIndex {
    std::variant<ZeroSymbol, MultiIndex> value;
    int sign = 0;

    bool is_zero() const noexcept { return std::holds_alternative<ZeroSymbol>(value); }
    const MultiIndex& index() const; // throws on the zero marker

    static SignedIndex zero() { return {ZeroSymbol{}, 0}; }
    static SignedIndex of(MultiIndex u, int sign) { return {std::move(u), sign}; }
};

/// Block sizes r_1..r_n of E = E_1 + ... + E_n together with d.
/// Block alpha owns the ground-set interval first(alpha)..last(alpha).
class Decomposition {
public:
    Decomposition(Tuple block_sizes, int d);
    static Decomposition unit(int d, int n);

    const Tuple& block_sizes() const noexcept { return sizes_; }
    int d() const noexcept { return d_; }
    int blocks() const noexcept { return static_cast<int>(sizes_.size()); }
    int total() const noexcept { return total_; }
    int size(int alpha) const { return sizes_.at(alpha - 1); }
    int first(int alpha) const { return bounds_.at(alpha - 1) + 1; }
    int last(int alpha) const { return bounds_.at(alpha); }
    int block_of(int entry) const;
    bool is_unit() const;

    bool operator==(const Decomposition&) const = default;

private:
    Tuple sizes_;
    Tuple bounds_; // partial sums, bounds_[0] = 0
    int d_ = 0;
    int total_ = 0;
};

struct Composition {
    Tuple parts;
    auto operator<=>(const Composition&) const = default;
};

/// Weakly increasing string of block letters.
struct BlockString {
    Tuple letters;
    std::string str() const;
    auto operator<=>(const BlockString&) const = default;
};

/// Unordered pair with sorted interleave. The lexicographically smaller half
/// is stored first, which for a sorted pair is the odd-position half.
struct SortedPair {
    Tuple odd;
    Tuple even;
    std::string str() const;
    auto operator<=>(const SortedPair&) const = default;
};

/// Unordered pair of Plücker indices, smaller half first.
struct PairIndex {
    MultiIndex u;
    MultiIndex v;
    PairIndex() = default;
    PairIndex(MultiIndex a, MultiIndex b);
    std::string str() const;
    auto operator<=>(const PairIndex&) const = default;
};

std::vector<MultiIndex> multi_indices(int d, int m);
SignedIndex canonical_plucker(const Tuple& raw, int max_entry);

std::vector<Composition> composition_set(const Decomposition& dec);
BlockString string_of_composition(const Composition& c, const Decomposition& dec);
Composition composition_of_string(const BlockString& a, const Decomposition& dec);
std::vector<BlockString> block_strings(const Decomposition& dec);
bool is_block_string(const Tuple& letters, const Decomposition& dec);

Tuple interleave(const Tuple& a, const Tuple& b);
Tuple sort_tuple(Tuple t);
bool is_sorted(const Tuple& a, const Tuple& b);

/// Sorted pair whose interleave is the sorted concatenation of a and b.
SortedPair sorted_key(const Tuple& a, const Tuple& b);

std::vector<SortedPair> sorted_pairs(const Decomposition& dec);
std::vector<MultiIndex> fiber_indices(const Composition& c, const Decomposition& dec);
std::vector<MultiIndex> fiber_indices(const BlockString& a, const Decomposition& dec);

/// Block letters of the entries of u, the string of the fiber containing u.
BlockString block_string_of(const MultiIndex& u, const Decomposition& dec);
SortedPair pair_key(const PairIndex& uv, const Decomposition& dec);

std::vector<PairIndex> lambda_w(const SortedPair& w, const Decomposition& dec);
std::vector<SortedPair> lambda_sort(int d, int n);

/// Sorted pairs carrying at least two elements in their Λ_w.
std::vector<SortedPair> nontrivial_pairs(const Decomposition& dec);

Tuple support(const SortedPair& w);
std::optional<SortedPair> project_support(const SortedPair& w, const Tuple& subset);
SortedPair contract_support(const SortedPair& w, const Tuple& inserted);

} // namespace torgr
