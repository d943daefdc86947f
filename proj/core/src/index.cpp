#include "torgr/index.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "torgr/error.hpp"

namespace torgr {

namespace {

std::string join_entries(const Tuple& t) {
    bool wide = std::any_of(t.begin(), t.end(), [](int v) { return v >= 10 || v < 0; });
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (wide && i > 0) s += ',';
        s += std::to_string(t[i]);
    }
    return s;
}

void combinations(int lo, int hi, int k, Tuple& cur, const std::function<void(const Tuple&)>& emit) {
    if (k == 0) {
        emit(cur);
        return;
    }
    for (int v = lo; v <= hi - k + 1; ++v) {
        cur.push_back(v);
        combinations(v + 1, hi, k - 1, cur, emit);
        cur.pop_back();
    }
}

bool weakly_increasing(const Tuple& t) { return std::is_sorted(t.begin(), t.end()); }

} // namespace

MultiIndex::MultiIndex(Tuple entries) : e_(std::move(entries)) {
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] < 1) throw InvalidParameter("multi-index entry must be positive");
        if (i > 0 && e_[i - 1] >= e_[i]) throw InvalidParameter("multi-index must be strictly increasing: " + join_entries(e_));
    }
}

bool MultiIndex::contains(int v) const { return std::binary_search(e_.begin(), e_.end(), v); }

std::string MultiIndex::str() const { return join_entries(e_); }

const MultiIndex& SignedIndex::index() const {
    if (is_zero()) throw InvalidParameter("zero Plücker symbol has no index");
    return std::get<MultiIndex>(value);
}

Decomposition::Decomposition(Tuple block_sizes, int d) : sizes_(std::move(block_sizes)), d_(d) {
    if (sizes_.empty()) throw InvalidParameter("decomposition needs at least one block");
    bounds_.push_back(0);
    for (int r : sizes_) {
        if (r <= 0) throw InvalidParameter("block sizes must be positive");
        bounds_.push_back(bounds_.back() + r);
    }
    total_ = bounds_.back();
    if (d_ <= 0 || d_ > total_) throw InvalidParameter("need 1 <= d <= total dimension");
}

Decomposition Decomposition::unit(int d, int n) {
    if (n <= 0) throw InvalidParameter("n must be positive");
    return Decomposition(Tuple(static_cast<std::size_t>(n), 1), d);
}

int Decomposition::block_of(int entry) const {
    if (entry < 1 || entry > total_) throw InvalidParameter("entry out of range: " + std::to_string(entry));
    auto it = std::lower_bound(bounds_.begin() + 1, bounds_.end(), entry);
    return static_cast<int>(it - bounds_.begin());
}

bool Decomposition::is_unit() const {
    return std::all_of(sizes_.begin(), sizes_.end(), [](int r) { return r == 1; });
}

std::string BlockString::str() const { return join_entries(letters); }

std::string SortedPair::str() const { return "((" + join_entries(odd) + "),(" + join_entries(even) + "))"; }

PairIndex::PairIndex(MultiIndex a, MultiIndex b) {
    if (b < a) std::swap(a, b);
    u = std::move(a);
    v = std::move(b);
}

std::string PairIndex::str() const { return "(" + u.str() + "," + v.str() + ")"; }

std::vector<MultiIndex> multi_indices(int d, int m) {
    if (d <= 0 || d > m) throw InvalidParameter("multi_indices needs 1 <= d <= m");
    std::vector<MultiIndex> out;
    Tuple cur;
    combinations(1, m, d, cur, [&](const Tuple& t) { out.emplace_back(t); });
    return out;
}

SignedIndex canonical_plucker(const Tuple& raw, int max_entry) {
    for (int v : raw)
        if (v < 1 || v > max_entry) throw InvalidParameter("Plücker entry out of range: " + std::to_string(v));
    Tuple t = raw;
    int inversions = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            if (t[i] == t[j]) return SignedIndex::zero();
            if (t[i] > t[j]) ++inversions;
        }
    std::sort(t.begin(), t.end());
    return SignedIndex::of(MultiIndex(std::move(t)), inversions % 2 == 0 ? 1 : -1);
}

std::vector<Composition> composition_set(const Decomposition& dec) {
    std::vector<Composition> out;
    Tuple parts(static_cast<std::size_t>(dec.blocks()), 0);
    std::function<void(int, int)> rec = [&](int alpha, int left) {
        if (alpha == dec.blocks()) {
            if (left == 0) out.push_back({parts});
            return;
        }
        for (int i = 0; i <= std::min(left, dec.size(alpha + 1)); ++i) {
            parts[alpha] = i;
            rec(alpha + 1, left - i);
        }
        parts[alpha] = 0;
    };
    rec(0, dec.d());
    return out;
}

BlockString string_of_composition(const Composition& c, const Decomposition& dec) {
    if (static_cast<int>(c.parts.size()) != dec.blocks()) throw InvalidParameter("composition length differs from block count");
    int sum = 0;
    BlockString a;
    for (int alpha = 1; alpha <= dec.blocks(); ++alpha) {
        int i = c.parts[alpha - 1];
        if (i < 0 || i > dec.size(alpha)) throw InvalidParameter("composition part exceeds its block size");
        sum += i;
        a.letters.insert(a.letters.end(), static_cast<std::size_t>(i), alpha);
    }
    if (sum != dec.d()) throw InvalidParameter("composition does not sum to d");
    return a;
}

bool is_block_string(const Tuple& letters, const Decomposition& dec) {
    if (static_cast<int>(letters.size()) != dec.d() || !weakly_increasing(letters)) return false;
    Tuple count(static_cast<std::size_t>(dec.blocks()) + 1, 0);
    for (int l : letters) {
        if (l < 1 || l > dec.blocks()) return false;
        if (++count[l] > dec.size(l)) return false;
    }
    return true;
}

Composition composition_of_string(const BlockString& a, const Decomposition& dec) {
    if (!is_block_string(a.letters, dec)) throw InvalidParameter("not a valid block string: " + a.str());
    Composition c{Tuple(static_cast<std::size_t>(dec.blocks()), 0)};
    for (int l : a.letters) ++c.parts[l - 1];
    return c;
}

std::vector<BlockString> block_strings(const Decomposition& dec) {
    std::vector<BlockString> out;
    for (const auto& c : composition_set(dec)) out.push_back(string_of_composition(c, dec));
    std::sort(out.begin(), out.end());
    return out;
}

Tuple interleave(const Tuple& a, const Tuple& b) {
    if (a.size() != b.size()) throw InvalidParameter("interleave needs equal lengths");
    Tuple t;
    t.reserve(2 * a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        t.push_back(a[i]);
        t.push_back(b[i]);
    }
    return t;
}

Tuple sort_tuple(Tuple t) {
    std::sort(t.begin(), t.end());
    return t;
}

bool is_sorted(const Tuple& a, const Tuple& b) { return weakly_increasing(interleave(a, b)); }

SortedPair sorted_key(const Tuple& a, const Tuple& b) {
    if (a.size() != b.size()) throw InvalidParameter("sorted_key needs equal lengths");
    Tuple t = a;
    t.insert(t.end(), b.begin(), b.end());
    std::sort(t.begin(), t.end());
    SortedPair w;
    for (std::size_t i = 0; i < t.size(); ++i) (i % 2 == 0 ? w.odd : w.even).push_back(t[i]);
    return w;
}

std::vector<SortedPair> sorted_pairs(const Decomposition& dec) {
    auto strings = block_strings(dec);
    std::vector<SortedPair> out;
    for (std::size_t i = 0; i < strings.size(); ++i)
        for (std::size_t j = i; j < strings.size(); ++j)
            if (is_sorted(strings[i].letters, strings[j].letters)) out.push_back({strings[i].letters, strings[j].letters});
    return out;
}

std::vector<MultiIndex> fiber_indices(const Composition& c, const Decomposition& dec) {
    string_of_composition(c, dec); // validates
    std::vector<MultiIndex> out;
    Tuple cur;
    std::function<void(int)> rec = [&](int alpha) {
        if (alpha > dec.blocks()) {
            out.emplace_back(cur);
            return;
        }
        Tuple part;
        combinations(dec.first(alpha), dec.last(alpha), c.parts[alpha - 1], part, [&](const Tuple& t) {
            cur.insert(cur.end(), t.begin(), t.end());
            rec(alpha + 1);
            cur.resize(cur.size() - t.size());
        });
    };
    rec(1);
    return out;
}

std::vector<MultiIndex> fiber_indices(const BlockString& a, const Decomposition& dec) {
    return fiber_indices(composition_of_string(a, dec), dec);
}

BlockString block_string_of(const MultiIndex& u, const Decomposition& dec) {
    BlockString a;
    for (int e : u.entries()) a.letters.push_back(dec.block_of(e));
    return a;
}

SortedPair pair_key(const PairIndex& uv, const Decomposition& dec) {
    return sorted_key(block_string_of(uv.u, dec).letters, block_string_of(uv.v, dec).letters);
}

std::vector<PairIndex> lambda_w(const SortedPair& w, const Decomposition& dec) {
    if (!is_block_string(w.odd, dec) || !is_block_string(w.even, dec) || !is_sorted(w.odd, w.even))
        throw InvalidParameter("not a sorted pair for this decomposition: " + w.str());
    Tuple total(static_cast<std::size_t>(dec.blocks()) + 1, 0);
    for (int l : w.odd) ++total[l];
    for (int l : w.even) ++total[l];

    std::set<PairIndex> out;
    Tuple take(total.size(), 0);
    std::function<void(int, int)> rec = [&](int alpha, int left) {
        if (alpha > dec.blocks()) {
            if (left != 0) return;
            BlockString a, b;
            for (int l = 1; l <= dec.blocks(); ++l) {
                a.letters.insert(a.letters.end(), static_cast<std::size_t>(take[l]), l);
                b.letters.insert(b.letters.end(), static_cast<std::size_t>(total[l] - take[l]), l);
            }
            if (b < a) return;
            auto fa = fiber_indices(a, dec);
            auto fb = fiber_indices(b, dec);
            for (const auto& u : fa)
                for (const auto& v : fb) out.emplace(u, v);
            return;
        }
        int r = dec.size(alpha);
        for (int k = 0; k <= std::min(left, total[alpha]); ++k) {
            if (k > r || total[alpha] - k > r) continue;
            take[alpha] = k;
            rec(alpha + 1, left - k);
        }
        take[alpha] = 0;
    };
    rec(1, dec.d());
    return {out.begin(), out.end()};
}

std::vector<SortedPair> lambda_sort(int d, int n) {
    auto dec = Decomposition::unit(d, n);
    std::vector<SortedPair> out;
    for (auto& w : sorted_pairs(dec)) {
        Tuple s = support(w);
        if (static_cast<int>(s.size()) >= d + 2) out.push_back(std::move(w));
    }
    return out;
}

std::vector<SortedPair> nontrivial_pairs(const Decomposition& dec) {
    std::vector<SortedPair> out;
    for (auto& w : sorted_pairs(dec))
        if (lambda_w(w, dec).size() >= 2) out.push_back(std::move(w));
    return out;
}

Tuple support(const SortedPair& w) {
    Tuple s = w.odd;
    s.insert(s.end(), w.even.begin(), w.even.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::optional<SortedPair> project_support(const SortedPair& w, const Tuple& subset) {
    Tuple j = sort_tuple(subset);
    for (int v : support(w))
        if (!std::binary_search(j.begin(), j.end(), v)) return std::nullopt;
    return w;
}

SortedPair contract_support(const SortedPair& w, const Tuple& inserted) {
    Tuple ins = sort_tuple(inserted);
    if (std::adjacent_find(ins.begin(), ins.end()) != ins.end()) throw InvalidParameter("inserted set has repeated entries");
    for (int v : support(w))
        if (std::binary_search(ins.begin(), ins.end(), v)) throw InvalidParameter("inserted set overlaps the support");
    SortedPair out;
    out.odd = w.odd;
    out.odd.insert(out.odd.end(), ins.begin(), ins.end());
    out.even = w.even;
    out.even.insert(out.even.end(), ins.begin(), ins.end());
    out.odd = sort_tuple(out.odd);
    out.even = sort_tuple(out.even);
    if (out.even < out.odd) std::swap(out.odd, out.even);
    if (!is_sorted(out.odd, out.even)) throw InvalidParameter("contraction of an unsorted pair: " + w.str());
    return out;
}

} // namespace torgr
