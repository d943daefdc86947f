#pragma once

// Monomial maps into Plücker and torus coordinates, their evaluation at
// points, multi-homogeneous kernels and orbit-closure Hilbert functions.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "torgr/relations.hpp"

namespace torgr {

enum class MapKind { phi, phi_rho, phi_gr, phi_gr_rho, zeta, zeta_p, rho_bullet, y_projection };

std::string kind_name(MapKind k);
MapKind parse_kind(const std::string& s); // accepts '-' or '_' as separator

/// Reduced degrevlex Gröbner basis of the Plücker ideal, computed on first use.
class PluckerIdeal {
public:
    PluckerIdeal(int d, int m);
    int d() const { return d_; }
    int m() const { return m_; }
    const std::vector<PluckerRelation>& relations() const { return rel_; }
    const TermOrder& order() const { return order_; }
    const GroebnerBasis& basis(const BuchbergerOptions& opts = {}) const;
    /// h with f = h * F for a single relation F, if any; F is returned too.
    std::optional<std::pair<Polynomial, std::size_t>> single_multiple(const Polynomial& f) const;

private:
    int d_, m_;
    std::vector<PluckerRelation> rel_;
    TermOrder order_;
    mutable std::once_flag once_;
    mutable GroebnerBasis gb_;
};

std::shared_ptr<const PluckerIdeal> plucker_ideal(int d, int m);

struct MapSpec {
    MapKind kind = MapKind::phi;
    Decomposition dec{{1}, 1};
    std::vector<SortedPair> subset;             // pair blocks in the source
    std::vector<VarId> source_vars;
    std::map<VarId, Polynomial> image;
    std::map<SortedPair, std::vector<VarId>> x_blocks;
    std::map<BlockString, std::vector<VarId>> y_blocks; // Y, Z or block variables by fiber
    std::optional<RationalPoint> point;         // zeta_p only
    std::shared_ptr<const PluckerIdeal> plucker; // Gr kinds and y_projection

    bool is_gr() const;
    bool has_p_block() const; // P variables are part of the source
};

/// `subset` defaults to the nontrivial pair blocks.
MapSpec build_map(MapKind kind, const Decomposition& dec, std::optional<std::vector<SortedPair>> subset = std::nullopt,
                  std::optional<RationalPoint> point = std::nullopt);

/// Substitution then canonical form. Gr kinds reduce modulo the Plücker ideal,
/// zeta kinds modulo the sorted relations, unless `reduce` is false.
Polynomial apply_map(const MapSpec& m, const Polynomial& f, bool reduce = true);

struct ThetaValue {
    bool degenerate = false;
    MultiProjPoint point;
    bool j_vanishes = false;
};
/// `subset` defaults to every sorted pair of the decomposition.
ThetaValue theta_eval(const RationalPoint& p, const Decomposition& dec,
                      std::optional<std::vector<SortedPair>> subset = std::nullopt);

struct KernelReport {
    enum class Method { elimination, block_marker, lattice_oracle };
    MapKind kind = MapKind::phi;
    std::vector<Polynomial> generators;
    bool multi_homogeneous = false;
    Method method = Method::elimination;
    bool truncated = false;
    int degree_cap = 0;
    TermOrder order;
    GroebnerStats stats;
};
std::string method_name(KernelReport::Method m);

/// Source grading used for block homogeneity: one degree per block (and one for P).
std::vector<int> block_degree(const MapSpec& m, const Monomial& mono);
bool is_block_homogeneous(const MapSpec& m, const Polynomial& f);

KernelReport kernel_mh(const MapSpec& m, int degree_cap, const BuchbergerOptions& opts = {});

/// Image of the fiber-coordinate map y_u -> p_u on the Grassmannian, for r = (n-1, 1).
KernelReport h_quotient_projection(const Decomposition& dec, int degree_cap, const BuchbergerOptions& opts = {});

std::vector<long long> hilbert_orbit(const RationalPoint& p, const Decomposition& dec, int max_degree);

struct MembershipCertificate {
    std::string route; // zero-image, plucker-multiple, groebner-reduction, sorted-reduction
    Polynomial image;  // before any reduction
    std::optional<PluckerRelation> relation;
    Polynomial quotient;
    Reduction reduction;
};
struct KernelMembership {
    bool member = false;
    MembershipCertificate certificate;
};
KernelMembership verify_kernel_membership(const Polynomial& f, const MapSpec& m);

struct QuinticSteps {
    Polynomial g, f, cubic_prime;
    bool g_in_kernel = false;
    bool difference_matches = false; // g - x(16,25)x(13,26) f == x(12,34)x(14,35) cubic'
    bool f_is_cubic = false;
    bool cubic_prime_is_relabelled = false; // ± cubic_form at (1,5,2,6,3)
    std::optional<bool> cubic_prime_in_cubic_ideal;
    std::optional<bool> g_in_cubic_ideal;
};
QuinticSteps quintic_steps(const BuchbergerOptions& opts = {});

struct ConjectureReport {
    struct Verdict {
        Polynomial generator;
        int degree = 0;
        bool in_cubic_ideal = false;
    };
    int n = 0;
    std::string status; // consistent, inconsistent, resource-exceeded
    std::string note;
    std::vector<Verdict> verdicts;
    std::map<int, int> degree_counts;
    bool consistent = false;
    std::optional<KernelReport> kernel;
    // Diagnostics against the cubic form at every ordering of five letters.
    std::optional<int> relabelled_members;  // generators in the relabelled cubic ideal
    std::optional<int> saturated_members;   // generators g with g * prod(x) in that ideal
};
/// cubic_form at every ordering of every five letters of [n], up to sign.
std::vector<Polynomial> relabelled_cubics(int n);
ConjectureReport conjecture_experiment(int n, int degree_cap, const BuchbergerOptions& opts = {});

} // namespace torgr
