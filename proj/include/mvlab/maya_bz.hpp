#pragma once

// Maya diagrams, K-tableaux, Berenstein-Zelevinsky data and MV polytopes.
//
// A Maya diagram K is a nonempty proper subset of [1, n+1]; it stands for the
// chamber weight w.Lambda_i with K = w.[1, i]. BZ data assign an integer to
// every Maya diagram, with the two empty/full components pinned to zero.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "mvlab/core.hpp"
#include "mvlab/lusztig.hpp"
#include "mvlab/weyl_words.hpp"

namespace mvlab {

/// Highest rank whose Maya diagrams fit the 32-bit mask.
inline constexpr int kMaxMayaRank = 30;

/// Subset of [1, n+1]; bit k-1 marks membership of k.
class MayaDiagram {
public:
    using Mask = std::uint32_t;

    /// Throws unless members are in range and form a nonempty proper subset.
    MayaDiagram(Rank r, const std::vector<int>& members);
    static MayaDiagram from_mask(Rank r, Mask mask);
    /// [lo, hi] as a Maya diagram.
    static MayaDiagram interval(Rank r, int lo, int hi);

    Rank rank() const { return rank_; }
    Mask mask() const { return mask_; }
    bool contains(int k) const { return k >= 1 && k <= rank_.letters() && (mask_ >> (k - 1)) & 1u; }
    std::vector<int> members() const;
    int size() const;

    MayaDiagram complement() const;

    friend bool operator==(const MayaDiagram&, const MayaDiagram&) = default;
    friend auto operator<=>(const MayaDiagram& a, const MayaDiagram& b) { return a.mask_ <=> b.mask_; }

private:
    MayaDiagram(Rank r, Mask mask, bool) : rank_(r), mask_(mask) {}
    Rank rank_;
    Mask mask_ = 0;
};

/// Full mask for [1, n+1].
constexpr MayaDiagram::Mask full_mask(Rank r) { return (MayaDiagram::Mask{1} << r.letters()) - 1; }

/// Every nonempty proper Maya diagram, ordered by mask.
std::vector<MayaDiagram> all_maya_diagrams(Rank r);

/// Maximal-interval decomposition K = [s_1+1, t_1] u ... u [s_l+1, t_l].
struct MayaComponents {
    std::vector<std::pair<int, int>> intervals;  // (s_m, t_m)
    std::vector<int> out_set;                    // {t_m} n [1, n]
    std::vector<int> in_set;                     // {s_m} n [1, n]
    int s_K = 0;                                 // min of the complement
    int t_K = 0;                                 // max of K
};

MayaComponents components(const MayaDiagram& K);

/// s_i K: swap membership of i and i+1.
MayaDiagram reflect(const MayaDiagram& K, int i);

/// Upper-triangular tableau with c_{p,p} = k_p, rows weakly increasing and
/// columns strictly increasing. Entries are 1-based (p, q).
class KTableau {
public:
    explicit KTableau(int size) : size_(size), cells_(static_cast<std::size_t>(size * size), 0) {}

    int size() const { return size_; }
    int operator()(int p, int q) const { return cells_[index(p, q)]; }
    int& operator()(int p, int q) { return cells_[index(p, q)]; }

    friend bool operator==(const KTableau&, const KTableau&) = default;

private:
    std::size_t index(int p, int q) const { return static_cast<std::size_t>((p - 1) * size_ + (q - 1)); }
    int size_;
    std::vector<int> cells_;
};

/// Checks the K-tableau conditions.
bool is_k_tableau(const KTableau& c, const MayaDiagram& K);

/// Visits every K-tableau exactly once.
void for_each_k_tableau(const MayaDiagram& K, const std::function<void(const KTableau&)>& visit);
std::vector<KTableau> enumerate_k_tableaux(const MayaDiagram& K);

enum class Flavor : std::uint8_t { W0, E };

std::string to_string(Flavor f);

/// Integers M_K for K in M_n^x, flavored by their normalization.
class BZDatum {
public:
    BZDatum(Rank r, Flavor flavor);

    Rank rank() const { return rank_; }
    Flavor flavor() const { return flavor_; }

    /// M_K; the virtual components M_{empty} and M_{[1,n+1]} read as 0.
    int at(MayaDiagram::Mask mask) const { return values_[mask]; }
    int at(const MayaDiagram& K) const { return values_[K.mask()]; }
    void set(const MayaDiagram& K, int value) { values_[K.mask()] = value; }

    const std::vector<int>& raw() const { return values_; }

    friend bool operator==(const BZDatum&, const BZDatum&) = default;

private:
    Rank rank_;
    Flavor flavor_;
    std::vector<int> values_;  // indexed by mask, size 2^(n+1)
};

/// Lusztig datum -> e-BZ datum via the K-tableau minimum.
BZDatum psi(const LusztigDatum& a);
/// The single component M_K(a).
int psi_component(const LusztigDatum& a, const MayaDiagram& K);

struct AxiomViolation {
    enum class Kind : std::uint8_t { Normalization, Edge, ThreeTerm };
    Kind kind;
    MayaDiagram::Mask K;  // base set (for normalization: the offending diagram)
    int i = 0, j = 0, k = 0;
    int lhs = 0, rhs = 0;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
};

std::string to_string(const AxiomViolation& v, Rank r);

/// Normalization per flavor, every edge inequality and every 3-term relation.
/// Stops after max_violations entries (0 = no limit).
AxiomReport check_axioms(const BZDatum& M, std::size_t max_violations = 0);

/// M*_K = M_{K^c}; toggles the flavor.
BZDatum star(const BZDatum& M);

/// wt(M) = sum_i M_{[1,i]} alpha_i (w0 flavor).
Weight bz_weight(const BZDatum& M);
/// epsilon_i(M) for w0-flavored data.
int bz_epsilon(const BZDatum& M, int i);
int bz_phi(const BZDatum& M, int i);
/// Starred quantities on e-flavored data, computed through star().
Weight bz_weight_e(const BZDatum& M);
int bz_epsilon_star(const BZDatum& M, int i);
int bz_phi_star(const BZDatum& M, int i);

/// c_i(M) = M_{[1,i]} - M_{[1,i+1]\{i}} - 1 (w0 flavor).
int am_c(const BZDatum& M, int i);
/// c*_i(M) = M_{[i+1,n+1]} - M_{{i} u [i+2,n+1]} - 1 (e flavor).
int am_c_star(const BZDatum& M, int i);

/// K with i in K and i+1 not in K.
bool in_support(const MayaDiagram& K, int i);
/// K with i not in K and i+1 in K.
bool in_star_support(const MayaDiagram& K, int i);

/// Lowering operator f_i on w0-BZ data (min-update over the support).
BZDatum am_f(const BZDatum& M, int i);
/// Lowering operator f*_i on e-BZ data.
BZDatum am_f_star(const BZDatum& M, int i);

/// Inverse of psi by lookup in per-weight dictionaries, built on demand.
/// Safe for concurrent use.
class PsiInverse {
public:
    explicit PsiInverse(Rank r) : rank_(r) {}

    /// The Lusztig datum whose psi image is M (e flavor), if any.
    std::optional<LusztigDatum> find(const BZDatum& M) const;

private:
    using Slice = std::map<std::vector<int>, LusztigDatum>;
    const Slice& slice(const std::vector<int>& nu) const;

    Rank rank_;
    mutable std::shared_mutex mutex_;
    mutable std::map<std::vector<int>, Slice> slices_;
};

/// Raising operator e_i on w0-BZ data; std::nullopt when epsilon_i = 0.
/// The result is validated against its characterization (component [1,i]
/// raised by one, components off M_n^x(i) unchanged, axioms hold).
std::optional<BZDatum> bz_e(const BZDatum& M, int i, const PsiInverse& inverse);
std::optional<BZDatum> bz_e(const BZDatum& M, int i);

/// Highest rank accepted by mv_vertices ((n+1)! vertices).
inline constexpr int kMaxPolytopeRank = 5;

struct MVVertex {
    Permutation w;
    std::vector<int> mu;  // coordinates in the sum-zero hyperplane of Z^{n+1}
};

struct MVPolytope {
    Rank rank;
    std::vector<MVVertex> vertices;
    std::vector<std::pair<MayaDiagram, int>> halfspaces;  // <h, K> >= M_K
};

/// mu_w = sum_i M_{w[1,i]} (e_{w(i)} - e_{w(i+1)}) for every w, w0 flavor.
MVPolytope mv_vertices(const BZDatum& M);

/// <h, K> = sum_{k in K} h_k.
int pair_with(const std::vector<int>& h, const MayaDiagram& K);

std::string to_string(const MayaDiagram& K);

}  // namespace mvlab
