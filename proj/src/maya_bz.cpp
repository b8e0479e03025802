#include "mvlab/maya_bz.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mvlab {

namespace {

using Mask = MayaDiagram::Mask;

constexpr Mask bit(int k) { return Mask{1} << (k - 1); }

Mask interval_mask(int lo, int hi) {
    Mask m = 0;
    for (int k = lo; k <= hi; ++k) m |= bit(k);
    return m;
}

void check_rank(Rank r) {
    if (r.n > kMaxMayaRank) throw ResourceLimit("Maya diagrams support rank <= " + std::to_string(kMaxMayaRank));
}

void check_index(Rank r, int i) {
    if (i < 1 || i > r.n)
        throw Error("index " + std::to_string(i) + " out of range for rank " + std::to_string(r.n));
}

void require_flavor(const BZDatum& M, Flavor f, const char* what) {
    if (M.flavor() != f)
        throw Error(std::string(what) + " expects a " + to_string(f) + "-flavored BZ datum");
}

Mask swap_bits(Mask m, int i) {
    const bool a = m & bit(i), b = m & bit(i + 1);
    if (a == b) return m;
    return m ^ bit(i) ^ bit(i + 1);
}

}  // namespace

MayaDiagram::MayaDiagram(Rank r, const std::vector<int>& members) : rank_(r) {
    check_rank(r);
    for (int k : members) {
        if (k < 1 || k > r.letters())
            throw Error("Maya diagram member " + std::to_string(k) + " outside [1, " + std::to_string(r.letters()) + "]");
        if (mask_ & bit(k)) throw Error("Maya diagram member " + std::to_string(k) + " repeated");
        mask_ |= bit(k);
    }
    if (mask_ == 0 || mask_ == full_mask(r)) throw Error("Maya diagram must be a nonempty proper subset");
}

MayaDiagram MayaDiagram::from_mask(Rank r, Mask mask) {
    check_rank(r);
    if (mask == 0 || (mask & ~full_mask(r)) || mask == full_mask(r))
        throw Error("mask is not a nonempty proper Maya diagram");
    return MayaDiagram(r, mask, true);
}

MayaDiagram MayaDiagram::interval(Rank r, int lo, int hi) {
    if (lo < 1 || hi > r.letters() || lo > hi) throw Error("bad interval for a Maya diagram");
    return from_mask(r, interval_mask(lo, hi));
}

std::vector<int> MayaDiagram::members() const {
    std::vector<int> out;
    for (int k = 1; k <= rank_.letters(); ++k)
        if (contains(k)) out.push_back(k);
    return out;
}

int MayaDiagram::size() const { return std::popcount(mask_); }

MayaDiagram MayaDiagram::complement() const { return MayaDiagram(rank_, full_mask(rank_) & ~mask_, true); }

std::vector<MayaDiagram> all_maya_diagrams(Rank r) {
    check_rank(r);
    std::vector<MayaDiagram> out;
    const Mask full = full_mask(r);
    out.reserve(full - 1);
    for (Mask m = 1; m < full; ++m) out.push_back(MayaDiagram::from_mask(r, m));
    return out;
}

MayaComponents components(const MayaDiagram& K) {
    MayaComponents c;
    const int letters = K.rank().letters();
    const int n = K.rank().n;
    for (int k = 1; k <= letters;) {
        if (!K.contains(k)) {
            ++k;
            continue;
        }
        const int start = k;
        while (k <= letters && K.contains(k)) ++k;
        const int s = start - 1, t = k - 1;
        c.intervals.emplace_back(s, t);
        if (t <= n) c.out_set.push_back(t);
        if (s >= 1) c.in_set.push_back(s);
    }
    for (int k = 1; k <= letters; ++k)
        if (!K.contains(k)) {
            c.s_K = k;
            break;
        }
    for (int k = letters; k >= 1; --k)
        if (K.contains(k)) {
            c.t_K = k;
            break;
        }
    return c;
}

MayaDiagram reflect(const MayaDiagram& K, int i) {
    check_index(K.rank(), i);
    return MayaDiagram::from_mask(K.rank(), swap_bits(K.mask(), i));
}

bool is_k_tableau(const KTableau& c, const MayaDiagram& K) {
    const auto k = K.members();
    const int l = static_cast<int>(k.size());
    if (c.size() != l) return false;
    for (int p = 1; p <= l; ++p)
        if (c(p, p) != k[static_cast<std::size_t>(p - 1)]) return false;
    for (int p = 1; p <= l; ++p)
        for (int q = p; q <= l; ++q) {
            if (q < l && c(p, q) > c(p, q + 1)) return false;
            if (p < q && c(p, q) >= c(p + 1, q)) return false;
        }
    return true;
}

namespace {

// Cells in fill order: column by column, bottom-up within a column. Each cell
// (p, q) ranges over [c(p, q-1), c(p+1, q) - 1], which is never empty.
std::vector<std::pair<int, int>> fill_order(int l) {
    std::vector<std::pair<int, int>> cells;
    for (int q = 2; q <= l; ++q)
        for (int p = q - 1; p >= 1; --p) cells.emplace_back(p, q);
    return cells;
}

KTableau diagonal(const MayaDiagram& K) {
    const auto k = K.members();
    KTableau c(static_cast<int>(k.size()));
    for (int p = 1; p <= c.size(); ++p) c(p, p) = k[static_cast<std::size_t>(p - 1)];
    return c;
}

}  // namespace

void for_each_k_tableau(const MayaDiagram& K, const std::function<void(const KTableau&)>& visit) {
    KTableau c = diagonal(K);
    const auto cells = fill_order(c.size());
    std::function<void(std::size_t)> rec = [&](std::size_t at) {
        if (at == cells.size()) {
            visit(c);
            return;
        }
        const auto [p, q] = cells[at];
        for (int v = c(p, q - 1); v < c(p + 1, q); ++v) {
            c(p, q) = v;
            rec(at + 1);
        }
    };
    rec(0);
}

std::vector<KTableau> enumerate_k_tableaux(const MayaDiagram& K) {
    std::vector<KTableau> out;
    for_each_k_tableau(K, [&](const KTableau& c) { out.push_back(c); });
    return out;
}

std::string to_string(Flavor f) { return f == Flavor::W0 ? "w0" : "e"; }

BZDatum::BZDatum(Rank r, Flavor flavor) : rank_(r), flavor_(flavor) {
    check_rank(r);
    if (r.n > 20) throw ResourceLimit("BZ data support rank <= 20");
    values_.assign(std::size_t{1} << r.letters(), 0);
}

int psi_component(const LusztigDatum& a, const MayaDiagram& K) {
    if (!(a.rank() == K.rank())) throw Error("psi: rank mismatch");
    KTableau c = diagonal(K);
    const int l = c.size();

    int base = 0;
    for (int p = 1; p <= l; ++p)
        for (int i = 1; i < c(p, p); ++i) base -= a.at(i, c(p, p));

    const auto cells = fill_order(l);
    const int letters = a.rank().letters();
    int best = std::numeric_limits<int>::max();
    std::function<void(std::size_t, int)> rec = [&](std::size_t at, int partial) {
        if (partial >= best) return;  // all terms are non-negative
        if (at == cells.size()) {
            best = partial;
            return;
        }
        const auto [p, q] = cells[at];
        for (int v = c(p, q - 1); v < c(p + 1, q); ++v) {
            const int j = v + (q - p);
            if (j > letters) throw std::logic_error("K-tableau term outside the positive roots");
            c(p, q) = v;
            rec(at + 1, partial + a.at(v, j));
        }
    };
    rec(0, 0);
    return base + best;
}

BZDatum psi(const LusztigDatum& a) {
    BZDatum M(a.rank(), Flavor::E);
    for (const MayaDiagram& K : all_maya_diagrams(a.rank())) M.set(K, psi_component(a, K));
    return M;
}

std::string to_string(const AxiomViolation& v, Rank r) {
    std::ostringstream os;
    auto set_str = [&](Mask m) {
        std::string s = "{";
        bool first = true;
        for (int k = 1; k <= r.letters(); ++k)
            if (m & bit(k)) {
                s += (first ? "" : ",") + std::to_string(k);
                first = false;
            }
        return s + "}";
    };
    switch (v.kind) {
        case AxiomViolation::Kind::Normalization:
            os << "normalization: M" << set_str(v.K) << " = " << v.lhs << ", expected 0";
            break;
        case AxiomViolation::Kind::Edge:
            os << "edge: K=" << set_str(v.K) << " i=" << v.i << " j=" << v.j << ": " << v.lhs << " > " << v.rhs;
            break;
        case AxiomViolation::Kind::ThreeTerm:
            os << "3-term: K=" << set_str(v.K) << " i=" << v.i << " j=" << v.j << " k=" << v.k << ": " << v.lhs
               << " != " << v.rhs;
            break;
    }
    return os.str();
}

AxiomReport check_axioms(const BZDatum& M, std::size_t max_violations) {
    AxiomReport report;
    const Rank r = M.rank();
    const int letters = r.letters();
    const Mask full = full_mask(r);
    auto full_up = [&] { return max_violations && report.violations.size() >= max_violations; };

    for (int i = 1; i <= r.n && !full_up(); ++i) {
        const Mask m = M.flavor() == Flavor::W0 ? interval_mask(r.n - i + 2, letters) : interval_mask(1, i);
        if (M.at(m) != 0) report.violations.push_back({AxiomViolation::Kind::Normalization, m, i, 0, 0, M.at(m), 0});
    }
    if (M.at(Mask{0}) != 0)
        report.violations.push_back({AxiomViolation::Kind::Normalization, 0, 0, 0, 0, M.at(Mask{0}), 0});
    if (M.at(full) != 0)
        report.violations.push_back({AxiomViolation::Kind::Normalization, full, 0, 0, 0, M.at(full), 0});

    for (Mask K = 0; K <= full && !full_up(); ++K) {
        for (int i = 1; i <= letters && !full_up(); ++i) {
            if (K & bit(i)) continue;
            for (int j = i + 1; j <= letters && !full_up(); ++j) {
                if (K & bit(j)) continue;
                const int lhs = M.at(K | bit(i)) + M.at(K | bit(j));
                const int rhs = M.at(K | bit(i) | bit(j)) + M.at(K);
                if (lhs > rhs) report.violations.push_back({AxiomViolation::Kind::Edge, K, i, j, 0, lhs, rhs});
                for (int k = j + 1; k <= letters && !full_up(); ++k) {
                    if (K & bit(k)) continue;
                    const int l3 = M.at(K | bit(i) | bit(k)) + M.at(K | bit(j));
                    const int r3 = std::min(M.at(K | bit(i) | bit(j)) + M.at(K | bit(k)),
                                            M.at(K | bit(j) | bit(k)) + M.at(K | bit(i)));
                    if (l3 != r3) report.violations.push_back({AxiomViolation::Kind::ThreeTerm, K, i, j, k, l3, r3});
                }
            }
        }
    }
    return report;
}

BZDatum star(const BZDatum& M) {
    const Rank r = M.rank();
    BZDatum out(r, M.flavor() == Flavor::W0 ? Flavor::E : Flavor::W0);
    const Mask full = full_mask(r);
    for (Mask K = 1; K < full; ++K) out.set(MayaDiagram::from_mask(r, K), M.at(full & ~K));
    return out;
}

Weight bz_weight(const BZDatum& M) {
    require_flavor(M, Flavor::W0, "bz_weight");
    Weight w(M.rank());
    for (int i = 1; i <= M.rank().n; ++i) w[i] = M.at(interval_mask(1, i));
    return w;
}

int bz_epsilon(const BZDatum& M, int i) {
    require_flavor(M, Flavor::W0, "bz_epsilon");
    check_index(M.rank(), i);
    const Mask a = interval_mask(1, i), b = interval_mask(1, i + 1) & ~bit(i);
    const Mask c = interval_mask(1, i + 1), d = interval_mask(1, i - 1);
    return -(M.at(a) + M.at(b) - M.at(c) - M.at(d));
}

int bz_phi(const BZDatum& M, int i) { return bz_epsilon(M, i) + bz_weight(M).pairing(i); }

Weight bz_weight_e(const BZDatum& M) {
    require_flavor(M, Flavor::E, "bz_weight_e");
    return bz_weight(star(M));
}

int bz_epsilon_star(const BZDatum& M, int i) {
    require_flavor(M, Flavor::E, "bz_epsilon_star");
    return bz_epsilon(star(M), i);
}

int bz_phi_star(const BZDatum& M, int i) {
    require_flavor(M, Flavor::E, "bz_phi_star");
    return bz_phi(star(M), i);
}

int am_c(const BZDatum& M, int i) {
    require_flavor(M, Flavor::W0, "am_c");
    check_index(M.rank(), i);
    return M.at(interval_mask(1, i)) - M.at(interval_mask(1, i + 1) & ~bit(i)) - 1;
}

int am_c_star(const BZDatum& M, int i) {
    require_flavor(M, Flavor::E, "am_c_star");
    check_index(M.rank(), i);
    const int letters = M.rank().letters();
    return M.at(interval_mask(i + 1, letters)) - M.at(bit(i) | interval_mask(i + 2, letters)) - 1;
}

bool in_support(const MayaDiagram& K, int i) { return K.contains(i) && !K.contains(i + 1); }
bool in_star_support(const MayaDiagram& K, int i) { return !K.contains(i) && K.contains(i + 1); }

BZDatum am_f(const BZDatum& M, int i) {
    const int c = am_c(M, i);
    BZDatum out = M;
    for (const MayaDiagram& K : all_maya_diagrams(M.rank()))
        if (in_support(K, i)) out.set(K, std::min(M.at(K), M.at(swap_bits(K.mask(), i)) + c));
    return out;
}

BZDatum am_f_star(const BZDatum& M, int i) {
    const int c = am_c_star(M, i);
    BZDatum out = M;
    for (const MayaDiagram& K : all_maya_diagrams(M.rank()))
        if (in_star_support(K, i)) out.set(K, std::min(M.at(K), M.at(swap_bits(K.mask(), i)) + c));
    return out;
}

const PsiInverse::Slice& PsiInverse::slice(const std::vector<int>& nu) const {
    {
        std::shared_lock lock(mutex_);
        if (auto it = slices_.find(nu); it != slices_.end()) return it->second;
    }
    Slice built;
    for (const LusztigDatum& a : enumerate_by_weight(rank_, nu)) built.emplace(psi(a).raw(), a);
    std::unique_lock lock(mutex_);
    return slices_.try_emplace(nu, std::move(built)).first->second;
}

std::optional<LusztigDatum> PsiInverse::find(const BZDatum& M) const {
    require_flavor(M, Flavor::E, "PsiInverse::find");
    if (!(M.rank() == rank_)) throw Error("PsiInverse: rank mismatch");
    std::vector<int> nu(static_cast<std::size_t>(rank_.n));
    for (int i = 1; i <= rank_.n; ++i) {
        nu[static_cast<std::size_t>(i - 1)] = -M.at(interval_mask(i + 1, rank_.letters()));
        if (nu[static_cast<std::size_t>(i - 1)] < 0) return std::nullopt;
    }
    const Slice& s = slice(nu);
    if (auto it = s.find(M.raw()); it != s.end()) return it->second;
    return std::nullopt;
}

std::optional<BZDatum> bz_e(const BZDatum& M, int i, const PsiInverse& inverse) {
    require_flavor(M, Flavor::W0, "bz_e");
    if (bz_epsilon(M, i) == 0) return std::nullopt;

    const auto a = inverse.find(star(M));
    if (!a) throw std::logic_error("bz_e: BZ datum is not in the image of psi");
    const auto raised = apply(*a, CrystalOp{CrystalOp::Kind::EStar, i});
    if (!raised) throw std::logic_error("bz_e: epsilon mismatch between BZ datum and its Lusztig datum");
    BZDatum out = star(psi(*raised));

    if (out.at(interval_mask(1, i)) != M.at(interval_mask(1, i)) + 1)
        throw std::logic_error("bz_e: component [1,i] not raised by one");
    for (const MayaDiagram& K : all_maya_diagrams(M.rank()))
        if (!in_support(K, i) && out.at(K) != M.at(K))
            throw std::logic_error("bz_e: component off the support changed at " + to_string(K));
    if (!check_axioms(out, 1).ok()) throw std::logic_error("bz_e: result violates the BZ axioms");
    return out;
}

std::optional<BZDatum> bz_e(const BZDatum& M, int i) {
    PsiInverse inverse(M.rank());
    return bz_e(M, i, inverse);
}

MVPolytope mv_vertices(const BZDatum& M) {
    require_flavor(M, Flavor::W0, "mv_vertices");
    const Rank r = M.rank();
    if (r.n > kMaxPolytopeRank)
        throw ResourceLimit("mv_vertices supports rank <= " + std::to_string(kMaxPolytopeRank));

    MVPolytope P{r, {}, {}};
    std::vector<int> images(static_cast<std::size_t>(r.letters()));
    std::iota(images.begin(), images.end(), 1);
    do {
        Permutation w(images);
        std::vector<int> mu(images.size(), 0);
        Mask prefix = 0;
        for (int i = 1; i <= r.n; ++i) {
            prefix |= bit(w(i));
            const int m = M.at(prefix);
            mu[static_cast<std::size_t>(w(i) - 1)] += m;
            mu[static_cast<std::size_t>(w(i + 1) - 1)] -= m;
        }
        P.vertices.push_back({std::move(w), std::move(mu)});
    } while (std::next_permutation(images.begin(), images.end()));

    for (const MayaDiagram& K : all_maya_diagrams(r)) P.halfspaces.emplace_back(K, M.at(K));
    return P;
}

int pair_with(const std::vector<int>& h, const MayaDiagram& K) {
    int s = 0;
    for (int k : K.members()) s += h.at(static_cast<std::size_t>(k - 1));
    return s;
}

std::string to_string(const MayaDiagram& K) {
    std::string s = "{";
    bool first = true;
    for (int k : K.members()) {
        s += (first ? "" : ",") + std::to_string(k);
        first = false;
    }
    return s + "}";
}

}  // namespace mvlab
