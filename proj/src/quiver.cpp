#include "mvlab/quiver.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mvlab {

Orientation::Orientation(Rank r, std::vector<Dir> dirs) : rank_(r), dirs_(std::move(dirs)) {
    if (static_cast<int>(dirs_.size()) != r.n - 1)
        throw Error("orientation needs " + std::to_string(r.n - 1) + " edge directions");
}

Orientation Orientation::toward_one(Rank r) {
    return Orientation(r, std::vector<Dir>(static_cast<std::size_t>(r.n - 1), Dir::RightToLeft));
}

Orientation Orientation::parse(Rank r, const std::string& text) {
    std::vector<Dir> dirs;
    for (char ch : text) {
        if (ch == 'R')
            dirs.push_back(Dir::LeftToRight);
        else if (ch == 'L')
            dirs.push_back(Dir::RightToLeft);
        else
            throw Error(std::string("orientation characters must be R or L, got '") + ch + "'");
    }
    return Orientation(r, std::move(dirs));
}

bool Orientation::is_sink(int i) const {
    if (i > 1 && tail(i - 1) == i) return false;
    if (i < rank_.n && tail(i) == i) return false;
    return true;
}

bool Orientation::is_source(int i) const {
    if (i > 1 && head(i - 1) == i) return false;
    if (i < rank_.n && head(i) == i) return false;
    return true;
}

std::vector<int> Orientation::sinks() const {
    std::vector<int> out;
    for (int i = 1; i <= rank_.n; ++i)
        if (is_sink(i)) out.push_back(i);
    return out;
}

std::vector<int> Orientation::sources() const {
    std::vector<int> out;
    for (int i = 1; i <= rank_.n; ++i)
        if (is_source(i)) out.push_back(i);
    return out;
}

Orientation Orientation::reflect(int i) const {
    if (i < 1 || i > rank_.n) throw Error("vertex out of range");
    if (!is_sink(i) && !is_source(i)) throw Error("can only reflect at a sink or a source");
    Orientation out = *this;
    auto flip = [](Dir d) { return d == Dir::LeftToRight ? Dir::RightToLeft : Dir::LeftToRight; };
    if (i > 1) out.dirs_[static_cast<std::size_t>(i - 2)] = flip(out.dirs_[static_cast<std::size_t>(i - 2)]);
    if (i < rank_.n) out.dirs_[static_cast<std::size_t>(i - 1)] = flip(out.dirs_[static_cast<std::size_t>(i - 1)]);
    return out;
}

bool Orientation::has_path(int k, int l) const {
    if (k <= l) {
        for (int e = k; e < l; ++e)
            if (dir(e) != Dir::LeftToRight) return false;
    } else {
        for (int e = l; e < k; ++e)
            if (dir(e) != Dir::RightToLeft) return false;
    }
    return true;
}

std::string Orientation::to_string() const {
    std::string s;
    for (Dir d : dirs_) s += static_cast<char>(d);
    return s;
}

PrescribedEnds prescribed_sources_sinks(const MayaDiagram& K) {
    const int n = K.rank().n;
    const MayaComponents c = components(K);
    const int s1 = c.intervals.front().first;
    const int tl = c.intervals.back().second;

    std::set<int> sources(c.out_set.begin(), c.out_set.end());
    std::set<int> sinks(c.in_set.begin(), c.in_set.end());
    if (s1 >= 2) sources.insert(1);
    if (tl == n + 1) sources.insert(n);
    if (s1 == 0) sinks.insert(1);
    if (tl <= n - 1) sinks.insert(n);
    return {std::vector<int>(sources.begin(), sources.end()), std::vector<int>(sinks.begin(), sinks.end())};
}

Orientation orientation_from_maya(const MayaDiagram& K) {
    const Rank r = K.rank();
    std::vector<Dir> dirs;
    for (int k = 1; k < r.n; ++k) dirs.push_back(K.contains(k + 1) ? Dir::RightToLeft : Dir::LeftToRight);
    Orientation omega(r, std::move(dirs));

    const MayaComponents c = components(K);
    for (int t : c.out_set)
        if (!omega.is_source(t)) throw std::logic_error("Omega(K): out(K) vertex is not a source");
    for (int s : c.in_set)
        if (!omega.is_sink(s)) throw std::logic_error("Omega(K): in(K) vertex is not a sink");

    // The tables overlap in a few boundary cases; they pin the orientation
    // only when their two sets are disjoint.
    const PrescribedEnds want = prescribed_sources_sinks(K);
    std::vector<int> both;
    std::set_intersection(want.sources.begin(), want.sources.end(), want.sinks.begin(), want.sinks.end(),
                          std::back_inserter(both));
    if (r.n >= 2 && both.empty() && (omega.sources() != want.sources || omega.sinks() != want.sinks))
        throw std::logic_error("Omega(K) disagrees with the prescribed sources and sinks for " + to_string(K));
    return omega;
}

std::optional<Root> characterizing_root(const MayaDiagram& K) {
    const MayaComponents c = components(K);
    if (c.s_K < c.t_K) return Root{c.s_K, c.t_K};
    return std::nullopt;
}

bool is_adapted(const ReducedWord& word, const Orientation& omega) {
    if (!(word.rank() == omega.rank())) return false;
    Orientation cur = omega;
    for (int i : word.letters()) {
        if (!cur.is_sink(i)) return false;
        cur = cur.reflect(i);
    }
    return true;
}

ReducedWord adapted_word(const Orientation& omega) {
    const Rank r = omega.rank();
    const int N = r.roots();
    std::vector<int> letters;
    std::function<bool(const Orientation&, const Permutation&)> dfs = [&](const Orientation& cur,
                                                                         const Permutation& w) {
        if (static_cast<int>(letters.size()) == N) return true;
        for (int i = 1; i <= r.n; ++i) {
            if (!cur.is_sink(i) || !w.ascends_at(i)) continue;
            letters.push_back(i);
            if (dfs(cur.reflect(i), w.times_simple(i))) return true;
            letters.pop_back();
        }
        return false;
    };
    if (!dfs(omega, Permutation::identity(r))) throw std::logic_error("no adapted reduced word found");
    return ReducedWord(r, letters);
}

int QuiverModule::total_dim() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
}

QuiverModule zero_module(const Orientation& omega) {
    QuiverModule V{omega, std::vector<int>(static_cast<std::size_t>(omega.rank().n), 0), {}};
    for (int e = 1; e < omega.rank().n; ++e) V.maps.emplace_back(0, 0);
    return V;
}

namespace {

QuiverModule direct_sum_of_intervals(const std::vector<std::pair<Root, int>>& summands, const Orientation& omega) {
    const int n = omega.rank().n;
    QuiverModule V{omega, std::vector<int>(static_cast<std::size_t>(n), 0), {}};
    // offsets[s][v-1] is the coordinate of summand s at vertex v.
    std::vector<std::vector<int>> offsets;
    for (const auto& [root, mult] : summands) {
        if (!root.valid_for(omega.rank())) throw Error("root out of range");
        for (int m = 0; m < mult; ++m) {
            std::vector<int> at(static_cast<std::size_t>(n), -1);
            for (int v = root.i; v < root.j; ++v) at[static_cast<std::size_t>(v - 1)] = V.dims[static_cast<std::size_t>(v - 1)]++;
            offsets.push_back(std::move(at));
        }
    }
    for (int e = 1; e < n; ++e) {
        const int t = omega.tail(e), h = omega.head(e);
        Matrix<Rational> B(V.dim(h), V.dim(t));
        for (const auto& at : offsets) {
            const int ct = at[static_cast<std::size_t>(t - 1)], ch = at[static_cast<std::size_t>(h - 1)];
            if (ct >= 0 && ch >= 0) B(ch, ct) = 1;
        }
        V.maps.push_back(std::move(B));
    }
    return V;
}

Matrix<Rational> path_composite(const QuiverModule& V, int k, int l) {
    Matrix<Rational> acc = Matrix<Rational>::identity(V.dim(k));
    if (k < l) {
        for (int e = k; e < l; ++e) acc = multiply(V.map(e), acc);
    } else {
        for (int e = k - 1; e >= l; --e) acc = multiply(V.map(e), acc);
    }
    return acc;
}

}  // namespace

QuiverModule indecomposable(Root beta, const Orientation& omega) {
    if (!beta.valid_for(omega.rank())) throw Error("root " + to_string(beta) + " out of range");
    return direct_sum_of_intervals({{beta, 1}}, omega);
}

QuiverModule build_module(std::span<const int> coords, const ReducedWord& word, const Orientation& omega) {
    if (static_cast<int>(coords.size()) != word.size()) throw Error("coordinate count does not match the word");
    if (!(word.rank() == omega.rank())) throw Error("build_module: rank mismatch");
    const auto roots = roots_in_order(word);
    std::vector<std::pair<Root, int>> summands;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        if (coords[k] < 0) throw Error("multiplicities must be non-negative");
        if (coords[k] > 0) summands.emplace_back(roots[k], coords[k]);
    }
    return direct_sum_of_intervals(summands, omega);
}

int hom_dimension(const QuiverModule& V, const QuiverModule& W) {
    if (!(V.orientation == W.orientation)) throw Error("hom_dimension: orientation mismatch");
    const int n = V.orientation.rank().n;
    std::vector<int> offset(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) offset[static_cast<std::size_t>(v)] = offset[static_cast<std::size_t>(v - 1)] + W.dim(v) * V.dim(v);
    const int unknowns = offset.back();
    if (unknowns == 0) return 0;
    // phi_v(r, c) is unknown offset[v-1] + r * V.dim(v) + c.
    auto var = [&](int v, int r, int c) { return offset[static_cast<std::size_t>(v - 1)] + r * V.dim(v) + c; };

    int eqs = 0;
    for (int e = 1; e < n; ++e) eqs += W.dim(V.orientation.head(e)) * V.dim(V.orientation.tail(e));
    Matrix<Rational> A(eqs, unknowns);
    int row = 0;
    for (int e = 1; e < n; ++e) {
        const int t = V.orientation.tail(e), h = V.orientation.head(e);
        const auto& BV = V.map(e);
        const auto& BW = W.map(e);
        // (phi_h BV - BW phi_t)(r, c) = 0
        for (int r = 0; r < W.dim(h); ++r)
            for (int c = 0; c < V.dim(t); ++c, ++row) {
                for (int m = 0; m < V.dim(h); ++m)
                    if (BV(m, c) != 0) A(row, var(h, r, m)) += BV(m, c);
                for (int m = 0; m < W.dim(t); ++m)
                    if (BW(r, m) != 0) A(row, var(t, m, c)) -= BW(r, m);
            }
    }
    return unknowns - rank(std::move(A));
}

int m_k_via_hom(std::span<const int> coords, const ReducedWord& word, const MayaDiagram& K) {
    if (static_cast<int>(coords.size()) != word.size()) throw Error("coordinate count does not match the word");
    const auto roots = roots_in_order(word);
    int s = 0;
    for (std::size_t k = 0; k < roots.size(); ++k)
        if (!K.contains(roots[k].i) && K.contains(roots[k].j)) s += coords[k];
    return -s;
}

int m_k_via_hom_dimension(const QuiverModule& V, const MayaDiagram& K) {
    const auto beta = characterizing_root(K);
    if (!beta) return 0;
    return -hom_dimension(V, indecomposable(*beta, V.orientation));
}

int m_k_via_coker(const QuiverModule& V, const MayaDiagram& K) {
    if (!(V.orientation == orientation_from_maya(K))) throw Error("m_k_via_coker: module is not over Omega(K)");
    const MayaComponents c = components(K);
    int rows = 0, cols = 0;
    for (int l : c.in_set) rows += V.dim(l);
    for (int k : c.out_set) cols += V.dim(k);
    if (rows == 0) return 0;

    Matrix<Rational> A(rows, cols);
    int r0 = 0;
    for (int l : c.in_set) {
        int c0 = 0;
        for (int k : c.out_set) {
            if (V.orientation.has_path(k, l)) {
                const auto B = path_composite(V, k, l);
                for (int r = 0; r < B.rows(); ++r)
                    for (int q = 0; q < B.cols(); ++q) A(r0 + r, c0 + q) = B(r, q);
            }
            c0 += V.dim(k);
        }
        r0 += V.dim(l);
    }
    return -(rows - rank(std::move(A)));
}

std::string to_string(const QuiverModule& V) {
    std::ostringstream os;
    os << "orientation " << V.orientation.to_string() << "\ndims";
    for (int d : V.dims) os << ' ' << d;
    os << '\n';
    for (int e = 1; e < V.orientation.rank().n; ++e) {
        os << "B" << e << " (" << V.orientation.tail(e) << "->" << V.orientation.head(e) << ")\n";
        const auto& B = V.map(e);
        for (int r = 0; r < B.rows(); ++r) {
            for (int q = 0; q < B.cols(); ++q) os << (q ? " " : "  ") << B(r, q);
            os << '\n';
        }
    }
    return os.str();
}

}  // namespace mvlab
