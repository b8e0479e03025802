#include "mvlab/lusztig.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace mvlab {

LusztigDatum::LusztigDatum(Rank r) : rank_(r), entries_(static_cast<std::size_t>(r.roots()), 0) {}

LusztigDatum::LusztigDatum(Rank r, std::vector<int> entries) : rank_(r), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != r.roots())
        throw Error("Lusztig datum needs " + std::to_string(r.roots()) + " entries");
    for (int v : entries_)
        if (v < 0) throw Error("Lusztig datum entries must be non-negative");
}

int LusztigDatum::at(int i, int j) const {
    if (i < 1 || j > rank_.letters() || i >= j) return 0;
    return entries_[static_cast<std::size_t>(lex_root_index(Root{i, j}))];
}

void LusztigDatum::set(Root r, int value) {
    if (!r.valid_for(rank_)) throw Error("root " + to_string(r) + " out of range");
    if (value < 0) throw Error("Lusztig datum entries must be non-negative");
    entries_[static_cast<std::size_t>(lex_root_index(r))] = value;
}

int LusztigDatum::height() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool LusztigDatum::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v == 0; });
}

CrystalOp parse_crystal_op(const std::string& token) {
    CrystalOp op;
    std::size_t pos = 0;
    if (token.empty()) throw Error("empty operator token");
    const char head = static_cast<char>(std::tolower(static_cast<unsigned char>(token[0])));
    if (head != 'e' && head != 'f') throw Error("operator must start with e or f: " + token);
    pos = 1;
    const bool star = pos < token.size() && token[pos] == '*';
    if (star) ++pos;
    if (pos >= token.size() ||
        !std::all_of(token.begin() + static_cast<std::ptrdiff_t>(pos), token.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
        throw Error("operator needs a numeric index: " + token);
    op.index = std::stoi(token.substr(pos));
    if (head == 'e')
        op.kind = star ? CrystalOp::Kind::EStar : CrystalOp::Kind::E;
    else
        op.kind = star ? CrystalOp::Kind::FStar : CrystalOp::Kind::F;
    return op;
}

std::string to_string(CrystalOp op) {
    switch (op.kind) {
        case CrystalOp::Kind::E: return "e" + std::to_string(op.index);
        case CrystalOp::Kind::F: return "f" + std::to_string(op.index);
        case CrystalOp::Kind::EStar: return "e*" + std::to_string(op.index);
        case CrystalOp::Kind::FStar: return "f*" + std::to_string(op.index);
    }
    return "?";
}

std::vector<CrystalOp> parse_op_word(const std::string& text) {
    std::istringstream in(text);
    std::vector<CrystalOp> ops;
    for (std::string tok; in >> tok;) ops.push_back(parse_crystal_op(tok));
    return ops;
}

namespace {

void check_index(const LusztigDatum& a, int i) {
    if (i < 1 || i > a.rank().n)
        throw Error("crystal index " + std::to_string(i) + " out of range for rank " +
                    std::to_string(a.rank().n));
}

// Writes to cells outside the positive roots (the diagonal) are dropped.
void bump(LusztigDatum& a, int i, int j, int delta) {
    if (i < 1 || i >= j || j > a.rank().letters()) return;
    a.set(Root{i, j}, a.at(i, j) + delta);
}

int max_of(const std::vector<int>& v) { return *std::max_element(v.begin(), v.end()); }

}  // namespace

Weight weight(const LusztigDatum& a) {
    const Rank r = a.rank();
    Weight w(r);
    for (int i = 1; i <= r.n; ++i) {
        int m = 0;
        for (int k = 1; k <= i; ++k)
            for (int l = i + 1; l <= r.letters(); ++l) m += a.at(k, l);
        w[i] = -m;
    }
    return w;
}

std::vector<int> a_path_sums(const LusztigDatum& a, int i) {
    check_index(a, i);
    std::vector<int> out;
    int acc = 0;
    for (int s = 1; s <= i; ++s) {
        acc += a.at(s, i + 1) - a.at(s - 1, i);
        out.push_back(acc);
    }
    return out;
}

std::vector<int> a_star_sums(const LusztigDatum& a, int i) {
    check_index(a, i);
    const int n = a.rank().n;
    std::vector<int> out(static_cast<std::size_t>(n - i + 1));
    int acc = 0;
    for (int l = n; l >= i; --l) {
        acc += a.at(i, l + 1) - a.at(i + 1, l + 2);
        out[static_cast<std::size_t>(l - i)] = acc;
    }
    return out;
}

int epsilon(const LusztigDatum& a, int i) { return max_of(a_path_sums(a, i)); }
int phi(const LusztigDatum& a, int i) { return epsilon(a, i) + weight(a).pairing(i); }
int epsilon_star(const LusztigDatum& a, int i) { return max_of(a_star_sums(a, i)); }
int phi_star(const LusztigDatum& a, int i) { return epsilon_star(a, i) + weight(a).pairing(i); }

std::optional<LusztigDatum> apply(const LusztigDatum& a, CrystalOp op) {
    check_index(a, op.index);
    const int i = op.index;
    LusztigDatum out = a;
    switch (op.kind) {
        case CrystalOp::Kind::E:
        case CrystalOp::Kind::F: {
            const auto sums = a_path_sums(a, i);
            const int eps = max_of(sums);
            if (op.kind == CrystalOp::Kind::E) {
                if (eps == 0) return std::nullopt;
                const int k = static_cast<int>(std::find(sums.begin(), sums.end(), eps) - sums.begin()) + 1;
                bump(out, k, i, +1);
                bump(out, k, i + 1, -1);
            } else {
                const int k = static_cast<int>(sums.rend() - std::find(sums.rbegin(), sums.rend(), eps));
                bump(out, k, i, -1);
                bump(out, k, i + 1, +1);
            }
            return out;
        }
        case CrystalOp::Kind::EStar:
        case CrystalOp::Kind::FStar: {
            const auto sums = a_star_sums(a, i);
            const int eps = max_of(sums);
            if (op.kind == CrystalOp::Kind::EStar) {
                if (eps == 0) return std::nullopt;
                // l_e is the largest maximizer.
                const int l = i - 1 + static_cast<int>(sums.rend() - std::find(sums.rbegin(), sums.rend(), eps));
                bump(out, i, l + 1, -1);
                bump(out, i + 1, l + 1, +1);
            } else {
                const int l = i + static_cast<int>(std::find(sums.begin(), sums.end(), eps) - sums.begin());
                bump(out, i, l + 1, +1);
                bump(out, i + 1, l + 1, -1);
            }
            return out;
        }
    }
    return std::nullopt;
}

std::optional<LusztigDatum> apply_word(const LusztigDatum& a, std::span<const CrystalOp> ops,
                                       std::size_t* failed_at) {
    std::optional<LusztigDatum> cur = a;
    for (std::size_t k = 0; k < ops.size(); ++k) {
        cur = apply(*cur, ops[k]);
        if (!cur) {
            if (failed_at) *failed_at = k;
            return std::nullopt;
        }
    }
    return cur;
}

LusztigDatum e_max(const LusztigDatum& a, int i) {
    LusztigDatum cur = a;
    while (auto next = apply(cur, {CrystalOp::Kind::E, i})) cur = std::move(*next);
    return cur;
}

LusztigDatum e_star_max(const LusztigDatum& a, int i) {
    LusztigDatum cur = a;
    while (auto next = apply(cur, {CrystalOp::Kind::EStar, i})) cur = std::move(*next);
    return cur;
}

std::size_t max_enumeration_cells() {
    constexpr std::size_t kDefault = 50'000'000;
    if (const char* env = std::getenv("MVLAB_MAX_CELLS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return static_cast<std::size_t>(v);
    }
    return kDefault;
}

std::size_t count_by_height(Rank r, int height) {
    if (height < 0) return 0;
    // C(height + N, N), saturating.
    const std::size_t n = static_cast<std::size_t>(r.roots());
    long double c = 1;
    for (std::size_t k = 1; k <= n; ++k) c = c * static_cast<long double>(height + static_cast<int>(k)) / k;
    if (c > 1e18L) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(c + 0.5L);
}

void for_each_by_height(Rank r, int height, const std::function<void(const LusztigDatum&)>& visit) {
    if (height < 0) throw Error("max height must be non-negative");
    const std::size_t count = count_by_height(r, height);
    if (count > max_enumeration_cells() / static_cast<std::size_t>(r.roots()))
        throw ResourceLimit("enumeration of " + std::to_string(count) + " data exceeds MVLAB_MAX_CELLS");

    const int len = r.roots();
    std::vector<int> entries(static_cast<std::size_t>(len), 0);
    std::function<void(int, int)> rec = [&](int pos, int budget) {
        if (pos == len) {
            visit(LusztigDatum(r, entries));
            return;
        }
        for (int v = 0; v <= budget; ++v) {
            entries[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, budget - v);
        }
        entries[static_cast<std::size_t>(pos)] = 0;
    };
    rec(0, height);
}

std::vector<LusztigDatum> enumerate_by_height(Rank r, int height) {
    std::vector<LusztigDatum> out;
    for_each_by_height(r, height, [&](const LusztigDatum& a) { out.push_back(a); });
    return out;
}

std::vector<LusztigDatum> enumerate_by_weight(Rank r, const std::vector<int>& nu) {
    if (static_cast<int>(nu.size()) != r.n) throw Error("weight has the wrong number of coefficients");
    std::vector<LusztigDatum> out;
    if (std::any_of(nu.begin(), nu.end(), [](int v) { return v < 0; })) return out;
    const auto roots = lex_roots(r);
    std::vector<int> entries(roots.size(), 0), rest = nu;
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == roots.size()) {
            if (std::all_of(rest.begin(), rest.end(), [](int v) { return v == 0; }))
                out.emplace_back(r, entries);
            return;
        }
        const Root root = roots[pos];
        int cap = rest[static_cast<std::size_t>(root.i - 1)];
        for (int k = root.i; k < root.j; ++k) cap = std::min(cap, rest[static_cast<std::size_t>(k - 1)]);
        for (int v = 0; v <= cap; ++v) {
            entries[pos] = v;
            for (int k = root.i; k < root.j; ++k) rest[static_cast<std::size_t>(k - 1)] -= v;
            rec(pos + 1);
            for (int k = root.i; k < root.j; ++k) rest[static_cast<std::size_t>(k - 1)] += v;
        }
        entries[pos] = 0;
    };
    rec(0);
    return out;
}

std::string to_string(const LusztigDatum& a) {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < a.entries().size(); ++k) os << (k ? "," : "") << a.entries()[k];
    os << ']';
    return os.str();
}

}  // namespace mvlab
