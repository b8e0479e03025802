#include "mvlab/weyl_words.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace mvlab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<int> seen(images_.size() + 1, 0);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]++)
            throw Error("permutation images are not a bijection");
    }
}

Permutation Permutation::identity(Rank r) {
    std::vector<int> im(static_cast<std::size_t>(r.letters()));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::longest(Rank r) {
    std::vector<int> im(static_cast<std::size_t>(r.letters()));
    for (int k = 1; k <= r.letters(); ++k) im[static_cast<std::size_t>(k - 1)] = r.n + 2 - k;
    return Permutation(std::move(im));
}

Permutation Permutation::from_word(Rank r, std::span<const int> letters) {
    Permutation w = identity(r);
    for (int i : letters) {
        if (i < 1 || i > r.n) throw Error("letter out of range: " + std::to_string(i));
        w = w.times_simple(i);
    }
    return w;
}

int Permutation::length() const {
    int inv = 0;
    for (std::size_t a = 0; a < images_.size(); ++a)
        for (std::size_t b = a + 1; b < images_.size(); ++b) inv += images_[a] > images_[b];
    return inv;
}

Permutation Permutation::times_simple(int i) const {
    Permutation w = *this;
    std::swap(w.images_[static_cast<std::size_t>(i - 1)], w.images_[static_cast<std::size_t>(i)]);
    return w;
}

bool is_reduced_word_of_w0(std::span<const int> letters, Rank r) {
    if (static_cast<int>(letters.size()) != r.roots()) return false;
    Permutation w = Permutation::identity(r);
    for (int i : letters) {
        if (i < 1 || i > r.n || !w.ascends_at(i)) return false;
        w = w.times_simple(i);
    }
    return w == Permutation::longest(r);
}

ReducedWord::ReducedWord(Rank r, std::vector<int> letters) : rank_(r), letters_(std::move(letters)) {
    if (!is_reduced_word_of_w0(letters_, rank_))
        throw Error("not a reduced word of the longest element");
}

ReducedWord ReducedWord::lex_minimal(Rank r) {
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(r.roots()));
    for (int top = 1; top <= r.n; ++top)
        for (int i = top; i >= 1; --i) letters.push_back(i);
    return ReducedWord(r, std::move(letters));
}

std::vector<Root> roots_in_order(const ReducedWord& word) {
    std::vector<Root> out;
    out.reserve(word.letters().size());
    Permutation w = Permutation::identity(word.rank());
    for (int i : word.letters()) {
        // w(alpha_i) = e_{w(i)} - e_{w(i+1)}, positive because w ascends at i.
        out.push_back(Root{w(i), w(i + 1)});
        w = w.times_simple(i);
    }
    return out;
}

bool move_applies(std::span<const int> letters, BraidMove move) {
    const auto k = static_cast<std::size_t>(move.pos - 1);
    if (move.pos < 1) return false;
    if (move.kind == BraidMove::Kind::Commute) {
        if (k + 1 >= letters.size()) return false;
        return std::abs(letters[k] - letters[k + 1]) >= 2;
    }
    if (k + 2 >= letters.size()) return false;
    return letters[k] == letters[k + 2] && std::abs(letters[k] - letters[k + 1]) == 1;
}

void apply_move(std::vector<int>& letters, BraidMove move) {
    if (!move_applies(letters, move)) throw Error("braid move does not apply: " + to_string(move));
    const auto k = static_cast<std::size_t>(move.pos - 1);
    if (move.kind == BraidMove::Kind::Commute) {
        std::swap(letters[k], letters[k + 1]);
    } else {
        const int a = letters[k], b = letters[k + 1];
        letters[k] = b;
        letters[k + 1] = a;
        letters[k + 2] = b;
    }
}

ReducedWord apply_moves(const ReducedWord& word, std::span<const BraidMove> path) {
    std::vector<int> letters = word.letters();
    for (const BraidMove& m : path) apply_move(letters, m);
    return ReducedWord(word.rank(), std::move(letters));
}

namespace {

using Key = std::string;

Key encode(const std::vector<int>& letters) {
    return Key(letters.begin(), letters.end());
}

std::vector<int> decode(const Key& key) {
    return std::vector<int>(key.begin(), key.end());
}

template <typename Visit>
void for_each_move(const std::vector<int>& letters, Visit&& visit) {
    const int len = static_cast<int>(letters.size());
    for (int pos = 1; pos < len; ++pos) {
        BraidMove commute{BraidMove::Kind::Commute, pos};
        if (move_applies(letters, commute)) visit(commute);
        BraidMove braid{BraidMove::Kind::Braid, pos};
        if (move_applies(letters, braid)) visit(braid);
    }
}

struct Parent {
    Key from;
    BraidMove move;
};

}  // namespace

std::vector<BraidMove> braid_path(const ReducedWord& from, const ReducedWord& to) {
    if (!(from.rank() == to.rank())) throw Error("braid_path: rank mismatch");
    if (from.rank().n > kMaxBraidPathRank)
        throw ResourceLimit("braid_path supports rank <= " + std::to_string(kMaxBraidPathRank));
    if (from == to) return {};

    // Every move is an involution, so a path found from the target side is
    // replayed in reverse order to finish the path.
    std::unordered_map<Key, Parent> seen_a, seen_b;
    const Key start = encode(from.letters()), goal = encode(to.letters());
    seen_a.emplace(start, Parent{start, {}});
    seen_b.emplace(goal, Parent{goal, {}});
    std::deque<Key> frontier_a{start}, frontier_b{goal};

    auto expand = [](std::deque<Key>& frontier, std::unordered_map<Key, Parent>& mine,
                     const std::unordered_map<Key, Parent>& other) -> const Key* {
        std::deque<Key> next;
        const Key* meet = nullptr;
        for (const Key& key : frontier) {
            std::vector<int> letters = decode(key);
            for_each_move(letters, [&](BraidMove m) {
                if (meet) return;
                std::vector<int> moved = letters;
                apply_move(moved, m);
                Key mk = encode(moved);
                auto [it, inserted] = mine.emplace(mk, Parent{key, m});
                if (!inserted) return;
                if (other.contains(mk)) meet = &it->first;
                next.push_back(std::move(mk));
            });
            if (meet) break;
        }
        frontier = std::move(next);
        return meet;
    };

    const Key* meet = nullptr;
    while (!meet) {
        if (frontier_a.empty() || frontier_b.empty())
            throw Error("braid_path: words are not connected by braid moves");
        if (seen_a.size() + seen_b.size() > kMaxBraidSearchStates)
            throw ResourceLimit("braid_path: search budget exhausted");
        if (frontier_a.size() <= frontier_b.size())
            meet = expand(frontier_a, seen_a, seen_b);
        else
            meet = expand(frontier_b, seen_b, seen_a);
    }

    std::vector<BraidMove> path;
    for (Key k = *meet; k != start;) {
        const Parent& p = seen_a.at(k);
        path.push_back(p.move);
        k = p.from;
    }
    std::reverse(path.begin(), path.end());
    for (Key k = *meet; k != goal;) {
        const Parent& p = seen_b.at(k);
        path.push_back(p.move);
        k = p.from;
    }
    return path;
}

void transport_coordinates(std::vector<int>& coords, BraidMove move) {
    const auto k = static_cast<std::size_t>(move.pos - 1);
    if (move.kind == BraidMove::Kind::Commute) {
        std::swap(coords.at(k), coords.at(k + 1));
        return;
    }
    const int a = coords.at(k), b = coords.at(k + 1), c = coords.at(k + 2);
    const int p = std::min(a, c);
    coords[k] = b + c - p;
    coords[k + 1] = p;
    coords[k + 2] = a + b - p;
}

std::vector<int> transition_along(std::span<const int> coords, const ReducedWord& from,
                                  std::span<const BraidMove> path) {
    if (static_cast<int>(coords.size()) != from.size())
        throw Error("transition: coordinate count does not match the word length");
    std::vector<int> letters = from.letters();
    std::vector<int> out(coords.begin(), coords.end());
    for (const BraidMove& m : path) {
        apply_move(letters, m);
        transport_coordinates(out, m);
    }
    return out;
}

std::vector<int> transition(std::span<const int> coords, const ReducedWord& from,
                            const ReducedWord& to) {
    if (!(from.rank() == to.rank())) throw Error("transition: rank mismatch");
    const auto path = braid_path(from, to);
    return transition_along(coords, from, path);
}

std::string to_string(BraidMove m) {
    return std::string(m.kind == BraidMove::Kind::Commute ? "2move" : "3move") + "@" +
           std::to_string(m.pos);
}

}  // namespace mvlab
