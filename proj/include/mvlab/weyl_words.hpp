#pragma once

// Symmetric-group machinery: permutations, reduced words of the longest
// element, braid moves and the piecewise-linear transition maps between
// Lusztig data attached to different reduced words.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mvlab/core.hpp"

namespace mvlab {

/// A bijection of [1, n+1] in one-line notation: images[k-1] = w(k).
class Permutation {
public:
    static Permutation identity(Rank r);
    static Permutation longest(Rank r);
    /// Product s_{letters[0]} s_{letters[1]} ... as a composition of maps.
    static Permutation from_word(Rank r, std::span<const int> letters);

    explicit Permutation(std::vector<int> images);

    int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
    int size() const { return static_cast<int>(images_.size()); }
    const std::vector<int>& images() const { return images_; }

    /// Number of inversions.
    int length() const;
    /// Right multiplication by s_i: swaps the values at positions i and i+1.
    Permutation times_simple(int i) const;
    /// ell(w s_i) > ell(w).
    bool ascends_at(int i) const { return (*this)(i) < (*this)(i + 1); }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// True iff letters has length N and spells w0 without cancellation.
bool is_reduced_word_of_w0(std::span<const int> letters, Rank r);

/// A validated reduced word of w0.
class ReducedWord {
public:
    /// Throws Error unless letters is a reduced word of w0.
    ReducedWord(Rank r, std::vector<int> letters);

    /// (1, 2,1, 3,2,1, ..., n,...,1).
    static ReducedWord lex_minimal(Rank r);

    Rank rank() const { return rank_; }
    const std::vector<int>& letters() const { return letters_; }
    int operator[](int pos) const { return letters_[static_cast<std::size_t>(pos - 1)]; }
    int size() const { return static_cast<int>(letters_.size()); }

    friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
        return a.rank_ == b.rank_ && a.letters_ == b.letters_;
    }

private:
    Rank rank_;
    std::vector<int> letters_;
};

/// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}) for k = 1..N.
std::vector<Root> roots_in_order(const ReducedWord& word);

/// A local rewrite of a reduced word. pos is 1-based and names the first
/// letter touched: a 2-move swaps letters pos, pos+1 (|i-j| >= 2); a 3-move
/// rewrites (i,j,i) at pos..pos+2 into (j,i,j) (|i-j| = 1).
struct BraidMove {
    enum class Kind : std::uint8_t { Commute, Braid };
    Kind kind = Kind::Commute;
    int pos = 1;

    friend bool operator==(const BraidMove&, const BraidMove&) = default;
};

/// Whether the move applies to the letters as they stand.
bool move_applies(std::span<const int> letters, BraidMove move);
/// Rewrite letters in place; throws Error if the move does not apply.
void apply_move(std::vector<int>& letters, BraidMove move);
/// Replay a path of moves starting from word.
ReducedWord apply_moves(const ReducedWord& word, std::span<const BraidMove> path);

/// Highest rank accepted by braid_path.
inline constexpr int kMaxBraidPathRank = 6;
/// Visited-word budget of the bidirectional search.
inline constexpr std::size_t kMaxBraidSearchStates = 6'000'000;

/// A shortest sequence of braid moves turning `from` into `to`, found by
/// bidirectional breadth-first search.
std::vector<BraidMove> braid_path(const ReducedWord& from, const ReducedWord& to);

/// Carry coordinates (indexed by word position) across one move.
void transport_coordinates(std::vector<int>& coords, BraidMove move);

/// Transition map between Lusztig data of two reduced words, following
/// braid_path. coords[k-1] is the multiplicity of the k-th root of `from`.
std::vector<int> transition(std::span<const int> coords, const ReducedWord& from,
                            const ReducedWord& to);

/// Transition map along an explicit path, which must turn `from` into a word
/// of the same rank; returns coordinates of the path's endpoint.
std::vector<int> transition_along(std::span<const int> coords, const ReducedWord& from,
                                  std::span<const BraidMove> path);

std::string to_string(BraidMove m);

}  // namespace mvlab
