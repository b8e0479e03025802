#pragma once

// Crystal and *-crystal structures on Lusztig data for the lexicographically
// minimal reduced word. This realization is the ground truth the other
// realizations are checked against.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvlab/core.hpp"
#include "mvlab/weyl_words.hpp"

namespace mvlab {

/// Non-negative multiplicities a_{i,j} indexed by positive roots (i,j).
///
/// Entries are stored in the lexicographic-word root order, so the storage is
/// also the coordinate vector for ReducedWord::lex_minimal. Reads outside the
/// positive roots (a_{0,i}, a_{i+1,n+2}, diagonal a_{k,k}) return 0.
class LusztigDatum {
public:
    explicit LusztigDatum(Rank r);
    LusztigDatum(Rank r, std::vector<int> entries);

    Rank rank() const { return rank_; }
    const std::vector<int>& entries() const { return entries_; }

    int at(int i, int j) const;
    int at(Root r) const { return at(r.i, r.j); }
    void set(Root r, int value);

    int height() const;
    bool is_zero() const;

    friend bool operator==(const LusztigDatum&, const LusztigDatum&) = default;
    friend auto operator<=>(const LusztigDatum& a, const LusztigDatum& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    Rank rank_;
    std::vector<int> entries_;
};

/// One of the eight Kashiwara operators e_i, f_i, e*_i, f*_i.
struct CrystalOp {
    enum class Kind : std::uint8_t { E, F, EStar, FStar };
    Kind kind = Kind::F;
    int index = 1;

    friend bool operator==(const CrystalOp&, const CrystalOp&) = default;
};

/// Parses "e3", "f1", "e*2", "f*4".
CrystalOp parse_crystal_op(const std::string& token);
std::string to_string(CrystalOp op);
/// Whitespace-separated operator word, applied left to right.
std::vector<CrystalOp> parse_op_word(const std::string& text);

/// wt(a) = -sum_i m_i alpha_i with m_i = sum_{k <= i < l} a_{k,l}.
Weight weight(const LusztigDatum& a);

/// (A_1^(i), ..., A_i^(i)).
std::vector<int> a_path_sums(const LusztigDatum& a, int i);
/// (A*_i^(i), ..., A*_n^(i)); element l-i holds A*_l^(i).
std::vector<int> a_star_sums(const LusztigDatum& a, int i);

int epsilon(const LusztigDatum& a, int i);
int phi(const LusztigDatum& a, int i);
int epsilon_star(const LusztigDatum& a, int i);
int phi_star(const LusztigDatum& a, int i);

/// Applies a Kashiwara operator; std::nullopt is the crystal's 0 (Bottom).
std::optional<LusztigDatum> apply(const LusztigDatum& a, CrystalOp op);

/// Applies an operator word left to right. On Bottom, returns std::nullopt
/// and, if given, stores the 0-based position of the failing operator.
std::optional<LusztigDatum> apply_word(const LusztigDatum& a, std::span<const CrystalOp> ops,
                                       std::size_t* failed_at = nullptr);

LusztigDatum e_max(const LusztigDatum& a, int i);
LusztigDatum e_star_max(const LusztigDatum& a, int i);

/// Cap on (#data x N) for enumerations; overridable by MVLAB_MAX_CELLS.
std::size_t max_enumeration_cells();

/// Number of data of the rank with entry sum <= height.
std::size_t count_by_height(Rank r, int height);

/// Visits every datum with entry sum <= height, in lexicographic order of the
/// entry vectors. Throws ResourceLimit past max_enumeration_cells().
void for_each_by_height(Rank r, int height, const std::function<void(const LusztigDatum&)>& visit);
std::vector<LusztigDatum> enumerate_by_height(Rank r, int height);

/// All data with weight -nu (nu given as the m_i vector), lexicographic order.
std::vector<LusztigDatum> enumerate_by_weight(Rank r, const std::vector<int>& nu);

std::string to_string(const LusztigDatum& a);

}  // namespace mvlab
