#pragma once

// Type A_n quivers: orientations, the orientation and characterizing root of a
// Maya diagram, adapted reduced words, explicit modules, Hom and cokernel
// dimensions.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvlab/core.hpp"
#include "mvlab/linalg.hpp"
#include "mvlab/maya_bz.hpp"
#include "mvlab/weyl_words.hpp"

namespace mvlab {

/// Arrow direction on the edge {k, k+1}.
enum class Dir : char { LeftToRight = 'R', RightToLeft = 'L' };

/// Orientation of the path graph on vertices 1..n. Edge k joins k and k+1.
class Orientation {
public:
    Orientation(Rank r, std::vector<Dir> dirs);
    /// All arrows k+1 -> k, pointing toward vertex 1.
    static Orientation toward_one(Rank r);
    /// Parses a string of 'R' (k -> k+1) and 'L' (k+1 -> k) of length n-1.
    static Orientation parse(Rank r, const std::string& text);

    Rank rank() const { return rank_; }
    Dir dir(int edge) const { return dirs_[static_cast<std::size_t>(edge - 1)]; }
    const std::vector<Dir>& dirs() const { return dirs_; }

    /// Tail and head of the arrow on edge k.
    int tail(int edge) const { return dir(edge) == Dir::LeftToRight ? edge : edge + 1; }
    int head(int edge) const { return dir(edge) == Dir::LeftToRight ? edge + 1 : edge; }

    bool is_sink(int i) const;
    bool is_source(int i) const;
    std::vector<int> sinks() const;
    std::vector<int> sources() const;

    /// Reverses every arrow at i; i must be a sink or a source.
    Orientation reflect(int i) const;

    /// Whether a directed path runs from k to l (k == l counts).
    bool has_path(int k, int l) const;

    std::string to_string() const;

    friend bool operator==(const Orientation&, const Orientation&) = default;

private:
    Rank rank_;
    std::vector<Dir> dirs_;
};

/// The source and sink sets prescribed for Omega(K) by the case tables.
struct PrescribedEnds {
    std::vector<int> sources;
    std::vector<int> sinks;
};
PrescribedEnds prescribed_sources_sinks(const MayaDiagram& K);

/// Omega(K): edge {k, k+1} points k+1 -> k iff k+1 lies in K. Construction is
/// checked against out(K), in(K) and, where they are consistent, the case
/// tables; a mismatch throws std::logic_error.
Orientation orientation_from_maya(const MayaDiagram& K);

/// beta_K as a root, or std::nullopt when it is zero.
std::optional<Root> characterizing_root(const MayaDiagram& K);

/// Whether every letter is a sink of the successively reflected orientation.
bool is_adapted(const ReducedWord& word, const Orientation& omega);

/// A reduced word of w0 adapted to omega. Depth-first over sink choices,
/// smallest sink first.
ReducedWord adapted_word(const Orientation& omega);

/// Representation over Q: one matrix per edge, mapping V_tail -> V_head.
struct QuiverModule {
    Orientation orientation;
    std::vector<int> dims;                // dims[v-1] = dim V_v
    std::vector<Matrix<Rational>> maps;   // maps[k-1]: dim V_head x dim V_tail

    int dim(int v) const { return dims[static_cast<std::size_t>(v - 1)]; }
    const Matrix<Rational>& map(int edge) const { return maps[static_cast<std::size_t>(edge - 1)]; }
    int total_dim() const;
    friend bool operator==(const QuiverModule&, const QuiverModule&) = default;
};

/// Zero module on omega.
QuiverModule zero_module(const Orientation& omega);

/// Interval module for the root (i, j): C on vertices i..j-1, identities inside.
QuiverModule indecomposable(Root beta, const Orientation& omega);

/// Direct sum of interval modules; coords[k-1] is the multiplicity of the
/// k-th root of `word`.
QuiverModule build_module(std::span<const int> coords, const ReducedWord& word, const Orientation& omega);

/// dim Hom(V, W) over Q.
int hom_dimension(const QuiverModule& V, const QuiverModule& W);

/// -sum of coordinates over roots (i, j) with i not in K and j in K.
int m_k_via_hom(std::span<const int> coords, const ReducedWord& word, const MayaDiagram& K);

/// -dim Hom(V, e(beta_K)) with V over Omega(K).
int m_k_via_hom_dimension(const QuiverModule& V, const MayaDiagram& K);

/// -dim Coker of the path-composite map from the out(K) spaces to the in(K) spaces.
int m_k_via_coker(const QuiverModule& V, const MayaDiagram& K);

/// Dense text dump of dims and maps.
std::string to_string(const QuiverModule& V);

}  // namespace mvlab
