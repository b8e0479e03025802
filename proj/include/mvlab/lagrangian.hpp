#pragma once

// Random points of the conormal variety of an orbit in the representation
// space of the quiver with all arrows toward vertex 1, over Z/p.

#include <cstdint>
#include <vector>

#include "mvlab/linalg.hpp"
#include "mvlab/lusztig.hpp"
#include "mvlab/maya_bz.hpp"

namespace mvlab {

inline constexpr std::uint64_t kDefaultPrime = 65521;
inline constexpr std::uint64_t kSecondPrime = 2147483647;

/// Doubled-quiver data: B[k-1] : V_{k+1} -> V_k (the fixed orbit
/// representative) and C[k-1] : V_k -> V_{k+1} (the random conormal part).
struct ConormalPoint {
    Rank rank;
    std::uint64_t p = kDefaultPrime;
    std::uint64_t seed = 0;
    std::vector<int> dims;
    std::vector<ModMatrix> B;
    std::vector<ModMatrix> C;

    int dim(int v) const { return dims[static_cast<std::size_t>(v - 1)]; }
};

/// Samples C uniformly from the solutions of the moment-map equations.
/// Deterministic in (a, p, seed).
ConormalPoint sample_conormal(const LusztigDatum& a, std::uint64_t p, std::uint64_t seed);

/// B_i C_i - C_{i-1} B_{i-1} at every vertex; all zero on a valid point.
std::vector<ModMatrix> moment_residual(const ConormalPoint& x);
bool moment_map_vanishes(const ConormalPoint& x);

/// dim Coker(V_{i+1} + V_{i-1} -> V_i).
int eps_of_point(const ConormalPoint& x, int i);
/// dim Ker(V_i -> V_{i+1} + V_{i-1}).
int eps_star_of_point(const ConormalPoint& x, int i);

/// -dim Coker of the path composites out(K) -> in(K) along Omega(K), with
/// each arrow read from B or C by its direction.
int m_k_of_point(const ConormalPoint& x, const MayaDiagram& K);

}  // namespace mvlab
