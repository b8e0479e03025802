#pragma once

// Shared vocabulary for the type-A_n crystal library: rank, positive roots,
// root-lattice weights and the library's exception types.

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a request would exceed a documented desk-scale bound.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// Lie type A_n. Vertices of the Dynkin diagram are 1..n; the symmetric
/// group acts on the letters 1..n+1.
struct Rank {
    int n = 1;

    constexpr Rank() = default;
    explicit Rank(int n_) : n(n_) {
        if (n < 1) throw Error("rank must be >= 1, got " + std::to_string(n));
    }

    /// Number of positive roots, which is also the length of w0.
    constexpr int roots() const { return n * (n + 1) / 2; }
    /// Size of the permuted alphabet [1, n+1].
    constexpr int letters() const { return n + 1; }

    friend bool operator==(Rank, Rank) = default;
};

/// A positive root alpha_i + ... + alpha_{j-1}, stored as the pair (i, j)
/// with 1 <= i < j <= n+1.
struct Root {
    int i = 1;
    int j = 2;

    friend bool operator==(const Root&, const Root&) = default;

    bool valid_for(Rank r) const { return 1 <= i && i < j && j <= r.letters(); }
    /// True when alpha_k occurs in this root.
    bool contains_simple(int k) const { return i <= k && k < j; }
};

/// Position of a root in the ordering induced by the lexicographically
/// minimal reduced word (1,2,1,3,2,1,...): sort by j, then by i.
constexpr int lex_root_index(Root r) { return (r.j - 1) * (r.j - 2) / 2 + (r.i - 1); }

/// Inverse of lex_root_index.
Root lex_root_at(int index);

/// All positive roots of the rank in lexicographic-word order.
std::vector<Root> lex_roots(Rank r);

/// Element sum_i c_i alpha_i of the root lattice.
struct Weight {
    std::vector<int> c;  // c[k-1] is the coefficient of alpha_k

    Weight() = default;
    explicit Weight(Rank r) : c(static_cast<std::size_t>(r.n), 0) {}
    explicit Weight(std::vector<int> coeffs) : c(std::move(coeffs)) {}

    int operator[](int k) const { return c.at(static_cast<std::size_t>(k - 1)); }
    int& operator[](int k) { return c.at(static_cast<std::size_t>(k - 1)); }

    /// <h_i, this> using the type-A Cartan matrix.
    int pairing(int i) const;

    Weight& add_simple(int i, int times = 1) {
        (*this)[i] += times;
        return *this;
    }

    friend bool operator==(const Weight&, const Weight&) = default;
};

std::string to_string(Root r);
std::string to_string(const Weight& w);

}  // namespace mvlab
