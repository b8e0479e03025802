#pragma once

// Small dense matrices with exact rank computations over Q and over Z/p.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "mvlab/core.hpp"

namespace mvlab {

using Rational = boost::multiprecision::cpp_rational;

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, T fill = T(0))
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

    static Matrix identity(int size) {
        Matrix m(size, size);
        for (int k = 0; k < size; ++k) m(k, k) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(int r, int c) { return data_[index(r, c)]; }
    const T& operator()(int r, int c) const { return data_[index(r, c)]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
    }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

/// Exact rank over Q.
int rank(Matrix<Rational> m);

/// Product over Q.
Matrix<Rational> multiply(const Matrix<Rational>& a, const Matrix<Rational>& b);

/// Arithmetic in Z/p for an odd prime p < 2^32.
class PrimeField {
public:
    using Elem = std::uint64_t;

    /// Throws unless p is prime and fits in 32 bits.
    explicit PrimeField(std::uint64_t p);

    std::uint64_t p() const { return p_; }
    Elem add(Elem a, Elem b) const { return (a + b) % p_; }
    Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const;
    /// Maps an integer into the field.
    Elem from_int(long long v) const;

private:
    std::uint64_t p_;
};

bool is_prime(std::uint64_t p);

using ModMatrix = Matrix<PrimeField::Elem>;

ModMatrix multiply(const PrimeField& F, const ModMatrix& a, const ModMatrix& b);

/// Rank over Z/p.
int rank(const PrimeField& F, ModMatrix m);

/// Basis of the right nullspace {x : m x = 0} over Z/p.
std::vector<std::vector<PrimeField::Elem>> nullspace(const PrimeField& F, ModMatrix m);

}  // namespace mvlab
