#include "mvlab/linalg.hpp"

#include <utility>

namespace mvlab {

int rank(Matrix<Rational> m) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (int k = c; k < m.cols(); ++k) std::swap(m(piv, k), m(r, k));
        for (int row = r + 1; row < m.rows(); ++row) {
            if (m(row, c) == 0) continue;
            const Rational f = m(row, c) / m(r, c);
            for (int k = c; k < m.cols(); ++k) m(row, k) -= f * m(r, k);
        }
        ++r;
    }
    return r;
}

Matrix<Rational> multiply(const Matrix<Rational>& a, const Matrix<Rational>& b) {
    if (a.cols() != b.rows()) throw Error("matrix shape mismatch");
    Matrix<Rational> out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p > 0xffffffffULL || p < 3 || !is_prime(p))
        throw Error("field characteristic must be an odd prime below 2^32, got " + std::to_string(p));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
    if (a % p_ == 0) throw Error("division by zero in Z/p");
    Elem result = 1, base = a % p_;
    for (std::uint64_t e = p_ - 2; e; e >>= 1) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

PrimeField::Elem PrimeField::from_int(long long v) const {
    const long long m = static_cast<long long>(p_);
    return static_cast<Elem>(((v % m) + m) % m);
}

ModMatrix multiply(const PrimeField& F, const ModMatrix& a, const ModMatrix& b) {
    if (a.cols() != b.rows()) throw Error("matrix shape mismatch");
    ModMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) = F.add(out(i, j), F.mul(a(i, k), b(k, j)));
        }
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(const PrimeField& F, ModMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (int k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(r, k));
        const auto s = F.inv(m(r, c));
        for (int k = c; k < m.cols(); ++k) m(r, k) = F.mul(m(r, k), s);
        for (int row = 0; row < m.rows(); ++row) {
            if (row == r || m(row, c) == 0) continue;
            const auto f = m(row, c);
            for (int k = c; k < m.cols(); ++k) m(row, k) = F.sub(m(row, k), F.mul(f, m(r, k)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(const PrimeField& F, ModMatrix m) { return static_cast<int>(rref(F, m).size()); }

std::vector<std::vector<PrimeField::Elem>> nullspace(const PrimeField& F, ModMatrix m) {
    const auto pivots = rref(F, m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<PrimeField::Elem>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<PrimeField::Elem> x(static_cast<std::size_t>(m.cols()), 0);
        x[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[static_cast<std::size_t>(pivots[r])] = F.neg(m(static_cast<int>(r), free));
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace mvlab
