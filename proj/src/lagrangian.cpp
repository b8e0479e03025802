#include "mvlab/lagrangian.hpp"

#include <random>

#include "mvlab/quiver.hpp"

namespace mvlab {

namespace {

ModMatrix to_mod(const PrimeField& F, const Matrix<Rational>& m) {
    ModMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const Rational& v = m(r, c);
            out(r, c) = F.mul(F.from_int(static_cast<long long>(numerator(v))),
                              F.inv(F.from_int(static_cast<long long>(denominator(v)))));
        }
    return out;
}

void check_vertex(const ConormalPoint& x, int i) {
    if (i < 1 || i > x.rank.n) throw Error("vertex out of range");
}

// Stacks blocks side by side (all with `rows` rows).
ModMatrix hconcat(int rows, const std::vector<const ModMatrix*>& blocks) {
    int cols = 0;
    for (const auto* b : blocks) cols += b->cols();
    ModMatrix out(rows, cols);
    int c0 = 0;
    for (const auto* b : blocks) {
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < b->cols(); ++c) out(r, c0 + c) = (*b)(r, c);
        c0 += b->cols();
    }
    return out;
}

ModMatrix vconcat(int cols, const std::vector<const ModMatrix*>& blocks) {
    int rows = 0;
    for (const auto* b : blocks) rows += b->rows();
    ModMatrix out(rows, cols);
    int r0 = 0;
    for (const auto* b : blocks) {
        for (int r = 0; r < b->rows(); ++r)
            for (int c = 0; c < cols; ++c) out(r0 + r, c) = (*b)(r, c);
        r0 += b->rows();
    }
    return out;
}

}  // namespace

ConormalPoint sample_conormal(const LusztigDatum& a, std::uint64_t p, std::uint64_t seed) {
    const PrimeField F(p);
    const Rank r = a.rank();
    const int n = r.n;
    const auto word = ReducedWord::lex_minimal(r);
    const QuiverModule V = build_module(a.entries(), word, Orientation::toward_one(r));

    ConormalPoint x{r, p, seed, V.dims, {}, {}};
    for (int k = 1; k < n; ++k) x.B.push_back(to_mod(F, V.map(k)));

    // Unknown entries of C_k (dim V_{k+1} x dim V_k), laid out consecutively.
    std::vector<int> offset(static_cast<std::size_t>(n), 0);
    for (int k = 1; k < n; ++k)
        offset[static_cast<std::size_t>(k)] = offset[static_cast<std::size_t>(k - 1)] + x.dim(k + 1) * x.dim(k);
    const int unknowns = offset[static_cast<std::size_t>(n - 1)];
    auto var = [&](int k, int row, int col) { return offset[static_cast<std::size_t>(k - 1)] + row * x.dim(k) + col; };

    int eqs = 0;
    for (int i = 1; i <= n; ++i) eqs += x.dim(i) * x.dim(i);
    ModMatrix A(eqs, unknowns);
    int row = 0;
    for (int i = 1; i <= n; ++i)
        for (int s = 0; s < x.dim(i); ++s)
            for (int t = 0; t < x.dim(i); ++t, ++row) {
                // (B_i C_i)(s, t) = sum_m B_i(s, m) C_i(m, t)
                if (i < n)
                    for (int m = 0; m < x.dim(i + 1); ++m) {
                        const auto b = x.B[static_cast<std::size_t>(i - 1)](s, m);
                        if (b) A(row, var(i, m, t)) = F.add(A(row, var(i, m, t)), b);
                    }
                // -(C_{i-1} B_{i-1})(s, t) = -sum_m C_{i-1}(s, m) B_{i-1}(m, t)
                if (i > 1)
                    for (int m = 0; m < x.dim(i - 1); ++m) {
                        const auto b = x.B[static_cast<std::size_t>(i - 2)](m, t);
                        if (b) A(row, var(i - 1, s, m)) = F.sub(A(row, var(i - 1, s, m)), b);
                    }
            }

    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(p)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::uint64_t> coin(0, p - 1);

    std::vector<PrimeField::Elem> sol(static_cast<std::size_t>(unknowns), 0);
    for (const auto& v : nullspace(F, std::move(A))) {
        const auto c = coin(rng);
        for (std::size_t k = 0; k < v.size(); ++k) sol[k] = F.add(sol[k], F.mul(c, v[k]));
    }
    for (int k = 1; k < n; ++k) {
        ModMatrix Ck(x.dim(k + 1), x.dim(k));
        for (int s = 0; s < Ck.rows(); ++s)
            for (int t = 0; t < Ck.cols(); ++t) Ck(s, t) = sol[static_cast<std::size_t>(var(k, s, t))];
        x.C.push_back(std::move(Ck));
    }
    return x;
}

std::vector<ModMatrix> moment_residual(const ConormalPoint& x) {
    const PrimeField F(x.p);
    const int n = x.rank.n;
    std::vector<ModMatrix> out;
    for (int i = 1; i <= n; ++i) {
        ModMatrix R(x.dim(i), x.dim(i));
        if (i < n) {
            const auto BC = multiply(F, x.B[static_cast<std::size_t>(i - 1)], x.C[static_cast<std::size_t>(i - 1)]);
            for (int s = 0; s < R.rows(); ++s)
                for (int t = 0; t < R.cols(); ++t) R(s, t) = F.add(R(s, t), BC(s, t));
        }
        if (i > 1) {
            const auto CB = multiply(F, x.C[static_cast<std::size_t>(i - 2)], x.B[static_cast<std::size_t>(i - 2)]);
            for (int s = 0; s < R.rows(); ++s)
                for (int t = 0; t < R.cols(); ++t) R(s, t) = F.sub(R(s, t), CB(s, t));
        }
        out.push_back(std::move(R));
    }
    return out;
}

bool moment_map_vanishes(const ConormalPoint& x) {
    for (const auto& R : moment_residual(x))
        for (int s = 0; s < R.rows(); ++s)
            for (int t = 0; t < R.cols(); ++t)
                if (R(s, t) != 0) return false;
    return true;
}

int eps_of_point(const ConormalPoint& x, int i) {
    check_vertex(x, i);
    std::vector<const ModMatrix*> blocks;
    if (i < x.rank.n) blocks.push_back(&x.B[static_cast<std::size_t>(i - 1)]);
    if (i > 1) blocks.push_back(&x.C[static_cast<std::size_t>(i - 2)]);
    return x.dim(i) - rank(PrimeField(x.p), hconcat(x.dim(i), blocks));
}

int eps_star_of_point(const ConormalPoint& x, int i) {
    check_vertex(x, i);
    std::vector<const ModMatrix*> blocks;
    if (i < x.rank.n) blocks.push_back(&x.C[static_cast<std::size_t>(i - 1)]);
    if (i > 1) blocks.push_back(&x.B[static_cast<std::size_t>(i - 2)]);
    return x.dim(i) - rank(PrimeField(x.p), vconcat(x.dim(i), blocks));
}

int m_k_of_point(const ConormalPoint& x, const MayaDiagram& K) {
    if (!(K.rank() == x.rank)) throw Error("m_k_of_point: rank mismatch");
    const PrimeField F(x.p);
    const Orientation omega = orientation_from_maya(K);
    const MayaComponents comp = components(K);

    // Arrow on edge e as a matrix V_tail -> V_head.
    auto arrow = [&](int e) -> const ModMatrix& {
        return omega.dir(e) == Dir::RightToLeft ? x.B[static_cast<std::size_t>(e - 1)]
                                                : x.C[static_cast<std::size_t>(e - 1)];
    };
    auto composite = [&](int k, int l) {
        ModMatrix acc = ModMatrix::identity(x.dim(k));
        if (k < l)
            for (int e = k; e < l; ++e) acc = multiply(F, arrow(e), acc);
        else
            for (int e = k - 1; e >= l; --e) acc = multiply(F, arrow(e), acc);
        return acc;
    };

    int rows = 0, cols = 0;
    for (int l : comp.in_set) rows += x.dim(l);
    for (int k : comp.out_set) cols += x.dim(k);
    if (rows == 0) return 0;
    ModMatrix A(rows, cols);
    int r0 = 0;
    for (int l : comp.in_set) {
        int c0 = 0;
        for (int k : comp.out_set) {
            if (omega.has_path(k, l)) {
                const auto Bs = composite(k, l);
                for (int r = 0; r < Bs.rows(); ++r)
                    for (int c = 0; c < Bs.cols(); ++c) A(r0 + r, c0 + c) = Bs(r, c);
            }
            c0 += x.dim(k);
        }
        r0 += x.dim(l);
    }
    return -(rows - rank(F, std::move(A)));
}

}  // namespace mvlab
