#pragma once

// Independent reference evaluators used as oracles against the compiled
// differentials.  Everything here works by direct enumeration over structure
// constants and dense matrices; none of it touches the LinMap/combinator
// pipeline that builds the real complexes.

#include <vector>

#include "homalg/structures.hpp"

namespace oracle {

using homalg::AlgebraData;
using homalg::BialgebraData;
using homalg::CoalgebraData;
using homalg::Field;
using homalg::FieldSpec;
using homalg::Index;
using homalg::Mat;
using homalg::Scalar;

inline Index ipow(Index b, int e) {
    Index r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Hochschild coboundary Hom(A^n, A) -> Hom(A^(n+1), A) of A with
// coefficients in itself, by direct enumeration of the defining sums.
inline Mat naive_hochschild(const AlgebraData& alg, int n) {
    const Index a = alg.dim;
    Field F(alg.field);
    const Index src_dim = ipow(a, n) * a;
    const Index dst_dim = ipow(a, n + 1) * a;
    Mat d(alg.field, dst_dim, src_dim);
    std::vector<Index> s(static_cast<std::size_t>(n + 1));
    std::vector<Index> u(static_cast<std::size_t>(n));

    auto mul_coeff = [&](Index k, Index i, Index j) -> const Scalar& {
        return alg.mul.at(k, i * a + j);
    };
    auto flat = [&](const std::vector<Index>& t) {
        Index f = 0;
        for (Index x : t) f = f * a + x;
        return f;
    };

    // iterate over all input tuples s and all basis cochains (u, v)
    std::vector<Index> tuple(static_cast<std::size_t>(n + 1));
    const Index inputs = ipow(a, n + 1);
    for (Index si = 0; si < inputs; ++si) {
        Index tmp = si;
        for (int k = n; k >= 0; --k) {
            tuple[static_cast<std::size_t>(k)] = tmp % a;
            tmp /= a;
        }
        // i = 0 : s_0 . phi(s_1..s_n)
        {
            std::vector<Index> rest(tuple.begin() + 1, tuple.end());
            Index ucol = flat(rest);
            for (Index v = 0; v < a; ++v)
                for (Index w = 0; w < a; ++w) {
                    const Scalar& c = mul_coeff(w, tuple[0], v);
                    if (sgn(c) == 0) continue;
                    d.at(si * a + w, (ucol * a + v)) += c;
                }
        }
        // middle terms
        for (int i = 1; i <= n; ++i) {
            for (Index m = 0; m < a; ++m) {
                const Scalar& c = mul_coeff(m, tuple[static_cast<std::size_t>(i - 1)],
                                            tuple[static_cast<std::size_t>(i)]);
                if (sgn(c) == 0) continue;
                std::vector<Index> merged;
                for (int k = 0; k <= n; ++k) {
                    if (k == i - 1) merged.push_back(m);
                    else if (k == i) continue;
                    else merged.push_back(tuple[static_cast<std::size_t>(k)]);
                }
                Index ucol = flat(merged);
                Scalar signed_c = (i % 2 == 1) ? F.neg(c) : c;
                for (Index v = 0; v < a; ++v) {
                    Scalar& slot = d.at(si * a + v, ucol * a + v);
                    slot = F.add(slot, signed_c);
                }
            }
        }
        // i = n+1 : phi(s_0..s_{n-1}) . s_n
        {
            std::vector<Index> rest(tuple.begin(), tuple.end() - 1);
            Index ucol = flat(rest);
            for (Index v = 0; v < a; ++v)
                for (Index w = 0; w < a; ++w) {
                    const Scalar& c = mul_coeff(w, v, tuple[static_cast<std::size_t>(n)]);
                    if (sgn(c) == 0) continue;
                    Scalar term = (n % 2 == 0) ? F.neg(c) : c;  // sign (-1)^(n+1)
                    Scalar& slot = d.at(si * a + w, ucol * a + v);
                    slot = F.add(slot, term);
                }
        }
    }
    return d;
}

// Dense helpers for the Gerstenhaber-Schack plane oracle; deliberately
// plain (no sparse maps, no combinator reuse).
inline Mat dense_kron(const Mat& x, const Mat& y) {
    Mat r(x.field(), x.rows() * y.rows(), x.cols() * y.cols());
    for (Index i = 0; i < x.rows(); ++i)
        for (Index j = 0; j < x.cols(); ++j) {
            if (sgn(x.at(i, j)) == 0) continue;
            for (Index k = 0; k < y.rows(); ++k)
                for (Index l = 0; l < y.cols(); ++l) {
                    if (sgn(y.at(k, l)) == 0) continue;
                    r.at(i * y.rows() + k, j * y.cols() + l) = x.at(i, j) * y.at(k, l);
                }
        }
    return r;
}

inline Mat dense_id(FieldSpec f, Index n) { return Mat::identity(f, n); }

// Delta^(q-1) : A -> A^q as a dense matrix (q >= 1).
inline Mat iterated_comul_dense(const CoalgebraData& c, int q) {
    Mat acc = dense_id(c.field, c.dim);
    for (int k = 1; k < q; ++k) acc = homalg::matmul(dense_kron(c.comul, dense_id(c.field, ipow(c.dim, k - 1))), acc);
    return acc;  // A -> A^q via left-nested comultiplications
}

// mu^(p) : A^p -> A (p >= 1).
inline Mat iterated_mul_dense(const AlgebraData& a, int p) {
    Mat acc = dense_id(a.field, a.dim);
    for (int k = 1; k < p; ++k) acc = homalg::matmul(a.mul, dense_kron(acc, dense_id(a.field, a.dim)));
    return acc;
}

// factor shuffle (X (x) Y)^n -> X^n (x) Y^n on dense vectors
inline Mat deinterleave_dense(FieldSpec f, Index dx, Index dy, int n) {
    const Index total = ipow(dx * dy, n);
    Mat m(f, total, total);
    std::vector<Index> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
    for (Index flat = 0; flat < total; ++flat) {
        Index tmp = flat;
        for (int k = n - 1; k >= 0; --k) {
            ys[static_cast<std::size_t>(k)] = tmp % dy;
            tmp /= dy;
            xs[static_cast<std::size_t>(k)] = tmp % dx;
            tmp /= dx;
        }
        Index out = 0;
        for (int k = 0; k < n; ++k) out = out * dx + xs[static_cast<std::size_t>(k)];
        for (int k = 0; k < n; ++k) out = out * dy + ys[static_cast<std::size_t>(k)];
        m.at(out, flat) = 1;
    }
    return m;
}

// Diagonal left action of A on A^(x)q: A (x) A^q -> A^q.
inline Mat diag_left_dense(const AlgebraData& alg, const CoalgebraData& coa, int q) {
    const Index a = alg.dim;
    FieldSpec f = alg.field;
    if (q == 0) return *coa.counit;  // A (x) K -> K
    Mat legs = dense_kron(iterated_comul_dense(coa, q), dense_id(f, ipow(a, q)));
    // interleave A^q (x) A^q -> (A (x) A)^q then multiply factorwise
    Mat inter = deinterleave_dense(f, a, a, q).transpose();  // inverse shuffle
    Mat mulq = dense_id(f, 1);
    for (int k = 0; k < q; ++k) mulq = dense_kron(mulq, alg.mul);
    return homalg::matmul(mulq, homalg::matmul(inter, legs));
}

inline Mat diag_right_dense(const AlgebraData& alg, const CoalgebraData& coa, int q) {
    const Index a = alg.dim;
    FieldSpec f = alg.field;
    if (q == 0) return *coa.counit;
    Mat legs = dense_kron(dense_id(f, ipow(a, q)), iterated_comul_dense(coa, q));
    Mat inter = deinterleave_dense(f, a, a, q).transpose();
    Mat mulq = dense_id(f, 1);
    for (int k = 0; k < q; ++k) mulq = dense_kron(mulq, alg.mul);
    return homalg::matmul(mulq, homalg::matmul(inter, legs));
}

// GS horizontal differential Hom(A^p, A^q) -> Hom(A^(p+1), A^q): Hochschild
// coboundary with the diagonal actions.  Coordinates input-major.
inline Mat gs_horizontal(const AlgebraData& alg, const CoalgebraData& coa, int p, int q) {
    const Index a = alg.dim;
    Field F(alg.field);
    const Index aq = ipow(a, q);
    const Index src_dim = ipow(a, p) * aq;
    const Index dst_dim = ipow(a, p + 1) * aq;
    Mat left = diag_left_dense(alg, coa, q);    // A (x) A^q -> A^q
    Mat right = diag_right_dense(alg, coa, q);  // A^q (x) A -> A^q
    Mat d(alg.field, dst_dim, src_dim);
    const Index inputs = ipow(a, p + 1);
    std::vector<Index> tuple(static_cast<std::size_t>(p + 1));
    auto flat = [&](const std::vector<Index>& t) {
        Index fx = 0;
        for (Index x : t) fx = fx * a + x;
        return fx;
    };
    for (Index si = 0; si < inputs; ++si) {
        Index tmp = si;
        for (int k = p; k >= 0; --k) {
            tuple[static_cast<std::size_t>(k)] = tmp % a;
            tmp /= a;
        }
        {
            std::vector<Index> rest(tuple.begin() + 1, tuple.end());
            Index ucol = flat(rest);
            for (Index v = 0; v < aq; ++v)
                for (Index w = 0; w < aq; ++w) {
                    const Scalar& cc = left.at(w, tuple[0] * aq + v);
                    if (sgn(cc) == 0) continue;
                    Scalar& slot = d.at(si * aq + w, ucol * aq + v);
                    slot = F.add(slot, cc);
                }
        }
        for (int i = 1; i <= p; ++i) {
            for (Index m = 0; m < a; ++m) {
                const Scalar& cc = alg.mul.at(m, tuple[static_cast<std::size_t>(i - 1)] * a +
                                                     tuple[static_cast<std::size_t>(i)]);
                if (sgn(cc) == 0) continue;
                std::vector<Index> merged;
                for (int k = 0; k <= p; ++k) {
                    if (k == i - 1) merged.push_back(m);
                    else if (k == i) continue;
                    else merged.push_back(tuple[static_cast<std::size_t>(k)]);
                }
                Index ucol = flat(merged);
                Scalar signed_c = (i % 2 == 1) ? F.neg(cc) : cc;
                for (Index v = 0; v < aq; ++v) {
                    Scalar& slot = d.at(si * aq + v, ucol * aq + v);
                    slot = F.add(slot, signed_c);
                }
            }
        }
        {
            std::vector<Index> rest(tuple.begin(), tuple.end() - 1);
            Index ucol = flat(rest);
            for (Index v = 0; v < aq; ++v)
                for (Index w = 0; w < aq; ++w) {
                    const Scalar& cc = right.at(w, v * a + tuple[static_cast<std::size_t>(p)]);
                    if (sgn(cc) == 0) continue;
                    Scalar term = (p % 2 == 0) ? F.neg(cc) : cc;
                    Scalar& slot = d.at(si * aq + w, ucol * aq + v);
                    slot = F.add(slot, term);
                }
        }
    }
    return d;
}

// GS vertical differential Hom(A^p, A^q) -> Hom(A^p, A^(q+1)): coalgebra
// Hochschild coboundary with the diagonal coactions of A^(x)p.  Columns are
// basis cochains sigma = E_{u -> v}; rows are (input m, output o).
inline Mat gs_vertical(const AlgebraData& alg, const CoalgebraData& coa, int p, int q) {
    const Index a = alg.dim;
    Field F(alg.field);
    FieldSpec f = alg.field;
    const Index ap = ipow(a, p);
    const Index aq = ipow(a, q);
    const Index out_dim = aq * a;  // dim A^(q+1)
    Mat d(f, ap * out_dim, ap * aq);
    // psi_l : A^p -> A (x) A^p (first Sweedler legs multiplied), psi_r dual
    Mat split;
    {
        Mat legs = dense_id(f, 1);
        for (int k = 0; k < p; ++k) legs = dense_kron(legs, coa.comul);
        split = homalg::matmul(deinterleave_dense(f, a, a, p), legs);  // A^p -> A^p (x) A^p
    }
    Mat mulp = iterated_mul_dense(alg, p);
    Mat psi_l = homalg::matmul(dense_kron(mulp, dense_id(f, ap)), split);
    Mat psi_r = homalg::matmul(dense_kron(dense_id(f, ap), mulp), split);
    for (Index u = 0; u < ap; ++u)
        for (Index v = 0; v < aq; ++v) {
            const Index col = u * aq + v;
            for (Index m = 0; m < ap; ++m) {
                // (Id_A (x) sigma) o psi_l : only the u-slice of psi_l matters
                for (Index w = 0; w < a; ++w) {
                    const Scalar& cc = psi_l.at(w * ap + u, m);
                    if (sgn(cc) == 0) continue;
                    Scalar& slot = d.at(m * out_dim + w * aq + v, col);
                    slot = F.add(slot, cc);
                }
                // (sigma (x) Id_A) o psi_r with sign (-1)^(q+1)
                for (Index w = 0; w < a; ++w) {
                    const Scalar& cc = psi_r.at(u * a + w, m);
                    if (sgn(cc) == 0) continue;
                    Scalar term = (q % 2 == 0) ? F.neg(cc) : cc;
                    Scalar& slot = d.at(m * out_dim + v * a + w, col);
                    slot = F.add(slot, term);
                }
            }
            // comultiplication insertions act on the output of sigma alone
            std::vector<Index> legs(static_cast<std::size_t>(q));
            Index tmp = v;
            for (int k = q - 1; k >= 0; --k) {
                legs[static_cast<std::size_t>(k)] = tmp % a;
                tmp /= a;
            }
            for (int i = 1; i <= q; ++i) {
                for (Index x = 0; x < a; ++x)
                    for (Index y = 0; y < a; ++y) {
                        const Scalar& cc =
                            coa.comul.at(x * a + y, legs[static_cast<std::size_t>(i - 1)]);
                        if (sgn(cc) == 0) continue;
                        Index out = 0;
                        for (int k = 0; k < i - 1; ++k)
                            out = out * a + legs[static_cast<std::size_t>(k)];
                        out = out * a + x;
                        out = out * a + y;
                        for (int k = i; k < q; ++k) out = out * a + legs[static_cast<std::size_t>(k)];
                        Scalar signed_c = (i % 2 == 1) ? F.neg(cc) : cc;
                        Scalar& slot = d.at(u * out_dim + out, col);
                        slot = F.add(slot, signed_c);
                    }
            }
        }
    return d;
}

}  // namespace oracle
