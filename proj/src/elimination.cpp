#include "homalg/elimination.hpp"

namespace homalg {

namespace {

// Fraction-free (Bareiss) forward pass over the integers.  The input rows
// must already be integral; entries stay integral throughout, each being a
// minor of the input, and every division is exact.
struct ForwardResult {
    std::vector<std::vector<mpz_class>> w;
    std::vector<Index> pivot_cols;
};

ForwardResult bareiss_forward(std::vector<std::vector<mpz_class>> w, Index rows, Index cols) {
    std::vector<Index> pivots;
    mpz_class prev(1);
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index pr = -1;
        for (Index i = r; i < rows; ++i)
            if (sgn(w[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r) std::swap(w[static_cast<std::size_t>(pr)], w[static_cast<std::size_t>(r)]);
        auto& prow = w[static_cast<std::size_t>(r)];
        for (Index i = r + 1; i < rows; ++i) {
            auto& row = w[static_cast<std::size_t>(i)];
            const mpz_class head = row[static_cast<std::size_t>(c)];
            // The scaling by prow[c]/prev must run even when head == 0, or
            // later exact divisions lose their minor structure.
            for (Index j = c + 1; j < cols; ++j) {
                mpz_class t = prow[static_cast<std::size_t>(c)] * row[static_cast<std::size_t>(j)] -
                              head * prow[static_cast<std::size_t>(j)];
                mpz_divexact(row[static_cast<std::size_t>(j)].get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            row[static_cast<std::size_t>(c)] = 0;
        }
        prev = prow[static_cast<std::size_t>(c)];
        pivots.push_back(c);
        ++r;
    }
    return {std::move(w), std::move(pivots)};
}

// Row-wise denominator clearing: multiplying a row by a nonzero scalar
// changes neither the row space nor the kernel.
std::vector<std::vector<mpz_class>> integerize(const Mat& m) {
    std::vector<std::vector<mpz_class>> w(static_cast<std::size_t>(m.rows()));
    for (Index i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (Index j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        auto& row = w[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(m.cols()));
        for (Index j = 0; j < m.cols(); ++j) {
            mpq_class v = m.at(i, j) * mpq_class(l);
            row[static_cast<std::size_t>(j)] = v.get_num();  // denominator is 1
        }
    }
    return w;
}

std::vector<std::vector<mpz_class>> residues(const Mat& m) {
    std::vector<std::vector<mpz_class>> w(static_cast<std::size_t>(m.rows()));
    for (Index i = 0; i < m.rows(); ++i) {
        auto& row = w[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(m.cols()));
        for (Index j = 0; j < m.cols(); ++j) row[static_cast<std::size_t>(j)] = m.at(i, j).get_num();
    }
    return w;
}

struct ModForward {
    std::vector<std::vector<mpz_class>> w;
    std::vector<Index> pivot_cols;
};

ModForward mod_forward(std::vector<std::vector<mpz_class>> w, Index rows, Index cols,
                       const mpz_class& p) {
    std::vector<Index> pivots;
    Index r = 0;
    auto red = [&](mpz_class& x) {
        x %= p;
        if (sgn(x) < 0) x += p;
    };
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index pr = -1;
        for (Index i = r; i < rows; ++i)
            if (sgn(w[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r) std::swap(w[static_cast<std::size_t>(pr)], w[static_cast<std::size_t>(r)]);
        auto& prow = w[static_cast<std::size_t>(r)];
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), prow[static_cast<std::size_t>(c)].get_mpz_t(), p.get_mpz_t());
        for (Index j = c; j < cols; ++j) {
            prow[static_cast<std::size_t>(j)] *= inv;
            red(prow[static_cast<std::size_t>(j)]);
        }
        for (Index i = r + 1; i < rows; ++i) {
            auto& row = w[static_cast<std::size_t>(i)];
            mpz_class f = row[static_cast<std::size_t>(c)];
            if (sgn(f) == 0) continue;
            for (Index j = c; j < cols; ++j) {
                row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
                red(row[static_cast<std::size_t>(j)]);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(w), std::move(pivots)};
}

}  // namespace

EchelonForm echelon(const Mat& m) {
    const Index rows = m.rows(), cols = m.cols();
    const Field F(m.field());
    EchelonForm out;
    Mat R(m.field(), rows, cols);

    if (F.is_rational()) {
        auto fw = bareiss_forward(integerize(m), rows, cols);
        out.pivot_cols = fw.pivot_cols;
        for (Index i = 0; i < rows; ++i)
            for (Index j = 0; j < cols; ++j)
                R.at(i, j) = Scalar(fw.w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        // Normalize pivots to 1 and eliminate upwards, exactly.
        for (Index k = static_cast<Index>(out.pivot_cols.size()) - 1; k >= 0; --k) {
            Index c = out.pivot_cols[static_cast<std::size_t>(k)];
            Scalar piv = R.at(k, c);
            for (Index j = c; j < cols; ++j) R.at(k, j) /= piv;
            for (Index i = 0; i < k; ++i) {
                Scalar f = R.at(i, c);
                if (sgn(f) == 0) continue;
                for (Index j = c; j < cols; ++j) {
                    Scalar t = R.at(i, j) - f * R.at(k, j);
                    R.at(i, j) = t;
                }
            }
        }
    } else {
        mpz_class p(static_cast<unsigned long>(m.field().characteristic));
        auto fw = mod_forward(residues(m), rows, cols, p);
        out.pivot_cols = fw.pivot_cols;
        auto& w = fw.w;
        for (Index k = static_cast<Index>(out.pivot_cols.size()) - 1; k >= 0; --k) {
            Index c = out.pivot_cols[static_cast<std::size_t>(k)];
            for (Index i = 0; i < k; ++i) {
                auto& row = w[static_cast<std::size_t>(i)];
                mpz_class f = row[static_cast<std::size_t>(c)];
                if (sgn(f) == 0) continue;
                for (Index j = c; j < cols; ++j) {
                    row[static_cast<std::size_t>(j)] -=
                        f * w[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                    row[static_cast<std::size_t>(j)] %= p;
                    if (sgn(row[static_cast<std::size_t>(j)]) < 0)
                        row[static_cast<std::size_t>(j)] += p;
                }
            }
        }
        for (Index i = 0; i < rows; ++i)
            for (Index j = 0; j < cols; ++j)
                R.at(i, j) = Scalar(w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    out.rank = static_cast<Index>(out.pivot_cols.size());
    out.rref = std::move(R);
    return out;
}

Index rank(const Mat& m) {
    const Field F(m.field());
    if (F.is_rational())
        return static_cast<Index>(bareiss_forward(integerize(m), m.rows(), m.cols()).pivot_cols.size());
    mpz_class p(static_cast<unsigned long>(m.field().characteristic));
    return static_cast<Index>(mod_forward(residues(m), m.rows(), m.cols(), p).pivot_cols.size());
}

Mat kernel_basis(const Mat& m) {
    EchelonForm e = echelon(m);
    const Index n = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (Index c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<Index> free_cols;
    for (Index j = 0; j < n; ++j)
        if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);
    Mat K(m.field(), n, static_cast<Index>(free_cols.size()));
    Field F(m.field());
    for (std::size_t fidx = 0; fidx < free_cols.size(); ++fidx) {
        Index f = free_cols[fidx];
        K.at(f, static_cast<Index>(fidx)) = 1;
        for (Index k = 0; k < e.rank; ++k) {
            Index c = e.pivot_cols[static_cast<std::size_t>(k)];
            K.at(c, static_cast<Index>(fidx)) = F.neg(e.rref.at(k, f));
        }
    }
    return K;
}

Mat image_basis(const Mat& m) {
    EchelonForm e = echelon(m.transpose());
    Mat B(m.field(), m.rows(), e.rank);
    for (Index k = 0; k < e.rank; ++k)
        for (Index j = 0; j < m.rows(); ++j) B.at(j, k) = e.rref.at(k, j);
    return B;
}

std::optional<std::pair<Mat, Mat>> solve(const Mat& m, const Mat& b) {
    require(b.rows() == m.rows() && b.cols() == 1, "solve: rhs shape mismatch");
    require(b.field() == m.field(), "solve: field mismatch");
    EchelonForm e = echelon(m.hcat(b));
    for (Index c : e.pivot_cols)
        if (c == m.cols()) return std::nullopt;  // pivot in the rhs column
    Mat x(m.field(), m.cols(), 1);
    for (Index k = 0; k < e.rank; ++k)
        x.at(e.pivot_cols[static_cast<std::size_t>(k)], 0) = e.rref.at(k, m.cols());
    return std::make_pair(std::move(x), kernel_basis(m));
}

Index quotient_dim(const Mat& sub_ambient, const Mat& sub_inner) {
    require(sub_ambient.field() == sub_inner.field(), "quotient_dim: field mismatch");
    require(sub_ambient.rows() == sub_inner.rows(), "quotient_dim: ambient space mismatch");
    Index ra = rank(sub_ambient);
    Index ri = rank(sub_inner);
    require(rank(sub_ambient.hcat(sub_inner)) == ra,
            "quotient_dim: inner space not contained in ambient space");
    return ra - ri;
}

}  // namespace homalg
