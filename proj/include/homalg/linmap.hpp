#pragma once

#include <utility>
#include <vector>

#include "homalg/tensor.hpp"

namespace homalg {

/// Column-sparse exact matrix.  This is the workhorse behind the formula
/// compiler: structure maps, their Kronecker products and compositions are
/// all very sparse, and intermediate products would be far too large dense.
class SparseMap {
public:
    using Entry = std::pair<Index, Scalar>;  // (row, value), sorted by row

    SparseMap() : field_{0}, rows_(0), cols_(0) {}
    SparseMap(FieldSpec field, Index rows, Index cols)
        : field_(field), rows_(rows), cols_(cols), col_(static_cast<std::size_t>(cols)) {}

    static SparseMap identity(FieldSpec field, Index n);
    static SparseMap zero(FieldSpec field, Index rows, Index cols) {
        return SparseMap(field, rows, cols);
    }
    static SparseMap from_dense(const Mat& m);

    FieldSpec field() const { return field_; }
    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    const std::vector<Entry>& column(Index c) const {
        return col_[static_cast<std::size_t>(c)];
    }

    /// Accumulate m[r, c] += v, keeping the column sorted.
    void add_entry(Index r, Index c, const Scalar& v);

    SparseMap compose(const SparseMap& g) const;  // (*this) o g
    SparseMap tensor(const SparseMap& o) const;   // Kronecker product
    SparseMap add(const SparseMap& o) const;
    SparseMap scale(const Scalar& s) const;

    Mat to_dense() const;
    bool equals(const SparseMap& o) const;
    Index nnz() const;

private:
    FieldSpec field_;
    Index rows_, cols_;
    std::vector<std::vector<Entry>> col_;
};

/// A linear map with named source and target tensor bases.  Every structure
/// map and every Sweedler-notation construction in the library is one of
/// these; differentials are compiled out of them.
struct LinMap {
    TensorBasis src;
    TensorBasis dst;
    SparseMap mat;

    LinMap() = default;
    LinMap(TensorBasis s, TensorBasis d, SparseMap m)
        : src(std::move(s)), dst(std::move(d)), mat(std::move(m)) {
        require(mat.rows() == dst.total_dim() && mat.cols() == src.total_dim(),
                "LinMap matrix shape does not match bases");
    }
};

LinMap identity_map(FieldSpec field, const TensorBasis& b);

/// Kronecker product of maps; the index codec follows TensorBasis order.
LinMap tensor(const LinMap& f, const LinMap& g);

/// Composition f o g (apply g first).
LinMap compose(const LinMap& f, const LinMap& g);

/// The twist isomorphism X (x) Y -> Y (x) X, e_i (x) e_j -> e_j (x) e_i.
LinMap twist(FieldSpec field, const TensorBasis& x, const TensorBasis& y);

/// Permutation of tensor factors: output factor k is input factor perm[k].
LinMap factor_permutation(FieldSpec field, const TensorBasis& src,
                          const std::vector<std::size_t>& perm);

}  // namespace homalg
