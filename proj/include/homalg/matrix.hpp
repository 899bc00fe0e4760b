#pragma once

#include <vector>

#include "homalg/field.hpp"

namespace homalg {

using Index = std::int64_t;

/// Dense matrix over an exact field.  Entries are stored row-major and kept
/// canonical for the matrix's field.  No floating point, no tolerances.
class Mat {
public:
    Mat() : field_{0}, rows_(0), cols_(0) {}
    Mat(FieldSpec field, Index rows, Index cols)
        : field_(field), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {
        require(rows >= 0 && cols >= 0, "negative matrix dimension");
    }

    static Mat identity(FieldSpec field, Index n) {
        Mat m(field, n, n);
        for (Index i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    FieldSpec field() const { return field_; }
    Index rows() const { return rows_; }
    Index cols() const { return cols_; }

    Scalar& at(Index i, Index j) {
        return a_[static_cast<std::size_t>(i * cols_ + j)];
    }
    const Scalar& at(Index i, Index j) const {
        return a_[static_cast<std::size_t>(i * cols_ + j)];
    }

    bool is_zero() const {
        for (const Scalar& s : a_)
            if (sgn(s) != 0) return false;
        return true;
    }

    bool operator==(const Mat& o) const {
        if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t k = 0; k < a_.size(); ++k)
            if (cmp(a_[k], o.a_[k]) != 0) return false;
        return true;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const {
        Mat t(field_, cols_, rows_);
        for (Index i = 0; i < rows_; ++i)
            for (Index j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Mat col(Index j) const {
        Mat c(field_, rows_, 1);
        for (Index i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
        return c;
    }

    /// Horizontal concatenation [this | o].
    Mat hcat(const Mat& o) const {
        require(field_ == o.field_ && rows_ == o.rows_, "hcat shape mismatch");
        Mat r(field_, rows_, cols_ + o.cols_);
        for (Index i = 0; i < rows_; ++i) {
            for (Index j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (Index j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }

    /// Vertical concatenation [this; o].
    Mat vcat(const Mat& o) const {
        require(field_ == o.field_ && cols_ == o.cols_, "vcat shape mismatch");
        Mat r(field_, rows_ + o.rows_, cols_);
        for (Index i = 0; i < rows_; ++i)
            for (Index j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (Index i = 0; i < o.rows_; ++i)
            for (Index j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
        return r;
    }

private:
    FieldSpec field_;
    Index rows_, cols_;
    std::vector<Scalar> a_;
};

/// Exact product.  Skips zero entries of the left factor; the differential
/// matrices this library multiplies are very sparse.
Mat matmul(const Mat& a, const Mat& b);

Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Mat scale(const Scalar& c, const Mat& a);
Mat neg(const Mat& a);

/// Matrix-vector product where v is an n x 1 Mat.
inline Mat apply(const Mat& m, const Mat& v) { return matmul(m, v); }

}  // namespace homalg
