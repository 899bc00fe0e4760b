#include "homalg/matrix.hpp"

namespace homalg {

Mat matmul(const Mat& a, const Mat& b) {
    require(a.field() == b.field(), "matmul field mismatch");
    require(a.cols() == b.rows(), "matmul dimension mismatch: " + std::to_string(a.cols()) +
                                      " vs " + std::to_string(b.rows()));
    Field F(a.field());
    Mat c(a.field(), a.rows(), b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (sgn(aik) == 0) continue;
            for (Index j = 0; j < b.cols(); ++j) {
                const Scalar& bkj = b.at(k, j);
                if (sgn(bkj) == 0) continue;
                c.at(i, j) += aik * bkj;
            }
        }
    }
    if (!F.is_rational())
        for (Index i = 0; i < c.rows(); ++i)
            for (Index j = 0; j < c.cols(); ++j) F.normalize(c.at(i, j));
    return c;
}

Mat add(const Mat& a, const Mat& b) {
    require(a.field() == b.field() && a.rows() == b.rows() && a.cols() == b.cols(),
            "add shape mismatch");
    Field F(a.field());
    Mat c(a.field(), a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) c.at(i, j) = F.add(a.at(i, j), b.at(i, j));
    return c;
}

Mat sub(const Mat& a, const Mat& b) {
    require(a.field() == b.field() && a.rows() == b.rows() && a.cols() == b.cols(),
            "sub shape mismatch");
    Field F(a.field());
    Mat c(a.field(), a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) c.at(i, j) = F.sub(a.at(i, j), b.at(i, j));
    return c;
}

Mat scale(const Scalar& s, const Mat& a) {
    Field F(a.field());
    Mat c(a.field(), a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) c.at(i, j) = F.mul(s, a.at(i, j));
    return c;
}

Mat neg(const Mat& a) { return scale(Scalar(-1), a); }

}  // namespace homalg
