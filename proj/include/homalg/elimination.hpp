#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "homalg/matrix.hpp"

namespace homalg {

/// Reduced row echelon form together with the pivot columns.  Over Q the
/// forward pass is fraction-free (Bareiss), so intermediate entries are
/// minors of the integerized matrix; the final normalization divides out
/// exactly.  Over F_p plain Gauss-Jordan.  Pivot rule: scan columns left to
/// right, take the first row with a nonzero entry — deterministic normal
/// forms are part of the module contract (golden files depend on them).
struct EchelonForm {
    Mat rref;
    std::vector<Index> pivot_cols;
    Index rank = 0;
};

EchelonForm echelon(const Mat& m);

/// Exact rank by the fraction-free forward pass alone.
Index rank(const Mat& m);

/// Basis of {v : m v = 0}, returned as the columns of a matrix in the
/// canonical form induced by the RREF of m (each free column contributes one
/// vector with a 1 in its own coordinate).  Viewed as a matrix it is in
/// reduced column-echelon form up to row order.
Mat kernel_basis(const Mat& m);

/// Basis of the column space: canonical spanning set obtained from the RREF
/// of the transpose (unique for the column space), returned as columns.
Mat image_basis(const Mat& m);

/// Particular solution of m x = b plus the kernel basis describing all
/// solutions; std::nullopt when inconsistent.  b must be rows(m) x 1.
std::optional<std::pair<Mat, Mat>> solve(const Mat& m, const Mat& b);

/// dim(span(sub_ambient) / span(sub_inner)) where both matrices hold
/// spanning vectors as columns.  Throws if the inner span is not contained
/// in the ambient span (detected by a rank test on the concatenation).
Index quotient_dim(const Mat& sub_ambient, const Mat& sub_inner);

}  // namespace homalg
