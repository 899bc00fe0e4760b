#include "homalg/cochain.hpp"

namespace homalg {

Mat clause_operator(const HomShape& from, const HomShape& to, const SparseMap& post, Index l,
                    Index r, const SparseMap& pre) {
    const Index fs = from.src.total_dim(), fd = from.dst.total_dim();
    require(pre.rows() == l * fs * r && pre.cols() == to.src.total_dim(),
            "clause_operator: pre shape mismatch");
    require(post.cols() == l * fd * r && post.rows() == to.dst.total_dim(),
            "clause_operator: post shape mismatch");
    Field F(pre.field());
    Mat op(pre.field(), to.dim(), from.dim());
    for (Index u2 = 0; u2 < to.src.total_dim(); ++u2) {
        for (const auto& [row, a] : pre.column(u2)) {
            const Index k = row / (fs * r);
            const Index rem = row % (fs * r);
            const Index u = rem / r;
            const Index rr = rem % r;
            for (Index v = 0; v < fd; ++v) {
                const Index mid = k * (fd * r) + v * r + rr;
                for (const auto& [v2, b] : post.column(mid)) {
                    Scalar& slot = op.at(to.coord(u2, v2), from.coord(u, v));
                    slot += a * b;
                    F.normalize(slot);
                }
            }
        }
    }
    return op;
}

SparseMap cochain_to_map(const HomShape& shape, const Mat& coords) {
    require(coords.rows() == shape.dim() && coords.cols() == 1, "cochain coordinate shape mismatch");
    SparseMap m(coords.field(), shape.dst.total_dim(), shape.src.total_dim());
    for (Index c = 0; c < shape.dim(); ++c) {
        if (sgn(coords.at(c, 0)) == 0) continue;
        auto [in, out] = shape.decode(c);
        m.add_entry(out, in, coords.at(c, 0));
    }
    return m;
}

Mat map_to_cochain(const HomShape& shape, const SparseMap& m) {
    require(m.rows() == shape.dst.total_dim() && m.cols() == shape.src.total_dim(),
            "map does not fit cochain shape");
    Mat coords(m.field(), shape.dim(), 1);
    for (Index in = 0; in < m.cols(); ++in)
        for (const auto& [out, v] : m.column(in)) coords.at(shape.coord(in, out), 0) = v;
    return coords;
}

Mat evaluate_cochain(const HomShape& shape, const Mat& coords, const std::vector<Index>& input) {
    require(coords.rows() == shape.dim() && coords.cols() == 1, "cochain coordinate shape mismatch");
    const Index in = shape.src.flatten(input);
    Mat out(coords.field(), shape.dst.total_dim(), 1);
    for (Index v = 0; v < shape.dst.total_dim(); ++v) out.at(v, 0) = coords.at(shape.coord(in, v), 0);
    return out;
}

SparseMap hom_block_swap(FieldSpec field, const TensorBasis& x, const TensorBasis& y,
                         const TensorBasis& z) {
    const Index dx = x.total_dim(), dy = y.total_dim(), dz = z.total_dim();
    SparseMap m(field, dx * dy * dz, dx * dy * dz);
    for (Index i = 0; i < dx; ++i)
        for (Index j = 0; j < dy; ++j)
            for (Index k = 0; k < dz; ++k)
                m.add_entry((j * dx + i) * dz + k, (i * dy + j) * dz + k, Scalar(1));
    return m;
}

}  // namespace homalg
