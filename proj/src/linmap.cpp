#include "homalg/linmap.hpp"

#include <algorithm>

namespace homalg {

SparseMap SparseMap::identity(FieldSpec field, Index n) {
    SparseMap m(field, n, n);
    for (Index i = 0; i < n; ++i) m.col_[static_cast<std::size_t>(i)].push_back({i, Scalar(1)});
    return m;
}

SparseMap SparseMap::from_dense(const Mat& d) {
    SparseMap m(d.field(), d.rows(), d.cols());
    for (Index j = 0; j < d.cols(); ++j)
        for (Index i = 0; i < d.rows(); ++i)
            if (sgn(d.at(i, j)) != 0) m.col_[static_cast<std::size_t>(j)].push_back({i, d.at(i, j)});
    return m;
}

void SparseMap::add_entry(Index r, Index c, const Scalar& v) {
    require(r >= 0 && r < rows_ && c >= 0 && c < cols_, "sparse entry out of range");
    if (sgn(v) == 0) return;
    auto& col = col_[static_cast<std::size_t>(c)];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const Entry& e, Index key) { return e.first < key; });
    Field F(field_);
    if (it != col.end() && it->first == r) {
        it->second = F.add(it->second, v);
        if (sgn(it->second) == 0) col.erase(it);
    } else {
        Scalar nv = v;
        F.normalize(nv);
        col.insert(it, {r, nv});
    }
}

SparseMap SparseMap::compose(const SparseMap& g) const {
    require(field_ == g.field_, "compose field mismatch");
    require(cols_ == g.rows_, "compose dimension mismatch");
    Field F(field_);
    SparseMap r(field_, rows_, g.cols_);
    std::vector<Scalar> acc(static_cast<std::size_t>(rows_));
    std::vector<Index> touched;
    for (Index c = 0; c < g.cols_; ++c) {
        touched.clear();
        for (const auto& [k, gv] : g.col_[static_cast<std::size_t>(c)]) {
            for (const auto& [i, fv] : col_[static_cast<std::size_t>(k)]) {
                Scalar& slot = acc[static_cast<std::size_t>(i)];
                if (sgn(slot) == 0) touched.push_back(i);
                slot += fv * gv;
            }
        }
        std::sort(touched.begin(), touched.end());
        auto& out = r.col_[static_cast<std::size_t>(c)];
        for (Index i : touched) {
            Scalar& slot = acc[static_cast<std::size_t>(i)];
            F.normalize(slot);
            if (sgn(slot) != 0) out.push_back({i, slot});
            slot = 0;
        }
    }
    return r;
}

SparseMap SparseMap::tensor(const SparseMap& o) const {
    require(field_ == o.field_, "tensor field mismatch");
    Field F(field_);
    SparseMap r(field_, rows_ * o.rows_, cols_ * o.cols_);
    for (Index c1 = 0; c1 < cols_; ++c1) {
        const auto& col1 = col_[static_cast<std::size_t>(c1)];
        if (col1.empty()) continue;
        for (Index c2 = 0; c2 < o.cols_; ++c2) {
            const auto& col2 = o.col_[static_cast<std::size_t>(c2)];
            if (col2.empty()) continue;
            auto& out = r.col_[static_cast<std::size_t>(c1 * o.cols_ + c2)];
            for (const auto& [i1, v1] : col1)
                for (const auto& [i2, v2] : col2) {
                    Scalar v = v1 * v2;
                    F.normalize(v);
                    out.push_back({i1 * o.rows_ + i2, v});
                }
            std::sort(out.begin(), out.end(),
                      [](const Entry& a, const Entry& b) { return a.first < b.first; });
        }
    }
    return r;
}

SparseMap SparseMap::add(const SparseMap& o) const {
    require(field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_, "sparse add mismatch");
    SparseMap r = *this;
    for (Index c = 0; c < cols_; ++c)
        for (const auto& [i, v] : o.col_[static_cast<std::size_t>(c)]) r.add_entry(i, c, v);
    return r;
}

SparseMap SparseMap::scale(const Scalar& s) const {
    Field F(field_);
    SparseMap r(field_, rows_, cols_);
    if (sgn(s) == 0) return r;
    for (Index c = 0; c < cols_; ++c)
        for (const auto& [i, v] : col_[static_cast<std::size_t>(c)]) {
            Scalar nv = s * v;
            F.normalize(nv);
            r.col_[static_cast<std::size_t>(c)].push_back({i, nv});
        }
    return r;
}

Mat SparseMap::to_dense() const {
    Mat d(field_, rows_, cols_);
    for (Index c = 0; c < cols_; ++c)
        for (const auto& [i, v] : col_[static_cast<std::size_t>(c)]) d.at(i, c) = v;
    return d;
}

bool SparseMap::equals(const SparseMap& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (Index c = 0; c < cols_; ++c) {
        const auto& a = col_[static_cast<std::size_t>(c)];
        const auto& b = o.col_[static_cast<std::size_t>(c)];
        if (a.size() != b.size()) return false;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k].first != b[k].first || cmp(a[k].second, b[k].second) != 0) return false;
    }
    return true;
}

Index SparseMap::nnz() const {
    Index n = 0;
    for (const auto& c : col_) n += static_cast<Index>(c.size());
    return n;
}

LinMap identity_map(FieldSpec field, const TensorBasis& b) {
    return LinMap(b, b, SparseMap::identity(field, b.total_dim()));
}

LinMap tensor(const LinMap& f, const LinMap& g) {
    return LinMap(f.src.tensor(g.src), f.dst.tensor(g.dst), f.mat.tensor(g.mat));
}

LinMap compose(const LinMap& f, const LinMap& g) {
    require(f.src.total_dim() == g.dst.total_dim(), "compose: inner bases disagree");
    return LinMap(g.src, f.dst, f.mat.compose(g.mat));
}

LinMap factor_permutation(FieldSpec field, const TensorBasis& src,
                          const std::vector<std::size_t>& perm) {
    require(perm.size() == src.factor_count(), "factor permutation arity mismatch");
    TensorBasis dst;
    for (std::size_t k = 0; k < perm.size(); ++k) {
        require(perm[k] < src.factor_count(), "factor permutation out of range");
        dst.append(src.factor(perm[k]).tag, src.factor(perm[k]).dim);
    }
    SparseMap m(field, dst.total_dim(), src.total_dim());
    std::vector<Index> out(perm.size());
    for (Index flat = 0; flat < src.total_dim(); ++flat) {
        std::vector<Index> in = src.unflatten(flat);
        for (std::size_t k = 0; k < perm.size(); ++k) out[k] = in[perm[k]];
        m.add_entry(dst.flatten(out), flat, Scalar(1));
    }
    return LinMap(src, dst, std::move(m));
}

LinMap twist(FieldSpec field, const TensorBasis& x, const TensorBasis& y) {
    TensorBasis src = x.tensor(y);
    TensorBasis dst = y.tensor(x);
    SparseMap m(field, dst.total_dim(), src.total_dim());
    const Index dx = x.total_dim(), dy = y.total_dim();
    for (Index i = 0; i < dx; ++i)
        for (Index j = 0; j < dy; ++j) m.add_entry(j * dx + i, i * dy + j, Scalar(1));
    return LinMap(std::move(src), std::move(dst), std::move(m));
}

}  // namespace homalg
