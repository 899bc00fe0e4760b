#include "homalg/total.hpp"

namespace homalg {

int total_sign(Kind k, Dir dir, const Degree& src) {
    auto sign = [](int e) { return e % 2 == 0 ? 1 : -1; };
    if (kind_is_tricomplex(k)) {
        if (dir == Dir::P) return sign(src.q + 1);
        if (dir == Dir::Q) return sign(src.r + 1);
        return sign(src.p + 1);
    }
    if (k == Kind::MA || k == Kind::CA) return dir == Dir::P ? 1 : sign(src.p + 1);
    // MC / CC
    return dir == Dir::P ? sign(src.q + 1) : 1;
}

Index TotalLevel::offset_of(const Degree& d) const {
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i] == d) return offsets[i];
    throw Error("degree " + d.to_string() + " is not a component of total level " +
                std::to_string(n));
}

const TotalLevel& TotalComplex::level(int n) const {
    auto it = levels.find(n);
    require(it != levels.end(), "total level " + std::to_string(n) + " is beyond the cutoff");
    return it->second;
}

const Mat& TotalComplex::diff(int n) const {
    auto it = d.find(n);
    require(it != d.end(), "total differential " + std::to_string(n) + " is beyond the cutoff");
    return it->second;
}

const Mat& TotalComplex::diff_full(int n) const {
    auto it = d_full.find(n);
    if (it != d_full.end()) return it->second;
    return diff(n);
}

Mat TotalComplex::embed(int n, const Degree& comp, const Mat& coords) const {
    const TotalLevel& lv = level(n);
    Mat out(coords.field(), lv.dim, 1);
    Index off = lv.offset_of(comp);
    for (Index i = 0; i < coords.rows(); ++i) out.at(off + i, 0) = coords.at(i, 0);
    return out;
}

Mat TotalComplex::project(int n, const Degree& comp, const Mat& total) const {
    const TotalLevel& lv = level(n);
    Index off = lv.offset_of(comp);
    Index next = lv.dim;
    for (std::size_t i = 0; i < lv.components.size(); ++i)
        if (lv.offsets[i] == off && i + 1 < lv.components.size()) next = lv.offsets[i + 1];
    Mat out(total.field(), next - off, 1);
    for (Index i = 0; i < out.rows(); ++i) out.at(i, 0) = total.at(off + i, 0);
    return out;
}

TotalComplex total_complex(const ComplexAssembly& asm_) {
    TotalComplex tot;
    tot.kind = asm_.kind;
    tot.n_max = asm_.cutoff;
    const FieldSpec f = asm_.pkg.field;

    for (int n = 0; n <= asm_.cutoff + 1; ++n) {
        TotalLevel lv;
        lv.n = n;
        for (const auto& [deg, space] : asm_.grid) {
            if (total_degree(asm_.kind, deg) != n || space.is_zero()) continue;
            lv.components.push_back(deg);
            lv.offsets.push_back(lv.dim);
            lv.dim += space.dim;
        }
        tot.levels.emplace(n, std::move(lv));
    }

    for (int n = 0; n <= asm_.cutoff; ++n) {
        const TotalLevel& src = tot.levels.at(n);
        const TotalLevel& dst = tot.levels.at(n + 1);
        Mat D(f, dst.dim, src.dim);
        Mat Dfull(f, dst.dim, 0);
        bool have_full = false;
        for (std::size_t ci = 0; ci < src.components.size(); ++ci) {
            const Degree& deg = src.components[ci];
            const HomSpace& sp = asm_.grid.at(deg);
            for (Dir dir : asm_.directions()) {
                const DifferentialMatrix* dm = asm_.diff(deg, dir);
                if (!dm) continue;
                int sgn_ = total_sign(asm_.kind, dir, deg);
                Index roff = dst.offset_of(dm->dst);
                for (Index j = 0; j < dm->raw.cols(); ++j)
                    for (Index i = 0; i < dm->raw.rows(); ++i) {
                        const Scalar& v = dm->raw.at(i, j);
                        if (sgn(v) == 0) continue;
                        D.at(roff + i, src.offsets[ci] + j) = sgn_ == 1 ? v : Scalar(-v);
                    }
                // widened degree-1 variant
                if (n == 1 && sp.corner != Corner::Full && dm->unrestricted) {
                    if (!have_full) {
                        tot.full_level1_dim = dm->unrestricted->cols();
                        Dfull = Mat(f, dst.dim, tot.full_level1_dim);
                        have_full = true;
                    }
                    for (Index j = 0; j < dm->unrestricted->cols(); ++j)
                        for (Index i = 0; i < dm->unrestricted->rows(); ++i) {
                            const Scalar& v = dm->unrestricted->at(i, j);
                            if (sgn(v) == 0) continue;
                            Dfull.at(roff + i, j) = sgn_ == 1 ? v : Scalar(-v);
                        }
                }
            }
        }
        if (have_full) tot.d_full.emplace(n, std::move(Dfull));
        tot.d.emplace(n, std::move(D));
    }
    return tot;
}

VerifyReport verify_total_squares(const TotalComplex& tot) {
    VerifyReport rep;
    for (int n = 0; n + 1 <= tot.n_max; ++n) {
        rep.lines.push_back({"total d^2 = 0 at degree " + std::to_string(n),
                             matmul(tot.diff(n + 1), tot.diff(n)).is_zero()});
        if (n == 1 && tot.d_full.count(1))
            rep.lines.push_back({"total d^2 = 0 at degree 1 (full End variant)",
                                 matmul(tot.diff(2), tot.diff_full(1)).is_zero()});
    }
    return rep;
}

}  // namespace homalg
