#pragma once

#include "homalg/cochain.hpp"
#include "homalg/structures.hpp"

namespace homalg {

/// Grid position.  Bicomplexes use (p, q) with r fixed at 0 and total degree
/// p + q; tricomplexes use (p, q, r) with the shifted total degree
/// p + q + r - 1.
struct Degree {
    int p = 0, q = 0, r = 0;

    bool operator==(const Degree& o) const { return p == o.p && q == o.q && r == o.r; }
    bool operator<(const Degree& o) const {
        if (p != o.p) return p < o.p;
        if (q != o.q) return q < o.q;
        return r < o.r;
    }
    std::string to_string() const;
};

bool kind_is_tricomplex(Kind k);
int total_degree(Kind k, const Degree& d);

enum class Corner { Zero, Der, Coder, Bider, Full };

/// One graded slot of a complex: its Hom-space shape, its dimension, and,
/// at the degree-one corner, the basis of the Der/Coder/Bider subspace as
/// columns in full Hom(A, A) coordinates.
struct HomSpace {
    Degree deg;
    Corner corner = Corner::Full;
    HomShape shape;
    Index dim = 0;           // corner spaces: number of corner basis vectors
    Mat corner_basis;        // full-dim x dim inclusion when corner is a subspace

    bool is_zero() const { return corner == Corner::Zero || dim == 0; }
};

/// Basis of the derivations phi(ab) = a phi(b) + phi(a) b, as columns in
/// Hom(A, A) coordinates.
Mat der_subspace(const AlgebraData& a);
/// Basis of the coderivations Delta phi = (Id (x) phi + phi (x) Id) Delta.
Mat coder_subspace(const CoalgebraData& c);
/// Intersection of the two.
Mat bider_subspace(const BialgebraTargetData& b);

}  // namespace homalg
