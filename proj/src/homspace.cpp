#include "homalg/homspace.hpp"

#include "homalg/elimination.hpp"

namespace homalg {

std::string Degree::to_string() const {
    return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
}

bool kind_is_tricomplex(Kind k) { return k == Kind::MB || k == Kind::CB; }

int total_degree(Kind k, const Degree& d) {
    return kind_is_tricomplex(k) ? d.p + d.q + d.r - 1 : d.p + d.q;
}

namespace {

// Condition matrix of the derivation identity, as an operator
// Hom(A,A) -> Hom(A^(x)2, A):  phi o mu - mu o (id (x) phi) - mu o (phi (x) id).
Mat derivation_condition(const AlgebraData& a) {
    const FieldSpec f = a.field;
    LinMap mu = mul_map(a, 'A');
    TensorBasis A = mu.dst;
    HomShape from{A, A}, to{A.tensor(A), A};
    SparseMap idA = SparseMap::identity(f, a.dim);
    SparseMap idAA = SparseMap::identity(f, a.dim * a.dim);
    Mat t1 = clause_operator(from, to, idA, 1, 1, mu.mat);
    Mat t2 = clause_operator(from, to, mu.mat, a.dim, 1, idAA);
    Mat t3 = clause_operator(from, to, mu.mat, 1, a.dim, idAA);
    return sub(t1, add(t2, t3));
}

// Coderivation identity as an operator Hom(A,A) -> Hom(A, A^(x)2).
Mat coderivation_condition(const CoalgebraData& c) {
    const FieldSpec f = c.field;
    LinMap de = comul_map(c, 'A');
    TensorBasis A = de.src;
    HomShape from{A, A}, to{A, A.tensor(A)};
    SparseMap idA = SparseMap::identity(f, c.dim);
    SparseMap idAA = SparseMap::identity(f, c.dim * c.dim);
    Mat t1 = clause_operator(from, to, de.mat, 1, 1, idA);
    Mat t2 = clause_operator(from, to, idAA, c.dim, 1, de.mat);
    Mat t3 = clause_operator(from, to, idAA, 1, c.dim, de.mat);
    return sub(t1, add(t2, t3));
}

}  // namespace

Mat der_subspace(const AlgebraData& a) { return kernel_basis(derivation_condition(a)); }

Mat coder_subspace(const CoalgebraData& c) { return kernel_basis(coderivation_condition(c)); }

Mat bider_subspace(const BialgebraTargetData& b) {
    return kernel_basis(derivation_condition(b.algebra).vcat(coderivation_condition(b.coalgebra)));
}

}  // namespace homalg
