#pragma once

#include "homalg/cochain.hpp"
#include "homalg/structures.hpp"

namespace homalg {

/// A-bimodule data over an algebra: carrier M with actions
/// left : A (x) M -> M and right : M (x) A -> M.
struct BimoduleStructure {
    TensorBasis carrier;
    LinMap left;
    LinMap right;
};

/// A-bicomodule data over a coalgebra: carrier M with coactions
/// left : M -> A (x) M and right : M -> M (x) A.
struct BicomoduleStructure {
    TensorBasis carrier;
    LinMap left;
    LinMap right;
};

/// Bimodule axioms as matrix identities (associativity of each action and
/// their commutation; unit laws when the algebra is unital).
ValidationReport validate_bimodule(const BimoduleStructure& m, const AlgebraData& a);
ValidationReport validate_bicomodule(const BicomoduleStructure& m, const CoalgebraData& c);

/// Clause matrices of the Hochschild coboundary
/// Hom(A^(x)n, M) -> Hom(A^(x)(n+1), M): index 0 is the left action clause,
/// 1..n the multiplication insertions, n+1 the right action clause.  The
/// coboundary itself is the alternating sum.
std::vector<Mat> hochschild_clauses(const BimoduleStructure& m, const LinMap& mul_a, int n);

/// Clause matrices of the coalgebra Hochschild coboundary
/// Hom(M, A^(x)n) -> Hom(M, A^(x)(n+1)) for n >= 1 (degree 0 is zero).
std::vector<Mat> hochschild_coalg_clauses(const BicomoduleStructure& m, const LinMap& comul_a,
                                          int n);

/// Alternating sum of clauses: sum_i (-1)^i clauses[i].
Mat alternating_sum(const std::vector<Mat>& clauses);

/// Spec-level entry points: the full coboundary matrix at degree n.
Mat hochschild_diff(const BimoduleStructure& m, const AlgebraData& a, int n);
Mat hochschild_coalg_diff(const BicomoduleStructure& m, const CoalgebraData& c, int n);

}  // namespace homalg
