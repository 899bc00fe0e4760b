#pragma once

#include "homalg/structures.hpp"

namespace homalg {

/// Names of the built-in worked examples.
std::vector<std::string> catalog_names();

/// Build and validate a catalog package over the given field.  Throws with
/// the validation summary if the structure does not satisfy its axioms over
/// that field.
StructurePackage example_catalog(const std::string& name, FieldSpec field);

// Building blocks, exposed for tests and for the file emitter.
BialgebraData ground_bialgebra(FieldSpec field);
BialgebraData group_bialgebra(FieldSpec field, Index n);
BialgebraData sweedler_hopf(FieldSpec field);
AlgebraData dual_numbers(FieldSpec field);

ActionData counit_action(const BialgebraData& h, Index dim_a);
/// Action of K[Z/m] where the generator acts by the permutation sigma of the
/// basis of A (sigma must have order dividing m).
ActionData permutation_action(FieldSpec field, Index m, Index dim_a,
                              const std::vector<Index>& sigma);
CoactionData trivial_coaction(const BialgebraData& h, Index dim_a);
/// rho = Delta_H, H coacting on itself.
CoactionData self_coaction(const BialgebraData& h);
/// The adjoint-type coaction x |-> sum (x_(1) S x_(3)) (x) x_(2); requires
/// the antipode.
CoactionData adjoint_coaction(const BialgebraData& h);

}  // namespace homalg
