#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homalg/linmap.hpp"

namespace homalg {

/// Structure constants of an associative algebra: mul is dim x dim^2 with
/// column index (i, j) lexicographic, unit is dim x 1 when present.
struct AlgebraData {
    Index dim = 0;
    FieldSpec field;
    Mat mul;
    std::optional<Mat> unit;
};

/// Coassociative coalgebra: comul is dim^2 x dim, counit is 1 x dim.
struct CoalgebraData {
    Index dim = 0;
    FieldSpec field;
    Mat comul;
    std::optional<Mat> counit;
};

/// A bialgebra, always with unit and counit; antipode optional (Hopf).
struct BialgebraData {
    Index dim = 0;
    FieldSpec field;
    Mat mul;    // dim x dim^2
    Mat comul;  // dim^2 x dim
    Mat unit;   // dim x 1
    Mat counit; // 1 x dim
    std::optional<Mat> antipode;  // dim x dim

    AlgebraData algebra() const { return {dim, field, mul, unit}; }
    CoalgebraData coalgebra() const { return {dim, field, comul, counit}; }
};

/// A bialgebra target A given by its two halves (used by the tricomplexes).
struct BialgebraTargetData {
    AlgebraData algebra;
    CoalgebraData coalgebra;
};

/// Module structure map, curried to a matrix: dim A x (dim H * dim A).
struct ActionData {
    Mat map;
};

/// Comodule structure map: (dim H * dim A) x dim A.
struct CoactionData {
    Mat map;
};

enum class Kind { MA, MC, CA, CC, MB, CB };

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& s);
bool kind_is_module(Kind k);    // MA, MC, MB
bool kind_has_algebra(Kind k);  // MA, CA, MB, CB
bool kind_has_coalgebra(Kind k);

/// One validated structure: the bialgebra H, the target A (algebra and/or
/// coalgebra constants), and the action or coaction, tagged with its kind.
struct StructurePackage {
    Kind kind = Kind::MA;
    FieldSpec field;
    std::string name;  // catalog name or input file stem
    BialgebraData H;
    std::optional<AlgebraData> A_algebra;
    std::optional<CoalgebraData> A_coalgebra;
    std::optional<ActionData> action;
    std::optional<CoactionData> coaction;

    Index dimH() const { return H.dim; }
    Index dimA() const;

    /// Forget structure: an MB package viewed as MA or MC, a CB package as
    /// CA or CC.  Throws if the target kind needs data this package lacks.
    StructurePackage view_as(Kind target) const;
};

struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    // Lexicographically first basis tuple where the two sides differ:
    // the input multi-index followed by the output basis index.
    std::vector<Index> witness_input;
    Index witness_output = -1;
    std::string lhs_value, rhs_value;
};

struct ValidationReport {
    std::vector<AxiomCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::string summary() const;
};

// Structure maps as LinMaps with tagged bases ('H' or 'A').
LinMap mul_map(const AlgebraData& a, char tag);
LinMap unit_map(const AlgebraData& a, char tag);
LinMap comul_map(const CoalgebraData& c, char tag);
LinMap counit_map(const CoalgebraData& c, char tag);
LinMap mul_map(const BialgebraData& h);
LinMap comul_map(const BialgebraData& h);
LinMap unit_map(const BialgebraData& h);
LinMap counit_map(const BialgebraData& h);
LinMap antipode_map(const BialgebraData& h);
LinMap action_map(const ActionData& act, Index dim_h, Index dim_a, FieldSpec field);
LinMap coaction_map(const CoactionData& co, Index dim_h, Index dim_a, FieldSpec field);

ValidationReport validate_algebra(const AlgebraData& a, const std::string& label = "A");
ValidationReport validate_coalgebra(const CoalgebraData& c, const std::string& label = "A");
ValidationReport validate_bialgebra(const BialgebraData& h, const std::string& label = "H");
ValidationReport validate_bialgebra_target(const BialgebraTargetData& a);

ValidationReport validate_module_algebra(const BialgebraData& h, const AlgebraData& a,
                                         const ActionData& act);
ValidationReport validate_module_coalgebra(const BialgebraData& h, const CoalgebraData& a,
                                           const ActionData& act);
ValidationReport validate_comodule_algebra(const BialgebraData& h, const AlgebraData& a,
                                           const CoactionData& co);
ValidationReport validate_comodule_coalgebra(const BialgebraData& h, const CoalgebraData& a,
                                             const CoactionData& co);
ValidationReport validate_module_bialgebra(const BialgebraData& h, const BialgebraTargetData& a,
                                           const ActionData& act);
ValidationReport validate_comodule_bialgebra(const BialgebraData& h, const BialgebraTargetData& a,
                                             const CoactionData& co);

/// Kind dispatch over the validators above, plus H itself.
ValidationReport validate_package(const StructurePackage& pkg);

}  // namespace homalg
