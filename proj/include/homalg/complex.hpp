#pragma once

#include <map>
#include <optional>

#include "homalg/homspace.hpp"

namespace homalg {

/// Raised coordinate of a differential: P is the paper's d / d_I (algebra
/// degree), Q is b / d_II, R is d_III (the H-degree of the tricomplexes).
enum class Dir { P, Q, R };

std::string dir_name(Kind k, Dir d);
Degree step(const Degree& d, Dir dir);

/// One differential of the grid.  `raw` is the unsigned alternating sum of
/// the retained clauses; the paper's global sign twist is recorded but not
/// baked into the matrix, so it can be applied exactly once downstream.
struct DifferentialMatrix {
    Degree src, dst;
    Dir dir = Dir::P;
    std::vector<Mat> clauses;
    Mat raw;
    // At the Der/Coder/Bider corner, `raw` is restricted to the corner basis;
    // the unrestricted matrix on the full Hom space is kept alongside.
    std::optional<Mat> unrestricted;
    int header_sign = 1;  // the displayed bicomplex/tricomplex sign at src
    Mat signed_matrix() const { return header_sign == 1 ? raw : neg(raw); }
};

struct BuildOptions {
    bool retain_clauses = true;
    Index ceiling = 20000;  // feasibility guard on the largest grid dimension
    struct SignMutation {
        Degree deg;
        Dir dir;
        int clause = 0;
    };
    std::optional<SignMutation> sign_mutation;  // mutation-testing hook
};

/// All Hom spaces and differential matrices of one complex up to the cutoff:
/// grid entries have total degree <= cutoff + 1 and differentials have
/// source total degree <= cutoff, so composite identities are fully
/// checkable for sources of total degree <= cutoff - 1.
class ComplexAssembly {
public:
    Kind kind = Kind::MA;
    StructurePackage pkg;
    int cutoff = 0;
    std::map<Degree, HomSpace> grid;
    std::map<std::pair<Degree, int>, DifferentialMatrix> diffs;  // key: (src, Dir as int)

    const HomSpace* space(const Degree& d) const {
        auto it = grid.find(d);
        return it == grid.end() ? nullptr : &it->second;
    }
    const DifferentialMatrix* diff(const Degree& d, Dir dir) const {
        auto it = diffs.find({d, static_cast<int>(dir)});
        return it == diffs.end() ? nullptr : &it->second;
    }
    std::vector<Dir> directions() const {
        if (kind_is_tricomplex(kind)) return {Dir::P, Dir::Q, Dir::R};
        return {Dir::P, Dir::Q};
    }
};

/// Build the deformation complex of the package's kind.  Dispatches to the
/// six constructions; pkg must have passed validation.
ComplexAssembly build_complex(const StructurePackage& pkg, int cutoff,
                              const BuildOptions& options = {});

struct CheckLine {
    std::string check;
    bool pass = true;
};

struct VerifyReport {
    std::vector<CheckLine> lines;
    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    Index failures() const {
        Index n = 0;
        for (const auto& l : lines)
            if (!l.pass) ++n;
        return n;
    }
};

/// Clause-by-clause simplicial identities: within each direction
/// d[l] o d[k] = d[k] o d[l-1] for k < l, and the pairwise clause
/// commutations between distinct directions.
VerifyReport verify_simplicial_identities(const ComplexAssembly& asm_);

/// Raw differentials square to zero and commute pairwise; with the paper's
/// signs applied, distinct directions anticommute.
VerifyReport verify_squares(const ComplexAssembly& asm_);

}  // namespace homalg
