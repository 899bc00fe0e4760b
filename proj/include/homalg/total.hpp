#pragma once

#include "homalg/complex.hpp"

namespace homalg {

/// Sign with which the raw differential in direction `dir` enters the total
/// differential at `src`.  For MA/CA this is the paper's displayed header;
/// for MC/CC it is the pattern induced by embedding into the p = 1 plane of
/// the tricomplexes ((-1)^(q+1) d + b), which is the convention under which
/// deformation infinitesimals are literally 2-cocycles; for MB/CB it is the
/// paper's tricomplex header.
int total_sign(Kind k, Dir dir, const Degree& src);

struct TotalLevel {
    int n = 0;
    std::vector<Degree> components;  // nonzero grid entries, lexicographic
    std::vector<Index> offsets;
    Index dim = 0;

    Index offset_of(const Degree& d) const;
};

/// The (shifted, for tricomplexes) total complex of an assembly: one level
/// per total degree inside the grid and one block matrix per differential.
class TotalComplex {
public:
    Kind kind = Kind::MA;
    int n_max = 0;                 // levels exist for 0..n_max+1, d for 0..n_max
    std::map<int, TotalLevel> levels;
    std::map<int, Mat> d;          // D_n : C^n -> C^(n+1)
    std::map<int, Mat> d_full;     // variant with the degree-1 corner widened
    Index full_level1_dim = 0;     // dim Hom(A, A)

    const TotalLevel& level(int n) const;
    const Mat& diff(int n) const;
    /// D_1 with the full End(A) as C^1 instead of the corner subspace.
    const Mat& diff_full(int n) const;

    /// Scatter component coordinates into a total-coordinate column.
    Mat embed(int n, const Degree& comp, const Mat& coords) const;
    /// Extract one component from total coordinates.
    Mat project(int n, const Degree& comp, const Mat& total) const;
};

TotalComplex total_complex(const ComplexAssembly& asm_);

/// Consecutive total differentials compose to zero (for both variants).
VerifyReport verify_total_squares(const TotalComplex& tot);

}  // namespace homalg
