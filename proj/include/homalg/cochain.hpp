#pragma once

#include "homalg/linmap.hpp"

namespace homalg {

/// Shape of a Hom space Hom(src, dst).  Cochain coordinates are input-major:
/// coord(in, out) = in * dim(dst) + out.  With this codec the Hom-tensor
/// adjunction Hom(X (x) Y, Z) = Hom(X, Hom(Y, Z)) is the identity on stored
/// coordinates, so every curried display form of the paper shares one layout.
struct HomShape {
    TensorBasis src;
    TensorBasis dst;

    Index dim() const { return src.total_dim() * dst.total_dim(); }
    Index coord(Index in, Index out) const { return in * dst.total_dim() + out; }
    std::pair<Index, Index> decode(Index coord) const {
        return {coord / dst.total_dim(), coord % dst.total_dim()};
    }
};

/// The matrix, on cochain coordinates, of the operator
///   phi  |->  post o (Id_l (x) phi (x) Id_r) o pre
/// where pre : to.src -> l (x) from.src (x) r and
/// post : l (x) from.dst (x) r -> to.dst.  Every clause of every
/// differential in the six complexes has this form.
Mat clause_operator(const HomShape& from, const HomShape& to, const SparseMap& post, Index l,
                    Index r, const SparseMap& pre);

/// View cochain coordinates as a concrete linear map src -> dst.
SparseMap cochain_to_map(const HomShape& shape, const Mat& coords);

/// Inverse of cochain_to_map.
Mat map_to_cochain(const HomShape& shape, const SparseMap& m);

/// Value of the cochain on a basis input tuple, as coordinates in dst.
Mat evaluate_cochain(const HomShape& shape, const Mat& coords, const std::vector<Index>& input);

/// Coordinate permutation Hom(X (x) Y, Z) -> Hom(Y (x) X, Z) swapping the two
/// argument blocks; with the input-major codec this is the zeta map of the
/// row isomorphism (double Hom-tensor adjunction).
SparseMap hom_block_swap(FieldSpec field, const TensorBasis& x, const TensorBasis& y,
                         const TensorBasis& z);

/// Currying is the identity on coordinates under this codec; these helpers
/// exist so call sites state their intent and get the shape checks.
inline SparseMap curry_identity(FieldSpec field, const HomShape& uncurried,
                                const HomShape& curried) {
    require(uncurried.dim() == curried.dim(), "curry: dimension mismatch");
    return SparseMap::identity(field, uncurried.dim());
}

}  // namespace homalg
