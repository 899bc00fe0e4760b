#include "doctest.h"

#include <random>

#include "homalg/catalog.hpp"
#include "homalg/cochain.hpp"
#include "homalg/combinators.hpp"

using namespace homalg;

namespace {

const FieldSpec Q{0};

LinMap random_map(std::mt19937& rng, FieldSpec f, const TensorBasis& src, const TensorBasis& dst) {
    std::uniform_int_distribution<int> val(-3, 3);
    Mat m(f, dst.total_dim(), src.total_dim());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) m.at(i, j) = val(rng);
    return LinMap(src, dst, SparseMap::from_dense(m));
}

}  // namespace

TEST_CASE("tensor basis codec round-trips") {
    TensorBasis b = TensorBasis::power('H', 3, 2).tensor(TensorBasis::single('A', 2));
    CHECK(b.total_dim() == 18);
    for (Index k = 0; k < b.total_dim(); ++k) CHECK(b.flatten(b.unflatten(k)) == k);
    CHECK(b.flatten({1, 2, 0}) == 1 * 6 + 2 * 2 + 0);
}

TEST_CASE("kronecker product against basis evaluation") {
    std::mt19937 rng(7);
    TensorBasis x2 = TensorBasis::single('A', 2), x3 = TensorBasis::single('A', 3);
    CHECK(tensor(identity_map(Q, x2), identity_map(Q, x3)).mat.equals(
        SparseMap::identity(Q, 6)));

    LinMap f = random_map(rng, Q, x2, x2), g = random_map(rng, Q, x2, x2);
    LinMap fg = tensor(f, g);
    for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 2; ++j) {
            Mat lhs = fg.mat.to_dense().col(i * 2 + j);
            Mat fi = f.mat.to_dense().col(i), gj = g.mat.to_dense().col(j);
            for (Index a = 0; a < 2; ++a)
                for (Index b = 0; b < 2; ++b)
                    CHECK(lhs.at(a * 2 + b, 0) == fi.at(a, 0) * gj.at(b, 0));
        }

    // interchange law
    LinMap f2 = random_map(rng, Q, x2, x2), g2 = random_map(rng, Q, x2, x2);
    CHECK(compose(tensor(f, g), tensor(f2, g2)).mat.equals(
        tensor(compose(f, f2), compose(g, g2)).mat));
}

TEST_CASE("twist properties") {
    TensorBasis one = TensorBasis::single('A', 1), n = TensorBasis::single('A', 5);
    CHECK(twist(Q, one, n).mat.equals(SparseMap::identity(Q, 5)));
    TensorBasis x2 = TensorBasis::single('A', 2), x3 = TensorBasis::single('A', 3);
    LinMap t23 = twist(Q, x2, x3), t32 = twist(Q, x3, x2);
    CHECK(t23.mat.compose(t32.mat).equals(SparseMap::identity(Q, 6)));
    LinMap t22 = twist(Q, x2, x2);
    CHECK(t22.mat.compose(t22.mat).equals(SparseMap::identity(Q, 4)));
}

TEST_CASE("iterated comultiplication") {
    BialgebraData z2 = group_bialgebra(Q, 2);
    LinMap de = comul_map(z2);
    CHECK(iterated_comul(de, 0).mat.equals(SparseMap::identity(Q, 2)));
    // group-like: g -> g (x) g (x) g
    LinMap d2 = iterated_comul(de, 2);
    Mat col = d2.mat.to_dense().col(1);
    for (Index r = 0; r < 8; ++r) CHECK(col.at(r, 0) == ((r == 7) ? 1 : 0));

    // parenthesization independence on Sweedler's Hopf algebra
    BialgebraData sw = sweedler_hopf(Q);
    LinMap desw = comul_map(sw);
    LinMap id = identity_map(Q, desw.src);
    LinMap left = compose(tensor(desw, id), desw);
    LinMap right = compose(tensor(id, desw), desw);
    CHECK(left.mat.equals(right.mat));
    for (int n = 0; n <= 3; ++n) {
        LinMap a = iterated_comul(desw, n);
        CHECK(a.mat.rows() == 1 << (2 * (n + 1)));
    }
}

TEST_CASE("iterated multiplication") {
    BialgebraData z2 = group_bialgebra(Q, 2);
    LinMap mu = mul_map(z2);
    CHECK(iterated_mul(mu, nullptr, 1).mat.equals(SparseMap::identity(Q, 2)));
    LinMap m3 = iterated_mul(mu, nullptr, 3);
    // (g, g, g) -> g
    CHECK(m3.mat.to_dense().at(1, 7) == 1);
    CHECK_THROWS_AS(iterated_mul(mul_map(dual_numbers(Q), 'A'), nullptr, 0), Error);

    // nesting independence on dual numbers
    AlgebraData dn = dual_numbers(Q);
    LinMap mud = mul_map(dn, 'A');
    LinMap id = identity_map(Q, mud.dst);
    CHECK(compose(mud, tensor(mud, id)).mat.equals(compose(mud, tensor(id, mud)).mat));
}

TEST_CASE("cochain coordinates, currying and evaluation") {
    HomShape shape{TensorBasis::power('A', 2, 2), TensorBasis::single('A', 2)};
    CHECK(shape.dim() == 8);

    // curry/uncurry is the identity on coordinates
    HomShape curried{TensorBasis::single('A', 2),
                     TensorBasis::power('A', 2, 1).tensor(TensorBasis::single('A', 2))};
    CHECK(curry_identity(Q, shape, curried).equals(SparseMap::identity(Q, 8)));

    // zero cochain evaluates to zero
    Mat zero(Q, 8, 1);
    CHECK(evaluate_cochain(shape, zero, {0, 1}).is_zero());

    // identity 1-cochain
    HomShape endo{TensorBasis::single('A', 3), TensorBasis::single('A', 3)};
    Mat idc = map_to_cochain(endo, SparseMap::identity(Q, 3));
    for (Index i = 0; i < 3; ++i) {
        Mat v = evaluate_cochain(endo, idc, {i});
        for (Index r = 0; r < 3; ++r) CHECK(v.at(r, 0) == (r == i ? 1 : 0));
    }

    // dual-basis property of a basis cochain
    Mat basis(Q, 8, 1);
    basis.at(shape.coord(2, 1), 0) = 1;
    CHECK(evaluate_cochain(shape, basis, {1, 0}).at(1, 0) == 1);  // input (1,0) flattens to 2
    CHECK(evaluate_cochain(shape, basis, {0, 1}).is_zero());

    // round trip through the concrete map view
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> val(-2, 2);
    Mat coords(Q, 8, 1);
    for (Index k = 0; k < 8; ++k) coords.at(k, 0) = val(rng);
    CHECK(map_to_cochain(shape, cochain_to_map(shape, coords)) == coords);
}

TEST_CASE("hom block swap realizes the double adjunction") {
    TensorBasis x = TensorBasis::single('A', 2), y = TensorBasis::single('H', 2),
                z = TensorBasis::single('A', 2);
    SparseMap zeta = hom_block_swap(Q, x, y, z);
    HomShape from{x.tensor(y), z}, to{y.tensor(x), z};
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> val(-2, 2);
    Mat coords(Q, from.dim(), 1);
    for (Index k = 0; k < coords.rows(); ++k) coords.at(k, 0) = val(rng);
    Mat swapped = matmul(zeta.to_dense(), coords);
    for (Index a = 0; a < 2; ++a)
        for (Index h = 0; h < 2; ++h) {
            Mat lhs = evaluate_cochain(to, swapped, {h, a});
            Mat rhs = evaluate_cochain(from, coords, {a, h});
            CHECK(lhs == rhs);
        }
}

TEST_CASE("diagonal action and coaction powers") {
    BialgebraData z2 = group_bialgebra(Q, 2);
    ActionData flip = permutation_action(Q, 2, 3, {0, 2, 1});
    LinMap lam = action_map(flip, 2, 3, Q);
    LinMap lam2 = diag_action(lam, comul_map(z2), counit_map(z2), 2);
    // g . (e1 (x) e2) = e2 (x) e1 under inversion of Z/3
    TensorBasis src = TensorBasis::single('H', 2).tensor(TensorBasis::power('A', 3, 2));
    Mat col = lam2.mat.to_dense().col(src.flatten({1, 1, 2}));
    TensorBasis dst = TensorBasis::power('A', 3, 2);
    for (Index r = 0; r < 9; ++r) CHECK(col.at(r, 0) == (r == dst.flatten({2, 1}) ? 1 : 0));

    CoactionData tr = trivial_coaction(z2, 3);
    LinMap rho = coaction_map(tr, 2, 3, Q);
    LinMap rho2 = coaction_power(rho, mul_map(z2), unit_map(z2), 2);
    CHECK(rho2.mat.nnz() == 9);  // 1_H tensor everything
}
