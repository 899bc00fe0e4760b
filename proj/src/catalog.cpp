#include "homalg/catalog.hpp"

#include "homalg/combinators.hpp"

namespace homalg {

BialgebraData ground_bialgebra(FieldSpec field) {
    BialgebraData h;
    h.dim = 1;
    h.field = field;
    h.mul = Mat(field, 1, 1);
    h.mul.at(0, 0) = 1;
    h.comul = Mat(field, 1, 1);
    h.comul.at(0, 0) = 1;
    h.unit = Mat(field, 1, 1);
    h.unit.at(0, 0) = 1;
    h.counit = Mat(field, 1, 1);
    h.counit.at(0, 0) = 1;
    Mat s(field, 1, 1);
    s.at(0, 0) = 1;
    h.antipode = s;
    return h;
}

BialgebraData group_bialgebra(FieldSpec field, Index n) {
    require(n >= 1, "group order must be positive");
    BialgebraData h;
    h.dim = n;
    h.field = field;
    h.mul = Mat(field, n, n * n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) h.mul.at((i + j) % n, i * n + j) = 1;
    h.comul = Mat(field, n * n, n);
    for (Index i = 0; i < n; ++i) h.comul.at(i * n + i, i) = 1;
    h.unit = Mat(field, n, 1);
    h.unit.at(0, 0) = 1;
    h.counit = Mat(field, 1, n);
    for (Index i = 0; i < n; ++i) h.counit.at(0, i) = 1;
    Mat s(field, n, n);
    for (Index i = 0; i < n; ++i) s.at((n - i) % n, i) = 1;
    h.antipode = s;
    return h;
}

BialgebraData sweedler_hopf(FieldSpec field) {
    // Basis order {1, g, x, gx}; g^2 = 1, x^2 = 0, xg = -gx,
    // Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x.
    BialgebraData h;
    h.dim = 4;
    h.field = field;
    Field F(field);
    h.mul = Mat(field, 4, 16);
    auto set_product = [&](Index i, Index j, Index k, long c) {
        h.mul.at(k, i * 4 + j) = F.from_long(c);
    };
    // 1 * y and y * 1
    for (Index y = 0; y < 4; ++y) {
        set_product(0, y, y, 1);
        if (y != 0) set_product(y, 0, y, 1);
    }
    set_product(1, 1, 0, 1);   // g g = 1
    set_product(1, 2, 3, 1);   // g x = gx
    set_product(1, 3, 2, 1);   // g gx = x
    set_product(2, 1, 3, -1);  // x g = -gx
    set_product(3, 1, 2, -1);  // gx g = -x
    // x x = x gx = gx x = gx gx = 0
    h.comul = Mat(field, 16, 4);
    auto add_comul = [&](Index i, Index a, Index b, long c) {
        h.comul.at(a * 4 + b, i) = F.from_long(c);
    };
    add_comul(0, 0, 0, 1);                       // 1 -> 1 (x) 1
    add_comul(1, 1, 1, 1);                       // g -> g (x) g
    add_comul(2, 2, 0, 1); add_comul(2, 1, 2, 1);  // x -> x (x) 1 + g (x) x
    add_comul(3, 3, 1, 1); add_comul(3, 0, 3, 1);  // gx -> gx (x) g + 1 (x) gx
    h.unit = Mat(field, 4, 1);
    h.unit.at(0, 0) = 1;
    h.counit = Mat(field, 1, 4);
    h.counit.at(0, 0) = 1;
    h.counit.at(0, 1) = 1;
    Mat s(field, 4, 4);
    s.at(0, 0) = 1;
    s.at(1, 1) = 1;
    s.at(3, 2) = F.from_long(-1);  // S(x) = -gx
    s.at(2, 3) = 1;                // S(gx) = x
    h.antipode = s;
    return h;
}

AlgebraData dual_numbers(FieldSpec field) {
    AlgebraData a;
    a.dim = 2;
    a.field = field;
    a.mul = Mat(field, 2, 4);
    a.mul.at(0, 0) = 1;  // 1*1
    a.mul.at(1, 1) = 1;  // 1*x
    a.mul.at(1, 2) = 1;  // x*1
    // x*x = 0
    Mat u(field, 2, 1);
    u.at(0, 0) = 1;
    a.unit = u;
    return a;
}

ActionData counit_action(const BialgebraData& h, Index dim_a) {
    Mat m(h.field, dim_a, h.dim * dim_a);
    for (Index i = 0; i < h.dim; ++i)
        for (Index j = 0; j < dim_a; ++j) m.at(j, i * dim_a + j) = h.counit.at(0, i);
    return {m};
}

ActionData permutation_action(FieldSpec field, Index m, Index dim_a,
                              const std::vector<Index>& sigma) {
    require(static_cast<Index>(sigma.size()) == dim_a, "permutation arity mismatch");
    Mat act(field, dim_a, m * dim_a);
    std::vector<Index> pow(static_cast<std::size_t>(dim_a));
    for (Index j = 0; j < dim_a; ++j) pow[static_cast<std::size_t>(j)] = j;
    for (Index i = 0; i < m; ++i) {
        for (Index j = 0; j < dim_a; ++j) act.at(pow[static_cast<std::size_t>(j)], i * dim_a + j) = 1;
        std::vector<Index> next(static_cast<std::size_t>(dim_a));
        for (Index j = 0; j < dim_a; ++j)
            next[static_cast<std::size_t>(j)] = sigma[static_cast<std::size_t>(
                pow[static_cast<std::size_t>(j)])];
        pow = next;
    }
    return {act};
}

CoactionData trivial_coaction(const BialgebraData& h, Index dim_a) {
    Mat m(h.field, h.dim * dim_a, dim_a);
    for (Index i = 0; i < h.dim; ++i)
        for (Index j = 0; j < dim_a; ++j) m.at(i * dim_a + j, j) = h.unit.at(i, 0);
    return {m};
}

CoactionData self_coaction(const BialgebraData& h) { return {h.comul}; }

CoactionData adjoint_coaction(const BialgebraData& h) {
    require(h.antipode.has_value(), "adjoint coaction needs an antipode");
    const FieldSpec f = h.field;
    LinMap de = comul_map(h), mu = mul_map(h), s = antipode_map(h);
    LinMap id = identity_map(f, de.src);
    LinMap d2 = iterated_comul(de, 2);  // H -> H^3
    LinMap arrange = factor_permutation(f, d2.dst, {0, 2, 1});
    LinMap collapse = tensor(compose(mu, tensor(id, s)), id);
    LinMap rho = compose(collapse, compose(arrange, d2));
    return {rho.mat.to_dense()};
}

std::vector<std::string> catalog_names() {
    return {"trivial-action",          "dual-number-algebra",     "group-flip-Z2",
            "group-inv-Z3",            "sign-flip-Z2",            "counit-action-sweedler",
            "counit-action-sweedler-mc", "counit-action-sweedler-mb", "self-coaction-Z2",
            "trivial-coaction-dual",   "adjoint-coaction-Z2",     "trivial-coaction-cb",
            "trivial-coaction-z3-cb"};
}

StructurePackage example_catalog(const std::string& name, FieldSpec field) {
    field.validate();
    Field F(field);
    StructurePackage pkg;
    pkg.field = field;
    pkg.name = name;

    auto bial_target = [&](const BialgebraData& b) {
        pkg.A_algebra = b.algebra();
        pkg.A_coalgebra = b.coalgebra();
    };

    if (name == "trivial-action") {
        pkg.kind = Kind::MA;
        pkg.H = ground_bialgebra(field);
        pkg.A_algebra = ground_bialgebra(field).algebra();
        pkg.action = counit_action(pkg.H, 1);
    } else if (name == "dual-number-algebra") {
        pkg.kind = Kind::MA;
        pkg.H = ground_bialgebra(field);
        pkg.A_algebra = dual_numbers(field);
        pkg.action = counit_action(pkg.H, 2);
    } else if (name == "group-flip-Z2") {
        // phi : Z/2 -> Aut(Z/2); Aut(Z/2) is trivial, so the action agrees
        // with the counit action.  Kept as the literal worked example.
        pkg.kind = Kind::MB;
        pkg.H = group_bialgebra(field, 2);
        bial_target(group_bialgebra(field, 2));
        pkg.action = permutation_action(field, 2, 2, {0, 1});
    } else if (name == "group-inv-Z3") {
        // K[Z/2] acting on K[Z/3] by inversion: the smallest non-trivial
        // instance of a group homomorphism Z/2 -> Aut(Z/3).
        pkg.kind = Kind::MB;
        pkg.H = group_bialgebra(field, 2);
        bial_target(group_bialgebra(field, 3));
        pkg.action = permutation_action(field, 2, 3, {0, 2, 1});
    } else if (name == "sign-flip-Z2") {
        // The algebra automorphism g -> -g of K[Z/2]; a module-algebra that
        // is not a module-coalgebra away from characteristic 2.
        pkg.kind = Kind::MA;
        pkg.H = group_bialgebra(field, 2);
        pkg.A_algebra = group_bialgebra(field, 2).algebra();
        Mat act(field, 2, 4);
        act.at(0, 0) = 1;
        act.at(1, 1) = 1;
        act.at(0, 2) = 1;
        act.at(1, 3) = F.from_long(-1);
        pkg.action = ActionData{act};
    } else if (name == "counit-action-sweedler") {
        pkg.kind = Kind::MA;
        pkg.H = sweedler_hopf(field);
        pkg.A_algebra = dual_numbers(field);
        pkg.action = counit_action(pkg.H, 2);
    } else if (name == "counit-action-sweedler-mc") {
        pkg.kind = Kind::MC;
        pkg.H = sweedler_hopf(field);
        pkg.A_coalgebra = group_bialgebra(field, 2).coalgebra();
        pkg.action = counit_action(pkg.H, 2);
    } else if (name == "counit-action-sweedler-mb") {
        pkg.kind = Kind::MB;
        pkg.H = sweedler_hopf(field);
        bial_target(group_bialgebra(field, 2));
        pkg.action = counit_action(pkg.H, 2);
    } else if (name == "self-coaction-Z2") {
        pkg.kind = Kind::CA;
        pkg.H = group_bialgebra(field, 2);
        pkg.A_algebra = group_bialgebra(field, 2).algebra();
        pkg.coaction = self_coaction(pkg.H);
    } else if (name == "trivial-coaction-dual") {
        pkg.kind = Kind::CA;
        pkg.H = group_bialgebra(field, 2);
        pkg.A_algebra = dual_numbers(field);
        pkg.coaction = trivial_coaction(pkg.H, 2);
    } else if (name == "adjoint-coaction-Z2") {
        pkg.kind = Kind::CB;
        pkg.H = group_bialgebra(field, 2);
        bial_target(group_bialgebra(field, 2));
        pkg.coaction = adjoint_coaction(pkg.H);
    } else if (name == "trivial-coaction-cb") {
        pkg.kind = Kind::CB;
        pkg.H = group_bialgebra(field, 2);
        bial_target(group_bialgebra(field, 2));
        pkg.coaction = trivial_coaction(pkg.H, 2);
    } else if (name == "trivial-coaction-z3-cb") {
        pkg.kind = Kind::CB;
        pkg.H = group_bialgebra(field, 2);
        bial_target(group_bialgebra(field, 3));
        pkg.coaction = trivial_coaction(pkg.H, 3);
    } else {
        throw Error("unknown catalog entry '" + name + "'");
    }

    ValidationReport rep = validate_package(pkg);
    if (!rep.all_pass())
        throw Error("catalog entry '" + name + "' fails validation over " + field.to_string() +
                    ":\n" + rep.summary());
    return pkg;
}

}  // namespace homalg
