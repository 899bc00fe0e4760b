#include "homalg/combinators.hpp"

namespace homalg {

namespace {

// Interleave X^n (x) Y^n -> (X (x) Y)^n as a factor permutation.
std::vector<std::size_t> interleave_perm(int n) {
    std::vector<std::size_t> perm;
    perm.reserve(static_cast<std::size_t>(2 * n));
    for (int k = 0; k < n; ++k) {
        perm.push_back(static_cast<std::size_t>(k));
        perm.push_back(static_cast<std::size_t>(n + k));
    }
    return perm;
}

// Deinterleave (X (x) Y)^n -> X^n (x) Y^n.
std::vector<std::size_t> deinterleave_perm(int n) {
    std::vector<std::size_t> perm;
    perm.reserve(static_cast<std::size_t>(2 * n));
    for (int k = 0; k < n; ++k) perm.push_back(static_cast<std::size_t>(2 * k));
    for (int k = 0; k < n; ++k) perm.push_back(static_cast<std::size_t>(2 * k + 1));
    return perm;
}

LinMap tensor_power(const LinMap& f, int n) {
    require(n >= 0, "negative tensor power");
    LinMap acc = identity_map(f.mat.field(), TensorBasis());
    for (int i = 0; i < n; ++i) acc = tensor(acc, f);
    return acc;
}

}  // namespace

LinMap iterated_comul(const LinMap& comul, int n) {
    require(n >= 0, "iterated_comul: n must be >= 0");
    require(comul.src.factor_count() == 1 && comul.dst.factor_count() == 2,
            "iterated_comul: expected a map C -> C (x) C");
    const FieldSpec field = comul.mat.field();
    LinMap acc = identity_map(field, comul.src);
    for (int k = 0; k < n; ++k) {
        // Delta^k = (Delta (x) Id^(k)) o Delta^(k-1), nesting on the left.
        LinMap step = tensor(comul, identity_map(field, TensorBasis::power(
                                        comul.src.factor(0).tag, comul.src.factor(0).dim, k)));
        acc = compose(step, acc);
    }
    return acc;
}

LinMap iterated_mul(const LinMap& mul, const LinMap* unit, int n) {
    require(mul.src.factor_count() == 2 && mul.dst.factor_count() == 1,
            "iterated_mul: expected a map A (x) A -> A");
    const FieldSpec field = mul.mat.field();
    if (n == 0) {
        require(unit != nullptr, "iterated_mul: n = 0 needs the unit");
        return *unit;
    }
    require(n >= 1, "iterated_mul: n must be >= 0");
    LinMap acc = identity_map(field, mul.dst);
    for (int k = 1; k < n; ++k) {
        // mu^(k+1) = mu o (mu^k (x) Id).
        LinMap step = tensor(acc, identity_map(field, mul.dst));
        acc = compose(mul, step);
    }
    return acc;
}

LinMap comul_to_power(const LinMap& comul, const LinMap& counit, int q) {
    require(q >= 0, "comul_to_power: q must be >= 0");
    if (q == 0) return counit;
    return iterated_comul(comul, q - 1);
}

LinMap mul_from_power(const LinMap& mul, const LinMap& unit, int q) {
    require(q >= 0, "mul_from_power: q must be >= 0");
    if (q == 0) return unit;
    return iterated_mul(mul, nullptr, q);
}

LinMap sweedler_split(const LinMap& comul, int q) {
    require(q >= 0, "sweedler_split: q must be >= 0");
    const FieldSpec field = comul.mat.field();
    LinMap split = tensor_power(comul, q);  // (C (x) C)^q from C^q
    return compose(factor_permutation(field, split.dst, deinterleave_perm(q)), split);
}

LinMap diag_action(const LinMap& act, const LinMap& comul_h, const LinMap& counit_h, int n) {
    require(n >= 0, "diag_action: n must be >= 0");
    require(act.src.factor_count() == 2, "diag_action: expected a map H (x) A -> A");
    const FieldSpec field = act.mat.field();
    if (n == 0) return counit_h;  // H (x) K -> K
    LinMap legs = tensor(comul_to_power(comul_h, counit_h, n),
                         identity_map(field, TensorBasis::power(act.src.factor(1).tag,
                                                                act.src.factor(1).dim, n)));
    LinMap inter = factor_permutation(field, legs.dst, interleave_perm(n));
    return compose(tensor_power(act, n), compose(inter, legs));
}

LinMap diag_mul_right(const LinMap& mul, const LinMap& comul, const LinMap& counit, int q) {
    require(q >= 0, "diag_mul_right: q must be >= 0");
    const FieldSpec field = mul.mat.field();
    if (q == 0) {
        // K (x) C -> K: drop the lone factor through the counit.
        return counit;
    }
    const TensorBasis c = mul.dst;
    LinMap legs = tensor(identity_map(field, TensorBasis::power(c.factor(0).tag, c.factor(0).dim, q)),
                         comul_to_power(comul, counit, q));
    LinMap inter = factor_permutation(field, legs.dst, interleave_perm(q));
    return compose(tensor_power(mul, q), compose(inter, legs));
}

LinMap factorwise_mul(const LinMap& mul, int q) {
    require(q >= 0, "factorwise_mul: q must be >= 0");
    const FieldSpec field = mul.mat.field();
    const TensorBasis c = mul.dst;
    TensorBasis src = TensorBasis::power(c.factor(0).tag, c.factor(0).dim, 2 * q);
    LinMap inter = factor_permutation(field, src, interleave_perm(q));
    return compose(tensor_power(mul, q), inter);
}

LinMap coaction_power(const LinMap& coact, const LinMap& mul_h, const LinMap& unit_h, int n) {
    require(n >= 0, "coaction_power: n must be >= 0");
    require(coact.dst.factor_count() == 2, "coaction_power: expected a map A -> H (x) A");
    const FieldSpec field = coact.mat.field();
    if (n == 0) return unit_h;  // K -> H
    if (n == 1) return coact;
    LinMap legs = tensor_power(coact, n);  // A^n -> (H (x) A)^n
    LinMap shuffled = compose(factor_permutation(field, legs.dst, deinterleave_perm(n)), legs);
    LinMap collapse = tensor(iterated_mul(mul_h, &unit_h, n),
                             identity_map(field, TensorBasis::power(coact.dst.factor(1).tag,
                                                                    coact.dst.factor(1).dim, n)));
    return compose(collapse, shuffled);
}

}  // namespace homalg
