#include "homalg/hochschild.hpp"

namespace homalg {

namespace {

struct Checker2 {
    ValidationReport rep;
    void check(const std::string& axiom, const SparseMap& lhs, const SparseMap& rhs) {
        AxiomCheck c;
        c.axiom = axiom;
        c.pass = lhs.equals(rhs);
        rep.checks.push_back(std::move(c));
    }
};

}  // namespace

ValidationReport validate_bimodule(const BimoduleStructure& m, const AlgebraData& a) {
    Checker2 ck;
    const FieldSpec f = a.field;
    LinMap mu = mul_map(a, 'A');
    LinMap idM = identity_map(f, m.carrier);
    LinMap idA = identity_map(f, mu.dst);
    ck.check("bimodule: left associativity", compose(m.left, tensor(mu, idM)).mat,
             compose(m.left, tensor(idA, m.left)).mat);
    ck.check("bimodule: right associativity", compose(m.right, tensor(m.right, idA)).mat,
             compose(m.right, tensor(idM, mu)).mat);
    ck.check("bimodule: actions commute", compose(m.left, tensor(idA, m.right)).mat,
             compose(m.right, tensor(m.left, idA)).mat);
    if (a.unit) {
        LinMap u = unit_map(a, 'A');
        ck.check("bimodule: left unit", compose(m.left, tensor(u, idM)).mat, idM.mat);
        ck.check("bimodule: right unit", compose(m.right, tensor(idM, u)).mat, idM.mat);
    }
    return ck.rep;
}

ValidationReport validate_bicomodule(const BicomoduleStructure& m, const CoalgebraData& c) {
    Checker2 ck;
    const FieldSpec f = c.field;
    LinMap de = comul_map(c, 'A');
    LinMap idM = identity_map(f, m.carrier);
    LinMap idA = identity_map(f, de.src);
    ck.check("bicomodule: left coassociativity", compose(tensor(de, idM), m.left).mat,
             compose(tensor(idA, m.left), m.left).mat);
    ck.check("bicomodule: right coassociativity", compose(tensor(m.right, idA), m.right).mat,
             compose(tensor(idM, de), m.right).mat);
    ck.check("bicomodule: coactions commute", compose(tensor(idA, m.right), m.left).mat,
             compose(tensor(m.left, idA), m.right).mat);
    if (c.counit) {
        LinMap e = counit_map(c, 'A');
        ck.check("bicomodule: left counit", compose(tensor(e, idM), m.left).mat, idM.mat);
        ck.check("bicomodule: right counit", compose(tensor(idM, e), m.right).mat, idM.mat);
    }
    return ck.rep;
}

std::vector<Mat> hochschild_clauses(const BimoduleStructure& m, const LinMap& mul_a, int n) {
    require(n >= 0, "hochschild_clauses: n must be >= 0");
    const FieldSpec f = mul_a.mat.field();
    const Index a = mul_a.dst.total_dim();
    const char tag = mul_a.dst.factor(0).tag;
    HomShape from{TensorBasis::power(tag, a, n), m.carrier};
    HomShape to{TensorBasis::power(tag, a, n + 1), m.carrier};
    SparseMap id_src = SparseMap::identity(f, to.src.total_dim());
    std::vector<Mat> clauses;
    clauses.push_back(clause_operator(from, to, m.left.mat, a, 1, id_src));
    for (int i = 1; i <= n; ++i) {
        LinMap insert = tensor(identity_map(f, TensorBasis::power(tag, a, i - 1)),
                               tensor(mul_a, identity_map(f, TensorBasis::power(tag, a, n - i))));
        clauses.push_back(clause_operator(from, to, SparseMap::identity(f, m.carrier.total_dim()),
                                          1, 1, insert.mat));
    }
    clauses.push_back(clause_operator(from, to, m.right.mat, 1, a, id_src));
    return clauses;
}

std::vector<Mat> hochschild_coalg_clauses(const BicomoduleStructure& m, const LinMap& comul_a,
                                          int n) {
    require(n >= 1, "hochschild_coalg_clauses: degree 0 cochains are zero");
    const FieldSpec f = comul_a.mat.field();
    const Index a = comul_a.src.total_dim();
    const char tag = comul_a.src.factor(0).tag;
    HomShape from{m.carrier, TensorBasis::power(tag, a, n)};
    HomShape to{m.carrier, TensorBasis::power(tag, a, n + 1)};
    SparseMap id_dst = SparseMap::identity(f, to.dst.total_dim());
    SparseMap id_m = SparseMap::identity(f, m.carrier.total_dim());
    std::vector<Mat> clauses;
    clauses.push_back(clause_operator(from, to, id_dst, a, 1, m.left.mat));
    for (int i = 1; i <= n; ++i) {
        LinMap insert = tensor(identity_map(f, TensorBasis::power(tag, a, i - 1)),
                               tensor(comul_a, identity_map(f, TensorBasis::power(tag, a, n - i))));
        clauses.push_back(clause_operator(from, to, insert.mat, 1, 1, id_m));
    }
    clauses.push_back(clause_operator(from, to, id_dst, 1, a, m.right.mat));
    return clauses;
}

Mat alternating_sum(const std::vector<Mat>& clauses) {
    require(!clauses.empty(), "no clauses to sum");
    Mat acc = clauses[0];
    for (std::size_t i = 1; i < clauses.size(); ++i)
        acc = (i % 2 == 1) ? sub(acc, clauses[i]) : add(acc, clauses[i]);
    return acc;
}

Mat hochschild_diff(const BimoduleStructure& m, const AlgebraData& a, int n) {
    return alternating_sum(hochschild_clauses(m, mul_map(a, 'A'), n));
}

Mat hochschild_coalg_diff(const BicomoduleStructure& m, const CoalgebraData& c, int n) {
    return alternating_sum(hochschild_coalg_clauses(m, comul_map(c, 'A'), n));
}

}  // namespace homalg
