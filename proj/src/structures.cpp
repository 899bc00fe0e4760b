#include "homalg/structures.hpp"

#include <sstream>

namespace homalg {

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::MA: return "MA";
        case Kind::MC: return "MC";
        case Kind::CA: return "CA";
        case Kind::CC: return "CC";
        case Kind::MB: return "MB";
        case Kind::CB: return "CB";
    }
    return "?";
}

Kind kind_from_name(const std::string& s) {
    if (s == "MA") return Kind::MA;
    if (s == "MC") return Kind::MC;
    if (s == "CA") return Kind::CA;
    if (s == "CC") return Kind::CC;
    if (s == "MB") return Kind::MB;
    if (s == "CB") return Kind::CB;
    throw Error("unknown kind '" + s + "' (expected MA, MC, CA, CC, MB or CB)");
}

bool kind_is_module(Kind k) { return k == Kind::MA || k == Kind::MC || k == Kind::MB; }
bool kind_has_algebra(Kind k) {
    return k == Kind::MA || k == Kind::CA || k == Kind::MB || k == Kind::CB;
}
bool kind_has_coalgebra(Kind k) {
    return k == Kind::MC || k == Kind::CC || k == Kind::MB || k == Kind::CB;
}

Index StructurePackage::dimA() const {
    if (A_algebra) return A_algebra->dim;
    if (A_coalgebra) return A_coalgebra->dim;
    throw Error("package has no target structure");
}

StructurePackage StructurePackage::view_as(Kind target) const {
    if (target == kind) return *this;
    auto ok = [&](Kind from, Kind to) {
        return (from == Kind::MB && (to == Kind::MA || to == Kind::MC)) ||
               (from == Kind::CB && (to == Kind::CA || to == Kind::CC));
    };
    require(ok(kind, target), "cannot view a " + kind_name(kind) + " package as " +
                                  kind_name(target));
    StructurePackage v = *this;
    v.kind = target;
    if (!kind_has_algebra(target)) v.A_algebra.reset();
    if (!kind_has_coalgebra(target)) v.A_coalgebra.reset();
    return v;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "pass" : "FAIL") << "  " << c.axiom;
        if (!c.pass) {
            os << "  witness input (";
            for (std::size_t i = 0; i < c.witness_input.size(); ++i)
                os << (i ? "," : "") << c.witness_input[i];
            os << ") output " << c.witness_output << ": lhs " << c.lhs_value << " rhs "
               << c.rhs_value;
        }
        os << "\n";
    }
    return os.str();
}

LinMap mul_map(const AlgebraData& a, char tag) {
    TensorBasis A = TensorBasis::single(tag, a.dim);
    return LinMap(A.tensor(A), A, SparseMap::from_dense(a.mul));
}
LinMap unit_map(const AlgebraData& a, char tag) {
    require(a.unit.has_value(), "algebra has no unit");
    return LinMap(TensorBasis(), TensorBasis::single(tag, a.dim), SparseMap::from_dense(*a.unit));
}
LinMap comul_map(const CoalgebraData& c, char tag) {
    TensorBasis A = TensorBasis::single(tag, c.dim);
    return LinMap(A, A.tensor(A), SparseMap::from_dense(c.comul));
}
LinMap counit_map(const CoalgebraData& c, char tag) {
    require(c.counit.has_value(), "coalgebra has no counit");
    return LinMap(TensorBasis::single(tag, c.dim), TensorBasis(), SparseMap::from_dense(*c.counit));
}
LinMap mul_map(const BialgebraData& h) { return mul_map(h.algebra(), 'H'); }
LinMap comul_map(const BialgebraData& h) { return comul_map(h.coalgebra(), 'H'); }
LinMap unit_map(const BialgebraData& h) {
    return LinMap(TensorBasis(), TensorBasis::single('H', h.dim), SparseMap::from_dense(h.unit));
}
LinMap counit_map(const BialgebraData& h) {
    return LinMap(TensorBasis::single('H', h.dim), TensorBasis(), SparseMap::from_dense(h.counit));
}
LinMap antipode_map(const BialgebraData& h) {
    require(h.antipode.has_value(), "bialgebra has no antipode");
    TensorBasis H = TensorBasis::single('H', h.dim);
    return LinMap(H, H, SparseMap::from_dense(*h.antipode));
}
LinMap action_map(const ActionData& act, Index dim_h, Index dim_a, FieldSpec field) {
    TensorBasis H = TensorBasis::single('H', dim_h), A = TensorBasis::single('A', dim_a);
    require(act.map.rows() == dim_a && act.map.cols() == dim_h * dim_a, "action matrix shape");
    require(act.map.field() == field, "action field mismatch");
    return LinMap(H.tensor(A), A, SparseMap::from_dense(act.map));
}
LinMap coaction_map(const CoactionData& co, Index dim_h, Index dim_a, FieldSpec field) {
    TensorBasis H = TensorBasis::single('H', dim_h), A = TensorBasis::single('A', dim_a);
    require(co.map.rows() == dim_h * dim_a && co.map.cols() == dim_a, "coaction matrix shape");
    require(co.map.field() == field, "coaction field mismatch");
    return LinMap(A, H.tensor(A), SparseMap::from_dense(co.map));
}

namespace {

struct Checker {
    ValidationReport rep;

    void check(const std::string& axiom, const LinMap& lhs, const LinMap& rhs) {
        require(lhs.mat.rows() == rhs.mat.rows() && lhs.mat.cols() == rhs.mat.cols(),
                "axiom check shape mismatch: " + axiom);
        AxiomCheck c;
        c.axiom = axiom;
        for (Index col = 0; col < lhs.mat.cols() && c.pass; ++col) {
            const auto& a = lhs.mat.column(col);
            const auto& b = rhs.mat.column(col);
            std::size_t i = 0, j = 0;
            Index bad_row = -1;
            Scalar la(0), rb(0);
            while (i < a.size() || j < b.size()) {
                Index ra = i < a.size() ? a[i].first : lhs.mat.rows();
                Index rbr = j < b.size() ? b[j].first : lhs.mat.rows();
                if (ra < rbr) {
                    bad_row = ra; la = a[i].second; rb = 0; break;
                }
                if (rbr < ra) {
                    bad_row = rbr; la = 0; rb = b[j].second; break;
                }
                if (cmp(a[i].second, b[j].second) != 0) {
                    bad_row = ra; la = a[i].second; rb = b[j].second; break;
                }
                ++i; ++j;
            }
            if (bad_row >= 0) {
                c.pass = false;
                c.witness_input = lhs.src.unflatten(col);
                c.witness_output = bad_row;
                c.lhs_value = Field::to_string(la);
                c.rhs_value = Field::to_string(rb);
            }
        }
        rep.checks.push_back(std::move(c));
    }

    void merge(const ValidationReport& other) {
        for (const auto& c : other.checks) rep.checks.push_back(c);
    }
};

}  // namespace

ValidationReport validate_algebra(const AlgebraData& a, const std::string& label) {
    Checker ck;
    const FieldSpec f = a.field;
    LinMap mu = mul_map(a, 'A');
    LinMap id = identity_map(f, mu.dst);
    ck.check(label + ": associativity", compose(mu, tensor(mu, id)), compose(mu, tensor(id, mu)));
    if (a.unit) {
        LinMap u = unit_map(a, 'A');
        ck.check(label + ": left unit", compose(mu, tensor(u, id)), id);
        ck.check(label + ": right unit", compose(mu, tensor(id, u)), id);
    }
    return ck.rep;
}

ValidationReport validate_coalgebra(const CoalgebraData& c, const std::string& label) {
    Checker ck;
    const FieldSpec f = c.field;
    LinMap de = comul_map(c, 'A');
    LinMap id = identity_map(f, de.src);
    ck.check(label + ": coassociativity", compose(tensor(de, id), de), compose(tensor(id, de), de));
    if (c.counit) {
        LinMap e = counit_map(c, 'A');
        ck.check(label + ": left counit", compose(tensor(e, id), de), id);
        ck.check(label + ": right counit", compose(tensor(id, e), de), id);
    }
    return ck.rep;
}

namespace {

// Core bialgebra compatibility: comul and counit are algebra morphisms.
void check_bialgebra_compat(Checker& ck, const std::string& label, const LinMap& mu,
                            const LinMap& de, const LinMap* u, const LinMap* e, FieldSpec f) {
    LinMap id = identity_map(f, mu.dst);
    LinMap tw = twist(f, mu.dst, mu.dst);
    LinMap rhs = compose(tensor(mu, mu),
                         compose(tensor(tensor(id, tw), id), tensor(de, de)));
    ck.check(label + ": comul is an algebra map", compose(de, mu), rhs);
    if (e) {
        ck.check(label + ": counit is an algebra map", compose(*e, mu), tensor(*e, *e));
        if (u) ck.check(label + ": counit of unit", compose(*e, *u),
                        identity_map(f, TensorBasis()));
    }
    if (u) ck.check(label + ": comul of unit", compose(de, *u), tensor(*u, *u));
}

}  // namespace

ValidationReport validate_bialgebra(const BialgebraData& h, const std::string& label) {
    Checker ck;
    const FieldSpec f = h.field;
    ck.merge(validate_algebra(h.algebra(), label));
    ck.merge(validate_coalgebra(h.coalgebra(), label));
    LinMap mu = mul_map(h), de = comul_map(h), u = unit_map(h), e = counit_map(h);
    check_bialgebra_compat(ck, label, mu, de, &u, &e, f);
    if (h.antipode) {
        LinMap s = antipode_map(h);
        LinMap id = identity_map(f, mu.dst);
        LinMap target = compose(u, e);
        ck.check(label + ": left antipode", compose(mu, compose(tensor(s, id), de)), target);
        ck.check(label + ": right antipode", compose(mu, compose(tensor(id, s), de)), target);
    }
    return ck.rep;
}

ValidationReport validate_bialgebra_target(const BialgebraTargetData& a) {
    Checker ck;
    require(a.algebra.dim == a.coalgebra.dim && a.algebra.field == a.coalgebra.field,
            "bialgebra target halves disagree");
    ck.merge(validate_algebra(a.algebra, "A"));
    ck.merge(validate_coalgebra(a.coalgebra, "A"));
    const FieldSpec f = a.algebra.field;
    LinMap mu = mul_map(a.algebra, 'A'), de = comul_map(a.coalgebra, 'A');
    std::optional<LinMap> u, e;
    if (a.algebra.unit) u = unit_map(a.algebra, 'A');
    if (a.coalgebra.counit) e = counit_map(a.coalgebra, 'A');
    check_bialgebra_compat(ck, "A", mu, de, u ? &*u : nullptr, e ? &*e : nullptr, f);
    return ck.rep;
}

namespace {

void check_module_axioms(Checker& ck, const BialgebraData& h, Index dim_a, const ActionData& act,
                         FieldSpec f) {
    LinMap lam = action_map(act, h.dim, dim_a, f);
    LinMap idA = identity_map(f, TensorBasis::single('A', dim_a));
    LinMap idH = identity_map(f, TensorBasis::single('H', h.dim));
    ck.check("action: multiplicativity", compose(lam, tensor(mul_map(h), idA)),
             compose(lam, tensor(idH, lam)));
    ck.check("action: unit acts as identity", compose(lam, tensor(unit_map(h), idA)), idA);
}

void check_comodule_axioms(Checker& ck, const BialgebraData& h, Index dim_a,
                           const CoactionData& co, FieldSpec f) {
    LinMap rho = coaction_map(co, h.dim, dim_a, f);
    LinMap idA = identity_map(f, TensorBasis::single('A', dim_a));
    LinMap idH = identity_map(f, TensorBasis::single('H', h.dim));
    ck.check("coaction: coassociativity", compose(tensor(idH, rho), rho),
             compose(tensor(comul_map(h), idA), rho));
    ck.check("coaction: counit collapses", compose(tensor(counit_map(h), idA), rho), idA);
}

}  // namespace

namespace {

void check_ma_compat(Checker& ck, const BialgebraData& h, const AlgebraData& a,
                     const ActionData& act) {
    const FieldSpec f = h.field;
    LinMap lam = action_map(act, h.dim, a.dim, f);
    LinMap muA = mul_map(a, 'A');
    LinMap idA = identity_map(f, muA.dst);
    LinMap idH = identity_map(f, TensorBasis::single('H', h.dim));
    LinMap tw = twist(f, idH.src, idA.src);
    // act(x)(ab) = sum act(x_(1))(a) . act(x_(2))(b)
    LinMap rhs = compose(muA, compose(tensor(lam, lam),
                                      compose(tensor(tensor(idH, tw), idA),
                                              tensor(comul_map(h), tensor(idA, idA)))));
    ck.check("module-algebra compatibility", compose(lam, tensor(idH, muA)), rhs);
}

void check_mc_compat(Checker& ck, const BialgebraData& h, const CoalgebraData& a,
                     const ActionData& act) {
    const FieldSpec f = h.field;
    LinMap lam = action_map(act, h.dim, a.dim, f);
    LinMap deA = comul_map(a, 'A');
    LinMap idA = identity_map(f, deA.src);
    LinMap idH = identity_map(f, TensorBasis::single('H', h.dim));
    LinMap tw = twist(f, idH.src, idA.src);
    LinMap rhs = compose(tensor(lam, lam),
                         compose(tensor(tensor(idH, tw), idA), tensor(comul_map(h), deA)));
    ck.check("module-coalgebra compatibility", compose(deA, lam), rhs);
}

void check_ca_compat(Checker& ck, const BialgebraData& h, const AlgebraData& a,
                     const CoactionData& co) {
    const FieldSpec f = h.field;
    LinMap rho = coaction_map(co, h.dim, a.dim, f);
    LinMap muA = mul_map(a, 'A');
    LinMap idA = identity_map(f, muA.dst);
    LinMap idH = identity_map(f, TensorBasis::single('H', h.dim));
    LinMap tw = twist(f, idA.src, idH.src);
    LinMap rhs = compose(tensor(mul_map(h), muA),
                         compose(tensor(tensor(idH, tw), idA), tensor(rho, rho)));
    ck.check("comodule-algebra compatibility", compose(rho, muA), rhs);
}

void check_cc_compat(Checker& ck, const BialgebraData& h, const CoalgebraData& a,
                     const CoactionData& co) {
    const FieldSpec f = h.field;
    LinMap rho = coaction_map(co, h.dim, a.dim, f);
    LinMap deA = comul_map(a, 'A');
    LinMap idA = identity_map(f, deA.src);
    LinMap idH = identity_map(f, TensorBasis::single('H', h.dim));
    LinMap tw = twist(f, idA.src, idH.src);
    LinMap idAA = identity_map(f, deA.src.tensor(deA.src));
    LinMap rhs = compose(tensor(mul_map(h), idAA),
                         compose(tensor(tensor(idH, tw), idA), compose(tensor(rho, rho), deA)));
    ck.check("comodule-coalgebra compatibility", compose(tensor(idH, deA), rho), rhs);
}

}  // namespace

ValidationReport validate_module_algebra(const BialgebraData& h, const AlgebraData& a,
                                         const ActionData& act) {
    Checker ck;
    require(a.field == h.field, "field mismatch between H and A");
    ck.merge(validate_algebra(a, "A"));
    check_module_axioms(ck, h, a.dim, act, h.field);
    check_ma_compat(ck, h, a, act);
    return ck.rep;
}

ValidationReport validate_module_coalgebra(const BialgebraData& h, const CoalgebraData& a,
                                           const ActionData& act) {
    Checker ck;
    require(a.field == h.field, "field mismatch between H and A");
    ck.merge(validate_coalgebra(a, "A"));
    check_module_axioms(ck, h, a.dim, act, h.field);
    check_mc_compat(ck, h, a, act);
    return ck.rep;
}

ValidationReport validate_comodule_algebra(const BialgebraData& h, const AlgebraData& a,
                                           const CoactionData& co) {
    Checker ck;
    require(a.field == h.field, "field mismatch between H and A");
    ck.merge(validate_algebra(a, "A"));
    check_comodule_axioms(ck, h, a.dim, co, h.field);
    check_ca_compat(ck, h, a, co);
    return ck.rep;
}

ValidationReport validate_comodule_coalgebra(const BialgebraData& h, const CoalgebraData& a,
                                             const CoactionData& co) {
    Checker ck;
    require(a.field == h.field, "field mismatch between H and A");
    ck.merge(validate_coalgebra(a, "A"));
    check_comodule_axioms(ck, h, a.dim, co, h.field);
    check_cc_compat(ck, h, a, co);
    return ck.rep;
}

ValidationReport validate_module_bialgebra(const BialgebraData& h, const BialgebraTargetData& a,
                                           const ActionData& act) {
    Checker ck;
    require(a.algebra.field == h.field, "field mismatch between H and A");
    ck.merge(validate_bialgebra_target(a));
    check_module_axioms(ck, h, a.algebra.dim, act, h.field);
    check_ma_compat(ck, h, a.algebra, act);
    check_mc_compat(ck, h, a.coalgebra, act);
    return ck.rep;
}

ValidationReport validate_comodule_bialgebra(const BialgebraData& h, const BialgebraTargetData& a,
                                             const CoactionData& co) {
    Checker ck;
    require(a.algebra.field == h.field, "field mismatch between H and A");
    ck.merge(validate_bialgebra_target(a));
    check_comodule_axioms(ck, h, a.algebra.dim, co, h.field);
    check_ca_compat(ck, h, a.algebra, co);
    check_cc_compat(ck, h, a.coalgebra, co);
    return ck.rep;
}

ValidationReport validate_package(const StructurePackage& pkg) {
    Checker ck;
    ck.merge(validate_bialgebra(pkg.H, "H"));
    switch (pkg.kind) {
        case Kind::MA:
            require(pkg.A_algebra && pkg.action, "MA package needs an algebra and an action");
            ck.merge(validate_module_algebra(pkg.H, *pkg.A_algebra, *pkg.action));
            break;
        case Kind::MC:
            require(pkg.A_coalgebra && pkg.action, "MC package needs a coalgebra and an action");
            ck.merge(validate_module_coalgebra(pkg.H, *pkg.A_coalgebra, *pkg.action));
            break;
        case Kind::CA:
            require(pkg.A_algebra && pkg.coaction, "CA package needs an algebra and a coaction");
            ck.merge(validate_comodule_algebra(pkg.H, *pkg.A_algebra, *pkg.coaction));
            break;
        case Kind::CC:
            require(pkg.A_coalgebra && pkg.coaction, "CC package needs a coalgebra and a coaction");
            ck.merge(validate_comodule_coalgebra(pkg.H, *pkg.A_coalgebra, *pkg.coaction));
            break;
        case Kind::MB:
            require(pkg.A_algebra && pkg.A_coalgebra && pkg.action,
                    "MB package needs a bialgebra target and an action");
            ck.merge(validate_module_bialgebra(pkg.H, {*pkg.A_algebra, *pkg.A_coalgebra},
                                               *pkg.action));
            break;
        case Kind::CB:
            require(pkg.A_algebra && pkg.A_coalgebra && pkg.coaction,
                    "CB package needs a bialgebra target and a coaction");
            ck.merge(validate_comodule_bialgebra(pkg.H, {*pkg.A_algebra, *pkg.A_coalgebra},
                                                 *pkg.coaction));
            break;
    }
    return ck.rep;
}

}  // namespace homalg
