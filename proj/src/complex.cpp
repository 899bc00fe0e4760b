#include "homalg/complex.hpp"

#include "homalg/combinators.hpp"
#include "homalg/elimination.hpp"
#include "homalg/hochschild.hpp"

namespace homalg {

std::string dir_name(Kind k, Dir d) {
    if (kind_is_tricomplex(k)) {
        switch (d) {
            case Dir::P: return "d_I";
            case Dir::Q: return "d_II";
            case Dir::R: return "d_III";
        }
    }
    return d == Dir::P ? "d" : "b";
}

Degree step(const Degree& d, Dir dir) {
    Degree e = d;
    if (dir == Dir::P) ++e.p;
    else if (dir == Dir::Q) ++e.q;
    else ++e.r;
    return e;
}

namespace {

// Compiled structure maps plus caches for the derived combinators.  One per
// build; every differential of the assembly is assembled from these.
struct Ctx {
    FieldSpec f;
    Index h = 0, a = 0;
    LinMap muH, deH, uH, ceH;
    std::optional<LinMap> muA, uA;   // algebra half of A
    std::optional<LinMap> deA, ceA;  // coalgebra half of A
    std::optional<LinMap> act;       // H (x) A -> A
    std::optional<LinMap> coact;     // A -> H (x) A

    std::map<int, LinMap> split_h, split_a, f_q, act_p, mu_l_a, mu_r_a, mu_l_h, mu_r_h, rho_n;
    std::map<std::pair<int, int>, LinMap> g_rp;

    TensorBasis Hq(int q) const { return TensorBasis::power('H', h, q); }
    TensorBasis Ap(int p) const { return TensorBasis::power('A', a, p); }
    LinMap idH(int q) const { return identity_map(f, Hq(q)); }
    LinMap idA(int p) const { return identity_map(f, Ap(p)); }

    const LinMap& splitH(int q) {
        auto it = split_h.find(q);
        if (it == split_h.end()) it = split_h.emplace(q, sweedler_split(deH, q)).first;
        return it->second;
    }
    const LinMap& splitA(int p) {
        require(deA.has_value(), "construction needs the comultiplication of A");
        auto it = split_a.find(p);
        if (it == split_a.end()) it = split_a.emplace(p, sweedler_split(*deA, p)).first;
        return it->second;
    }
    // F_q : H^q (x) A -> A, act after multiplying the H legs together.
    const LinMap& F(int q) {
        auto it = f_q.find(q);
        if (it == f_q.end())
            it = f_q.emplace(q, compose(*act, tensor(mul_from_power(muH, uH, q), idA(1)))).first;
        return it->second;
    }
    // G_{r,p} : H^r (x) A^p -> A, the multiplied H legs acting on the
    // multiplied A legs.
    const LinMap& G(int r, int p) {
        auto key = std::make_pair(r, p);
        auto it = g_rp.find(key);
        if (it == g_rp.end()) {
            LinMap mp = iterated_mul(*muA, uA ? &*uA : nullptr, p);
            it = g_rp.emplace(key, compose(*act, tensor(mul_from_power(muH, uH, r), mp))).first;
        }
        return it->second;
    }
    // H (x) A^n -> A^n diagonal action.
    const LinMap& actP(int n) {
        auto it = act_p.find(n);
        if (it == act_p.end()) it = act_p.emplace(n, diag_action(*act, deH, ceH, n)).first;
        return it->second;
    }
    // Diagonal multiplications: A on A^q, H on H^q, from either side.
    const LinMap& muLA(int q) {
        auto it = mu_l_a.find(q);
        if (it == mu_l_a.end()) it = mu_l_a.emplace(q, diag_action(*muA, *deA, *ceA, q)).first;
        return it->second;
    }
    const LinMap& muRA(int q) {
        auto it = mu_r_a.find(q);
        if (it == mu_r_a.end()) it = mu_r_a.emplace(q, diag_mul_right(*muA, *deA, *ceA, q)).first;
        return it->second;
    }
    const LinMap& muLH(int q) {
        auto it = mu_l_h.find(q);
        if (it == mu_l_h.end()) it = mu_l_h.emplace(q, diag_action(muH, deH, ceH, q)).first;
        return it->second;
    }
    const LinMap& muRH(int q) {
        auto it = mu_r_h.find(q);
        if (it == mu_r_h.end()) it = mu_r_h.emplace(q, diag_mul_right(muH, deH, ceH, q)).first;
        return it->second;
    }
    // rho^n : A^n -> H (x) A^n.
    const LinMap& rhoP(int n) {
        auto it = rho_n.find(n);
        if (it == rho_n.end()) it = rho_n.emplace(n, coaction_power(*coact, muH, uH, n)).first;
        return it->second;
    }
};

Ctx make_ctx(const StructurePackage& pkg) {
    Ctx c;
    c.f = pkg.field;
    c.h = pkg.dimH();
    c.a = pkg.dimA();
    c.muH = mul_map(pkg.H);
    c.deH = comul_map(pkg.H);
    c.uH = unit_map(pkg.H);
    c.ceH = counit_map(pkg.H);
    if (pkg.A_algebra) {
        c.muA = mul_map(*pkg.A_algebra, 'A');
        if (pkg.A_algebra->unit) c.uA = unit_map(*pkg.A_algebra, 'A');
    }
    if (pkg.A_coalgebra) {
        c.deA = comul_map(*pkg.A_coalgebra, 'A');
        if (pkg.A_coalgebra->counit) c.ceA = counit_map(*pkg.A_coalgebra, 'A');
    }
    if (pkg.action) c.act = action_map(*pkg.action, c.h, c.a, c.f);
    if (pkg.coaction) c.coact = coaction_map(*pkg.coaction, c.h, c.a, c.f);
    return c;
}

// One summand of a differential in operator form
//   phi |-> post o (Id_l (x) phi (x) Id_r) o pre.
// Empty post/pre (0 x 0) stand for the identity of the right size.
struct Clause {
    SparseMap post;
    Index l = 1, r = 1;
    SparseMap pre;
};

SparseMap id_post() { return SparseMap(); }
SparseMap id_pre() { return SparseMap(); }

// Sweedler-split the H^n block and route the legs into two blocks:
//   slot_front: H^n (x) A^(m+1) -> (H^n (x) A) (x) (H^n (x) A^m)
//   otherwise : H^n (x) A^(m+1) -> (H^n (x) A^m) (x) (H^n (x) A)
LinMap split_with_slot(Ctx& c, int n, int m, bool slot_front) {
    LinMap s1 = tensor(c.splitH(n), c.idA(m + 1));
    const std::size_t N = static_cast<std::size_t>(n);
    std::vector<std::size_t> perm;
    for (std::size_t k = 0; k < N; ++k) perm.push_back(k);  // first legs
    if (slot_front) {
        perm.push_back(2 * N);  // a_1
        for (std::size_t k = 0; k < N; ++k) perm.push_back(N + k);
        for (int j = 1; j <= m; ++j) perm.push_back(2 * N + static_cast<std::size_t>(j));
    } else {
        for (int j = 0; j < m; ++j) perm.push_back(2 * N + static_cast<std::size_t>(j));
        for (std::size_t k = 0; k < N; ++k) perm.push_back(N + k);
        perm.push_back(2 * N + static_cast<std::size_t>(m));
    }
    return compose(factor_permutation(c.f, s1.dst, perm), s1);
}

// Sweedler-split both blocks of H^r (x) A^p into
// (H^r (x) A^p)_(1) (x) (H^r (x) A^p)_(2).
LinMap split_both(Ctx& c, int r, int p) {
    LinMap s1 = tensor(c.splitH(r), c.splitA(p));
    const std::size_t R = static_cast<std::size_t>(r), P = static_cast<std::size_t>(p);
    std::vector<std::size_t> perm;
    for (std::size_t k = 0; k < R; ++k) perm.push_back(k);
    for (std::size_t k = 0; k < P; ++k) perm.push_back(2 * R + k);
    for (std::size_t k = 0; k < R; ++k) perm.push_back(R + k);
    for (std::size_t k = 0; k < P; ++k) perm.push_back(2 * R + P + k);
    return compose(factor_permutation(c.f, s1.dst, perm), s1);
}

// mu insertion Id^(i-1) (x) mu (x) Id^(m-i) with an H^n block in front.
SparseMap mul_insertion(Ctx& c, int n, int m, int i, const LinMap& mu) {
    const char tag = mu.dst.factor(0).tag;
    const Index dim = mu.dst.factor(0).dim;
    LinMap ins = tensor(identity_map(c.f, TensorBasis::power(tag, dim, i - 1)),
                        tensor(mu, identity_map(c.f, TensorBasis::power(tag, dim, m - i))));
    return tensor(c.idH(n), ins).mat;
}

struct Builder {
    const StructurePackage& pkg;
    Kind kind;
    BuildOptions opt;
    Ctx ctx;
    ComplexAssembly out;

    Builder(const StructurePackage& p, int cutoff, const BuildOptions& o)
        : pkg(p), kind(p.kind), opt(o), ctx(make_ctx(p)) {
        out.kind = kind;
        out.pkg = p;
        out.cutoff = cutoff;
    }

    HomShape shape_at(const Degree& d) const {
        switch (kind) {
            case Kind::MA: return {ctx.Hq(d.q).tensor(ctx.Ap(d.p)), ctx.Ap(1)};
            case Kind::MC: return {ctx.Hq(d.q).tensor(ctx.Ap(1)), ctx.Ap(d.p)};
            case Kind::CA: return {ctx.Ap(d.p), ctx.Hq(d.q).tensor(ctx.Ap(1))};
            case Kind::CC: return {ctx.Ap(1), ctx.Hq(d.q).tensor(ctx.Ap(d.p))};
            case Kind::MB: return {ctx.Hq(d.r).tensor(ctx.Ap(d.p)), ctx.Ap(d.q)};
            case Kind::CB: return {ctx.Ap(d.p), ctx.Hq(d.r).tensor(ctx.Ap(d.q))};
        }
        throw Error("unreachable");
    }

    bool degree_is_zero(const Degree& d) const {
        if (kind_is_tricomplex(kind)) return d.p == 0 || d.q == 0;
        return d.p == 0;
    }

    bool is_corner(const Degree& d) const {
        if (kind_is_tricomplex(kind)) return d.p == 1 && d.q == 1 && d.r == 0;
        return d.p == 1 && d.q == 0;
    }

    HomSpace make_space(const Degree& d) {
        HomSpace s;
        s.deg = d;
        if (degree_is_zero(d)) {
            s.corner = Corner::Zero;
            s.dim = 0;
            return s;
        }
        s.shape = shape_at(d);
        s.dim = s.shape.dim();
        require(s.dim <= opt.ceiling,
                "grid entry at " + d.to_string() + " has dimension " + std::to_string(s.dim) +
                    ", above the feasibility ceiling " + std::to_string(opt.ceiling));
        if (is_corner(d)) {
            switch (kind) {
                case Kind::MA:
                case Kind::CA:
                    s.corner = Corner::Der;
                    s.corner_basis = der_subspace(*pkg.A_algebra);
                    break;
                case Kind::MC:
                case Kind::CC:
                    s.corner = Corner::Coder;
                    s.corner_basis = coder_subspace(*pkg.A_coalgebra);
                    break;
                case Kind::MB:
                case Kind::CB:
                    s.corner = Corner::Bider;
                    s.corner_basis = bider_subspace({*pkg.A_algebra, *pkg.A_coalgebra});
                    break;
            }
            s.dim = s.corner_basis.cols();
        }
        return s;
    }

    // -- per-kind clause families ------------------------------------

    // MA d^{p,q} and MB d_I: raise p.  left/right_post give the target
    // multiplications (plain mu_A for MA, the diagonal A-actions for MB).
    std::vector<Clause> module_P_family(int p, int n_h, const SparseMap& left_post,
                                        const SparseMap& right_post) {
        Ctx& c = ctx;
        std::vector<Clause> cl;
        LinMap pre0 = compose(tensor(c.F(n_h), identity_map(c.f, c.Hq(n_h).tensor(c.Ap(p)))),
                              split_with_slot(c, n_h, p, true));
        cl.push_back({left_post, c.a, 1, pre0.mat});
        for (int i = 1; i <= p; ++i)
            cl.push_back({id_post(), 1, 1, mul_insertion(c, n_h, p, i, *c.muA)});
        LinMap pre1 = compose(tensor(identity_map(c.f, c.Hq(n_h).tensor(c.Ap(p))), c.F(n_h)),
                              split_with_slot(c, n_h, p, false));
        cl.push_back({right_post, 1, c.a, pre1.mat});
        return cl;
    }

    // MC d^{p,q}: raise p on the output side.
    std::vector<Clause> mc_P_family(int p, int q) {
        Ctx& c = ctx;
        std::vector<Clause> cl;
        // split H legs and the input a; F eats one block
        auto arranged = [&]() {
            LinMap s1 = tensor(c.splitH(q), *c.deA);
            const std::size_t N = static_cast<std::size_t>(q);
            std::vector<std::size_t> perm;
            for (std::size_t k = 0; k < N; ++k) perm.push_back(k);
            perm.push_back(2 * N);
            for (std::size_t k = 0; k < N; ++k) perm.push_back(N + k);
            perm.push_back(2 * N + 1);
            return compose(factor_permutation(c.f, s1.dst, perm), s1);
        }();
        LinMap pre0 = compose(tensor(c.F(q), identity_map(c.f, c.Hq(q).tensor(c.Ap(1)))), arranged);
        cl.push_back({id_post(), c.a, 1, pre0.mat});
        for (int i = 1; i <= p; ++i) {
            LinMap post = tensor(c.idA(i - 1), tensor(*c.deA, c.idA(p - i)));
            cl.push_back({post.mat, 1, 1, id_pre()});
        }
        LinMap pre1 = compose(tensor(identity_map(c.f, c.Hq(q).tensor(c.Ap(1))), c.F(q)), arranged);
        cl.push_back({id_post(), 1, c.a, pre1.mat});
        return cl;
    }

    // Verticals of MA/MC and MB d_III: Hochschild of H with Hom coefficients,
    // in uncurried form.  p_in is the size of the A input block, out_act the
    // diagonal action H (x) A^out -> A^out.
    std::vector<Clause> module_R_family(int p_in, int n_h, const SparseMap& out_act) {
        Ctx& c = ctx;
        std::vector<Clause> cl;
        cl.push_back({out_act, c.h, 1, id_pre()});
        for (int j = 1; j <= n_h; ++j) {
            LinMap ins = tensor(tensor(c.idH(j - 1), tensor(c.muH, c.idH(n_h - j))), c.idA(p_in));
            cl.push_back({id_post(), 1, 1, ins.mat});
        }
        cl.push_back({id_post(), 1, 1, tensor(c.idH(n_h), c.actP(p_in)).mat});
        return cl;
    }

    // Generic Hochschild clauses of A with coefficients in the bimodule M
    // (CA horizontal, CB d_I).
    std::vector<Clause> bimodule_P_family(const TensorBasis& M, const LinMap& left,
                                          const LinMap& right, int p) {
        Ctx& c = ctx;
        std::vector<Clause> cl;
        cl.push_back({left.mat, c.a, 1, id_pre()});
        for (int i = 1; i <= p; ++i)
            cl.push_back({SparseMap::identity(c.f, M.total_dim()), 1, 1,
                          mul_insertion(c, 0, p, i, *c.muA)});
        cl.push_back({right.mat, 1, c.a, id_pre()});
        return cl;
    }

    // CA horizontal bimodule (M = H^q (x) A) and CB d_I bimodule
    // (M = H^r (x) A^q).
    std::vector<Clause> comodule_hochschild_family(int p, int r, int q_out) {
        Ctx& c = ctx;
        TensorBasis Mb = c.Hq(r).tensor(c.Ap(q_out));
        LinMap idM = identity_map(c.f, Mb);
        const LinMap& mla = q_out == 1 ? *c.muA : c.muLA(q_out);
        const LinMap& mra = q_out == 1 ? *c.muA : c.muRA(q_out);
        LinMap left = compose(tensor(c.muLH(r), mla),
                              compose(tensor(tensor(c.idH(1), twist(c.f, c.Ap(1), c.Hq(r))),
                                             c.idA(q_out)),
                                      tensor(*c.coact, idM)));
        LinMap right = compose(tensor(c.muRH(r), mra),
                               compose(tensor(c.idH(r), tensor(twist(c.f, c.Ap(q_out),
                                                                     TensorBasis::single('H', c.h)),
                                                               c.idA(1))),
                                       tensor(idM, *c.coact)));
        return bimodule_P_family(Mb, left, right, p);
    }

    // CA/CC verticals: coaction and Delta_H insertions on the output block.
    std::vector<Clause> comodule_Q_family(int q, const LinMap& rho_out, const TensorBasis& out_block,
                                          int p_last) {
        Ctx& c = ctx;
        std::vector<Clause> cl;
        cl.push_back({tensor(c.idH(q), rho_out).mat, 1, 1, id_pre()});
        for (int i = 1; i <= q; ++i) {
            LinMap post = tensor(tensor(c.idH(q - i), tensor(c.deH, c.idH(i - 1))),
                                 identity_map(c.f, out_block));
            cl.push_back({post.mat, 1, 1, id_pre()});
        }
        cl.push_back({id_post(), c.h, 1, c.rhoP(p_last).mat});
        return cl;
    }

    // CC horizontal.
    std::vector<Clause> cc_P_family(int p, int q) {
        Ctx& c = ctx;
        std::vector<Clause> cl;
        {
            LinMap pre = compose(tensor(*c.coact, c.idA(1)), *c.deA);  // A -> H (x) A (x) A
            LinMap post = compose(tensor(c.muLH(q), c.idA(p + 1)),
                                  tensor(tensor(c.idH(1), twist(c.f, c.Ap(1), c.Hq(q))), c.idA(p)));
            cl.push_back({post.mat, c.h * c.a, 1, pre.mat});
        }
        for (int i = 1; i <= p; ++i) {
            LinMap post = tensor(c.idH(q), tensor(c.idA(i - 1), tensor(*c.deA, c.idA(p - i))));
            cl.push_back({post.mat, 1, 1, id_pre()});
        }
        {
            LinMap pre = compose(tensor(c.idA(1), *c.coact), *c.deA);  // A -> A (x) H (x) A
            LinMap post = compose(tensor(c.muRH(q), c.idA(p + 1)),
                                  tensor(c.idH(q), tensor(twist(c.f, c.Ap(p),
                                                                TensorBasis::single('H', c.h)),
                                                          c.idA(1))));
            cl.push_back({post.mat, 1, c.h * c.a, pre.mat});
        }
        return cl;
    }

    // MB d_II.
    std::vector<Clause> mb_Q_family(int p, int q, int r) {
        Ctx& c = ctx;
        std::vector<Clause> cl;
        LinMap arranged = split_both(c, r, p);
        {
            LinMap pre = compose(tensor(c.G(r, p), identity_map(c.f, c.Hq(r).tensor(c.Ap(p)))),
                                 arranged);
            cl.push_back({id_post(), c.a, 1, pre.mat});
        }
        for (int i = 1; i <= q; ++i) {
            LinMap post = tensor(c.idA(i - 1), tensor(*c.deA, c.idA(q - i)));
            cl.push_back({post.mat, 1, 1, id_pre()});
        }
        {
            LinMap pre = compose(tensor(identity_map(c.f, c.Hq(r).tensor(c.Ap(p))), c.G(r, p)),
                                 arranged);
            cl.push_back({id_post(), 1, c.a, pre.mat});
        }
        return cl;
    }

    // CB d_II.
    std::vector<Clause> cb_Q_family(int p, int q, int r) {
        Ctx& c = ctx;
        std::vector<Clause> cl;
        LinMap mulp = iterated_mul(*c.muA, c.uA ? &*c.uA : nullptr, p);
        {
            LinMap pre = compose(tensor(c.rhoP(p), c.idA(p)), c.splitA(p));
            LinMap post = compose(tensor(c.muLH(r), tensor(mulp, c.idA(q))),
                                  tensor(tensor(c.idH(1), twist(c.f, c.Ap(p), c.Hq(r))), c.idA(q)));
            cl.push_back({post.mat, c.h * c.Ap(p).total_dim(), 1, pre.mat});
        }
        for (int i = 1; i <= q; ++i) {
            LinMap post = tensor(c.idH(r), tensor(c.idA(i - 1), tensor(*c.deA, c.idA(q - i))));
            cl.push_back({post.mat, 1, 1, id_pre()});
        }
        {
            LinMap pre = compose(tensor(c.idA(p), c.rhoP(p)), c.splitA(p));
            LinMap post = compose(tensor(c.muRH(r), tensor(c.idA(q), mulp)),
                                  tensor(c.idH(r), tensor(twist(c.f, c.Ap(q),
                                                                TensorBasis::single('H', c.h)),
                                                          c.idA(p))));
            cl.push_back({post.mat, 1, c.h * c.Ap(p).total_dim(), pre.mat});
        }
        return cl;
    }

    // CB d_III.
    std::vector<Clause> cb_R_family(int p, int q, int r) {
        Ctx& c = ctx;
        std::vector<Clause> cl;
        cl.push_back({tensor(c.idH(r), c.rhoP(q)).mat, 1, 1, id_pre()});
        for (int i = 1; i <= r; ++i) {
            LinMap post = tensor(tensor(c.idH(r - i), tensor(c.deH, c.idH(i - 1))), c.idA(q));
            cl.push_back({post.mat, 1, 1, id_pre()});
        }
        cl.push_back({id_post(), c.h, 1, c.rhoP(p).mat});
        return cl;
    }

    std::vector<Clause> clause_family(const Degree& d, Dir dir) {
        Ctx& c = ctx;
        switch (kind) {
            case Kind::MA:
                if (dir == Dir::P) return module_P_family(d.p, d.q, c.muA->mat, c.muA->mat);
                return module_R_family(d.p, d.q, c.act->mat);
            case Kind::MC:
                if (dir == Dir::P) return mc_P_family(d.p, d.q);
                return module_R_family(1, d.q, c.actP(d.p).mat);
            case Kind::CA:
                if (dir == Dir::P) return comodule_hochschild_family(d.p, d.q, 1);
                return comodule_Q_family(d.q, *c.coact, c.Ap(1), d.p);
            case Kind::CC:
                if (dir == Dir::P) return cc_P_family(d.p, d.q);
                return comodule_Q_family(d.q, c.rhoP(d.p), c.Ap(d.p), 1);
            case Kind::MB:
                if (dir == Dir::P)
                    return module_P_family(d.p, d.r, c.muLA(d.q).mat, c.muRA(d.q).mat);
                if (dir == Dir::Q) return mb_Q_family(d.p, d.q, d.r);
                return module_R_family(d.p, d.r, c.actP(d.q).mat);
            case Kind::CB:
                if (dir == Dir::P) return comodule_hochschild_family(d.p, d.r, d.q);
                if (dir == Dir::Q) return cb_Q_family(d.p, d.q, d.r);
                return cb_R_family(d.p, d.q, d.r);
        }
        throw Error("unreachable");
    }

    int header_sign(const Degree& d, Dir dir) const {
        auto sign = [](int k) { return k % 2 == 0 ? 1 : -1; };
        if (kind_is_tricomplex(kind)) {
            if (dir == Dir::P) return sign(d.q + 1);
            if (dir == Dir::Q) return sign(d.r + 1);
            return sign(d.p + 1);
        }
        return dir == Dir::P ? 1 : sign(d.p + 1);
    }

    void build_differential(const Degree& src, Dir dir) {
        const HomSpace& s = out.grid.at(src);
        if (s.is_zero()) return;
        const Degree dst = step(src, dir);
        auto dit = out.grid.find(dst);
        if (dit == out.grid.end() || dit->second.is_zero()) return;
        const HomSpace& t = dit->second;
        HomShape from = shape_at(src);  // full shape even at the corner
        const HomShape& to = t.shape;

        std::vector<Clause> family = clause_family(src, dir);
        DifferentialMatrix dm;
        dm.src = src;
        dm.dst = dst;
        dm.dir = dir;
        dm.header_sign = header_sign(src, dir);
        std::vector<Mat> clause_mats;
        std::vector<Mat> unrestricted_mats;
        clause_mats.reserve(family.size());
        for (std::size_t i = 0; i < family.size(); ++i) {
            Clause& cl = family[i];
            SparseMap post = (cl.post.rows() == 0 && cl.post.cols() == 0)
                                 ? SparseMap::identity(ctx.f, cl.l * from.dst.total_dim() * cl.r)
                                 : std::move(cl.post);
            SparseMap pre = (cl.pre.rows() == 0 && cl.pre.cols() == 0)
                                ? SparseMap::identity(ctx.f, cl.l * from.src.total_dim() * cl.r)
                                : std::move(cl.pre);
            Mat mat = clause_operator(from, to, post, cl.l, cl.r, pre);
            if (s.corner != Corner::Full) {
                unrestricted_mats.push_back(mat);
                mat = matmul(mat, s.corner_basis);
            }
            if (opt.sign_mutation && opt.sign_mutation->deg == src &&
                opt.sign_mutation->dir == dir && opt.sign_mutation->clause == static_cast<int>(i))
                mat = neg(mat);
            clause_mats.push_back(std::move(mat));
        }
        dm.raw = alternating_sum(clause_mats);
        if (s.corner != Corner::Full) dm.unrestricted = alternating_sum(unrestricted_mats);
        if (opt.retain_clauses) dm.clauses = std::move(clause_mats);
        out.diffs.emplace(std::make_pair(src, static_cast<int>(dir)), std::move(dm));
    }

    ComplexAssembly run() {
        const int max_total = out.cutoff + 1;
        if (kind_is_tricomplex(kind)) {
            for (int p = 0; p <= max_total + 2; ++p)
                for (int q = 0; p + q <= max_total + 2; ++q)
                    for (int r = 0; p + q + r <= max_total + 2; ++r) {
                        Degree d{p, q, r};
                        int n = total_degree(kind, d);
                        if (n >= 0 && n <= max_total) out.grid.emplace(d, make_space(d));
                    }
        } else {
            for (int p = 0; p <= max_total; ++p)
                for (int q = 0; p + q <= max_total; ++q)
                    out.grid.emplace(Degree{p, q, 0}, make_space({p, q, 0}));
        }
        std::vector<Degree> sources;
        for (const auto& [d, s] : out.grid)
            if (total_degree(kind, d) <= out.cutoff) sources.push_back(d);
        for (const Degree& d : sources)
            for (Dir dir : out.directions()) build_differential(d, dir);
        return std::move(out);
    }
};

}  // namespace

ComplexAssembly build_complex(const StructurePackage& pkg, int cutoff, const BuildOptions& options) {
    require(cutoff >= 0, "cutoff must be non-negative");
    Builder b(pkg, cutoff, options);
    return b.run();
}

// ---- verification ----------------------------------------------------

VerifyReport verify_simplicial_identities(const ComplexAssembly& asm_) {
    VerifyReport rep;
    for (const auto& [key, d1] : asm_.diffs) {
        require(!d1.clauses.empty(), "clause matrices were not retained");
        // same-direction clause identities d[l] o d[k] = d[k] o d[l-1], k < l
        if (const DifferentialMatrix* d2 = asm_.diff(d1.dst, d1.dir)) {
            const auto& c1 = d1.clauses;
            const auto& c2 = d2->clauses;
            for (std::size_t l = 1; l < c2.size(); ++l)
                for (std::size_t k = 0; k < l && k < c1.size(); ++k)
                    rep.lines.push_back(
                        {dir_name(asm_.kind, d1.dir) + " clauses at " + key.first.to_string() +
                             ": [" + std::to_string(l) + "]o[" + std::to_string(k) + "] = [" +
                             std::to_string(k) + "]o[" + std::to_string(l - 1) + "]",
                         matmul(c2[l], c1[k]) == matmul(c2[k], c1[l - 1])});
        }
        // mixed clause commutations, each unordered pair once
        for (Dir other : asm_.directions()) {
            if (static_cast<int>(other) <= static_cast<int>(d1.dir)) continue;
            const DifferentialMatrix* oa = asm_.diff(d1.dst, other);
            const DifferentialMatrix* ob = asm_.diff(key.first, other);
            const DifferentialMatrix* d1b = ob ? asm_.diff(ob->dst, d1.dir) : nullptr;
            if (!oa || !ob || !d1b) continue;
            for (std::size_t i = 0; i < d1.clauses.size(); ++i)
                for (std::size_t j = 0; j < oa->clauses.size(); ++j)
                    rep.lines.push_back(
                        {dir_name(asm_.kind, other) + "[" + std::to_string(j) + "] o " +
                             dir_name(asm_.kind, d1.dir) + "[" + std::to_string(i) + "] at " +
                             key.first.to_string(),
                         matmul(oa->clauses[j], d1.clauses[i]) ==
                             matmul(d1b->clauses[i], ob->clauses[j])});
        }
    }
    return rep;
}

VerifyReport verify_squares(const ComplexAssembly& asm_) {
    VerifyReport rep;
    for (const auto& [key, d1] : asm_.diffs) {
        if (const DifferentialMatrix* d2 = asm_.diff(d1.dst, d1.dir))
            rep.lines.push_back({dir_name(asm_.kind, d1.dir) + "^2 = 0 at " + key.first.to_string(),
                                 matmul(d2->raw, d1.raw).is_zero()});
        for (Dir other : asm_.directions()) {
            if (static_cast<int>(other) <= static_cast<int>(d1.dir)) continue;
            const DifferentialMatrix* oa = asm_.diff(d1.dst, other);
            const DifferentialMatrix* ob = asm_.diff(key.first, other);
            const DifferentialMatrix* d1b = ob ? asm_.diff(ob->dst, d1.dir) : nullptr;
            if (!oa || !ob || !d1b) continue;
            Mat path_a = matmul(oa->raw, d1.raw);
            Mat path_b = matmul(d1b->raw, ob->raw);
            rep.lines.push_back({"raw " + dir_name(asm_.kind, other) + " o " +
                                     dir_name(asm_.kind, d1.dir) + " commute at " +
                                     key.first.to_string(),
                                 path_a == path_b});
            Mat sa = matmul(oa->signed_matrix(), d1.signed_matrix());
            Mat sb = matmul(d1b->signed_matrix(), ob->signed_matrix());
            rep.lines.push_back({"signed " + dir_name(asm_.kind, other) + " o " +
                                     dir_name(asm_.kind, d1.dir) + " anticommute at " +
                                     key.first.to_string(),
                                 add(sa, sb).is_zero()});
        }
    }
    return rep;
}

}  // namespace homalg
