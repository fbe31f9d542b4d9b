#include "homcat/doihopf.hpp"

namespace homcat {

LinearMap ident(std::size_t n) { return LinearMap::identity(n); }

namespace {

void expect(const LinearMap& m, std::size_t rows, std::size_t cols, const std::string& what) {
    if (m.rows() != rows || m.cols() != cols)
        throw StructuralError(what + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

const HomCoalgebra& need_A_coalgebra(const DoiHopfDatum& d) {
    if (!d.A_coalgebra) throw StructuralError("datum has no coalgebra structure on A");
    return *d.A_coalgebra;
}

const HomAlgebra& need_C_algebra(const DoiHopfDatum& d) {
    if (!d.C_algebra) throw StructuralError("datum has no algebra structure on C");
    return *d.C_algebra;
}

}  // namespace

HomBialgebra DoiHopfDatum::A_bialgebra() const { return HomBialgebra{A, need_A_coalgebra(*this)}; }
HomBialgebra DoiHopfDatum::C_bialgebra() const { return HomBialgebra{need_C_algebra(*this), C}; }

void validate(const DoiHopfDatum& d) {
    validate(d.H);
    validate(d.A);
    validate(d.C);
    std::size_t h = d.dim_H(), a = d.dim_A(), c = d.dim_C();
    expect(d.A_coaction, a * h, a, "A coaction");
    expect(d.C_action, c, h * c, "C action");
    if (d.A_coalgebra) validate(HomBialgebra{d.A, *d.A_coalgebra});
    if (d.C_algebra) validate(HomBialgebra{*d.C_algebra, d.C});
    if (d.A_antipode) expect(*d.A_antipode, a, a, "A antipode");
    if (d.C_antipode) expect(*d.C_antipode, c, c, "C antipode");
}

void validate(const DoiHopfDatum& d, const DoiHopfModule& M) {
    std::size_t m = M.dim;
    expect(M.action, m, d.dim_A() * m, "module action");
    expect(M.coaction, m * d.dim_C(), m, "module coaction");
    expect(M.twist.map(), m, m, "module twist");
}

AxiomReport check_module_structure(const HomAlgebra& A, const LinearMap& act, const Twist& twist) {
    std::size_t a = A.dim, m = twist.dim();
    expect(act, m, a * m, "action");
    const auto& al = twist.map();
    AxiomReport r;
    r.add(compare_maps("module-unit", compose(act, tensor_map(A.unit, ident(m))), al, {m}, {m}));
    r.add(compare_maps("twist-compatibility", compose(al, act), compose(act, tensor_map(A.twist.map(), al)), {a, m},
                       {m}));
    // α_A(a)·(b·m) = (ab)·α_M(m)
    r.add(compare_maps("module-hom-associativity", compose(act, tensor_map(A.twist.map(), act)),
                       compose(act, tensor_map(A.mult, al)), {a, a, m}, {m}));
    return r;
}

AxiomReport check_comodule_structure(const HomCoalgebra& C, const LinearMap& coact, const Twist& twist) {
    std::size_t c = C.dim, m = twist.dim();
    expect(coact, m * c, m, "coaction");
    const auto& al = twist.map();
    AxiomReport r;
    r.add(compare_maps("comodule-counit", compose(tensor_map(ident(m), C.counit), coact), al, {m}, {m}));
    r.add(compare_maps("comodule-twist-compatibility", compose(tensor_map(al, C.twist.map()), coact),
                       compose(coact, al), {m}, {m, c}));
    r.add(compare_maps("comodule-hom-coassociativity", compose(tensor_map(coact, C.twist.map()), coact),
                       compose(tensor_map(al, C.comult), coact), {m}, {m, c, c}));
    return r;
}

AxiomReport check_datum(const DoiHopfDatum& d) {
    validate(d);
    std::size_t h = d.dim_H(), a = d.dim_A(), c = d.dim_C();
    AxiomReport r;
    r.append(check_structure(d.H), "H/");
    r.append(check_structure(d.A), "A/");
    r.append(check_structure(d.C), "C/");
    r.append(check_comodule_structure(d.H.coalgebra(), d.A_coaction, d.A.twist));
    r.append(check_module_structure(d.H.algebra(), d.C_action, d.C.twist));
    const auto& rho = d.A_coaction;
    Pipeline rhs_mult({a, a});
    rhs_mult.apply(0, 1, rho, {a, h}).apply(2, 1, rho, {a, h}).permute({0, 2, 1, 3});
    rhs_mult.apply(0, 2, d.A.mult, {a}).apply(1, 2, d.H.algebra().mult, {h});
    r.add(compare_maps("comodule-algebra-mult", compose(rho, d.A.mult), rhs_mult.to_map(), {a, a}, {a, h}));
    r.add(compare_maps("comodule-algebra-unit", compose(rho, d.A.unit), tensor_map(d.A.unit, d.H.algebra().unit),
                       {1}, {a, h}));
    const auto& act = d.C_action;
    Pipeline rhs_co({h, c});
    rhs_co.apply(0, 1, d.H.coalgebra().comult, {h, h}).apply(2, 1, d.C.comult, {c, c}).permute({0, 2, 1, 3});
    rhs_co.apply(0, 2, act, {c}).apply(1, 2, act, {c});
    r.add(compare_maps("module-coalgebra-comult", compose(d.C.comult, act), rhs_co.to_map(), {h, c}, {c, c}));
    r.add(compare_maps("module-coalgebra-counit", compose(d.C.counit, act),
                       tensor_map(d.H.coalgebra().counit, d.C.counit), {h, c}, {1}));
    return r;
}

AxiomReport check_doi_hopf_module(const DoiHopfDatum& d, const DoiHopfModule& M) {
    validate(d, M);
    std::size_t a = d.dim_A(), c = d.dim_C(), h = d.dim_H(), m = M.dim;
    AxiomReport r = check_module_structure(d.A, M.action, M.twist);
    r.append(check_comodule_structure(d.C, M.coaction, M.twist));
    Pipeline rhs({a, m});
    rhs.apply(0, 1, d.A_coaction, {a, h}).apply(2, 1, M.coaction, {m, c}).permute({0, 2, 1, 3});
    rhs.apply(0, 2, M.action, {m}).apply(1, 2, d.C_action, {c});
    r.add(compare_maps("doi-hopf-compatibility", compose(M.coaction, M.action), rhs.to_map(), {a, m}, {m, c}));
    return r;
}

AxiomReport check_monoidal_datum(const DoiHopfDatum& d) {
    validate(d);
    const auto& Ac = need_A_coalgebra(d);
    const auto& Ca = need_C_algebra(d);
    std::size_t h = d.dim_H(), a = d.dim_A(), c = d.dim_C();
    AxiomReport r;
    r.append(check_structure(d.A_bialgebra()), "A/");
    r.append(check_structure(d.C_bialgebra()), "C/");
    Pipeline lhs({a, c, c});
    lhs.apply(0, 1, d.A_coaction, {a, h}).apply(2, 2, Ca.mult, {c}).apply(1, d.H.twist().pow(2));
    lhs.apply(1, 2, d.C_action, {c}).apply(0, 1, Ac.comult, {a, a});
    Pipeline rhs({a, c, c});
    rhs.apply(0, 1, Ac.comult, {a, a}).apply(0, 1, d.A_coaction, {a, h}).apply(2, 1, d.A_coaction, {a, h});
    rhs.permute({0, 2, 1, 4, 3, 5}).apply(2, 2, d.C_action, {c}).apply(3, 2, d.C_action, {c});
    rhs.apply(2, 2, Ca.mult, {c});
    r.add(compare_maps("monoidal-2.1", lhs.to_map(), rhs.to_map(), {a, c, c}, {a, a, c}));
    Pipeline rhs2({a});
    rhs2.apply(0, 1, d.A_coaction, {a, h}).apply(0, 1, Ac.counit, {}).then(
        compose(d.C_action, tensor_map(ident(h), Ca.unit)), {c});
    r.add(compare_maps("monoidal-2.2", compose(Ca.unit, Ac.counit), rhs2.to_map(), {a}, {c}));
    return r;
}

AxiomReport check_module_morphism(const DoiHopfDatum& d, const ModuleMorphism& f) {
    std::size_t a = d.dim_A(), c = d.dim_C(), m = f.source.dim, n = f.target.dim;
    expect(f.map, n, m, "module morphism");
    AxiomReport r;
    r.add(compare_maps("morphism-twist", compose(f.map, f.source.twist.map()), compose(f.target.twist.map(), f.map),
                       {m}, {n}));
    r.add(compare_maps("morphism-A-linear", compose(f.map, f.source.action),
                       compose(f.target.action, tensor_map(ident(a), f.map)), {a, m}, {n}));
    r.add(compare_maps("morphism-C-colinear", compose(f.target.coaction, f.map),
                       compose(tensor_map(f.map, ident(c)), f.source.coaction), {m}, {n, c}));
    return r;
}

ModuleMorphism validated_morphism(const DoiHopfDatum& d, DoiHopfModule source, DoiHopfModule target, LinearMap map) {
    ModuleMorphism f{std::move(source), std::move(target), std::move(map)};
    require(check_module_morphism(d, f), "module morphism validation");
    return f;
}

DoiHopfModule unit_module(const DoiHopfDatum& d) {
    DoiHopfModule k;
    k.dim = 1;
    k.action = need_A_coalgebra(d).counit;
    k.coaction = need_C_algebra(d).unit;
    k.twist = Twist::identity(1);
    return k;
}

DoiHopfModule tensor_modules(const DoiHopfDatum& d, const DoiHopfModule& M, const DoiHopfModule& N) {
    const auto& Ac = need_A_coalgebra(d);
    const auto& Ca = need_C_algebra(d);
    validate(d, M);
    validate(d, N);
    std::size_t a = d.dim_A(), c = d.dim_C(), m = M.dim, n = N.dim;
    Pipeline act({a, m, n});
    act.apply(0, 1, Ac.comult, {a, a}).permute({0, 2, 1, 3}).apply(0, 2, M.action, {m}).apply(1, 2, N.action, {n});
    Pipeline co({m, n});
    co.apply(0, 1, M.coaction, {m, c}).apply(2, 1, N.coaction, {n, c}).permute({0, 2, 1, 3});
    co.apply(2, 2, Ca.mult, {c}).apply(2, d.C.twist.pow(-2));
    DoiHopfModule out;
    out.dim = m * n;
    out.action = act.to_map();
    out.coaction = co.to_map();
    out.twist = M.twist.tensor(N.twist);
    return out;
}

ModuleMorphism tensor_morphisms(const DoiHopfDatum& d, const ModuleMorphism& f, const ModuleMorphism& g) {
    return validated_morphism(d, tensor_modules(d, f.source, g.source), tensor_modules(d, f.target, g.target),
                              tensor_map(f.map, g.map));
}

LinearMap associator_map(const DoiHopfModule& M, const DoiHopfModule& N, const DoiHopfModule& P) {
    return tensor_map(tensor_map(M.twist.inverse(), ident(N.dim)), P.twist.map());
}

LinearMap associator_inverse_map(const DoiHopfModule& M, const DoiHopfModule& N, const DoiHopfModule& P) {
    return tensor_map(tensor_map(M.twist.map(), ident(N.dim)), P.twist.inverse());
}

StructureMaps structure_maps(const DoiHopfDatum& d, const DoiHopfModule& M, const DoiHopfModule& N,
                             const DoiHopfModule& P) {
    auto k = unit_module(d);
    StructureMaps s;
    s.associator = validated_morphism(d, tensor_modules(d, tensor_modules(d, M, N), P),
                                      tensor_modules(d, M, tensor_modules(d, N, P)), associator_map(M, N, P));
    s.associator_inverse = associator_inverse_map(M, N, P);
    s.left_unitor = validated_morphism(d, tensor_modules(d, k, M), M, M.twist.inverse());
    s.right_unitor = validated_morphism(d, tensor_modules(d, M, k), M, M.twist.inverse());
    s.left_unitor_inverse = M.twist.map();
    s.right_unitor_inverse = M.twist.map();
    return s;
}

AxiomEntry check_pentagon(const DoiHopfModule& M, const DoiHopfModule& N, const DoiHopfModule& P,
                          const DoiHopfModule& Q) {
    auto tw = [](const DoiHopfModule& X, const DoiHopfModule& Y) {
        DoiHopfModule t;
        t.dim = X.dim * Y.dim;
        t.twist = X.twist.tensor(Y.twist);
        return t;
    };
    auto MN = tw(M, N), PQ = tw(P, Q), NP = tw(N, P);
    auto lhs = compose(associator_map(M, N, PQ), associator_map(MN, P, Q));
    auto rhs = compose(tensor_map(ident(M.dim), associator_map(N, P, Q)), associator_map(M, NP, Q),
                       tensor_map(associator_map(M, N, P), ident(Q.dim)));
    return compare_maps("pentagon", lhs, rhs, {M.dim, N.dim, P.dim, Q.dim}, {M.dim, N.dim, P.dim, Q.dim});
}

AxiomEntry check_triangle(const DoiHopfModule& M, const DoiHopfModule& N) {
    DoiHopfModule k;
    k.dim = 1;
    k.twist = Twist::identity(1);
    auto lhs = compose(tensor_map(ident(M.dim), N.twist.inverse()), associator_map(M, k, N));
    auto rhs = tensor_map(M.twist.inverse(), ident(N.dim));
    return compare_maps("triangle", lhs, rhs, {M.dim, N.dim}, {M.dim, N.dim});
}

DoiHopfModule canonical_module(const DoiHopfDatum& d, Canonical which) {
    std::size_t a = d.dim_A(), c = d.dim_C(), h = d.dim_H();
    DoiHopfModule M;
    switch (which) {
        case Canonical::C: {
            const auto& Ac = need_A_coalgebra(d);
            M.dim = c;
            Pipeline act({a, c});
            act.apply(0, 1, d.A_coaction, {a, h}).apply(0, 1, Ac.counit, {}).apply(0, 2, d.C_action, {c});
            M.action = act.to_map();
            M.coaction = compose(tensor_map(ident(c), d.C.twist.inverse()), d.C.comult);
            M.twist = d.C.twist;
            break;
        }
        case Canonical::A: {
            const auto& Ca = need_C_algebra(d);
            M.dim = a;
            M.action = compose(d.A.mult, tensor_map(d.A.twist.inverse(), ident(a)));
            Pipeline co({a});
            co.apply(0, 1, d.A_coaction, {a, h}).apply(1, 1, compose(d.C_action, tensor_map(ident(h), Ca.unit)), {c});
            M.coaction = co.to_map();
            M.twist = d.A.twist;
            break;
        }
        case Canonical::AC: {
            M.dim = a * c;
            Pipeline act({a, a, c});
            act.apply(0, d.A.twist.map()).apply(0, 2, d.A.mult, {a}).apply(1, d.C.twist.map());
            M.action = act.to_map();
            Pipeline co({a, c});
            co.apply(0, 1, d.A_coaction, {a, h}).apply(2, 1, d.C.comult, {c, c}).permute({0, 2, 1, 3});
            co.apply(2, 2, d.C_action, {c}).apply(2, d.C.twist.pow(-2));
            M.coaction = co.to_map();
            M.twist = d.A.twist.tensor(d.C.twist);
            break;
        }
    }
    return M;
}

DoiHopfDatum yetter_drinfeld_datum(const HomHopfAlgebra& H) {
    validate(H);
    auto sinv = invert(H.antipode);
    if (!sinv) throw InvertibilityError("yetter_drinfeld_datum: antipode is singular");
    std::size_t n = H.dim();
    const auto& tw = H.twist();
    DoiHopfDatum d;
    d.H = tensor_hopf(opposite_hopf(H), H);
    d.A = H.algebra();
    d.A_coalgebra = H.coalgebra();
    d.A_antipode = H.antipode;
    d.C = H.coalgebra();
    d.C_algebra = opposite(H.bialgebra).algebra;
    d.C_antipode = *sinv;
    const auto& D = H.coalgebra().comult;
    Pipeline rho({n});
    rho.apply(0, 1, D, {n, n}).apply(0, 1, D, {n, n}).permute({1, 0, 2});
    rho.apply(0, tw.inverse()).apply(1, compose(*sinv, tw.pow(-2))).apply(2, tw.inverse());
    d.A_coaction = rho.to_map();
    Pipeline act({n, n, n});
    act.apply(2, tw.inverse()).apply(1, 2, H.algebra().mult, {n}).permute({1, 0}).apply(1, tw.map());
    act.apply(0, 2, H.algebra().mult, {n});
    d.C_action = act.to_map();
    return d;
}

AxiomReport check_yd_module(const HomHopfAlgebra& H, const DoiHopfModule& M) {
    validate(H);
    std::size_t n = H.dim(), m = M.dim;
    expect(M.action, m, n * m, "YD action");
    expect(M.coaction, m * n, m, "YD coaction");
    auto sinv = invert(H.antipode);
    if (!sinv) throw InvertibilityError("check_yd_module: antipode is singular");
    const auto& tw = H.twist();
    const auto& mu = H.algebra().mult;
    AxiomReport r = check_module_structure(H.algebra(), M.action, M.twist);
    r.append(check_comodule_structure(H.coalgebra(), M.coaction, M.twist));
    Pipeline rhs({n, m});
    rhs.apply(0, 1, H.coalgebra().comult, {n, n}).apply(1, 1, H.coalgebra().comult, {n, n});
    rhs.apply(3, 1, M.coaction, {m, n}).apply(1, tw.inverse());
    rhs.permute({1, 3, 2, 4, 0}).apply(0, 2, M.action, {m});
    rhs.apply(1, tw.pow(-2)).apply(2, tw.inverse()).apply(1, 2, mu, {n});
    rhs.apply(2, *sinv).apply(1, 2, mu, {n});
    r.add(compare_maps("yd-compatibility", compose(M.coaction, M.action), rhs.to_map(), {n, m}, {m, n}));
    return r;
}

}  // namespace homcat
