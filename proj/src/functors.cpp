#include "homcat/functors.hpp"

namespace homcat {

namespace {

void expect(const LinearMap& m, std::size_t rows, std::size_t cols, const std::string& what) {
    if (m.rows() != rows || m.cols() != cols)
        throw StructuralError(what + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

bool is_identity(const LinearMap& f) { return f.rows() == f.cols() && f == ident(f.rows()); }

AxiomEntry identity_entry(std::string id, const LinearMap& f) {
    return compare_maps(std::move(id), f, ident(f.rows()), {f.cols()}, {f.rows()});
}

const HomAlgebra& C_algebra_of(const DoiHopfDatum& d) {
    if (!d.C_algebra) throw StructuralError("datum has no algebra structure on C");
    return *d.C_algebra;
}

void require_morphism(const DatumMorphism& phi) { require(check_datum_morphism(phi), "datum morphism"); }

void require_module(const DoiHopfDatum& d, const DoiHopfModule& M, const std::string& what) {
    require(check_doi_hopf_module(d, M), what);
}

LinearMap eta_map(const DatumMorphism& phi, const DoiHopfModule& M, const InducedModule& FM,
                  const CoinducedModule& GFM) {
    std::size_t c = phi.source.dim_C();
    Pipeline p({M.dim});
    p.apply(0, 1, M.coaction, {M.dim, c});
    p.apply(0, compose(FM.quotient.projection, tensor_map(phi.target.A.unit, M.twist.map())));
    auto x = factor_through(GFM.inclusion, p.to_map());
    if (!x) throw StructuralError("unit of the adjunction leaves the cotensor product");
    return *x;
}

// A'⊗G(M') -> M'
LinearMap delta_on_generators(const DatumMorphism& phi, const DoiHopfModule& Mp, const CoinducedModule& G) {
    auto evaluate = compose(tensor_map(Mp.twist.pow(-3), phi.source.C.counit), G.inclusion);
    return compose(Mp.action, tensor_map(phi.target.A.twist.pow(-2), evaluate));
}

}  // namespace

AxiomReport check_datum_morphism(const DatumMorphism& phi) {
    const auto& s = phi.source;
    const auto& t = phi.target;
    expect(phi.theta, t.dim_H(), s.dim_H(), "theta");
    expect(phi.beta, t.dim_A(), s.dim_A(), "beta");
    expect(phi.gamma, t.dim_C(), s.dim_C(), "gamma");
    AxiomReport r;
    AxiomReport th = check_algebra_map(s.H.algebra(), t.H.algebra(), phi.theta);
    th.append(check_coalgebra_map(s.H.coalgebra(), t.H.coalgebra(), phi.theta));
    th.add(compare_maps("hopf-morphism-antipode", compose(phi.theta, s.H.antipode), compose(t.H.antipode, phi.theta),
                        {s.dim_H()}, {t.dim_H()}));
    r.append(th, "theta/");
    r.append(check_algebra_map(s.A, t.A, phi.beta));
    r.append(check_coalgebra_map(s.C, t.C, phi.gamma));
    r.add(compare_maps("gamma-equivariance", compose(phi.gamma, s.C_action),
                       compose(t.C_action, tensor_map(phi.theta, phi.gamma)), {s.dim_H(), s.dim_C()}, {t.dim_C()}));
    r.add(compare_maps("beta-coaction", compose(t.A_coaction, phi.beta),
                       compose(tensor_map(phi.beta, phi.theta), s.A_coaction), {s.dim_A()}, {t.dim_A(), t.dim_H()}));
    return r;
}

DatumMorphism identity_morphism(const DoiHopfDatum& d) {
    return DatumMorphism{d, d, ident(d.dim_H()), ident(d.dim_A()), ident(d.dim_C())};
}

DatumMorphism counit_morphism(const DoiHopfDatum& d) {
    auto k = ground_field();
    DoiHopfDatum t = d;
    t.C = k.coalgebra();
    t.C_algebra = k.algebra();
    t.C_antipode = k.antipode;
    t.C_action = d.H.coalgebra().counit;
    return DatumMorphism{d, std::move(t), ident(d.dim_H()), ident(d.dim_A()), d.C.counit};
}

DatumMorphism unit_morphism(const DoiHopfDatum& d) {
    auto k = ground_field();
    DoiHopfDatum s = d;
    s.A = k.algebra();
    s.A_coalgebra = k.coalgebra();
    s.A_antipode = k.antipode;
    s.A_coaction = d.H.algebra().unit;
    return DatumMorphism{std::move(s), d, ident(d.dim_H()), d.A.unit, ident(d.dim_C())};
}

InducedModule induce(const DatumMorphism& phi, const DoiHopfModule& M) {
    require_morphism(phi);
    const auto& s = phi.source;
    const auto& t = phi.target;
    require_module(s, M, "induce: module over the source datum");
    std::size_t ap = t.dim_A(), hp = t.dim_H(), c = s.dim_C(), cp = t.dim_C(), m = M.dim;
    const auto& al = M.twist.map();

    // b'β(a)⊗α_M(m) - α_{A'}(b')⊗a·m
    InducedModule F;
    F.relations = tensor_map(compose(t.A.mult, tensor_map(ident(ap), phi.beta)), al) -
                  tensor_map(t.A.twist.map(), M.action);
    std::vector<SparseVec> gens;
    for (std::size_t j = 0; j < F.relations.cols(); ++j)
        if (!F.relations.column(j).empty()) gens.push_back(F.relations.column(j));
    F.quotient = quotient_by_span(ap * m, gens);
    const auto& pr = F.quotient.projection;
    const auto& se = F.quotient.section;

    Pipeline act({ap, ap, m});
    act.apply(0, t.A.twist.map()).apply(0, 2, t.A.mult, {ap}).apply(1, al);
    Pipeline co({ap, m});
    co.apply(0, 1, t.A_coaction, {ap, hp}).apply(2, 1, M.coaction, {m, c}).apply(3, phi.gamma);
    co.permute({0, 2, 1, 3}).apply(2, 2, t.C_action, {cp}).apply(2, t.C.twist.pow(-2));
    auto act_big = act.to_map();
    auto co_big = co.to_map();
    auto tw_big = tensor_map(t.A.twist.map(), al);
    std::size_t q = F.quotient.dim();
    std::size_t nrel = F.relations.cols();

    F.well_definedness.add(compare_maps("balanced-action", compose(pr, act_big, tensor_map(ident(ap), F.relations)),
                                        LinearMap(q, ap * nrel), {ap, nrel}, {q}));
    F.well_definedness.add(compare_maps("balanced-coaction", compose(tensor_map(pr, ident(cp)), co_big, F.relations),
                                        LinearMap(q * cp, nrel), {nrel}, {q, cp}));
    F.well_definedness.add(compare_maps("balanced-twist", compose(pr, tw_big, F.relations), LinearMap(q, nrel),
                                        {nrel}, {q}));
    require(F.well_definedness, "induce: structure does not descend to the balanced tensor product");

    F.module.dim = q;
    F.module.action = compose(pr, act_big, tensor_map(ident(ap), se));
    F.module.coaction = compose(tensor_map(pr, ident(cp)), co_big, se);
    F.module.twist = Twist(compose(pr, tw_big, se));
    require_module(t, F.module, "induce: result");
    return F;
}

CoinducedModule coinduce(const DatumMorphism& phi, const DoiHopfModule& N) {
    require_morphism(phi);
    const auto& s = phi.source;
    const auto& t = phi.target;
    require_module(t, N, "coinduce: module over the target datum");
    std::size_t a = s.dim_A(), h = s.dim_H(), c = s.dim_C(), n = N.dim;
    const auto& al = N.twist.map();

    // n'⊗c ↦ n'0⊗n'1⊗α_C(c) - α_{N'}(n')⊗γ(c1)⊗c2
    Pipeline second({n, c});
    second.apply(0, al).apply(1, 1, s.C.comult, {c, c}).apply(1, phi.gamma);
    auto diff = tensor_map(N.coaction, s.C.twist.map()) - second.to_map();

    CoinducedModule G;
    G.inclusion = kernel_inclusion(diff);
    const auto& inc = G.inclusion;
    std::size_t k = inc.cols();

    Pipeline act({a, n, c});
    act.apply(0, 1, s.A_coaction, {a, h}).apply(0, phi.beta).permute({0, 2, 1, 3});
    act.apply(0, 2, N.action, {n}).apply(1, 2, s.C_action, {c});
    Pipeline co({n, c});
    co.apply(0, al).apply(1, 1, s.C.comult, {c, c}).apply(2, s.C.twist.inverse());

    auto act_x = factor_through(inc, compose(act.to_map(), tensor_map(ident(a), inc)));
    auto co_x = factor_through(tensor_map(inc, ident(c)), co.after(inc));
    auto tw_x = factor_through(inc, compose(tensor_map(al, s.C.twist.map()), inc));
    G.well_definedness.add(flag_entry("cotensor-action", act_x.has_value()));
    G.well_definedness.add(flag_entry("cotensor-coaction", co_x.has_value()));
    G.well_definedness.add(flag_entry("cotensor-twist", tw_x.has_value()));
    require(G.well_definedness, "coinduce: structure leaves the cotensor product");

    G.module.dim = k;
    G.module.action = *act_x;
    G.module.coaction = *co_x;
    G.module.twist = Twist(*tw_x);
    require_module(s, G.module, "coinduce: result");
    return G;
}

LinearMap induce_map(const InducedModule& FM, const InducedModule& FN, const LinearMap& f) {
    std::size_t ap = FM.quotient.projection.cols() / f.cols();
    return compose(FN.quotient.projection, tensor_map(ident(ap), f), FM.quotient.section);
}

LinearMap coinduce_map(const CoinducedModule& GM, const CoinducedModule& GN, const LinearMap& f) {
    std::size_t c = GM.inclusion.rows() / f.cols();
    auto x = factor_through(GN.inclusion, compose(tensor_map(f, ident(c)), GM.inclusion));
    if (!x) throw StructuralError("coinduce_map: image leaves the cotensor product");
    return *x;
}

Adjunction adjunction_maps(const DatumMorphism& phi, const DoiHopfModule& M, const DoiHopfModule& Mp) {
    auto FM = induce(phi, M);
    auto GFM = coinduce(phi, FM.module);
    auto G = coinduce(phi, Mp);
    auto FG = induce(phi, G.module);

    Adjunction adj;
    adj.eta = validated_morphism(phi.source, M, GFM.module, eta_map(phi, M, FM, GFM));
    auto d_on = delta_on_generators(phi, Mp, G);
    adj.report.add(compare_maps("delta-balanced", compose(d_on, FG.relations),
                                LinearMap(Mp.dim, FG.relations.cols()), {FG.relations.cols()}, {Mp.dim}));
    adj.delta = validated_morphism(phi.target, FG.module, Mp, compose(d_on, FG.quotient.section));

    auto GFG = coinduce(phi, FG.module);
    auto eta_G = eta_map(phi, G.module, FG, GFG);
    adj.report.add(identity_entry("triangle-coinduced", compose(coinduce_map(GFG, G, adj.delta.map), eta_G)));

    auto FGF = induce(phi, GFM.module);
    auto delta_F = compose(delta_on_generators(phi, FM.module, GFM), FGF.quotient.section);
    adj.report.add(identity_entry("triangle-induced", compose(delta_F, induce_map(FM, FGF, adj.eta.map))));
    return adj;
}

DoiHopfModule corestrict(const DatumMorphism& phi, const DoiHopfModule& M) {
    DoiHopfModule out = M;
    out.coaction = compose(tensor_map(ident(M.dim), phi.gamma), M.coaction);
    return out;
}

DoiHopfModule restrict_module(const DatumMorphism& phi, const DoiHopfModule& N) {
    DoiHopfModule out = N;
    out.action = compose(N.action, tensor_map(phi.beta, ident(N.dim)));
    return out;
}

TensorIdentity tensor_identity_coinduction(const DatumMorphism& phi, const DoiHopfModule& M,
                                           const DoiHopfModule& N) {
    const auto& s = phi.source;
    const auto& t = phi.target;
    if (!is_identity(phi.theta) || !is_identity(phi.beta))
        throw StructuralError("tensor_identity_coinduction: theta and beta must be identities");
    if (!s.C_antipode) throw StructuralError("tensor_identity_coinduction: C has no antipode");
    require(check_monoidal_datum(s), "source datum is not monoidal");
    require(check_monoidal_datum(t), "target datum is not monoidal");
    const auto& Cm = C_algebra_of(s);
    std::size_t m = M.dim, n = N.dim, c = s.dim_C();

    auto GN = coinduce(phi, N);
    auto MG = tensor_modules(s, M, GN.module);
    auto FMN = tensor_modules(t, corestrict(phi, M), N);
    auto GFMN = coinduce(phi, FMN);
    auto inc1 = tensor_map(ident(m), GN.inclusion);

    Pipeline phi_big({m, n, c});
    phi_big.apply(0, 1, M.coaction, {m, c}).permute({0, 2, 1, 3}).apply(2, 2, Cm.mult, {c});
    phi_big.apply(2, s.C.twist.pow(-2));
    Pipeline psi_big({m, n, c});
    psi_big.apply(0, 1, M.coaction, {m, c}).apply(0, M.twist.pow(-2));
    psi_big.apply(1, compose(*s.C_antipode, s.C.twist.pow(-2))).permute({0, 2, 1, 3}).apply(2, 2, Cm.mult, {c});

    auto Phi = factor_through(GFMN.inclusion, phi_big.after(inc1));
    auto Psi = factor_through(inc1, psi_big.after(GFMN.inclusion));
    TensorIdentity out;
    out.report.add(flag_entry("phi-into-cotensor", Phi.has_value()));
    out.report.add(flag_entry("psi-into-cotensor", Psi.has_value()));
    require(out.report, "tensor_identity_coinduction: map leaves the cotensor product");
    out.phi = validated_morphism(s, MG, GFMN.module, *Phi);
    out.psi = validated_morphism(s, GFMN.module, MG, *Psi);
    out.report.add(identity_entry("inverse-left", compose(*Phi, *Psi)));
    out.report.add(identity_entry("inverse-right", compose(*Psi, *Phi)));
    return out;
}

TensorIdentity tensor_identity_induction(const DatumMorphism& phi, const DoiHopfModule& M, const DoiHopfModule& N) {
    const auto& s = phi.source;
    const auto& t = phi.target;
    if (!is_identity(phi.theta) || !is_identity(phi.gamma))
        throw StructuralError("tensor_identity_induction: theta and gamma must be identities");
    if (!t.A_antipode || !t.A_coalgebra) throw StructuralError("tensor_identity_induction: A' has no antipode");
    std::size_t ap = t.dim_A(), m = M.dim, n = N.dim;
    const auto& D = t.A_coalgebra->comult;

    auto MG = tensor_modules(s, M, restrict_module(phi, N));
    auto F1 = induce(phi, MG);
    auto FM = induce(phi, M);
    auto FMN = tensor_modules(t, FM.module, N);

    Pipeline phi_big({ap, m, n});
    phi_big.apply(0, 1, D, {ap, ap}).permute({0, 2, 1, 3}).apply(2, 2, N.action, {n}).apply(2, N.twist.pow(-2));
    Pipeline psi_big({ap, m, n});
    psi_big.apply(0, 1, D, {ap, ap}).apply(0, t.A.twist.pow(-2));
    psi_big.apply(1, compose(*t.A_antipode, t.A.twist.pow(-2))).permute({0, 2, 1, 3}).apply(2, 2, N.action, {n});
    auto phi_map = phi_big.to_map();
    auto psi_map = psi_big.to_map();
    auto proj_FM = tensor_map(FM.quotient.projection, ident(n));

    TensorIdentity out;
    std::size_t r1 = F1.relations.cols(), r2 = FM.relations.cols() * n;
    out.report.add(compare_maps("phi-balanced", compose(proj_FM, phi_map, F1.relations),
                                LinearMap(FMN.dim, r1), {r1}, {FMN.dim}));
    out.report.add(compare_maps("psi-balanced",
                                compose(F1.quotient.projection, psi_map, tensor_map(FM.relations, ident(n))),
                                LinearMap(F1.module.dim, r2), {r2}, {F1.module.dim}));
    require(out.report, "tensor_identity_induction: map does not descend to the balanced tensor product");
    auto Phi = compose(proj_FM, phi_map, F1.quotient.section);
    auto Psi = compose(F1.quotient.projection, psi_map, tensor_map(FM.quotient.section, ident(n)));
    out.phi = validated_morphism(t, F1.module, FMN, Phi);
    out.psi = validated_morphism(t, FMN, F1.module, Psi);
    out.report.add(identity_entry("inverse-left", compose(Phi, Psi)));
    out.report.add(identity_entry("inverse-right", compose(Psi, Phi)));
    return out;
}

}  // namespace homcat
