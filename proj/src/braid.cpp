#include "homcat/braid.hpp"

namespace homcat {

namespace {

struct Sides {
    LinearMap lhs, rhs;
};

// (a⊗b)-shaped pieces of the datum used by the conditions
struct Parts {
    std::size_t a, c, h;
    const LinearMap& mA;
    const LinearMap& DA;
    const LinearMap& mC;
    const LinearMap& DC;
    const LinearMap& rho;
    const LinearMap& act;
    const Twist& tA;
    const Twist& tC;
    const Twist& tH;
};

Parts parts(const DoiHopfDatum& d) {
    if (!d.has_bialgebra_extensions()) throw StructuralError("braiding kernel needs a monoidal datum");
    return Parts{d.dim_A(),        d.dim_C(),   d.dim_H(), d.A.mult, d.A_coalgebra->comult, d.C_algebra->mult,
                 d.C.comult,       d.A_coaction, d.C_action, d.A.twist, d.C.twist,           d.H.twist()};
}

Sides cond34(const Parts& p, const LinearMap& Q) {
    Pipeline l({p.a, p.c, p.c});
    l.apply(0, 1, p.DA, {p.a, p.a}).apply(0, 1, p.rho, {p.a, p.h}).apply(2, 1, p.rho, {p.a, p.h});
    l.permute({3, 5, 1, 4, 2, 0}).apply(0, 2, p.act, {p.c}).apply(1, 2, p.act, {p.c});
    l.apply(2, p.tA.map()).apply(3, p.tA.map()).apply(0, 2, Q, {p.a, p.a}).permute({0, 2, 1, 3});
    l.apply(0, 2, p.mA, {p.a}).apply(1, 2, p.mA, {p.a});
    Pipeline r({p.a, p.c, p.c});
    r.apply(0, p.tA.pow(2)).apply(0, 1, p.DA, {p.a, p.a}).permute({0, 1, 3, 2});
    r.apply(2, p.tC.map()).apply(3, p.tC.map()).apply(2, 2, Q, {p.a, p.a}).permute({0, 2, 1, 3});
    r.apply(0, 2, p.mA, {p.a}).apply(1, 2, p.mA, {p.a});
    return {l.to_map(), r.to_map()};
}

Sides cond35(const Parts& p, const LinearMap& Q) {
    Pipeline l({p.c, p.c});
    l.apply(0, 1, p.DC, {p.c, p.c}).apply(2, 1, p.DC, {p.c, p.c}).permute({2, 0, 1, 3});
    l.apply(0, 2, Q, {p.a, p.a}).apply(2, 2, p.mC, {p.c}).apply(2, p.tC.pow(-3));
    Pipeline r({p.c, p.c});
    r.apply(0, 1, p.DC, {p.c, p.c}).apply(2, 1, p.DC, {p.c, p.c}).permute({3, 1, 2, 0});
    r.apply(0, p.tC.inverse()).apply(1, p.tC.inverse()).apply(0, 2, Q, {p.a, p.a});
    r.apply(0, 1, p.rho, {p.a, p.h}).apply(2, 1, p.rho, {p.a, p.h}).permute({0, 2, 1, 4, 3, 5});
    r.apply(2, 2, p.act, {p.c}).apply(3, 2, p.act, {p.c}).apply(2, 2, p.mC, {p.c}).apply(2, p.tC.pow(-4));
    return {l.to_map(), r.to_map()};
}

Sides cond36(const Parts& p, const LinearMap& Q) {
    Pipeline l({p.c, p.c, p.c});
    l.permute({1, 2, 0}).apply(0, p.tC.pow(-2)).apply(1, p.tC.inverse()).apply(0, 2, p.mC, {p.c});
    l.apply(1, p.tC.inverse()).apply(0, 2, Q, {p.a, p.a}).apply(0, 1, p.DA, {p.a, p.a}).apply(2, p.tA.map());
    Pipeline r({p.c, p.c, p.c});
    r.apply(0, 1, p.DC, {p.c, p.c}).permute({2, 1, 0, 3});
    r.apply(0, p.tC.pow(-2)).apply(1, p.tC.pow(-3)).apply(0, 2, Q, {p.a, p.a}).apply(2, p.tC.pow(-3));
    r.apply(0, p.tA.pow(2)).apply(1, 1, p.rho, {p.a, p.h}).apply(2, p.tH.inverse()).apply(2, 2, p.act, {p.c});
    r.permute({0, 3, 2, 1}).apply(1, 2, Q, {p.a, p.a}).apply(1, p.tA.map()).apply(2, 2, p.mA, {p.a});
    return {l.to_map(), r.to_map()};
}

Sides cond37(const Parts& p, const LinearMap& Q) {
    Pipeline l({p.c, p.c, p.c});
    l.permute({2, 0, 1}).apply(0, p.tC.inverse()).apply(1, p.tC.inverse()).apply(2, p.tC.pow(-2));
    l.apply(1, 2, p.mC, {p.c}).apply(0, 2, Q, {p.a, p.a}).apply(0, p.tA.map()).apply(1, 1, p.DA, {p.a, p.a});
    Pipeline r({p.c, p.c, p.c});
    r.apply(2, 1, p.DC, {p.c, p.c}).permute({3, 1, 2, 0});
    r.apply(0, p.tC.pow(-3)).apply(1, p.tC.pow(-2)).apply(0, 2, Q, {p.a, p.a}).apply(2, p.tC.pow(-3));
    r.apply(0, 1, p.rho, {p.a, p.h}).apply(2, p.tA.pow(2)).permute({1, 3, 4, 0, 2});
    r.apply(0, p.tH.inverse()).apply(0, 2, p.act, {p.c}).apply(0, 2, Q, {p.a, p.a}).permute({0, 2, 1, 3});
    r.apply(0, 2, p.mA, {p.a}).apply(1, p.tA.map());
    return {l.to_map(), r.to_map()};
}

Pipeline associator(const DoiHopfModule& M, const DoiHopfModule& N, const DoiHopfModule& P) {
    Pipeline p({M.dim, N.dim, P.dim});
    p.apply(0, M.twist.inverse()).apply(2, P.twist.map());
    return p;
}

Pipeline associator_inverse(const DoiHopfModule& M, const DoiHopfModule& N, const DoiHopfModule& P) {
    Pipeline p({M.dim, N.dim, P.dim});
    p.apply(0, M.twist.map()).apply(2, P.twist.inverse());
    return p;
}

// both sides of a hexagon applied to x
Sides hexagon_sides(const DoiHopfDatum& d, const BraidingKernel& K, const DoiHopfModule& U,
                    const DoiHopfModule& V, const DoiHopfModule& W, int which, const LinearMap& x) {
    std::size_t u = U.dim, v = V.dim, w = W.dim;
    if (which == 1) {
        auto VW = tensor_modules(d, V, W);
        auto l = associator(U, V, W).after(x);
        l = braiding_pipeline(d, K, U, VW).after(l);
        l = associator(V, W, U).after(l);
        Pipeline first({u * v, w});
        first.apply(0, braiding_map(d, K, U, V));
        auto r = first.after(x);
        r = associator(V, U, W).after(r);
        Pipeline last({v, u * w});
        last.apply(1, braiding_map(d, K, U, W));
        return {l, last.after(r)};
    }
    auto UV = tensor_modules(d, U, V);
    auto l = associator_inverse(U, V, W).after(x);
    l = braiding_pipeline(d, K, UV, W).after(l);
    l = associator_inverse(W, U, V).after(l);
    Pipeline first({u, v * w});
    first.apply(1, braiding_map(d, K, V, W));
    auto r = first.after(x);
    r = associator_inverse(U, W, V).after(r);
    Pipeline last({u * w, v});
    last.apply(0, braiding_map(d, K, U, W));
    return {l, last.after(r)};
}

void require_inverse(const BraidingKernel& K) {
    if (!K.r) throw StructuralError("braiding kernel has no convolution inverse");
}

LinearMap element_map(const SparseVec& v, std::size_t dim) { return LinearMap::from_columns(dim, {v}); }

}  // namespace

Tensor BraidingKernel::q_tensor(std::size_t dim_C, std::size_t dim_A) const {
    return Tensor::from_map(q, {dim_C, dim_C}, {dim_A, dim_A});
}

BraidingKernel BraidingKernel::from_tensor(const Tensor& t) {
    if (t.shape().size() != 4) throw StructuralError("kernel tensor must have four indices");
    BraidingKernel K;
    K.q = t.to_map(2);
    return K;
}

AxiomEntry check_kernel_twist(const DoiHopfDatum& d, const LinearMap& q) {
    std::size_t a = d.dim_A(), c = d.dim_C();
    if (q.rows() != a * a || q.cols() != c * c) throw StructuralError("kernel has the wrong shape");
    return compare_maps("kernel-twist", compose(q, tensor_map(d.C.twist.map(), d.C.twist.map())),
                        compose(tensor_map(d.A.twist.map(), d.A.twist.map()), q), {c, c}, {a, a});
}

LinearMap convolution(const DoiHopfDatum& d, const LinearMap& x, const LinearMap& y) {
    std::size_t a = d.dim_A(), c = d.dim_C();
    Pipeline p({c, c});
    p.apply(0, 1, d.C.comult, {c, c}).apply(2, 1, d.C.comult, {c, c}).permute({1, 3, 0, 2});
    p.apply(0, 2, x, {a, a}).apply(2, 2, y, {a, a}).permute({0, 2, 1, 3});
    p.apply(0, 2, d.A.mult, {a}).apply(1, 2, d.A.mult, {a});
    return p.to_map();
}

LinearMap convolution_unit(const DoiHopfDatum& d) {
    return compose(tensor_map(d.A.unit, d.A.unit), tensor_map(d.C.counit, d.C.counit));
}

BraidingKernel convolution_inverse(const DoiHopfDatum& d, const LinearMap& q) {
    AxiomReport pre;
    pre.add(check_kernel_twist(d, q));
    require(pre, "convolution_inverse: kernel does not commute with the twists");
    std::size_t a = d.dim_A(), c = d.dim_C(), a2 = a * a, c2 = c * c;
    const auto& D = d.C.comult;
    const auto& m = d.A.mult;

    // equation ((c,d),(o,v)), unknown ((c1,d1),(x',y')) ; Q(c2,d2)R(c1,d1)
    std::vector<std::vector<Scalar>> rows(c2 * a2, std::vector<Scalar>(c2 * a2));
    for (std::size_t ci = 0; ci < c; ++ci)
        for (std::size_t di = 0; di < c; ++di)
            for (auto& ec : D.column(ci))
                for (auto& ed : D.column(di)) {
                    std::size_t c1 = ec.index / c, cc2 = ec.index % c, d1 = ed.index / c, dd2 = ed.index % c;
                    for (auto& eq : q.column(cc2 * c + dd2)) {
                        std::size_t x = eq.index / a, y = eq.index % a;
                        Scalar base = ec.value * ed.value * eq.value;
                        for (std::size_t xp = 0; xp < a; ++xp)
                            for (std::size_t yp = 0; yp < a; ++yp)
                                for (auto& mo : m.column(x * a + xp))
                                    for (auto& mv : m.column(y * a + yp)) {
                                        std::size_t row = (ci * c + di) * a2 + mo.index * a + mv.index;
                                        std::size_t col = (c1 * c + d1) * a2 + xp * a + yp;
                                        rows[row][col] += base * mo.value * mv.value;
                                    }
                    }
                }
    auto unit = convolution_unit(d);
    std::vector<Scalar> rhs(c2 * a2);
    for (std::size_t j = 0; j < c2; ++j)
        for (auto& e : unit.column(j)) rhs[j * a2 + e.index] = e.value;
    auto coeffs = LinearMap::from_rows(rows);
    auto sol = solve_linear(coeffs, rhs);
    if (!sol) {
        std::vector<std::size_t> witness;
        for (std::size_t j = 0; j < c2 && witness.empty(); ++j) {
            std::vector<std::vector<Scalar>> sub(rows.begin() + j * a2, rows.begin() + (j + 1) * a2);
            std::vector<Scalar> sub_rhs(rhs.begin() + j * a2, rhs.begin() + (j + 1) * a2);
            if (!solve_linear(LinearMap::from_rows(sub), sub_rhs)) witness = {j / c, j % c};
        }
        throw NoInverse("kernel has no convolution inverse", witness);
    }
    LinearMap r(a2, c2);
    for (std::size_t j = 0; j < c2; ++j)
        for (std::size_t i = 0; i < a2; ++i)
            if (sgn((*sol)[j * a2 + i]) != 0) r.set(i, j, (*sol)[j * a2 + i]);
    if (!(convolution(d, q, r) == unit)) throw StructuralError("convolution_inverse: solver returned a non-solution");
    BraidingKernel K;
    K.q = q;
    K.two_sided = convolution(d, r, q) == unit;
    K.r = std::move(r);
    return K;
}

AxiomReport check_braiding_kernel(const DoiHopfDatum& d, const BraidingKernel& K) {
    require_inverse(K);
    require(check_monoidal_datum(d), "check_braiding_kernel: datum is not monoidal");
    auto p = parts(d);
    std::size_t a = p.a, c = p.c;
    AxiomReport r;
    auto s34 = cond34(p, K.q);
    r.add(compare_maps("cond-3.4", s34.lhs, s34.rhs, {a, c, c}, {a, a}));
    auto s35 = cond35(p, K.q);
    r.add(compare_maps("cond-3.5", s35.lhs, s35.rhs, {c, c}, {a, a, c}));
    auto s36 = cond36(p, K.q);
    r.add(compare_maps("cond-3.6", s36.lhs, s36.rhs, {c, c, c}, {a, a, a}));
    auto s37 = cond37(p, K.q);
    r.add(compare_maps("cond-3.7", s37.lhs, s37.rhs, {c, c, c}, {a, a, a}));
    return r;
}

AxiomReport categorical_conditions(const DoiHopfDatum& d, const BraidingKernel& K) {
    std::size_t a = d.dim_A(), c = d.dim_C();
    auto U = canonical_module(d, Canonical::AC);
    auto UU = tensor_modules(d, U, U);
    auto e = tensor_map(d.A.unit, ident(c));
    auto p = tensor_map(ident(a), d.C.counit);
    auto ee = tensor_map(e, e);
    auto pp = tensor_map(p, p);
    auto t = braiding_map(d, K, U, U);
    AxiomReport r;
    r.add(compare_maps("a-linearity", compose(pp, t, UU.action, tensor_map(ident(a), ee)),
                       compose(pp, UU.action, tensor_map(ident(a), compose(t, ee))), {a, c, c}, {a, a}));
    auto ppc = tensor_map(pp, ident(c));
    r.add(compare_maps("c-colinearity", compose(ppc, UU.coaction, t, ee),
                       compose(ppc, tensor_map(t, ident(c)), UU.coaction, ee), {c, c}, {a, a, c}));
    auto e3 = tensor_map(ee, e);
    auto p3 = tensor_map(pp, p);
    for (int which : {1, 2}) {
        auto s = hexagon_sides(d, K, U, U, U, which, e3);
        r.add(compare_maps(which == 1 ? "hexagon-1.1" : "hexagon-1.2", compose(p3, s.lhs), compose(p3, s.rhs),
                           {c, c, c}, {a, a, a}));
    }
    return r;
}

Pipeline braiding_pipeline(const DoiHopfDatum& d, const BraidingKernel& K, const DoiHopfModule& M,
                           const DoiHopfModule& N) {
    std::size_t a = d.dim_A(), c = d.dim_C(), m = M.dim, n = N.dim;
    auto c2 = d.C.twist.pow(-2);
    Pipeline p({m, n});
    p.apply(0, 1, M.coaction, {m, c}).apply(2, 1, N.coaction, {n, c});
    p.apply(0, M.twist.pow(-2)).apply(1, c2).apply(2, N.twist.pow(-2)).apply(3, c2);
    p.permute({3, 1, 2, 0}).apply(0, 2, K.q, {a, a}).permute({0, 2, 1, 3});
    p.apply(0, 2, N.action, {n}).apply(1, 2, M.action, {m});
    return p;
}

LinearMap braiding_map(const DoiHopfDatum& d, const BraidingKernel& K, const DoiHopfModule& M,
                       const DoiHopfModule& N) {
    return braiding_pipeline(d, K, M, N).to_map();
}

Braiding braiding(const DoiHopfDatum& d, const BraidingKernel& K, const DoiHopfModule& M, const DoiHopfModule& N,
                  bool with_inverse) {
    require(check_braiding_kernel(d, K), "braiding: kernel fails its conditions");
    Braiding b;
    b.t = validated_morphism(d, tensor_modules(d, M, N), tensor_modules(d, N, M), braiding_map(d, K, M, N));
    if (with_inverse) {
        b.inverse = invert(b.t.map);
        if (!b.inverse) throw StructuralError("braiding: braiding map is singular");
    }
    return b;
}

AxiomReport verify_hexagons(const DoiHopfDatum& d, const BraidingKernel& K, const DoiHopfModule& U,
                            const DoiHopfModule& V, const DoiHopfModule& W,
                            const std::vector<ModuleMorphism>& natural) {
    std::size_t u = U.dim, v = V.dim, w = W.dim;
    auto x = ident(u * v * w);
    AxiomReport r;
    auto h1 = hexagon_sides(d, K, U, V, W, 1, x);
    r.add(compare_maps("hexagon-1.1", h1.lhs, h1.rhs, {u, v, w}, {v, w, u}));
    auto h2 = hexagon_sides(d, K, U, V, W, 2, x);
    r.add(compare_maps("hexagon-1.2", h2.lhs, h2.rhs, {u, v, w}, {w, u, v}));
    for (std::size_t i = 0; i < natural.size(); ++i) {
        const auto& f = natural[i];
        std::size_t xs = f.source.dim, ys = f.target.dim;
        r.add(compare_maps("naturality-first-" + std::to_string(i),
                           compose(braiding_map(d, K, f.target, V), tensor_map(f.map, ident(v))),
                           compose(tensor_map(ident(v), f.map), braiding_map(d, K, f.source, V)), {xs, v}, {v, ys}));
        r.add(compare_maps("naturality-second-" + std::to_string(i),
                           compose(braiding_map(d, K, U, f.target), tensor_map(ident(u), f.map)),
                           compose(tensor_map(f.map, ident(u)), braiding_map(d, K, U, f.source)), {u, xs}, {ys, u}));
    }
    return r;
}

BraidingKernel yd_kernel(const HomHopfAlgebra& H) {
    auto d = yetter_drinfeld_datum(H);
    std::size_t n = H.dim();
    LinearMap q(n * n, n * n);
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t g = 0; g < n; ++g) {
            Scalar eps = H.coalgebra().counit.at(0, g);
            if (sgn(eps) == 0) continue;
            for (auto& u : H.algebra().unit.column(0)) q.set(u.index * n + h, h * n + g, eps * u.value);
        }
    return convolution_inverse(d, q);
}

SparseVec multiply_elements(const HomAlgebra& A, std::size_t factors, const SparseVec& x, const SparseVec& y) {
    std::size_t n = A.dim;
    Accumulator acc;
    std::vector<std::size_t> ix(factors), iy(factors);
    for (auto& ex : x) {
        std::size_t t = ex.index;
        for (std::size_t f = factors; f-- > 0; t /= n) ix[f] = t % n;
        for (auto& ey : y) {
            std::size_t s = ey.index;
            for (std::size_t f = factors; f-- > 0; s /= n) iy[f] = s % n;
            // expand factor by factor
            std::vector<Entry> partial{{0, ex.value * ey.value}};
            for (std::size_t f = 0; f < factors; ++f) {
                std::vector<Entry> next;
                const auto& col = A.mult.column(ix[f] * n + iy[f]);
                for (auto& p : partial)
                    for (auto& e : col) next.push_back({p.index * n + e.index, p.value * e.value});
                partial = std::move(next);
                if (partial.empty()) break;
            }
            for (auto& p : partial) acc.add(p.index, p.value);
        }
    }
    return acc.take();
}

AxiomReport quasitriangular_check(const HomBialgebra& A, const QTElement& R) {
    validate(A);
    std::size_t n = A.dim();
    if (R.r.size() != n * n) throw StructuralError("R must live in A⊗A");
    const auto& alg = A.algebra;
    const auto& D = A.coalgebra.comult;
    auto Rv = sparse_from_dense(R.r);
    auto Rc = R.column();
    auto R12 = tensor_map(Rc, alg.unit).column(0);
    auto R23 = tensor_map(alg.unit, Rc).column(0);
    auto R13 = permutation_map({n, n, n}, {0, 2, 1}).apply(R12);
    auto mul = [&](const SparseVec& x, const SparseVec& y) { return multiply_elements(alg, 3, x, y); };
    std::size_t n3 = n * n * n;

    AxiomReport r;
    auto sw = swap_map(n, n);
    std::vector<SparseVec> lhs, rhs;
    for (std::size_t h = 0; h < n; ++h) {
        lhs.push_back(multiply_elements(alg, 2, sw.apply(D.column(h)), Rv));
        rhs.push_back(multiply_elements(alg, 2, Rv, D.column(h)));
    }
    r.add(compare_maps("qt-intertwining", LinearMap::from_columns(n * n, lhs), LinearMap::from_columns(n * n, rhs),
                       {n}, {n, n}));
    r.add(compare_maps("qt-comult-first", compose(tensor_map(D, alg.twist.map()), Rc), element_map(mul(R13, R23), n3),
                       {1}, {n, n, n}));
    r.add(compare_maps("qt-comult-second", compose(tensor_map(alg.twist.map(), D), Rc),
                       element_map(mul(R13, R12), n3), {1}, {n, n, n}));
    r.add(compare_maps("hom-ybe-a", element_map(mul(mul(R12, R13), R23), n3),
                       element_map(mul(R23, mul(R13, R12)), n3), {1}, {n, n, n}));
    r.add(compare_maps("hom-ybe-b", element_map(mul(R12, mul(R13, R23)), n3),
                       element_map(mul(mul(R23, R13), R12), n3), {1}, {n, n, n}));
    return r;
}

AxiomReport coquasitriangular_check(const HomBialgebra& C, const LinearMap& sigma) {
    validate(C);
    std::size_t n = C.dim();
    if (sigma.rows() != 1 || sigma.cols() != n * n) throw StructuralError("sigma must be a form on C⊗C");
    const auto& D = C.coalgebra.comult;
    const auto& m = C.algebra.mult;
    const auto& al = C.twist().map();
    AxiomReport r;
    Pipeline l({n, n});
    l.apply(0, 1, D, {n, n}).apply(2, 1, D, {n, n}).permute({3, 1, 2, 0}).apply(0, 2, sigma, {});
    l.apply(0, 2, m, {n});
    Pipeline rr({n, n});
    rr.apply(0, 1, D, {n, n}).apply(2, 1, D, {n, n}).permute({2, 0, 1, 3}).apply(0, 2, sigma, {});
    rr.apply(0, 2, m, {n});
    r.add(compare_maps("coqt-quasi-commutative", l.to_map(), rr.to_map(), {n, n}, {n}));

    Pipeline f1({n, n, n});
    f1.apply(2, 1, D, {n, n}).apply(0, al).apply(1, al).permute({0, 2, 1, 3});
    f1.apply(0, 2, sigma, {}).apply(0, 2, sigma, {});
    r.add(compare_maps("coqt-mult-first", compose(sigma, tensor_map(m, ident(n))), f1.to_map(), {n, n, n}, {1}));
    Pipeline f2({n, n, n});
    f2.apply(0, 1, D, {n, n}).apply(2, al).apply(3, al).permute({0, 2, 1, 3});
    f2.apply(0, 2, sigma, {}).apply(0, 2, sigma, {});
    r.add(compare_maps("coqt-mult-second", compose(sigma, tensor_map(ident(n), m)), f2.to_map(), {n, n, n}, {1}));
    return r;
}

DoiHopfDatum qt_datum(const HomHopfAlgebra& A) {
    auto k = ground_field();
    DoiHopfDatum d;
    d.H = k;
    d.A = A.algebra();
    d.A_coalgebra = A.coalgebra();
    d.A_antipode = A.antipode;
    d.A_coaction = A.twist().map();
    d.C = k.coalgebra();
    d.C_algebra = k.algebra();
    d.C_antipode = k.antipode;
    d.C_action = ident(1);
    return d;
}

DoiHopfDatum coqt_datum(const HomHopfAlgebra& C) {
    auto k = ground_field();
    DoiHopfDatum d;
    d.H = k;
    d.A = k.algebra();
    d.A_coalgebra = k.coalgebra();
    d.A_antipode = k.antipode;
    d.A_coaction = ident(1);
    d.C = C.coalgebra();
    d.C_algebra = C.algebra();
    d.C_antipode = C.antipode;
    d.C_action = C.twist().map();
    return d;
}

BraidingKernel element_kernel(const DoiHopfDatum& d, const QTElement& q) {
    if (d.dim_C() != 1) throw StructuralError("element kernels live on data with C = k");
    return convolution_inverse(d, q.column());
}

QTElement associated_element(const BraidingKernel& K) {
    require_inverse(K);
    if (K.r->cols() != 1) throw StructuralError("associated_element: kernel is not an element");
    return QTElement{dense_from_sparse(K.r->column(0), K.r->rows())};
}

}  // namespace homcat
