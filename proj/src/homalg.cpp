#include "homcat/homalg.hpp"

namespace homcat {

namespace {

LinearMap id(std::size_t n) { return LinearMap::identity(n); }

void expect(const LinearMap& m, std::size_t rows, std::size_t cols, const char* what) {
    if (m.rows() != rows || m.cols() != cols)
        throw StructuralError(std::string(what) + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                              ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

LinearMap one() { return LinearMap::identity(1); }

Twist transpose_twist(const Twist& t) { return Twist(transpose(t.map()), transpose(t.inverse())); }

}  // namespace

void validate(const HomAlgebra& a) {
    std::size_t n = a.dim;
    if (n == 0) throw StructuralError("algebra of dimension 0");
    expect(a.mult, n, n * n, "multiplication");
    expect(a.unit, n, 1, "unit");
    expect(a.twist.map(), n, n, "algebra twist");
}

void validate(const HomCoalgebra& c) {
    std::size_t n = c.dim;
    if (n == 0) throw StructuralError("coalgebra of dimension 0");
    expect(c.comult, n * n, n, "comultiplication");
    expect(c.counit, 1, n, "counit");
    expect(c.twist.map(), n, n, "coalgebra twist");
}

void validate(const HomBialgebra& b) {
    validate(b.algebra);
    validate(b.coalgebra);
    if (b.algebra.dim != b.coalgebra.dim) throw StructuralError("bialgebra halves have different dimensions");
    if (!(b.algebra.twist.map() == b.coalgebra.twist.map()))
        throw StructuralError("bialgebra halves carry different twists");
}

void validate(const HomHopfAlgebra& h) {
    validate(h.bialgebra);
    expect(h.antipode, h.dim(), h.dim(), "antipode");
}

HomAlgebra make_algebra(LinearMap mult, LinearMap unit, LinearMap twist) {
    HomAlgebra a{unit.rows(), std::move(mult), std::move(unit), Twist(std::move(twist))};
    validate(a);
    return a;
}

HomCoalgebra make_coalgebra(LinearMap comult, LinearMap counit, LinearMap twist) {
    HomCoalgebra c{counit.cols(), std::move(comult), std::move(counit), Twist(std::move(twist))};
    validate(c);
    return c;
}

AxiomReport check_structure(const HomAlgebra& a) {
    validate(a);
    std::size_t n = a.dim;
    const auto& m = a.mult;
    const auto& al = a.twist.map();
    AxiomReport r;
    r.add(compare_maps("twist-multiplicative", compose(al, m), compose(m, tensor_map(al, al)), {n, n}, {n}));
    r.add(compare_maps("twist-unit", compose(al, a.unit), a.unit, {1}, {n}));
    r.add(compare_maps("unit-left", compose(m, tensor_map(a.unit, id(n))), al, {n}, {n}));
    r.add(compare_maps("unit-right", compose(m, tensor_map(id(n), a.unit)), al, {n}, {n}));
    r.add(compare_maps("hom-associativity", compose(m, tensor_map(al, m)), compose(m, tensor_map(m, al)), {n, n, n},
                       {n}));
    return r;
}

AxiomReport check_structure(const HomCoalgebra& c) {
    validate(c);
    std::size_t n = c.dim;
    const auto& d = c.comult;
    const auto& al = c.twist.map();
    AxiomReport r;
    r.add(compare_maps("counit-twist", compose(c.counit, al), c.counit, {n}, {1}));
    r.add(compare_maps("twist-comultiplicative", compose(tensor_map(al, al), d), compose(d, al), {n}, {n, n}));
    r.add(compare_maps("counit-left", compose(tensor_map(c.counit, id(n)), d), al, {n}, {n}));
    r.add(compare_maps("counit-right", compose(tensor_map(id(n), c.counit), d), al, {n}, {n}));
    r.add(compare_maps("hom-coassociativity", compose(tensor_map(d, al), d), compose(tensor_map(al, d), d), {n},
                       {n, n, n}));
    return r;
}

AxiomReport check_structure(const HomBialgebra& b) {
    validate(b);
    std::size_t n = b.dim();
    const auto& A = b.algebra;
    const auto& C = b.coalgebra;
    AxiomReport r = check_structure(A);
    r.append(check_structure(C));
    auto mid = permutation_map({n, n, n, n}, {0, 2, 1, 3});
    r.add(compare_maps("comult-multiplicative", compose(C.comult, A.mult),
                       compose(tensor_map(A.mult, A.mult), mid, tensor_map(C.comult, C.comult)), {n, n}, {n, n}));
    r.add(compare_maps("comult-unit", compose(C.comult, A.unit), tensor_map(A.unit, A.unit), {1}, {n, n}));
    r.add(compare_maps("counit-multiplicative", compose(C.counit, A.mult), tensor_map(C.counit, C.counit), {n, n},
                       {1}));
    r.add(compare_maps("counit-unit", compose(C.counit, A.unit), one(), {1}, {1}));
    return r;
}

AxiomReport check_structure(const HomHopfAlgebra& h) {
    validate(h);
    std::size_t n = h.dim();
    const auto& A = h.algebra();
    const auto& C = h.coalgebra();
    const auto& S = h.antipode;
    const auto& al = h.twist().map();
    AxiomReport r = check_structure(h.bialgebra);
    auto eu = compose(A.unit, C.counit);
    auto sw = swap_map(n, n);
    r.add(compare_maps("antipode-twist", compose(S, al), compose(al, S), {n}, {n}));
    r.add(compare_maps("antipode-left", compose(A.mult, tensor_map(S, id(n)), C.comult), eu, {n}, {n}));
    r.add(compare_maps("antipode-right", compose(A.mult, tensor_map(id(n), S), C.comult), eu, {n}, {n}));
    r.add(compare_maps("antipode-anti-multiplicative", compose(S, A.mult),
                       compose(A.mult, tensor_map(S, S), sw), {n, n}, {n}));
    r.add(compare_maps("antipode-anti-comultiplicative", compose(C.comult, S),
                       compose(tensor_map(S, S), sw, C.comult), {n}, {n, n}));
    r.add(compare_maps("antipode-counit", compose(C.counit, S), C.counit, {n}, {1}));
    return r;
}

AxiomReport check_algebra_map(const HomAlgebra& a, const HomAlgebra& b, const LinearMap& f) {
    expect(f, b.dim, a.dim, "algebra map");
    AxiomReport r;
    r.add(compare_maps("algebra-morphism-mult", compose(f, a.mult), compose(b.mult, tensor_map(f, f)),
                       {a.dim, a.dim}, {b.dim}));
    r.add(compare_maps("algebra-morphism-unit", compose(f, a.unit), b.unit, {1}, {b.dim}));
    r.add(compare_maps("algebra-morphism-twist", compose(f, a.twist.map()), compose(b.twist.map(), f), {a.dim},
                       {b.dim}));
    return r;
}

AxiomReport check_coalgebra_map(const HomCoalgebra& c, const HomCoalgebra& d, const LinearMap& f) {
    expect(f, d.dim, c.dim, "coalgebra map");
    AxiomReport r;
    r.add(compare_maps("coalgebra-morphism-comult", compose(d.comult, f), compose(tensor_map(f, f), c.comult),
                       {c.dim}, {d.dim, d.dim}));
    r.add(compare_maps("coalgebra-morphism-counit", compose(d.counit, f), c.counit, {c.dim}, {1}));
    r.add(compare_maps("coalgebra-morphism-twist", compose(f, c.twist.map()), compose(d.twist.map(), f), {c.dim},
                       {d.dim}));
    return r;
}

HomHopfAlgebra twist_by_endomorphism(const HomHopfAlgebra& classical, const LinearMap& alpha) {
    validate(classical);
    std::size_t n = classical.dim();
    if (!(classical.twist().map() == id(n)))
        throw StructuralError("twist_by_endomorphism: input twist is not the identity");
    expect(alpha, n, n, "alpha");
    const auto& A = classical.algebra();
    const auto& C = classical.coalgebra();
    AxiomReport pre;
    pre.add(compare_maps("endomorphism-multiplicative", compose(alpha, A.mult),
                         compose(A.mult, tensor_map(alpha, alpha)), {n, n}, {n}));
    pre.add(compare_maps("endomorphism-unit", compose(alpha, A.unit), A.unit, {1}, {n}));
    pre.add(compare_maps("endomorphism-comultiplicative", compose(C.comult, alpha),
                         compose(tensor_map(alpha, alpha), C.comult), {n}, {n, n}));
    pre.add(compare_maps("endomorphism-counit", compose(C.counit, alpha), C.counit, {n}, {1}));
    require(pre, "twist_by_endomorphism: alpha is not a bialgebra endomorphism");
    auto inv = invert(alpha);
    if (!inv) throw InvertibilityError("twist_by_endomorphism: alpha is singular");
    Twist t(alpha, *inv);
    HomHopfAlgebra out;
    out.bialgebra.algebra = HomAlgebra{n, compose(alpha, A.mult), A.unit, t};
    out.bialgebra.coalgebra = HomCoalgebra{n, compose(C.comult, alpha), C.counit, t};
    out.antipode = classical.antipode;
    return out;
}

HomBialgebra opposite(const HomBialgebra& b) {
    validate(b);
    HomBialgebra o = b;
    o.algebra.mult = compose(b.algebra.mult, swap_map(b.dim(), b.dim()));
    return o;
}

HomHopfAlgebra opposite_hopf(const HomHopfAlgebra& h) {
    validate(h);
    auto sinv = invert(h.antipode);
    if (!sinv) throw InvertibilityError("opposite_hopf: antipode is singular");
    return HomHopfAlgebra{opposite(h.bialgebra), *sinv};
}

HomBialgebra tensor_bialgebra(const HomBialgebra& b1, const HomBialgebra& b2) {
    validate(b1);
    validate(b2);
    std::size_t n1 = b1.dim(), n2 = b2.dim(), n = n1 * n2;
    auto mid_in = permutation_map({n1, n2, n1, n2}, {0, 2, 1, 3});
    auto mid_out = permutation_map({n1, n1, n2, n2}, {0, 2, 1, 3});
    Twist t = b1.twist().tensor(b2.twist());
    HomBialgebra out;
    out.algebra = HomAlgebra{n, compose(tensor_map(b1.algebra.mult, b2.algebra.mult), mid_in),
                             tensor_map(b1.algebra.unit, b2.algebra.unit), t};
    out.coalgebra = HomCoalgebra{n, compose(mid_out, tensor_map(b1.coalgebra.comult, b2.coalgebra.comult)),
                                 tensor_map(b1.coalgebra.counit, b2.coalgebra.counit), t};
    return out;
}

HomHopfAlgebra tensor_hopf(const HomHopfAlgebra& h1, const HomHopfAlgebra& h2) {
    return HomHopfAlgebra{tensor_bialgebra(h1.bialgebra, h2.bialgebra), tensor_map(h1.antipode, h2.antipode)};
}

HomAlgebra dual(const HomCoalgebra& c) {
    validate(c);
    return HomAlgebra{c.dim, transpose(c.comult), transpose(c.counit), transpose_twist(c.twist)};
}

HomCoalgebra dual(const HomAlgebra& a) {
    validate(a);
    return HomCoalgebra{a.dim, transpose(a.mult), transpose(a.unit), transpose_twist(a.twist)};
}

HomBialgebra dual(const HomBialgebra& b) { return HomBialgebra{dual(b.coalgebra), dual(b.algebra)}; }

HomHopfAlgebra dual(const HomHopfAlgebra& h) { return HomHopfAlgebra{dual(h.bialgebra), transpose(h.antipode)}; }

HomHopfAlgebra ground_field() {
    Twist t = Twist::identity(1);
    HomHopfAlgebra k;
    k.bialgebra.algebra = HomAlgebra{1, one(), one(), t};
    k.bialgebra.coalgebra = HomCoalgebra{1, one(), one(), t};
    k.antipode = one();
    return k;
}

}  // namespace homcat
