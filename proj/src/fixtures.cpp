#include "homcat/fixtures.hpp"

namespace homcat::fixtures {

HomHopfAlgebra group_algebra(std::size_t n) {
    LinearMap mult(n, n * n), unit(n, 1), comult(n * n, n), counit(1, n), S(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) mult.set((i + j) % n, i * n + j, 1);
        comult.set(i * n + i, i, 1);
        counit.set(0, i, 1);
        S.set((n - i) % n, i, 1);
    }
    unit.set(0, 0, 1);
    Twist t = Twist::identity(n);
    return HomHopfAlgebra{HomBialgebra{HomAlgebra{n, mult, unit, t}, HomCoalgebra{n, comult, counit, t}}, S};
}

HomHopfAlgebra sweedler() {
    const std::size_t n = 4;
    enum { one = 0, g = 1, x = 2, gx = 3 };
    LinearMap mult(n, n * n), unit(n, 1), comult(n * n, n), counit(1, n), S(n, n);
    auto m = [&](int a, int b, int c, int v) { mult.set(c, a * n + b, v); };
    for (int a = 0; a < 4; ++a) {
        m(one, a, a, 1);
        if (a != one) m(a, one, a, 1);
    }
    m(g, g, one, 1);
    m(g, x, gx, 1);
    m(g, gx, x, 1);
    m(x, g, gx, -1);
    m(gx, g, x, -1);
    unit.set(one, 0, 1);
    auto d = [&](int a, int b, int c) { comult.set(b * n + c, a, 1); };
    d(one, one, one);
    d(g, g, g);
    d(x, x, one);
    d(x, g, x);
    d(gx, gx, g);
    d(gx, one, gx);
    counit.set(0, one, 1);
    counit.set(0, g, 1);
    S.set(one, one, 1);
    S.set(g, g, 1);
    S.set(gx, x, -1);
    S.set(x, gx, 1);
    Twist t = Twist::identity(n);
    return HomHopfAlgebra{HomBialgebra{HomAlgebra{n, mult, unit, t}, HomCoalgebra{n, comult, counit, t}}, S};
}

LinearMap group_power_map(std::size_t n, std::size_t k) {
    LinearMap a(n, n);
    for (std::size_t i = 0; i < n; ++i) a.set((i * k) % n, i, 1);
    return a;
}

LinearMap sweedler_scaling(const Scalar& lambda) {
    LinearMap a(4, 4);
    a.set(0, 0, 1);
    a.set(1, 1, 1);
    a.set(2, 2, lambda);
    a.set(3, 3, lambda);
    return a;
}

NamedHopf kz2() { return {"kz2", twist_by_endomorphism(group_algebra(2), LinearMap::identity(2))}; }
NamedHopf kz3() { return {"kz3_alpha", twist_by_endomorphism(group_algebra(3), group_power_map(3, 2))}; }
NamedHopf h4_alpha2() { return {"h4_alpha2", twist_by_endomorphism(sweedler(), sweedler_scaling(2))}; }

std::vector<NamedHopf> base_corpus() { return {kz2(), kz3(), h4_alpha2()}; }

}  // namespace homcat::fixtures
